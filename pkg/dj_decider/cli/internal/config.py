from pathlib import Path
from typing import cast

import yaml
from pydantic import BaseModel, Field, field_validator
from typing_extensions import Self

from dj_decider.simulator.base import EngineKind

from .utils import DEFAULT_PROFILE_NAME, _default_config_path

ALL_ENGINES = "all"


class ConfigProfile(BaseModel):
    """Defaults applied to djctl commands when the matching flag is omitted."""

    engine: str = EngineKind.fwht.value
    shots: int = Field(default=1000, ge=1)
    seed: int = Field(default=0, ge=0)
    output_dir: str = "."

    @field_validator("engine")
    @classmethod
    def check_engine(cls, value: str) -> str:
        value = value.strip().lower()
        if value != ALL_ENGINES:
            EngineKind(value)
        return value


class Config(BaseModel):
    """The djctl configuration file: named profiles and the active one."""

    current_profile: str
    profiles: dict[str, ConfigProfile]
    path: Path = Field(default_factory=_default_config_path)

    @classmethod
    def from_path(cls, config_file_path: Path) -> Self:
        """Get a Config instance from a configuration file."""
        with open(config_file_path) as f:
            config_dict = yaml.safe_load(f.read())

        config_dict["path"] = config_file_path
        return cls(**config_dict)

    def write(self) -> None:
        with open(cast(Path, self.path), "w") as f:
            config_data = self.model_dump(mode="json", exclude={"path"})
            yaml.safe_dump(config_data, f)


def load_config(path: Path | None = None) -> Config:
    if path is None:
        path = _default_config_path()
        if not path.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
            config = Config(
                current_profile=DEFAULT_PROFILE_NAME,
                profiles={DEFAULT_PROFILE_NAME: ConfigProfile()},
            )
            config.write()
            return config

    return Config.from_path(path)
