from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class DeciderSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="DJ_DECIDER_")

    log_level: str = Field(
        default="INFO",
        description="Level of the `dj_decider` logger",
    )
    tolerance: float = Field(
        default=1e-12,
        description="Entrywise tolerance used by engine cross-checks, normalization and the answer-qubit check",
    )
    dark_line_eps: float = Field(
        default=1e-9,
        description="Amplitudes with magnitude below this value are reported as dark lines",
    )
    monochromatic_eps: float = Field(
        default=1e-9,
        description="Maximum distance of |psi(z)| from 1 for a line to be considered monochromatic",
    )
    max_render_digits: int = Field(
        default=1_048_576,
        description="Largest decimal rendering allowed for the balanced-language count",
    )

    # Engine bounds
    direct_max_width: int = Field(
        default=14,
        description="Largest width accepted by the direct O(4^n) engine",
    )
    fwht_max_width: int = Field(
        default=24,
        description="Largest width accepted by the fast Walsh-Hadamard engine",
    )
    statevector_max_width: int = Field(
        default=12,
        description="Largest query-bus width accepted by the statevector engine",
    )
    chunk_elements: int = Field(
        default=1 << 20,
        description="Number of (z, x) character entries the direct engine materializes at once",
    )


settings = DeciderSettings()
