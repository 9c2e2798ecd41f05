import logging
from pathlib import Path

import click

from .classify import classify as classify_cmd
from .config import config as config_cmd
from .count import count as count_cmd
from .figure import emit_figure as emit_figure_cmd
from .internal.config import load_config
from .sample import sample as sample_cmd
from .spectrum import spectrum as spectrum_cmd


@click.group(
    context_settings={"help_option_names": ["-h", "--help"]},
    invoke_without_command=True,
)
@click.version_option(prog_name="djctl")
@click.option(
    "-c",
    "--config",
    type=Path,
    default=None,
    help="Path to djctl config file",
)
@click.option(
    "-p",
    "--profile",
    type=str,
    default=None,
    help="Configuration profile to use",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Level of the dj_decider logger",
)
@click.pass_context
def djctl(
    ctx: click.Context,
    config: Path,
    profile: str,
    log_level: str | None,
) -> None:
    """Build Deutsch-Jozsa oracles, compute their spectra and classify them."""
    if log_level is not None:
        logging.getLogger("dj_decider").setLevel(log_level.upper())

    config_obj = load_config(config)
    profile = profile or config_obj.current_profile
    if profile not in config_obj.profiles:
        raise click.ClickException(f"Profile {profile} does not exist.")

    ctx.obj = config_obj.profiles[profile]
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())  # show the help if no subcommand was provided


djctl.add_command(classify_cmd)
djctl.add_command(config_cmd)
djctl.add_command(count_cmd)
djctl.add_command(emit_figure_cmd)
djctl.add_command(sample_cmd)
djctl.add_command(spectrum_cmd)
