import click

from dj_decider.analysis import classify as classify_table
from dj_decider.analysis import render_report
from dj_decider.types import OracleSpec

from .options import load_oracle, oracle_options


@click.command()
@oracle_options
def classify(oracle: OracleSpec) -> None:
    """Check an oracle against the constant/balanced promise."""
    table = load_oracle(oracle)
    click.echo(render_report(classify_table(table)), nl=False)
