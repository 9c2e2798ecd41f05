import click

from dj_decider.analysis import (
    BalancedCountTooLarge,
    count_balanced,
    count_monochromatic,
    render_count,
)
from dj_decider.analysis.counting import MAX_COUNT_WIDTH

from .errors import RenderCapError


@click.command()
@click.option(
    "--n",
    "n",
    required=True,
    type=click.IntRange(1, MAX_COUNT_WIDTH),
    help="Width of the query bus",
)
def count(n: int) -> None:
    """Count the balanced and the monochromatic languages at width n."""
    try:
        balanced = count_balanced(n)
    except BalancedCountTooLarge as e:
        raise RenderCapError(str(e))

    click.echo(f"balanced={render_count(balanced)}")
    click.echo(f"monochromatic={count_monochromatic(n)}")
