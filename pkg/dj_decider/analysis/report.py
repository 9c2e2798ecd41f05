from dj_decider.simulator.export import format_number
from dj_decider.types.analysis import Classification


def render_report(classification: Classification) -> str:
    """Text report: verdict, ones count, then one line per bright spectral line."""
    rows = [
        f"verdict={classification.label}",
        f"ones_count={classification.ones_count}",
    ]
    for line in classification.lines:
        rows.append(f"line z={line.z} p={format_number(line.probability)}")
    return "\n".join(rows) + "\n"
