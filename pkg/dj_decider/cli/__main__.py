import sys

from dj_decider.cli import djctl


def main() -> None:
    """CLI entrypoint."""
    sys.exit(djctl())


if __name__ == "__main__":  # pragma: no cover
    main()
