"""Exceptions carrying the djctl exit-code contract.

0 ok, 2 usage, 3 I/O, 4 engine disagreement, 5 size cap. Usage errors are
plain `click.UsageError`/`click.BadParameter`, which already exit with 2.
"""

import click


class FileAccessError(click.ClickException):
    exit_code = 3


class EngineDisagreementError(click.ClickException):
    exit_code = 4


class RenderCapError(click.ClickException):
    exit_code = 5
