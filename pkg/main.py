import logging

import click

from src.config.config import config
from src.routes import analyze, casimir, catalog, spectral, validate


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--log-level", "log_level", type=click.Choice(list(logging.getLevelNamesMapping()), case_sensitive=False),
              default=None, help="Override LOG_LEVEL from the settings.")
def cli(log_level: str | None):
    """
    Exact analysis of Lie algebras given by rational structure constants.

    :param log_level: Logging level name.
    :type log_level: str | None
    :return: None
    """
    logging.basicConfig(
        level=(log_level or config.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


cli.add_command(validate.router)
cli.add_command(catalog.router)
cli.add_command(analyze.router)
cli.add_command(casimir.router)
cli.add_command(spectral.router)


if __name__ == "__main__":
    cli()
