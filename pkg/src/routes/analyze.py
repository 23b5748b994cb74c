import click

from src.config.config import config
from src.models.enums import OutputFormat
from src.services.options import ToolErrors, catalog_options, resolve_algebra
from src.services.report import AnalysisOptions, analyze, render_machine, render_text

FORMATS = [f.value for f in OutputFormat]


@click.command("analyze")
@click.argument("target")
@catalog_options
@click.option("--max-casimir-degree", "max_casimir_degree", type=click.IntRange(min=1),
              default=lambda: config.MAX_CASIMIR_DEGREE, show_default="4")
@click.option("--seed", type=int, default=lambda: config.SEED, show_default="0")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default=OutputFormat.text.value)
@ToolErrors("analysis")
def router(target: str, n, theta, theta_irrational, c, matrix_path, max_casimir_degree: int, seed: int,
           output_format: str):
    """
    Full analysis of an algebra file or of catalog:<name>.

    :param target: File path or catalog:<name>.
    :type target: str
    :param max_casimir_degree: Casimir degree bound.
    :type max_casimir_degree: int
    :param seed: Seed of the randomized rank sampling.
    :type seed: int
    :param output_format: text or machine.
    :type output_format: str
    :return: None
    """
    g, params = resolve_algebra(target, n, theta, theta_irrational, c, matrix_path)
    report = analyze(g, AnalysisOptions(max_casimir_degree=max_casimir_degree, seed=seed, params=params))
    if OutputFormat(output_format) == OutputFormat.machine:
        click.echo(render_machine(report), nl=False)
    else:
        click.echo(render_text(report), nl=False)
