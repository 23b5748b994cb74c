import json

import click

from src.models.enums import OutputFormat
from src.models.params import ThetaTag
from src.repository import documents as repository_documents
from src.services.options import ToolErrors
from src.services.report import render_spectral_text
from src.services.spectral import require_template, spectral_report


@click.command("spectral")
@click.option("--matrix", "matrix_path", required=True, help="JSON matrix file for A.")
@click.option("--theta-irrational", "theta_irrational", default=None,
              help="Treat A = diag(J, x J) as diag(J, theta J) with this irrational theta.")
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.text.value)
@ToolErrors("spectral analysis")
def router(matrix_path: str, theta_irrational: str | None, output_format: str):
    """
    Characteristic polynomial, S_A and the type I obstruction of a square matrix.

    :param matrix_path: The matrix file.
    :type matrix_path: str
    :param theta_irrational: Name of an irrational theta for the template.
    :type theta_irrational: str | None
    :param output_format: text or machine.
    :type output_format: str
    :return: None
    """
    A = repository_documents.load_matrix(matrix_path)
    tag = ThetaTag.symbolic_irrational(theta_irrational) if theta_irrational is not None else None
    require_template(A, tag)
    report = spectral_report(A, tag)
    if OutputFormat(output_format) == OutputFormat.machine:
        click.echo(json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True))
    else:
        click.echo("\n".join(render_spectral_text(report)))
