import json

import click

from src.config.config import config
from src.models.enums import OutputFormat
from src.services.casimir import polynomial_casimirs
from src.services.options import ToolErrors, catalog_options, resolve_algebra
from src.services.polynomials import poly_to_text, sorted_terms
from src.services.rationals import format_rational


@click.command("casimir")
@click.argument("target")
@catalog_options
@click.option("--degree", type=click.IntRange(min=1), default=lambda: config.MAX_CASIMIR_DEGREE, show_default="4")
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.text.value)
@ToolErrors("casimir")
def router(target: str, n, theta, theta_irrational, c, matrix_path, degree: int, output_format: str):
    """
    Print a basis of the polynomial Casimirs up to the given degree.
    """
    g, _ = resolve_algebra(target, n, theta, theta_irrational, c, matrix_path)
    basis = polynomial_casimirs(g, degree)
    if OutputFormat(output_format) == OutputFormat.machine:
        payload = {
            "degree_bound": degree,
            "basis": [[{"exps": list(m), "coeff": format_rational(v)} for m, v in sorted_terms(p)] for p in basis.basis],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"{basis.dim} Casimir(s) of degree <= {degree} for {g.name or target}")
    for element in basis.basis:
        click.echo(poly_to_text(element))
