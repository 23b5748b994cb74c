import functools
import logging

import click

from src.errors import LieToolError
from src.models.algebra import LieAlgebra
from src.models.params import ExFParams, ThetaTag
from src.repository import catalog as repository_catalog
from src.repository import documents as repository_documents
from src.services.rationals import parse_rational

logger = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"


class ToolErrors:
    """
    Turns toolkit errors into click failures (exit status 1).
    """
    def __init__(self, action: str):
        self.action = action

    def __call__(self, func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except LieToolError as err:
                logger.debug("%s failed: %s", self.action, err.detail)
                raise click.ClickException(f"{self.action} failed: {err}") from err
        return wrapper


def rational_option(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_rational(value)
    except LieToolError as err:
        raise click.BadParameter(err.detail, ctx=ctx, param=param) from err


def catalog_options(func):
    """
    --n, --theta, --theta-irrational, --c and --matrix, shared by the commands that build catalog entries.
    """
    decorators = [
        click.option("--n", "n", type=int, default=None, help="Size parameter of the family."),
        click.option("--theta", callback=rational_option, default=None, help="Rational theta p/q of the exF template."),
        click.option("--theta-irrational", "theta_irrational", default=None,
                     help="Name of an irrational theta for the exF template."),
        click.option("--c", "c", callback=rational_option, default=None, help="Scalar c of exF (default 1)."),
        click.option("--matrix", "matrix_path", default=None, help="JSON matrix file for A."),
    ]
    for decorator in reversed(decorators):
        func = decorator(func)
    return func


def theta_tag_from(theta, theta_irrational: str | None) -> ThetaTag | None:
    if theta is not None and theta_irrational is not None:
        raise click.UsageError("--theta and --theta-irrational are mutually exclusive")
    if theta is not None:
        return ThetaTag.rational(theta)
    if theta_irrational is not None:
        return ThetaTag.symbolic_irrational(theta_irrational)
    return None


def build_from_catalog(name: str, n, theta, theta_irrational, c, matrix_path) -> tuple[LieAlgebra, ExFParams | None]:
    """
    Construct a catalog entry from parsed command-line options.

    :param name: Catalog name.
    :type name: str
    :param n: Size parameter.
    :type n: int | None
    :param theta: Rational theta.
    :type theta: Rational | None
    :param theta_irrational: Name of an irrational theta.
    :type theta_irrational: str | None
    :param c: The scalar c.
    :type c: Rational | None
    :param matrix_path: Matrix file for A.
    :type matrix_path: str | None
    :return: The algebra and, for exF, its parameters.
    :rtype: tuple[LieAlgebra, ExFParams | None]
    """
    tag = theta_tag_from(theta, theta_irrational)
    matrix = repository_documents.load_matrix(matrix_path) if matrix_path is not None else None
    return repository_catalog.build(name, n=n, theta_tag=tag, c=c, matrix=matrix)


def resolve_algebra(target: str, n=None, theta=None, theta_irrational=None, c=None,
                    matrix_path=None) -> tuple[LieAlgebra, ExFParams | None]:
    """
    A file path, or ``catalog:<name>`` built with the catalog options.
    """
    if target.startswith(CATALOG_PREFIX):
        return build_from_catalog(target[len(CATALOG_PREFIX):], n, theta, theta_irrational, c, matrix_path)
    if any(v is not None for v in (n, theta, theta_irrational, c, matrix_path)):
        raise click.UsageError("catalog options only apply to catalog:<name> targets")
    return repository_documents.load(target), None
