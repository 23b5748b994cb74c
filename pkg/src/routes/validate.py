import click

from src.repository import documents as repository_documents
from src.services.options import ToolErrors


@click.command("validate")
@click.argument("path")
@ToolErrors("validation")
def router(path: str):
    """
    Check the format and the Jacobi identity of an algebra file.

    :param path: The algebra file.
    :type path: str
    :return: None
    """
    g = repository_documents.load(path)
    click.echo(f"ok: {g.name or path} (dim {g.dim}, {len(g.brackets)} nonzero brackets)")
