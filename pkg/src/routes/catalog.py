import click

from src.repository import catalog as repository_catalog
from src.repository import documents as repository_documents
from src.services.options import ToolErrors, build_from_catalog, catalog_options

router = click.Group("catalog", help="List and build the algebras of the catalog.")


@router.command("list")
def list_entries():
    """
    Print every catalog name with a one-line description.
    """
    width = max(len(name) for name in repository_catalog.CATALOG)
    for name, description in repository_catalog.CATALOG.items():
        click.echo(f"{name.ljust(width)}  {description}")


@router.command("build")
@click.argument("name")
@catalog_options
@click.option("-o", "--output", "output", required=True, help="Where to write the algebra file.")
@ToolErrors("catalog build")
def build(name: str, n, theta, theta_irrational, c, matrix_path, output: str):
    """
    Build a catalog algebra and save it as an algebra file.

    :param name: Catalog name.
    :type name: str
    :param output: Target file.
    :type output: str
    :return: None
    """
    g, _ = build_from_catalog(name, n, theta, theta_irrational, c, matrix_path)
    repository_documents.save(g, output)
    click.echo(f"wrote {g.name} (dim {g.dim}) to {output}")
