import pytest
from click.testing import CliRunner
from sympy.polys.domains import QQ

from src.models.params import ThetaTag
from src.repository import catalog
from src.services.matrices import RatMatrix


@pytest.fixture
def h3():
    return catalog.heisenberg(1)


@pytest.fixture
def aff_real():
    return catalog.aff_real()


@pytest.fixture
def aff_complex():
    return catalog.aff_complex()


@pytest.fixture
def cyclic():
    return catalog.cyclic_algebra()


@pytest.fixture
def abelian3():
    return catalog.abelian(3)


@pytest.fixture
def exf_small():
    """
    n = 1, A = [2], c = 5, so B = diag(5, 2, 3) on h_3.
    """
    params = catalog.exF_params(RatMatrix.from_rows([[2]]), 5)
    return catalog.exF_algebra(params), params


@pytest.fixture
def exf_irrational():
    return catalog.exF_template_instance(ThetaTag.symbolic_irrational("sqrt2"), 1)


@pytest.fixture
def exf_half():
    return catalog.exF_template_instance(ThetaTag.rational(QQ(1, 2)), 1)


@pytest.fixture
def catalog_algebras():
    J = catalog.J
    return [
        catalog.heisenberg(1),
        catalog.heisenberg(2),
        catalog.aff_real(),
        catalog.aff_complex(),
        catalog.abelian(2),
        catalog.cyclic_algebra(),
        catalog.abelian_extension(J),
        catalog.exF_algebra(catalog.exF_params(RatMatrix.from_rows([[2]]), 5)),
    ]


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
