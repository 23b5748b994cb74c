from sympy.polys.domains import QQ

from src.errors import CatalogError
from src.models.algebra import LieAlgebra, LinMap, Subspace, unit_vector
from src.models.params import ExFParams, ThetaTag
from src.services.lie import make_algebra, semidirect_sum
from src.services.matrices import RatMatrix
from src.services.rationals import Rational, format_rational, rational

J = RatMatrix.from_rows([[0, 1], [-1, 0]])

CATALOG = {
    "heisenberg": "Heisenberg algebra h_{2n+1}: [e_j, e_{n+j}] = e0 (--n, default 1)",
    "aff_real": "Lie algebra of R x| R+ (ax+b group): [e1, e0] = e0",
    "aff_complex": "realified Lie algebra of C x| C^x, basis (b1, b2, a1, a2)",
    "exF": "h_{2n+1} x| R B with B = diag(c, A, c I - A^T) (--n 4 template diag(J, theta J), or --matrix)",
    "abelian_extension": "R^n x|_A R from a square matrix A (--matrix)",
    "abelian": "abelian algebra R^n (--n, default 1)",
}


def heisenberg(n: int) -> LieAlgebra:
    """
    h_{2n+1} with basis e0, ..., e_{2n} and [e_j, e_{n+j}] = e0.

    :param n: Number of canonical pairs.
    :type n: int
    :return: The Heisenberg algebra.
    :rtype: LieAlgebra
    :raises CatalogError: If n < 1.
    """
    if n < 1:
        raise CatalogError("heisenberg needs n >= 1")
    dim = 2 * n + 1
    labels = [f"e{k}" for k in range(dim)]
    brackets = {(j, n + j): unit_vector(dim, 0) for j in range(1, n + 1)}
    return make_algebra(labels, brackets, f"heisenberg(n={n})")


def aff_real() -> LieAlgebra:
    # [e1, e0] = e0
    return make_algebra(["e0", "e1"], {(0, 1): (-1, 0)}, "aff_real")


def aff_complex() -> LieAlgebra:
    """
    Realification of aff(C): b = b1 + i b2, a = a1 + i a2 acting by multiplication.
    """
    b1, b2 = unit_vector(4, 0), unit_vector(4, 1)
    brackets = {
        (0, 2): tuple(-v for v in b1),  # [a1, b1] = b1
        (1, 2): tuple(-v for v in b2),  # [a1, b2] = b2
        (0, 3): tuple(-v for v in b2),  # [a2, b1] = b2
        (1, 3): b1,                     # [a2, b2] = -b1
    }
    return make_algebra(["b1", "b2", "a1", "a2"], brackets, "aff_complex")


def abelian(n: int, labels: list[str] | None = None) -> LieAlgebra:
    if n < 1:
        raise CatalogError("abelian needs n >= 1")
    labels = labels or [f"e{k}" for k in range(n)]
    return make_algebra(labels, {}, f"abelian(n={n})")


def cyclic_algebra() -> LieAlgebra:
    """
    [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; perfect, so not solvable.
    """
    e1, e2, e3 = unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)
    brackets = {(0, 1): e3, (1, 2): e1, (0, 2): tuple(-v for v in e2)}
    return make_algebra(["e1", "e2", "e3"], brackets, "cyclic")


def template_matrix(theta: Rational) -> RatMatrix:
    """
    A = diag(J, theta J) with J = [[0, 1], [-1, 0]].
    """
    return RatMatrix.block_diagonal(J, J.scale(theta))


def exF_derivation(p: ExFParams) -> LinMap:
    """
    B = diag(c, A, c I_n - A^T) on (e0; e1..en; e_{n+1}..e_{2n}).

    :param p: The family parameters.
    :type p: ExFParams
    :return: The derivation B of h_{2n+1}.
    :rtype: LinMap
    """
    third = RatMatrix.identity(p.n).scale(p.c) - p.A.transpose()
    return LinMap(RatMatrix.block_diagonal(RatMatrix.diagonal([p.c]), p.A, third))


def exF_name(p: ExFParams) -> str:
    if p.theta_tag is not None:
        return f"exF(n=4,c={format_rational(p.c)},theta={p.theta_tag})"
    return f"exF(n={p.n},c={format_rational(p.c)})"


def exF_algebra(p: ExFParams) -> LieAlgebra:
    """
    h_{2n+1} x| R B.

    :param p: The family parameters.
    :type p: ExFParams
    :return: The (2n+2)-dimensional algebra with B as the last basis vector.
    :rtype: LieAlgebra
    """
    return semidirect_sum(heisenberg(p.n), exF_derivation(p), "B", name=exF_name(p))


def exF_params(A: RatMatrix, c=1, theta_tag: ThetaTag | None = None) -> ExFParams:
    if not A.is_square:
        raise CatalogError("A must be square")
    return ExFParams(A.nrows, A, rational(c), theta_tag)


def exF_template_instance(theta_tag: ThetaTag, c=1) -> tuple[LieAlgebra, ExFParams]:
    """
    The n = 4 instance with A = diag(J, theta J).

    :param theta_tag: Rational theta or a named irrational.
    :type theta_tag: ThetaTag
    :param c: The scalar c.
    :type c: Rational
    :return: The 10-dimensional algebra and its parameters.
    :rtype: tuple[LieAlgebra, ExFParams]
    """
    params = exF_params(template_matrix(theta_tag.matrix_value()), c, theta_tag)
    return exF_algebra(params), params


def exF_ideal(p: ExFParams) -> Subspace:
    """
    p = span({e0} ∪ {e_{n+1}, ..., e_{2n}}), an abelian ideal invariant under B.
    """
    dim = 2 * p.n + 2
    indices = [0] + list(range(p.n + 1, 2 * p.n + 1))
    return Subspace.span([unit_vector(dim, k) for k in indices], dim)


def abelian_extension(A: RatMatrix) -> LieAlgebra:
    """
    R^n x|_A R with basis e1..en, t and [t, x] = A x.

    :param A: A square matrix.
    :type A: RatMatrix
    :return: The (n+1)-dimensional algebra.
    :rtype: LieAlgebra
    """
    if not A.is_square:
        raise CatalogError("A must be square")
    base = abelian(A.nrows, [f"e{k}" for k in range(1, A.nrows + 1)])
    return semidirect_sum(base, LinMap(A), "t", name=f"abelian_extension(n={A.nrows})")


def build(name: str, n: int | None = None, theta_tag: ThetaTag | None = None, c=None,
          matrix: RatMatrix | None = None) -> tuple[LieAlgebra, ExFParams | None]:
    """
    Construct a catalog entry from command-line style parameters.

    :param name: Catalog name.
    :type name: str
    :param n: Size parameter.
    :type n: int | None
    :param theta_tag: Theta of the exF template.
    :type theta_tag: ThetaTag | None
    :param c: Scalar c of exF (default 1).
    :type c: Rational | None
    :param matrix: Matrix A for exF or abelian_extension.
    :type matrix: RatMatrix | None
    :return: The algebra and, for exF, its parameters.
    :rtype: tuple[LieAlgebra, ExFParams | None]
    :raises CatalogError: On unknown names or inconsistent parameters.
    """
    if name not in CATALOG:
        raise CatalogError(f"unknown catalog entry {name!r}; choose from {', '.join(CATALOG)}")
    if name != "exF" and (theta_tag is not None or c is not None):
        raise CatalogError(f"{name} takes no theta or c")
    if name not in ("exF", "abelian_extension") and matrix is not None:
        raise CatalogError(f"{name} takes no matrix")
    if name == "heisenberg":
        return heisenberg(1 if n is None else n), None
    if name == "abelian":
        return abelian(1 if n is None else n), None
    if name in ("aff_real", "aff_complex"):
        if n is not None:
            raise CatalogError(f"{name} takes no n")
        return (aff_real() if name == "aff_real" else aff_complex()), None
    if name == "abelian_extension":
        if matrix is None:
            raise CatalogError("abelian_extension needs a matrix")
        if n is not None and n != matrix.nrows:
            raise CatalogError(f"n = {n} does not match the {matrix.nrows}x{matrix.ncols} matrix")
        return abelian_extension(matrix), None
    c = QQ.one if c is None else rational(c)
    if matrix is not None:
        if theta_tag is not None:
            raise CatalogError("give either a matrix or theta, not both")
        if n is not None and n != matrix.nrows:
            raise CatalogError(f"n = {n} does not match the {matrix.nrows}x{matrix.ncols} matrix")
        params = exF_params(matrix, c)
        return exF_algebra(params), params
    if n is not None and n != 4:
        raise CatalogError("the theta template needs n = 4; pass --matrix for other n")
    tag = theta_tag if theta_tag is not None else ThetaTag.symbolic_irrational("theta")
    return exF_template_instance(tag, c)
