import logging
from itertools import combinations
from typing import Mapping, Sequence

from sympy.polys.domains import QQ

from src.errors import DimensionError, JacobiError, NotDerivationError, NotIdealError
from src.models.algebra import LieAlgebra, LinMap, Subspace, unit_vector
from src.services.matrices import RatMatrix, Vector, kernel_basis, rank

logger = logging.getLogger(__name__)


def make_algebra(labels: Sequence[str], brackets: Mapping[tuple[int, int], Sequence], name: str = "",
                 check_jacobi: bool = True) -> LieAlgebra:
    """
    Build a Lie algebra from structure constants and verify the Jacobi identity.

    :param labels: Basis labels.
    :type labels: Sequence[str]
    :param brackets: [e_i, e_j] = sum_k brackets[(i, j)][k] e_k, for i < j.
    :type brackets: Mapping[tuple[int, int], Sequence]
    :param name: Display name.
    :type name: str
    :param check_jacobi: Skip verification when False (test fixtures only).
    :type check_jacobi: bool
    :return: The algebra.
    :rtype: LieAlgebra
    :raises JacobiError: If some basis triple violates the Jacobi identity.
    """
    g = LieAlgebra.from_brackets(labels, brackets, name)
    if check_jacobi:
        violations = jacobi_violations(g)
        if violations:
            raise JacobiError(violations, g.labels)
    return g


def _check_vector(g: LieAlgebra, x: Sequence):
    if len(x) != g.dim:
        raise DimensionError(f"vector of length {len(x)} for an algebra of dimension {g.dim}")


def _add_scaled(target: list, factor, vector: Vector):
    for k, v in enumerate(vector):
        if v:
            target[k] += factor * v


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """
    Bilinear extension of the structure constants.

    :param g: The algebra.
    :type g: LieAlgebra
    :param x: Coordinates of the first element.
    :type x: Sequence
    :param y: Coordinates of the second element.
    :type y: Sequence
    :return: Coordinates of [x, y].
    :rtype: Vector
    :raises DimensionError: If a vector has the wrong length.
    """
    _check_vector(g, x)
    _check_vector(g, y)
    result = [QQ.zero] * g.dim
    for (i, j) in g.nonzero_pairs():
        coefficient = x[i] * y[j] - x[j] * y[i]
        if coefficient:
            _add_scaled(result, coefficient, g.structure(i, j))
    return tuple(result)


def adjoint_matrix(g: LieAlgebra, x: Sequence) -> RatMatrix:
    """
    Matrix of ad(x): column j holds [x, e_j].
    """
    _check_vector(g, x)
    columns = [bracket(g, x, unit_vector(g.dim, j)) for j in range(g.dim)]
    return RatMatrix(g.dim, g.dim, tuple(tuple(col[i] for col in columns) for i in range(g.dim)))


def stacked_adjoint(g: LieAlgebra) -> RatMatrix:
    """
    ad(e_0), ..., ad(e_{n-1}) stacked vertically; its kernel is the center.
    """
    rows = []
    for i in range(g.dim):
        rows.extend(adjoint_matrix(g, unit_vector(g.dim, i)).rows)
    return RatMatrix(len(rows), g.dim, tuple(rows))


def jacobi_violations(g: LieAlgebra) -> list[tuple[int, int, int]]:
    """
    Basis triples i < j < k with [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] != 0.

    :param g: The algebra (possibly built with ``check_jacobi=False``).
    :type g: LieAlgebra
    :return: The violating triples, empty iff g is a Lie algebra.
    :rtype: list[tuple[int, int, int]]
    """
    violations = []
    n = g.dim
    for i, j, k in combinations(range(n), 3):
        total = [QQ.zero] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = g.structure(a, b)
            if any(inner):
                _add_scaled(total, QQ.one, bracket(g, inner, unit_vector(n, c)))
        if any(total):
            violations.append((i, j, k))
    return violations


def bracket_span(g: LieAlgebra, S: Subspace, T: Subspace) -> Subspace:
    """
    The span of [s, t] over basis vectors s of S and t of T.
    """
    products = [bracket(g, s, t) for s in S.basis for t in T.basis]
    return Subspace.span(products, g.dim)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    return Subspace.span([g.structure(i, j) for (i, j) in g.nonzero_pairs()], g.dim)


def derived_series(g: LieAlgebra) -> list[Subspace]:
    """
    g, [g,g], [[g,g],[g,g]], ... up to the first repeated term.
    """
    current = Subspace.full(g.dim)
    series = [current]
    while True:
        following = bracket_span(g, current, current)
        if following == current:
            return series
        series.append(following)
        current = following


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].is_zero()


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """
    g, [g,g], [g,[g,g]], ... up to the first repeated term.
    """
    whole = Subspace.full(g.dim)
    current = whole
    series = [current]
    while True:
        following = bracket_span(g, whole, current)
        if following == current:
            return series
        series.append(following)
        current = following


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].is_zero()


def is_abelian(g: LieAlgebra) -> bool:
    return not g.brackets


def center(g: LieAlgebra) -> Subspace:
    """
    Intersection of the kernels of all ad(e_i).

    :param g: The algebra.
    :type g: LieAlgebra
    :return: The center.
    :rtype: Subspace
    """
    return Subspace.span(kernel_basis(stacked_adjoint(g)), g.dim)


def adjoint_rank(g: LieAlgebra) -> int:
    return rank(stacked_adjoint(g))


def is_ad_faithful(g: LieAlgebra) -> bool:
    return center(g).is_zero()


def _check_map(g: LieAlgebra, D: LinMap):
    if D.dim != g.dim:
        raise DimensionError(f"a {D.dim}x{D.dim} map cannot act on an algebra of dimension {g.dim}")


def derivation_defects(g: LieAlgebra, D: LinMap) -> list[tuple[int, int]]:
    """
    Pairs i < j where D[e_i,e_j] != [De_i,e_j] + [e_i,De_j].
    """
    _check_map(g, D)
    defects = []
    for i, j in combinations(range(g.dim), 2):
        left = D.apply(g.structure(i, j))
        right = [QQ.zero] * g.dim
        _add_scaled(right, QQ.one, bracket(g, D.image(i), unit_vector(g.dim, j)))
        _add_scaled(right, QQ.one, bracket(g, unit_vector(g.dim, i), D.image(j)))
        if tuple(right) != left:
            defects.append((i, j))
    return defects


def is_derivation(g: LieAlgebra, D: LinMap) -> bool:
    """
    :param g: The algebra.
    :type g: LieAlgebra
    :param D: The linear map.
    :type D: LinMap
    :return: True iff D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
    :rtype: bool
    :raises DimensionError: If the map size differs from dim g.
    """
    return not derivation_defects(g, D)


def semidirect_sum(g: LieAlgebra, D: LinMap, label: str, check: bool = True, name: str | None = None) -> LieAlgebra:
    """
    g ⋊ R e_D with [e_D, x] = D x; e_D becomes the last basis vector.

    :param g: The algebra.
    :type g: LieAlgebra
    :param D: A derivation of g.
    :type D: LinMap
    :param label: Label of the new basis vector.
    :type label: str
    :param check: When False, skip both the derivation and the Jacobi check.
    :type check: bool
    :param name: Display name of the result.
    :type name: str | None
    :return: The extended algebra.
    :rtype: LieAlgebra
    :raises NotDerivationError: If D is not a derivation of g.
    """
    _check_map(g, D)
    if label in g.labels:
        raise DimensionError(f"label {label!r} already names a basis vector")
    if check:
        defects = derivation_defects(g, D)
        if defects:
            i, j = defects[0]
            raise NotDerivationError(
                f"map is not a derivation: fails on the pair ({g.labels[i]}, {g.labels[j]})")
    n = g.dim
    brackets = {pair: vector + (QQ.zero,) for pair, vector in g.brackets}
    for j in range(n):
        image = D.image(j)
        if any(image):
            # [e_j, e_D] = -D e_j
            brackets[(j, n)] = tuple(-v for v in image) + (QQ.zero,)
    result_name = name if name is not None else f"{g.name or 'g'} x| {label}"
    return make_algebra(g.labels + (label,), brackets, result_name, check_jacobi=check)


def is_ideal(g: LieAlgebra, S: Subspace) -> bool:
    """
    True iff [g, S] is contained in S.
    """
    if S.ambient != g.dim:
        raise DimensionError("subspace lives in a different space")
    return S.contains_subspace(bracket_span(g, Subspace.full(g.dim), S))


def is_abelian_subspace(g: LieAlgebra, S: Subspace) -> bool:
    if S.ambient != g.dim:
        raise DimensionError("subspace lives in a different space")
    return all(not any(bracket(g, s, t)) for s, t in combinations(S.basis, 2))


def projection_matrix(S: Subspace) -> RatMatrix:
    """
    Coordinates modulo S on the complement basis {e_c : c not a pivot of S}.
    """
    complement = S.complement_indices()
    pivots = S.pivots
    rows = []
    for c in complement:
        row = [QQ.zero] * S.ambient
        row[c] = QQ.one
        for p, vector in zip(pivots, S.basis):
            row[p] -= vector[c]
        rows.append(tuple(row))
    return RatMatrix(len(rows), S.ambient, tuple(rows))


def quotient(g: LieAlgebra, S: Subspace) -> tuple[LieAlgebra, RatMatrix]:
    """
    The quotient algebra g/S on the complement basis, with its projection matrix.

    :param g: The algebra.
    :type g: LieAlgebra
    :param S: An ideal of g.
    :type S: Subspace
    :return: (g/S, projection) where projection maps g-coordinates to g/S-coordinates.
    :rtype: tuple[LieAlgebra, RatMatrix]
    :raises NotIdealError: If S is not an ideal.
    """
    if not is_ideal(g, S):
        raise NotIdealError("the subspace is not an ideal, so the quotient is not a Lie algebra")
    if S.dim == g.dim:
        raise DimensionError("quotient by the whole algebra is zero-dimensional")
    complement = S.complement_indices()
    projection = projection_matrix(S)
    brackets = {}
    for a, b in combinations(range(len(complement)), 2):
        image = projection.apply(g.structure(complement[a], complement[b]))
        if any(image):
            brackets[(a, b)] = image
    labels = [g.labels[c] for c in complement]
    quotient_algebra = make_algebra(labels, brackets, f"{g.name or 'g'}/{S.dim}-dim ideal")
    return quotient_algebra, projection


def structurally_equal(g: LieAlgebra, h: LieAlgebra) -> bool:
    """
    Same dimension and same structure constants in the given bases; labels are ignored.
    """
    return g.dim == h.dim and g.brackets == h.brackets


def subspace_of(g: LieAlgebra, labels: Sequence[str]) -> Subspace:
    """
    Span of the named basis vectors.
    """
    index = {label: k for k, label in enumerate(g.labels)}
    try:
        return Subspace.span([unit_vector(g.dim, index[label]) for label in labels], g.dim)
    except KeyError as err:
        raise DimensionError(f"unknown basis label {err.args[0]!r}") from err


def lie_subspace(g: LieAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    for vector in vectors:
        _check_vector(g, vector)
    return Subspace.span(vectors, g.dim)
