import logging
from dataclasses import dataclass
from typing import Sequence

from sympy.polys.domains import QQ

from src.config.config import config
from src.errors import DimensionError
from src.models.algebra import LieAlgebra, Subspace
from src.services.lie import is_abelian_subspace
from src.services.matrices import PolyMatrix, RatMatrix, Vector, kernel_basis, poly_matrix_rank_generic, rank, \
    sample_points
from src.services.polynomials import linear_form
from src.services.rationals import rational

logger = logging.getLogger(__name__)

# Pi_ij(xi) = xi([e_i, e_j]); antisymmetric, entries linear or zero.
PoissonMatrix = PolyMatrix


@dataclass(frozen=True)
class OrbitSample:
    """
    Coadjoint data at a point xi of g*: the orbit dimension rank Pi(xi) and the
    isotropy algebra g(xi) = ker Pi(xi).
    """
    point: Vector
    rank_at_point: int
    isotropy: Subspace

    @property
    def is_open(self) -> bool:
        return self.rank_at_point == self.isotropy.ambient


def poisson_matrix(g: LieAlgebra) -> PoissonMatrix:
    """
    The Lie-Poisson structure matrix in the coordinates xi_0, ..., xi_{n-1}.

    :param g: The algebra.
    :type g: LieAlgebra
    :return: Pi with Pi_ij = sum_k c_ij^k xi_k.
    :rtype: PoissonMatrix
    """
    n = g.dim
    rows = [[linear_form(g.structure(i, j)) for j in range(n)] for i in range(n)]
    return PolyMatrix.from_rows(n, rows, n)


def evaluated_poisson(g: LieAlgebra, xi: Sequence) -> RatMatrix:
    """
    Pi(xi) computed directly from the structure constants.
    """
    if len(xi) != g.dim:
        raise DimensionError(f"point of length {len(xi)} for an algebra of dimension {g.dim}")
    xi = [rational(v) for v in xi]
    rows = []
    for i in range(g.dim):
        row = []
        for j in range(g.dim):
            vector = g.structure(i, j)
            row.append(sum((c * x for c, x in zip(vector, xi) if c and x), QQ.zero))
        rows.append(tuple(row))
    return RatMatrix(g.dim, g.dim, tuple(rows))


def orbit_rank_at(g: LieAlgebra, xi: Sequence) -> OrbitSample:
    """
    Orbit dimension and isotropy algebra at xi.

    :param g: The algebra.
    :type g: LieAlgebra
    :param xi: A point of g*, one rational per basis vector.
    :type xi: Sequence
    :return: The sample; the orbit through xi is open iff its rank equals dim g.
    :rtype: OrbitSample
    :raises DimensionError: If xi has the wrong length.
    """
    evaluated = evaluated_poisson(g, xi)
    isotropy = Subspace.span(kernel_basis(evaluated), g.dim)
    return OrbitSample(tuple(rational(v) for v in xi), rank(evaluated), isotropy)


def generic_rank(g: LieAlgebra, seed: int | None = None) -> int:
    seed = config.SEED if seed is None else seed
    value = poly_matrix_rank_generic(poisson_matrix(g), seed)
    logger.debug("generic rank of %s is %d", g.name, value)
    return value


def index(g: LieAlgebra, seed: int | None = None) -> int:
    """
    dim g minus the generic rank of Pi; zero iff open coadjoint orbits exist.
    """
    return g.dim - generic_rank(g, seed)


def has_open_orbits(g: LieAlgebra, seed: int | None = None) -> bool:
    return index(g, seed) == 0


def isotropy_abelian_at(g: LieAlgebra, xi: Sequence) -> bool:
    """
    True iff the isotropy subalgebra g(xi) is abelian.
    """
    return is_abelian_subspace(g, orbit_rank_at(g, xi).isotropy)


def generic_isotropy(g: LieAlgebra, seed: int | None = None, attempts: int = 4,
                     target: int | None = None) -> OrbitSample:
    """
    OrbitSample at the first seeded point whose rank reaches the generic rank.

    :param g: The algebra.
    :type g: LieAlgebra
    :param seed: Seed of the point generator.
    :type seed: int | None
    :param attempts: Batches of points tried before giving up.
    :type attempts: int
    :param target: The generic rank, when already known.
    :type target: int | None
    :return: A generic sample (the best one found if none reaches the generic rank).
    :rtype: OrbitSample
    """
    seed = config.SEED if seed is None else seed
    target = generic_rank(g, seed) if target is None else target
    best = None
    for attempt in range(attempts):
        for point in sample_points(g.dim, seed + attempt, config.RANK_SAMPLE_POINTS, config.RANK_SAMPLE_BITS):
            sample = orbit_rank_at(g, point)
            if sample.rank_at_point == target:
                return sample
            if best is None or sample.rank_at_point > best.rank_at_point:
                best = sample
    logger.warning("no sampled point of %s reached the generic rank %d", g.name, target)
    return best
