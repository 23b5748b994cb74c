import logging
from dataclasses import dataclass

import numpy as np
from sympy.polys.domains import QQ

from src.config.config import config
from src.errors import DimensionError
from src.models.algebra import LieAlgebra
from src.models.enums import CasimirStatus
from src.services.coadjoint import evaluated_poisson, poisson_matrix
from src.services.matrices import seeded_rng, sparse_kernel_basis, sparse_rank_mod_p
from src.services.polynomials import MultiPoly, gradient, monomials_of_degree, nvars_of, poly_evaluate, poly_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CasimirBasis:
    """
    Polynomial Casimirs of degree 1..degree_bound without constant term, as the
    integer-normalized reduced echelon basis over graded-lex ordered monomials.
    """
    degree_bound: int
    nvars: int
    basis: tuple[MultiPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def of_degree(self, degree: int) -> list[MultiPoly]:
        return [p for p in self.basis if max(sum(m) for m in p.keys()) == degree]


@dataclass(frozen=True)
class CasimirVerdict:
    status: CasimirStatus
    degree_bound: int
    witness: MultiPoly | None = None


def _degree_system(g: LieAlgebra, degree: int) -> tuple[list[tuple[int, ...]], list[dict[int, object]]]:
    """
    Linear system on the coefficients of a homogeneous c of the given degree:
    every coefficient of every entry of Pi . grad c must vanish. Pi is linear, so
    Pi . grad maps each homogeneous degree to itself and degrees never mix.
    """
    n = g.dim
    unknowns = monomials_of_degree(n, degree)
    equations: dict[tuple[int, tuple[int, ...]], dict[int, object]] = {}
    nonzero = {(i, j): g.structure(i, j) for i in range(n) for j in range(n) if i != j and any(g.structure(i, j))}
    for col, monom in enumerate(unknowns):
        for j, exponent in enumerate(monom):
            if not exponent:
                continue
            lowered = list(monom)
            lowered[j] -= 1
            for i in range(n):
                vector = nonzero.get((i, j))
                if vector is None:
                    continue
                for l, coefficient in enumerate(vector):
                    if not coefficient:
                        continue
                    raised = list(lowered)
                    raised[l] += 1
                    row = equations.setdefault((i, tuple(raised)), {})
                    value = row.get(col, QQ.zero) + exponent * coefficient
                    if value:
                        row[col] = value
                    else:
                        row.pop(col, None)
    rows = [equations[key] for key in sorted(equations) if equations[key]]
    logger.debug("degree %d Casimir system: %d equations, %d unknowns", degree, len(rows), len(unknowns))
    return unknowns, rows


def polynomial_casimirs(g: LieAlgebra, d: int | None = None) -> CasimirBasis:
    """
    Basis of {c : deg c <= d, c(0) = 0, Pi . grad c = 0}.

    :param g: The algebra.
    :type g: LieAlgebra
    :param d: Degree bound, at least 1.
    :type d: int | None
    :return: The Casimir basis, degree-1 elements first.
    :rtype: CasimirBasis
    :raises DimensionError: If d < 1.
    """
    d = config.MAX_CASIMIR_DEGREE if d is None else d
    if d < 1:
        raise DimensionError("the Casimir degree bound must be at least 1")
    R = poly_ring(g.dim)
    basis = []
    for degree in range(1, d + 1):
        unknowns, rows = _degree_system(g, degree)
        if sparse_rank_mod_p(rows, len(unknowns)) == len(unknowns):
            logger.debug("degree %d: trivial kernel certified mod p", degree)
            continue
        for vector in sparse_kernel_basis(rows, len(unknowns)):
            casimir = R.from_dict({monom: v for monom, v in zip(unknowns, vector) if v})
            if not verify_casimir(g, casimir):
                raise ArithmeticError(f"solver returned a non-Casimir of degree {degree}")
            basis.append(casimir)
    return CasimirBasis(d, g.dim, tuple(basis))


def verify_casimir(g: LieAlgebra, c: MultiPoly) -> bool:
    """
    True iff Pi . grad c vanishes identically, by direct polynomial arithmetic.

    :param g: The algebra.
    :type g: LieAlgebra
    :param c: A polynomial in dim g variables.
    :type c: MultiPoly
    :return: Whether c is a Casimir.
    :rtype: bool
    """
    if nvars_of(c) != g.dim:
        raise DimensionError(f"polynomial in {nvars_of(c)} variables for an algebra of dimension {g.dim}")
    if not c:
        return True
    Pi = poisson_matrix(g)
    partials = gradient(c)
    for i in range(g.dim):
        total = c.ring.zero
        for j in range(g.dim):
            if Pi.entry(i, j) and partials[j]:
                total += Pi.entry(i, j) * partials[j]
        if total:
            return False
    return True


def random_rational_point(rng: np.random.Generator, n: int) -> tuple:
    numerators = rng.integers(-1000, 1000, size=n, endpoint=True)
    denominators = rng.integers(1, 50, size=n, endpoint=True)
    return tuple(QQ(int(p), int(q)) for p, q in zip(numerators, denominators))


def casimir_spot_check(g: LieAlgebra, c: MultiPoly, seed: int | None = None, points: int | None = None) -> bool:
    """
    Check (Pi(xi) . grad c(xi))_i = 0 at seeded random rational xi and random i.
    """
    seed = config.SEED if seed is None else seed
    points = config.CASIMIR_SPOT_CHECKS if points is None else points
    rng = seeded_rng(seed)
    partials = gradient(c)
    for _ in range(points):
        xi = random_rational_point(rng, g.dim)
        i = int(rng.integers(0, g.dim))
        row = evaluated_poisson(g, xi).rows[i]
        value = sum((a * poly_evaluate(p, xi) for a, p in zip(row, partials) if a and p), QQ.zero)
        if value:
            return False
    return True


def casimirs_constant_verdict(g: LieAlgebra, d: int | None = None, seed: int | None = None) -> CasimirVerdict:
    """
    Whether every polynomial Casimir up to degree d is constant.

    :param g: The algebra.
    :type g: LieAlgebra
    :param d: Degree bound.
    :type d: int | None
    :param seed: Seed of the numeric spot checks.
    :type seed: int | None
    :return: all_constant, or nonconstant_found with the first basis element as witness.
    :rtype: CasimirVerdict
    """
    casimirs = polynomial_casimirs(g, d)
    for element in casimirs.basis:
        if not casimir_spot_check(g, element, seed):
            raise ArithmeticError("a solver Casimir failed the numeric spot check")
    if not casimirs.basis:
        return CasimirVerdict(CasimirStatus.all_constant, casimirs.degree_bound)
    return CasimirVerdict(CasimirStatus.nonconstant_found, casimirs.degree_bound, casimirs.basis[0])
