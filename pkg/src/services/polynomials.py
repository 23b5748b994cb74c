from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.errors import DimensionError
from src.services.rationals import Rational, format_rational

# A MultiPoly is a sparse map exponent-tuple -> nonzero QQ coefficient.
MultiPoly = PolyElement


@lru_cache(maxsize=None)
def poly_ring(nvars: int) -> PolyRing:
    """
    The ring QQ[xi0, ..., xi{n-1}] with graded-lex order.

    :param nvars: Number of variables.
    :type nvars: int
    :return: The polynomial ring.
    :rtype: PolyRing
    :raises DimensionError: If nvars < 1.
    """
    if nvars < 1:
        raise DimensionError("a polynomial ring needs at least one variable")
    names = [f"xi{k}" for k in range(nvars)]
    return ring(names, QQ, grlex)[0]


def variable(nvars: int, index: int) -> MultiPoly:
    if not 0 <= index < nvars:
        raise DimensionError(f"variable index {index} out of range for {nvars} variables")
    return poly_ring(nvars).gens[index]


def zero_poly(nvars: int) -> MultiPoly:
    return poly_ring(nvars).zero


def constant_poly(nvars: int, value: Rational) -> MultiPoly:
    return poly_ring(nvars).ground_new(value)


def linear_form(coeffs: Sequence[Rational]) -> MultiPoly:
    """
    The polynomial sum_k coeffs[k] * xi_k.
    """
    R = poly_ring(len(coeffs))
    return R.from_dict({monomial_unit(len(coeffs), k): c for k, c in enumerate(coeffs) if c})


def monomial_unit(nvars: int, index: int) -> tuple[int, ...]:
    return tuple(1 if k == index else 0 for k in range(nvars))


def nvars_of(p: MultiPoly) -> int:
    return p.ring.ngens


def total_degree(p: MultiPoly) -> int:
    """
    Maximum total exponent; the zero polynomial has degree -1.
    """
    if not p:
        return -1
    return max(sum(monom) for monom in p.keys())


def poly_partial_derivative(p: MultiPoly, var_index: int) -> MultiPoly:
    """
    Formal partial derivative with respect to xi_{var_index}.

    :param p: The polynomial.
    :type p: MultiPoly
    :param var_index: Index of the variable.
    :type var_index: int
    :return: The derivative.
    :rtype: MultiPoly
    :raises DimensionError: If var_index is out of range.
    """
    if not 0 <= var_index < nvars_of(p):
        raise DimensionError(f"variable index {var_index} out of range for {nvars_of(p)} variables")
    return p.diff(p.ring.gens[var_index])


def gradient(p: MultiPoly) -> list[MultiPoly]:
    return [p.diff(x) for x in p.ring.gens]


def poly_evaluate(p: MultiPoly, point: Sequence[Rational]) -> Rational:
    """
    Exact substitution of a rational point.

    :param p: The polynomial.
    :type p: MultiPoly
    :param point: One rational value per variable.
    :type point: Sequence[Rational]
    :return: The value p(point).
    :rtype: Rational
    :raises DimensionError: If the point has the wrong length.
    """
    if len(point) != nvars_of(p):
        raise DimensionError(f"point of length {len(point)} for a polynomial in {nvars_of(p)} variables")
    result = QQ.zero
    for monom, coeff in p.terms():
        term = coeff
        for value, exp in zip(point, monom):
            if exp:
                term *= value ** exp
        result += term
    return result


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """
    All exponent vectors of the given total degree, in ascending graded-lex order.
    """
    monomials = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for k in combo:
            exps[k] += 1
        monomials.append(tuple(exps))
    return sorted(monomials, key=grlex)


def sorted_terms(p: MultiPoly) -> list[tuple[tuple[int, ...], Rational]]:
    """
    Terms ordered by descending graded-lex order (leading term first).
    """
    return sorted(p.items(), key=lambda item: grlex(item[0]), reverse=True)


def poly_to_text(p: MultiPoly, names: Iterable[str] | None = None) -> str:
    """
    Human-readable rendering, e.g. ``xi0^2 - 3/2*xi1``.
    """
    names = list(names) if names is not None else [f"xi{k}" for k in range(nvars_of(p))]
    if not p:
        return "0"
    pieces = []
    for monom, coeff in sorted_terms(p):
        factors = [names[k] if e == 1 else f"{names[k]}^{e}" for k, e in enumerate(monom) if e]
        magnitude = -coeff if coeff < 0 else coeff
        if not factors:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = format_rational(magnitude) + "*" + "*".join(factors)
        sign = "-" if coeff < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
