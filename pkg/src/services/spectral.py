import logging
from dataclasses import dataclass

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from src.config.config import config
from src.errors import CatalogError, DimensionError
from src.models.enums import Closedness, Confidence
from src.models.params import ExFParams, ThetaTag
from src.schemas.reports import ImaginarySquare, SpectralReport
from src.services.matrices import RatMatrix
from src.services.polynomials import poly_to_text
from src.services.rationals import Rational, format_rational, parse_rational, rational_sqrt

logger = logging.getLogger(__name__)

UNIVARIATE, t = ring("t", QQ)

J_PATTERN = ((0, 1), (-1, 0))


@dataclass(frozen=True)
class ImaginaryPartSquare:
    """
    A positive root s = beta^2 of h(s), standing for the eigenvalue pair +-i*beta.
    Either ``value`` is the exact rational root or ``interval`` isolates an
    irrational root of ``factor``.
    """
    multiplicity: int
    value: Rational | None = None
    interval: tuple[Rational, Rational] | None = None
    factor: PolyElement | None = None

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def sort_key(self) -> Rational:
        return self.value if self.exact else self.interval[0]


def characteristic_polynomial(A: RatMatrix) -> PolyElement:
    """
    det(t I - A) by the Faddeev-LeVerrier recurrence.

    :param A: A square rational matrix.
    :type A: RatMatrix
    :return: The monic characteristic polynomial of degree n in QQ[t].
    :rtype: PolyElement
    :raises DimensionError: If A is not square.
    """
    if not A.is_square:
        raise DimensionError(f"characteristic polynomial of a non-square {A.nrows}x{A.ncols} matrix")
    n = A.nrows
    coefficients = {n: QQ.one}
    M = RatMatrix.zeros(n, n)
    identity = RatMatrix.identity(n)
    for k in range(1, n + 1):
        M = A @ M + identity.scale(coefficients[n - k + 1])
        coefficients[n - k] = -(A @ M).trace() / k
    return UNIVARIATE.from_dict({(k,): c for k, c in coefficients.items() if c})


def evaluate_at_matrix(p: PolyElement, A: RatMatrix) -> RatMatrix:
    """
    p(A) by Horner's scheme.
    """
    if not A.is_square:
        raise DimensionError("a polynomial can only be evaluated at a square matrix")
    result = RatMatrix.zeros(A.nrows, A.ncols)
    identity = RatMatrix.identity(A.nrows)
    degree = p.degree() if p else 0
    for k in range(degree, -1, -1):
        result = A @ result + identity.scale(p.get((k,), QQ.zero))
    return result


def _reflect(p: PolyElement) -> PolyElement:
    # p(-t)
    return UNIVARIATE.from_dict({(k,): (-c if k % 2 else c) for (k,), c in p.terms()})


def _even_part_in_s(p: PolyElement) -> PolyElement:
    """
    h(s) with e(t) = gcd(p(t), p(-t)) stripped of t-powers and t^2 = -s.
    """
    e = p.gcd(_reflect(p))
    if not e:
        return UNIVARIATE.one
    lowest = min(k for (k,), _ in e.terms())
    terms = {}
    for (k,), c in e.terms():
        k -= lowest
        if k % 2:
            raise ArithmeticError("gcd(p(t), p(-t)) has an odd part after removing t-powers")
        half = k // 2
        terms[(half,)] = -c if half % 2 else c
    return UNIVARIATE.from_dict(terms)


def _linear_root(factor: PolyElement) -> Rational:
    return -factor.get((0,), QQ.zero) / factor.get((1,), QQ.zero)


def isolate_positive_roots(f: PolyElement, tolerance: Rational) -> list[tuple[Rational, Rational]]:
    """
    Disjoint isolating intervals of the positive real roots of a square-free f.

    :param f: A square-free polynomial.
    :type f: PolyElement
    :param tolerance: Intervals are refined until narrower than this.
    :type tolerance: Rational
    :return: Intervals (lo, hi) in increasing order; a rational root may come as (r, r).
    :rtype: list[tuple[Rational, Rational]]
    """
    intervals = UNIVARIATE.dup_isolate_real_roots_sqf(f, eps=tolerance, inf=QQ.zero)
    return sorted((QQ.convert(lo), QQ.convert(hi)) for lo, hi in intervals if hi > 0)


def count_positive_roots(f: PolyElement) -> int:
    """
    Distinct positive real roots of f with f(0) != 0, by Sturm's theorem.
    """
    return UNIVARIATE.dup_count_real_roots(f, inf=QQ.zero)


def purely_imaginary_part_squares(p: PolyElement, tolerance: Rational | None = None) -> list[ImaginaryPartSquare]:
    """
    The values s = beta^2 > 0 for which +-i*beta are eigenvalues, with multiplicities.

    Rational values come from the linear factors of h(s) and are exact; the
    positive roots of the other irreducible factors come out as isolating
    intervals of width at most ``tolerance``.

    :param p: A characteristic polynomial in QQ[t].
    :type p: PolyElement
    :param tolerance: Isolation width (defaults to ROOT_TOLERANCE).
    :type tolerance: Rational | None
    :return: The squares, largest first.
    :rtype: list[ImaginaryPartSquare]
    """
    tolerance = parse_rational(config.ROOT_TOLERANCE) if tolerance is None else tolerance
    h = _even_part_in_s(p)
    if h.degree() < 1:
        return []
    squares = []
    _, factors = h.factor_list()
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            root = _linear_root(factor)
            if root > 0:
                squares.append(ImaginaryPartSquare(multiplicity, value=root))
            continue
        for interval in isolate_positive_roots(factor, tolerance):
            squares.append(ImaginaryPartSquare(multiplicity, interval=interval, factor=factor))
    expected = count_positive_roots(h.sqf_part())
    if expected != len(squares):
        raise ArithmeticError(f"Sturm count {expected} disagrees with {len(squares)} extracted roots")
    logger.debug("h(s) = %s has %d positive roots", poly_to_text(h, ["s"]), expected)
    return sorted(squares, key=lambda square: square.sort_key, reverse=True)


def matrix_is_template(A: RatMatrix) -> bool:
    """
    True iff A = diag(J, x J) for some nonzero x, with J = [[0, 1], [-1, 0]].
    """
    if (A.nrows, A.ncols) != (4, 4):
        return False
    x = A.entry(2, 3)
    if not x:
        return False
    for i in range(4):
        for j in range(4):
            block, scale = (0, QQ.one) if i < 2 else (2, x)
            inside = (i < 2) == (j < 2)
            expected = scale * J_PATTERN[i - block][j - block] if inside else 0
            if A.entry(i, j) != expected:
                return False
    return True


def sA_closedness(squares: list[ImaginaryPartSquare], theta_tag: ThetaTag | None = None,
                  on_template: bool = False) -> tuple[Closedness, Confidence]:
    """
    Whether S_A, generated by the square roots of ``squares``, is closed in R.

    :param squares: Output of purely_imaginary_part_squares.
    :type squares: list[ImaginaryPartSquare]
    :param theta_tag: Theta of the template diag(J, theta J), if any.
    :type theta_tag: ThetaTag | None
    :param on_template: Whether the matrix is the template the tag refers to.
    :type on_template: bool
    :return: The verdict and how it was obtained.
    :rtype: tuple[Closedness, Confidence]
    """
    if theta_tag is not None and theta_tag.is_irrational:
        if on_template:
            return Closedness.not_closed, Confidence.exact
        logger.warning("ignoring irrational theta %s on a matrix that is not diag(J, theta J)", theta_tag)
    if len(squares) <= 1:
        return Closedness.closed, Confidence.exact
    if not all(square.exact for square in squares):
        logger.warning("S_A has numerically isolated generators; closedness is unknown")
        return Closedness.unknown, Confidence.numeric
    base = squares[0].value
    for square in squares[1:]:
        if rational_sqrt(square.value / base) is None:
            return Closedness.not_closed, Confidence.exact
    return Closedness.closed, Confidence.exact


def imaginary_generators(squares: list[ImaginaryPartSquare]) -> list[str]:
    """
    Positive square roots of the squares, exact where possible.
    """
    generators = []
    for square in squares:
        if square.exact:
            root = rational_sqrt(square.value)
            generators.append(format_rational(root) if root is not None else f"sqrt({format_rational(square.value)})")
        else:
            lo, hi = square.interval
            generators.append(f"sqrt(s), s in ({format_rational(lo)}, {format_rational(hi)})")
    return generators


def _square_schema(square: ImaginaryPartSquare) -> ImaginarySquare:
    if square.exact:
        return ImaginarySquare(value=format_rational(square.value), multiplicity=square.multiplicity)
    lo, hi = square.interval
    return ImaginarySquare(
        value=f"root of {poly_to_text(square.factor, ['s'])}",
        multiplicity=square.multiplicity,
        exact=False,
        interval=[format_rational(lo), format_rational(hi)],
    )


def _verdict_notes(closedness: Closedness, n: int) -> list[str]:
    quotient = f"Q = R^{n} x|_A R"
    if closedness == Closedness.not_closed:
        return [
            f"S_A is not closed in R, so {quotient} is not type I.",
            f"{quotient} is the quotient of G by the abelian ideal p = span(e0, e{n + 1}..e{2 * n}), "
            "so the obstruction lifts and G is not type I.",
        ]
    if closedness == Closedness.closed:
        return [f"No obstruction found: S_A is closed in R. This is not a proof that {quotient} is type I."]
    return ["S_A has generators known only by isolating intervals; closedness was not decided."]


def _template_report(A: RatMatrix, theta_tag: ThetaTag) -> SpectralReport:
    name = str(theta_tag)
    squares = [
        ImaginarySquare(value="1", multiplicity=1),
        ImaginarySquare(value=f"{name}^2", multiplicity=1),
    ]
    return SpectralReport(
        char_poly=["1", "0", f"1 + {name}^2", "0", f"{name}^2"],
        char_poly_text=f"(t^2 + 1)*(t^2 + {name}^2)",
        imag_part_squares=squares,
        sA_generators=["1", name],
        closedness=Closedness.not_closed,
        confidence=Confidence.exact,
        type1_obstruction=True,
        notes=[f"A = diag(J, {name} J) with {name} irrational, so S_A = <1, {name}> is dense in R."]
        + _verdict_notes(Closedness.not_closed, A.nrows),
    )


def spectral_report(A: RatMatrix, theta_tag: ThetaTag | None = None, tolerance: Rational | None = None) -> SpectralReport:
    """
    Characteristic polynomial, S_A and the closedness verdict of a square matrix.

    :param A: The matrix.
    :type A: RatMatrix
    :param theta_tag: Irrational theta of the template diag(J, theta J), if any.
    :type theta_tag: ThetaTag | None
    :param tolerance: Root isolation width.
    :type tolerance: Rational | None
    :return: The report.
    :rtype: SpectralReport
    :raises DimensionError: If A is not square.
    """
    tolerance = parse_rational(config.ROOT_TOLERANCE) if tolerance is None else tolerance
    on_template = matrix_is_template(A)
    if theta_tag is not None and theta_tag.is_irrational and on_template:
        return _template_report(A, theta_tag)
    p = characteristic_polynomial(A)
    squares = purely_imaginary_part_squares(p, tolerance)
    closedness, confidence = sA_closedness(squares, theta_tag, on_template)
    return SpectralReport(
        char_poly=[format_rational(p.get((k,), QQ.zero)) for k in range(A.nrows, -1, -1)],
        char_poly_text=poly_to_text(p, ["t"]),
        imag_part_squares=[_square_schema(square) for square in squares],
        sA_generators=imaginary_generators(squares),
        closedness=closedness,
        confidence=confidence,
        tolerance=format_rational(tolerance) if confidence == Confidence.numeric else None,
        type1_obstruction=closedness == Closedness.not_closed,
        notes=_verdict_notes(closedness, A.nrows),
    )


def type_one_obstruction(params: ExFParams) -> SpectralReport:
    """
    S_A test for the exF family: A acts on the quotient Q = R^n x|_A R of G.

    :param params: The family parameters.
    :type params: ExFParams
    :return: The spectral report, with type1_obstruction set iff S_A is not closed.
    :rtype: SpectralReport
    """
    return spectral_report(params.A, params.theta_tag)


def require_template(A: RatMatrix, theta_tag: ThetaTag | None):
    if theta_tag is not None and theta_tag.is_irrational and not matrix_is_template(A):
        raise CatalogError("an irrational theta needs a 4x4 matrix of the form diag(J, x J)")
