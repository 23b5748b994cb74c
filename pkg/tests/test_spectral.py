import numpy as np
import pytest
from sympy.polys.domains import QQ

from src.errors import CatalogError, DimensionError
from src.models.enums import Closedness, Confidence
from src.models.params import ThetaTag
from src.repository import catalog
from src.services.matrices import RatMatrix
from src.services.spectral import (ImaginaryPartSquare, characteristic_polynomial, count_positive_roots,
                                   evaluate_at_matrix, imaginary_generators, isolate_positive_roots, matrix_is_template,
                                   purely_imaginary_part_squares, require_template, sA_closedness, spectral_report, t,
                                   type_one_obstruction)

J = catalog.J
# companion matrix of t^4 + 4 t^2 + 2, whose squares are 2 - sqrt2 and 2 + sqrt2
COMPANION = RatMatrix.from_rows([[0, 0, 0, -2], [1, 0, 0, 0], [0, 1, 0, -4], [0, 0, 1, 0]])


def companion_square(s):
    return s * s - 4 * s + 2


def rotation(a, b):
    return RatMatrix.from_rows([[0, a], [-b, 0]])


def values(squares):
    return [square.value for square in squares]


def test_characteristic_polynomial_examples():
    assert characteristic_polynomial(J) == t ** 2 + 1
    half = RatMatrix.block_diagonal(J, J.scale(QQ(1, 2)))
    assert characteristic_polynomial(half) == (t ** 2 + 1) * (t ** 2 + QQ(1, 4))
    assert characteristic_polynomial(RatMatrix.zeros(2, 2)) == t ** 2
    assert characteristic_polynomial(COMPANION) == t ** 4 + 4 * t ** 2 + 2


def test_non_square_matrix():
    with pytest.raises(DimensionError):
        characteristic_polynomial(RatMatrix.zeros(2, 3))
    with pytest.raises(DimensionError):
        evaluate_at_matrix(t + 1, RatMatrix.zeros(1, 2))


def test_imaginary_part_squares_examples():
    half = RatMatrix.block_diagonal(J, J.scale(QQ(1, 2)))
    assert values(purely_imaginary_part_squares(characteristic_polynomial(half))) == [QQ(1), QQ(1, 4)]
    assert purely_imaginary_part_squares(t ** 2) == []
    assert purely_imaginary_part_squares((t - 3) * (t + 2)) == []
    squares = purely_imaginary_part_squares((t ** 2 + 1) ** 2)
    assert values(squares) == [QQ(1)]
    assert squares[0].multiplicity == 2


def test_irrational_squares_are_isolated():
    tolerance = QQ(1, 10 ** 6)
    squares = purely_imaginary_part_squares(characteristic_polynomial(COMPANION), tolerance)
    assert len(squares) == 2
    assert not any(square.exact for square in squares)
    for square in squares:
        lo, hi = square.interval
        assert 0 < hi - lo <= tolerance
        assert companion_square(hi) == 0 or (companion_square(lo) > 0) != (companion_square(hi) > 0)
    assert squares[0].interval[0] > 3 > squares[1].interval[1]


def test_positive_root_count_and_isolation():
    f = t ** 2 - 4 * t + 2
    assert count_positive_roots(f) == 2
    assert count_positive_roots(t ** 2 + 3 * t + 1) == 0
    assert count_positive_roots((t - 1) * (t + 5)) == 1
    intervals = isolate_positive_roots(f, QQ(1, 100))
    assert len(intervals) == 2
    assert all(0 < lo < hi and hi - lo <= QQ(1, 100) for lo, hi in intervals)
    assert intervals[0][1] < intervals[1][0]
    assert isolate_positive_roots(t + 2, QQ(1, 100)) == []


def test_incommensurable_squares_are_not_closed():
    A = RatMatrix.block_diagonal(J, rotation(1, 2))
    report = spectral_report(A)
    assert report.imag_part_squares[0].value == "2"
    assert report.sA_generators == ["sqrt(2)", "1"]
    assert report.closedness == Closedness.not_closed
    assert report.confidence == Confidence.exact
    assert report.type1_obstruction


def test_tagged_template_is_not_closed(exf_irrational):
    _, params = exf_irrational
    report = type_one_obstruction(params)
    assert report.closedness == Closedness.not_closed
    assert report.confidence == Confidence.exact
    assert report.sA_generators == ["1", "sqrt2"]
    assert report.type1_obstruction
    assert any("not type I" in note for note in report.notes)


def test_rational_theta_is_closed():
    report = spectral_report(catalog.template_matrix(QQ(22, 7)))
    assert [s.value for s in report.imag_part_squares] == ["484/49", "1"]
    assert report.sA_generators == ["22/7", "1"]
    assert report.closedness == Closedness.closed
    assert not report.type1_obstruction
    assert report.notes[0].startswith("No obstruction found")


def test_one_dimensional_matrix_is_closed():
    report = spectral_report(RatMatrix.from_rows([[2]]))
    assert report.char_poly == ["1", "-2"]
    assert report.imag_part_squares == []
    assert report.closedness == Closedness.closed


def test_numeric_squares_leave_closedness_unknown():
    report = spectral_report(COMPANION, tolerance=QQ(1, 1000))
    assert report.closedness == Closedness.unknown
    assert report.confidence == Confidence.numeric
    assert report.tolerance == "1/1000"
    assert not report.type1_obstruction
    assert all(not square.exact and len(square.interval) == 2 for square in report.imag_part_squares)


def test_single_generator_is_closed():
    assert sA_closedness([]) == (Closedness.closed, Confidence.exact)
    square = ImaginaryPartSquare(1, value=QQ(3))
    assert sA_closedness([square]) == (Closedness.closed, Confidence.exact)
    assert imaginary_generators([square]) == ["sqrt(3)"]


def test_tag_off_template_is_ignored():
    squares = [ImaginaryPartSquare(1, value=QQ(4)), ImaginaryPartSquare(1, value=QQ(1))]
    tag = ThetaTag.symbolic_irrational("pi")
    assert sA_closedness(squares, tag, on_template=False) == (Closedness.closed, Confidence.exact)
    assert sA_closedness(squares, tag, on_template=True) == (Closedness.not_closed, Confidence.exact)


def test_template_detection():
    assert matrix_is_template(catalog.template_matrix(QQ(3)))
    assert not matrix_is_template(RatMatrix.block_diagonal(J, J.scale(0)))
    assert not matrix_is_template(RatMatrix.block_diagonal(J, rotation(1, 2)))
    with pytest.raises(CatalogError):
        require_template(J, ThetaTag.symbolic_irrational("sqrt2"))
    require_template(J, ThetaTag.rational(QQ(2)))


@pytest.mark.parametrize("seed", range(200))
def test_cayley_hamilton(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5, endpoint=True))
    A = RatMatrix.from_rows(rng.integers(-9, 9, size=(n, n), endpoint=True).tolist())
    p = characteristic_polynomial(A)
    assert p.degree() == n
    assert p.LC == 1
    assert evaluate_at_matrix(p, A).is_zero()
    assert values(purely_imaginary_part_squares(p * (t - 3))) == values(purely_imaginary_part_squares(p))


@pytest.mark.parametrize("seed", range(200))
def test_scaling_keeps_closedness(seed):
    rng = np.random.default_rng(seed)
    a1, b1, a2, b2 = (int(v) for v in rng.integers(1, 12, size=4, endpoint=True))
    A = RatMatrix.block_diagonal(rotation(a1, b1), rotation(a2, b2))
    numerator = int(rng.choice([-9, -7, -3, -2, -1, 1, 2, 3, 5, 8]))
    k = QQ(numerator, int(rng.integers(1, 9, endpoint=True)))
    base = spectral_report(A)
    scaled = spectral_report(A.scale(k))
    assert base.closedness == scaled.closedness
    assert base.closedness in (Closedness.closed, Closedness.not_closed)
    squares = purely_imaginary_part_squares(characteristic_polynomial(A))
    assert values(purely_imaginary_part_squares(characteristic_polynomial(A.scale(k)))) == \
        [k * k * v for v in values(squares)]
    assert sorted(values(squares)) == sorted({QQ(a1 * b1), QQ(a2 * b2)})


@pytest.mark.parametrize("q", [QQ(-3, 7), QQ(1, 2), QQ(-1), QQ(5, 3)])
def test_rational_scaling_of_incommensurable_spectrum(q):
    A = RatMatrix.block_diagonal(J, rotation(1, 2))
    report = spectral_report(A.scale(q))
    assert report.closedness == Closedness.not_closed
    assert [s.value for s in purely_imaginary_part_squares(characteristic_polynomial(A.scale(q)))] == \
        [2 * q * q, q * q]
