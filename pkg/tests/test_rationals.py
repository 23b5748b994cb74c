import numpy as np
import pytest
from sympy.polys.domains import QQ

from src.errors import DocumentError
from src.services.rationals import (format_rational, is_rational_square, parse_rational, primitive_integer_vector,
                                    rational, rational_sqrt)


@pytest.mark.parametrize("text, expected", [
    ("3", QQ(3)),
    ("-3/6", QQ(-1, 2)),
    ("−2/4", QQ(-1, 2)),
    (" 0/5 ", QQ(0)),
    ("10/4", QQ(5, 2)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1.5", "a/b", "1/0", "--1", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(DocumentError):
        parse_rational(text)


def test_format_rational_is_canonical():
    assert format_rational(QQ(4, 2)) == "2"
    assert format_rational(QQ(-3, 9)) == "-1/3"
    assert format_rational(QQ(0)) == "0"
    assert parse_rational(format_rational(QQ(-22, 7))) == QQ(-22, 7)


def test_rational_coercion():
    assert rational(3) == QQ(3)
    assert rational("1/2") == QQ(1, 2)
    assert rational(QQ(2, 3)) == QQ(2, 3)
    with pytest.raises(TypeError):
        rational(True)


def test_rational_sqrt():
    assert rational_sqrt(QQ(9, 4)) == QQ(3, 2)
    assert rational_sqrt(QQ(2)) is None
    assert rational_sqrt(QQ(-1)) is None
    assert is_rational_square(QQ(1, 4))
    assert not is_rational_square(QQ(1, 2))


def test_primitive_integer_vector():
    assert primitive_integer_vector([QQ(-1, 2), QQ(0), QQ(3, 4)]) == [QQ(2), QQ(0), QQ(-3)]
    assert primitive_integer_vector([QQ(0), QQ(0)]) == [QQ(0), QQ(0)]


@pytest.mark.parametrize("seed", range(200))
def test_arithmetic_is_exact(seed):
    rng = np.random.default_rng(seed)
    a = QQ(int(rng.integers(-10 ** 6, 10 ** 6)), int(rng.integers(1, 10 ** 6)))
    b = QQ(int(rng.integers(-10 ** 6, 10 ** 6)), int(rng.integers(1, 10 ** 6)))
    assert (a + b) - b == a
    assert parse_rational(format_rational(a)) == a
