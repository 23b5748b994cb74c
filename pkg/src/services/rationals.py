import re
from math import gcd, lcm
from typing import Sequence

from sympy import integer_nthroot
from sympy.polys.domains import QQ

from src.errors import DocumentError

# QQ elements are always reduced with a positive denominator.
Rational = type(QQ.one)

RATIONAL_PATTERN = re.compile(r"^\s*([-−]?)(\d+)(?:/(\d+))?\s*$")


def rational(value) -> Rational:
    """
    Coerce an int, a string "p/q" or a QQ element into a canonical rational.

    :param value: Value to convert.
    :type value: int | str | Rational
    :return: The canonical rational.
    :rtype: Rational
    """
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def parse_rational(text: str) -> Rational:
    """
    Parse "p/q", "p", "-p/q" (ASCII or unicode minus).

    :param text: The rational string.
    :type text: str
    :return: The parsed rational.
    :rtype: Rational
    :raises DocumentError: If the text is not a rational string or q is zero.
    """
    match = RATIONAL_PATTERN.match(text)
    if match is None:
        raise DocumentError(f"not a rational string: {text!r}")
    sign, num, den = match.groups()
    denominator = int(den) if den is not None else 1
    if denominator == 0:
        raise DocumentError(f"zero denominator in {text!r}")
    value = QQ(int(num), denominator)
    return -value if sign else value


def format_rational(value: Rational) -> str:
    """
    Render as "p/q", or "p" when the denominator is 1.

    :param value: The rational.
    :type value: Rational
    :return: The string form.
    :rtype: str
    """
    num, den = int(value.numerator), int(value.denominator)
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def rational_sqrt(value: Rational) -> Rational | None:
    """
    Exact square root of a non-negative rational, or None when it is not a square.
    """
    if value < 0:
        return None
    num_root, num_exact = integer_nthroot(int(value.numerator), 2)
    den_root, den_exact = integer_nthroot(int(value.denominator), 2)
    if num_exact and den_exact:
        return QQ(num_root, den_root)
    return None


def is_rational_square(value: Rational) -> bool:
    return rational_sqrt(value) is not None


def primitive_integer_vector(vector: Sequence[Rational]) -> list[Rational]:
    """
    Scale a rational vector to coprime integers with a positive first nonzero entry.

    :param vector: The vector to normalize.
    :type vector: Sequence[Rational]
    :return: The normalized vector (entries are integral rationals).
    :rtype: list[Rational]
    """
    nonzero = [v for v in vector if v]
    if not nonzero:
        return [QQ.zero for _ in vector]
    common_den = lcm(*(int(v.denominator) for v in nonzero))
    integers = [int((v * common_den).numerator) for v in vector]
    divisor = gcd(*integers)
    if nonzero[0] < 0:
        divisor = -divisor
    return [QQ(x // divisor) for x in integers]
