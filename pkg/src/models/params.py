from dataclasses import dataclass

from sympy.polys.domains import QQ

from src.errors import CatalogError
from src.models.enums import ThetaKind
from src.services.matrices import RatMatrix
from src.services.rationals import Rational, format_rational

# Stands in for an irrational theta inside the rational matrix A; spectral
# analysis reads the tag instead.
THETA_PLACEHOLDER = QQ(1, 2)


@dataclass(frozen=True)
class ThetaTag:
    kind: ThetaKind
    value: Rational | None = None
    name: str | None = None

    @classmethod
    def rational(cls, value: Rational) -> "ThetaTag":
        return cls(ThetaKind.rational, value=value)

    @classmethod
    def symbolic_irrational(cls, name: str) -> "ThetaTag":
        return cls(ThetaKind.symbolic_irrational, name=name)

    @property
    def is_irrational(self) -> bool:
        return self.kind == ThetaKind.symbolic_irrational

    def matrix_value(self) -> Rational:
        return THETA_PLACEHOLDER if self.is_irrational else self.value

    def __str__(self):
        return self.name if self.is_irrational else format_rational(self.value)


@dataclass(frozen=True)
class ExFParams:
    """
    Parameters of h_{2n+1} extended by the derivation B = diag(c, A, c I_n - A^T).
    """
    n: int
    A: RatMatrix
    c: Rational
    theta_tag: ThetaTag | None = None

    def __post_init__(self):
        if self.n < 1:
            raise CatalogError("n must be at least 1")
        if (self.A.nrows, self.A.ncols) != (self.n, self.n):
            raise CatalogError(f"A must be {self.n}x{self.n}")
        if self.theta_tag is not None and self.n != 4:
            raise CatalogError("the theta template diag(J, theta J) needs n = 4")
