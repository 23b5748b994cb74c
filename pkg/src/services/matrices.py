import heapq
import logging
from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy.polys.domains import QQ

from src.config.config import config
from src.errors import DimensionError
from src.services.polynomials import MultiPoly, poly_evaluate, poly_ring
from src.services.rationals import Rational, primitive_integer_vector, rational

logger = logging.getLogger(__name__)

MODULAR_PRIME = 2 ** 61 - 1
SEED_MASK = 2 ** 64 - 1
MAX_SAMPLE_BITS = 62

Vector = tuple[Rational, ...]


@dataclass(frozen=True)
class RatMatrix:
    """
    Dense rectangular matrix of rationals, stored row-major.
    """
    nrows: int
    ncols: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionError(f"rows do not form a {self.nrows}x{self.ncols} matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "RatMatrix":
        converted = tuple(tuple(rational(v) for v in row) for row in rows)
        if ncols is None:
            if not converted:
                raise DimensionError("column count required for a matrix without rows")
            ncols = len(converted[0])
        return cls(len(converted), ncols, converted)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls(nrows, ncols, tuple((QQ.zero,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.diagonal([QQ.one] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        values = [rational(v) for v in values]
        return cls(n, n, tuple(tuple(values[i] if i == j else QQ.zero for j in range(n)) for i in range(n)))

    @classmethod
    def block_diagonal(cls, *blocks: "RatMatrix") -> "RatMatrix":
        size = sum(b.nrows for b in blocks)
        width = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for block in blocks:
            for row in block.rows:
                rows.append((QQ.zero,) * offset + row + (QQ.zero,) * (width - offset - block.ncols))
            offset += block.ncols
        return cls(size, width, tuple(rows))

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int) -> Rational:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.ncols, self.nrows, tuple(self.column(j) for j in range(self.ncols)))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def trace(self) -> Rational:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), QQ.zero)

    def apply(self, vector: Sequence[Rational]) -> Vector:
        """
        Matrix-vector product M v.
        """
        if len(vector) != self.ncols:
            raise DimensionError(f"vector of length {len(vector)} for a matrix with {self.ncols} columns")
        return tuple(sum((a * b for a, b in zip(row, vector) if a and b), QQ.zero) for row in self.rows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        columns = [other.column(j) for j in range(other.ncols)]
        return RatMatrix(self.nrows, other.ncols, tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), QQ.zero) for col in columns)
            for row in self.rows
        ))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.nrows, self.ncols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-QQ.one)

    def scale(self, factor) -> "RatMatrix":
        factor = rational(factor)
        return RatMatrix(self.nrows, self.ncols, tuple(tuple(factor * a for a in row) for row in self.rows))

    def _check_same_shape(self, other: "RatMatrix"):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("matrix shapes differ")


@dataclass(frozen=True)
class PolyMatrix:
    """
    Dense rectangular matrix of polynomials in ``nvars`` variables.
    """
    nvars: int
    nrows: int
    ncols: int
    rows: tuple[tuple[MultiPoly, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionError(f"rows do not form a {self.nrows}x{self.ncols} matrix")

    @classmethod
    def from_rows(cls, nvars: int, rows: Iterable[Iterable[MultiPoly]], ncols: int | None = None) -> "PolyMatrix":
        R = poly_ring(nvars)
        converted = tuple(tuple(R(p) for p in row) for row in rows)
        if ncols is None:
            ncols = len(converted[0]) if converted else 0
        return cls(nvars, len(converted), ncols, converted)

    @classmethod
    def zeros(cls, nvars: int, nrows: int, ncols: int) -> "PolyMatrix":
        zero = poly_ring(nvars).zero
        return cls(nvars, nrows, ncols, tuple((zero,) * ncols for _ in range(nrows)))

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.rows[i][j]

    def evaluate(self, point: Sequence[Rational]) -> RatMatrix:
        """
        Substitute a rational point into every entry.
        """
        if len(point) != self.nvars:
            raise DimensionError(f"point of length {len(point)} for {self.nvars} variables")
        return RatMatrix(self.nrows, self.ncols, tuple(
            tuple(poly_evaluate(p, point) if p else QQ.zero for p in row) for row in self.rows
        ))

    def is_antisymmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(self.nrows) for j in range(i, self.ncols))


def _bareiss_rank(rows: list[list], ncols: int, divide: Callable, weight: Callable, one) -> int:
    """
    Fraction-free (Bareiss) forward elimination; returns the number of pivots.

    Every entry after step k is a (k+1)-minor of the input, so ``divide`` is exact.
    """
    rows = [list(r) for r in rows if any(r)]
    nrows = len(rows)
    rank = 0
    previous = one
    for col in range(ncols):
        if rank == nrows:
            break
        candidates = [i for i in range(rank, nrows) if rows[i][col]]
        if not candidates:
            continue
        pivot_index = min(candidates, key=lambda i: (weight(rows[i][col]), i))
        rows[rank], rows[pivot_index] = rows[pivot_index], rows[rank]
        pivot_row = rows[rank]
        pivot = pivot_row[col]
        for i in range(rank + 1, nrows):
            row = rows[i]
            factor = row[col]
            for j in range(col + 1, ncols):
                value = pivot * row[j]
                if factor and pivot_row[j]:
                    value = value - factor * pivot_row[j]
                row[j] = divide(value, previous) if value else value
            row[col] = row[col] * 0
        previous = pivot
        rank += 1
    return rank


def _integer_rows(M: RatMatrix) -> list[list[int]]:
    rows = []
    for row in M.rows:
        scaled = primitive_integer_vector(row)
        rows.append([int(v.numerator) for v in scaled])
    return rows


def _exact_int_division(a: int, b: int) -> int:
    quotient, remainder = divmod(a, b)
    if remainder:
        raise ArithmeticError("Bareiss division was not exact")
    return quotient


def rank(M: RatMatrix) -> int:
    """
    Exact rank by fraction-free Bareiss elimination over the integers
    (each row is first scaled to coprime integers, which keeps the rank).

    :param M: The matrix.
    :type M: RatMatrix
    :return: The rank.
    :rtype: int
    """
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return _bareiss_rank(_integer_rows(M), M.ncols, _exact_int_division, abs, 1)


def _reduce_against(row: dict[int, Rational], pivots: dict[int, dict[int, Rational]]) -> dict[int, Rational]:
    heap = [k for k in row if k in pivots]
    heapq.heapify(heap)
    while heap:
        k = heapq.heappop(heap)
        factor = row.get(k)
        if not factor:
            continue
        for j, v in pivots[k].items():
            value = row.get(j, QQ.zero) - factor * v
            if value:
                if j not in row and j in pivots:
                    heapq.heappush(heap, j)
                row[j] = value
            else:
                row.pop(j, None)
    return row


def sparse_rref(rows: Iterable[dict[int, Rational]], ncols: int) -> dict[int, dict[int, Rational]]:
    """
    Reduced row echelon form of a row stream, skipping zero entries.

    Rows are maps column -> nonzero value. Returns pivot column -> reduced row
    with a unit pivot. Stops reading rows once the rank reaches ``ncols``.
    """
    pivots: dict[int, dict[int, Rational]] = {}
    for row in rows:
        if len(pivots) == ncols:
            break
        reduced = _reduce_against({k: v for k, v in row.items() if v}, pivots)
        if not reduced:
            continue
        col = min(reduced)
        inverse = QQ.one / reduced[col]
        pivots[col] = {k: v * inverse for k, v in reduced.items()}
    for col in sorted(pivots, reverse=True):
        pivot_row = pivots[col]
        for other_col, other in pivots.items():
            if other_col < col and col in other:
                factor = other[col]
                for j, v in pivot_row.items():
                    value = other.get(j, QQ.zero) - factor * v
                    if value:
                        other[j] = value
                    else:
                        other.pop(j, None)
    return dict(sorted(pivots.items()))


def _sparse_rows(M: RatMatrix) -> Iterable[dict[int, Rational]]:
    for row in M.rows:
        yield {j: v for j, v in enumerate(row) if v}


def echelon_basis(vectors: Iterable[Sequence[Rational]], dim: int) -> list[Vector]:
    """
    Reduced echelon basis (unit pivots, ascending pivot columns) of a span.
    """
    rows = ({j: rational(v) for j, v in enumerate(vec) if v} for vec in vectors)
    pivots = sparse_rref(rows, dim)
    return [tuple(row.get(j, QQ.zero) for j in range(dim)) for row in pivots.values()]


def kernel_basis(M: RatMatrix) -> list[Vector]:
    """
    Basis of the right null space, in reduced echelon order, each vector scaled to
    coprime integers with a positive first nonzero entry.

    :param M: The matrix.
    :type M: RatMatrix
    :return: ``M.ncols - rank(M)`` vectors v with M v = 0.
    :rtype: list[Vector]
    """
    return sparse_kernel_basis(_sparse_rows(M), M.ncols)


def sparse_kernel_basis(rows: Iterable[dict[int, Rational]], ncols: int) -> list[Vector]:
    pivots = sparse_rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    if not free:
        return []
    null_vectors = []
    for f in free:
        vector = [QQ.zero] * ncols
        vector[f] = QQ.one
        for col, row in pivots.items():
            if f in row:
                vector[col] = -row[f]
        null_vectors.append(vector)
    echelon = echelon_basis(null_vectors, ncols)
    return [tuple(primitive_integer_vector(v)) for v in echelon]


def sparse_rank_mod_p(rows: Iterable[dict[int, Rational]], ncols: int, prime: int = MODULAR_PRIME) -> int:
    """
    Rank over F_p of the integer rows obtained by clearing each row's denominators.

    The rank mod p never exceeds the rational rank, so a value of ``ncols``
    certifies a trivial kernel over Q.

    :param rows: Sparse rows, column -> rational.
    :type rows: Iterable[dict[int, Rational]]
    :param ncols: Number of columns.
    :type ncols: int
    :param prime: The modulus.
    :type prime: int
    :return: The rank mod p.
    :rtype: int
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        if len(pivots) == ncols:
            break
        entries = {k: v for k, v in row.items() if v}
        if not entries:
            continue
        common = lcm(*(int(v.denominator) for v in entries.values()))
        reduced = {}
        for k, v in entries.items():
            residue = int((v * common).numerator) % prime
            if residue:
                reduced[k] = residue
        heap = [k for k in reduced if k in pivots]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            factor = reduced.get(k)
            if not factor:
                continue
            for j, v in pivots[k].items():
                value = (reduced.get(j, 0) - factor * v) % prime
                if value:
                    if j not in reduced and j in pivots:
                        heapq.heappush(heap, j)
                    reduced[j] = value
                else:
                    reduced.pop(j, None)
        if not reduced:
            continue
        col = min(reduced)
        inverse = pow(reduced[col], -1, prime)
        pivots[col] = {k: v * inverse % prime for k, v in reduced.items()}
    return len(pivots)


def seeded_rng(seed: int) -> np.random.Generator:
    """
    Generator for any integer seed; negative seeds wrap modulo 2**64.
    """
    return np.random.default_rng(seed & SEED_MASK)


def sample_points(nvars: int, seed: int, count: int, bits: int) -> list[Vector]:
    """
    ``count`` seeded random points with integer coordinates in [1, 2**bits].
    """
    if not 1 <= bits <= MAX_SAMPLE_BITS:
        raise ValueError(f"sample bits must lie in [1, {MAX_SAMPLE_BITS}], got {bits}")
    rng = seeded_rng(seed)
    draws = rng.integers(1, 2 ** bits, size=(count, nvars), endpoint=True)
    return [tuple(QQ(int(x)) for x in row) for row in draws]


def symbolic_rank(M: PolyMatrix) -> int:
    """
    Rank over the rational function field by fraction-free elimination on
    polynomial entries (pivots with the fewest terms first).
    """
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return _bareiss_rank([list(r) for r in M.rows], M.ncols, lambda a, b: a.exquo(b), len,
                         poly_ring(M.nvars).one)


def poly_matrix_rank_generic(M: PolyMatrix, seed: int | None = None, points: int | None = None,
                             bits: int | None = None, symbolic_max_size: int | None = None) -> int:
    """
    Generic rank of a polynomial matrix.

    The rank is the maximum numeric rank over seeded random evaluation points. A
    sampled rank is a lower bound, so it is exact once it reaches min(rows, cols);
    otherwise, for matrices no larger than ``symbolic_max_size``, the value is
    confirmed by exact symbolic elimination.

    :param M: The matrix.
    :type M: PolyMatrix
    :param seed: Seed of the point generator.
    :type seed: int | None
    :param points: Number of evaluation points.
    :type points: int | None
    :param bits: Coordinates are drawn from [1, 2**bits].
    :type bits: int | None
    :param symbolic_max_size: Largest dimension confirmed symbolically.
    :type symbolic_max_size: int | None
    :return: The generic rank.
    :rtype: int
    """
    seed = config.SEED if seed is None else seed
    points = config.RANK_SAMPLE_POINTS if points is None else points
    bits = config.RANK_SAMPLE_BITS if bits is None else bits
    symbolic_max_size = config.SYMBOLIC_RANK_MAX_SIZE if symbolic_max_size is None else symbolic_max_size

    full = min(M.nrows, M.ncols)
    if full == 0 or all(not p for row in M.rows for p in row):
        return 0
    sampled = 0
    for point in sample_points(M.nvars, seed, points, bits):
        sampled = max(sampled, rank(M.evaluate(point)))
        if sampled == full:
            break
    logger.debug("sampled generic rank %d of %d (seed %d)", sampled, full, seed)
    if sampled < full and max(M.nrows, M.ncols) <= symbolic_max_size:
        exact = symbolic_rank(M)
        if exact != sampled:
            logger.warning("sampled rank %d differs from symbolic rank %d; using symbolic", sampled, exact)
        return exact
    return sampled
