from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from sympy.polys.domains import QQ

from src.errors import DimensionError
from src.services.matrices import RatMatrix, Vector, echelon_basis
from src.services.rationals import rational


def unit_vector(dim: int, index: int) -> Vector:
    return tuple(QQ.one if k == index else QQ.zero for k in range(dim))


def zero_vector(dim: int) -> Vector:
    return (QQ.zero,) * dim


@dataclass(frozen=True)
class LieAlgebra:
    """
    Structure constants c_ij^k on a labelled basis, stored for i < j only so that
    antisymmetry holds by construction. ``brackets`` keeps the nonzero brackets
    sorted by (i, j); ``name`` does not take part in equality.
    """
    dim: int
    labels: tuple[str, ...]
    brackets: tuple[tuple[tuple[int, int], Vector], ...]
    name: str = field(default="", compare=False)
    _table: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("a Lie algebra needs dimension at least 1")
        if len(self.labels) != self.dim:
            raise DimensionError(f"{len(self.labels)} basis labels for dimension {self.dim}")
        if len(set(self.labels)) != self.dim:
            raise DimensionError("basis labels must be distinct")
        table = {}
        for (i, j), vector in self.brackets:
            if not 0 <= i < j < self.dim:
                raise DimensionError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {self.dim}")
            if len(vector) != self.dim:
                raise DimensionError(f"bracket [{i},{j}] has {len(vector)} coefficients, expected {self.dim}")
            if (i, j) in table:
                raise DimensionError(f"bracket [{i},{j}] given twice")
            table[(i, j)] = vector
        object.__setattr__(self, "_table", table)

    @classmethod
    def from_brackets(cls, labels: Sequence[str], brackets: Mapping[tuple[int, int], Sequence],
                      name: str = "") -> "LieAlgebra":
        """
        Build from a map (i, j) -> coefficient vector; zero brackets are dropped.

        :param labels: Basis labels.
        :type labels: Sequence[str]
        :param brackets: [e_i, e_j] = sum_k vector[k] e_k for i < j.
        :type brackets: Mapping[tuple[int, int], Sequence]
        :param name: Display name.
        :type name: str
        :return: The algebra (Jacobi is not checked here).
        :rtype: LieAlgebra
        """
        entries = []
        for (i, j), vector in sorted(brackets.items()):
            converted = tuple(rational(v) for v in vector)
            if any(converted):
                entries.append(((i, j), converted))
        return cls(len(labels), tuple(labels), tuple(entries), name)

    def structure(self, i: int, j: int) -> Vector:
        """
        Coefficient vector of [e_i, e_j] for any i, j.
        """
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._table.get((i, j), zero_vector(self.dim))
        return tuple(-v for v in self._table.get((j, i), zero_vector(self.dim)))

    def constant(self, i: int, j: int, k: int) -> object:
        return self.structure(i, j)[k]

    def nonzero_pairs(self) -> Iterable[tuple[int, int]]:
        return self._table.keys()


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of Q^n held by its reduced echelon basis, so equality is equality
    of subspaces.
    """
    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient:
                raise DimensionError(f"vector of length {len(v)} in a space of dimension {ambient}")
        return cls(ambient, tuple(echelon_basis(vectors, ambient)))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, tuple(unit_vector(ambient, k) for k in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(k for k, v in enumerate(vec) if v) for vec in self.basis]

    def contains(self, vector: Sequence) -> bool:
        if len(vector) != self.ambient:
            raise DimensionError(f"vector of length {len(vector)} in a space of dimension {self.ambient}")
        return Subspace.span(list(self.basis) + [vector], self.ambient).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient).dim == self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def complement_indices(self) -> list[int]:
        """
        Standard basis indices that complete the echelon basis to a basis of Q^n.
        """
        pivots = set(self.pivots)
        return [k for k in range(self.ambient) if k not in pivots]


@dataclass(frozen=True)
class LinMap:
    """
    Linear map on basis coordinates: D(x) = matrix @ x.
    """
    matrix: RatMatrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise DimensionError("a linear map of an algebra must be square")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def apply(self, vector: Sequence) -> Vector:
        return self.matrix.apply(vector)

    def image(self, index: int) -> Vector:
        return self.matrix.column(index)
