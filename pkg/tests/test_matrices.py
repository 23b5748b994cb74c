import numpy as np
import pytest
from pydantic import ValidationError
from sympy.polys.domains import QQ

from src.config.config import Settings
from src.errors import DimensionError
from src.services.matrices import (PolyMatrix, RatMatrix, kernel_basis, poly_matrix_rank_generic, rank,
                                   sample_points, sparse_rank_mod_p, symbolic_rank)
from src.services.polynomials import poly_ring, variable


def random_matrix(rng, nrows, ncols, low=-3, high=3):
    values = rng.integers(low, high, size=(nrows, ncols), endpoint=True)
    dens = rng.integers(1, 4, size=(nrows, ncols), endpoint=True)
    return RatMatrix.from_rows([[QQ(int(v), int(d)) for v, d in zip(r, s)] for r, s in zip(values, dens)])


def test_rank_examples():
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(RatMatrix.zeros(3, 3)) == 0
    assert rank(RatMatrix.from_rows([[0, 1], [-1, 0], [0, 0]])) == 2


def test_rank_of_dependent_rows():
    M = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], ["1/2", 1, "3/2"]])
    assert rank(M) == 1


def test_kernel_basis_examples():
    assert kernel_basis(RatMatrix.identity(2)) == []
    assert kernel_basis(RatMatrix.from_rows([[1, 0, -1]])) == [(1, 0, 1), (0, 1, 0)]
    assert kernel_basis(RatMatrix.zeros(2, 2)) == [(1, 0), (0, 1)]


def test_kernel_basis_is_normalized():
    M = RatMatrix.from_rows([["1/2", "-1/3", 0]])
    (first, second) = kernel_basis(M)
    assert first == (2, 3, 0)
    assert second == (0, 0, 1)


def test_matrix_shape_errors():
    with pytest.raises(DimensionError):
        RatMatrix(2, 2, ((QQ(1), QQ(0)),))
    with pytest.raises(DimensionError):
        RatMatrix.identity(2) @ RatMatrix.identity(3)
    with pytest.raises(DimensionError):
        RatMatrix.identity(2).apply([QQ(1)])


def test_block_diagonal_and_transpose():
    A = RatMatrix.from_rows([[1, 2], [3, 4]])
    B = RatMatrix.block_diagonal(A, RatMatrix.diagonal([5]))
    assert B.rows[2] == (0, 0, 5)
    assert B.transpose().rows[0] == (1, 3, 0)
    assert B.trace() == 10


def test_generic_rank_examples():
    x0 = variable(1, 0)
    M = PolyMatrix.from_rows(1, [[0, x0], [-x0, 0]])
    assert poly_matrix_rank_generic(M, seed=0) == 2
    assert poly_matrix_rank_generic(PolyMatrix.zeros(2, 3, 3), seed=0) == 0


def test_generic_rank_of_heisenberg_poisson_matrix():
    R = poly_ring(3)
    x0 = R.gens[0]
    M = PolyMatrix.from_rows(3, [[0, 0, 0], [0, 0, x0], [0, -x0, 0]])
    assert poly_matrix_rank_generic(M, seed=0) == 2
    assert symbolic_rank(M) == 2


def test_symbolic_rank_detects_polynomial_dependence():
    x0, x1 = poly_ring(2).gens
    M = PolyMatrix.from_rows(2, [[x0, x1], [x0 * x1, x1 ** 2]])
    assert symbolic_rank(M) == 1
    assert poly_matrix_rank_generic(M, seed=3) == 1


def test_sample_points_are_seeded():
    assert sample_points(3, 7, 5, 20) == sample_points(3, 7, 5, 20)
    assert all(1 <= v <= 2 ** 20 for point in sample_points(3, 7, 5, 20) for v in point)


def test_negative_seeds_are_accepted():
    assert sample_points(2, -1, 4, 20) == sample_points(2, -1, 4, 20)
    assert sample_points(2, -1, 4, 20) == sample_points(2, 2 ** 64 - 1, 4, 20)
    x, y = poly_ring(2).gens
    M = PolyMatrix.from_rows(2, [[0, x], [-x, 0], [y, y]])
    assert poly_matrix_rank_generic(M, seed=-7) == 2


@pytest.mark.parametrize("bits", [0, 63, 64])
def test_sample_bits_out_of_range(bits):
    with pytest.raises(ValueError):
        sample_points(2, 0, 3, bits)


def test_sample_bits_setting_is_bounded():
    assert Settings(RANK_SAMPLE_BITS=62).RANK_SAMPLE_BITS == 62
    with pytest.raises(ValidationError):
        Settings(RANK_SAMPLE_BITS=63)


@pytest.mark.parametrize("seed", range(200))
def test_rank_nullity_and_transpose(seed):
    rng = np.random.default_rng(seed)
    nrows, ncols = (int(v) for v in rng.integers(1, 6, size=2, endpoint=True))
    M = random_matrix(rng, nrows, ncols)
    if rng.random() < 0.5 and nrows > 1:
        rows = list(M.rows)
        rows[-1] = tuple(a + b for a, b in zip(rows[0], rows[1 % nrows]))
        M = RatMatrix(nrows, ncols, tuple(rows))
    kernel = kernel_basis(M)
    assert rank(M) == rank(M.transpose())
    assert rank(M) + len(kernel) == ncols
    for v in kernel:
        assert not any(M.apply(v))
    assert sparse_rank_mod_p(({j: v for j, v in enumerate(r) if v} for r in M.rows), ncols) <= rank(M)


@pytest.mark.parametrize("seed", range(200))
def test_generic_rank_bounds_evaluations(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 4, endpoint=True))
    R = poly_ring(n)
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            coeffs = rng.integers(-1, 1, size=n, endpoint=True)
            row.append(sum((int(c) * x for c, x in zip(coeffs, R.gens)), R.zero))
        rows.append(row)
    M = PolyMatrix.from_rows(n, rows)
    generic = poly_matrix_rank_generic(M, seed=seed)
    point = tuple(QQ(int(v)) for v in rng.integers(-5, 5, size=n, endpoint=True))
    assert rank(M.evaluate(point)) <= generic
    assert generic == symbolic_rank(M)
