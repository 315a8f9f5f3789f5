import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crpencils.linalg import (
    DEFAULT_PRIME,
    Subspace,
    bareiss_rank,
    image_subspace,
    kernel_subspace,
    mat_mod,
    modp_kernel,
    modp_matmul,
    modp_rank,
    modp_rref,
    modp_solve,
    qq_kernel,
    qq_rank,
    qq_rref,
    qq_solve,
    reduce_mod,
)

PRIMES_31BIT = [2147483629, 2147483587, 2147483563]

int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def rand_matrix(rng, r, c, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]


class TestRank:
    def test_zero_and_identity(self):
        assert qq_rank([[0] * 3 for _ in range(3)]) == 0
        assert qq_rank([[1 if i == j else 0 for j in range(4)] for i in range(4)]) == 4
        assert modp_rank(np.eye(4, dtype=np.int64), DEFAULT_PRIME) == 4

    def test_fraction_entries(self):
        m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(2)]]
        assert qq_rank(m) == 2
        assert qq_rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]) == 1

    @given(int_matrices)
    def test_bareiss_matches_rref(self, m):
        assert bareiss_rank(m) == len(qq_rref(m)[0])

    @given(int_matrices)
    def test_rank_nullity_qq(self, m):
        ncols = len(m[0])
        assert qq_rank(m) + len(qq_kernel(m)) == ncols

    @given(int_matrices, st.sampled_from(PRIMES_31BIT))
    def test_rank_nullity_modp(self, m, p):
        a = mat_mod(m, p)
        assert modp_rank(a, p) + modp_kernel(a, p).shape[0] == a.shape[1]

    @given(int_matrices)
    @settings(max_examples=30)
    def test_modular_consistency(self, m):
        # small integer entries: no 31-bit prime divides a nonzero minor here
        r = qq_rank(m)
        for p in PRIMES_31BIT:
            assert modp_rank(mat_mod(m, p), p) == r


class TestKernelSolve:
    @given(int_matrices)
    def test_kernel_vectors_annihilate(self, m):
        for v in qq_kernel(m):
            for row in m:
                assert sum(a * b for a, b in zip(row, v)) == 0

    @given(int_matrices, st.sampled_from(PRIMES_31BIT))
    def test_modp_kernel_annihilates(self, m, p):
        a = mat_mod(m, p)
        ker = modp_kernel(a, p)
        if ker.size:
            assert not modp_matmul(a, ker.T, p).any()

    @given(int_matrices, st.integers(0, 10_000))
    def test_solve_consistent_system(self, m, seed):
        rng = random.Random(seed)
        ncols = len(m[0])
        x0 = [rng.randint(-5, 5) for _ in range(ncols)]
        rhs = [sum(a * b for a, b in zip(row, x0)) for row in m]
        x = qq_solve(m, rhs)
        assert x is not None
        assert [sum(a * b for a, b in zip(row, x)) for row in m] == rhs

    def test_solve_inconsistent(self):
        assert qq_solve([[1, 1], [1, 1]], [1, 2]) is None
        p = DEFAULT_PRIME
        assert modp_solve(np.array([[1, 1], [1, 1]]), np.array([1, 2]), p) is None

    def test_modp_solve_roundtrip(self):
        p = DEFAULT_PRIME
        rng = random.Random(7)
        a = np.array(rand_matrix(rng, 5, 7), dtype=np.int64)
        x0 = np.array([rng.randint(0, p - 1) for _ in range(7)], dtype=np.int64)
        rhs = modp_matmul(a, x0.reshape(-1, 1), p).ravel()
        x = modp_solve(a, rhs, p)
        assert x is not None
        assert (modp_matmul(a, x.reshape(-1, 1), p).ravel() == rhs).all()

    def test_reduce_mod(self):
        assert reduce_mod(Fraction(1, 2), 7) == 4
        with pytest.raises(ZeroDivisionError):
            reduce_mod(Fraction(1, 7), 7)


class TestSubspace:
    def test_canonical_form(self):
        rng = random.Random(3)
        vecs = rand_matrix(rng, 3, 6)
        s1 = Subspace.from_vectors(vecs, 6)
        # scramble with invertible combinations
        mixed = [
            [2 * a + b for a, b in zip(vecs[0], vecs[1])],
            [a - 3 * c for a, c in zip(vecs[0], vecs[2])],
            vecs[2],
        ]
        s2 = Subspace.from_vectors(mixed, 6)
        if s1.dim == 3:
            assert s1 == s2

    def test_contains(self):
        s = Subspace.from_vectors([[1, 0, 1], [0, 1, 1]], 3)
        assert s.contains([1, 1, 2])
        assert not s.contains([1, 1, 1])
        sp = Subspace.from_vectors([[1, 0, 1], [0, 1, 1]], 3, p=7)
        assert sp.contains([1, 1, 2])
        assert not sp.contains([1, 1, 1])

    def test_intersect_trivial(self):
        s = Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], 3)
        assert s.intersect(s) == s
        e1 = Subspace.from_vectors([[1, 0, 0]], 3)
        e2 = Subspace.from_vectors([[0, 1, 0]], 3)
        assert e1.intersect(e2) == Subspace.zero(3)

    def test_intersect_generic_dimension(self):
        # random 6-dim subspaces of a 10-dim space over F_p meet in dim 2
        p = DEFAULT_PRIME
        rng = random.Random(11)
        hits = 0
        for _ in range(5):
            a = Subspace.from_vectors(rand_matrix(rng, 6, 10, 0, p - 1), 10, p)
            b = Subspace.from_vectors(rand_matrix(rng, 6, 10, 0, p - 1), 10, p)
            assert a.dim == b.dim == 6
            got = a.intersect(b)
            assert a.contains_subspace(got) and b.contains_subspace(got)
            if got.dim == 2:
                hits += 1
        assert hits == 5

    def test_intersect_qq(self):
        a = Subspace.from_vectors([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]], 4)
        b = Subspace.from_vectors([[1, 1, 0, 0], [0, 0, 1, 1]], 4)
        got = a.intersect(b)
        assert got == b

    def test_mismatched_ambient(self):
        a = Subspace.from_vectors([[1, 0]], 2)
        b = Subspace.from_vectors([[1, 0, 0]], 3)
        with pytest.raises(ValueError):
            a.intersect(b)

    def test_kernel_image_subspace(self):
        assert kernel_subspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == Subspace.zero(3)
        assert image_subspace([[0, 0], [0, 0]]) == Subspace.zero(2)
        m = [[1, 2, 3], [2, 4, 6]]
        img = image_subspace(m)
        assert img.dim == 1 and img.contains([1, 2])
        ker = kernel_subspace(m, 3)
        assert ker.dim == 2
        for v in ker.basis:
            assert sum(a * b for a, b in zip(m[0], v)) == 0
