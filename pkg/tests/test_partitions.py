import math
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crpencils.partitions import (
    BoxPosition,
    GroupSpec,
    conjugate,
    contains,
    family_sizes,
    gl_dim,
    hook_family_rank,
    horizontal_strips,
    lr_coefficient,
    normalize,
    pieri_add,
    size,
    so_module_dim,
    sp_module_dim,
    weyl_dim,
)


def partitions_of(n, max_rows=None):
    """All partitions of n, brute force."""
    if max_rows is None:
        max_rows = n
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_rows:
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(n, n, [])
    return out


small_partitions = st.integers(0, 6).flatmap(
    lambda n: st.sampled_from(partitions_of(n) or [()])
)


class TestBasics:
    def test_normalize(self):
        assert normalize((3, 1, 0, 0)) == (3, 1)
        assert normalize(()) == ()

    def test_conjugate(self):
        assert conjugate((3, 2)) == (2, 2, 1)
        assert conjugate(()) == ()

    @given(small_partitions)
    def test_conjugate_involution(self, mu):
        assert conjugate(conjugate(mu)) == mu

    def test_contains(self):
        assert contains((3, 2), (2, 2))
        assert not contains((3, 2), (1, 1, 1))


class TestPieri:
    def test_row_shape(self):
        assert pieri_add((2,), 3) == [
            ((3,), BoxPosition(1, 3)),
            ((2, 1), BoxPosition(2, 1)),
        ]

    def test_row_limit(self):
        assert pieri_add((2,), 1) == [((3,), BoxPosition(1, 3))]

    @given(small_partitions, st.integers(1, 5))
    def test_boxes_are_consistent(self, mu, max_rows):
        for nu, box in pieri_add(mu, max_rows):
            assert size(nu) == size(mu) + 1
            assert contains(nu, mu)
            assert len(nu) <= max_rows
            r = box.row - 1
            assert nu[r] == box.col
            assert (mu[r] if r < len(mu) else 0) == box.col - 1

    @given(small_partitions, st.integers(1, 5))
    def test_all_additions_found(self, mu, max_rows):
        got = {nu for nu, _ in pieri_add(mu, max_rows)}
        expect = {
            lam
            for lam in partitions_of(size(mu) + 1, max_rows)
            if contains(lam, mu)
        }
        assert got == expect


class TestHorizontalStrips:
    def test_anchor(self):
        assert set(horizontal_strips((2, 2), 2)) == {(2,)}
        assert set(horizontal_strips((2, 1), 1)) == {(2,), (1, 1)}

    @given(small_partitions, st.integers(0, 4))
    def test_strip_condition(self, mu, k):
        if k > size(mu):
            with pytest.raises(ValueError):
                horizontal_strips(mu, k)
            return
        for alpha in horizontal_strips(mu, k):
            assert size(alpha) == size(mu) - k
            padded = list(alpha) + [0] * (len(mu) - len(alpha))
            for i in range(len(mu)):
                lo = mu[i + 1] if i + 1 < len(mu) else 0
                assert lo <= padded[i] <= mu[i]

    @given(small_partitions, st.integers(0, 4))
    def test_matches_brute_force(self, mu, k):
        if k > size(mu):
            return
        got = set(horizontal_strips(mu, k))
        expect = set()
        for alpha in partitions_of(size(mu) - k) or [()]:
            if not contains(mu, alpha):
                continue
            # skew mu/alpha has at most one box per column iff
            # alpha_i >= mu_{i+1}
            pa = list(alpha) + [0] * (len(mu) - len(alpha))
            if all(pa[i] >= mu[i + 1] for i in range(len(mu) - 1)):
                expect.add(alpha)
        assert got == expect


class TestLR:
    def test_known_values(self):
        assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
        assert lr_coefficient((2, 1), (2, 1), (4, 2)) == 1
        assert lr_coefficient((1,), (1,), (2,)) == 1
        assert lr_coefficient((1,), (1,), (1, 1)) == 1
        assert lr_coefficient((2,), (1, 1), (3, 1)) == 1
        assert lr_coefficient((2,), (1, 1), (2, 2)) == 0

    def test_pieri_rule_special_case(self):
        # multiplying by a single row gives multiplicity-free products
        mu = (3, 2)
        for lam in partitions_of(size(mu) + 2):
            c = lr_coefficient(mu, (2,), lam)
            pa = list(mu) + [0] * (len(lam) - len(mu))
            is_hstrip = contains(lam, mu) and all(
                lam[i + 1] <= pa[i] for i in range(len(lam) - 1)
            )
            assert c == (1 if is_hstrip else 0)

    @given(small_partitions, small_partitions)
    @settings(max_examples=40, deadline=None)
    def test_symmetry(self, zeta, eta):
        for lam in partitions_of(size(zeta) + size(eta)) or [()]:
            assert lr_coefficient(zeta, eta, lam) == lr_coefficient(eta, zeta, lam)

    @given(small_partitions, small_partitions, st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_dimension_expansion(self, zeta, eta, n):
        # dim(S_zeta x S_eta) = sum_lam c_{zeta,eta}^lam dim S_lam
        lhs = gl_dim(zeta, n) * gl_dim(eta, n)
        rhs = sum(
            lr_coefficient(zeta, eta, lam) * gl_dim(lam, n)
            for lam in partitions_of(size(zeta) + size(eta)) or [()]
        )
        assert lhs == rhs


class TestGLDim:
    def test_anchors(self):
        assert gl_dim((2,), 3) == 6
        assert gl_dim((2, 1), 3) == 8
        assert gl_dim((2, 1), 4) == 20
        assert gl_dim((2, 1, 1), 4) == 15
        assert gl_dim((2, 1, 1), 6) == 105
        assert gl_dim((2, 1, 1, 1), 6) == 84
        assert gl_dim((3, 1, 1), 5) == 126
        assert gl_dim((3, 2, 1), 5) == 280
        assert gl_dim((3, 1, 1), 6) == 336
        assert gl_dim((3, 2, 1), 6) == 896
        assert gl_dim((2, 2, 2, 2, 2), 10) == 19404
        assert gl_dim((2, 2, 2, 2, 2, 1, 1), 10) == 20790

    def test_negative_weight_shift(self):
        assert gl_dim((3, 1, 0), 3) == 15
        assert gl_dim((2, 0, -1), 3) == gl_dim((3, 1, 0), 3)
        assert gl_dim((1, 0, 0, -1), 4) == 15  # adjoint of sl4 plus trace... sl4 part

    def test_too_many_rows(self):
        assert gl_dim((1, 1, 1, 1), 3) == 0

    @given(small_partitions, st.integers(1, 5))
    def test_matches_weyl(self, lam, n):
        if len(lam) > n:
            return
        assert gl_dim(lam, n) == weyl_dim(GroupSpec("GL", n), lam)

    @given(small_partitions, st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_branching_identity(self, mu, n):
        # restriction GL(n+1) -> GL(n): dim S_mu(C^{n+1})
        # = sum over horizontal strips removed of dim of the smaller module
        total = 0
        for k in range(size(mu) + 1):
            for alpha in horizontal_strips(mu, k):
                total += gl_dim(alpha, n)
        assert total == gl_dim(mu, n + 1)


class TestWeylDim:
    def test_sp_anchors(self):
        assert weyl_dim(GroupSpec("Sp", 6), (1, 1)) == 14
        assert weyl_dim(GroupSpec("Sp", 4), (1, 1)) == 5
        assert weyl_dim(GroupSpec("Sp", 6), (1,)) == 6
        assert weyl_dim(GroupSpec("Sp", 6), (2,)) == 21

    def test_so_odd_anchors(self):
        assert weyl_dim(GroupSpec("SO", 5), (1,)) == 5
        assert weyl_dim(GroupSpec("SO", 5), (1, 1)) == 10  # adjoint so5
        assert weyl_dim(GroupSpec("SO", 7), (1, 1, 1)) == 35

    def test_so_even_anchors(self):
        assert weyl_dim(GroupSpec("SO", 6), (1,)) == 6
        assert weyl_dim(GroupSpec("SO", 6), (1, 1)) == 15  # adjoint so6
        assert weyl_dim(GroupSpec("SO", 6), (3, 2, 1)) == 256
        assert weyl_dim(GroupSpec("SO", 6), (3, 2, -1)) == 256
        # a full first column splits the O(6) module; each half is 126
        assert weyl_dim(GroupSpec("SO", 6), (3, 1, 1)) == 126

    def test_spin_anchors(self):
        # half-spin modules of Spin(10) are 16-dimensional
        g = GroupSpec("Spin", 10)
        assert weyl_dim(g, (1, 1, 1, 1, 1), doubled=True) == 16
        assert weyl_dim(g, (1, 1, 1, 1, -1), doubled=True) == 16
        # spin module of Spin(2n) has dim 2^n via B-type... check Spin(8)
        assert weyl_dim(GroupSpec("Spin", 8), (1, 1, 1, 1), doubled=True) == 8

    def test_rejects_bad_weights(self):
        with pytest.raises(ValueError):
            weyl_dim(GroupSpec("Sp", 4), (1, 2))
        with pytest.raises(ValueError):
            weyl_dim(GroupSpec("Sp", 4), (1, -1))
        with pytest.raises(ValueError):
            weyl_dim(GroupSpec("SO", 6), (1, -2, 1))

    @given(small_partitions)
    def test_gl_agreement(self, lam):
        n = max(4, len(lam))
        assert weyl_dim(GroupSpec("GL", n), lam) == gl_dim(lam, n)


class TestModuleDims:
    def test_sp(self):
        assert sp_module_dim((1, 1), 6) == 14
        assert sp_module_dim((1, 1, 1, 1), 6) == 0

    def test_so_anchors(self):
        assert so_module_dim((3, 1, 1), 5) == 81
        assert so_module_dim((3, 2, 1), 5) == 105
        assert so_module_dim((3, 1, 1), 6) == 252
        assert so_module_dim((3, 2, 1), 6) == 512
        assert so_module_dim((2,), 5) == 14
        assert so_module_dim((2, 1), 5) == 35

    def test_so_associated_partition(self):
        # first column longer than m/2: transpose down to the associated shape
        assert so_module_dim((1, 1, 1, 1), 5) == so_module_dim((1,), 5)
        assert so_module_dim((1, 1, 1, 1, 1, 1), 5) == 0

    def test_so_traceless_decomposition(self):
        # S^2(C^m) = S_[2] + trivial
        for m in (3, 4, 5, 6, 7):
            assert so_module_dim((2,), m) == gl_dim((2,), m) - 1
        # C^m x C^m = S_[2] + S_[11] + trivial
        for m in (4, 5, 6):
            assert (
                so_module_dim((2,), m) + so_module_dim((1, 1), m) + 1
                == m * m
            )


class TestFamilySizes:
    def test_gl_2_21(self):
        assert family_sizes("GL_2_21", n=2) == (6, 8, 5)
        src, tgt, r = family_sizes("GL_2_21", n=3)
        assert (src, tgt) == (gl_dim((2,), 4), gl_dim((2, 1), 4))
        assert r == 9

    def test_gl_22_221(self):
        assert family_sizes("GL_22_221", n=3) == (20, 20, 14)
        src, tgt, r = family_sizes("GL_22_221", n=4)
        assert (src, tgt) == (gl_dim((2, 2), 5), gl_dim((2, 2, 1), 5))

    def test_gl_hook(self):
        assert family_sizes("GL_hook", a=1, b=1, n=3) == (20, 15, 11)
        assert family_sizes("GL_hook", a=1, b=0, n=2) == (6, 8, 5)

    def test_hook_rank_consistency(self):
        # b=0 reduces to the (2)->(2,1) family rank n(n+3)/2
        for n in range(1, 8):
            assert hook_family_rank(n, 0) == (n * n + 3 * n) // 2

    def test_hook_rank_summand_identity(self):
        # rank = dim Lambda^{b+1} C^n + dim S_{(2,1^b)} C^n
        for n in range(2, 8):
            for b in range(0, n):
                expect = gl_dim((1,) * (b + 1), n) + gl_dim((2,) + (1,) * b, n)
                assert hook_family_rank(n, b) == expect

    def test_so_2_21(self):
        assert family_sizes("SO_2_21", m=3) == (5, 5, 4)
        src, tgt, r = family_sizes("SO_2_21", m=5)
        assert src == so_module_dim((2,), 5)
        assert tgt == so_module_dim((2, 1), 5)
        assert r == src - 1

    def test_so_311_321(self):
        src, tgt, cork = family_sizes("SO_311_321", m=5)
        assert (src, tgt) == (81, 105)
        assert cork == math.comb(4, 3) + math.comb(4, 2)
        src6, tgt6, cork6 = family_sizes("SO_311_321", m=6)
        assert (src6, tgt6) == (252, 512)
        assert cork6 == math.comb(5, 3) + math.comb(5, 2)

    def test_unknown(self):
        with pytest.raises(ValueError):
            family_sizes("nope")
