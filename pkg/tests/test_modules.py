import random
from fractions import Fraction
from itertools import combinations

import pytest

from crpencils.linalg import qq_kernel
from crpencils.modules import (
    a_vector,
    beta_pairing,
    clifford_action,
    contract,
    form_lie_basis,
    gamma_pairing,
    lie_action,
    orthogonal_form,
    orthogonal_module,
    pairing,
    schur_module,
    spin_lie_action,
    spin_lie_generators,
    spin_lie_on_w,
    spin_space,
    symplectic_form,
    symplectic_module,
)
from crpencils.partitions import gl_dim, so_module_dim, sp_module_dim
from crpencils.tensors import gl_generator_matrices


def partitions_up_to(n, max_rows):
    out = []

    def rec(remaining, maxpart, acc):
        if acc:
            out.append(tuple(acc))
        if remaining == 0 or len(acc) == max_rows:
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(n, n, [])
    return sorted(set(out))


def random_tensor_in(mod, rng, nnz=3):
    out = {}
    for _ in range(nnz):
        i = rng.randrange(mod.dim)
        c = Fraction(rng.randint(-4, 4))
        if c:
            for w, x in mod.span.basis[i].items():
                v = out.get(w, Fraction(0)) + c * x
                if v:
                    out[w] = v
                else:
                    del out[w]
    return out


class TestSchurModules:
    def test_dims_small(self):
        for v in range(1, 5):
            for lam in partitions_up_to(4, v):
                assert schur_module(lam, v).dim == gl_dim(lam, v)

    def test_dims_degree_five(self):
        for lam in partitions_up_to(5, 5):
            if sum(lam) == 5:
                assert schur_module(lam, 5).dim == gl_dim(lam, 5)

    def test_natural_module(self):
        m = schur_module((1,), 3)
        assert m.dim == 3

    def test_rejects_too_many_rows(self):
        with pytest.raises(ValueError):
            schur_module((1, 1, 1), 2)

    def test_gl_stability(self):
        rng = random.Random(0)
        for lam, v in [((2, 1), 3), ((2, 2), 4), ((3, 1), 4)]:
            mod = schur_module(lam, v)
            for X in gl_generator_matrices(v):
                t = random_tensor_in(mod, rng)
                assert mod.span.contains(lie_action(X, t))

    def test_identity_acts_by_degree(self):
        mod = schur_module((2, 1), 3)
        one = tuple(tuple(1 if i == j else 0 for j in range(3)) for i in range(3))
        t = mod.span.basis[0]
        got = lie_action(one, t)
        expect = {w: 3 * c for w, c in t.items()}
        assert got == expect


class TestForms:
    def test_gram_shapes(self):
        w = symplectic_form(6)
        assert w.value(0, 1) == 1 and w.value(1, 0) == -1
        q = orthogonal_form(5)
        assert q.value(0, 1) == q.value(1, 0) == 1 and q.value(4, 4) == 1
        assert q.value(0, 0) == 0

    def test_lie_basis_preserves_form(self):
        for form in (symplectic_form(4), orthogonal_form(5), orthogonal_form(6)):
            g = form.gram
            n = form.dim
            basis = form_lie_basis(form)
            assert len(basis) == (n * (n + 1) // 2 if form.kind == "symplectic" else n * (n - 1) // 2)
            for X in basis:
                for i in range(n):
                    for j in range(n):
                        lhs = sum(X[k][i] * g[k][j] + g[i][k] * X[k][j] for k in range(n))
                        assert lhs == 0

    def test_dual_tensor_invariant(self):
        for form in (symplectic_form(4), orthogonal_form(5)):
            qhat = form.dual_tensor()
            for X in form_lie_basis(form):
                assert lie_action(X, qhat) == {}

    def test_pairing_matches_gram(self):
        form = orthogonal_form(4)
        t = {(0, 2): Fraction(1)}
        u = {(1, 3): Fraction(2)}
        assert pairing(t, u, form) == 2


class TestFormModules:
    def test_symplectic_dims(self):
        assert symplectic_module((1, 1), 6).dim == 14
        assert symplectic_module((1, 1, 1), 6).dim == 14
        assert symplectic_module((1,), 4).dim == 4
        assert symplectic_module((2,), 4).dim == sp_module_dim((2,), 4)

    def test_orthogonal_dims(self):
        assert orthogonal_module((2,), 3).dim == 5
        for m in (3, 4, 5):
            assert orthogonal_module((2,), m).dim == (m * m + m - 2) // 2
            assert orthogonal_module((2, 1), m).dim == (m ** 3 - 4 * m) // 3

    def test_orthogonal_dims_hooks(self):
        assert orthogonal_module((3, 1, 1), 5).dim == 81
        assert orthogonal_module((3, 2, 1), 5).dim == 105

    def test_contractions_vanish(self):
        for mod in (symplectic_module((1, 1), 6), orthogonal_module((2, 1), 4)):
            d = mod.degree
            for t in mod.span.basis:
                for s1, s2 in combinations(range(d), 2):
                    assert contract(t, s1, s2, mod.form) == {}

    def test_lie_stability(self):
        rng = random.Random(1)
        for mod in (symplectic_module((1, 1), 6), orthogonal_module((2,), 5)):
            gens = form_lie_basis(mod.form)
            for _ in range(10):
                X = gens[rng.randrange(len(gens))]
                t = random_tensor_in(mod, rng)
                assert mod.span.contains(lie_action(X, t))

    def test_degree_one(self):
        assert symplectic_module((1,), 6).dim == 6


def basis_vector_w(j, n):
    w = [0] * (2 * n)
    w[j] = 1
    return w


class TestSpin:
    def test_dims(self):
        for n, d in [(2, 2), (5, 16), (6, 32)]:
            ss = spin_space(n)
            assert len(ss.even_basis) == len(ss.odd_basis) == d

    def test_clifford_basics(self):
        n = 3
        one = {(): Fraction(1)}
        assert clifford_action(basis_vector_w(0, n), one, n) == {(0,): Fraction(1)}
        e1 = {(0,): Fraction(1)}
        assert clifford_action(basis_vector_w(n + 0, n), e1, n) == one

    def test_clifford_relation_basis(self):
        # w.w.s = q(w) s; basis vectors of W are isotropic in split coordinates
        for n in (2, 3, 5):
            ss = spin_space(n)
            for j in range(2 * n):
                w = basis_vector_w(j, n)
                for I in ss.even_basis + ss.odd_basis:
                    s = {I: Fraction(1)}
                    assert clifford_action(w, clifford_action(w, s, n), n) == {}

    def test_clifford_relation_mixed(self):
        n = 4
        rng = random.Random(2)
        for _ in range(30):
            w = [rng.randint(-3, 3) for _ in range(2 * n)]
            q = sum(Fraction(w[i]) * w[n + i] for i in range(n))
            I = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
            s = {I: Fraction(1)}
            got = clifford_action(w, clifford_action(w, s, n), n)
            assert got == ({I: q} if q else {})

    def test_gamma_bilinear(self):
        n = 5
        rng = random.Random(3)
        ss = spin_space(n)

        def rand_even():
            return {
                I: Fraction(rng.randint(-3, 3))
                for I in ss.even_basis
                if rng.random() < 0.5
            }

        s, t, t2 = rand_even(), rand_even(), rand_even()
        lhs = gamma_pairing(1, s, {k: t.get(k, Fraction(0)) + t2.get(k, Fraction(0)) for k in set(t) | set(t2)}, n)
        r1, r2 = gamma_pairing(1, s, t, n), gamma_pairing(1, s, t2, n)
        for J in set(lhs) | set(r1) | set(r2):
            assert lhs.get(J, Fraction(0)) == r1.get(J, Fraction(0)) + r2.get(J, Fraction(0))

    def test_pure_spinors_in_quadric(self):
        # a vanishes on every basis pure spinor e_I (and scalar multiples)
        n = 5
        ss = spin_space(n)
        for I in ss.even_basis:
            delta = {I: Fraction(3)}
            assert gamma_pairing(1, delta, delta, n) == {}
            assert all(x == 0 for x in a_vector(delta, n))

    def test_a_vector_in_kernel(self):
        n = 5
        ss = spin_space(n)
        rng = random.Random(4)
        for _ in range(10):
            delta = {
                I: Fraction(rng.randint(-5, 5)) for I in ss.even_basis
            }
            delta = {k: v for k, v in delta.items() if v}
            av = a_vector(delta, n)
            assert clifford_action(av, delta, n) == {}

    def test_spin_lie_consistency(self):
        # [F_ab, w].s = F(w.s) - w.(F s)
        n = 3
        ss = spin_space(n)
        rng = random.Random(5)
        for a, b in spin_lie_generators(n):
            m = spin_lie_on_w(a, b, n)
            for _ in range(3):
                j = rng.randrange(2 * n)
                I = ss.even_basis[rng.randrange(len(ss.even_basis))]
                s = {I: Fraction(1)}
                w = basis_vector_w(j, n)
                lhs = {}
                from crpencils.tensors import tensor_iadd

                for i in range(2 * n):
                    if m[i][j]:
                        tensor_iadd(lhs, clifford_action(basis_vector_w(i, n), s, n), m[i][j])
                rhs = {}
                tensor_iadd(rhs, spin_lie_action(a, b, clifford_action(w, s, n), n), Fraction(1))
                tensor_iadd(rhs, clifford_action(w, spin_lie_action(a, b, s, n), n), Fraction(-1))
                assert lhs == rhs

    def test_beta_nondegenerate_pairing(self):
        n = 5
        ss = spin_space(n)
        # for odd n beta pairs Delta+ with Delta- (complement flips parity)
        mat = [
            [beta_pairing({I: Fraction(1)}, {J: Fraction(1)}, n) for J in ss.odd_basis]
            for I in ss.even_basis
        ]
        assert len(qq_kernel(mat, len(ss.even_basis))) == 0
