"""Concrete module realizations: Schur modules, contraction-kernel modules
for the symplectic and orthogonal groups, and spin representations.

Bilinear forms are taken in split (hyperbolic) coordinates so that basis
letters carry torus weights and all kernel computations decompose into small
weight blocks: for Sp(2n) the form is omega = e1^e2 + e3^e4 + ... (consecutive
pairs); for SO(m) the pairs (e1,e2), (e3,e4), ... are hyperbolic and, for odd
m, the last basis vector is non-isotropic with q(e_m) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np

from .linalg import (
    DEFAULT_PRIME,
    modp_independent_rows,
    qq_kernel,
    reduce_mod,
)
from .partitions import (
    GroupSpec,
    Partition,
    check_partition,
    gl_dim,
    size,
    so_module_dim,
    sp_module_dim,
)
from .tensors import (
    GradedSpan,
    SparseTensor,
    Word,
    apply_perms_word,
    content,
    matrix_on_letters,
    semistandard_tableaux,
    tableau_word,
    tensor_iadd,
    young_symmetrizer_perms,
)

ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# bilinear forms in split coordinates


@dataclass(frozen=True)
class FormSpec:
    """A symplectic or symmetric bilinear form with its split-basis data."""

    kind: str  # "symplectic" | "orthogonal"
    dim: int
    gram: tuple[tuple[int, ...], ...]

    def value(self, a: int, b: int) -> int:
        return self.gram[a][b]

    @property
    def torus_rank(self) -> int:
        return (self.dim + 1) // 2

    def letter_weight(self, a: int) -> tuple[int, ...]:
        w = [0] * self.torus_rank
        if self.kind == "orthogonal" and self.dim % 2 and a == self.dim - 1:
            return tuple(w)
        w[a // 2] = 1 if a % 2 == 0 else -1
        return tuple(w)

    def word_weight(self, word: Word) -> tuple[int, ...]:
        w = [0] * self.torus_rank
        for a in word:
            lw = self.letter_weight(a)
            for i, x in enumerate(lw):
                w[i] += x
        return tuple(w)

    def dual_tensor(self) -> SparseTensor:
        """The invariant 2-tensor: q-hat = sum q^{ab} e_a x e_b (inverse Gram)."""
        g = [[Fraction(x) for x in row] for row in self.gram]
        n = self.dim
        inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        # tiny dense inversion
        for c in range(n):
            piv = next(i for i in range(c, n) if g[i][c])
            g[c], g[piv] = g[piv], g[c]
            inv[c], inv[piv] = inv[piv], inv[c]
            f = 1 / g[c][c]
            g[c] = [x * f for x in g[c]]
            inv[c] = [x * f for x in inv[c]]
            for i in range(n):
                if i != c and g[i][c]:
                    f = g[i][c]
                    g[i] = [x - f * y for x, y in zip(g[i], g[c])]
                    inv[i] = [x - f * y for x, y in zip(inv[i], inv[c])]
        return {
            (a, b): inv[a][b] for a in range(n) for b in range(n) if inv[a][b]
        }


@lru_cache(maxsize=None)
def symplectic_form(two_n: int) -> FormSpec:
    if two_n % 2:
        raise ValueError("symplectic form needs even dimension")
    g = [[0] * two_n for _ in range(two_n)]
    for k in range(two_n // 2):
        g[2 * k][2 * k + 1] = 1
        g[2 * k + 1][2 * k] = -1
    return FormSpec("symplectic", two_n, tuple(tuple(r) for r in g))


@lru_cache(maxsize=None)
def orthogonal_form(m: int) -> FormSpec:
    g = [[0] * m for _ in range(m)]
    for k in range(m // 2):
        g[2 * k][2 * k + 1] = 1
        g[2 * k + 1][2 * k] = 1
    if m % 2:
        g[m - 1][m - 1] = 1
    return FormSpec("orthogonal", m, tuple(tuple(r) for r in g))


def form_lie_basis(form: FormSpec) -> list[tuple[tuple[Fraction, ...], ...]]:
    """Basis of the Lie algebra preserving the form: X with X^T G + G X = 0."""
    n = form.dim
    ginv = form.dual_tensor()
    ginv_m = [[ginv.get((i, j), ZERO) for j in range(n)] for i in range(n)]
    sym = form.kind == "symplectic"
    out = []
    for a in range(n):
        brange = range(a, n) if sym else range(a + 1, n)
        for b in brange:
            # S = E_ab + E_ba (Sp) or E_ab - E_ba (SO); X = G^{-1} S
            s = [[ZERO] * n for _ in range(n)]
            s[a][b] += 1
            if sym:
                s[b][a] += 1
            else:
                s[b][a] -= 1
            x = [
                [
                    sum(ginv_m[i][k] * s[k][j] for k in range(n))
                    for j in range(n)
                ]
                for i in range(n)
            ]
            out.append(tuple(tuple(r) for r in x))
    return out


def contract(t: SparseTensor, s1: int, s2: int, form: FormSpec) -> SparseTensor:
    """Contract slots s1 < s2 of a tensor with the form."""
    out: SparseTensor = {}
    for w, c in t.items():
        g = form.value(w[s1], w[s2])
        if g:
            nw = w[:s1] + w[s1 + 1 : s2] + w[s2 + 1 :]
            v = out.get(nw, ZERO) + c * g
            if v:
                out[nw] = v
            else:
                del out[nw]
    return out


def pairing(t: SparseTensor, u: SparseTensor, form: FormSpec) -> Fraction:
    """Slotwise form pairing <t, u> = sum t_w u_w' prod_s B(w_s, w'_s)."""
    total = ZERO
    for w, c in t.items():
        # with a split form each letter pairs with at most two letters; walk
        # all partner words by expanding slotwise against u's support
        acc = {(): Fraction(1)}
        for a in w:
            nxt = {}
            for prefix, coeff in acc.items():
                for b in range(form.dim):
                    g = form.value(a, b)
                    if g:
                        nxt[prefix + (b,)] = coeff * g
            acc = nxt
        for w2, coeff in acc.items():
            x = u.get(w2)
            if x:
                total += c * coeff * x
    return total


# ---------------------------------------------------------------------------
# realized modules


@dataclass
class RealizedModule:
    group: GroupSpec
    weight: Partition
    base_dim: int
    degree: int
    span: GradedSpan
    labels: list
    form: Optional[FormSpec] = None

    @property
    def dim(self) -> int:
        return self.span.dim


def _schur_span(lam: Partition, v: int, grade_fn) -> tuple[GradedSpan, list]:
    lam = check_partition(lam)
    perms = young_symmetrizer_perms(lam)
    tabs = semistandard_tableaux(lam, v)
    tensors = [apply_perms_word(tableau_word(t), perms) for t in tabs]
    span = GradedSpan.from_tensors(tensors, size(lam), grade_fn)
    return span, tabs


@lru_cache(maxsize=None)
def schur_module(lam: Partition, v: int) -> RealizedModule:
    """S_lam(C^v) inside V^{tensor |lam|}, basis graded by word content."""
    lam = check_partition(lam)
    if len(lam) > v:
        raise ValueError(f"{lam} has more than {v} rows")
    span, tabs = _schur_span(lam, v, lambda w: content(w, v))
    expected = gl_dim(lam, v)
    if span.dim != expected:
        raise AssertionError(f"S_{lam}(C^{v}): got dim {span.dim}, expected {expected}")
    return RealizedModule(GroupSpec("GL", v), lam, v, size(lam), span, list(tabs))


def _sparse_exact_kernel(rows: list[dict], ncols: int) -> list[list[Fraction]]:
    """Exact kernel of sparse constraint rows, preselected mod p.

    A maximal independent row subset is found over F_p, the exact kernel of
    that subset is computed over Q, and every remaining row is verified to
    vanish on the kernel basis; on a bad prime the verification fails and we
    retry with another prime.
    """
    rows = [r for r in rows if r]
    if not rows:
        return [
            [Fraction(1 if j == i else 0) for j in range(ncols)]
            for i in range(ncols)
        ]
    for p in (DEFAULT_PRIME, 2147483587, 2147483563):
        try:
            a = np.zeros((len(rows), ncols), dtype=np.int64)
            for i, r in enumerate(rows):
                for j, x in r.items():
                    a[i, j] = reduce_mod(x, p)
        except ZeroDivisionError:
            continue
        sel = modp_independent_rows(a, p)
        dense = [
            [rows[i].get(j, ZERO) for j in range(ncols)] for i in sel
        ]
        ker = qq_kernel(dense, ncols)
        ok = True
        selset = set(sel)
        for i, r in enumerate(rows):
            if i in selset:
                continue
            for k in ker:
                if sum(x * k[j] for j, x in r.items()):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return ker
    raise ArithmeticError("kernel preselection failed for all fallback primes")


def _form_module(lam: Partition, form: FormSpec, group: GroupSpec, expected: int) -> RealizedModule:
    lam = check_partition(lam)
    d = size(lam)
    grade = form.word_weight
    span_gl, _ = _schur_span(lam, form.dim, grade)
    kept: list[SparseTensor] = []
    for g in sorted(span_gl.blocks, key=repr):
        blk = span_gl.blocks[g]
        vecs = blk.rows
        constraints: dict[tuple, dict[int, Fraction]] = {}
        for j, t in enumerate(vecs):
            for s1, s2 in combinations(range(d), 2):
                ct = contract(t, s1, s2, form)
                for w, c in ct.items():
                    constraints.setdefault(((s1, s2), w), {})[j] = c
        ker = _sparse_exact_kernel(list(constraints.values()), len(vecs))
        for kvec in ker:
            nt: SparseTensor = {}
            for j, c in enumerate(kvec):
                if c:
                    tensor_iadd(nt, vecs[j], c)
            kept.append(nt)
    span = GradedSpan.from_tensors(kept, d, grade)
    if span.dim != expected:
        raise AssertionError(
            f"{group.family} module {lam}: got dim {span.dim}, expected {expected}"
        )
    labels = list(range(span.dim))
    return RealizedModule(group, lam, form.dim, d, span, labels, form)


@lru_cache(maxsize=None)
def symplectic_module(lam: Partition, two_n: int) -> RealizedModule:
    lam = check_partition(lam)
    if len(lam) > two_n // 2:
        raise ValueError(f"{lam} has more than n rows for Sp({two_n})")
    return _form_module(
        lam, symplectic_form(two_n), GroupSpec("Sp", two_n), sp_module_dim(lam, two_n)
    )


@lru_cache(maxsize=None)
def orthogonal_module(lam: Partition, m: int) -> RealizedModule:
    lam = check_partition(lam)
    expected = so_module_dim(lam, m)
    if expected == 0:
        raise ValueError(f"{lam} is out of range for SO({m})")
    return _form_module(lam, orthogonal_form(m), GroupSpec("SO", m), expected)


def lie_action(X: Sequence[Sequence], t: SparseTensor) -> SparseTensor:
    """Derivation action of a gl element on a word tensor."""
    return matrix_on_letters(X, t)


# ---------------------------------------------------------------------------
# spin representations on the exterior algebra of a maximal isotropic E

Spinor = dict  # sorted tuple of indices in range(n) -> Fraction


def spin_basis(n: int, parity: int) -> list[tuple[int, ...]]:
    """Subsets of {0..n-1} with |I| = parity mod 2, ordered by (size, lex)."""
    out = [
        tuple(c)
        for k in range(parity % 2, n + 1, 2)
        for c in combinations(range(n), k)
    ]
    return out


@dataclass
class SpinSpace:
    n: int
    even_basis: list[tuple[int, ...]]
    odd_basis: list[tuple[int, ...]]


def spin_space(n: int) -> SpinSpace:
    if n < 2:
        raise ValueError("need n >= 2")
    return SpinSpace(n, spin_basis(n, 0), spin_basis(n, 1))


def wedge_e(i: int, s: Spinor) -> Spinor:
    out: Spinor = {}
    for idx, c in s.items():
        if i in idx:
            continue
        pos = sum(1 for x in idx if x < i)
        key = tuple(sorted(idx + (i,)))
        v = out.get(key, ZERO) + (c if pos % 2 == 0 else -c)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def contract_f(i: int, s: Spinor) -> Spinor:
    out: Spinor = {}
    for idx, c in s.items():
        if i not in idx:
            continue
        pos = idx.index(i)
        key = idx[:pos] + idx[pos + 1 :]
        v = out.get(key, ZERO) + (c if pos % 2 == 0 else -c)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def clifford_action(w: Sequence, s: Spinor, n: int) -> Spinor:
    """(e + f) . s = e ^ s + f -| s for w = (e-coords, f-coords) in E + F."""
    out: Spinor = {}
    for i in range(n):
        if w[i]:
            tensor_iadd(out, wedge_e(i, s), Fraction(w[i]))
        if w[n + i]:
            tensor_iadd(out, contract_f(i, s), Fraction(w[n + i]))
    return out


def spin_form_value(a: int, b: int, n: int) -> Fraction:
    """Polarized quadratic form B on W = E + F: B(e_i, f_i) = 1/2."""
    if a // n != b // n and a % n == b % n:
        return Fraction(1, 2)
    return ZERO


def beta_pairing(s: Spinor, t: Spinor, n: int) -> Fraction:
    """Canonical spinor pairing: coefficient of e_1^...^e_n in s ^ rev(t)."""
    total = ZERO
    full = tuple(range(n))
    for idx, c in s.items():
        comp = tuple(x for x in full if x not in idx)
        x = t.get(comp)
        if not x:
            continue
        # shuffle sign of idx followed by comp into sorted order
        merged = idx + comp
        inv = 0
        for a in range(len(merged)):
            for b in range(a + 1, len(merged)):
                if merged[a] > merged[b]:
                    inv += 1
        k = len(comp)
        rev = (k * (k - 1) // 2) % 2
        sign = -1 if (inv + rev) % 2 else 1
        total += sign * c * x
    return total


def gamma_pairing(k: int, s: Spinor, t: Spinor, n: int) -> dict[tuple[int, ...], Fraction]:
    """Coefficients of beta(x_J . s, t) over monomials x_J of Lambda^k W.

    Keys are strictly increasing index tuples into the W basis
    (e_0..e_{n-1}, f_0..f_{n-1}); the Clifford factors act rightmost first.
    """
    out: dict[tuple[int, ...], Fraction] = {}
    for J in combinations(range(2 * n), k):
        acted = s
        for j in reversed(J):
            w = [0] * (2 * n)
            w[j] = 1
            acted = clifford_action(w, acted, n)
        val = beta_pairing(acted, t, n)
        if val:
            out[J] = val
    return out


def a_vector(delta: Spinor, n: int) -> list[Fraction]:
    """The equivariant quadratic map Sym^2(Delta+) -> W evaluated at delta.

    gamma_pairing(1, delta, delta) yields the covector w -> beta(w.delta,
    delta); identifying W^* with W through the polarized form B (the B-dual
    of e_j is 2 f_j and vice versa) gives a genuine vector of W, which spans
    Ker(psi_delta) whenever that kernel is a line.
    """
    cov = gamma_pairing(1, delta, delta, n)
    out = [ZERO] * (2 * n)
    for (j,), c in cov.items():
        out[(j + n) % (2 * n)] = 2 * c
    return out


def spin_lie_generators(n: int) -> list[tuple[int, int]]:
    """Index pairs (a,b), a<b, for the so(2n) generators F_ab = [w_a, w_b]/4."""
    return list(combinations(range(2 * n), 2))


def spin_lie_action(a: int, b: int, s: Spinor, n: int) -> Spinor:
    """F_ab . s with F_ab = (w_a w_b - w_b w_a)/4."""
    wa = [0] * (2 * n)
    wa[a] = 1
    wb = [0] * (2 * n)
    wb[b] = 1
    t1 = clifford_action(wa, clifford_action(wb, s, n), n)
    t2 = clifford_action(wb, clifford_action(wa, s, n), n)
    out: Spinor = {}
    tensor_iadd(out, t1, Fraction(1, 4))
    tensor_iadd(out, t2, Fraction(-1, 4))
    return out


def spin_lie_on_w(a: int, b: int, n: int) -> list[list[Fraction]]:
    """Matrix of [F_ab, -] on W: [F_ab, w] = B(w_b,w) w_a - B(w_a,w) w_b."""
    dim = 2 * n
    m = [[ZERO] * dim for _ in range(dim)]
    for c in range(dim):
        bb = spin_form_value(b, c, n)
        ba = spin_form_value(a, c, n)
        if bb:
            m[a][c] += bb
        if ba:
            m[b][c] -= ba
    return m
