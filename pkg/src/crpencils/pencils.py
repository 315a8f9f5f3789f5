"""Construction of the matrix pencils: GL/Sp/SO one-box pencils, Koszul
pencils, the spin pencil, adjoint-action pencils, and the induced operator
on pairs of Schur modules.

A pencil maps a source module (dimension b) to a target module (dimension c):
evaluate(x) = sum x_i A_i is a c x b matrix.  Coefficient matrices are stored
with integer entries and one global denominator so they reduce mod any prime
not dividing it.

For Sp/SO pencils the target coordinates are taken against the form-pairing
with the target basis (the adjoint of the symmetrizer), which differs from
the honest projection by an invertible change of target basis; ranks, kernels
and source-side identities are unaffected, and the stored target action is
adjusted accordingly (rho_t = -rho^T for the directly realized action rho).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd, lcm
from typing import Optional, Sequence

import numpy as np

from .linalg import modp_matmul, reduce_mod
from .modules import (
    FormSpec,
    RealizedModule,
    clifford_action,
    form_lie_basis,
    lie_action,
    orthogonal_module,
    schur_module,
    spin_lie_action,
    spin_lie_generators,
    spin_lie_on_w,
    spin_space,
    symplectic_module,
)
from .partitions import (
    BoxPosition,
    Partition,
    check_partition,
    gl_dim,
    normalize,
    pieri_add,
    size,
)
from .tensors import (
    adjoint_perms,
    apply_perms,
    cell_slot,
    gl_generator_matrices,
    insert_letter,
    young_symmetrizer_perms,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class EquivarianceData:
    """One Lie-algebra generator with its three matrix actions.

    x_on_vars acts on the pencil's variable space; rho_source and rho_target
    act on source/target coordinates.  The pencil identity to check is
    rho_t A_i - A_i rho_s = sum_b x_on_vars[b][i] A_b.
    """

    x_on_vars: tuple
    rho_source: tuple
    rho_target: tuple


@dataclass(frozen=True)
class Pencil:
    nvars: int
    source_dim: int
    target_dim: int
    coeffs: tuple  # nvars tuples of target_dim tuples of ints
    denom: int
    var_labels: tuple
    source_label: str = ""
    target_label: str = ""
    builder: str = ""
    equivariance: tuple = ()
    transitive_base: bool = False

    def evaluate(self, x: Sequence) -> list[list[Fraction]]:
        """sum x_i A_i without the global denominator (rank-equivalent)."""
        out = [[ZERO] * self.source_dim for _ in range(self.target_dim)]
        for i, xi in enumerate(x):
            if not xi:
                continue
            xi = Fraction(xi)
            mat = self.coeffs[i]
            for r in range(self.target_dim):
                row = mat[r]
                orow = out[r]
                for c in range(self.source_dim):
                    if row[c]:
                        orow[c] += xi * row[c]
        return out

    def coeff_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)

    def coeff_array_modp(self, p: int) -> np.ndarray:
        if self.denom % p == 0:
            raise ValueError(f"prime {p} divides the cleared denominator")
        a = np.zeros((self.nvars, self.target_dim, self.source_dim), dtype=np.int64)
        for i, mat in enumerate(self.coeffs):
            for r, row in enumerate(mat):
                for c, x in enumerate(row):
                    if x:
                        a[i, r, c] = x % p
        return a

    def evaluate_modp(self, x: Sequence[int], stacked: np.ndarray, p: int) -> np.ndarray:
        xv = np.array([int(v) % p for v in x], dtype=np.int64)
        out = np.zeros((self.target_dim, self.source_dim), dtype=np.int64)
        for i, xi in enumerate(xv):
            if xi:
                out = (out + xi * stacked[i]) % p
        return out


def _clear_denominators(mats: list[list[list[Fraction]]]) -> tuple[tuple, int]:
    """Integer coefficients and a common denominator, with the overall integer
    content divided out (a global scalar, irrelevant to every rank property but
    essential for reductions modulo small primes)."""
    den = 1
    for m in mats:
        for row in m:
            for x in row:
                den = lcm(den, Fraction(x).denominator)
    cleared = [
        [[int(Fraction(x) * den) for x in row] for row in m] for m in mats
    ]
    g = 0
    for m in cleared:
        for row in m:
            for x in row:
                g = gcd(g, x)
    if g > 1:
        cleared = [[[x // g for x in row] for row in m] for m in cleared]
        den //= gcd(den, g)
    return tuple(tuple(tuple(row) for row in m) for m in cleared), den


def check_equivariance(p: Pencil, prime: Optional[int] = None) -> bool:
    """Verify the infinitesimal equivariance identity for every generator.

    Exact over Q when prime is None; otherwise all matrices are reduced mod
    the prime and checked with modular matrix products.
    """
    if not p.equivariance:
        return False
    if prime is None:
        coeffs = [
            [[Fraction(x) for x in row] for row in mat] for mat in p.coeffs
        ]
        for eq in p.equivariance:
            xs, rs, rt = eq.x_on_vars, eq.rho_source, eq.rho_target
            for i in range(p.nvars):
                lhs = _mat_sub(
                    _mat_mul(rt, coeffs[i]), _mat_mul(coeffs[i], rs)
                )
                rhs = [[ZERO] * p.source_dim for _ in range(p.target_dim)]
                for b in range(p.nvars):
                    xbi = Fraction(xs[b][i])
                    if xbi:
                        for r in range(p.target_dim):
                            for c in range(p.source_dim):
                                rhs[r][c] += xbi * coeffs[b][r][c]
                if lhs != rhs:
                    return False
        return True
    stacked = p.coeff_array_modp(prime)
    for eq in p.equivariance:
        xs = np.array(
            [[reduce_mod(x, prime) for x in row] for row in eq.x_on_vars],
            dtype=np.int64,
        )
        rs = np.array(
            [[reduce_mod(x, prime) for x in row] for row in eq.rho_source],
            dtype=np.int64,
        )
        rt = np.array(
            [[reduce_mod(x, prime) for x in row] for row in eq.rho_target],
            dtype=np.int64,
        )
        for i in range(p.nvars):
            lhs = (
                modp_matmul(rt, stacked[i], prime)
                - modp_matmul(stacked[i], rs, prime)
            ) % prime
            rhs = np.tensordot(xs[:, i], stacked, axes=(0, 0)) % prime
            if (lhs != rhs).any():
                return False
    return True


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for s in range(k):
            x = Fraction(ai[s])
            if x:
                bs = b[s]
                for j in range(m):
                    if bs[j]:
                        oi[j] += x * bs[j]
    return out


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _coordinate_action(mod: RealizedModule, X) -> tuple:
    """Matrix of the derivation action of X on the module's basis coordinates."""
    cols = []
    for t in mod.span.basis:
        c = mod.span.coordinates(lie_action(X, t), check=True)
        if c is None:
            raise AssertionError("module basis is not stable under the Lie action")
        cols.append(c)
    dim = mod.dim
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def _one_box(mu: Partition, nu: Partition, max_rows: int) -> BoxPosition:
    mu, nu = check_partition(mu), check_partition(nu)
    for cand, box in pieri_add(mu, max_rows):
        if cand == nu:
            return box
    raise ValueError(f"{nu} is not a one-box addition of {mu} within {max_rows} rows")


# ---------------------------------------------------------------------------
# GL pencils


@lru_cache(maxsize=None)
def build_gl_pencil(mu: Partition, nu: Partition, v: int) -> Pencil:
    """The equivariant pencil V -> Hom(S_mu V, S_nu V) for a one-box pair."""
    mu, nu = check_partition(mu), check_partition(nu)
    box = _one_box(mu, nu, v)
    smod = schur_module(mu, v)
    tmod = schur_module(nu, v)
    pos = cell_slot(nu, box.row - 1, box.col - 1)
    perms = young_symmetrizer_perms(nu)
    mats = [
        [[ZERO] * smod.dim for _ in range(tmod.dim)] for _ in range(v)
    ]
    for j, u in enumerate(smod.span.basis):
        for i in range(v):
            t = apply_perms(insert_letter(u, pos, i), perms)
            coords = tmod.span.coordinates(t, check=True)
            if coords is None:
                raise AssertionError("symmetrized insertion left the target module")
            for k, c in enumerate(coords):
                if c:
                    mats[i][k][j] = c
    if all(not any(any(row) for row in m) for m in mats):
        raise AssertionError("GL pencil is identically zero")
    cleared, den = _clear_denominators(mats)
    equiv = []
    for X in gl_generator_matrices(v):
        equiv.append(
            EquivarianceData(
                tuple(tuple(Fraction(x) for x in row) for row in X),
                _coordinate_action(smod, X),
                _coordinate_action(tmod, X),
            )
        )
    return Pencil(
        nvars=v,
        source_dim=smod.dim,
        target_dim=tmod.dim,
        coeffs=cleared,
        denom=den,
        var_labels=tuple(f"x_{i+1}" for i in range(v)),
        source_label=f"S_{list(mu)}(C^{v})",
        target_label=f"S_{list(nu)}(C^{v})",
        builder="gl",
        equivariance=tuple(equiv),
        transitive_base=True,
    )


# ---------------------------------------------------------------------------
# Koszul pencils


@lru_cache(maxsize=None)
def build_koszul_pencil(k: int, v: int) -> Pencil:
    """Wedge pencil V -> Hom(Lambda^k V, Lambda^{k+1} V)."""
    if not 0 <= k < v:
        raise ValueError("need 0 <= k < v")
    src = list(combinations(range(v), k))
    tgt = list(combinations(range(v), k + 1))
    tgt_index = {K: r for r, K in enumerate(tgt)}
    mats = [
        [[ZERO] * len(src) for _ in range(len(tgt))] for _ in range(v)
    ]
    for j, K in enumerate(src):
        for i in range(v):
            if i in K:
                continue
            nk = tuple(sorted(K + (i,)))
            sign = (-1) ** sum(1 for x in K if x < i)
            mats[i][tgt_index[nk]][j] = Fraction(sign)
    cleared, den = _clear_denominators(mats)

    def wedge_action(X, basis):
        cols = []
        for K in basis:
            col = {L: ZERO for L in basis}
            for s, a in enumerate(K):
                for b in range(v):
                    if X[b][a] and b not in K[:s] + K[s + 1 :]:
                        nk = tuple(sorted(K[:s] + (b,) + K[s + 1 :]))
                        rearr = K[:s] + (b,) + K[s + 1 :]
                        inv = 0
                        lst = list(rearr)
                        for x in range(len(lst)):
                            for y in range(x + 1, len(lst)):
                                if lst[x] > lst[y]:
                                    inv += 1
                        col[nk] = col.get(nk, ZERO) + Fraction(X[b][a]) * (-1) ** inv
            cols.append(col)
        return tuple(
            tuple(cols[j].get(L, ZERO) for j in range(len(basis)))
            for L in basis
        )

    equiv = []
    for X in gl_generator_matrices(v):
        equiv.append(
            EquivarianceData(
                tuple(tuple(Fraction(x) for x in row) for row in X),
                wedge_action(X, src),
                wedge_action(X, tgt),
            )
        )
    return Pencil(
        nvars=v,
        source_dim=len(src),
        target_dim=len(tgt),
        coeffs=cleared,
        denom=den,
        var_labels=tuple(f"x_{i+1}" for i in range(v)),
        source_label=f"Lambda^{k}(C^{v})",
        target_label=f"Lambda^{k+1}(C^{v})",
        builder="koszul",
        equivariance=tuple(equiv),
        transitive_base=True,
    )


# ---------------------------------------------------------------------------
# Sp / SO pencils


def _partner_table(form: FormSpec) -> list[tuple[int, int]]:
    """For each letter a the unique (b, B(a,b)) with nonzero pairing."""
    out = []
    for a in range(form.dim):
        hits = [(b, form.value(a, b)) for b in range(form.dim) if form.value(a, b)]
        if len(hits) != 1:
            raise AssertionError("form is not in split coordinates")
        out.append(hits[0])
    return out


def _build_form_pencil(smod: RealizedModule, tmod: RealizedModule,
                       box: BoxPosition, builder: str, transitive: bool) -> Pencil:
    form = smod.form
    v = form.dim
    nu = tmod.weight
    pos = cell_slot(nu, box.row - 1, box.col - 1)
    adj = adjoint_perms(young_symmetrizer_perms(nu))
    partner = _partner_table(form)

    # index source basis by paired words for fast simultaneous pairing
    src_index: dict = {}
    for j, u in enumerate(smod.span.basis):
        for w, c in u.items():
            prod = Fraction(1)
            pw = []
            for a in w:
                b, g = partner[a]
                pw.append(b)
                prod *= g
            # <r, u> picks up r_w * prod when r contains the partner word
            src_index.setdefault(tuple(pw), []).append((j, c * prod))

    mats = [
        [[ZERO] * smod.dim for _ in range(tmod.dim)] for _ in range(v)
    ]
    for k, bk in enumerate(tmod.span.basis):
        dk = apply_perms(bk, adj)
        grouped: dict[int, dict] = {}
        for w, c in dk.items():
            grouped.setdefault(w[pos], {})[w[:pos] + w[pos + 1 :]] = c
        for letter, r in grouped.items():
            pl, g = partner[letter]
            # this group contributes to variable pl with weight B(letter, pl)
            row_vals: dict[int, Fraction] = {}
            for w, c in r.items():
                for j, cu in src_index.get(w, ()):
                    row_vals[j] = row_vals.get(j, ZERO) + c * cu
            mat = mats[pl]
            for j, val in row_vals.items():
                if val:
                    mat[k][j] += g * val
    if all(not any(any(row) for row in m) for m in mats):
        raise AssertionError("form pencil is identically zero")
    cleared, den = _clear_denominators(mats)

    equiv = []
    for X in form_lie_basis(form):
        rho_t = _coordinate_action(tmod, X)
        n = len(rho_t)
        rho_t_paired = tuple(
            tuple(-rho_t[j][i] for j in range(n)) for i in range(n)
        )
        equiv.append(
            EquivarianceData(
                tuple(tuple(Fraction(x) for x in row) for row in X),
                _coordinate_action(smod, X),
                rho_t_paired,
            )
        )
    family = smod.group.family
    return Pencil(
        nvars=v,
        source_dim=smod.dim,
        target_dim=tmod.dim,
        coeffs=cleared,
        denom=den,
        var_labels=tuple(f"x_{i+1}" for i in range(v)),
        source_label=f"S<{list(smod.weight)}>({family}{v})",
        target_label=f"S<{list(nu)}>({family}{v})",
        builder=builder,
        equivariance=tuple(equiv),
        transitive_base=transitive,
    )


@lru_cache(maxsize=None)
def build_sp_pencil(mu: Partition, nu: Partition, two_n: int) -> Pencil:
    mu, nu = check_partition(mu), check_partition(nu)
    box = _one_box(mu, nu, two_n // 2)
    return _build_form_pencil(
        symplectic_module(mu, two_n), symplectic_module(nu, two_n), box,
        "sp", transitive=True,
    )


@lru_cache(maxsize=None)
def build_so_pencil(mu: Partition, nu: Partition, m: int) -> Pencil:
    mu, nu = check_partition(mu), check_partition(nu)
    box = _one_box(mu, nu, m)
    return _build_form_pencil(
        orthogonal_module(mu, m), orthogonal_module(nu, m), box,
        "so", transitive=False,
    )


# ---------------------------------------------------------------------------
# spin pencil


def _spinor_coords(s: dict, basis: list, index: dict) -> list[Fraction]:
    out = [ZERO] * len(basis)
    for I, c in s.items():
        out[index[I]] = c
    return out


@lru_cache(maxsize=None)
def build_spin_pencil(n: int) -> Pencil:
    """psi: Delta+ -> Hom(W, Delta-), delta acting by Clifford multiplication."""
    ss = spin_space(n)
    even, odd = ss.even_basis, ss.odd_basis
    odd_index = {I: i for i, I in enumerate(odd)}
    even_index = {I: i for i, I in enumerate(even)}
    dim_w = 2 * n
    mats = []
    for I in even:
        mat = [[ZERO] * dim_w for _ in range(len(odd))]
        for j in range(dim_w):
            w = [0] * dim_w
            w[j] = 1
            img = clifford_action(w, {I: Fraction(1)}, n)
            for J, c in img.items():
                mat[odd_index[J]][j] = c
        mats.append(mat)
    cleared, den = _clear_denominators(mats)

    def spin_matrix(a, b, basis, index):
        cols = [
            _spinor_coords(spin_lie_action(a, b, {I: Fraction(1)}, n), basis, index)
            for I in basis
        ]
        return tuple(
            tuple(cols[j][i] for j in range(len(basis))) for i in range(len(basis))
        )

    equiv = []
    for a, b in spin_lie_generators(n):
        m = spin_lie_on_w(a, b, n)
        equiv.append(
            EquivarianceData(
                spin_matrix(a, b, even, even_index),
                tuple(tuple(Fraction(x) for x in row) for row in m),
                spin_matrix(a, b, odd, odd_index),
            )
        )
    labels = tuple(
        "delta_" + ("".join(str(i + 1) for i in I) if I else "0") for I in even
    )
    return Pencil(
        nvars=len(even),
        source_dim=dim_w,
        target_dim=len(odd),
        coeffs=cleared,
        denom=den,
        var_labels=labels,
        source_label=f"W(C^{2*n})",
        target_label="Delta-",
        builder="spin",
        equivariance=tuple(equiv),
        transitive_base=False,
    )


def _complement_sign(J: tuple[int, ...], n: int) -> tuple[tuple[int, ...], int]:
    comp = tuple(x for x in range(n) if x not in J)
    merged = J + comp
    inv = sum(
        1
        for a in range(len(merged))
        for b in range(a + 1, len(merged))
        if merged[a] > merged[b]
    )
    return comp, (-1) ** (inv % 2)


def spin_kernel_vector(delta: dict, n: int = 5) -> list[Fraction]:
    """The kernel line of psi_delta from the graded pieces of delta.

    delta = delta0 + delta2 + delta4 in Lambda(even) E; the result lives in
    W = E + F: the E-part is the contraction of delta2 with the functional
    delta4* (Lambda^4 E identified with E* via the volume form), the F-part
    is (delta0 delta4 - 1/2 delta2 ^ delta2) under Lambda^4 E = F.  Returns
    the zero vector on the degenerate locus (e.g. pure spinors).
    """
    if n != 5:
        raise ValueError("the closed-form kernel vector is specific to n=5")
    e_part = [ZERO] * n
    f_part = [ZERO] * n
    d0 = delta.get((), ZERO)
    d2 = {I: c for I, c in delta.items() if len(I) == 2}
    d4 = {I: c for I, c in delta.items() if len(I) == 4}
    # delta4* as an F-vector, then contract into delta2
    for J, c in d4.items():
        comp, sign = _complement_sign(J, n)
        w = [0] * (2 * n)
        w[n + comp[0]] = 1
        contracted = clifford_action(w, d2, n)
        # contraction convention: delta4* pairs with the *second* factor of
        # delta2, opposite to the f-contraction used by clifford_action
        for (i,), x in contracted.items():
            e_part[i] -= sign * c * x
    # (d0 d4 - 1/2 d2 ^ d2)^# in F
    top4: dict = {}
    for J, c in d4.items():
        top4[J] = top4.get(J, ZERO) + d0 * c
    for I1, c1 in d2.items():
        for I2, c2 in d2.items():
            if set(I1) & set(I2):
                continue
            merged = I1 + I2
            inv = sum(
                1
                for a in range(4)
                for b in range(a + 1, 4)
                if merged[a] > merged[b]
            )
            key = tuple(sorted(merged))
            top4[key] = top4.get(key, ZERO) - Fraction(1, 2) * c1 * c2 * (-1) ** inv
    for J, c in top4.items():
        if not c:
            continue
        comp, sign = _complement_sign(J, n)
        f_part[comp[0]] += sign * c
    return e_part + f_part


# ---------------------------------------------------------------------------
# adjoint pencils


def sl_basis(a: int) -> list[tuple[tuple[int, ...], ...]]:
    """Basis of sl_a: E_ij for i != j, then H_k = E_kk - E_{k+1,k+1}."""
    out = []
    for i in range(a):
        for j in range(a):
            if i != j:
                m = [[0] * a for _ in range(a)]
                m[i][j] = 1
                out.append(tuple(tuple(r) for r in m))
    for k in range(a - 1):
        m = [[0] * a for _ in range(a)]
        m[k][k] = 1
        m[k + 1][k + 1] = -1
        out.append(tuple(tuple(r) for r in m))
    return out


def _wedge3_action(X, basis, index, a):
    """Derivation action of X on Lambda^3(C^a) in the sorted-triple basis."""
    cols = []
    for K in basis:
        col: dict = {}
        for s in range(3):
            rest = K[:s] + K[s + 1 :]
            for b in range(a):
                x = X[b][K[s]]
                if not x or b in rest:
                    continue
                rearr = K[:s] + (b,) + K[s + 1 :]
                inv = sum(
                    1
                    for p in range(3)
                    for q in range(p + 1, 3)
                    if rearr[p] > rearr[q]
                )
                key = tuple(sorted(rearr))
                col[key] = col.get(key, ZERO) + Fraction(x) * (-1) ** inv
        cols.append(col)
    return cols


@lru_cache(maxsize=None)
def build_adjoint_pencil(a: int) -> Pencil:
    """phi: Lambda^3 A -> Hom(sl(A), Lambda^3 A), phi_omega(X) = X . omega."""
    if a < 3:
        raise ValueError("need a >= 3")
    basis3 = list(combinations(range(a), 3))
    index3 = {K: i for i, K in enumerate(basis3)}
    sl = sl_basis(a)
    mats = [
        [[ZERO] * len(sl) for _ in range(len(basis3))] for _ in basis3
    ]
    for col, X in enumerate(sl):
        action = _wedge3_action(X, basis3, index3, a)
        for j, K in enumerate(basis3):
            for L, c in action[j].items():
                # phi_{e_K}(X) = X . e_K
                mats[j][index3[L]][col] = c
    cleared, den = _clear_denominators(mats)

    # equivariance under Y in sl(A): rho_source = ad_Y, rho_target and the
    # variable action are both the wedge action of Y
    def wedge_matrix(Y):
        cols = _wedge3_action(Y, basis3, index3, a)
        return tuple(
            tuple(cols[j].get(L, ZERO) for j in range(len(basis3)))
            for L in basis3
        )

    def ad_matrix(Y):
        cols = []
        for X in sl:
            brk = [
                [
                    sum(Y[i][k] * X[k][j] - X[i][k] * Y[k][j] for k in range(a))
                    for j in range(a)
                ]
                for i in range(a)
            ]
            cols.append(_sl_coords(brk, a))
        return tuple(
            tuple(cols[j][i] for j in range(len(sl))) for i in range(len(sl))
        )

    gens = []
    for k in range(a - 1):
        for (i, j) in ((k, k + 1), (k + 1, k)):
            m = [[0] * a for _ in range(a)]
            m[i][j] = 1
            gens.append(tuple(tuple(r) for r in m))
    equiv = [
        EquivarianceData(wedge_matrix(Y), ad_matrix(Y), wedge_matrix(Y))
        for Y in gens
    ]
    labels = tuple("w_" + "".join(str(x + 1) for x in K) for K in basis3)
    return Pencil(
        nvars=len(basis3),
        source_dim=len(sl),
        target_dim=len(basis3),
        coeffs=cleared,
        denom=den,
        var_labels=labels,
        source_label=f"sl_{a}",
        target_label=f"Lambda^3(C^{a})",
        builder="adjoint",
        equivariance=tuple(equiv),
        transitive_base=False,
    )


def _sl_coords(m, a: int) -> list[Fraction]:
    """Coordinates of a traceless matrix in the sl_basis ordering."""
    coords = []
    for i in range(a):
        for j in range(a):
            if i != j:
                coords.append(Fraction(m[i][j]))
    # diagonal part: d_k = sum_{l<=k} m_ll gives coordinates on H_k
    acc = ZERO
    for k in range(a - 1):
        acc += Fraction(m[k][k])
        coords.append(acc)
    tr = sum(Fraction(m[i][i]) for i in range(a))
    if tr:
        raise ValueError("matrix is not traceless")
    return coords


# ---------------------------------------------------------------------------
# the induced operator on pairs of Schur modules


def theta_map(X: Sequence[Sequence], lam: Partition, lam_p: Partition,
              mu: Partition, mu_p: Partition) -> list[list[Fraction]]:
    """Matrix of Theta_X: S_lam A x S_mu B -> S_lam' A x S_mu' B.

    lam' is lam minus one box and mu' is mu plus one box; X in Hom(A,B) is an
    a x b matrix sending the i-th basis vector of A to sum_j X[i][j] e_j.
    Rows are indexed by (target-A, target-B) pairs, columns by (source-A,
    source-B) pairs, both in row-major pair order.
    """
    lam, lam_p = check_partition(lam), check_partition(lam_p)
    mu, mu_p = check_partition(mu), check_partition(mu_p)
    a, b = len(X), len(X[0]) if X else 0
    box_rm = _one_box(lam_p, lam, a)
    box_add = _one_box(mu, mu_p, b)
    sa, sap = schur_module(lam, a), schur_module(lam_p, a)
    sb, sbp = schur_module(mu, b), schur_module(mu_p, b)
    slot_rm = cell_slot(lam, box_rm.row - 1, box_rm.col - 1)
    slot_add = cell_slot(mu_p, box_add.row - 1, box_add.col - 1)
    perms_ap = young_symmetrizer_perms(lam_p)
    perms_bp = young_symmetrizer_perms(mu_p)

    coords_a: list[dict[int, list[Fraction]]] = []
    for u in sa.span.basis:
        per_letter: dict[int, dict] = {}
        for w, c in u.items():
            per_letter.setdefault(w[slot_rm], {})[
                w[:slot_rm] + w[slot_rm + 1 :]
            ] = c
        entry = {}
        for alpha, r in per_letter.items():
            t = apply_perms(r, perms_ap)
            cs = sap.span.coordinates(t, check=True)
            if cs is None:
                raise AssertionError("slot removal left the smaller Schur module")
            if any(cs):
                entry[alpha] = cs
        coords_a.append(entry)

    coords_b: list[list] = []
    for vvec in sb.span.basis:
        entry = []
        for beta in range(b):
            t = apply_perms(insert_letter(vvec, slot_add, beta), perms_bp)
            cs = sbp.span.coordinates(t, check=True)
            if cs is None:
                raise AssertionError("insertion left the larger Schur module")
            entry.append(cs)
        coords_b.append(entry)

    rows = sap.dim * sbp.dim
    cols = sa.dim * sb.dim
    out = [[ZERO] * cols for _ in range(rows)]
    for ja in range(sa.dim):
        for alpha, ca in coords_a[ja].items():
            for jb in range(sb.dim):
                for beta in range(b):
                    x = Fraction(X[alpha][beta])
                    if not x:
                        continue
                    cb = coords_b[jb][beta]
                    col = ja * sb.dim + jb
                    for ka, va in enumerate(ca):
                        if not va:
                            continue
                        base = ka * sbp.dim
                        for kb, vb in enumerate(cb):
                            if vb:
                                out[base + kb][col] += x * va * vb
    return out


def hyperplane_bound_criterion(lam: Partition, mu: Partition, p: int) -> tuple[bool, int]:
    """Dimension-count test for bounded rank of the hyperplane-restriction map.

    mu must be lam plus two boxes in different rows.  Compares the dimension
    drops s_lam(k) - s_mu(k) at k = 2p and k = 2p+1; when the drop at 2p is
    strictly larger, every evaluation has a kernel of at least that size and
    the pencil has bounded rank.  Returns (certified, kernel lower bound).
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if size(mu) != size(lam) + 2:
        raise ValueError("mu must have exactly two boxes more than lam")
    padded = list(lam) + [0] * (len(mu) - len(lam))
    diffs = [mu[i] - padded[i] for i in range(len(mu))]
    if any(d < 0 for d in diffs) or max(diffs) != 1:
        raise ValueError("the two added boxes must lie in different rows")
    if p < 1:
        raise ValueError("p must be positive")
    drop_even = gl_dim(lam, 2 * p) - gl_dim(mu, 2 * p)
    drop_odd = gl_dim(lam, 2 * p + 1) - gl_dim(mu, 2 * p + 1)
    return (drop_even > drop_odd, drop_even)
