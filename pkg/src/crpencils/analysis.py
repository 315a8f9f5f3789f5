"""Rank measurement and certification for pencils.

Verdict semantics: "constant" is only ever claimed from exhaustive
enumeration of the projective parameter space over a finite field or from
the transitivity certificate (equivariant pencil whose symmetry group acts
transitively on the projective base: the GL- and Sp-built pencils).  Sampled
runs return "bounded" (all measured ranks below min(b,c)), "non-constant"
(differing ranks with the maximum equal to min(b,c)) or "inconclusive",
always with witnesses, a prime and a seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

import numpy as np

from .linalg import (
    DEFAULT_PRIME,
    Subspace,
    bareiss_rank,
    modp_kernel,
    modp_rank,
    modp_rref,
)
from .modules import spin_space
from .partitions import (
    Partition,
    check_partition,
    gl_dim,
    horizontal_strips,
    pieri_add,
    size,
    so_module_dim,
)
from .pencils import Pencil, check_equivariance, _one_box

EQUIV_CHECK_PRIMES = (46337, 46327)  # small enough for single-shot int64 matmul


@dataclass
class PredictedDecomposition:
    kernel_dim: int
    image_dim: int
    cokernel_dim: int
    terms: list  # (alpha, k, dim, "kernel" | "image")


@dataclass
class RankReport:
    generic_rank: int
    strata: list  # (rank, point, point_class)
    verdict: str
    method: dict
    predicted: Optional[PredictedDecomposition] = None

    def to_jsonable(self) -> dict:
        out = {
            "generic_rank": self.generic_rank,
            "verdict": self.verdict,
            "method": self.method,
            "strata": [
                {"rank": r, "point": [str(x) for x in pt], "class": cls}
                for r, pt, cls in self.strata
            ],
        }
        if self.predicted is not None:
            out["predicted"] = {
                "kernel_dim": self.predicted.kernel_dim,
                "image_dim": self.predicted.image_dim,
                "cokernel_dim": self.predicted.cokernel_dim,
            }
        return out


def _rank_at(pencil: Pencil, stacked: np.ndarray, x: Sequence[int], p: int) -> int:
    return modp_rank(pencil.evaluate_modp(x, stacked, p), p)


def generic_rank(pencil: Pencil, prime: int = DEFAULT_PRIME, trials: int = 20,
                 seed: int = 0) -> int:
    rng = random.Random(seed)
    stacked = pencil.coeff_array_modp(prime)
    best = 0
    for _ in range(trials):
        x = [rng.randrange(prime) for _ in range(pencil.nvars)]
        best = max(best, _rank_at(pencil, stacked, x, prime))
    return best


def _projective_points(s: int, p: int):
    """Representatives of P^{s-1}(F_p): first nonzero coordinate is 1."""
    for lead in range(s):
        tail = s - lead - 1
        idx = [0] * tail
        while True:
            yield tuple([0] * lead + [1] + idx)
            k = tail - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < p:
                    break
                idx[k] = 0
                k -= 1
            if k < 0:
                break


def structured_points(pencil: Pencil, prime: int, rng: random.Random,
                      count: int = 10) -> list[tuple[tuple[int, ...], str]]:
    """Orbit-specific sample points depending on how the pencil was built."""
    pts: list[tuple[tuple[int, ...], str]] = []
    s = pencil.nvars
    for i in range(s):
        e = [0] * s
        e[i] = 1
        pts.append((tuple(e), "coordinate"))
    if pencil.builder == "so":
        m = s
        # split form: q(x) = sum x_{2k} x_{2k+1} (+ x_last^2 for odd m)
        for _ in range(count):
            x = [rng.randrange(prime) for _ in range(m)]
            x[0] = max(1, x[0])
            rest = sum(x[2 * k] * x[2 * k + 1] for k in range(1, m // 2))
            if m % 2:
                rest += x[m - 1] * x[m - 1]
            x[1] = (-rest) * pow(x[0], -1, prime) % prime
            pts.append((tuple(v % prime for v in x), "isotropic"))
        for _ in range(count):
            x = [rng.randrange(prime) for _ in range(m)]
            q = sum(2 * x[2 * k] * x[2 * k + 1] for k in range(m // 2))
            if m % 2:
                q += x[m - 1] * x[m - 1]
            if q % prime:
                pts.append((tuple(v % prime for v in x), "non-isotropic"))
        pts.append((tuple([1, 1] + [0] * (m - 2)), "non-isotropic"))
    if pencil.builder == "spin":
        n = 1
        while 2 ** (n - 1) < s:
            n += 1
        ss = spin_space(n)
        index = {I: i for i, I in enumerate(ss.even_basis)}
        pairs = [I for I in ss.even_basis if len(I) == 2]
        for _ in range(count):
            # exp(delta2) . 1 is always a pure spinor
            d2 = {I: rng.randrange(prime) for I in pairs}
            x = [0] * s
            x[index[()]] = 1
            for I, c in d2.items():
                x[index[I]] = c % prime
            for i1, c1 in d2.items():
                for i2, c2 in d2.items():
                    if set(i1) & set(i2):
                        continue
                    merged = i1 + i2
                    inv = sum(
                        1
                        for a in range(4)
                        for b in range(a + 1, 4)
                        if merged[a] > merged[b]
                    )
                    key = tuple(sorted(merged))
                    if key in index:
                        half = pow(2, -1, prime)
                        x[index[key]] = (
                            x[index[key]] + (-1) ** inv * c1 * c2 * half
                        ) % prime
            pts.append((tuple(x), "pure-spinor"))
    return pts


def constant_rank_verdict(pencil: Pencil, mode: str = "sampled",
                          prime: int = DEFAULT_PRIME, trials: int = 200,
                          seed: int = 0, budget: int = 10 ** 6) -> RankReport:
    if mode == "transitivity":
        if not pencil.transitive_base:
            raise ValueError(
                "transitivity certificate requires a pencil whose group acts "
                "transitively on the projective base (GL- or Sp-built)"
            )
        small = pencil.source_dim * pencil.target_dim * pencil.nvars <= 20000
        if small:
            ok = check_equivariance(pencil)
        else:
            ok = all(check_equivariance(pencil, q) for q in EQUIV_CHECK_PRIMES)
        if not ok:
            raise ValueError("equivariance certificate failed")
        rng = random.Random(seed)
        stacked = pencil.coeff_array_modp(prime)
        x = tuple(rng.randrange(prime) for _ in range(pencil.nvars))
        r = _rank_at(pencil, stacked, x, prime)
        return RankReport(
            generic_rank=r,
            strata=[(r, x, "generic")],
            verdict="constant",
            method={
                "kind": "transitivity",
                "prime": prime,
                "seed": seed,
                "equivariance": "exact" if small else f"mod {EQUIV_CHECK_PRIMES}",
            },
        )

    stacked = pencil.coeff_array_modp(prime)
    if mode == "exhaustive":
        npoints = (prime ** pencil.nvars - 1) // (prime - 1)
        if npoints > budget:
            raise ValueError(f"{npoints} projective points exceed budget {budget}")
        ranks: dict[int, tuple] = {}
        for x in _projective_points(pencil.nvars, prime):
            r = _rank_at(pencil, stacked, x, prime)
            ranks.setdefault(r, x)
        strata = [(r, pt, "exhaustive") for r, pt in sorted(ranks.items())]
        verdict = "constant" if len(ranks) == 1 else "non-constant"
        return RankReport(
            generic_rank=max(ranks),
            strata=strata,
            verdict=verdict,
            method={"kind": "exhaustive", "prime": prime, "points": npoints},
        )

    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    points = [
        (tuple(rng.randrange(prime) for _ in range(pencil.nvars)), "generic")
        for _ in range(trials)
    ]
    points += structured_points(pencil, prime, rng)
    ranks: dict[tuple[int, str], tuple] = {}
    for x, cls in points:
        if not any(x):
            continue
        r = _rank_at(pencil, stacked, x, prime)
        ranks.setdefault((r, cls), x)
    strata = [(r, pt, cls) for (r, cls), pt in sorted(ranks.items())]
    values = {r for r, _ in ranks}
    if max(values) < min(pencil.source_dim, pencil.target_dim):
        verdict = "bounded"
    elif len(values) > 1:
        verdict = "non-constant"
    else:
        verdict = "inconclusive"
    return RankReport(
        generic_rank=max(values),
        strata=strata,
        verdict=verdict,
        method={"kind": "sampled", "prime": prime, "trials": trials, "seed": seed},
    )


# ---------------------------------------------------------------------------
# predicted decompositions from the branching formulas


def _cell_in(alpha: Partition, row: int, col: int) -> bool:
    """1-based cell membership."""
    return len(alpha) >= row and alpha[row - 1] >= col


def predict_gl_decomposition(mu: Partition, nu: Partition, v: int) -> PredictedDecomposition:
    """Kernel/image/cokernel dimensions of the GL one-box pencil at a point.

    Restricting to the hyperplane H (dim v-1), the source decomposes over
    horizontal strips mu -> alpha; a summand lies in the kernel exactly when
    the box directly north of the added box does not survive in alpha.
    """
    mu, nu = check_partition(mu), check_partition(nu)
    box = _one_box(mu, nu, v)
    north = (box.row - 1, box.col)
    terms = []
    kernel = 0
    image = 0
    for k in range(size(mu) + 1):
        for alpha in horizontal_strips(mu, k):
            d = gl_dim(alpha, v - 1)
            if d == 0:
                continue
            in_kernel = box.row > 1 and not _cell_in(alpha, *north)
            terms.append((alpha, k, d, "kernel" if in_kernel else "image"))
            if in_kernel:
                kernel += d
            else:
                image += d
    src, tgt = gl_dim(mu, v), gl_dim(nu, v)
    assert kernel + image == src
    return PredictedDecomposition(kernel, image, tgt - image, terms)


def predict_so_nonisotropic(mu: Partition, nu: Partition, m: int) -> PredictedDecomposition:
    """Same strip decomposition with SO(m-1) module dimensions.

    Valid at non-isotropic points, where the perpendicular hyperplane is a
    genuine SO(m-1) space; at isotropic points only the kernel dimension is
    asserted to match (checked empirically elsewhere).
    """
    mu, nu = check_partition(mu), check_partition(nu)
    box = _one_box(mu, nu, m)
    north = (box.row - 1, box.col)
    terms = []
    kernel = 0
    image = 0
    for k in range(size(mu) + 1):
        for alpha in horizontal_strips(mu, k):
            d = so_module_dim(alpha, m - 1)
            if d == 0:
                continue
            in_kernel = box.row > 1 and not _cell_in(alpha, *north)
            terms.append((alpha, k, d, "kernel" if in_kernel else "image"))
            if in_kernel:
                kernel += d
            else:
                image += d
    src = so_module_dim(mu, m)
    tgt = so_module_dim(nu, m)
    assert kernel + image == src
    return PredictedDecomposition(kernel, image, tgt - image, terms)


# ---------------------------------------------------------------------------
# rank neutral directions


@dataclass
class RndReport:
    space: Subspace
    verdict: str  # "rank-critical-certified" | "strictly-larger" | "inconclusive"
    pencil_span_dim: int
    samples_used: int
    method: dict


def rnd(pencil: Pencil, prime: int = DEFAULT_PRIME, seed: int = 0,
        max_samples: int = 512) -> RndReport:
    """The space of rank neutral directions {B : B(Ker A) <= Im A for all
    max-rank A in the pencil}, computed over F_prime by sampling.

    L is always contained in the output.  When the output equals the span L
    of the coefficient matrices, equality RND(L) = L is exact (every
    constraint space contains RND(L)) and rank-criticality is certified.
    If the dimension stabilizes strictly above dim L for two consecutive
    doubling rounds the verdict is "strictly-larger".
    """
    rng = random.Random(seed)
    stacked = pencil.coeff_array_modp(prime)
    c, b = pencil.target_dim, pencil.source_dim
    ambient = c * b
    r = generic_rank(pencil, prime, trials=20, seed=seed)
    span = Subspace.from_vectors(
        [stacked[i].reshape(-1).tolist() for i in range(pencil.nvars)],
        ambient,
        prime,
    )
    s = span.dim
    rows: list[np.ndarray] = []
    samples_used = 0
    target = pencil.nvars + 2
    prev_dim = None
    stable = 0
    while samples_used < max_samples:
        while samples_used < target:
            x = [rng.randrange(prime) for _ in range(pencil.nvars)]
            a = pencil.evaluate_modp(x, stacked, prime)
            if modp_rank(a, prime) < r:
                continue
            ker = modp_kernel(a, prime)  # rows span Ker A
            coker = modp_kernel(a.T % prime, prime)  # rows span (Im A)^perp
            for f in coker:
                for u in ker:
                    rows.append(np.outer(f, u).reshape(-1) % prime)
            samples_used += 1
        if rows:
            sol = modp_kernel(np.array(rows, dtype=np.int64), prime)
            space = Subspace.from_vectors(sol.tolist(), ambient, prime)
        else:
            space = Subspace.from_vectors(
                np.eye(ambient, dtype=np.int64).tolist(), ambient, prime
            )
        if not space.contains_subspace(span):
            raise AssertionError("pencil span escaped its own RND constraints")
        if space.dim == s:
            return RndReport(
                space, "rank-critical-certified", s, samples_used,
                {"prime": prime, "seed": seed, "generic_rank": r},
            )
        if space.dim == prev_dim:
            stable += 1
            if stable >= 2:
                return RndReport(
                    space, "strictly-larger", s, samples_used,
                    {"prime": prime, "seed": seed, "generic_rank": r},
                )
        else:
            stable = 0
        prev_dim = space.dim
        target = min(max_samples, target * 2)
    return RndReport(
        space, "inconclusive", s, samples_used,
        {"prime": prime, "seed": seed, "generic_rank": r},
    )


# ---------------------------------------------------------------------------
# flattenings and the induced-operator rank formula


def flattening_rank_of_tensor(mats: Sequence, v: int) -> int:
    """Rank of the map V* x B -> Lambda^2 V* x C for T = sum e_i* x A_i."""
    c = len(mats[0])
    b = len(mats[0][0])
    pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    pair_index = {pq: i for i, pq in enumerate(pairs)}
    rows = [[0] * (v * b) for _ in range(len(pairs) * c)]
    for l in range(v):
        for i in range(v):
            if i == l:
                continue
            sign = 1 if i > l else -1
            pi = pair_index[(min(i, l), max(i, l))]
            for k in range(c):
                for j in range(b):
                    x = mats[i][k][j]
                    if x:
                        rows[pi * c + k][l * b + j] += sign * int(x)
    return bareiss_rank(rows)


def koszul_flattening_rank(mu: Partition, nu: Partition, v: int) -> int:
    """Raw rank of the Koszul flattening of the GL one-box pencil tensor.

    The border-rank lower bound is ceil(rank / (v-1)), computed by callers.
    """
    from .pencils import build_gl_pencil

    pencil = build_gl_pencil(check_partition(mu), check_partition(nu), v)
    return flattening_rank_of_tensor(pencil.coeffs, v)


def theta_rank_formula(a: int, b: int, r: int) -> int:
    """Rank of the induced operator S^2A x B -> A x Lambda^2 B at rank-r X."""
    if not 0 <= r <= min(a, b):
        raise ValueError(f"rank {r} out of range for {a}x{b}")
    return a * b * r - a * comb(r + 1, 2) - b * comb(r, 2) + 2 * comb(r + 1, 3)
