"""Exact dense linear algebra over Q and over prime fields F_p.

Rational matrices are lists of lists of Fraction (or int); prime-field
matrices are numpy int64 arrays with entries reduced into [0, p).  Primes
must be odd and below 2**31 so that products of two residues fit in int64.

Subspace is the canonical (RREF basis) representation of a row space and is
the common currency for kernels, images and their intersections.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_PRIME = 2147483629

_PRIME_LIMIT = 1 << 31


def check_prime(p: int) -> int:
    if not (2 < p < _PRIME_LIMIT):
        raise ValueError(f"prime must be odd and < 2^31, got {p}")
    return p


def reduce_mod(x, p: int) -> int:
    """Image of a rational number in F_p; fails if p divides the denominator."""
    f = Fraction(x)
    if f.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {f} vanishes mod {p}")
    return f.numerator * pow(f.denominator, -1, p) % p


def mat_mod(rows: Sequence[Sequence], p: int) -> np.ndarray:
    out = np.zeros((len(rows), len(rows[0]) if rows else 0), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x:
                out[i, j] = reduce_mod(x, p)
    return out


# ---------------------------------------------------------------------------
# rational elimination


def qq_rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def qq_rank(rows: Sequence[Sequence]) -> int:
    if rows and all(isinstance(x, int) for row in rows for x in row):
        return bareiss_rank(rows)
    return len(qq_rref(rows)[0])


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def qq_kernel(rows: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of the right kernel {x : m x = 0}, one row per basis vector."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    rref, pivots = qq_rref(rows) if rows else ([], [])
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        out.append(v)
    return out


def qq_solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[list[Fraction]]:
    """One solution of m x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    if not rows:
        return [Fraction(0)] * ncols if not any(rhs) else None
    rref, pivots = qq_rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = rref[r][ncols]
    return x


# ---------------------------------------------------------------------------
# prime-field elimination


def modp_rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        rest = np.nonzero(a[:, c])[0]
        rest = rest[rest != r]
        if rest.size:
            a[rest] = (a[rest] - np.outer(a[rest, c], a[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def modp_rank(a: np.ndarray, p: int) -> int:
    return len(modp_rref(a, p)[1])


def modp_independent_rows(a: np.ndarray, p: int) -> list[int]:
    """Original indices of a maximal independent subset of rows, mod p."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    order = list(range(nrows))
    r = 0
    for c in range(ncols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
            order[r], order[piv] = order[piv], order[r]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = r + 1 + np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
        if r == nrows:
            break
    return sorted(order[:r])


def modp_kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Right kernel basis as rows of an int64 array."""
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    rref, pivots = modp_rref(a, p)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for r, c in enumerate(pivots):
            out[k, c] = (-int(rref[r, f])) % p
    return out


def modp_solve(a: np.ndarray, rhs: np.ndarray, p: int) -> Optional[np.ndarray]:
    a = np.asarray(a, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64) % p
    ncols = a.shape[1]
    aug = np.hstack([a % p, rhs.reshape(-1, 1)])
    rref, pivots = modp_rref(aug, p)
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = rref[r, ncols]
    return x


def modp_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product mod p, chunked so int64 accumulation cannot overflow."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    # each product < p^2 < 2^62; sum at most one extra doubling before reduce
    step = max(1, (1 << 62) // (p * p))
    n = a.shape[1]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, n, step):
        out = (out + a[:, s : s + step] @ b[s : s + step]) % p
    return out


# ---------------------------------------------------------------------------
# canonical subspaces


@dataclass(frozen=True)
class Subspace:
    """A linear subspace in canonical form: RREF basis rows.

    p == 0 means the rationals; otherwise an odd prime < 2^31.  Equality of
    subspaces is equality of the stored data.
    """

    ambient_dim: int
    basis: tuple[tuple, ...]
    p: int = 0

    @staticmethod
    def from_vectors(vectors: Iterable[Sequence], ambient_dim: int, p: int = 0) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient_dim")
        if p == 0:
            rref, _ = qq_rref(vecs) if vecs else ([], [])
            basis = tuple(tuple(row) for row in rref)
        else:
            check_prime(p)
            if vecs:
                rref, _ = modp_rref(mat_mod(vecs, p), p)
                basis = tuple(tuple(int(x) for x in row) for row in rref)
            else:
                basis = ()
        return Subspace(ambient_dim, basis, p)

    @staticmethod
    def zero(ambient_dim: int, p: int = 0) -> "Subspace":
        return Subspace(ambient_dim, (), p)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient_dim")
        if self.p == 0:
            v = [Fraction(x) for x in v]
            for row in self.basis:
                c = next(i for i, x in enumerate(row) if x)
                if v[c]:
                    f = v[c]
                    v = [x - f * y for x, y in zip(v, row)]
            return not any(v)
        v = np.array([reduce_mod(x, self.p) for x in v], dtype=np.int64)
        for row in self.basis:
            c = next(i for i, x in enumerate(row) if x)
            if v[c]:
                v = (v - int(v[c]) * np.array(row, dtype=np.int64)) % self.p
        return not v.any()

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim or self.p != other.p:
            raise ValueError("subspaces live in different ambient spaces")

    def intersect(self, other: "Subspace") -> "Subspace":
        """Kernel of the stacked system u A - w B = 0, pushed back to vectors."""
        self._check_compatible(other)
        a, b = self.basis, other.basis
        if not a or not b:
            return Subspace.zero(self.ambient_dim, self.p)
        n = self.ambient_dim
        if self.p == 0:
            stacked = [
                [a[i][c] for i in range(len(a))] + [-Fraction(b[j][c]) for j in range(len(b))]
                for c in range(n)
            ]
            ker = qq_kernel(stacked)
            vecs = [
                [sum(k[i] * a[i][c] for i in range(len(a))) for c in range(n)]
                for k in ker
            ]
            return Subspace.from_vectors(vecs, n, 0)
        am = np.array(a, dtype=np.int64)
        bm = np.array(b, dtype=np.int64)
        stacked = np.vstack([am, (-bm) % self.p]).T
        ker = modp_kernel(stacked, self.p)
        vecs = modp_matmul(ker[:, : len(a)], am, self.p)
        return Subspace.from_vectors(vecs.tolist(), n, self.p)


def kernel_subspace(rows: Sequence[Sequence], ncols: int, p: int = 0) -> Subspace:
    """Right kernel of a matrix as a canonical Subspace."""
    if p == 0:
        return Subspace.from_vectors(qq_kernel(rows, ncols), ncols, 0)
    ker = modp_kernel(mat_mod(rows, p) if not isinstance(rows, np.ndarray) else rows, p)
    return Subspace.from_vectors(ker.tolist(), ncols, p)


def image_subspace(rows: Sequence[Sequence], p: int = 0) -> Subspace:
    """Column span of a matrix (as row vectors of the transpose)."""
    nrows = len(rows)
    cols = [[rows[i][j] for i in range(nrows)] for j in range(len(rows[0]) if rows else 0)]
    return Subspace.from_vectors(cols, nrows, p)
