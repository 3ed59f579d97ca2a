"""Exact dense linear algebra over GF(p) on int64 numpy arrays.

Matrices are ordinary 2-d integer arrays with entries in [0, p).  Subspaces
store a row basis in reduced row-echelon form, so two equal subspaces have
identical basis arrays and equality is a plain array comparison.

Where a function takes "vectors as columns" it says so; subspace bases are
always rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput

MAX_AMBIENT = 4096
_INT64_SAFE = 2**62


def as_mat(m, p: int) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    return a % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    k = a.shape[-1]
    if k * (p - 1) ** 2 < _INT64_SAFE:
        return (a @ b) % p
    # large p: fall back to exact Python integers
    out = a.astype(object) @ b.astype(object)
    return (out % p).astype(np.int64)


def rref_pivots(m, p: int) -> tuple[np.ndarray, list[int]]:
    a = as_mat(m, p).copy()
    if a.ndim != 2:
        raise InvalidInput(f"expected a 2-d matrix, got shape {a.shape}")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m, p: int) -> tuple[np.ndarray, int]:
    """Reduced row-echelon form (same shape, zero rows last) and the rank."""
    a, piv = rref_pivots(m, p)
    return a, len(piv)


def rank(m, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref_pivots(m, p)[1])


def solve(a, b, p: int) -> np.ndarray | None:
    """Some x with a @ x = b, or None if inconsistent.  b may be a vector or a matrix."""
    a = as_mat(a, p)
    b = as_mat(b, p)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    if a.ndim != 2 or a.shape[0] != b.shape[0]:
        raise InvalidInput(f"shape mismatch in solve: {a.shape} vs {b.shape}")
    n = a.shape[1]
    aug, piv = rref_pivots(np.hstack([a, b]), p)
    if piv and piv[-1] >= n:
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = aug[i, n:]
    return x[:, 0] if vec else x


@dataclass(frozen=True, eq=False)
class Subspace:
    p: int
    ambient_dim: int
    basis: np.ndarray  # rows, RREF, no zero rows

    @classmethod
    def span(cls, vectors, ambient_dim: int, p: int) -> Subspace:
        """Row span of ``vectors`` (any 2-d array with ambient_dim columns)."""
        v = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient_dim)
        if ambient_dim > MAX_AMBIENT:
            raise InvalidInput(f"ambient dimension {ambient_dim} exceeds {MAX_AMBIENT}")
        if v.shape[0] == 0:
            return cls.zero(ambient_dim, p)
        r, piv = rref_pivots(v, p)
        return cls(p, ambient_dim, r[: len(piv)])

    @classmethod
    def zero(cls, n: int, p: int) -> Subspace:
        return cls(p, n, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, n: int, p: int) -> Subspace:
        return cls(p, n, np.eye(n, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.basis]

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: Subspace):
        if other.ambient_dim != self.ambient_dim or other.p != self.p:
            raise InvalidInput(
                f"ambient mismatch: GF({self.p})^{self.ambient_dim} vs GF({other.p})^{other.ambient_dim}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        self._check(other)
        return self.basis.shape == other.basis.shape and bool(np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.ambient_dim, self.p)

    def intersection(self, other: Subspace) -> Subspace:
        self._check(other)
        n, p = self.ambient_dim, self.p
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(n, p)
        stacked = np.hstack([self.basis.T, (-other.basis.T) % p])
        ker = nullspace(stacked, p)
        return Subspace.span(matmul(ker.basis[:, : self.dim], self.basis, p), n, p)

    def contains(self, x) -> bool:
        if isinstance(x, Subspace):
            self._check(x)
            return (self + x).dim == self.dim
        v = np.asarray(x, dtype=np.int64).reshape(-1, self.ambient_dim)
        return Subspace.span(np.vstack([self.basis, v]), self.ambient_dim, self.p).dim == self.dim

    def coords(self, vectors) -> np.ndarray:
        """Coordinates of row vectors lying in this subspace w.r.t. the RREF basis."""
        v = np.asarray(vectors, dtype=np.int64) % self.p
        single = v.ndim == 1
        v = v.reshape(-1, self.ambient_dim)
        c = v[:, self.pivots]
        if not np.array_equal(matmul(c, self.basis, self.p), v):
            raise InvalidInput("vector does not lie in the subspace")
        return c[0] if single else c

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    return x + y


def subspace_intersection(x: Subspace, y: Subspace) -> Subspace:
    return x.intersection(y)


def nullspace(m, p: int) -> Subspace:
    """{x : m @ x = 0}."""
    m = as_mat(m, p)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return Subspace.full(cols, p)
    r, piv = rref_pivots(m, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = -r[i, f] % p
    return Subspace.span(basis, cols, p)


def column_space(m, p: int) -> Subspace:
    m = as_mat(m, p)
    return Subspace.span(m.T, m.shape[0], p)


def kron(a, b, p: int) -> np.ndarray:
    return np.kron(as_mat(a, p), as_mat(b, p)) % p


def inverse(m, p: int) -> np.ndarray | None:
    m = as_mat(m, p)
    n = m.shape[0]
    if m.shape != (n, n):
        return None
    aug, piv = rref_pivots(np.hstack([m, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        return None
    return aug[:, n:]


class Quotient:
    """The quotient space k^n / W with a fixed complement basis.

    Vectors are reduced against the RREF basis of W; the surviving
    (non-pivot) coordinates are the quotient coordinates.  All methods
    take and return vectors as columns.
    """

    def __init__(self, relations: Subspace):
        self.relations = relations
        self.p = relations.p
        self.n = relations.ambient_dim
        piv = relations.pivots
        self._piv = piv
        pset = set(piv)
        self.free = [c for c in range(self.n) if c not in pset]

    @property
    def dim(self) -> int:
        return len(self.free)

    def reduce(self, cols) -> np.ndarray:
        v = as_mat(cols, self.p)
        if self.relations.dim == 0:
            return v
        # subtract the relation combination that clears every pivot coordinate
        c = v[self._piv, :]
        return (v - matmul(self.relations.basis.T, c, self.p)) % self.p

    def project(self, cols) -> np.ndarray:
        return self.reduce(cols)[self.free, :]

    def lift(self, coords) -> np.ndarray:
        c = as_mat(coords, self.p)
        out = np.zeros((self.n, c.shape[1]), dtype=np.int64)
        out[self.free, :] = c
        return out

    def induced_map(self, m) -> np.ndarray:
        """Matrix on the quotient of an endomorphism m that preserves W."""
        return self.project(matmul(as_mat(m, self.p), self.lift(np.eye(self.dim, dtype=np.int64)), self.p))


class IncrementalSpan:
    """Growing span that can express a new vector in terms of the vectors added so far."""

    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.rows: list[np.ndarray] = []
        self.combos: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.count = 0

    def _reduce(self, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        p = self.p
        v = np.asarray(v, dtype=np.int64) % p
        acc = np.zeros(self.count, dtype=np.int64)
        for piv, row, combo in zip(self.pivots, self.rows, self.combos):
            c = int(v[piv])
            if c:
                v = (v - c * row) % p
                acc[: combo.size] = (acc[: combo.size] + c * combo) % p
        return v, acc

    def express(self, v) -> list[int] | None:
        rem, acc = self._reduce(v)
        if rem.any():
            return None
        return [int(x) for x in acc]

    def add(self, v) -> bool:
        rem, acc = self._reduce(v)
        self.count += 1
        if not rem.any():
            return False
        p = self.p
        piv = int(np.flatnonzero(rem)[0])
        s = pow(int(rem[piv]), -1, p)
        combo = np.zeros(self.count, dtype=np.int64)
        combo[: acc.size] = (-acc) % p
        combo[-1] = 1
        self.rows.append(rem * s % p)
        self.combos.append(combo * s % p)
        self.pivots.append(piv)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)
