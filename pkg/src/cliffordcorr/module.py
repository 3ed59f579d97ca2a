"""Left modules over structure-constant algebras.

Convention: elements act on column vectors, ``action[i]`` is the matrix of
basis element b_i, and a homomorphism f: M -> N is a (dim N) x (dim M)
matrix.  Composition "first g, then f" is the matrix product F @ G.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import Algebra, Subalgebra, WedderburnCertificate, primitive_idempotent
from .errors import InvalidInput, NoCertificate, NotAbsolutelySimple, SplittingFailed, WitnessNotFound

ISO_BUDGET = 16


@dataclass(frozen=True, eq=False)
class Module:
    algebra: Algebra
    dim: int
    action: np.ndarray  # (algebra.dim, dim, dim)

    def __post_init__(self):
        act = np.asarray(self.action, dtype=np.int64).reshape(self.algebra.dim, self.dim, self.dim)
        object.__setattr__(self, "action", act % self.algebra.p)

    @property
    def p(self) -> int:
        return self.algebra.p

    def act(self, x) -> np.ndarray:
        """Matrix of the algebra element with coefficient vector x."""
        x = np.asarray(x, dtype=np.int64)
        flat = la.matmul(x, self.action.reshape(self.algebra.dim, -1), self.p)
        return flat.reshape(self.dim, self.dim)

    def __repr__(self):
        return f"Module(dim={self.dim} over {self.algebra!r})"


def validate_module(m: Module) -> None:
    a, p, d = m.algebra, m.p, m.dim
    if not np.array_equal(m.act(a.one), np.eye(d, dtype=np.int64)):
        raise InvalidInput("not a representation: the identity does not act as the identity")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = la.matmul(m.action[i], m.action[j], p)
            rhs = m.act(a.mul[i, j])
            if not np.array_equal(lhs, rhs):
                raise InvalidInput(f"not a representation: rho(b_{i}) rho(b_{j}) != rho(b_{i} b_{j})")


def regular_module(a: Algebra) -> Module:
    return Module(a, a.dim, a.mul.transpose(0, 2, 1))


def one_dim_module(a: Algebra, values) -> Module:
    """1-dimensional module with b_i acting by values[i]."""
    return Module(a, 1, np.asarray(values, dtype=np.int64).reshape(a.dim, 1, 1))


def zero_module(a: Algebra) -> Module:
    return Module(a, 0, np.zeros((a.dim, 0, 0), dtype=np.int64))


def direct_sum(*mods: Module) -> Module:
    a = mods[0].algebra
    n = sum(m.dim for m in mods)
    act = np.zeros((a.dim, n, n), dtype=np.int64)
    off = 0
    for m in mods:
        act[:, off : off + m.dim, off : off + m.dim] = m.action
        off += m.dim
    return Module(a, n, act)


def restrict(n: Module, b: Subalgebra) -> Module:
    if b.ambient is not n.algebra:
        raise InvalidInput("ambient mismatch: subalgebra does not live in the module's algebra")
    act = la.matmul(b.basis.basis, n.action.reshape(n.algebra.dim, -1), n.p)
    return Module(b.algebra, n.dim, act)


def transport(m: Module, target: Algebra, change: np.ndarray) -> Module:
    """Module over ``target`` whose basis element t acts as sum_a change[t, a] rho(b_a)."""
    act = la.matmul(np.asarray(change, dtype=np.int64), m.action.reshape(m.algebra.dim, -1), m.p)
    return Module(target, m.dim, act)


def submodule(n: Module, cols) -> tuple[Module, np.ndarray]:
    """Module on the invariant subspace spanned by the columns; returns it with its embedding."""
    w = la.Subspace.span(np.asarray(cols, dtype=np.int64).T, n.dim, n.p)
    emb = w.basis.T
    k = w.dim
    images = la.matmul(n.action.reshape(-1, n.dim), emb, n.p)  # (A*d, k)
    images = images.reshape(n.algebra.dim, n.dim, k).transpose(0, 2, 1).reshape(-1, n.dim)
    try:
        coords = w.coords(images)
    except InvalidInput as exc:
        raise InvalidInput("subspace is not invariant under the algebra action") from exc
    act = coords.reshape(n.algebra.dim, k, k).transpose(0, 2, 1)
    return Module(n.algebra, k, act), emb


def quotient_module(n: Module, q: la.Quotient) -> Module:
    act = np.stack([q.induced_map(n.action[i]) for i in range(n.algebra.dim)]) if n.algebra.dim else None
    return Module(n.algebra, q.dim, act)


# --- Hom spaces ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HomSpace:
    source: Module
    target: Module
    space: la.Subspace  # flattened (row-major) intertwiners

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def matrices(self) -> np.ndarray:
        return self.space.basis.reshape(self.dim, self.target.dim, self.source.dim)

    def coords(self, f) -> np.ndarray:
        return self.space.coords(np.asarray(f, dtype=np.int64).ravel())

    def combine(self, coeffs) -> np.ndarray:
        flat = la.matmul(np.asarray(coeffs, dtype=np.int64), self.space.basis, self.source.p)
        return flat.reshape(self.target.dim, self.source.dim)


def hom_space(m: Module, n: Module) -> HomSpace:
    """All F with rho_N(b) F = F rho_M(b), solved one basis element at a time."""
    if m.algebra is not n.algebra and not (
        m.algebra.dim == n.algebra.dim and np.array_equal(m.algebra.mul, n.algebra.mul)
    ):
        raise InvalidInput("hom_space needs modules over the same algebra")
    p = m.p
    ds, dt = m.dim, n.dim
    size = ds * dt
    if size == 0:
        return HomSpace(m, n, la.Subspace.zero(size, p))
    kernel = np.eye(size, dtype=np.int64)
    eye_s, eye_t = np.eye(ds, dtype=np.int64), np.eye(dt, dtype=np.int64)
    for i in range(m.algebra.dim):
        if kernel.shape[0] == 0:
            break
        c = (la.kron(n.action[i], eye_s, p) - la.kron(eye_t, m.action[i].T, p)) % p
        sol = la.nullspace(la.matmul(c, kernel.T, p), p)
        kernel = la.matmul(sol.basis, kernel, p)
    return HomSpace(m, n, la.Subspace.span(kernel, size, p))


def endo_dim(m: Module) -> int:
    return hom_space(m, m).dim


@dataclass(frozen=True, eq=False)
class EndoAlgebraOp:
    """End_A(M)^op: the product e1*e2 is the composite "first e1, then e2"."""

    module: Module
    hom: HomSpace
    base: Algebra

    @property
    def right_action(self) -> np.ndarray:
        """Matrix of m -> m.e for each basis element e of the base algebra."""
        return self.hom.matrices

    def matrix(self, coeffs) -> np.ndarray:
        return self.hom.combine(coeffs)


def endo_algebra_op(m: Module, name: str = "") -> EndoAlgebraOp:
    h = hom_space(m, m)
    mats = h.matrices
    r, p = h.dim, m.p
    mul = np.zeros((r, r, r), dtype=np.int64)
    for a in range(r):
        for b in range(r):
            mul[a, b] = h.coords(la.matmul(mats[b], mats[a], p))
    one = h.coords(np.eye(m.dim, dtype=np.int64)) if r else np.zeros(0, dtype=np.int64)
    return EndoAlgebraOp(m, h, Algebra(p, r, mul, one, name))


# --- simplicity, isomorphism, decomposition --------------------------------------


def _require_certificate(m: Module, cert: WedderburnCertificate | None):
    if cert is None or cert.algebra is not m.algebra:
        raise NoCertificate("no semisimplicity certificate for the module's algebra")


def is_abs_simple(m: Module, cert: WedderburnCertificate | None) -> bool:
    _require_certificate(m, cert)
    return m.dim > 0 and endo_dim(m) == 1


def iso_test(m: Module, n: Module, seed: int = 0) -> tuple[bool, np.ndarray | None]:
    """Isomorphism test for modules over a split semisimple algebra, with a witness."""
    if m.dim != n.dim:
        return False, None
    h = hom_space(m, n)
    if not (h.dim == endo_dim(m) == endo_dim(n)):
        return False, None
    if m.dim == 0:
        return True, np.zeros((0, 0), dtype=np.int64)
    if h.dim == 1:
        cand = h.matrices[0]
        if la.rank(cand, m.p) == m.dim:
            return True, cand
    rng = random.Random(seed)
    for _ in range(ISO_BUDGET):
        coeffs = [rng.randrange(m.p) for _ in range(h.dim)]
        cand = h.combine(coeffs)
        if la.rank(cand, m.p) == m.dim:
            return True, cand
    raise WitnessNotFound("dimension test passed but no invertible intertwiner was found")


def isomorphic(m: Module, n: Module, seed: int = 0) -> bool:
    return iso_test(m, n, seed)[0]


@dataclass(frozen=True, eq=False)
class IsotypicComponent:
    idempotent: np.ndarray
    module: Module
    embedding: np.ndarray


def isotypic_decompose(n: Module, cert: WedderburnCertificate) -> list[IsotypicComponent]:
    _require_certificate(n, cert)
    out = []
    for e in cert.idempotents:
        img = la.column_space(n.act(e), n.p)
        if img.dim:
            mod, emb = submodule(n, img.basis.T)
            out.append(IsotypicComponent(e, mod, emb))
    return out


def extract_simple(component: Module, seed: int = 0, with_embedding: bool = False):
    """A simple submodule: the image of a primitive idempotent of End(component)."""
    if component.dim == 0:
        raise InvalidInput("cannot extract a simple submodule of the zero module")
    e = endo_algebra_op(component)
    f = primitive_idempotent(e.base, seed)
    img = la.column_space(e.matrix(f), component.p)
    simple, emb = submodule(component, img.basis.T)
    if endo_dim(simple) != 1:
        raise SplittingFailed("image of the primitive idempotent is not absolutely simple")
    return (simple, emb) if with_embedding else simple


def multiplicity(v: Module, n: Module) -> int:
    if endo_dim(v) != 1:
        raise NotAbsolutelySimple("V not absolutely simple (dim End(V) != 1)")
    return hom_space(v, n).dim


def simple_summands(n: Module, cert: WedderburnCertificate, seed: int = 0) -> list[tuple[Module, np.ndarray]]:
    """Decompose n into simple submodules: (simple, embedding into n) pairs whose images form a direct sum."""
    rng = random.Random(seed)
    out = []
    for comp in isotypic_decompose(n, cert):
        simple = extract_simple(comp.module, rng.randrange(2**32))
        for g in hom_space(simple, comp.module).matrices:
            out.append((simple, la.matmul(comp.embedding, g, n.p)))
    return out
