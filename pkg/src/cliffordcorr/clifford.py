"""Induction, stability, stabilizers and the Clifford correspondence.

Every construction here is checked against the statement it realizes.
Three outcomes are kept apart: a hypothesis that does not hold raises
:class:`HypothesesNotMet`; a proved statement that fails to verify raises
:class:`TheoremCheckFailed` (a bug in this library); everything else is a
normal return value, including boolean answers such as "not stable".
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg as la
from .algebra import (
    Algebra,
    Subalgebra,
    WedderburnCertificate,
    center,
    certify,
    product_space,
)
from .errors import (
    HypothesesNotMet,
    InvalidInput,
    NotAbsolutelySimple,
    NotCertifiedSemisimple,
    TheoremCheckFailed,
    TooManyBlocks,
)
from .module import (
    EndoAlgebraOp,
    Module,
    endo_algebra_op,
    endo_dim,
    hom_space,
    is_abs_simple,
    iso_test,
    multiplicity,
    quotient_module,
    restrict,
    simple_summands,
    submodule,
    transport,
)

MAX_NORMALITY_BLOCKS = 12


def _same_algebra(x: Algebra, y: Algebra) -> bool:
    return x is y or (x.p == y.p and x.dim == y.dim and np.array_equal(x.mul, y.mul))


class InducedModule:
    """M = A (x)_B V realized as a quotient of A (x)_k V.

    Coordinates on A (x) V put a (x) v at index a * dim V + v.
    """

    def __init__(self, a: Algebra, b: Subalgebra, v: Module, quotient: la.Quotient, m: Module):
        self.A, self.B, self.V = a, b, v
        self.quotient = quotient
        self.M = m
        eye_v = np.eye(v.dim, dtype=np.int64)
        self.iota = quotient.project(la.kron(a.one[:, None], eye_v, a.p))

    @property
    def dim(self) -> int:
        return self.M.dim

    @cached_property
    def restricted(self) -> Module:
        return restrict(self.M, self.B)

    @cached_property
    def E(self) -> EndoAlgebraOp:
        return endo_algebra_op(self.M, name="E")

    @cached_property
    def F(self) -> EndoAlgebraOp:
        return endo_algebra_op(self.restricted, name="F")

    def image_of(self, vectors) -> la.Subspace:
        """Image in M of span{x (x) v : x in rows of ``vectors``, v in V}."""
        x = np.asarray(vectors, dtype=np.int64).reshape(-1, self.A.dim)
        eye_v = np.eye(self.V.dim, dtype=np.int64)
        cols = np.hstack([la.kron(row[:, None], eye_v, self.A.p) for row in x]) if len(x) else None
        if cols is None:
            return la.Subspace.zero(self.dim, self.A.p)
        return la.column_space(self.quotient.project(cols), self.A.p)

    @cached_property
    def e_in_f(self) -> np.ndarray:
        """Coordinates of E's basis inside F's basis (every A-map is a B-map)."""
        try:
            return np.stack([self.F.hom.coords(h) for h in self.E.hom.matrices]).reshape(-1, self.F.base.dim)
        except InvalidInput as exc:
            raise TheoremCheckFailed("E is contained in F", str(exc)) from exc


def induce(a: Algebra, b: Subalgebra, v: Module) -> InducedModule:
    if b.ambient is not a:
        raise InvalidInput("ambient mismatch: B is not a subalgebra of A")
    if not _same_algebra(v.algebra, b.algebra):
        raise InvalidInput("ambient mismatch: V is not a module over B")
    p = a.p
    n = a.dim * v.dim
    eye_a = np.eye(a.dim, dtype=np.int64)
    eye_v = np.eye(v.dim, dtype=np.int64)
    rels = []
    for t, s in enumerate(b.basis.basis):
        # (a s) (x) v  -  a (x) (s . v)
        rels.append((la.kron(a.right_matrix(s), eye_v, p) - la.kron(eye_a, v.action[t], p)) % p)
    relations = la.column_space(np.hstack(rels), p) if rels and n else la.Subspace.zero(n, p)
    q = la.Quotient(relations)
    big = Module(a, n, np.stack([la.kron(a.left_matrix(a.basis_vector(i)), eye_v, p) for i in range(a.dim)]))
    return InducedModule(a, b, v, q, quotient_module(big, q))


def v_socle(v: Module, n: Module) -> la.Subspace:
    """Sum of all submodules of n isomorphic to the absolutely simple v."""
    if endo_dim(v) != 1:
        raise NotAbsolutelySimple("V not absolutely simple")
    h = hom_space(v, n)
    if h.dim == 0:
        return la.Subspace.zero(n.dim, n.p)
    return la.column_space(np.hstack(list(h.matrices)), n.p)


def is_stable(a: Algebra, b: Subalgebra, v: Module, ind: InducedModule | None = None) -> tuple[bool, int | None]:
    ind = ind or induce(a, b, v)
    soc = v_socle(v, ind.restricted)
    if not soc.is_full():
        return False, None
    n = ind.dim // v.dim
    if ind.dim != n * v.dim or multiplicity(v, ind.restricted) != n:
        raise TheoremCheckFailed("stable restriction is V^n", f"dim M = {ind.dim}, dim V = {v.dim}")
    return True, n


# --- annihilators, invariance, normality -----------------------------------------


@dataclass(frozen=True, eq=False)
class AnnihilatorData:
    B: Subalgebra
    J: la.Subspace  # in B coordinates
    p_idem: np.ndarray  # in B coordinates
    p_is_primitive: bool

    @property
    def J_ambient(self) -> la.Subspace:
        return self.B.ambient.span(self.B.to_ambient(self.J.basis)) if self.J.dim else la.Subspace.zero(
            self.B.ambient.dim, self.B.ambient.p
        )

    @property
    def p_ambient(self) -> np.ndarray:
        return self.B.to_ambient(self.p_idem)


def annihilator_and_p(b: Subalgebra, v: Module, cert_b: WedderburnCertificate | None = None) -> AnnihilatorData:
    alg = b.algebra
    cert_b = cert_b or certify(alg)
    if cert_b.algebra is not alg:
        raise HypothesesNotMet("certificate does not belong to B")
    pmod = alg.p
    rep = v.action.reshape(alg.dim, -1).T  # columns: flattened rho(b_i)
    j = la.nullspace(rep, pmod)
    eye = np.eye(v.dim, dtype=np.int64)
    owners = [e for e in cert_b.idempotents if np.array_equal(v.act(e), eye)]
    if len(owners) != 1:
        raise NotAbsolutelySimple("V is not acted on as the identity by exactly one block idempotent")
    pid = (alg.one - owners[0]) % pmod
    checks = {
        "idempotent": np.array_equal(alg.product(pid, pid), pid),
        "central": center(alg).contains(pid),
        "annihilates V": not v.act(pid).any(),
        "J = pB": j == product_space(alg, alg.span(pid), alg.full()),
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise TheoremCheckFailed("annihilator is generated by 1 - e_V", ", ".join(failed))
    primitive = bool(pid.any()) and product_space(alg, alg.span(pid), center(alg)).dim == 1
    return AnnihilatorData(b, j, pid, primitive)


def is_invariant(a: Algebra, j: la.Subspace, within: la.Subspace | None = None) -> bool:
    """X J = J X, with X = A by default (or a subalgebra span given as ``within``)."""
    x = a.full() if within is None else within
    return product_space(a, x, j) == product_space(a, j, x)


def is_normal_subring(a: Algebra, b: Subalgebra, cert_a: WedderburnCertificate | None = None) -> bool:
    """Check I cap B is A-invariant for every two-sided ideal I (all 2^r sums of blocks)."""
    if b.ambient is not a:
        raise InvalidInput("ambient mismatch: B is not a subalgebra of A")
    cert_a = cert_a or certify(a)
    r = len(cert_a.idempotents)
    if r > MAX_NORMALITY_BLOCKS:
        raise TooManyBlocks(f"{r} blocks exceed the limit of {MAX_NORMALITY_BLOCKS} for ideal enumeration")
    ideals = [product_space(a, a.full(), a.span(e)).basis for e in cert_a.idempotents]
    for mask in range(1, 1 << r):
        rows = np.vstack([ideals[i] for i in range(r) if mask >> i & 1])
        meet = a.span(rows).intersection(b.basis)
        if not is_invariant(a, meet):
            return False
    return True


# --- the two adjoint functors and static checks ----------------------------------


def _tensor_quotient(ind: InducedModule, u: Module) -> tuple[la.Quotient, Module]:
    e = ind.E
    if not _same_algebra(u.algebra, e.base):
        raise InvalidInput("algebra mismatch: U is not a module over E")
    p = ind.A.p
    m, du = ind.dim, u.dim
    n = m * du
    eye_m = np.eye(m, dtype=np.int64)
    eye_u = np.eye(du, dtype=np.int64)
    rels = [
        (la.kron(h, eye_u, p) - la.kron(eye_m, u.action[k], p)) % p
        for k, h in enumerate(e.right_action)
    ]
    relations = la.column_space(np.hstack(rels), p) if rels and n else la.Subspace.zero(n, p)
    q = la.Quotient(relations)
    big = Module(ind.A, n, np.stack([la.kron(ind.M.action[i], eye_u, p) for i in range(ind.A.dim)]))
    return q, quotient_module(big, q)


def tensor_over_E(ind: InducedModule, u: Module) -> Module:
    """M (x)_E U with A acting on the left factor."""
    return _tensor_quotient(ind, u)[1]


def hom_as_E_module(ind: InducedModule, n: Module) -> Module:
    """Hom_A(M, N) as a left E-module: e . f = "first e, then f"."""
    h = hom_space(ind.M, n)
    e = ind.E
    p = n.p
    act = np.zeros((e.base.dim, h.dim, h.dim), dtype=np.int64)
    for k, he in enumerate(e.right_action):
        for j, g in enumerate(h.matrices):
            act[k][:, j] = h.coords(la.matmul(g, he, p))
    return Module(e.base, h.dim, act)


def static_check_A(ind: InducedModule, n: Module) -> bool:
    """Is phi: M (x)_E Hom_A(M, N) -> N, m (x) f -> f(m), bijective?"""
    p = n.p
    h = hom_space(ind.M, n)
    hmod = hom_as_E_module(ind, n)
    q, t = _tensor_quotient(ind, hmod)
    m, dh = ind.dim, h.dim
    phi = np.zeros((n.dim, m * dh), dtype=np.int64)
    for j, g in enumerate(h.matrices):
        phi[:, np.arange(m) * dh + j] = g
    if q.relations.dim and la.matmul(phi, q.relations.basis.T, p).any():
        raise TheoremCheckFailed("phi is well defined on the tensor product")
    if n.dim == 0:
        return t.dim == 0
    phi_q = la.matmul(phi, q.lift(np.eye(t.dim, dtype=np.int64)), p)
    return t.dim == n.dim and la.rank(phi_q, p) == n.dim


def static_check_E(ind: InducedModule, u: Module) -> bool:
    """Is psi: U -> Hom_A(M, M (x)_E U), psi(u)(m) = m (x) u, bijective?"""
    p = u.p
    q, t = _tensor_quotient(ind, u)
    h = hom_space(ind.M, t)
    m = ind.dim
    images = []
    for j in range(u.dim):
        e_j = np.zeros((u.dim, 1), dtype=np.int64)
        e_j[j] = 1
        psi_j = q.project(la.kron(np.eye(m, dtype=np.int64), e_j, p))
        if not h.space.contains(psi_j.ravel()):
            raise TheoremCheckFailed("psi(u) is an A-homomorphism")
        images.append(psi_j.ravel())
    if h.dim != u.dim:
        return False
    return not images or la.rank(np.array(images), p) == u.dim


def restrict_to_F(ind: InducedModule, u: Module) -> Module:
    """F (x)_E U, built as an induced module with F ambient and E its subalgebra."""
    e_in_f, e_sub, change = _e_inside_f(ind)
    u2 = transport(u, e_sub.algebra, change)
    return induce(ind.F.base, e_sub, u2).M


def _e_inside_f(ind: InducedModule):
    f = ind.F.base
    coords = ind.e_in_f
    try:
        e_sub = Subalgebra.from_vectors(f, coords, name="E in F")
    except InvalidInput as exc:
        raise TheoremCheckFailed("E is a subalgebra of F", str(exc)) from exc
    # express the RREF basis of E-inside-F back in E's own basis
    change = np.stack([
        ind.E.hom.coords(ind.F.matrix(row)) for row in e_sub.basis.basis
    ]).reshape(e_sub.dim, ind.E.base.dim)
    return coords, e_sub, change


# --- stabilizers --------------------------------------------------------------------


def nested(b: Subalgebra, s: Subalgebra) -> tuple[Subalgebra, np.ndarray]:
    """B as a subalgebra of S's own algebra, plus the change of basis for B-modules."""
    if s.ambient is not b.ambient or not s.basis.contains(b.basis):
        raise HypothesesNotMet("containment violation: B is not contained in S")
    b_in_s = Subalgebra.from_vectors(s.algebra, s.coords(b.basis.basis), name="B in S")
    change = b.coords(s.to_ambient(b_in_s.basis.basis)).reshape(b_in_s.dim, b.dim)
    return b_in_s, change


@dataclass(frozen=True, eq=False)
class StabilizerReport:
    S: Subalgebra
    definition_check: dict[str, bool]
    criterion_check: dict[str, bool]

    @property
    def is_stabilizer(self) -> bool:
        return all(self.definition_check.values())

    @property
    def criterion_holds(self) -> bool:
        return all(self.criterion_check.values())

    def to_json(self) -> dict:
        return {
            "dimS": self.S.dim,
            "definition": dict(self.definition_check),
            "criterion": dict(self.criterion_check),
            "is_stabilizer": self.is_stabilizer,
        }


def is_stabilizer(a: Algebra, b: Subalgebra, v: Module, s: Subalgebra, seed: int = 0) -> StabilizerReport:
    if s.ambient is not a:
        raise HypothesesNotMet("containment violation: S is not a subalgebra of A")
    b_in_s, change = nested(b, s)
    try:
        cert_s = certify(s.algebra, seed)
    except NotCertifiedSemisimple:
        cert_s = None
    semisimple = cert_s is not None
    normal = semisimple and is_normal_subring(s.algebra, b_in_s, cert_s)
    v_s = transport(v, b_in_s.algebra, change)
    s_stable = is_stable(s.algebra, b_in_s, v_s)[0]
    ind = induce(a, b, v)
    socle_ok = v_socle(v, ind.restricted) == ind.image_of(s.basis.basis)
    definition = {
        "S semisimple": semisimple,
        "B normal in S": bool(normal),
        "V is S-stable": s_stable,
        "V-socle of induced module equals image of S (x)_B V": socle_ok,
    }
    j = annihilator_and_p(b, v, certify(b.algebra, seed)).J_ambient
    criterion = {
        "J is S-invariant": is_invariant(a, j, within=s.basis),
        "S + AJ + JA = A": (s.basis + product_space(a, a.full(), j) + product_space(a, j, a.full())).is_full(),
    }
    report = StabilizerReport(s, definition, criterion)
    # equivalence holds for semisimple S containing B as a normal subring
    if semisimple and normal and (s_stable and socle_ok) != report.criterion_holds:
        raise TheoremCheckFailed(
            "stabilizer definition agrees with the J-invariance criterion",
            f"definition={definition}, criterion={criterion}",
        )
    return report


def _subalgebra_or_closure_failure(a: Algebra, span: la.Subspace, name: str) -> Subalgebra:
    try:
        return Subalgebra.from_vectors(a, span.basis, name=name)
    except InvalidInput as exc:
        raise HypothesesNotMet(f"closure failure for {name}: {exc}") from exc


def rieffel_stabilizers(a: Algebra, b: Subalgebra, v: Module, seed: int = 0) -> tuple[StabilizerReport, StabilizerReport]:
    """The two standard stabilizers B + (1-p)A(1-p) and pAp + (1-p)A(1-p)."""
    ann = annihilator_and_p(b, v, certify(b.algebra, seed))
    pid = ann.p_ambient
    qid = (a.one - pid) % a.p

    def corner(x):
        xs = a.span(x)
        return product_space(a, product_space(a, xs, a.full()), xs)

    q_corner = corner(qid)
    s_min = _subalgebra_or_closure_failure(a, b.basis + q_corner, "S_min")
    s_max = _subalgebra_or_closure_failure(a, corner(pid) + q_corner, "S_max")
    if not s_max.basis.contains(s_min.basis):
        raise TheoremCheckFailed("S_min is contained in S_max")
    return is_stabilizer(a, b, v, s_min, seed), is_stabilizer(a, b, v, s_max, seed)


def _contains_v(a_module: Module, b: Subalgebra, v: Module) -> bool:
    return multiplicity(v, restrict(a_module, b)) > 0


def _pairwise_distinct(mods: list[Module], seed: int) -> bool:
    return not any(
        iso_test(mods[i], mods[j], seed)[0] for i in range(len(mods)) for j in range(i + 1, len(mods))
    )


def induce_through_stabilizer(
    a: Algebra, b: Subalgebra, v: Module, s: Subalgebra, seed: int = 0
) -> list[tuple[Module, Module]]:
    """Simple S-modules containing V, each paired with its (simple) induced A-module."""
    report = is_stabilizer(a, b, v, s, seed)
    if not report.is_stabilizer:
        raise HypothesesNotMet(f"S is not a stabilizer for V: {report.definition_check}")
    cert_a = certify(a, seed)
    cert_s = certify(s.algebra, seed)
    b_in_s, change = nested(b, s)
    v_s = transport(v, b_in_s.algebra, change)
    out = []
    for n in cert_s.simples:
        if multiplicity(v_s, restrict(n, b_in_s)) == 0:
            continue
        up = induce(a, s, n).M
        if not is_abs_simple(up, cert_a):
            raise TheoremCheckFailed("induction from a stabilizer preserves simplicity")
        if not _contains_v(up, b, v):
            raise TheoremCheckFailed("induced module contains V on restriction")
        out.append((n, up))
    if not _pairwise_distinct([up for _, up in out], seed):
        raise TheoremCheckFailed("induced modules are pairwise non-isomorphic")
    return out


def endalg_chain_check(a: Algebra, b: Subalgebra, v: Module, s: Subalgebra, seed: int = 0) -> tuple[int, int, int, int]:
    """dim End_A(V^A) = dim Hom_B(V, V^A|_B) = dim Hom_B(V, V^S|_B) = dim End_S(V^S)."""
    report = is_stabilizer(a, b, v, s, seed)
    if not report.is_stabilizer:
        raise HypothesesNotMet(f"S is not a stabilizer for V: {report.definition_check}")
    ind_a = induce(a, b, v)
    b_in_s, change = nested(b, s)
    v_s = transport(v, b_in_s.algebra, change)
    ind_s = induce(s.algebra, b_in_s, v_s)
    dims = (
        endo_dim(ind_a.M),
        hom_space(v, ind_a.restricted).dim,
        hom_space(v_s, ind_s.restricted).dim,
        endo_dim(ind_s.M),
    )
    if len(set(dims)) != 1:
        raise TheoremCheckFailed("endomorphism algebra dimension chain", f"dims = {dims}")
    return dims


@dataclass(frozen=True)
class FAlgebraReport:
    f_dims: list[int]
    multiplicities: list[int]
    e_subalgebra_of_f: bool
    every_f_module_projective: bool = True


def f_algebra_check(ind: InducedModule, cert_b: WedderburnCertificate | None = None, seed: int = 0) -> FAlgebraReport:
    """F = End_B(M|_B)^op is semisimple with blocks matching the multiplicities in M|_B, and E sits inside F."""
    cert_b = cert_b or certify(ind.B.algebra, seed)
    try:
        cert_f = certify(ind.F.base, seed)
    except NotCertifiedSemisimple as exc:
        raise TheoremCheckFailed("F is semisimple", str(exc)) from exc
    _e_inside_f(ind)  # raises if E is not closed inside F
    mults = sorted(m for m in (multiplicity(w, ind.restricted) for w in cert_b.simples) if m)
    f_dims = sorted(cert_f.dims)
    if mults != f_dims:
        raise TheoremCheckFailed("F block sizes equal the multiplicities of M restricted to B", f"{f_dims} vs {mults}")
    return FAlgebraReport(f_dims, mults, True)


@dataclass(frozen=True, eq=False)
class Presentation:
    left: np.ndarray  # (dim M) x (k * dim M): the map from k copies of M
    pi: np.ndarray  # (dim N) x (dim M)
    copies: int


def build_presentation(ind: InducedModule, n: Module, cert_a: WedderburnCertificate | None = None, seed: int = 0) -> Presentation:
    """An exact sequence (+)M -> M -> N -> 0 for a simple N containing V."""
    a, p = ind.A, ind.A.p
    cert_a = cert_a or certify(a, seed)
    emb = hom_space(ind.V, restrict(n, ind.B))
    if emb.dim == 0:
        raise HypothesesNotMet("N does not contain V on restriction to B")
    phi0 = emb.matrices[0]
    dv = ind.V.dim
    full = np.zeros((n.dim, a.dim * dv), dtype=np.int64)
    for i in range(a.dim):
        full[:, i * dv : (i + 1) * dv] = la.matmul(n.action[i], phi0, p)
    if ind.quotient.relations.dim and la.matmul(full, ind.quotient.relations.basis.T, p).any():
        raise TheoremCheckFailed("pi(a (x) v) = a.v is well defined")
    pi = la.matmul(full, ind.quotient.lift(np.eye(ind.dim, dtype=np.int64)), p)
    if la.rank(pi, p) != n.dim:
        raise TheoremCheckFailed("pi is surjective")
    kernel = la.nullspace(pi, p)
    pieces = []
    if kernel.dim:
        kmod, kemb = submodule(ind.M, kernel.basis.T)
        for simple, inner in simple_summands(kmod, cert_a, seed):
            onto = hom_space(ind.M, simple)
            if onto.dim == 0:
                raise TheoremCheckFailed("kernel summand is a quotient of M")
            pieces.append(la.matmul(la.matmul(kemb, inner, p), onto.matrices[0], p))
    left = np.hstack(pieces) if pieces else np.zeros((ind.dim, 0), dtype=np.int64)
    image = la.column_space(left, p) if pieces else la.Subspace.zero(ind.dim, p)
    if image != kernel:
        raise TheoremCheckFailed("image of the left map equals ker pi")
    return Presentation(left, pi, len(pieces))


# --- the correspondence ------------------------------------------------------------


@dataclass
class Pair:
    e_simple: Module
    a_simple: Module
    simple: bool
    contains_v: bool
    round_trip: bool


@dataclass
class CorrespondenceReport:
    V: Module
    induced: InducedModule
    hypotheses: dict[str, bool]
    stable: bool
    multiplicity: int | None
    e_dims: list[int]
    pairs: list[Pair]
    pairwise_distinct: bool
    oracle_complete: bool
    dimension_laws: dict[str, bool]
    warnings: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def E(self) -> EndoAlgebraOp:
        return self.induced.E

    @property
    def a_simples(self) -> list[Module]:
        return [pr.a_simple for pr in self.pairs]

    @property
    def e_simples(self) -> list[Module]:
        return [pr.e_simple for pr in self.pairs]

    def failures(self) -> list[str]:
        bad = []
        for k, pr in enumerate(self.pairs):
            for flag in ("simple", "contains_v", "round_trip"):
                if not getattr(pr, flag):
                    bad.append(f"pair {k}: {flag}")
        if not self.pairwise_distinct:
            bad.append("A-modules pairwise non-isomorphic")
        if not self.oracle_complete:
            bad.append("oracle completeness")
        bad.extend(f"dimension law {k}" for k, ok in self.dimension_laws.items() if not ok)
        return bad

    def to_json(self) -> dict:
        out = {
            "hypotheses": dict(self.hypotheses),
            "stable": self.stable,
            "dimE": self.E.base.dim,
            "E_blocks": list(self.e_dims),
            "dimV": self.V.dim,
            "dimM": self.induced.dim,
            "pairs": [
                {
                    "e_simple_dim": pr.e_simple.dim,
                    "a_simple_dim": pr.a_simple.dim,
                    "simple": pr.simple,
                    "contains_V": pr.contains_v,
                    "round_trip": pr.round_trip,
                }
                for pr in self.pairs
            ],
            "pairwise_distinct": self.pairwise_distinct,
            "oracle_complete": self.oracle_complete,
            "dimension_laws": dict(self.dimension_laws),
            "warnings": list(self.warnings),
        }
        out.update(self.extra)
        return out


def check_hypotheses(a: Algebra, b: Subalgebra, v: Module, seed: int = 0) -> dict[str, bool]:
    hyp = {}
    for key, alg in (("A semisimple", a), ("B semisimple", b.algebra)):
        try:
            certify(alg, seed)
            hyp[key] = True
        except NotCertifiedSemisimple:
            hyp[key] = False
    hyp["V absolutely simple"] = v.dim > 0 and endo_dim(v) == 1
    hyp["B normal in A"] = hyp["A semisimple"] and is_normal_subring(a, b, certify(a, seed))
    return hyp


def correspond(a: Algebra, b: Subalgebra, v: Module, seed: int = 0, strict: bool = True) -> CorrespondenceReport:
    from .oracle import oracle_simple_count

    hyp = check_hypotheses(a, b, v, seed)
    if not all(hyp.values()):
        bad = ", ".join(k for k, ok in hyp.items() if not ok)
        raise HypothesesNotMet(f"hypotheses violated: {bad}")
    rng = random.Random(seed)
    cert_a = certify(a, seed)
    cert_b = certify(b.algebra, seed)
    ind = induce(a, b, v)
    stable, n = is_stable(a, b, v, ind)
    try:
        cert_e = certify(ind.E.base, seed)
    except NotCertifiedSemisimple as exc:
        raise TheoremCheckFailed("E is semisimple", str(exc)) from exc

    pairs = []
    laws: dict[str, bool] = {}
    for u in cert_e.simples:
        nmod = tensor_over_E(ind, u)
        back = hom_as_E_module(ind, nmod)
        pairs.append(
            Pair(
                e_simple=u,
                a_simple=nmod,
                simple=is_abs_simple(nmod, cert_a),
                contains_v=nmod.dim > 0 and _contains_v(nmod, b, v),
                round_trip=iso_test(back, u, rng.randrange(2**32))[0],
            )
        )
    a_mods = [pr.a_simple for pr in pairs]
    distinct = _pairwise_distinct(a_mods, seed)

    expected = [w for w in cert_a.simples if _contains_v(w, b, v)]
    matched = all(sum(iso_test(w, x, seed)[0] for x in a_mods) == 1 for w in expected)
    complete = matched and len(expected) == len(a_mods) == oracle_simple_count(ind.E.base)

    if stable:
        laws["dim M = dim V * dim E"] = ind.dim == v.dim * ind.E.base.dim
        laws["dim N = dim V * dim U"] = all(pr.a_simple.dim == v.dim * pr.e_simple.dim for pr in pairs)

    warnings = []
    ann = annihilator_and_p(b, v, cert_b)
    if not ann.p_is_primitive:
        warnings.append(
            "ann_B(V) = pB with p = 1 - e_V, which is central but not a primitive central idempotent of B"
        )
    report = CorrespondenceReport(
        V=v,
        induced=ind,
        hypotheses=hyp,
        stable=stable,
        multiplicity=n,
        e_dims=cert_e.dims,
        pairs=pairs,
        pairwise_distinct=distinct,
        oracle_complete=complete,
        dimension_laws=laws,
        warnings=warnings,
    )
    if strict and report.failures():
        raise TheoremCheckFailed("Clifford correspondence", "; ".join(report.failures()))
    return report
