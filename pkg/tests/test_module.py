import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cliffordcorr import linalg as la
from cliffordcorr.algebra import Algebra, certify, group_algebra, opposite, subalgebra_from_generators
from cliffordcorr.errors import InvalidInput, NoCertificate, NotAbsolutelySimple
from cliffordcorr.module import (
    Module,
    direct_sum,
    endo_algebra_op,
    endo_dim,
    extract_simple,
    hom_space,
    is_abs_simple,
    iso_test,
    isotypic_decompose,
    multiplicity,
    one_dim_module,
    regular_module,
    restrict,
    simple_summands,
    submodule,
    validate_module,
)
from cliffordcorr.oracle import oracle_is_simple, symmetric3

C2 = [[0, 1], [1, 0]]
C3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


@pytest.fixture(scope="module")
def kc2():
    return group_algebra(C2, 7)


@pytest.fixture(scope="module")
def ks3():
    els, t = symmetric3()
    return els, group_algebra(t, 7)


def two_dim_simple(ks3):
    _, a = ks3
    (w,) = [m for m in certify(a).simples if m.dim == 2]
    return w


def conjugate(m: Module, g: np.ndarray) -> Module:
    """The same module written in another basis: g^-1 rho g."""
    p = m.p
    gi = la.inverse(g, p)
    return Module(m.algebra, m.dim, np.stack([gi @ x @ g % p for x in m.action]))


def test_validate_module_examples(kc2):
    validate_module(regular_module(kc2))
    validate_module(one_dim_module(kc2, [1, 1]))
    validate_module(one_dim_module(kc2, [1, 6]))
    with pytest.raises(InvalidInput, match="not a representation"):
        validate_module(one_dim_module(kc2, [1, 2]))


def test_regular_module_examples(kc2, ks3):
    r1 = regular_module(Algebra(7, 1, [[[1]]], [1]))
    assert r1.action.tolist() == [[[1]]]
    assert regular_module(kc2).action.tolist() == [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    reg = regular_module(ks3[1])
    for mat in reg.action:
        # permutation matrices: one 1 in every row and column
        assert (mat.sum(axis=0) == 1).all() and (mat.sum(axis=1) == 1).all() and set(mat.ravel()) <= {0, 1}


def test_restrict_examples(ks3):
    els, a = ks3
    trivial = one_dim_module(a, [1] * 6)
    unit_sub = subalgebra_from_generators(a, [])
    r = restrict(trivial, unit_sub)
    assert r.algebra.dim == 1 and r.action.tolist() == [[[1]]]
    w = two_dim_simple(ks3)
    c = a.basis_vector(els.index((1, 2, 0)))
    a3 = subalgebra_from_generators(a, [c])
    w_a3 = restrict(w, a3)
    assert w_a3.dim == 2
    # the 3-cycle has eigenvalues 2 and 4 (the primitive cube roots of 1 mod 7)
    m = w.act(c)
    eig = {lam for lam in range(7) if la.rank((m - lam * np.eye(2, dtype=np.int64)) % 7, 7) < 2}
    assert eig == {2, 4}


def test_hom_space_examples(kc2, ks3):
    w = two_dim_simple(ks3)
    assert hom_space(w, w).dim == 1
    trivial, sign = one_dim_module(kc2, [1, 1]), one_dim_module(kc2, [1, 6])
    assert hom_space(trivial, sign).dim == 0
    assert hom_space(regular_module(kc2), trivial).dim == 1


def test_hom_space_matrices_intertwine(ks3):
    _, a = ks3
    reg = regular_module(a)
    w = two_dim_simple(ks3)
    h = hom_space(w, reg)
    assert h.dim == 2
    for f in h.matrices:
        for i in range(a.dim):
            assert np.array_equal(reg.action[i] @ f % 7, f @ w.action[i] % 7)


def test_endo_algebra_op_examples(kc2, ks3):
    w = two_dim_simple(ks3)
    assert endo_algebra_op(w).base.dim == 1
    e = endo_algebra_op(direct_sum(w, w)).base
    assert e.dim == 4 and certify(e).dims == [2]
    e2 = endo_algebra_op(direct_sum(one_dim_module(kc2, [1, 1]), one_dim_module(kc2, [1, 6]))).base
    assert e2.dim == 2 and e2.is_commutative() and certify(e2).dims == [1, 1]


def test_endo_algebra_op_product_is_reversed_composition(ks3):
    w = two_dim_simple(ks3)
    e = endo_algebra_op(direct_sum(w, w))
    mats = e.right_action
    for i in range(4):
        for j in range(4):
            prod = e.base.product(e.base.basis_vector(i), e.base.basis_vector(j))
            assert np.array_equal(e.matrix(prod), mats[j] @ mats[i] % 7)


def test_endo_of_regular_matches_opposite(ks3):
    _, a = ks3
    e = endo_algebra_op(regular_module(a)).base
    assert sorted(certify(e).dims) == sorted(certify(opposite(a)).dims)


def test_is_abs_simple_examples(kc2, ks3):
    _, a = ks3
    cert = certify(a)
    assert is_abs_simple(one_dim_module(a, [1] * 6), cert)
    assert not is_abs_simple(regular_module(kc2), certify(kc2))
    w = two_dim_simple(ks3)
    assert is_abs_simple(w, cert) and oracle_is_simple(w)
    with pytest.raises(NoCertificate):
        is_abs_simple(w, None)
    with pytest.raises(NoCertificate):
        is_abs_simple(w, certify(kc2))


def test_iso_test_examples(kc2, ks3):
    w = two_dim_simple(ks3)
    ok, wit = iso_test(w, w)
    assert ok and np.array_equal(wit, np.eye(2))
    assert iso_test(one_dim_module(kc2, [1, 1]), one_dim_module(kc2, [1, 6])) == (False, None)
    kc3 = group_algebra(C3, 7)
    chars = [one_dim_module(kc3, [1, pow(2, k, 7), pow(4, k, 7)]) for k in range(3)]
    for c in chars:
        validate_module(c)
    ok, wit = iso_test(regular_module(kc3), direct_sum(*chars))
    assert ok and la.rank(wit, 7) == 3
    assert [hom_space(c, regular_module(kc3)).dim for c in chars] == [1, 1, 1]


def test_isotypic_decompose_examples(kc2, ks3):
    w = two_dim_simple(ks3)
    _, a = ks3
    assert [c.module.dim for c in isotypic_decompose(w, certify(a))] == [2]
    assert sorted(c.module.dim for c in isotypic_decompose(regular_module(kc2), certify(kc2))) == [1, 1]
    comps = isotypic_decompose(regular_module(a), certify(a))
    assert sorted(c.module.dim for c in comps) == [1, 1, 4]


def test_extract_simple_examples(kc2, ks3):
    _, a = ks3
    w = two_dim_simple(ks3)
    assert iso_test(extract_simple(w), w)[0]
    (big,) = [c for c in isotypic_decompose(regular_module(a), certify(a)) if c.module.dim == 4]
    s, emb = extract_simple(big.module, seed=1, with_embedding=True)
    assert s.dim == 2 and oracle_is_simple(s) and la.rank(emb, 7) == 2
    comps = isotypic_decompose(regular_module(kc2), certify(kc2))
    (triv,) = [c for c in comps if c.idempotent.tolist() == [4, 4]]
    assert iso_test(extract_simple(triv.module), one_dim_module(kc2, [1, 1]))[0]


def test_multiplicity_requires_absolutely_simple(kc2):
    with pytest.raises(NotAbsolutelySimple):
        multiplicity(regular_module(kc2), regular_module(kc2))


def test_submodule_rejects_non_invariant(kc2):
    with pytest.raises(InvalidInput, match="not invariant"):
        submodule(regular_module(kc2), [[1], [0]])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.integers(0, 2**32))
def test_semisimple_module_invariants(mults, seed):
    els, t = symmetric3()
    a = group_algebra(t, 7)
    cert = certify(a)
    parts = [s for s, m in zip(cert.simples, mults) for _ in range(m)]
    if not parts:
        return
    n = direct_sum(*parts)
    rng = np.random.default_rng(seed)
    while True:
        g = rng.integers(0, 7, size=(n.dim, n.dim))
        if la.rank(g, 7) == n.dim:
            break
    n2 = conjugate(n, g)
    validate_module(n2)
    assert [multiplicity(s, n2) for s in cert.simples] == mults
    assert n2.dim == sum(m * s.dim for m, s in zip(mults, cert.simples))
    reg = regular_module(a)
    assert hom_space(n2, reg).dim == hom_space(reg, n2).dim
    assert iso_test(n, n2, seed)[0]
    assert endo_dim(n2) == sum(m * m for m in mults)
    summands = simple_summands(n2, cert, seed)
    assert len(summands) == sum(mults)
    stacked = np.hstack([emb for _, emb in summands])
    assert la.rank(stacked, 7) == n2.dim
