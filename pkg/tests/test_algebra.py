import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cliffordcorr import groups
from cliffordcorr import linalg as la
from cliffordcorr.algebra import (
    Algebra,
    Subalgebra,
    center,
    certify,
    direct_product_table,
    group_algebra,
    opposite,
    primitive_central_idempotents,
    primitive_idempotent,
    product_space,
    skew_group_algebra,
    subalgebra_from_generators,
    twisted_group_algebra,
    validate_algebra,
    wedderburn,
)
from cliffordcorr.errors import InvalidInput, NotCertifiedSemisimple
from cliffordcorr.oracle import c2xc2_cocycle, symmetric3

C2 = [[0, 1], [1, 0]]


def c3_table():
    return groups.from_generators([groups.cycle(0, 1, 2, degree=3)], 3)[1]


def matrix_blocks_algebra(dims, p, change=None):
    """Direct sum of full matrix algebras M_d, optionally in a changed basis."""
    n = sum(d * d for d in dims)
    mul = np.zeros((n, n, n), dtype=np.int64)
    offs, off = [], 0
    for d in dims:
        offs.append(off)
        off += d * d
    for off, d in zip(offs, dims):
        for i in range(d):
            for j in range(d):
                for l in range(d):
                    mul[off + i * d + j, off + j * d + l, off + i * d + l] = 1
    one = np.zeros(n, dtype=np.int64)
    for off, d in zip(offs, dims):
        one[[off + i * d + i for i in range(d)]] = 1
    a = Algebra(p, n, mul, one)
    if change is None:
        return a
    # new basis vectors are the rows of ``change``
    inv = la.inverse(change, p)
    prods = np.einsum("ri,sj,ijk->rsk", change, change, mul) % p
    new_mul = np.einsum("rsk,kt->rst", prods, inv) % p
    new_one = one @ inv % p
    return Algebra(p, n, new_mul, new_one)


def block_algebra(a, e):
    """The two-sided ideal A e as an algebra with unit e."""
    ideal = product_space(a, a.full(), a.span(e))
    k = ideal.dim
    prods = np.stack([[a.product(x, y) for y in ideal.basis] for x in ideal.basis])
    mul = ideal.coords(prods.reshape(k * k, a.dim)).reshape(k, k, k)
    return Algebra(a.p, k, mul, ideal.coords(e))


# --- validation and constructions --------------------------------------------------


def test_validate_examples():
    validate_algebra(Algebra(7, 1, [[[1]]], [1]))
    a = group_algebra(C2, 7)
    validate_algebra(a)
    bad = a.mul.copy()
    bad[0, 0, 0] = 2
    with pytest.raises(InvalidInput, match="not associative"):
        validate_algebra(Algebra(7, 2, bad, a.one))


def test_bad_unit_is_reported():
    a = group_algebra(C2, 7)
    with pytest.raises(InvalidInput, match="bad unit"):
        validate_algebra(Algebra(7, 2, a.mul, [0, 1]))


def test_shape_errors():
    with pytest.raises(InvalidInput):
        Algebra(7, 2, np.zeros((2, 2, 3)), [1, 0])
    with pytest.raises(InvalidInput):
        Algebra.from_triples(7, 2, [1, 0], [[0, 0, 5, 1]])


def test_group_algebra_examples():
    a1 = group_algebra([[0]], 7)
    assert a1.dim == 1 and a1.one.tolist() == [1]
    a2 = group_algebra(C2, 7)
    g = a2.basis_vector(1)
    assert a2.product(g, g).tolist() == [1, 0]
    els, t = symmetric3()
    assert len(els) == 6
    validate_algebra(group_algebra(t, 7))


@pytest.mark.parametrize(
    "table, msg",
    [
        ([[0, 1], [1, 1]], "inverses"),
        ([[1, 0], [0, 1]], "identity"),
        ([[0, 1], [1, 2]], "closure"),
    ],
)
def test_group_table_errors(table, msg):
    with pytest.raises(InvalidInput, match=msg):
        group_algebra(table, 7)


def test_twisted_group_algebra():
    _, t, alpha = c2xc2_cocycle(7)
    assert np.array_equal(twisted_group_algebra(t, np.ones((4, 4)), 7).mul, group_algebra(t, 7).mul)
    tw = twisted_group_algebra(t, alpha, 7)
    validate_algebra(tw)
    cert = certify(tw)
    assert cert.dims == [2]
    assert not tw.is_commutative()
    bad = alpha.copy()
    bad[0, 1] = 2
    with pytest.raises(InvalidInput, match="normalized"):
        twisted_group_algebra(t, bad, 7)
    bad = alpha.copy()
    bad[1, 2] = 2
    with pytest.raises(InvalidInput, match="cocycle identity"):
        twisted_group_algebra(t, bad, 7)


def test_skew_group_algebra_trivial_action_is_direct_product():
    b = group_algebra(c3_table(), 7)
    t2 = np.array(C2)
    eye = np.eye(3, dtype=np.int64)
    sk = skew_group_algebra(b, t2, [eye, eye])
    # b_i#g at i*|G|+g, the same indexing as the direct product C3 x C2
    direct = group_algebra(direct_product_table(c3_table(), t2), 7)
    assert np.array_equal(sk.mul, direct.mul) and np.array_equal(sk.one, direct.one)
    assert sk.is_commutative()
    assert sorted(certify(sk).dims) == [1] * 6


def test_skew_group_algebra_inversion_matches_s3():
    b = group_algebra(c3_table(), 7)
    inversion = np.eye(3, dtype=np.int64)[:, [0, 2, 1]]
    sk = skew_group_algebra(b, np.array(C2), [np.eye(3, dtype=np.int64), inversion])
    validate_algebra(sk)
    _, t = symmetric3()
    assert sorted(certify(sk).dims) == sorted(certify(group_algebra(t, 7)).dims) == [1, 1, 2]


def test_skew_group_algebra_identity_group():
    b = group_algebra(c3_table(), 7)
    sk = skew_group_algebra(b, [[0]], [np.eye(3, dtype=np.int64)])
    assert np.array_equal(sk.mul, b.mul)


def test_skew_group_algebra_errors():
    b = group_algebra(c3_table(), 7)
    eye = np.eye(3, dtype=np.int64)
    with pytest.raises(InvalidInput, match="not an automorphism"):
        skew_group_algebra(b, np.array(C2), [eye, 2 * eye])
    # inversion is an automorphism, but inversion twice is not g^2 acting as inversion
    swap = eye[:, [0, 2, 1]]
    with pytest.raises(InvalidInput, match="not an action"):
        skew_group_algebra(b, np.array(c3_table()), [eye, swap, swap])


def test_opposite_of_twisted_algebra():
    _, t, alpha = c2xc2_cocycle(7)
    tw = twisted_group_algebra(t, alpha, 7)
    op = opposite(tw)
    validate_algebra(op)
    assert certify(op).dims == [2]


def test_subalgebra_from_generators():
    _, t = symmetric3()
    a = group_algebra(t, 7)
    assert subalgebra_from_generators(a, []).dim == 1
    assert subalgebra_from_generators(a, np.eye(6, dtype=np.int64)).dim == 6
    els, _ = symmetric3()
    c3 = a.basis_vector(els.index((1, 2, 0)))
    assert subalgebra_from_generators(a, [c3]).dim == 3


def test_subalgebra_rejects_non_closed_and_non_unital():
    _, t = symmetric3()
    a = group_algebra(t, 7)
    with pytest.raises(InvalidInput, match="identity"):
        Subalgebra.from_vectors(a, [a.basis_vector(1)])
    with pytest.raises(InvalidInput, match="closed"):
        Subalgebra.from_vectors(a, [a.one, a.basis_vector(1) + a.basis_vector(2)])


def test_center_examples():
    assert center(group_algebra(C2, 7)).is_full
    els, t = symmetric3()
    a = group_algebra(t, 7)
    z = center(a)
    assert z.dim == 3
    # class sums, computed from the table by conjugation
    inv = [int(np.flatnonzero(t[g] == 0)[0]) for g in range(6)]
    classes = {frozenset(int(t[t[h, g], inv[h]]) for h in range(6)) for g in range(6)}
    sums = [np.isin(np.arange(6), sorted(c)).astype(np.int64) for c in classes]
    assert len(classes) == 3 and a.span(sums) == z
    assert center(matrix_blocks_algebra([2], 7)).dim == 1


def test_product_space_of_ideal():
    a = group_algebra(C2, 7)
    e = np.array([4, 4])
    assert product_space(a, a.full(), a.span(e)) == a.span(e)


# --- idempotents and certificates ------------------------------------------------------


def test_primitive_central_idempotents_examples():
    assert primitive_central_idempotents(Algebra(7, 1, [[[1]]], [1])).idempotents.tolist() == [[1]]
    ids = primitive_central_idempotents(group_algebra(C2, 7))
    # (1 +- g)/2 with 1/2 = 4
    assert sorted(map(tuple, ids.idempotents.tolist())) == [(4, 3), (4, 4)]
    _, t = symmetric3()
    assert len(primitive_central_idempotents(group_algebra(t, 7))) == 3


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32))
def test_central_idempotents_do_not_depend_on_seed(seed):
    _, t = symmetric3()
    a = group_algebra(t, 7)
    ids = primitive_central_idempotents(a, seed)
    ids.check()
    assert np.array_equal(ids.idempotents, primitive_central_idempotents(a, 0).idempotents)


def test_wedderburn_examples():
    _, t = symmetric3()
    cert = wedderburn(group_algebra(t, 7))
    assert sorted(cert.dims) == [1, 1, 2] and sum(d * d for d in cert.dims) == 6
    assert wedderburn(Algebra(7, 1, [[[1]]], [1])).dims == [1]
    with pytest.raises(NotCertifiedSemisimple, match="not certified semisimple"):
        wedderburn(group_algebra(c3_table(), 3))


def test_non_split_field_fails_certification():
    # x^2 + x + 1 has no roots mod 5, so GF(5) does not split C3
    with pytest.raises(NotCertifiedSemisimple):
        wedderburn(group_algebra(c3_table(), 5))


def test_primitive_idempotent_examples():
    assert primitive_idempotent(Algebra(7, 1, [[[1]]], [1])).tolist() == [1]
    a = group_algebra(C2, 7)
    e_plus = np.array([4, 4])
    blk = block_algebra(a, e_plus)
    assert blk.dim == 1 and primitive_idempotent(blk).tolist() == blk.one.tolist()
    _, t = symmetric3()
    s3 = group_algebra(t, 7)
    cert = certify(s3)
    (big,) = [b for b in cert.blocks if b.d == 2]
    m2 = block_algebra(s3, big.idempotent)
    f = primitive_idempotent(m2, seed=5)
    assert np.array_equal(m2.product(f, f), f)
    fs = m2.span(f)
    assert product_space(m2, product_space(m2, fs, m2.full()), fs).dim == 1
    assert product_space(m2, m2.full(), fs).dim == 2


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
    st.sampled_from([5, 7, 13]),
    st.integers(0, 2**32),
)
def test_wedderburn_recovers_blocks_after_change_of_basis(dims, p, seed):
    n = sum(d * d for d in dims)
    rng = np.random.default_rng(seed)
    while True:
        change = rng.integers(0, p, size=(n, n))
        if la.rank(change, p) == n:
            break
    a = matrix_blocks_algebra(dims, p, change)
    validate_algebra(a)
    cert = wedderburn(a, seed)
    assert sorted(cert.dims) == sorted(dims)
    assert len(cert.dims) == center(a).dim
    assert sorted(wedderburn(opposite(a), seed).dims) == sorted(dims)
    cert.idempotents.check()


@pytest.mark.parametrize("name", ["S3>A3", "D4>Z", "Q8>C4", "C6>C3", "twisted C2xC2", "C3:C2 inversion"])
def test_certified_corpus_invariants(library, name):
    a = library[name].A
    cert = certify(a)
    assert sum(d * d for d in cert.dims) == a.dim
    assert len(cert.dims) == center(a).dim
    assert sorted(certify(opposite(a)).dims) == sorted(cert.dims)


def test_certify_is_memoized_and_deterministic():
    _, t = symmetric3()
    a = group_algebra(t, 7)
    assert certify(a, 3) is certify(a, 3)
    b = group_algebra(t, 7)
    assert np.array_equal(
        np.stack([blk.idempotent for blk in wedderburn(a, 3).blocks]),
        np.stack([blk.idempotent for blk in wedderburn(b, 3).blocks]),
    )
