import numpy as np
import pytest

from cliffordcorr import linalg as la
from cliffordcorr.algebra import Subalgebra, certify, whole
from cliffordcorr.clifford import (
    annihilator_and_p,
    build_presentation,
    correspond,
    endalg_chain_check,
    f_algebra_check,
    hom_as_E_module,
    induce,
    induce_through_stabilizer,
    is_invariant,
    is_normal_subring,
    is_stabilizer,
    is_stable,
    restrict_to_F,
    rieffel_stabilizers,
    static_check_A,
    static_check_E,
    tensor_over_E,
    v_socle,
)
from cliffordcorr.errors import HypothesesNotMet, InvalidInput
from cliffordcorr.module import (
    Module,
    endo_dim,
    is_abs_simple,
    iso_test,
    one_dim_module,
    regular_module,
    restrict,
    zero_module,
)
from cliffordcorr.oracle import oracle_is_simple

GROUP_CASES = ["S3>A3", "D4>Z", "Q8>C4", "C6>C3"]


def over_whole(m: Module, s: Subalgebra) -> Module:
    """Re-read an A-module as a module over whole(A) (same basis)."""
    return Module(s.algebra, m.dim, m.action)


def s3_simple(inst, dim, sign=None):
    """Simple S3-module by dimension; for dim 1 pick trivial (sign=+1) or sign (-1)."""
    a = inst.A
    els = inst.group["elements"]
    tr = a.basis_vector(els.index((1, 0, 2)))
    for m in certify(a).simples:
        if m.dim == dim and (sign is None or int(m.act(tr)[0, 0]) == sign % 7):
            return m
    raise LookupError


@pytest.fixture(scope="module")
def s3(library):
    inst = library["S3>A3"]
    triv, omega, omega2 = inst.simples_of_B
    return inst, triv, omega, omega2


# --- induction and socles ------------------------------------------------------------


def test_induce_from_whole_algebra_is_identity(s3):
    inst = s3[0]
    w = s3_simple(inst, 2)
    top = whole(inst.A)
    ind = induce(inst.A, top, over_whole(w, top))
    assert ind.dim == 2 and la.rank(ind.iota, 7) == 2
    assert iso_test(ind.M, w)[0]


def test_induce_examples(s3):
    inst, triv, omega, _ = s3
    assert induce(inst.A, inst.B, triv).dim == 2
    ind = induce(inst.A, inst.B, omega)
    assert ind.dim == 2
    assert is_abs_simple(ind.M, certify(inst.A)) and oracle_is_simple(ind.M)


@pytest.mark.parametrize("name", GROUP_CASES)
def test_induced_dimension_is_index_times_dim(library, name):
    inst = library[name]
    index = inst.A.dim // inst.B.dim
    for v in inst.simples_of_B:
        ind = induce(inst.A, inst.B, v)
        assert ind.dim == index * v.dim
        # iota is injective and B-equivariant
        assert la.rank(ind.iota, inst.A.p) == v.dim
        res = ind.restricted
        for i in range(inst.B.dim):
            assert np.array_equal(res.action[i] @ ind.iota % inst.A.p, ind.iota @ v.action[i] % inst.A.p)


def test_induce_rejects_foreign_subalgebra(s3, library):
    inst, triv, _, _ = s3
    with pytest.raises(InvalidInput, match="ambient mismatch"):
        induce(library["D4>Z"].A, inst.B, triv)


def test_v_socle_examples(s3, library):
    inst, triv, omega, _ = s3
    assert v_socle(omega, omega).is_full()
    c2 = library["S3>C2"]
    trivial_c2, sign_c2 = c2.simples_of_B
    assert v_socle(trivial_c2, sign_c2).dim == 0
    ind = induce(inst.A, inst.B, omega)
    assert v_socle(omega, ind.restricted).dim == 1


def test_is_stable_examples(s3, library):
    inst, triv, omega, _ = s3
    assert is_stable(inst.A, inst.B, triv) == (True, 2)
    assert is_stable(inst.A, inst.B, omega) == (False, None)
    d4 = library["D4>Z"]
    sign = d4.simples_of_B[1]
    assert is_stable(d4.A, d4.B, sign) == (True, 4)


# --- annihilators, invariance, normality -------------------------------------------


def test_annihilator_of_sign_of_c2(library):
    inst = library["S3>C2"]
    # B = k<(1 2)> with basis {1, t}; sign sends t to -1
    sign = inst.simples_of_B[1]
    ann = annihilator_and_p(inst.B, sign)
    assert ann.J.dim == 1
    assert ann.p_idem.tolist() == [4, 4]
    assert ann.J == inst.B.algebra.span([[1, 1]])
    assert ann.p_is_primitive


def test_annihilator_of_one_block_algebra(library):
    tw = library["twisted C2xC2"].A
    top = whole(tw)
    (v,) = certify(top.algebra).simples
    ann = annihilator_and_p(top, v)
    assert ann.J.dim == 0 and not ann.p_idem.any()


def test_annihilator_of_omega(s3):
    inst, triv, omega, omega2 = s3
    ann = annihilator_and_p(inst.B, omega)
    assert ann.J.dim == 2
    b = inst.B.algebra
    cert = certify(b)
    owners = [e for e in cert.idempotents if np.array_equal(omega.act(e), np.eye(1))]
    others = [e for e in cert.idempotents if not np.array_equal(e, owners[0])]
    assert np.array_equal(ann.p_idem, sum(others) % 7)
    # J is exactly the kernel of the representation
    for row in ann.J.basis:
        assert not omega.act(row).any()
    assert not ann.p_is_primitive


def test_is_invariant_examples(s3):
    inst, triv, omega, _ = s3
    a = inst.A
    assert is_invariant(a, la.Subspace.zero(a.dim, 7))
    assert is_invariant(a, inst.B.basis)
    j = annihilator_and_p(inst.B, omega).J_ambient
    assert not is_invariant(a, j)


def test_normality_examples(s3, library):
    inst = s3[0]
    assert is_normal_subring(inst.A, whole(inst.A))
    assert is_normal_subring(inst.A, inst.B)
    c2 = library["S3>C2"]
    assert not is_normal_subring(c2.A, c2.B)


@pytest.mark.parametrize("name", ["twisted C2xC2", "C3:C2 inversion", "C3xC2 trivial"])
def test_subalgebra_of_crossed_products_is_normal(library, name):
    inst = library[name]
    assert is_normal_subring(inst.A, inst.B)


@pytest.mark.parametrize("name", GROUP_CASES + ["C3:C2 inversion", "C3xC2 trivial", "twisted C2xC2"])
def test_stability_iff_annihilator_invariant(library, name):
    inst = library[name]
    for v in inst.simples_of_B:
        j = annihilator_and_p(inst.B, v).J_ambient
        assert is_stable(inst.A, inst.B, v)[0] == is_invariant(inst.A, j)


def test_trivial_action_makes_every_simple_stable(library):
    inst = library["C3xC2 trivial"]
    assert all(is_stable(inst.A, inst.B, v)[0] for v in inst.simples_of_B)


# --- the functors and static checks ---------------------------------------------------


def test_tensor_over_E_examples(s3):
    inst, triv, omega, _ = s3
    ind = induce(inst.A, inst.B, triv)
    e = ind.E.base
    assert iso_test(tensor_over_E(ind, regular_module(e)), ind.M)[0]
    assert tensor_over_E(ind, zero_module(e)).dim == 0
    nontrivial = [u for u in certify(e).simples if not iso_test(tensor_over_E(ind, u), s3_simple(inst, 1, 1))[0]]
    (u_sign,) = nontrivial
    n = tensor_over_E(ind, u_sign)
    els = inst.group["elements"]
    tr = inst.A.basis_vector(els.index((1, 0, 2)))
    assert n.dim == 1 and int(n.act(tr)[0, 0]) == 6


def test_hom_as_E_module_examples(s3):
    inst, triv, omega, _ = s3
    ind = induce(inst.A, inst.B, triv)
    assert hom_as_E_module(ind, ind.M).dim == ind.E.base.dim
    assert hom_as_E_module(ind, s3_simple(inst, 2)).dim == 0
    assert hom_as_E_module(ind, s3_simple(inst, 1, -1)).dim == 1


def test_static_checks(s3):
    inst, triv, omega, _ = s3
    ind = induce(inst.A, inst.B, triv)
    assert static_check_A(ind, ind.M)
    assert not static_check_A(ind, s3_simple(inst, 2))
    assert static_check_A(ind, s3_simple(inst, 1, -1))
    e = ind.E.base
    assert static_check_E(ind, zero_module(e))
    for u in certify(e).simples + [regular_module(e)]:
        assert static_check_E(ind, u)


@pytest.mark.parametrize("name", ["S3>A3", "D4>Z", "Q8>C4", "C3:C2 inversion"])
def test_round_trips_on_static_objects(library, name):
    inst = library[name]
    cert = certify(inst.A)
    for v in inst.simples_of_B:
        ind = induce(inst.A, inst.B, v)
        if not is_stable(inst.A, inst.B, v, ind)[0]:
            continue
        for u in certify(ind.E.base).simples:
            n = tensor_over_E(ind, u)
            assert n.dim == v.dim * u.dim
            assert iso_test(hom_as_E_module(ind, n), u)[0]
        for n in cert.simples:
            if static_check_A(ind, n):
                assert iso_test(tensor_over_E(ind, hom_as_E_module(ind, n)), n)[0]
            # simples containing V have V-isotypic restriction when V is stable
            if endo_dim(v) == 1 and v_socle(v, restrict(n, inst.B)).dim > 0:
                assert v_socle(v, restrict(n, inst.B)).dim == n.dim


def test_restrict_to_F(s3):
    inst, triv, omega, _ = s3
    ind = induce(inst.A, inst.B, triv)
    f, e = ind.F.base, ind.E.base
    assert f.dim == 4 and e.dim == 2
    assert restrict_to_F(ind, regular_module(e)).dim == f.dim
    u = certify(e).simples[0]
    got = restrict_to_F(ind, u)
    # dim F (x)_E U = dim F * dim U - rank of the relations f e (x) u - f (x) e u
    rels = []
    e_coords = ind.e_in_f
    for k in range(e.dim):
        right = np.stack([f.product(f.basis_vector(i), e_coords[k]) for i in range(f.dim)]).T
        rels.append((right - u.action[k][0, 0] * np.eye(f.dim, dtype=np.int64)) % 7)
    expected = f.dim * u.dim - la.rank(np.hstack(rels), 7)
    assert got.dim == expected == 2


# --- stabilizers -------------------------------------------------------------------------


def test_standard_stabilizers_for_omega(s3):
    inst, triv, omega, _ = s3
    a = inst.A
    s_min, s_max = rieffel_stabilizers(a, inst.B, omega)
    assert s_min.S.basis == inst.B.basis
    assert s_min.is_stabilizer and s_min.criterion_holds
    assert s_max.is_stabilizer and s_max.criterion_holds
    # S_max = pAp + (1-p)A(1-p) straight from basis products
    p_id = annihilator_and_p(inst.B, omega).p_ambient
    q_id = (a.one - p_id) % 7
    vecs = []
    for x in (p_id, q_id):
        for i in range(a.dim):
            vecs.append(a.product(a.product(x, a.basis_vector(i)), x))
    # pAp = End(Ind triv + Ind omega^2) has dim 3, (1-p)A(1-p) = End(Ind omega) has dim 1
    assert la.rank(np.array(vecs), 7) == 4
    assert s_max.S.basis == a.span(vecs)
    assert s_max.S.basis.contains(s_min.S.basis)


def test_standard_stabilizers_in_stable_cases(library, s3):
    d4 = library["D4>Z"]
    _, s_max = rieffel_stabilizers(d4.A, d4.B, d4.simples_of_B[1])
    assert s_max.S.basis.is_full() and s_max.is_stabilizer
    inst = s3[0]
    top = whole(inst.A)
    w = over_whole(s3_simple(inst, 2), top)
    s_min, s_max = rieffel_stabilizers(inst.A, top, w)
    assert s_min.S.basis.is_full() and s_max.S.basis.is_full()


def test_is_stabilizer_examples(s3):
    inst, triv, omega, _ = s3
    a = inst.A
    rep = is_stabilizer(a, inst.B, triv, whole(a))
    assert rep.is_stabilizer and rep.criterion_holds
    rep = is_stabilizer(a, inst.B, omega, inst.B)
    assert rep.is_stabilizer
    rep = is_stabilizer(a, inst.B, triv, inst.B)
    assert not rep.is_stabilizer and not rep.criterion_holds
    assert rep.definition_check["V-socle of induced module equals image of S (x)_B V"] is False
    ind = induce(a, inst.B, triv)
    assert v_socle(triv, ind.restricted).dim == 2 and ind.image_of(inst.B.basis.basis).dim == 1


def test_is_stabilizer_needs_containment(s3, library):
    inst, triv, _, _ = s3
    c2 = library["S3>C2"]
    foreign = Subalgebra.from_vectors(inst.A, c2.B.basis.basis)
    with pytest.raises(HypothesesNotMet, match="containment"):
        is_stabilizer(inst.A, inst.B, triv, foreign)


def test_induce_through_stabilizer_examples(s3, library):
    inst, triv, omega, _ = s3
    (pair,) = induce_through_stabilizer(inst.A, inst.B, omega, inst.B)
    assert iso_test(pair[1], s3_simple(inst, 2))[0]
    ups = [up for _, up in induce_through_stabilizer(inst.A, inst.B, triv, whole(inst.A))]
    assert len(ups) == 2
    for up in ups:
        assert any(iso_test(up, s3_simple(inst, 1, sgn))[0] for sgn in (1, -1))
    d4 = library["D4>Z"]
    ((_, up),) = induce_through_stabilizer(d4.A, d4.B, d4.simples_of_B[1], whole(d4.A))
    assert up.dim == 2 and oracle_is_simple(up)


def test_endalg_chain_examples(s3, library):
    inst, triv, omega, _ = s3
    assert endalg_chain_check(inst.A, inst.B, omega, inst.B) == (1, 1, 1, 1)
    assert endalg_chain_check(inst.A, inst.B, triv, whole(inst.A)) == (2, 2, 2, 2)
    q8 = library["Q8>C4"]
    assert endalg_chain_check(q8.A, q8.B, q8.simples_of_B[1], q8.B) == (1, 1, 1, 1)
    with pytest.raises(HypothesesNotMet, match="not a stabilizer"):
        endalg_chain_check(inst.A, inst.B, triv, inst.B)


def test_f_algebra_examples(s3, library):
    inst, triv, omega, _ = s3
    assert f_algebra_check(induce(inst.A, inst.B, triv)).f_dims == [2]
    assert f_algebra_check(induce(inst.A, inst.B, omega)).f_dims == [1, 1]
    d4 = library["D4>Z"]
    assert f_algebra_check(induce(d4.A, d4.B, d4.simples_of_B[1])).f_dims == [4]
    top = whole(inst.A)
    ind = induce(inst.A, top, over_whole(s3_simple(inst, 2), top))
    assert ind.F.base.dim == ind.E.base.dim
    assert f_algebra_check(ind).e_subalgebra_of_f


def test_build_presentation_examples(s3):
    inst, triv, omega, _ = s3
    ind = induce(inst.A, inst.B, omega)
    pres = build_presentation(ind, s3_simple(inst, 2))
    assert pres.copies == 0 and la.rank(pres.pi, 7) == 2
    ind = induce(inst.A, inst.B, triv)
    trivial = s3_simple(inst, 1, 1)
    pres = build_presentation(ind, trivial)
    assert pres.pi.shape == (1, 2) and pres.copies == 1
    kernel = la.nullspace(pres.pi, 7)
    assert kernel.dim == 1 and la.column_space(pres.left, 7) == kernel
    with pytest.raises(HypothesesNotMet):
        build_presentation(ind, s3_simple(inst, 2))


# --- the correspondence ------------------------------------------------------------------


def test_correspond_trivial_a3(s3):
    inst, triv, _, _ = s3
    rep = correspond(inst.A, inst.B, triv)
    assert rep.stable and rep.E.base.dim == 2 and rep.e_dims == [1, 1]
    assert len(rep.pairs) == 2 and rep.oracle_complete
    signs = sorted(int(m.act(inst.A.basis_vector(inst.group["elements"].index((1, 0, 2))))[0, 0]) for m in rep.a_simples)
    assert signs == [1, 6]
    assert all(p.round_trip for p in rep.pairs)


def test_correspond_omega(s3):
    inst, _, omega, _ = s3
    rep = correspond(inst.A, inst.B, omega)
    assert not rep.stable and rep.E.base.dim == 1
    (pair,) = rep.pairs
    assert pair.a_simple.dim == 2 and oracle_is_simple(pair.a_simple)
    assert rep.oracle_complete
    assert rep.warnings  # 1 - e_omega is not primitive in k[A3]


def test_correspond_center_of_d4(library):
    inst = library["D4>Z"]
    rep = correspond(inst.A, inst.B, inst.simples_of_B[1])
    assert rep.e_dims == [2] and not rep.E.base.is_commutative()
    (pair,) = rep.pairs
    assert pair.a_simple.dim == 2 == inst.simples_of_B[1].dim * pair.e_simple.dim


def test_correspond_rejects_non_normal(library):
    inst = library["S3>C2"]
    with pytest.raises(HypothesesNotMet, match="B normal in A"):
        correspond(inst.A, inst.B, inst.simples_of_B[0])


def test_correspond_rejects_non_simple_v(s3):
    inst, triv, omega, _ = s3
    from cliffordcorr.module import direct_sum

    with pytest.raises(HypothesesNotMet, match="V absolutely simple"):
        correspond(inst.A, inst.B, direct_sum(triv, omega))


def test_correspond_report_json_is_deterministic(s3):
    inst, triv, _, _ = s3
    a = correspond(inst.A, inst.B, triv, seed=11).to_json()
    b = correspond(inst.A, inst.B, triv, seed=11).to_json()
    assert a == b
    assert {"hypotheses", "stable", "dimE", "pairs", "oracle_complete", "warnings"} <= set(a)


def test_one_dim_v_with_wrong_algebra_is_rejected(s3, library):
    inst = s3[0]
    d4 = library["D4>Z"]
    bogus = one_dim_module(d4.B.algebra, [1, 1])
    with pytest.raises(InvalidInput):
        induce(inst.A, inst.B, bogus)
