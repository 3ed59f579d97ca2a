"""Brute-force oracles and the bundled example corpus.

Nothing in this module touches the randomized splitting code it is meant
to check: simplicity is decided by exhaustive cyclic-submodule search and
the number of simples by the dimension of the center, both through a
batched elimination written here rather than the shared linear algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import groups
from .algebra import Algebra, Subalgebra, group_algebra, skew_group_algebra, twisted_group_algebra
from .errors import InvalidInput
from .module import Module, one_dim_module

EXHAUSTIVE_LIMIT = 10**6
_CHUNK = 1 << 15


def _batched_rank(x: np.ndarray, p: int) -> np.ndarray:
    """Rank of every matrix in the stack x (N, rows, cols) over GF(p)."""
    x = np.array(x, dtype=np.int64) % p
    n, rows, cols = x.shape
    inv_table = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    used = np.zeros((n, rows), dtype=bool)
    ranks = np.zeros(n, dtype=np.int64)
    idx = np.arange(n)
    for c in range(cols):
        cand = (x[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        b = idx[has]
        pr = x[b, piv[has]] * inv_table[x[b, piv[has], c]][:, None] % p
        factors = x[b, :, c].copy()
        factors[np.arange(b.size), piv[has]] = 0
        x[b] = (x[b] - factors[:, :, None] * pr[:, None, :]) % p
        x[b, piv[has]] = pr
        used[b, piv[has]] = True
        ranks[b] += 1
    return ranks


def _normalized_vectors(dim: int, p: int):
    """Every nonzero vector up to scalars: first nonzero coordinate equal to 1."""
    for lead in range(dim):
        tail = dim - lead - 1
        for rest in itertools.product(range(p), repeat=tail):
            v = [0] * lead + [1] + list(rest)
            yield v


def proper_submodule_witness(m: Module) -> np.ndarray | None:
    """A nonzero vector whose cyclic submodule is proper, or None if M is simple."""
    p, d = m.p, m.dim
    if d == 0:
        return None
    if p**d > EXHAUSTIVE_LIMIT:
        raise InvalidInput(f"too large for exhaustive search: {p}^{d} > {EXHAUSTIVE_LIMIT}")
    # A.v = span{rho(b_i) v}: the basis is closed under products, so one step is the closure
    acts = m.action  # (n, d, d)
    gen = _normalized_vectors(d, p)
    while True:
        chunk = np.array(list(itertools.islice(gen, _CHUNK)), dtype=np.int64)
        if chunk.size == 0:
            return None
        spans = np.einsum("ijk,vk->vij", acts, chunk) % p  # (v, n, d): rows rho(b_i) v
        short = np.flatnonzero(_batched_rank(spans, p) < d)
        if short.size:
            return chunk[short[0]]


def oracle_is_simple(m: Module) -> bool:
    if m.dim == 0:
        return False
    return proper_submodule_witness(m) is None


def oracle_center_dim(a: Algebra) -> int:
    p, d = a.p, a.dim
    # x b_i - b_i x = 0 for all i, as a (d*d) x d system in x
    rows = []
    for i in range(d):
        right = a.mul[:, i, :].T  # column j: b_j b_i
        left = a.mul[i, :, :].T  # column j: b_i b_j
        rows.append((right - left) % p)
    system = np.vstack(rows)[None, :, :]
    return d - int(_batched_rank(system, p)[0])


def oracle_simple_count(a: Algebra) -> int:
    """Number of simple modules of a split semisimple algebra: dim of its center."""
    return oracle_center_dim(a)


# --- example corpus ------------------------------------------------------------------


@dataclass
class ExampleInstance:
    name: str
    A: Algebra
    B: Subalgebra
    simples_of_B: list[Module]
    expected: dict = field(default_factory=dict)
    group: dict | None = None  # {"elements", "table", "subgroup"} for group cases


def root_of_unity(order: int, p: int) -> int:
    for z in range(1, p):
        if pow(z, order, p) == 1 and all(pow(z, k, p) != 1 for k in range(1, order)):
            return z
    raise InvalidInput(f"GF({p}) has no primitive {order}-th root of unity")


def subgroup_subalgebra(a: Algebra, elements: list[int], name: str = "") -> Subalgebra:
    vecs = np.eye(a.dim, dtype=np.int64)[sorted(elements)]
    return Subalgebra.from_vectors(a, vecs, name=name)


def cyclic_characters(b: Subalgebra, table: np.ndarray, gen: int, p: int, ambient_index=None) -> list[Module]:
    """All characters of the cyclic subgroup <gen>, as modules over b's algebra.

    ``ambient_index`` maps a group element to its ambient basis index
    (identity by default).
    """
    powers = groups.cyclic_subgroup(table, gen)
    n = len(powers)
    zeta = root_of_unity(n, p)
    where = ambient_index or (lambda g: g)
    exps = {where(g): k for k, g in enumerate(powers)}
    chars = []
    for k in range(n):
        vals = []
        for row in b.basis.basis:
            (pos,) = np.flatnonzero(row)
            vals.append(pow(zeta, exps[int(pos)] * k, p))
        chars.append(one_dim_module(b.algebra, vals))
    return chars


def symmetric3():
    return groups.from_generators([groups.cycle(0, 1, degree=3), groups.cycle(0, 1, 2, degree=3)], 3)


def dihedral4():
    r = groups.cycle(0, 1, 2, 3, degree=4)
    s = (0, 3, 2, 1)
    return groups.from_generators([r, s], 4), r, s


_QUAT = {  # unit * unit = (sign, unit) for units 1, i, j, k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8():
    """Q8 through its left regular permutation action; points are sign*unit, index 2*unit + (sign<0)."""
    pts = [(s, u) for u in range(4) for s in (1, -1)]
    code = {(s, u): 2 * u + (s < 0) for (s, u) in pts}

    def left(s0, u0):
        perm = [0] * 8
        for s, u in pts:
            sg, w = _QUAT[(u0, u)]
            perm[code[(s, u)]] = code[(s0 * s * sg, w)]
        return tuple(perm)

    qi, qj = left(1, 1), left(1, 2)
    els, table = groups.from_generators([qi, qj], 8)
    return els, table, qi, qj


def c2xc2_cocycle(p: int):
    """Elements x^i y^j at index 2i + j; alpha(x^i y^j, x^k y^l) = (-1)^(j k)."""
    x = groups.cycle(0, 1, degree=4)
    y = groups.cycle(2, 3, degree=4)
    raw, _ = groups.from_generators([x, y], 4)
    ordered = sorted(raw, key=lambda g: (g[0] != 0) * 2 + (g[2] != 2))
    table = groups.cayley_table(ordered)
    alpha = np.ones((4, 4), dtype=np.int64)
    for g in range(4):
        for h in range(4):
            j, k = g & 1, h >> 1
            alpha[g, h] = (-1) ** (j * k) % p
    return ordered, table, alpha


def _instance_group(name, table, elements, sub, p, gen, expected):
    a = group_algebra(table, p, name=name)
    b = subgroup_subalgebra(a, sub, name=f"{name} sub")
    return ExampleInstance(
        name, a, b, cyclic_characters(b, table, gen, p), expected,
        {"elements": elements, "table": table, "subgroup": sorted(sub)},
    )


def example_library() -> list[ExampleInstance]:
    out = []

    els, t = symmetric3()
    c3 = els.index((1, 2, 0))
    tr = els.index((1, 0, 2))
    out.append(_instance_group(
        "S3>A3", t, els, groups.cyclic_subgroup(t, c3), 7, c3,
        {"blocks_A": [1, 1, 2], "normal": True, "stable": [True, False, False]},
    ))
    out.append(_instance_group(
        "S3>C2", t, els, groups.cyclic_subgroup(t, tr), 7, tr,
        {"blocks_A": [1, 1, 2], "normal": False},
    ))

    (els, t), r, s = dihedral4()
    ri = els.index(r)
    r2 = int(t[ri, ri])
    out.append(_instance_group(
        "D4>Z", t, els, groups.cyclic_subgroup(t, r2), 7, r2,
        {"blocks_A": [1, 1, 1, 1, 2], "normal": True, "stable": [True, True]},
    ))

    els, t, qi, _ = quaternion8()
    ii = els.index(qi)
    out.append(_instance_group(
        "Q8>C4", t, els, groups.cyclic_subgroup(t, ii), 5, ii,
        {"blocks_A": [1, 1, 1, 1, 2], "normal": True, "stable": [True, False, True, False]},
    ))

    els, t = groups.from_generators([groups.cycle(0, 1, 2, 3, 4, 5, degree=6)], 6)
    g = els.index(groups.cycle(0, 1, 2, 3, 4, 5, degree=6))
    g2 = int(t[g, g])
    out.append(_instance_group(
        "C6>C3", t, els, groups.cyclic_subgroup(t, g2), 7, g2,
        {"blocks_A": [1] * 6, "normal": True, "stable": [True, True, True]},
    ))

    els, t, alpha = c2xc2_cocycle(7)
    tw = twisted_group_algebra(t, alpha, 7, name="k_alpha[C2xC2]")
    k1 = subgroup_subalgebra(tw, [0], name="k")
    out.append(ExampleInstance(
        "twisted C2xC2", tw, k1, [one_dim_module(k1.algebra, [1])],
        {"blocks_A": [2], "normal": True, "stable": [True]},
        {"elements": els, "table": t, "subgroup": [0], "alpha": alpha},
    ))

    _, t3 = groups.from_generators([groups.cycle(0, 1, 2, degree=3)], 3)
    _, t2 = groups.from_generators([groups.cycle(0, 1, degree=2)], 2)
    b3 = group_algebra(t3, 7, name="GF(7)[C3]")
    inversion = np.eye(3, dtype=np.int64)[:, [0, 2, 1]]
    for label, action, blocks in (
        ("C3:C2 inversion", [np.eye(3, dtype=np.int64), inversion], [1, 1, 2]),
        ("C3xC2 trivial", [np.eye(3, dtype=np.int64), np.eye(3, dtype=np.int64)], [1] * 6),
    ):
        sk = skew_group_algebra(b3, t2, action, name=label)
        # B#1 sits at indices i*|G| + 0
        b_sub = subgroup_subalgebra(sk, [0, 2, 4], name="B#1")
        c3gen = 1
        chars = cyclic_characters(b_sub, t3, c3gen, 7, ambient_index=lambda h: 2 * h)
        out.append(ExampleInstance(
            label, sk, b_sub, chars,
            {"blocks_A": blocks, "normal": True},
            {"table": t2, "base_table": t3, "action": action},
        ))

    _, t = groups.from_generators([groups.cycle(0, 1, 2, degree=3)], 3)
    bad = group_algebra(t, 3, name="GF(3)[C3]")
    k = subgroup_subalgebra(bad, [0], name="k")
    out.append(ExampleInstance(
        "GF(3)[C3]", bad, k, [one_dim_module(k.algebra, [1])],
        {"certified": False},
        {"elements": None, "table": t, "subgroup": [0]},
    ))
    return out


def get_example(name: str) -> ExampleInstance:
    for inst in example_library():
        if inst.name == name:
            return inst
    raise KeyError(name)
