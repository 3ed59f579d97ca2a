"""Permutation groups to Cayley tables."""

from __future__ import annotations

import numpy as np

from .errors import InvalidInput

Perm = tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    """a*b = "first b, then a"."""
    return tuple(a[x] for x in b)


def check_permutation(g, degree: int) -> Perm:
    g = tuple(int(x) for x in g)
    if len(g) != degree or sorted(g) != list(range(degree)):
        raise InvalidInput(f"{list(g)} is not a permutation of 0..{degree - 1}")
    return g


def generate(generators, degree: int) -> list[Perm]:
    """All elements of the group generated, sorted (so the identity comes first)."""
    gens = [check_permutation(g, degree) for g in generators]
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def cayley_table(elements: list[Perm]) -> np.ndarray:
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[compose(a, b)]
    return table


def from_generators(generators, degree: int) -> tuple[list[Perm], np.ndarray]:
    els = generate(generators, degree)
    return els, cayley_table(els)


def cycle(*points: int, degree: int) -> Perm:
    g = list(range(degree))
    for i, x in enumerate(points):
        g[x] = points[(i + 1) % len(points)]
    return tuple(g)


def element_order(table: np.ndarray, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = int(table[x, g])
        k += 1
    return k


def cyclic_subgroup(table: np.ndarray, g: int) -> list[int]:
    """[1, g, g^2, ...] as indices, in power order."""
    out = [0]
    x = g
    while x != 0:
        out.append(x)
        x = int(table[x, g])
    return out


def group_center(table: np.ndarray) -> list[int]:
    t = np.asarray(table)
    return [g for g in range(len(t)) if np.array_equal(t[g], t[:, g])]
