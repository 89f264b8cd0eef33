"""Shared brute-force oracles, kept independent of the library internals."""

from __future__ import annotations

import random
from itertools import permutations, product

import pytest
from hypothesis import settings

from msdcycles import Digraph

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def bf_reachable(n: int, arcs: set[tuple[int, int]], src: int, skip=None) -> set[int]:
    seen = {src}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for (a, b) in arcs:
                if a == u and (a, b) != skip and b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def bf_is_strong(n: int, arcs: set[tuple[int, int]]) -> bool:
    if n == 0:
        return False
    return all(len(bf_reachable(n, arcs, s)) == n for s in range(n))


def bf_scc_sets(n: int, arcs: set[tuple[int, int]]) -> set[frozenset[int]]:
    reach = [bf_reachable(n, arcs, v) for v in range(n)]
    return {
        frozenset(w for w in range(n) if v in reach[w] and w in reach[v])
        for v in range(n)
    }


def bf_is_msd(n: int, arcs: set[tuple[int, int]]) -> bool:
    if n < 2 or not bf_is_strong(n, arcs):
        return False
    for (u, v) in arcs:
        if v in bf_reachable(n, arcs, u, skip=(u, v)):
            return False
    return True


def bf_cycles(d: Digraph) -> set[tuple[int, ...]]:
    """Every directed cycle, smallest vertex first, via permutation search."""
    out = set()
    for length in range(2, d.n + 1):
        for verts in permutations(range(d.n), length):
            if verts[0] != min(verts):
                continue
            if all(
                (verts[i], verts[(i + 1) % length]) in d.arcs
                for i in range(length)
            ):
                out.add(verts)
    return out


def bf_raw_config_arrays(q: int) -> list[tuple[int, ...]]:
    """All component arrays satisfying the structural invariants, sorted.

    The first entry is pinned to 0 before enumerating: the filter would
    reject everything else, so this only skips guaranteed rejects.
    """
    out = []
    for tail in product(range(q), repeat=q - 1):
        comp = (0,) + tail
        mx = 0
        ok = True
        for k in range(q):
            v = comp[k]
            if v > mx + 1:
                ok = False
                break
            if v > mx:
                mx = v
            if v == comp[(k + 1) % q]:
                ok = False
                break
        if ok:
            out.append(comp)
    out.sort()
    return out


def bf_canonical(comp: tuple[int, ...]) -> tuple[int, ...]:
    """Orbit minimum over rotations, renumbered by first occurrence."""
    q = len(comp)
    best = None
    for k in range(q):
        rot = [comp[(k + i) % q] for i in range(q)]
        seen: list[int] = []
        renum = []
        for x in rot:
            if x not in seen:
                seen.append(x)
            renum.append(seen.index(x))
        t = tuple(renum)
        if best is None or t < best:
            best = t
    return best


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    arcs = {
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    }
    return Digraph.of(n, arcs)


def random_strong_digraph(rng: random.Random, n: int, extra: int) -> Digraph:
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    candidates = [
        (u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in arcs
    ]
    rng.shuffle(candidates)
    arcs.update(candidates[:extra])
    return Digraph.of(n, arcs)


@pytest.fixture
def msd5() -> Digraph:
    """The running 5-vertex example: a 4-cycle with a parallel 1->4->3 path."""
    return Digraph.of(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 3)])
