"""Immutable simple-digraph core.

Vertices are dense integer ids 0..n-1.  Digraph values are frozen and safe to
share between workers; every operation here is a pure function of its inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class ArcNotPresentError(ValueError):
    """An operation was asked about an arc the digraph does not contain."""


class NotStronglyConnectedError(ValueError):
    """An operation required a strongly connected (sub)digraph."""


@dataclass(frozen=True)
class Digraph:
    """A simple directed graph: no self-loops, no duplicate arcs.

    ``arcs`` is a frozenset of ordered pairs (u, v); membership tests are O(1)
    and per-vertex adjacency is precomputed for O(outdegree) iteration.
    """

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        if not isinstance(self.arcs, frozenset):
            object.__setattr__(self, "arcs", frozenset(self.arcs))
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop {u}->{v} not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc {u}->{v} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, arcs: Iterable[tuple[int, int]] = ()) -> Digraph:
        return cls(n, frozenset((u, v) for u, v in arcs))

    @classmethod
    def cycle(cls, n: int) -> Digraph:
        """The directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
        if n < 2:
            raise ValueError("a directed cycle needs at least 2 vertices")
        return cls.of(n, ((i, (i + 1) % n) for i in range(n)))

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].append(u)
        return tuple(tuple(sorted(us)) for us in inc)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self.succ[v])

    def in_degree(self, v: int) -> int:
        return len(self.pred[v])

    def without_arc(self, u: int, v: int) -> Digraph:
        if (u, v) not in self.arcs:
            raise ArcNotPresentError(f"arc {u}->{v} not in digraph")
        return Digraph(self.n, self.arcs - {(u, v)})

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class Cycle:
    """A directed cycle as an ordered vertex sequence [c_0, ..., c_{q-1}].

    Identity is up to rotation of the sequence but not reflection: a directed
    cycle and its reverse are different objects.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("a cycle has length >= 2")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"cycle vertices must be distinct: {self.vertices}")

    @property
    def q(self) -> int:
        return len(self.vertices)

    def arcs(self) -> Iterator[tuple[int, int]]:
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def is_cycle_of(self, d: Digraph) -> bool:
        return all(0 <= v < d.n for v in self.vertices) and all(
            a in d.arcs for a in self.arcs()
        )

    def rotated_min_first(self) -> Cycle:
        """The same cycle rotated so its smallest vertex comes first."""
        i = self.vertices.index(min(self.vertices))
        return Cycle(self.vertices[i:] + self.vertices[:i])


@dataclass(frozen=True)
class SccPartition:
    """Strong components with deterministic ids.

    Component ids 0..k-1 follow a topological order of the condensation
    (every inter-component arc goes from lower to higher id), ties broken by
    the smallest vertex contained in the component.
    """

    component_of: tuple[int, ...]
    components: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[Cycle, ...]
    truncated: bool


def _reachable(d: Digraph, src: int, skip_arc: tuple[int, int] | None = None) -> set[int]:
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for v in d.succ[u]:
            if skip_arc is not None and (u, v) == skip_arc:
                continue
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    """True iff every vertex reaches every other; a single vertex counts."""
    if d.n == 0:
        return False
    if d.n == 1:
        return True
    if len(_reachable(d, 0)) != d.n:
        return False
    # reverse reachability from 0 via predecessor lists
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in d.pred[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == d.n


def scc_partition(d: Digraph) -> SccPartition:
    """Tarjan strong components, renumbered deterministically.

    Ids are assigned in topological order of the condensation with ties
    broken by the smallest contained vertex, so output is reproducible.
    """
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    raw: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            succ = d.succ[v]
            for i in range(pi, len(succ)):
                w = succ[i]
                if index[w] == -1:
                    work[-1][1] = i + 1
                    work.append([w, 0])
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                raw.append(comp)
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]

    # deterministic renumbering: Kahn on the condensation, min-vertex heap
    temp_of = [0] * n
    for t, comp in enumerate(raw):
        for v in comp:
            temp_of[v] = t
    k = len(raw)
    cond_succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k
    for u, v in d.arcs:
        a, b = temp_of[u], temp_of[v]
        if a != b and b not in cond_succ[a]:
            cond_succ[a].add(b)
            indeg[b] += 1
    heap = [(min(raw[t]), t) for t in range(k) if indeg[t] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        _, t = heapq.heappop(heap)
        order.append(t)
        for b in cond_succ[t]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (min(raw[b]), b))
    assert len(order) == k, "condensation must be acyclic"

    new_of_temp = [0] * k
    for new_id, t in enumerate(order):
        new_of_temp[t] = new_id
    component_of = tuple(new_of_temp[temp_of[v]] for v in range(n))
    components = tuple(frozenset(raw[t]) for t in order)
    return SccPartition(component_of, components)


def is_transitive_arc(d: Digraph, u: int, v: int) -> bool:
    """True iff a u->v path exists that avoids the arc (u, v) itself."""
    if (u, v) not in d.arcs:
        raise ArcNotPresentError(f"arc {u}->{v} not in digraph")
    return v in _reachable(d, u, skip_arc=(u, v))


def linear_vertices(d: Digraph) -> frozenset[int]:
    """Vertices with indegree 1 and outdegree 1."""
    return frozenset(
        v for v in range(d.n) if len(d.succ[v]) == 1 and len(d.pred[v]) == 1
    )


def _undirected_adj(d: Digraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(d.n)]
    for u, v in d.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _undirected_connected(adj: list[set[int]], vertices: list[int]) -> bool:
    if len(vertices) <= 1:
        return True
    alive = set(vertices)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in alive and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def cut_points(d: Digraph) -> frozenset[int]:
    """Vertices whose removal disconnects the underlying undirected graph."""
    adj = _undirected_adj(d)
    if not _undirected_connected(adj, list(range(d.n))):
        raise ValueError("cut points are defined for connected digraphs")
    cuts = []
    for v in range(d.n):
        rest = [w for w in range(d.n) if w != v]
        if not _undirected_connected(adj, rest):
            cuts.append(v)
    return frozenset(cuts)


def iter_cycles(d: Digraph) -> Iterator[Cycle]:
    """All directed cycles, each yielded once with its smallest vertex first.

    Search order: ascending start vertex, then lexicographic path extension.
    Restricting the DFS to vertices greater than the start vertex guarantees
    each rotation class appears exactly once.
    """
    for s in range(d.n):
        path = [s]
        on_path = {s}
        iters = [iter(d.succ[s])]
        while iters:
            advanced = False
            for w in iters[-1]:
                if w == s:
                    yield Cycle(tuple(path))
                    continue
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    iters.append(iter(d.succ[w]))
                    advanced = True
                    break
            if not advanced:
                iters.pop()
                on_path.discard(path.pop())


def enumerate_cycles(d: Digraph, max_count: int | None = None) -> CycleEnumeration:
    """Distinct cycles sorted by (length, vertex sequence).

    With ``max_count`` the search stops after that many cycles (the first ones
    in search order, then sorted) and the result is flagged truncated.
    """
    if max_count is not None and max_count < 1:
        raise ValueError("max_count must be positive")
    found: list[Cycle] = []
    truncated = False
    for c in iter_cycles(d):
        if max_count is not None and len(found) == max_count:
            truncated = True
            break
        found.append(c)
    found.sort(key=lambda c: (c.q, c.vertices))
    return CycleEnumeration(tuple(found), truncated)


def contract(d: Digraph, s: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Contract the vertex set ``s`` (inducing a strong subdigraph) to one vertex.

    Self-loops are discarded and duplicate arcs merged.  Returns the new
    digraph and the old->new vertex map; the merged vertex takes the slot of
    min(s) in the renumbering.
    """
    sset = frozenset(s)
    if not sset:
        raise ValueError("cannot contract an empty vertex set")
    if not all(0 <= v < d.n for v in sset):
        raise ValueError("contraction set out of range")
    induced_arcs = {(u, v) for (u, v) in d.arcs if u in sset and v in sset}
    relabel = {v: i for i, v in enumerate(sorted(sset))}
    inner = Digraph.of(len(sset), ((relabel[u], relabel[v]) for u, v in induced_arcs))
    if not is_strongly_connected(inner):
        raise NotStronglyConnectedError(
            "the induced subdigraph to contract is not strongly connected"
        )
    rep = min(sset)
    kept = sorted((set(range(d.n)) - sset) | {rep})
    vmap = {old: i for i, old in enumerate(kept)}
    for v in sset:
        vmap[v] = vmap[rep]
    new_arcs = {
        (vmap[u], vmap[v]) for (u, v) in d.arcs if vmap[u] != vmap[v]
    }
    return Digraph.of(len(kept), new_arcs), vmap
