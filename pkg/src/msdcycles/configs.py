"""Exhaustive enumeration of anchored strong-component configurations.

A configuration assigns each position of a length-q directed cycle to a
component id, written as a restricted-growth array with no two cyclically
adjacent positions in the same component.  The generator walks all such
arrays in lexicographic order; a validity filter keeps exactly the
configurations realizable by a minimal strong digraph; canonicalization
quotients by rotation of the cycle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .digraph import Cycle, Digraph

# Externally published reference counts for this enumeration (q -> count),
# displayed by the CLI comparison table.  Our pipeline reproduces q <= 8;
# see the project README for the q >= 9 discrepancy analysis.
REFERENCE_COUNTS: dict[int, int] = {
    2: 1, 3: 1, 4: 2, 5: 2, 6: 5, 7: 6, 8: 16, 9: 28, 10: 43,
    11: 162, 12: 427, 13: 1016, 14: 2836, 15: 7432, 16: 20579,
    17: 52622, 18: 159172, 19: 449390,
}

LONG_RUN_THRESHOLD = 15  # counts for q >= this need an explicit opt-in


class InvalidConfigError(ValueError):
    """A component array violating the configuration invariants."""


class RealizationError(RuntimeError):
    """A realized digraph failed its built-in verification.

    Carries the offending digraph for inspection.
    """

    def __init__(self, message: str, digraph: Digraph | None = None):
        super().__init__(message)
        self.digraph = digraph


@dataclass(frozen=True)
class Config:
    """A length-q component assignment (one entry per cycle position).

    Invariants: entries in 0..q-1; no two cyclically adjacent entries equal;
    first entry 0; restricted growth (an entry exceeds the running maximum by
    at most one).
    """

    comp: tuple[int, ...]

    def __post_init__(self) -> None:
        comp = tuple(self.comp)
        object.__setattr__(self, "comp", comp)
        q = len(comp)
        if q < 2:
            raise InvalidConfigError("configuration length must be >= 2")
        if comp[0] != 0:
            raise InvalidConfigError("first entry must be 0")
        mx = 0
        for k, v in enumerate(comp):
            if not (0 <= v < q):
                raise InvalidConfigError(f"entry {v} out of range at position {k}")
            if v > mx + 1:
                raise InvalidConfigError(
                    f"entry {v} at position {k} breaks restricted growth"
                )
            mx = max(mx, v)
            if v == comp[(k + 1) % q]:
                raise InvalidConfigError(
                    f"positions {k} and {(k + 1) % q} share component {v}"
                )

    @property
    def q(self) -> int:
        return len(self.comp)

    @classmethod
    def parse(cls, text: str) -> Config:
        try:
            comp = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise InvalidConfigError(f"cannot parse configuration {text!r}") from exc
        return cls(comp)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.comp)

    def blocks(self) -> list[tuple[int, ...]]:
        """Position sets per component id, ordered by id."""
        pos: dict[int, list[int]] = {}
        for i, c in enumerate(self.comp):
            pos.setdefault(c, []).append(i)
        return [tuple(pos[c]) for c in sorted(pos)]


# ---------------------------------------------------------------------------
# generation: initial array, successor, canonical rotation form
# ---------------------------------------------------------------------------


def _initial(q: int) -> list[int]:
    if q % 2 == 0:
        return [0, 1] * (q // 2)
    return [0, 1] * ((q - 1) // 2) + [2]


def _fill_suffix(comp: list[int], start: int) -> None:
    # lexicographically smallest completion: alternate 0/1, last entry fixed
    # up so it differs from both neighbours (position 0 holds 0)
    q = len(comp)
    for j in range(start, q):
        prev = comp[j - 1]
        if j != q - 1:
            comp[j] = 1 if prev == 0 else 0
        elif prev == 0:
            comp[j] = 1
        elif prev == 1:
            comp[j] = 2
        else:
            comp[j] = 1


def _next_inplace(comp: list[int]) -> int:
    """Advance to the lexicographic successor in place.

    Returns the index that was incremented (all earlier entries are
    unchanged), or -1 when the array is the final one.
    """
    q = len(comp)
    mx = 0
    k = -1
    for idx in range(1, q):
        v = comp[idx - 1]
        if v > mx:
            mx = v
        if comp[idx] <= mx:
            k = idx
    if k < 0:
        return -1
    ck = comp[k] + 1
    if comp[k - 1] == ck:
        ck += 1
    comp[k] = ck
    _fill_suffix(comp, k + 1)
    return k


def _canonical(comp: Sequence[int]) -> tuple[int, ...]:
    q = len(comp)
    doubled = list(comp) * 2
    best: tuple[int, ...] | None = None
    for k in range(q):
        ren = [-1] * q
        nxt = 0
        out = []
        for i in range(k, k + q):
            x = doubled[i]
            r = ren[x]
            if r < 0:
                ren[x] = r = nxt
                nxt += 1
            out.append(r)
        t = tuple(out)
        if best is None or t < best:
            best = t
    assert best is not None
    return best


def initial_config(q: int) -> Config:
    """The lexicographically smallest configuration of length q."""
    if q < 2:
        raise InvalidConfigError("configuration length must be >= 2")
    return Config(tuple(_initial(q)))


def next_config(c: Config) -> Config | None:
    """Lexicographic successor, or None at the final all-singleton array."""
    comp = list(c.comp)
    if _next_inplace(comp) < 0:
        return None
    return Config(tuple(comp))


def canonical_config(c: Config) -> Config:
    """Lexicographic minimum over all rotations after renumbering.

    Idempotent and rotation-invariant: every rotation of an array maps to the
    same canonical form.
    """
    return Config(_canonical(c.comp))


def rotate_config(c: Config, k: int) -> Config:
    """Rotation by k positions, renumbered back to restricted-growth form."""
    q = c.q
    rotated = [c.comp[(k + i) % q] for i in range(q)]
    ren: dict[int, int] = {}
    out = []
    for x in rotated:
        if x not in ren:
            ren[x] = len(ren)
        out.append(ren[x])
    return Config(tuple(out))


# ---------------------------------------------------------------------------
# validity: which configurations are realizable
# ---------------------------------------------------------------------------


def _interleaved(pa: Sequence[int], pb: Sequence[int]) -> bool:
    # two position sets interleave around the cycle iff their merged circular
    # label sequence alternates at least four times
    merged: list[bool] = []
    i = j = 0
    la, lb = len(pa), len(pb)
    while i < la and j < lb:
        if pa[i] < pb[j]:
            merged.append(True)
            i += 1
        else:
            merged.append(False)
            j += 1
    if i < la:
        merged.extend([True] * (la - i))
    if j < lb:
        merged.extend([False] * (lb - j))
    t = 0
    prev = merged[-1]
    for lab in merged:
        if lab != prev:
            t += 1
        prev = lab
    return t >= 4


def is_cut(a: Iterable[int], b: Iterable[int], q: int) -> bool:
    """Whether two disjoint position sets interleave around a length-q cycle.

    True iff there are u1, u2 in a and v1, v2 in b in circular order
    u1, v1, u2, v2; this needs at least two positions on each side.
    """
    pa = sorted(a)
    pb = sorted(b)
    if not pa or not pb:
        raise ValueError("position sets must be nonempty")
    if set(pa) & set(pb):
        raise ValueError("position sets must be disjoint")
    if not all(0 <= p < q for p in pa + pb):
        raise ValueError("positions out of range")
    if len(pa) < 2 or len(pb) < 2:
        return False
    return _interleaved(pa, pb)


def _positions(comp: Sequence[int]) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = {}
    for i, c in enumerate(comp):
        lst = pos.get(c)
        if lst is None:
            pos[c] = [i]
        else:
            lst.append(i)
    return pos


def _has_cut_adjacency(comp: Sequence[int], pos: dict[int, list[int]]) -> bool:
    # quick reject: some cyclically adjacent pair of components interleaves
    q = len(comp)
    checked: dict[tuple[int, int], bool] = {}
    prev = comp[q - 1]
    for i in range(q):
        cur = comp[i]
        key = (prev, cur) if prev < cur else (cur, prev)
        hit = checked.get(key)
        if hit is None:
            pa, pb = pos[key[0]], pos[key[1]]
            hit = len(pa) >= 2 and len(pb) >= 2 and _interleaved(pa, pb)
            checked[key] = hit
        if hit:
            return True
        prev = cur
    return False


def _forced_transitive_arc(comp: Sequence[int], pos: dict[int, list[int]]) -> int | None:
    """Position k if the cycle arc k -> k+1 is transitive in every realization.

    Within a component, any vertex reaches any other without cycle arcs; so a
    walk of block-internal jumps plus forward cycle steps (other than the arc
    under test) that reaches the head's component exists in every realization
    and makes that arc transitive.
    """
    q = len(comp)
    for k in range(q):
        target = comp[(k + 1) % q]
        seen = set(pos[comp[k]])
        stack = list(seen)
        while stack:
            p = stack.pop()
            c = comp[p]
            if c == target:
                return k
            for p2 in pos[c]:
                if p2 not in seen:
                    seen.add(p2)
                    stack.append(p2)
            if p != k:
                np_ = (p + 1) % q
                if np_ not in seen:
                    seen.add(np_)
                    stack.append(np_)
    return None


def _is_valid(comp: Sequence[int]) -> bool:
    pos = _positions(comp)
    if _has_cut_adjacency(comp, pos):
        return False
    return _forced_transitive_arc(comp, pos) is None


def is_valid_config(c: Config) -> bool:
    """Whether the configuration is realizable by a minimal strong digraph.

    A configuration is discarded exactly when some arc of the cycle is forced
    to be transitive.  This subsumes the pairwise condition that interleaved
    ("cut") components must not occupy adjacent positions; longer forcing
    chains through several components are rejected as well.
    """
    return _is_valid(c.comp)


# ---------------------------------------------------------------------------
# counting and streaming
# ---------------------------------------------------------------------------


def iter_raw_configs(q: int) -> Iterator[tuple[int, ...]]:
    """All component arrays of length q in lexicographic order, as tuples."""
    if q < 2:
        raise InvalidConfigError("configuration length must be >= 2")
    comp = _initial(q)
    while True:
        yield tuple(comp)
        if _next_inplace(comp) < 0:
            return


def iter_valid_configs(q: int) -> Iterator[tuple[int, ...]]:
    """The realizable arrays of length q in lexicographic order."""
    for comp in iter_raw_configs(q):
        if _is_valid(comp):
            yield comp


def _prefixes(q: int, plen: int) -> list[tuple[int, ...]]:
    # all valid array prefixes of the given length, lexicographic order
    out: list[tuple[int, ...]] = []

    def rec(comp: list[int], mx: int) -> None:
        if len(comp) == plen:
            out.append(tuple(comp))
            return
        prev = comp[-1]
        for v in range(min(mx + 1, q - 1) + 1):
            if v != prev:
                comp.append(v)
                rec(comp, mx if v < mx else v)
                comp.pop()

    rec([0], 0)
    return out


def _collect_from_prefix(q: int, prefix: tuple[int, ...], out: set[tuple[int, ...]]) -> None:
    # run the successor loop restricted to arrays starting with this prefix:
    # start at the smallest completion, stop once the prefix itself advances
    plen = len(prefix)
    comp = list(prefix) + [0] * (q - plen)
    _fill_suffix(comp, plen)
    while True:
        if _is_valid(comp):
            out.add(_canonical(comp))
        bumped = _next_inplace(comp)
        if bumped < 0 or bumped < plen:
            return


def _collect_pruned(q: int, prefix: tuple[int, ...], out: set[tuple[int, ...]]) -> None:
    """Depth-first generation that rejects cut adjacencies as soon as fixed.

    Sound because interleaving only grows as positions are added and placed
    adjacencies never change; count-equivalence with the plain pipeline is
    certified by tests for small q.
    """
    plen = len(prefix)
    comp = list(prefix) + [0] * (q - plen)
    pos: list[list[int]] = [[] for _ in range(q)]
    for i, c in enumerate(prefix):
        pos[c].append(i)
    adj_of: list[set[int]] = [set() for _ in range(q)]
    premax = [0] * q
    mx = 0
    for i, c in enumerate(prefix):
        mx = c if c > mx else mx
        premax[i] = mx
    # the prefix itself may already be rejectable
    for i in range(1, plen):
        a, b = comp[i - 1], comp[i]
        if _cut_now(pos, a, b):
            return
        adj_of[a].add(b)
        adj_of[b].add(a)

    def place(k: int) -> None:
        prev = comp[k - 1]
        hi = min(premax[k - 1] + 1, q - 1)
        last = k == q - 1
        for v in range(hi + 1):
            if v == prev or (last and v == comp[0]):
                continue
            comp[k] = v
            pos[v].append(k)
            rejected = _cut_now(pos, prev, v) or any(
                _cut_now(pos, a, v) for a in adj_of[v] if a != prev
            )
            if not rejected and last:
                rejected = _cut_now(pos, comp[0], v)
            if not rejected:
                if last:
                    pvs = _positions(comp)
                    if _forced_transitive_arc(comp, pvs) is None:
                        out.add(_canonical(comp))
                else:
                    premax[k] = v if v > premax[k - 1] else premax[k - 1]
                    new_pair = v not in adj_of[prev]
                    if new_pair:
                        adj_of[prev].add(v)
                        adj_of[v].add(prev)
                    place(k + 1)
                    if new_pair:
                        adj_of[prev].discard(v)
                        adj_of[v].discard(prev)
            pos[v].pop()

    if plen < q:
        place(plen)
    else:
        if _is_valid(comp):
            out.add(_canonical(comp))


def _cut_now(pos: list[list[int]], a: int, b: int) -> bool:
    pa, pb = pos[a], pos[b]
    return len(pa) >= 2 and len(pb) >= 2 and _interleaved(pa, pb)


def _shard_worker(args: tuple[int, list[tuple[int, ...]], bool]) -> set[tuple[int, ...]]:
    q, prefixes, pruned = args
    out: set[tuple[int, ...]] = set()
    collect = _collect_pruned if pruned else _collect_from_prefix
    for prefix in prefixes:
        collect(q, prefix, out)
    return out


def canonical_forms(q: int, jobs: int = 1, *, pruned: bool = False) -> list[tuple[int, ...]]:
    """Sorted canonical representatives of all realizable configurations.

    The result is independent of ``jobs``; workers partition the search space
    by array prefix and the canonical sets are merged at the end.
    """
    if q < 2:
        raise InvalidConfigError("configuration length must be >= 2")
    if jobs <= 1 or q <= 4:
        out: set[tuple[int, ...]] = set()
        if pruned:
            _collect_pruned(q, (0,), out)
        else:
            comp = _initial(q)
            while True:
                if _is_valid(comp):
                    out.add(_canonical(comp))
                if _next_inplace(comp) < 0:
                    break
        return sorted(out)

    plen = 2
    prefixes = _prefixes(q, plen)
    while len(prefixes) < 8 * jobs and plen < q - 2:
        plen += 1
        prefixes = _prefixes(q, plen)
    shards: list[list[tuple[int, ...]]] = [[] for _ in range(jobs)]
    for i, prefix in enumerate(prefixes):
        shards[i % jobs].append(prefix)
    merged: set[tuple[int, ...]] = set()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for result in pool.map(
            _shard_worker, [(q, shard, pruned) for shard in shards]
        ):
            merged |= result
    return sorted(merged)


def count_canonical_configs(q: int, jobs: int = 1, *, pruned: bool = False) -> int:
    """Number of realizable configurations of length q, up to rotation."""
    return len(canonical_forms(q, jobs, pruned=pruned))


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------


def realize_config(c: Config) -> tuple[Digraph, Cycle]:
    """Build a minimal strong digraph realizing the configuration.

    The digraph is the directed cycle on 0..q-1 plus, for every component
    with p >= 2 positions v_1 < ... < v_p, fresh vertices a_1..a_p and arcs
    v_i -> a_i -> v_{i+1 mod p} (one alternating cycle through the block).
    The result is post-verified: it must be an MSD and its decomposition must
    recover exactly the configuration's blocks.
    """
    from .msd import is_msd
    from .structure import decompose

    if not is_valid_config(c):
        raise InvalidConfigError(f"configuration {c} is not realizable")
    q = c.q
    arcs = {(i, (i + 1) % q) for i in range(q)}
    n = q
    for block in c.blocks():
        p = len(block)
        if p < 2:
            continue
        aux = range(n, n + p)
        n += p
        for i, (v, a) in enumerate(zip(block, aux)):
            arcs.add((v, a))
            arcs.add((a, block[(i + 1) % p]))
    d = Digraph.of(n, arcs)
    cycle = Cycle(tuple(range(q)))

    if not is_msd(d):
        raise RealizationError(
            f"realization of {c} is not a minimal strong digraph", digraph=d
        )
    dec = decompose(d, cycle)
    recovered = sorted(
        tuple(sorted(v for v in component if v < q))
        for component in dec.sccs.components
        if any(v < q for v in component)
    )
    expected = sorted(c.blocks())
    if recovered != expected:
        raise RealizationError(
            f"realization of {c} recovered blocks {recovered}, expected {expected}",
            digraph=d,
        )
    return d, cycle
