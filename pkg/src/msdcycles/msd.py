"""Minimal-strong-digraph recognition, minimization, generation, and bounds.

An MSD is a strong digraph in which deleting any single arc destroys strong
connectivity; equivalently, a strong digraph with no transitive arcs.  Both
routes are implemented (`is_msd`, `is_msd_by_deletion`) and the test suite
asserts they agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .digraph import (
    Digraph,
    NotStronglyConnectedError,
    cut_points,
    enumerate_cycles,
    is_strongly_connected,
    is_transitive_arc,
    linear_vertices,
)
from .report import CheckReport, Witness


class NotAnMsdError(ValueError):
    """An operation required a minimal strong digraph."""


@dataclass(frozen=True)
class MsdSummary:
    """Headline quantities of an MSD: sizes, linear vertices, longest cycle."""

    n: int
    m: int
    linear: frozenset[int]
    longest_cycle: int
    lower_bound_l: int
    upper_bound_l: int


def is_msd(d: Digraph) -> bool:
    """Strong and free of transitive arcs.  Defined for n >= 2 only."""
    if d.n < 2:
        raise ValueError("MSDs are defined for digraphs of order >= 2")
    if not is_strongly_connected(d):
        return False
    return not any(is_transitive_arc(d, u, v) for u, v in d.arcs)


def is_msd_by_deletion(d: Digraph) -> bool:
    """Strong, and deleting any one arc breaks strong connectivity.

    The definitional route; kept independent of `is_msd` so the two can be
    cross-checked.
    """
    if d.n < 2:
        raise ValueError("MSDs are defined for digraphs of order >= 2")
    if not is_strongly_connected(d):
        return False
    return not any(
        is_strongly_connected(d.without_arc(u, v)) for u, v in d.arcs
    )


def make_minimal(d: Digraph, seed: int = 0) -> Digraph:
    """Delete transitive arcs one at a time (order seeded) until none remain.

    Deleting a transitive arc preserves strong connectivity, so the result is
    a spanning MSD of the input.
    """
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError("make_minimal needs a strong digraph")
    rng = random.Random(seed)
    cur = d
    while True:
        transitive = [a for a in cur.sorted_arcs() if is_transitive_arc(cur, *a)]
        if not transitive:
            return cur
        u, v = rng.choice(transitive)
        cur = cur.without_arc(u, v)


def random_msd(n: int, extra_arcs: int = 0, seed: int = 0) -> Digraph:
    """A random MSD on exactly n vertices.

    Builds a random Hamiltonian cycle plus ``extra_arcs`` random arcs, then
    minimizes.  Deterministic for a fixed (n, extra_arcs, seed); makes no
    uniformity promise over all MSDs of order n.
    """
    if n < 2:
        raise ValueError("random_msd needs n >= 2")
    if extra_arcs < 0:
        raise ValueError("extra_arcs must be >= 0")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    candidates = sorted(
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and (u, v) not in arcs
    )
    for u, v in rng.sample(candidates, min(extra_arcs, len(candidates))):
        arcs.add((u, v))
    return make_minimal(Digraph.of(n, arcs), seed=rng.randrange(2**30))


def longest_cycle_bounds(n: int, m: int) -> tuple[int, int]:
    """(ceil(m / (m - n + 1)), 2n - m): the tight bounds on the longest cycle."""
    return -(-m // (m - n + 1)), 2 * n - m


def msd_summary(d: Digraph) -> MsdSummary:
    """Sizes, linear vertices, and the exhaustively computed longest cycle."""
    if not is_msd(d):
        raise NotAnMsdError("summary is defined for MSDs only")
    cycles = enumerate_cycles(d).cycles
    longest = max(c.q for c in cycles)
    lo, hi = longest_cycle_bounds(d.n, d.m)
    return MsdSummary(d.n, d.m, linear_vertices(d), longest, lo, hi)


def check_msd_invariants(d: Digraph) -> CheckReport:
    """Verify the global MSD facts on a concrete digraph.

    Subchecks: arc-count bounds n <= m <= 2(n-1); at least two linear
    vertices; longest-cycle bounds with l from exhaustive search; and the
    two-cycle lemma (each endpoint of a 2-cycle is linear or a cut point).
    """
    if not is_msd(d):
        raise NotAnMsdError("check_msd_invariants expects an MSD")
    summary = msd_summary(d)
    n, m = summary.n, summary.m
    subs: list[CheckReport] = []

    w: list[Witness] = []
    if not (n <= m <= 2 * (n - 1)):
        w.append({"n": n, "m": m, "bounds": [n, 2 * (n - 1)]})
    subs.append(CheckReport.leaf("arc-count-bounds", w, f"n={n} m={m}"))

    w = []
    if len(summary.linear) < 2:
        w.append({"linear": sorted(summary.linear)})
    subs.append(
        CheckReport.leaf(
            "two-linear-vertices", w, f"linear={sorted(summary.linear)}"
        )
    )

    w = []
    if not (summary.lower_bound_l <= summary.longest_cycle <= summary.upper_bound_l):
        w.append(
            {
                "longest_cycle": summary.longest_cycle,
                "bounds": [summary.lower_bound_l, summary.upper_bound_l],
            }
        )
    subs.append(
        CheckReport.leaf(
            "longest-cycle-bounds",
            w,
            f"{summary.lower_bound_l} <= l={summary.longest_cycle}"
            f" <= {summary.upper_bound_l}",
        )
    )

    cuts = cut_points(d)
    w = []
    for u, v in d.sorted_arcs():
        if u < v and (v, u) in d.arcs:
            for x in (u, v):
                if x not in summary.linear and x not in cuts:
                    w.append({"two_cycle": [u, v], "vertex": x})
    subs.append(CheckReport.leaf("two-cycle-endpoints", w))

    return CheckReport.group("msd-invariants", subs)
