"""Decomposition of an MSD relative to one of its cycles, plus theorem checks.

Deleting a cycle's arcs from an MSD leaves a non-strong digraph whose strong
components condense to an acyclic, transitive-arc-free digraph (a Hasse
diagram).  The checkers below turn the structural facts about that picture
into executable pass/fail reports with counterexample witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .configs import is_cut
from .digraph import (
    Cycle,
    Digraph,
    SccPartition,
    is_transitive_arc,
    linear_vertices,
    scc_partition,
)
from .msd import NotAnMsdError, is_msd
from .report import CONJECTURE_TAG, CheckReport, Witness


class CycleNotInDigraphError(ValueError):
    """The supplied vertex sequence is not a directed cycle of the digraph."""


class HasseInconsistencyError(RuntimeError):
    """The condensation violated an invariant that holds for every MSD.

    Reaching this means a bug or an input that slipped past validation, not a
    mathematical counterexample.
    """


@dataclass(frozen=True)
class HasseDiagram:
    """Condensation of the cycle-deleted digraph, one vertex per component.

    ``anchored`` marks components containing cycle vertices; ``lam`` counts
    them.  Minimal/maximal/pseudominimal/pseudomaximal/linear vertex sets are
    derived from degrees.
    """

    digraph: Digraph
    anchored: tuple[bool, ...]
    trivial: tuple[bool, ...]
    lam: tuple[int, ...]

    @cached_property
    def minimal(self) -> frozenset[int]:
        return frozenset(
            v for v in range(self.digraph.n) if self.digraph.in_degree(v) == 0
        )

    @cached_property
    def maximal(self) -> frozenset[int]:
        return frozenset(
            v for v in range(self.digraph.n) if self.digraph.out_degree(v) == 0
        )

    @cached_property
    def pseudominimal(self) -> frozenset[int]:
        # anchored with outgoing arcs; the polarity is deliberate
        return frozenset(
            v
            for v in range(self.digraph.n)
            if self.anchored[v] and self.digraph.out_degree(v) > 0
        )

    @cached_property
    def pseudomaximal(self) -> frozenset[int]:
        return frozenset(
            v
            for v in range(self.digraph.n)
            if self.anchored[v] and self.digraph.in_degree(v) > 0
        )

    @cached_property
    def linear(self) -> frozenset[int]:
        return linear_vertices(self.digraph)


@dataclass(frozen=True)
class CycleDecomposition:
    digraph: Digraph
    cycle: Cycle
    d_prime: Digraph
    sccs: SccPartition
    hasse: HasseDiagram

    @property
    def q(self) -> int:
        return self.cycle.q

    def anchored_positions(self) -> dict[int, list[int]]:
        """Component id -> sorted cycle positions it contains."""
        out: dict[int, list[int]] = {}
        for pos, v in enumerate(self.cycle.vertices):
            out.setdefault(self.sccs.component_of[v], []).append(pos)
        return out

    def instance_witness(self) -> Witness:
        """A replayable description of (digraph, cycle)."""
        return {
            "n": self.digraph.n,
            "arcs": self.digraph.sorted_arcs(),
            "cycle": list(self.cycle.vertices),
        }


def decompose(d: Digraph, c: Cycle) -> CycleDecomposition:
    """Build the cycle-deleted digraph, its components, and the Hasse diagram.

    Requires an MSD and one of its cycles.  Raises HasseInconsistencyError if
    the condensation comes out cyclic or with a transitive arc, which cannot
    happen for valid inputs.
    """
    if not is_msd(d):
        raise NotAnMsdError("decompose expects a minimal strong digraph")
    if not c.is_cycle_of(d):
        raise CycleNotInDigraphError(
            f"{c.vertices} is not a directed cycle of the digraph"
        )
    d_prime = Digraph(d.n, d.arcs - set(c.arcs()))
    sccs = scc_partition(d_prime)
    k = sccs.k
    comp_of = sccs.component_of
    h_arcs = set()
    for u, v in d_prime.arcs:
        a, b = comp_of[u], comp_of[v]
        if a != b:
            if a > b:
                raise HasseInconsistencyError(
                    "component numbering is not topological"
                )
            h_arcs.add((a, b))
    h = Digraph.of(k, h_arcs)

    on_cycle = set(c.vertices)
    anchored = tuple(
        any(v in on_cycle for v in comp) for comp in sccs.components
    )
    trivial = tuple(len(comp) == 1 for comp in sccs.components)
    lam = tuple(
        sum(1 for v in comp if v in on_cycle) for comp in sccs.components
    )

    for a, b in h.sorted_arcs():
        if is_transitive_arc(h, a, b):
            raise HasseInconsistencyError(
                f"condensation has transitive arc {a}->{b}"
            )

    return CycleDecomposition(
        d, c, d_prime, sccs, HasseDiagram(h, anchored, trivial, lam)
    )


def check_cycle_structure(dec: CycleDecomposition) -> CheckReport:
    """Placement facts: which cycle positions a component may occupy.

    Subchecks: no component holds two cyclically consecutive cycle vertices;
    interleaved ("cut") anchored components never occupy adjacent positions;
    no condensation arc joins two anchored components; and each anchored
    component holds at most floor(q/2) cycle vertices.
    """
    q = dec.q
    comp_of = dec.sccs.component_of
    cyc = dec.cycle.vertices
    positions = dec.anchored_positions()
    subs: list[CheckReport] = []

    w: list[Witness] = []
    for i in range(q):
        u, v = cyc[i], cyc[(i + 1) % q]
        if comp_of[u] == comp_of[v]:
            w.append({"component": comp_of[u], "consecutive": [u, v]})
    subs.append(CheckReport.leaf("no-consecutive-in-component", w))

    w = []
    ids = sorted(positions)
    for idx, a in enumerate(ids):
        for b in ids[idx + 1 :]:
            if not is_cut(positions[a], positions[b], q):
                continue
            for i in range(q):
                pair = {comp_of[cyc[i]], comp_of[cyc[(i + 1) % q]]}
                if pair == {a, b}:
                    w.append(
                        {
                            "cut_components": [a, b],
                            "adjacent_positions": [i, (i + 1) % q],
                        }
                    )
    subs.append(CheckReport.leaf("cut-pairs-not-adjacent", w))

    w = []
    for a, b in dec.hasse.digraph.sorted_arcs():
        if dec.hasse.anchored[a] and dec.hasse.anchored[b]:
            w.append({"hasse_arc": [a, b]})
    subs.append(CheckReport.leaf("no-arc-between-anchored", w))

    w = []
    for cid, lam in enumerate(dec.hasse.lam):
        if lam > q // 2:
            w.append({"component": cid, "lambda": lam, "bound": q // 2})
    subs.append(CheckReport.leaf("lambda-at-most-half", w))

    return CheckReport.group("cycle-structure", subs)


def check_linear_vertex_bounds(dec: CycleDecomposition) -> CheckReport:
    """Linear-vertex guarantees inside components and globally.

    Subchecks: a component that is a bare cycle contains a linear vertex of
    the host digraph; every non-trivial component with at most one cycle
    vertex contains one; a component with lambda > 1 cycle vertices contains
    at least lambda; and the digraph has at least floor((q+1)/2) in total.
    """
    d = dec.digraph
    lin = linear_vertices(d)
    subs: list[CheckReport] = []

    w: list[Witness] = []
    for cid, comp in enumerate(dec.sccs.components):
        if len(comp) < 2:
            continue
        induced_is_cycle = all(
            sum(1 for x in dec.d_prime.succ[v] if x in comp) == 1
            and sum(1 for x in dec.d_prime.pred[v] if x in comp) == 1
            for v in comp
        )
        if induced_is_cycle and not (comp & lin):
            w.append({"component": cid, "vertices": sorted(comp)})
    subs.append(CheckReport.leaf("cycle-component-has-linear", w))

    w = []
    for cid, comp in enumerate(dec.sccs.components):
        if len(comp) >= 2 and dec.hasse.lam[cid] <= 1 and not (comp & lin):
            w.append({"component": cid, "vertices": sorted(comp)})
    subs.append(CheckReport.leaf("nontrivial-component-has-linear", w))

    w = []
    for cid, comp in enumerate(dec.sccs.components):
        lam = dec.hasse.lam[cid]
        if lam > 1 and len(comp & lin) < lam:
            w.append(
                {
                    "component": cid,
                    "lambda": lam,
                    "linear_inside": sorted(comp & lin),
                }
            )
    subs.append(CheckReport.leaf("lambda-many-linear", w))

    w = []
    bound = (dec.q + 1) // 2
    if len(lin) < bound:
        w.append({"linear": sorted(lin), "bound": bound})
    subs.append(
        CheckReport.leaf("total-linear-lower-bound", w, f"alpha={len(lin)} >= {bound}")
    )

    return CheckReport.group("linear-vertex-bounds", subs)


def _iter_paths_from(h: Digraph, start: int) -> Iterator[list[int]]:
    """All directed paths of length >= 1 from start, in lexicographic order."""
    path = [start]
    iters = [iter(h.succ[start])]
    while iters:
        advanced = False
        for w in iters[-1]:
            path.append(w)
            yield list(path)
            iters.append(iter(h.succ[w]))
            advanced = True
            break
        if not advanced:
            iters.pop()
            path.pop()


def check_hasse_properties(
    dec: CycleDecomposition, strict_pseudo_paths: bool = False
) -> CheckReport:
    """Path and counting facts about the condensation.

    Every minimal-to-maximal path must contain an interior vertex that is
    linear in the condensation, and linear vertices are at least as numerous
    as pseudominimal (and pseudomaximal) ones.  With ``strict_pseudo_paths``
    the path requirement is additionally applied between pseudominimal and
    pseudomaximal vertices.
    """
    h = dec.hasse
    subs: list[CheckReport] = []

    w: list[Witness] = []
    for m0 in sorted(h.minimal):
        for path in _iter_paths_from(h.digraph, m0):
            if path[-1] in h.maximal and not any(
                v in h.linear for v in path[1:-1]
            ):
                w.append({"path": path})
    subs.append(CheckReport.leaf("min-max-path-has-linear", w))

    if strict_pseudo_paths:
        w = []
        for u in sorted(h.pseudominimal):
            for path in _iter_paths_from(h.digraph, u):
                if path[-1] in h.pseudomaximal and not any(
                    v in h.linear for v in path[1:-1]
                ):
                    w.append({"path": path})
        subs.append(CheckReport.leaf("pseudo-path-has-linear", w))

    w = []
    n_lin = len(h.linear)
    if n_lin < len(h.pseudominimal):
        w.append(
            {"linear": sorted(h.linear), "pseudominimal": sorted(h.pseudominimal)}
        )
    if n_lin < len(h.pseudomaximal):
        w.append(
            {"linear": sorted(h.linear), "pseudomaximal": sorted(h.pseudomaximal)}
        )
    subs.append(
        CheckReport.leaf(
            "linear-vs-pseudo-counts",
            w,
            f"linear={n_lin} pseudominimal={len(h.pseudominimal)}"
            f" pseudomaximal={len(h.pseudomaximal)}",
        )
    )

    return CheckReport.group("hasse-properties", subs)


def check_conjecture(dec: CycleDecomposition) -> CheckReport:
    """Open lower bound on the number of anchored components.

    A failure is not a bug: it would be a counterexample worth keeping, so
    the witness carries the full replayable instance and the notes carry a
    distinctive tag.
    """
    bound = (dec.q + 3) // 2
    n_anchored = sum(dec.hasse.anchored)
    if n_anchored >= bound:
        return CheckReport(
            "conjecture-anchored-lower-bound",
            True,
            notes=f"anchored={n_anchored} >= {bound}",
        )
    witness = dict(dec.instance_witness())
    witness.update({"anchored_components": n_anchored, "bound": bound})
    return CheckReport(
        "conjecture-anchored-lower-bound",
        False,
        (witness,),
        f"{CONJECTURE_TAG}: anchored={n_anchored} < {bound}",
    )


def run_structure_checks(
    dec: CycleDecomposition, strict_pseudo_paths: bool = False
) -> list[CheckReport]:
    """All checkers on one decomposition, conjecture last."""
    return [
        check_cycle_structure(dec),
        check_linear_vertex_bounds(dec),
        check_hasse_properties(dec, strict_pseudo_paths),
        check_conjecture(dec),
    ]
