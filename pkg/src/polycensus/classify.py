"""Which polyhedral graphs have polyhedral complements?

The search space is cut down in stages, each stage carrying its reason:

* orders 4..6: a graph and its complement both need minimum degree 3,
  so degrees must fit in [3, p - 4], which is empty,
* order 7: degrees are pinned to exactly 3, but 7 * 3 is odd,
* order 8: degrees confined to [3, 4]; this is the live case,
* order 9: no planar graph on 9 vertices has a planar complement,
  verified here by checking every maximal planar graph on 9 vertices
  (any planar graph extends to one, and complements only shrink),
* order 10 and up: both planar would induce both planar on any 9 of
  the vertices.

``solve_question`` then scans the order-8 census, with or without the
degree-row pruning, and reports the survivors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache

from .catalog import CatalogEntry, build_catalog
from .connectivity import is_3_connected
from .duality import is_polyhedral
from .enumeration import (
    enumerate_polyhedra,
    filter_by_degree_sequence,
    triangulations,
)
from .graph6 import encode
from .graphs import DegreeSequence, Graph
from .isomorphism import canonical_form, canonical_graph
from .planarity import is_planar


class ClassificationError(RuntimeError):
    """Computed evidence contradicts the expected classification."""


# ---------------------------------------------------------------------------
# stage 1: orders

@dataclass(frozen=True, slots=True)
class PruneStep:
    """One order's fate, with the degree window [min_degree, max_degree]
    that a solution of that order would have to respect."""

    p: int
    verdict: str  # "excluded" or "candidate"
    reason: str
    min_degree: int
    max_degree: int


@dataclass(frozen=True, slots=True)
class PruneTrace:
    steps: tuple[PruneStep, ...]

    @property
    def candidate_orders(self) -> tuple[int, ...]:
        return tuple(s.p for s in self.steps if s.verdict == "candidate")


@cache
def verify_planar_complement_bound() -> bool:
    """No 9-vertex graph and its complement are both planar.

    Checked on maximal planar graphs only: every planar graph on 9
    vertices is a spanning subgraph of a maximal one, whose complement
    is in turn a subgraph of the original's complement.
    """
    return all(not is_planar(t.complement()) for t in triangulations(9))


@cache
def prune_order() -> PruneTrace:
    """Why only order 8 can carry a polyhedral graph with polyhedral
    complement."""
    steps = [
        PruneStep(p, "excluded", f"degree window [3, {p - 4}] is empty", 3, p - 4)
        for p in (4, 5, 6)
    ]
    steps.append(
        PruneStep(7, "excluded", "degrees pinned to 3, but 7 * 3 is odd", 3, 3)
    )
    steps.append(PruneStep(8, "candidate", "degrees confined to [3, 4]", 3, 4))
    if not verify_planar_complement_bound():
        raise ClassificationError(
            "found a 9-vertex maximal planar graph with planar complement"
        )
    nine = len(triangulations(9))
    steps.append(
        PruneStep(
            9,
            "excluded",
            "complement of a planar graph on 9 vertices is never planar, "
            f"checked via all {nine} maximal planar graphs",
            3,
            5,
        )
    )
    steps.append(
        PruneStep(
            10,
            "excluded",
            "this and every larger order induce, on any 9 vertices, a "
            "planar graph with planar complement",
            3,
            6,
        )
    )
    return PruneTrace(tuple(steps))


# ---------------------------------------------------------------------------
# stage 2: degree rows at order 8

@dataclass(frozen=True, slots=True)
class CandidateRow:
    """A feasible order-8 degree vector with its complement's vector;
    r columns are face counts q - p + 2."""

    row: DegreeSequence
    complement_row: DegreeSequence

    @property
    def q(self) -> int:
        return self.row.q

    @property
    def r(self) -> int:
        return self.row.q - self.row.p + 2

    @property
    def q_complement(self) -> int:
        return self.complement_row.q

    @property
    def r_complement(self) -> int:
        return self.complement_row.q - self.complement_row.p + 2


def candidate_degree_rows() -> tuple[CandidateRow, ...]:
    """Order-8 degree vectors a solution could have.

    Degrees live in [3, 4]; the sum must be even; since a solution's
    complement is again a solution, only the side with no more edges
    than its complement is scanned.
    """
    out = []
    for fours in range(9):
        row = (4,) * fours + (3,) * (8 - fours)
        if sum(row) % 2:
            continue
        ds = DegreeSequence(row)
        comp = ds.complement()
        if ds.q <= comp.q:
            out.append(CandidateRow(ds, comp))
    return tuple(out)


# ---------------------------------------------------------------------------
# stage 3: scan the census

@dataclass(frozen=True, slots=True)
class CaseResult:
    """Outcome of complement-checking one slice of the order-8 census.

    A complement failing both checks is counted against planarity.
    """

    p: int
    q: int
    row: DegreeSequence | None  # None when scanning a whole size
    candidates: int
    complement_non_planar: int
    complement_not_3_connected: int
    solutions: tuple[Graph, ...]


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    pruned: bool
    trace: PruneTrace
    candidate_rows: tuple[CandidateRow, ...]
    cases: tuple[CaseResult, ...]
    solutions: tuple[CatalogEntry, ...]

    def to_text(self) -> str:
        lines = ["order pruning:"]
        for s in self.trace.steps:
            tail = " and up" if s.p == 10 else ""
            lines.append(f"  p={s.p}{tail}: {s.verdict}, {s.reason}")
        lines.append("candidate degree rows at order 8 (row, q, r; complement):")
        for c in self.candidate_rows:
            lines.append(
                f"  {c.row.compact()}  q={c.q:2d} r={c.r}   "
                f"{c.complement_row.compact()}  q={c.q_complement:2d} r={c.r_complement}"
            )
        mode = "by degree row" if self.pruned else "by size alone"
        lines.append(f"census scan at order 8, {mode}:")
        for c in self.cases:
            what = f"degrees {c.row.compact()}" if c.row else "all degree rows"
            lines.append(
                f"  q={c.q}, {what}: {c.candidates} candidates, "
                f"{len(c.solutions)} survive "
                f"({c.complement_non_planar} complements non-planar, "
                f"{c.complement_not_3_connected} not 3-connected)"
            )
        lines.append(f"solutions: {len(self.solutions)}")
        for e in self.solutions:
            flags = [
                "self-complementary" if e.self_complementary else "not self-complementary",
                "self-dual" if e.self_dual else f"dual is {e.dual_label}",
            ]
            name = e.published_name or "unnamed"
            lines.append(
                f"  {e.label} ({name}) p={e.p} q={e.q} "
                f"degrees {e.degree_sequence().compact()}, " + ", ".join(flags)
            )
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "report_version": 1,
            "pruned": self.pruned,
            "order_pruning": [
                {
                    "p": s.p,
                    "verdict": s.verdict,
                    "reason": s.reason,
                    "min_degree": s.min_degree,
                    "max_degree": s.max_degree,
                }
                for s in self.trace.steps
            ],
            "candidate_rows": [
                {
                    "row": c.row.compact(),
                    "q": c.q,
                    "r": c.r,
                    "complement_row": c.complement_row.compact(),
                    "complement_q": c.q_complement,
                    "complement_r": c.r_complement,
                }
                for c in self.candidate_rows
            ],
            "cases": [
                {
                    "p": c.p,
                    "q": c.q,
                    "degree_row": c.row.compact() if c.row else None,
                    "candidates": c.candidates,
                    "complement_non_planar": c.complement_non_planar,
                    "complement_not_3_connected": c.complement_not_3_connected,
                    "solutions": [encode(g) for g in c.solutions],
                }
                for c in self.cases
            ],
            "solutions": [
                {
                    "label": e.label,
                    "published_name": e.published_name,
                    "graph6": encode(e.graph),
                    "certificate": e.certificate.hex,
                    "degrees": e.degree_sequence().compact(),
                    "self_complementary": e.self_complementary,
                    "self_dual": e.self_dual,
                    "dual_label": e.dual_label,
                }
                for e in self.solutions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def _scan(p: int, q: int, row, graphs, found: dict) -> CaseResult:
    non_planar = not_3conn = 0
    winners = []
    for g in graphs:
        c = g.complement()
        if not is_planar(c):
            non_planar += 1
            continue
        if not is_3_connected(c):
            not_3conn += 1
            continue
        winners.append(g)
        found[canonical_form(g)] = g
        cc = canonical_graph(c)  # the complement is then a solution too
        found[canonical_form(cc)] = cc
    return CaseResult(p, q, row, len(graphs), non_planar, not_3conn, tuple(winners))


def _entry(g: Graph) -> CatalogEntry:
    entry = build_catalog().by_certificate.get(canonical_form(g))
    if entry is None:
        raise ClassificationError(f"solution {encode(g)} falls outside the catalog")
    return entry


def solve_question(prune: bool = True) -> ClassificationReport:
    """Find every polyhedral graph whose complement is polyhedral.

    With prune=True, order 8 is scanned row by row over the feasible
    degree vectors and closed under complementation; with prune=False,
    every order-8 size that leaves the complement enough edges is
    scanned whole.  Both must land on the same classes.
    """
    trace = prune_order()
    rows = candidate_degree_rows()
    found: dict = {}
    cases = []
    if prune:
        for cand in rows:
            graphs = filter_by_degree_sequence(
                enumerate_polyhedra(8, cand.q), cand.row
            )
            cases.append(_scan(8, cand.q, cand.row, graphs, found))
    else:
        for q in range(12, 17):
            cases.append(_scan(8, q, None, enumerate_polyhedra(8, q), found))
    solutions = tuple(
        sorted((_entry(g) for g in found.values()), key=lambda e: e.label)
    )
    return ClassificationReport(prune, trace, rows, tuple(cases), solutions)


def validate_report(report: ClassificationReport) -> None:
    """Raise ClassificationError unless the report shows the expected
    classification: three solutions, all self-complementary, all with
    8 vertices, 14 edges and degrees 44443333, exactly one of them not
    self-dual."""
    if report.trace.candidate_orders != (8,):
        raise ClassificationError("order pruning did not isolate order 8")
    sols = report.solutions
    if len(sols) != 3:
        raise ClassificationError(f"expected 3 solutions, found {len(sols)}")
    for e in sols:
        if (e.p, e.q) != (8, 14):
            raise ClassificationError(f"solution {e.label} is not on (8, 14)")
        if e.degree_sequence().compact() != "44443333":
            raise ClassificationError(
                f"solution {e.label} has degrees {e.degree_sequence().compact()}"
            )
        if not e.self_complementary:
            raise ClassificationError(f"solution {e.label} is not self-complementary")
    non_self_dual = [e for e in sols if not e.self_dual]
    if len(non_self_dual) != 1:
        raise ClassificationError(
            f"expected exactly one non-self-dual solution, found {len(non_self_dual)}"
        )
    if report.pruned:
        sizes = {c.q: c.candidates for c in report.cases}
        if sizes != {12: 2, 13: 9, 14: 17}:
            raise ClassificationError(f"unexpected pruned case sizes {sizes}")


# ---------------------------------------------------------------------------
# the parameter coincidence at (8, 14)

def equal_order_size_system(total_edges=None) -> tuple[tuple[int, int], ...]:
    """Feasible (p, q) where the dual keeps the order (q = 2p - 2) and
    the complement keeps the size (2q = total_edges(p)).

    total_edges is injectable so a deliberately wrong pair-count can
    confirm the solver rejects it; the default is p(p - 1) / 2.  The
    feasibility window is fixed regardless: q and the true complement
    size p(p - 1)/2 - q must both fit a polyhedron, i.e. lie in
    [6, 3p - 6].
    """
    if total_edges is None:
        total_edges = lambda p: p * (p - 1) // 2
    out = []
    for p in range(4, 65):
        q = 2 * p - 2
        if 2 * q != total_edges(p):
            continue
        qbar = p * (p - 1) // 2 - q
        if min(q, qbar) < 6 or max(q, qbar) > 3 * p - 6:
            continue
        out.append((p, q))
    return tuple(out)


def verify_remark_8_14() -> bool:
    """A polyhedron of the same order and size as both its dual and its
    complement must be an (8, 14) graph: the system q = 2p - 2,
    2q = p(p - 1) / 2 has (8, 14) as its only feasible solution.  The
    doubled pair-count variant (its one integer root leaves the
    complement with no edges at all) must yield nothing."""
    return (
        equal_order_size_system() == ((8, 14),)
        and equal_order_size_system(lambda p: p * (p - 1)) == ()
    )
