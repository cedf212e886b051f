"""Search for a sequentially Cohen-Macaulay complex with no weak shelling order.

No such complex is currently known; any complex with at least 2*dim + 3
vertices is weakly shellable for trivial reasons, so candidates must be
dense.  The hunter samples random complexes, discards the trivially weakly
shellable ones, searches the rest for a weak shelling order, and tests the
survivors for sequential Cohen-Macaulayness over GF(2) and the rationals.
An empty hit list is the expected outcome at desk scale; the per-stage
counters show where the candidates died.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .complexes import Complex, alexander_dual, restrict_to_support
from .formats import to_json_document
from .generators import random_complex
from .homology import DEFAULT_FIELDS, Field, is_sequentially_cm
from .orders import Undecided, find_weak_shelling_order, is_trivially_weakly_shellable

__all__ = ["STAGES", "HuntReport", "screen_candidate", "hunt_counterexample"]

# Pipeline stages a candidate can end in.
STAGES = (
    "degenerate",             # void, or everything below handled trivially
    "oversized-facet",        # some facet misses at most one vertex
    "trivially-weakly-shellable",
    "weak-order-found",
    "undecided",              # weak-shellability search over threshold
    "not-sequentially-cm",
    "hit",
)


@dataclass
class HuntReport:
    seed: object
    budget: int
    counts: dict = dc_field(default_factory=lambda: {s: 0 for s in STAGES})
    hits: list = dc_field(default_factory=list)

    @property
    def sampled(self) -> int:
        return sum(self.counts.values())

    def as_text(self) -> str:
        lines = ["sampled: %d" % self.sampled]
        for s in STAGES:
            lines.append("  %-28s %d" % (s + ":", self.counts[s]))
        if self.hits:
            lines.append("counterexample candidates:")
            for c in self.hits:
                lines.append("  " + to_json_document(c))
        else:
            lines.append("no counterexample found")
        return "\n".join(lines)


def screen_candidate(c: Complex, fields: Sequence[Field] = DEFAULT_FIELDS,
                     max_facets: Optional[int] = None) -> str:
    """Run one complex through the pipeline and name the stage it ends in.

    Candidates with a facet missing at most one vertex are discarded first:
    such a complex is never the dual of a ghost-free complex, and a pair of
    facets unioning to the universe then defeats the weak condition for free
    (two edges of a path already do it), which is noise rather than an answer.
    The weak-shellability filters run before the (expensive, field-sensitive)
    sequential-CM test; a hit must be sequentially Cohen-Macaulay over every
    requested field yet admit no weak shelling order.
    """
    c = restrict_to_support(c)
    if c.is_void or c.dim == -1:
        return "degenerate"
    if any(f.bit_count() >= c.universe.n - 1 for f in c.facets):
        return "oversized-facet"
    if is_trivially_weakly_shellable(c):
        return "trivially-weakly-shellable"
    try:
        cert = find_weak_shelling_order(c, max_facets=max_facets)
    except Undecided:
        return "undecided"
    if cert is not None:
        return "weak-order-found"
    for f in fields:
        if not is_sequentially_cm(c, f):
            return "not-sequentially-cm"
    return "hit"


def hunt_counterexample(seed: int, budget: int, n_vertices: Sequence[int] = (5, 6, 7, 8),
                        fields: Sequence[Field] = DEFAULT_FIELDS,
                        max_facets: Optional[int] = None) -> HuntReport:
    """Screen ``budget`` seeded candidates; deterministic for a fixed seed.

    Each candidate is the Alexander dual of a random complex restricted to
    its support.  Every complex in the search space arises this way, and
    duals of ghost-free complexes have all facet complements of size at least
    two, so no sample is wasted on the oversized-facet filter.  Hits are
    reported sorted by their canonical JSON encoding so the output does not
    depend on sampling order.
    """
    report = HuntReport(seed=seed, budget=budget)
    sizes = list(n_vertices)
    for i in range(budget):
        sub = seed * 1_000_003 + i
        n = sizes[i % len(sizes)]
        density = 0.35 + 0.5 * ((sub % 97) / 97.0)
        c = alexander_dual(restrict_to_support(random_complex(sub, n, density)))
        stage = screen_candidate(c, fields=fields, max_facets=max_facets)
        report.counts[stage] += 1
        if stage == "hit":
            report.hits.append(restrict_to_support(c))
    report.hits.sort(key=to_json_document)
    return report
