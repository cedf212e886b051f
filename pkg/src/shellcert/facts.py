"""Per-complex truth table for the four linked conditions, with provenance.

The four slots are: is the Alexander dual shellable, does the complex satisfy
the strong gcd-condition, is the dual sequentially Cohen-Macaulay, and is the
Stanley-Reisner ring Golod.  The first three are decided by search and
homology; Golodness is never verified algebraically here.  Instead the known
one-way implications act as inference rules,

    dual shellable  =>  strong gcd      dual shellable  =>  dual seq. CM
    strong gcd      =>  Golod           dual seq. CM    =>  Golod

and for flag complexes all four conditions are equivalent, so any decided
slot settles the rest.  Inferred values never overwrite computed ones; a
contradiction between the two raises, it is a correctness failure.

All rules except "dual shellable => dual seq. CM" assume the complex has no
ghost vertices (a ghost vertex is a singleton minimal non-face, which gives
the dual a facet missing a single vertex and breaks the shelling-to-gcd
argument; a path of two edges has a shellable dual picture but no strong
gcd-order).  For a ghosted complex only the unconditional rule fires.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .complexes import Complex, alexander_dual, is_flag, restrict_to_support
from .homology import DEFAULT_FIELDS, Field, is_sequentially_cm
from .orders import Undecided, find_shelling_order, find_strong_gcd_order

__all__ = [
    "TRUE",
    "FALSE",
    "UNKNOWN",
    "OUT_OF_SCOPE",
    "SLOTS",
    "Slot",
    "FactTable",
    "FactConflict",
    "build_fact_table",
    "close_under_rules",
]

TRUE = "T"
FALSE = "F"
UNKNOWN = "unknown"
OUT_OF_SCOPE = "out-of-scope"

SLOTS = ("dual_shellable", "strong_gcd", "dual_seq_cm", "golod")

# (premise slot, conclusion slot, rule name, needs ghost-free complex);
# premise T forces conclusion T, conclusion F forces premise F.
RULES = (
    ("dual_shellable", "strong_gcd", "dual-shelling-implies-gcd", True),
    ("dual_shellable", "dual_seq_cm", "shelling-implies-seq-cm", False),
    ("strong_gcd", "golod", "gcd-implies-golod", True),
    ("dual_seq_cm", "golod", "seq-cm-implies-golod", True),
)


class FactConflict(Exception):
    """An inference contradicts a previously established slot value."""


@dataclass
class Slot:
    value: str = UNKNOWN
    provenance: str = ""
    note: str = ""

    @property
    def decided(self) -> bool:
        return self.value in (TRUE, FALSE)


@dataclass
class FactTable:
    complex: Complex
    flag: bool
    ghost_free: bool = True
    slots: dict = dc_field(default_factory=lambda: {name: Slot() for name in SLOTS})
    scm_by_field: dict = dc_field(default_factory=dict)  # str(field) -> bool

    def value(self, name: str) -> str:
        return self.slots[name].value

    def values(self) -> tuple:
        return tuple(self.slots[name].value for name in SLOTS)

    def _set(self, name: str, value: str, provenance: str, note: str = ""):
        slot = self.slots[name]
        if slot.decided:
            if slot.value != value:
                raise FactConflict(
                    "slot %s is %s (%s) but %s would set %s"
                    % (name, slot.value, slot.provenance, provenance, value)
                )
            return False
        slot.value = value
        slot.provenance = provenance
        slot.note = note
        return True

    def as_text(self) -> str:
        labels = {
            "dual_shellable": "dual shellable",
            "strong_gcd": "strong gcd",
            "dual_seq_cm": "dual seq. CM",
            "golod": "Golod",
        }
        lines = []
        for name in SLOTS:
            s = self.slots[name]
            extra = " [%s]" % s.note if s.note else ""
            prov = " (%s)" % s.provenance if s.provenance else ""
            lines.append("%-15s %-12s%s%s" % (labels[name] + ":", s.value, prov, extra))
        return "\n".join(lines)


def close_under_rules(table: FactTable):
    """Apply the implication rules (and their contrapositives) to a fixed point.

    Idempotent.  Only undecided slots are ever written; writing a decided
    slot with a different value raises FactConflict.
    """
    changed = True
    while changed:
        changed = False
        for premise, conclusion, rule, needs_ghost_free in RULES:
            if needs_ghost_free and not table.ghost_free:
                continue
            if table.slots[premise].value == TRUE:
                changed |= table._set(conclusion, TRUE, "inferred:" + rule)
            if table.slots[conclusion].value == FALSE:
                changed |= table._set(premise, FALSE, "inferred:" + rule)
        if table.flag:
            decided = {table.slots[n].value for n in SLOTS if table.slots[n].decided}
            if len(decided) > 1:
                raise FactConflict(
                    "flag complex with unequal decided slots: %s"
                    % {n: table.slots[n].value for n in SLOTS}
                )
            if decided:
                v = decided.pop()
                for n in SLOTS:
                    changed |= table._set(n, v, "inferred:flag-equivalence")
    return table


def build_fact_table(c: Complex, fields: Sequence[Field] = DEFAULT_FIELDS,
                     max_facets: Optional[int] = None) -> FactTable:
    """Compute the searchable slots, then take the inference closure.

    The dual is tested for sequential Cohen-Macaulayness on its support:
    ghost vertices of the dual correspond to generators already present in
    the Stanley-Reisner ideal and do not change the quotient ring.  When the
    per-field verdicts disagree the slot stays undecided and the note records
    the split.  Over-threshold searches leave their slot unknown rather than
    guessing.
    """
    table = FactTable(c, flag=is_flag(c), ghost_free=not c.has_ghost_vertices)
    dual = alexander_dual(c)

    try:
        cert = find_shelling_order(dual, max_facets=max_facets)
        table._set("dual_shellable", TRUE if cert else FALSE, "computed")
    except Undecided as e:
        table.slots["dual_shellable"].note = "undecided: %s" % e

    try:
        cert = find_strong_gcd_order(c, max_facets=max_facets)
        table._set("strong_gcd", TRUE if cert else FALSE, "computed")
    except Undecided as e:
        table.slots["strong_gcd"].note = "undecided: %s" % e

    if dual.is_void:
        table.slots["dual_seq_cm"].note = "dual is void; settled by inference if at all"
    else:
        support_dual = restrict_to_support(dual)
        verdicts = {}
        for f in fields:
            verdicts[str(f)] = bool(is_sequentially_cm(support_dual, f))
        table.scm_by_field = verdicts
        vals = set(verdicts.values())
        if len(vals) == 1:
            table._set("dual_seq_cm", TRUE if vals.pop() else FALSE, "computed")
        else:
            table.slots["dual_seq_cm"].note = "field-dependent: %s" % verdicts

    if not table.flag:
        # placeholder; the closure may still upgrade it via an implication rule
        table.slots["golod"].value = OUT_OF_SCOPE
        table.slots["golod"].note = "no algebraic verification performed"

    return close_under_rules(table)
