"""Order conditions on facets and minimal non-faces.

Three linear-order conditions are checked and decided here:

* a *shelling order*: each facet meets the complex generated by its
  predecessors in a complex that is pure of dimension one less;
* a *weak shelling order*: whenever an earlier facet and a later one union to
  the whole universe, their intersection lies inside some strictly earlier
  facet;
* a *strong gcd-order* on minimal non-faces: every disjoint pair is filled by
  a non-face placed after the first of the two, inside their union.

Existence searches run as depth-first search over subsets of placed facets.
That is sound because admissibility of appending a facet depends only on the
**set** of facets already placed, never on their order, so a memo of dead
prefix-sets turns the factorial search into one over at most 2^r states.
Strong gcd-orders are decided through the dual complex: an order of the
minimal non-faces is a strong gcd-order exactly when the reversed complement
order is a weak shelling order of the dual, and the weak condition is
prefix-closed while the gcd condition is not.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .complexes import (
    Complex,
    InputError,
    alexander_dual,
    intersection_with_prefix,
    minimal_nonfaces,
)

__all__ = [
    "SHELLING",
    "WEAK_SHELLING",
    "STRONG_GCD",
    "DEFAULT_MAX_EXACT_FACETS",
    "OrderCertificate",
    "CheckReport",
    "StepWitness",
    "PairWitness",
    "Undecided",
    "check_shelling_order",
    "check_weak_shelling_order",
    "check_strong_gcd_order",
    "find_shelling_order",
    "find_weak_shelling_order",
    "find_strong_gcd_order",
    "is_trivially_weakly_shellable",
]

SHELLING = "shelling"
WEAK_SHELLING = "weak-shelling"
STRONG_GCD = "strong-gcd"

#: Exhaustive search is guaranteed complete up to this many facets.
DEFAULT_MAX_EXACT_FACETS = 22
#: States a best-effort search may visit on over-threshold instances.
DEFAULT_NODE_BUDGET = 50_000

ENV_MAX_FACETS = "SHELLCERT_MAX_FACETS"


class Undecided(Exception):
    """The instance exceeded the exact-search threshold and no certificate was found.

    Deliberately distinct from a None result: None means *proven* that no
    order exists, Undecided means the search gave up.
    """


@dataclass(frozen=True)
class OrderCertificate:
    """A facet (or non-face) permutation together with the condition it certifies."""

    kind: str
    complex: Complex
    sequence: tuple

    def members(self) -> list:
        return [self.complex.universe.members(m) for m in self.sequence]


@dataclass(frozen=True)
class StepWitness:
    """Shelling failure: position ``step`` whose prefix intersection is not
    pure of dimension ``required_dim``."""

    step: int
    intersection: tuple
    required_dim: int


@dataclass(frozen=True)
class PairWitness:
    """Positions (i, j) of the pair for which no admissible k exists."""

    i: int
    j: int


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    witness: Optional[Union[StepWitness, PairWitness]] = None

    def __bool__(self) -> bool:
        return self.ok


def _as_sequence(c: Complex, order, expected: Sequence[int], what: str) -> tuple:
    """Normalize an order to masks and verify it is a permutation of *expected*."""
    if isinstance(order, OrderCertificate):
        seq = tuple(order.sequence)
    else:
        seq = tuple(c.universe.as_mask(f) for f in order)
    if sorted(seq) != sorted(expected):
        raise InputError("order is not a permutation of the %s" % what)
    return seq


def check_shelling_order(c: Complex, order) -> CheckReport:
    """Validate a shelling order of c's facets."""
    seq = _as_sequence(c, order, c.facets, "facets")
    for j in range(1, len(seq)):
        need = seq[j].bit_count() - 1
        inter = intersection_with_prefix(c, seq, j)
        if any(m.bit_count() != need for m in inter.facets):
            return CheckReport(False, StepWitness(j, inter.facets, need - 1))
    return CheckReport(True)


def check_weak_shelling_order(c: Complex, order) -> CheckReport:
    """Validate a weak shelling order of c's facets."""
    seq = _as_sequence(c, order, c.facets, "facets")
    full = c.universe.full_mask
    for j in range(len(seq)):
        for i in range(j):
            if seq[i] | seq[j] != full:
                continue
            both = seq[i] & seq[j]
            if not any(k != i and both & ~seq[k] == 0 for k in range(j)):
                return CheckReport(False, PairWitness(i, j))
    return CheckReport(True)


def check_strong_gcd_order(c: Complex, order) -> CheckReport:
    """Validate a strong gcd-order of c's minimal non-faces.

    The filling index k for a disjoint pair i < j ranges over every position
    after i other than j itself, including positions after j.
    """
    seq = _as_sequence(c, order, minimal_nonfaces(c), "minimal non-faces")
    r = len(seq)
    for i in range(r):
        for j in range(i + 1, r):
            if seq[i] & seq[j]:
                continue
            union = seq[i] | seq[j]
            if not any(k != j and seq[k] & ~union == 0 for k in range(i + 1, r)):
                return CheckReport(False, PairWitness(i, j))
    return CheckReport(True)


def is_trivially_weakly_shellable(c: Complex) -> bool:
    """True iff no two facets union to the whole universe.

    Implied whenever the universe has at least 2*dim(c) + 3 vertices; in that
    case every facet order is a weak shelling order.
    """
    full = c.universe.full_mask
    fs = c.facets
    for a in range(len(fs)):
        for b in range(a + 1, len(fs)):
            if fs[a] | fs[b] == full:
                return False
    return True


def _resolve_threshold(max_facets: Optional[int]) -> int:
    if max_facets is not None:
        return max_facets
    env = os.environ.get(ENV_MAX_FACETS)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError("%s must be an integer, got %r" % (ENV_MAX_FACETS, env))
    return DEFAULT_MAX_EXACT_FACETS


def _subset_dfs(r: int, admissible, budget: Optional[int]):
    """Depth-first search over subsets of placed items.

    Candidates are tried in index order, so the first completed order is
    deterministic.  Returns the order as a list of indices, None when the
    whole reachable region was exhausted, or raises Undecided when a budget
    was given and ran out.
    """
    goal = (1 << r) - 1
    dead: set[int] = set()
    visited = 0
    order: list[int] = []

    def rec(state: int) -> bool:
        nonlocal visited
        if state == goal:
            return True
        if state in dead:
            return False
        visited += 1
        if budget is not None and visited > budget:
            raise Undecided("search budget of %d states exhausted" % budget)
        for f in range(r):
            bit = 1 << f
            if state & bit or not admissible(state, f):
                continue
            order.append(f)
            if rec(state | bit):
                return True
            order.pop()
        dead.add(state)
        return False

    return order if rec(0) else None


def _shelling_admissibility(facets: Sequence[int]):
    """Closure testing whether facet f may be appended after prefix-set S.

    Appending F requires every maximal old-new intersection to have exactly
    one vertex of F missing.  Writing D_i = F \\ F_i, that is: each placed i
    must have D_i meet the witness set W = union of the singleton D_k over
    placed k.  Both sides reduce to precomputed per-vertex index masks, so a
    single test costs O(|F|) word operations.
    """
    r = len(facets)
    single = []  # single[f][v_bit] -> index mask of i with F_f \ F_i == {v}
    covers = []  # covers[f][v_bit] -> index mask of i with v missing from F_i
    for f in range(r):
        T = facets[f]
        sing: dict[int, int] = {}
        cov: dict[int, int] = {}
        for i in range(r):
            if i == f:
                continue
            D = T & ~facets[i]
            if D.bit_count() == 1:
                sing[D] = sing.get(D, 0) | (1 << i)
            m = D
            while m:
                low = m & -m
                cov[low] = cov.get(low, 0) | (1 << i)
                m ^= low
        single.append(sing)
        covers.append(cov)

    def admissible(state: int, f: int) -> bool:
        if state == 0:
            return True
        covered = 0
        cov = covers[f]
        for v, idx in single[f].items():
            if state & idx:
                covered |= cov[v]
        return state & ~covered == 0

    return admissible


def _weak_admissibility(facets: Sequence[int], full: int):
    """Closure testing whether facet j may be appended after prefix-set S."""
    r = len(facets)
    fullpair = [0] * r  # index mask of partners unioning to the universe
    savers: list[dict[int, int]] = [dict() for _ in range(r)]
    for j in range(r):
        for i in range(r):
            if i == j or facets[i] | facets[j] != full:
                continue
            fullpair[j] |= 1 << i
            both = facets[i] & facets[j]
            m = 0
            for k in range(r):
                if k != i and k != j and both & ~facets[k] == 0:
                    m |= 1 << k
            savers[j][i] = m

    def admissible(state: int, j: int) -> bool:
        partners = state & fullpair[j]
        if not partners:
            return True
        sav = savers[j]
        while partners:
            low = partners & -partners
            if state & sav[low.bit_length() - 1] == 0:
                return False
            partners ^= low
        return True

    return admissible


def _search(c: Complex, kind: str, admissible_factory, max_facets, node_budget) -> Optional[OrderCertificate]:
    facets = c.facets
    r = len(facets)
    if r <= 1:
        return OrderCertificate(kind, c, tuple(facets))
    threshold = _resolve_threshold(max_facets)
    budget = None
    if r > threshold:
        budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    admissible = admissible_factory(facets)
    idx_order = _subset_dfs(r, admissible, budget)
    if idx_order is None:
        return None
    return OrderCertificate(kind, c, tuple(facets[i] for i in idx_order))


def find_shelling_order(c: Complex, max_facets: Optional[int] = None,
                        node_budget: Optional[int] = None) -> Optional[OrderCertificate]:
    """A shelling order of c, or None when provably none exists.

    Raises Undecided on instances over the exact-search threshold for which
    the budgeted best-effort search found nothing.
    """
    return _search(c, SHELLING, _shelling_admissibility, max_facets, node_budget)


def find_weak_shelling_order(c: Complex, max_facets: Optional[int] = None,
                             node_budget: Optional[int] = None) -> Optional[OrderCertificate]:
    """A weak shelling order of c, or None when provably none exists.

    When no two facets union to the universe the identity order is returned
    without a search: every order qualifies.
    """
    if is_trivially_weakly_shellable(c):
        return OrderCertificate(WEAK_SHELLING, c, tuple(c.facets))
    full = c.universe.full_mask
    return _search(c, WEAK_SHELLING, lambda fs: _weak_admissibility(fs, full),
                   max_facets, node_budget)


def find_strong_gcd_order(c: Complex, max_facets: Optional[int] = None,
                          node_budget: Optional[int] = None) -> Optional[OrderCertificate]:
    """A strong gcd-order of c's minimal non-faces, or None when none exists.

    Decided via the dual: reverse a weak shelling order of the dual complex
    and take complements.  Searching the gcd condition directly would not be
    prefix-closed, since the filling index may come after both pair members.
    """
    dual = alexander_dual(c)
    weak = find_weak_shelling_order(dual, max_facets=max_facets, node_budget=node_budget)
    if weak is None:
        return None
    full = c.universe.full_mask
    seq = tuple(full ^ f for f in reversed(weak.sequence))
    return OrderCertificate(STRONG_GCD, c, seq)
