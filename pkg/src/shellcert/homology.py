"""Exact reduced simplicial homology and the link-vanishing test for
Cohen-Macaulayness.

Ranks are computed from boundary matrices by exact elimination only: bitmask
XOR elimination over GF(2), modular elimination over GF(p), and fraction-free
integer elimination (rows rescaled by their gcd) over the rationals.  No
floating point anywhere.

The chain complex is *augmented*: the empty face spans the (-1)-chains, so
rank(-1) is nonzero only for the complex whose sole face is the empty face.
Boundary signs come from vertex positions in ascending index order; any
consistent convention gives the same ranks, fixing one makes the matrices
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .complexes import (
    VOID_DIM,
    Complex,
    InputError,
    all_faces,
    faces_by_dim,
    link,
    pure_skeleton,
    restrict_to_support,
)

__all__ = [
    "Field",
    "GF2",
    "QQ",
    "HomologyProfile",
    "CMWitness",
    "CMReport",
    "reduced_homology",
    "is_cohen_macaulay",
    "is_sequentially_cm",
    "DEFAULT_FIELDS",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: GF(p) for a prime p, or the rationals (p is None)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise InputError("characteristic must be prime, got %r" % (self.p,))

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "rationals"):
            return cls(None)
        if t.startswith("gf"):
            try:
                return cls(int(t[2:]))
            except ValueError:
                pass
        raise InputError("unrecognized field %r (expected gf<p> or q)" % text)

    def __str__(self):
        return "Q" if self.p is None else "GF(%d)" % self.p


GF2 = Field.gf(2)
QQ = Field.rationals()
DEFAULT_FIELDS = (GF2, QQ)


def rank_gf2(vectors: Sequence[int]) -> int:
    """Rank of bitmask vectors over GF(2), by XOR elimination on lowest set bits."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            low = v & -v
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                rank += 1
                break
            v ^= piv
    return rank


def rank_gfp(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by in-place modular Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    ncols = len(m[0])
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        row = m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c] % p
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], row)]
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix.

    Fraction-free elimination on unbounded integers: each update subtracts a
    cross-multiple of the pivot row, then the row is divided by its gcd so
    entries stay small.  Row rescaling never changes the rank.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    ncols = len(m[0])
    rank = 0
    r = 0
    for c in range(ncols):
        piv = None
        best = None
        for i in range(r, len(m)):
            x = m[i][c]
            if x and (best is None or abs(x) < best):
                piv, best = i, abs(x)
                if best == 1:
                    break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if not f:
                continue
            row = [pv * a - f * b for a, b in zip(m[i], prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                row = [x // g for x in row]
            m[i] = row
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def _boundary_rank(faces_d: Sequence[int], below_index: dict, field: Field) -> int:
    """Rank of the boundary map from d-faces to (d-1)-faces."""
    if not faces_d:
        return 0
    if field.p == 2:
        vecs = []
        for F in faces_d:
            v = 0
            m = F
            while m:
                low = m & -m
                v |= 1 << below_index[F ^ low]
                m ^= low
            vecs.append(v)
        return rank_gf2(vecs)
    ncols = len(below_index)
    rows = []
    for F in faces_d:
        row = [0] * ncols
        t = 0
        m = F
        while m:
            low = m & -m
            row[below_index[F ^ low]] = 1 if t % 2 == 0 else -1
            t += 1
            m ^= low
        rows.append(row)
    if field.p is None:
        return rank_rational(rows)
    return rank_gfp(rows, field.p)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks per dimension, from -1 up to dim of the complex."""

    field: Field
    ranks: tuple  # tuple of (dimension, rank) pairs, ascending dimension

    def rank(self, d: int) -> int:
        for dd, r in self.ranks:
            if dd == d:
                return r
        return 0

    @property
    def total(self) -> int:
        return sum(r for _, r in self.ranks)

    def alternating_sum(self) -> int:
        return sum(r if d % 2 == 0 else -r for d, r in self.ranks)

    def __str__(self):
        body = ", ".join("H~%d=%d" % (d, r) for d, r in self.ranks)
        return "[%s over %s]" % (body, self.field)


def reduced_homology(c: Complex, field: Field = QQ) -> HomologyProfile:
    """Exact reduced homology ranks of a non-void complex over the given field."""
    if c.is_void:
        raise InputError("reduced homology of the void complex is undefined")
    groups = faces_by_dim(c)
    top = c.dim
    index: dict[int, dict] = {}
    for d, fs in groups.items():
        index[d] = {f: i for i, f in enumerate(fs)}
    brank = {}  # brank[d] = rank of boundary C_d -> C_{d-1}
    for d in range(0, top + 1):
        brank[d] = _boundary_rank(groups.get(d, ()), index.get(d - 1, {}), field)
    ranks = []
    for d in range(-1, top + 1):
        nd = len(groups.get(d, ()))
        ranks.append((d, nd - brank.get(d, 0) - brank.get(d + 1, 0)))
    return HomologyProfile(field, tuple(ranks))


@dataclass(frozen=True)
class CMWitness:
    """A face whose link has nonvanishing reduced homology below its dimension."""

    face: tuple  # vertex labels
    degree: int
    rank: int
    skeleton_dim: Optional[int] = None


@dataclass(frozen=True)
class CMReport:
    ok: bool
    field: Field
    witness: Optional[CMWitness] = None
    degenerate: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _cm_witness(c: Complex, field: Field) -> Optional[CMWitness]:
    """First face (canonical order) violating link vanishing, or None.

    Links of dimension <= 0 cannot violate the condition: the only degree
    below 0 is -1, and a complex with a vertex has rank 0 there.
    """
    for sigma in all_faces(c):
        lk = link(c, sigma)
        d = lk.dim
        if d is VOID_DIM or d < 1:
            continue
        prof = reduced_homology(lk, field)
        for i in range(-1, d):
            r = prof.rank(i)
            if r:
                return CMWitness(c.universe.members(sigma), i, r)
    return None


def is_cohen_macaulay(c: Complex, field: Field = QQ) -> CMReport:
    """Link-vanishing test: every face's link (the empty face included) must
    have zero reduced homology below its own dimension."""
    if c.is_void:
        raise InputError("Cohen-Macaulayness of the void complex is undefined")
    if c.has_ghost_vertices:
        ghosts = c.universe.members(c.universe.full_mask ^ c.support)
        return CMReport(False, field, degenerate="ghost vertices %r: restrict to the support first" % (ghosts,))
    w = _cm_witness(c, field)
    return CMReport(w is None, field, witness=w)


def is_sequentially_cm(c: Complex, field: Field = QQ) -> CMReport:
    """Pure-skeleton reduction: the subcomplex generated by the i-faces must be
    Cohen-Macaulay for every 0 <= i <= dim.

    The top skeleton is checked first; it is the cheapest way to fail.  Lower
    skeleta may leave some vertices unused (a vertex facet is in no pure
    1-skeleton), so each skeleton is tested on its own support.
    """
    if c.is_void:
        raise InputError("sequential Cohen-Macaulayness of the void complex is undefined")
    if c.has_ghost_vertices:
        ghosts = c.universe.members(c.universe.full_mask ^ c.support)
        return CMReport(False, field, degenerate="ghost vertices %r: restrict to the support first" % (ghosts,))
    top = c.dim
    if top == -1:
        return CMReport(True, field)
    for i in [top] + list(range(top)):
        sk = restrict_to_support(pure_skeleton(c, i))
        w = _cm_witness(sk, field)
        if w is not None:
            return CMReport(False, field,
                            witness=CMWitness(w.face, w.degree, w.rank, skeleton_dim=i))
    return CMReport(True, field)
