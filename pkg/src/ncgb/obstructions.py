"""Obstructions: aligned placements of two leading words over a common word.

An obstruction pairs generator indices i <= j with cofactor words such
that wi * lw(g_i) * wi2 == wj * lw(g_j) * wj2.  Its S-polynomial is the
difference of the two scaled placements, whose top terms cancel.  The
non-trivial obstructions of a pair are the finitely many canonical
alignments in which the two placed leading words actually share letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .polynomial import NcPolynomial, add_scaled, leading, sandwich
from .words import (
    EMPTY,
    FIRST_INSIDE_SECOND,
    PREFIX_SUFFIX,
    SUFFIX_PREFIX,
    overlaps,
    proper_borders,
)

# Obstruction forms.  The form records which canonical alignment produced
# an obstruction; it is derived data and does not take part in identity.
LEFT = "left"                    # (wi, 1; 1, wj2)
RIGHT = "right"                  # (1, wi2; wj, 1)
CENTER_I_IN_J = "center_i_in_j"  # (wi, wi2; 1, 1): lw(g_i) inside lw(g_j)
CENTER_J_IN_I = "center_j_in_i"  # (1, 1; wj, wj2): lw(g_j) inside lw(g_i)
SELF_OVERLAP = "self"            # i == j, (1, wi2; wj, 1) from a proper border
GENERAL = "general"              # any other aligned placement


@dataclass(frozen=True, slots=True)
class Obstruction:
    i: int
    j: int
    wi: bytes
    wi2: bytes
    wj: bytes
    wj2: bytes
    form: str = field(compare=False)
    common: bytes = field(compare=False)

    def __repr__(self):
        def w(b):
            return b.hex() or "1"
        return (f"o[{self.i},{self.j}]({w(self.wi)},{w(self.wi2)};"
                f"{w(self.wj)},{w(self.wj2)})")


class ModuleTerm(NamedTuple):
    """A generator symbol placed between two words."""

    left: bytes
    index: int
    right: bytes


def aligned(i, j, wi, wi2, wj, wj2, G, form=GENERAL) -> Obstruction:
    """Build an obstruction, checking that the two placements spell the same word."""
    common = wi + G.leading_words[i] + wi2
    if common != wj + G.leading_words[j] + wj2:
        raise ValueError("misaligned obstruction: the two placements differ")
    if i > j:
        raise ValueError("obstruction indices must satisfy i <= j")
    return Obstruction(i, j, wi, wi2, wj, wj2, form, common)


def module_term_key(t: ModuleTerm, G, ordering):
    placed = t.left + G.leading_words[t.index] + t.right
    return (ordering.key(placed), t.index, ordering.key(t.left))


def compare_module_terms(a: ModuleTerm, b: ModuleTerm, G, ordering) -> int:
    """Placed word first, then generator index, then the left cofactor."""
    ka, kb = module_term_key(a, G, ordering), module_term_key(b, G, ordering)
    if ka < kb:
        return -1
    return 0 if ka == kb else 1


def obstruction_key(o: Obstruction, G, ordering):
    """Sort key realizing the obstruction ordering: j-side term, then i-side."""
    return (ordering.key(o.common), o.j, ordering.key(o.wj), o.i, ordering.key(o.wi))


def compare_obstructions(a: Obstruction, b: Obstruction, G, ordering) -> int:
    ka, kb = obstruction_key(a, G, ordering), obstruction_key(b, G, ordering)
    if ka < kb:
        return -1
    return 0 if ka == kb else 1


def s_polynomial(o: Obstruction, G, ordering):
    """(1/lc_i) wi g_i wi2 - (1/lc_j) wj g_j wj2; the common top term cancels."""
    lws = G.leading_words
    if o.wi + lws[o.i] + o.wi2 != o.wj + lws[o.j] + o.wj2:
        raise ValueError("obstruction is not aligned over this basis")
    gi, gj = G.generators[o.i], G.generators[o.j]
    lci, _ = leading(gi, ordering)
    lcj, _ = leading(gj, ordering)
    first = sandwich(o.wi, gi, o.wi2)
    if lci != 1:
        first = add_scaled(NcPolynomial.zero(), 1 / lci, first)
    return add_scaled(first, -1 / lcj, sandwich(o.wj, gj, o.wj2))


def nontrivial_obstructions(i: int, j: int, G, ordering) -> list[Obstruction]:
    """The canonical overlapping alignments of lw(g_i) and lw(g_j), ascending.

    For i == j these are the self obstructions coming from proper borders
    of the leading word.  For i < j with equal leading words the all-empty
    center alignment is emitted once, together with both border
    orientations.
    """
    if not 0 <= i <= j < len(G.generators):
        raise IndexError("generator index out of range")
    lwi, lwj = G.leading_words[i], G.leading_words[j]
    if not lwi or not lwj:
        return []
    seen = {}

    def add(o):
        seen.setdefault(o, o)

    if i == j:
        for L in proper_borders(lwi):
            k = len(lwi) - L
            add(aligned(i, i, EMPTY, lwi[L:], lwi[:k], EMPTY, G, SELF_OVERLAP))
    elif lwi == lwj:
        add(aligned(i, j, EMPTY, EMPTY, EMPTY, EMPTY, G, CENTER_I_IN_J))
        for L in proper_borders(lwi):
            k = len(lwi) - L
            add(aligned(i, j, EMPTY, lwj[L:], lwi[:k], EMPTY, G, RIGHT))
            add(aligned(i, j, lwj[:k], EMPTY, EMPTY, lwi[L:], G, LEFT))
    else:
        for ov in overlaps(lwi, lwj):
            L = len(ov.witness)
            if ov.kind == SUFFIX_PREFIX:
                add(aligned(i, j, EMPTY, lwj[L:], lwi[:len(lwi) - L], EMPTY, G, RIGHT))
            elif ov.kind == PREFIX_SUFFIX:
                add(aligned(i, j, lwj[:len(lwj) - L], EMPTY, EMPTY, lwi[L:], G, LEFT))
            elif ov.kind == FIRST_INSIDE_SECOND:
                p = ov.position
                add(aligned(i, j, lwj[:p], lwj[p + len(lwi):], EMPTY, EMPTY, G,
                            CENTER_I_IN_J))
            else:
                p = ov.position
                add(aligned(i, j, EMPTY, EMPTY, lwi[:p], lwi[p + len(lwj):], G,
                            CENTER_J_IN_I))
    return sorted(seen, key=lambda o: obstruction_key(o, G, ordering))


def has_overlap(o: Obstruction, G) -> bool:
    """Whether the two placed leading word copies share a letter position."""
    a = len(o.wi)
    b = len(o.wj)
    return max(a, b) < min(a + len(G.leading_words[o.i]), b + len(G.leading_words[o.j]))


NO_OVERLAP = "no_overlap"
MULTIPLE = "multiple"
NEITHER = "neither"


def classify(o: Obstruction, G, candidates):
    """How the S-polynomial of ``o`` is already covered, if it is.

    Returns (NO_OVERLAP, None) when the placed copies are disjoint,
    (MULTIPLE, base) when ``o`` equals w * base * w2 for some base present
    in ``candidates`` (same indices, one common extension pair), and
    (NEITHER, None) otherwise.  ``candidates`` must reflect the current
    surviving set: a base that was itself discarded cannot cover anything.
    """
    if not has_overlap(o, G):
        return NO_OVERLAP, None
    for base in candidates:
        if base.i != o.i or base.j != o.j:
            continue
        cut = len(o.wi) - len(base.wi)
        if cut < 0 or not o.wi.endswith(base.wi) or not o.wi2.startswith(base.wi2):
            continue
        w = o.wi[:cut]
        w2 = o.wi2[len(base.wi2):]
        if o.wj == w + base.wj and o.wj2 == base.wj2 + w2:
            return MULTIPLE, base
    return NEITHER, None
