"""Pair-elimination criteria: prune obstructions whose S-polynomials are
already covered by smaller ones.

The first two criteria work inside one batch of newly constructed
obstructions (all targeting the newest generator), the tail reduction
plays the batch against the pending set, and the backward criterion
prunes the pending set using the newest generator.  Every removal here
preserves the computed basis; only the amount of reduction work changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .obstructions import (
    NEITHER,
    aligned,
    classify,
    compare_obstructions,
    obstruction_key,
)


@dataclass
class CriteriaReport:
    """Survivors plus per-criterion removal counts for one transformer call."""

    survivors: list
    removed_m: int = 0
    removed_f: int = 0
    removed_tail: int = 0
    removed_bk: int = 0
    # (removed obstruction, justifying obstruction or None) pairs
    removed: list = field(default_factory=list)

    @property
    def removed_obstructions(self):
        return [o for o, _ in self.removed]


def _single_target(batch):
    """All obstructions in a batch must aim at the same newest generator."""
    target = batch[0].j
    for o in batch:
        if o.j != target:
            raise ValueError("obstruction batch mixes target indices")


def multiply_criterion(news, G, ordering) -> CriteriaReport:
    """Drop every obstruction whose target cofactors strictly extend another's.

    A candidate with target cofactors (u, u2) goes when the batch contains
    a distinct obstruction with cofactors (v, v2) such that u = w*v and
    u2 = v2*w2 with w, w2 not both empty.  Divisor chains compose, so
    testing against the full input batch removes exactly the same set as a
    largest-first sweep in which removed entries stop justifying.
    """
    news = list(news)
    if not news:
        return CriteriaReport([])
    _single_target(news)
    by_cof = {}
    for o in news:
        by_cof.setdefault((o.wj, o.wj2), o)
    survivors, removed = [], []
    for o in news:
        u, u2 = o.wj, o.wj2
        just = None
        for a in range(len(u) + 1):
            v = u[a:]
            for c in range(len(u2) + 1):
                if a == 0 and c == len(u2):
                    continue
                hit = by_cof.get((v, u2[:c]))
                if hit is not None:
                    just = hit
                    break
            if just is not None:
                break
        if just is None:
            survivors.append(o)
        else:
            removed.append((o, just))
    return CriteriaReport(survivors, removed_m=len(removed), removed=removed)


def leading_word_criterion(news, G, ordering) -> CriteriaReport:
    """Among obstructions with nested target cofactors, keep the best source.

    A candidate goes when a distinct obstruction with target cofactors
    (v, v2), u = w*v, u2 = v2*w2 exists and either its source index is
    smaller, or the extension is empty, the source indices agree and the
    candidate's left cofactor is strictly larger.
    """
    news = list(news)
    if not news:
        return CriteriaReport([])
    _single_target(news)
    by_cof = {}
    for o in news:
        by_cof.setdefault((o.wj, o.wj2), []).append(o)
    survivors, removed = [], []
    for o in news:
        u, u2 = o.wj, o.wj2
        just = None
        for a in range(len(u) + 1):
            v = u[a:]
            for c in range(len(u2) + 1):
                entries = by_cof.get((v, u2[:c]))
                if not entries:
                    continue
                full = a == 0 and c == len(u2)
                for e in entries:
                    if e is o:
                        continue
                    if e.i < o.i:
                        just = e
                        break
                    if full and e.i == o.i and ordering.compare(o.wi, e.wi) > 0:
                        just = e
                        break
                if just is not None:
                    break
            if just is not None:
                break
        if just is None:
            survivors.append(o)
        else:
            removed.append((o, just))
    return CriteriaReport(survivors, removed_f=len(removed), removed=removed)


def tail_reduction(news, B, G, ordering) -> CriteriaReport:
    """Drop new obstructions that an older pending obstruction explains.

    A new obstruction whose source cofactors (u, u2) extend the target
    cofactors (v, v2) of a pending obstruction on the same middle
    generator goes when the induced placement of that obstruction's own
    source next to the newest leading word has disjoint copies.
    """
    news = list(news)
    by_j = {}
    for old in B:
        by_j.setdefault(old.j, []).append(old)
    lws = G.leading_words
    survivors, removed = [], []
    for o in news:
        just = None
        for old in by_j.get(o.i, ()):
            if not o.wi.endswith(old.wj) or not o.wi2.startswith(old.wj2):
                continue
            cut = len(o.wi) - len(old.wj)
            a = cut + len(old.wi)
            b = len(o.wj)
            if max(a, b) >= min(a + len(lws[old.i]), b + len(lws[o.j])):
                just = old
                break
        if just is None:
            survivors.append(o)
        else:
            removed.append((o, just))
    return CriteriaReport(survivors, removed_tail=len(removed), removed=removed)


def backward_criterion(B, news, s, G, ordering) -> CriteriaReport:
    """Prune pending obstructions that the newest generator re-derives.

    A pending obstruction goes when the newest leading word occurs in its
    common word (leftmost occurrence) placed so that both induced
    obstructions against the new generator are covered: each either has
    disjoint copies or is a two-sided multiple of an obstruction still
    present in ``news``.  Any witnessing occurrence justifies removal;
    checking only the leftmost one prunes slightly less.
    """
    B = list(B)
    lw_s = G.leading_words[s]
    if not lw_s:
        return CriteriaReport(B)
    by_i = {}
    for n in news:
        by_i.setdefault(n.i, []).append(n)
    survivors, removed = [], []
    for o in B:
        hit = False
        pos = o.common.find(lw_s)
        if pos != -1:
            w, w2 = o.common[:pos], o.common[pos + len(lw_s):]
            ki, _ = classify(aligned(o.i, s, o.wi, o.wi2, w, w2, G), G,
                             by_i.get(o.i, ()))
            if ki != NEITHER:
                kj, _ = classify(aligned(o.j, s, o.wj, o.wj2, w, w2, G), G,
                                 by_i.get(o.j, ()))
                if kj != NEITHER:
                    hit = True
        if hit:
            removed.append((o, None))
        else:
            survivors.append(o)
    return CriteriaReport(survivors, removed_bk=len(removed), removed=removed)


def assert_removals_dominated(report, kind, G, ordering):
    """Check that each removal is larger than both obstructions explaining it.

    Applies to the multiply, leading-word and tail criteria; backward
    removals carry no such guarantee.  Raises AssertionError on violation.
    """
    for o, just in report.removed:
        if compare_obstructions(o, just, G, ordering) <= 0:
            raise AssertionError(f"removed {o!r} does not dominate its justifier")
        if kind in ("m", "f"):
            w = o.wj[:len(o.wj) - len(just.wj)]
            w2 = o.wj2[len(just.wj2):]
            if o.i <= just.i:
                third = aligned(o.i, just.i, o.wi, o.wi2,
                                w + just.wi, just.wi2 + w2, G)
            else:
                third = aligned(just.i, o.i, w + just.wi, just.wi2 + w2,
                                o.wi, o.wi2, G)
        else:
            w = o.wi[:len(o.wi) - len(just.wj)]
            w2 = o.wi2[len(just.wj2):]
            third = aligned(just.i, o.j, w + just.wi, just.wi2 + w2, o.wj, o.wj2, G)
        if compare_obstructions(o, third, G, ordering) <= 0:
            raise AssertionError(f"removed {o!r} does not dominate the induced obstruction")
