"""Completion engine: enumerate a two-sided Groebner basis from generators.

Two modes share one loop.  The basic mode reduces the S-polynomial of
every non-trivial obstruction.  The improved mode pushes each batch of
newly constructed obstructions through the multiply, leading-word and
tail criteria, then prunes the pending set with the backward criterion,
before merging the survivors.  Both modes enumerate the same basis; the
improved mode reduces far fewer S-polynomials.

Selection uses the normal strategy: the pending obstruction with the
smallest common word (degree first) comes next.  The ties the common word
cannot see are broken either by the obstruction ordering (default, cheap)
or by the actual S-polynomial leading word (``exact_tiebreak``).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .criteria import (
    assert_removals_dominated,
    backward_criterion,
    leading_word_criterion,
    multiply_criterion,
    tail_reduction,
)
from .division import divide, normal_remainder
from .obstructions import (
    nontrivial_obstructions,
    obstruction_key,
    s_polynomial,
)
from .polynomial import NcPolynomial, add_scaled, leading, make_monic, sandwich

ALL_CRITERIA = frozenset({"m", "f", "tail", "bk"})


class BasisState:
    """An append-only list of monic generators with cached leading words."""

    __slots__ = ("generators", "leading_words", "derivations")

    def __init__(self):
        self.generators = []
        self.leading_words = []
        self.derivations = None

    @classmethod
    def from_polynomials(cls, polys, ordering):
        G = cls()
        for f in polys:
            G.append(f, ordering)
        return G

    def append(self, f: NcPolynomial, ordering) -> int:
        if not f:
            raise ValueError("zero polynomial cannot join a basis")
        f = make_monic(f, ordering)
        _, lw = leading(f, ordering)
        self.generators.append(f)
        self.leading_words.append(lw)
        return len(self.generators) - 1

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, k):
        return self.generators[k]

    def __iter__(self):
        return iter(self.generators)


@dataclass
class EngineConfig:
    ordering: object
    mode: str = "improved"            # "improved" or "basic"
    strategy: str = "normal"
    truncation_degree: int | None = None
    max_basis: int | None = None
    max_degree: int | None = None
    exact_tiebreak: bool = False
    criteria: frozenset = ALL_CRITERIA
    record_derivations: bool = False
    record_selections: bool = False
    check_invariants: bool = False

    def validate(self):
        if self.mode not in ("improved", "basic"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.strategy != "normal":
            raise ValueError(f"unknown strategy {self.strategy!r}")
        for name, cap in (("truncation_degree", self.truncation_degree),
                          ("max_basis", self.max_basis),
                          ("max_degree", self.max_degree)):
            if cap is not None and cap < 1:
                raise ValueError(f"{name} must be positive")
        unknown = set(self.criteria) - ALL_CRITERIA
        if unknown:
            raise ValueError(f"unknown criteria {sorted(unknown)}")


@dataclass
class RunStats:
    """Counters for one run; the removal counts partition the constructed total."""

    tot: int = 0
    sel: int = 0
    m: int = 0
    f: int = 0
    tail: int = 0
    bk: int = 0
    zero_reductions: int = 0
    truncated_discards: int = 0
    gb_size: int = 0
    rgb_size: int = 0
    capped: bool = False
    cap_reason: str = ""
    selections: list = field(default_factory=list)

    @property
    def rho(self) -> Fraction:
        return Fraction(self.sel, self.tot) if self.tot else Fraction(0)


class ObstructionQueue:
    """Pending obstructions keyed by the normal strategy, with lazy deletion."""

    def __init__(self, G, ordering, exact_tiebreak=False):
        self.G = G
        self.ordering = ordering
        self.exact_tiebreak = exact_tiebreak
        self._heap = []
        self._live = {}

    def __len__(self):
        return len(self._live)

    def _key(self, o):
        base = obstruction_key(o, self.G, self.ordering)
        if not self.exact_tiebreak:
            return base
        S = s_polynomial(o, self.G, self.ordering)
        if S:
            _, lw = leading(S, self.ordering)
            return (len(lw), self.ordering.key(lw), base)
        return (-1, (0, b""), base)

    def push(self, o):
        if o in self._live:
            return
        self._live[o] = True
        heapq.heappush(self._heap, (self._key(o), o))

    def discard(self, o):
        self._live.pop(o, None)

    def live(self):
        """Pending obstructions, oldest insertion first."""
        return list(self._live)

    def pop_smallest(self):
        while self._heap:
            _, o = heapq.heappop(self._heap)
            if self._live.pop(o, None) is not None:
                return o
        raise LookupError("no pending obstructions")


def select_next(B: ObstructionQueue, G, ordering):
    """Remove and return the pending obstruction the normal strategy picks."""
    if not len(B):
        raise LookupError("no pending obstructions")
    return B.pop_smallest()


def buchberger(G0, cfg: EngineConfig):
    """Run completion on the given generators; returns (basis, stats).

    Input generators are absorbed one at a time through the same
    construct-and-prune step the loop uses for new basis elements, so in
    improved mode the criteria already thin the initial obstructions.  The
    returned basis is the enumerated one, not yet interreduced.  With a
    truncation degree (homogeneous input only) obstructions whose common
    word exceeds the bound are discarded and counted, which yields a basis
    valid up to that degree.  Size and degree caps stop the run early with
    ``stats.capped`` set instead of raising.
    """
    cfg.validate()
    ordering = cfg.ordering
    polys = []
    for f in G0:
        if not f:
            raise ValueError("zero polynomial among the generators")
        f = make_monic(f, ordering)
        if f not in polys:
            polys.append(f)
    if not polys:
        raise ValueError("no generators")
    if cfg.truncation_degree is not None and not all(f.is_homogeneous() for f in polys):
        raise ValueError("truncation requires homogeneous generators")
    trunc = cfg.truncation_degree

    G = BasisState()
    if cfg.record_derivations:
        G.derivations = []
    stats = RunStats()
    queue = ObstructionQueue(G, ordering, cfg.exact_tiebreak)

    def absorb(f, derivation):
        """Append one generator and merge its pruned obstruction batch."""
        s = G.append(f, ordering)
        if cfg.record_derivations:
            G.derivations.append(derivation)
        news = []
        for i in range(s + 1):
            news.extend(nontrivial_obstructions(i, s, G, ordering))
        news.sort(key=lambda n: obstruction_key(n, G, ordering))
        stats.tot += len(news)
        if trunc is not None:
            kept = [n for n in news if len(n.common) <= trunc]
            stats.truncated_discards += len(news) - len(kept)
            news = kept
        if cfg.mode == "improved":
            if "m" in cfg.criteria:
                rep = multiply_criterion(news, G, ordering)
                if cfg.check_invariants:
                    assert_removals_dominated(rep, "m", G, ordering)
                stats.m += rep.removed_m
                news = rep.survivors
            if "f" in cfg.criteria:
                rep = leading_word_criterion(news, G, ordering)
                if cfg.check_invariants:
                    assert_removals_dominated(rep, "f", G, ordering)
                stats.f += rep.removed_f
                news = rep.survivors
            if "tail" in cfg.criteria:
                rep = tail_reduction(news, queue.live(), G, ordering)
                if cfg.check_invariants:
                    assert_removals_dominated(rep, "tail", G, ordering)
                stats.tail += rep.removed_tail
                news = rep.survivors
            if "bk" in cfg.criteria:
                rep = backward_criterion(queue.live(), news, s, G, ordering)
                stats.bk += rep.removed_bk
                for dead, _ in rep.removed:
                    queue.discard(dead)
        for n in news:
            queue.push(n)

    for f in polys:
        absorb(f, None)

    while len(queue):
        o = queue.pop_smallest()
        if cfg.max_degree is not None and len(o.common) > cfg.max_degree:
            stats.capped = True
            stats.cap_reason = "max_degree"
            break
        stats.sel += 1
        if cfg.record_selections:
            stats.selections.append(len(o.common))
        S = s_polynomial(o, G, ordering)
        if cfg.record_derivations:
            result = divide(S, G, ordering)
            if cfg.check_invariants:
                result.validate(S, G, ordering)
            remainder = result.remainder
        else:
            remainder = normal_remainder(S, G, ordering)
        if not remainder:
            stats.zero_reductions += 1
            continue
        if trunc is not None and remainder.degree() > trunc:
            continue
        if cfg.max_basis is not None and len(G) + 1 > cfg.max_basis:
            stats.capped = True
            stats.cap_reason = "max_basis"
            break
        lc, _ = leading(remainder, ordering)
        derivation = (o, result.quotients, lc) if cfg.record_derivations else None
        absorb(remainder, derivation)

    stats.gb_size = len(G)
    return G, stats


def interreduce(G: BasisState, ordering) -> BasisState:
    """The reduced basis: minimal leading words, fully reduced tails, monic.

    Generators whose leading word contains another surviving leading word
    are dropped (the earlier generator wins a tie), then every tail is
    rewritten to its normal remainder against the survivors until nothing
    changes.  For a Groebner basis the result is the unique reduced one.
    """
    order = sorted(range(len(G)), key=lambda k: (ordering.key(G.leading_words[k]), k))
    kept, kept_lws = [], []
    for k in order:
        lw = G.leading_words[k]
        if any(lw.find(prev) >= 0 for prev in kept_lws):
            continue
        kept.append(k)
        kept_lws.append(lw)
    reduced = BasisState.from_polynomials([G.generators[k] for k in kept], ordering)
    changed = True
    while changed:
        changed = False
        for k in range(len(reduced)):
            f = reduced.generators[k]
            lw = reduced.leading_words[k]
            tail = add_scaled(f, -1, NcPolynomial.from_term(lw))
            new = add_scaled(normal_remainder(tail, reduced, ordering), 1,
                             NcPolynomial.from_term(lw))
            if new != f:
                reduced.generators[k] = new  # leading word is untouched
                changed = True
    return reduced


def verify_groebner(G: BasisState, ordering, truncation=None):
    """Check that every non-trivial obstruction's S-polynomial reduces to zero.

    Returns (True, []) on success and (False, [obstruction]) with the first
    failure otherwise.  With ``truncation`` only obstructions whose common
    word fits the bound are checked.
    """
    for j in range(len(G)):
        for i in range(j + 1):
            for o in nontrivial_obstructions(i, j, G, ordering):
                if truncation is not None and len(o.common) > truncation:
                    continue
                if normal_remainder(s_polynomial(o, G, ordering), G, ordering):
                    return False, [o]
    return True, []
