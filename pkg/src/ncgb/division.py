"""Division with remainder by a list of non-zero polynomials.

Each step rewrites the current largest word using the divisor with the
smallest index whose leading word occurs in it (leftmost occurrence when
there are several); words no divisor matches are peeled into the
remainder.  Every step strictly decreases the largest live word, so the
loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import NcPolynomial, add_scaled, leading, sandwich


@dataclass
class DivisionResult:
    """Quotient tuples (divisor index, coefficient, left word, right word) and remainder."""

    quotients: list
    remainder: NcPolynomial

    def validate(self, f, G, ordering):
        """Recheck the full division contract against the inputs.

        Raises AssertionError when any clause fails:
        reconstruction of ``f``, remainder support free of leading-word
        factors, no quotient term or remainder above the leading word of
        ``f``, and the minimal-index property of each quotient.
        """
        lws = G.leading_words
        acc = self.remainder
        for i, c, left, right in self.quotients:
            acc = add_scaled(acc, c, sandwich(left, G.generators[i], right))
        if acc != f:
            raise AssertionError("quotients and remainder do not reconstruct the dividend")
        for word in self.remainder.support():
            if any(word.find(lw) >= 0 for lw in lws):
                raise AssertionError("remainder contains a reducible word")
        if f:
            _, top = leading(f, ordering)
            for i, c, left, right in self.quotients:
                placed = left + lws[i] + right
                if ordering.compare(placed, top) > 0:
                    raise AssertionError("quotient term exceeds the dividend's leading word")
                if any(placed.find(lws[k]) >= 0 for k in range(i)):
                    raise AssertionError("quotient does not use the smallest divisor index")
            if self.remainder:
                _, rtop = leading(self.remainder, ordering)
                if ordering.compare(rtop, top) > 0:
                    raise AssertionError("remainder exceeds the dividend's leading word")


def _find_divisor(word, leading_words):
    """Smallest divisor index whose leading word occurs in ``word``, leftmost split."""
    for i, lw in enumerate(leading_words):
        pos = word.find(lw)
        if pos >= 0:
            return i, word[:pos], word[pos + len(lw):]
    return None


def _run(f, G, ordering, collect):
    for g in G.generators:
        if not g:
            raise ValueError("division by a zero polynomial")
    lws = G.leading_words
    key = ordering.key
    v = dict(f.items())
    remainder = {}
    quotients = [] if collect else None
    while v:
        word = max(v, key=key)
        hit = _find_divisor(word, lws)
        if hit is None:
            remainder[word] = v.pop(word)
            continue
        i, left, right = hit
        c = v[word]  # basis elements are monic
        if collect:
            quotients.append((i, c, left, right))
        for u, cu in G.generators[i].items():
            w = left + u + right
            acc = v.get(w, 0) - c * cu
            if acc:
                v[w] = acc
            else:
                v.pop(w, None)
    rem = NcPolynomial.__new__(NcPolynomial)
    rem._terms = remainder
    return quotients, rem


def divide(f: NcPolynomial, G, ordering) -> DivisionResult:
    """Divide ``f`` by the basis ``G``, returning quotients and remainder."""
    quotients, remainder = _run(f, G, ordering, collect=True)
    return DivisionResult(quotients, remainder)


def normal_remainder(f: NcPolynomial, G, ordering) -> NcPolynomial:
    """The remainder of :func:`divide` without quotient bookkeeping."""
    _, remainder = _run(f, G, ordering, collect=False)
    return remainder
