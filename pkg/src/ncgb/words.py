"""Words over a finite alphabet: the free monoid everything else is built on.

A word is a ``bytes`` object whose entries are letter indices into an
:class:`Alphabet`; the empty word is ``b""`` and concatenation is ``+``.
Keeping words as index sequences in ``bytes`` form makes comparison,
concatenation and factor search integer operations that run at C speed.
"""

from __future__ import annotations

from typing import NamedTuple

EMPTY = b""

# Overlap kinds.
SUFFIX_PREFIX = "suffix_prefix"          # proper suffix of w1 = proper prefix of w2
PREFIX_SUFFIX = "prefix_suffix"          # proper prefix of w1 = proper suffix of w2
FIRST_INSIDE_SECOND = "first_inside_second"  # w1 occurs as a factor of w2
SECOND_INSIDE_FIRST = "second_inside_first"  # w2 occurs as a factor of w1


class Occurrence(NamedTuple):
    """A splitting text = left + pattern + right."""

    left: bytes
    right: bytes


class Overlap(NamedTuple):
    """A non-empty word shared between two placed words.

    ``position`` locates the witness: for the suffix/prefix kinds it is the
    start index of the witness inside the first (resp. second) word, for the
    inside kinds it is the start index of the shorter word inside the longer.
    """

    kind: str
    witness: bytes
    position: int


class Alphabet:
    """An ordered list of distinct variable names.

    The position in the list doubles as the default precedence: an earlier
    name denotes a larger variable.
    """

    __slots__ = ("symbols", "_index", "_llex")

    def __init__(self, symbols):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("alphabet must not be empty")
        if len(symbols) != len(set(symbols)):
            raise ValueError("alphabet names must be pairwise distinct")
        if len(symbols) > 255:
            raise ValueError("alphabet is limited to 255 variables")
        for name in symbols:
            if not name or name[0].isdigit() or not all(c.isalnum() or c == "_" for c in name):
                raise ValueError(f"bad variable name: {name!r}")
        self.symbols = symbols
        self._index = {name: k for k, name in enumerate(symbols)}
        self._llex = None

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({' '.join(self.symbols)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def name(self, letter: int) -> str:
        return self.symbols[letter]

    @property
    def llex(self) -> "LLexOrdering":
        """The length-lexicographic ordering with precedence = alphabet order."""
        if self._llex is None:
            self._llex = LLexOrdering(self)
        return self._llex

    def word(self, text) -> bytes:
        """Build a word from ``'a*b^2*a'`` style text or a list of names.

        When every symbol is a single character, compact text like ``'aba'``
        is accepted too.  ``'1'`` and ``''`` denote the empty word.
        """
        if not isinstance(text, str):
            return bytes(self._index[name] for name in text)
        text = text.replace(" ", "")
        if text in ("", "1"):
            return EMPTY
        letters = []
        for token in text.split("*"):
            name, _, power = token.partition("^")
            exp = int(power) if power else 1
            if name in self._index:
                letters.extend([self._index[name]] * exp)
            elif all(c in self._index for c in name):
                # compact run of single-character names; the power binds to
                # the last character
                for c in name[:-1]:
                    letters.append(self._index[c])
                letters.extend([self._index[name[-1]]] * exp)
            else:
                raise KeyError(f"unknown variable {name!r}")
        return bytes(letters)

    def word_to_text(self, w: bytes) -> str:
        """Render a word with powers collapsed, e.g. ``a^2*b``; the empty word is ``1``."""
        if not w:
            return "1"
        parts = []
        k = 0
        while k < len(w):
            run = k
            while run < len(w) and w[run] == w[k]:
                run += 1
            name = self.symbols[w[k]]
            parts.append(name if run - k == 1 else f"{name}^{run - k}")
            k = run
        return "*".join(parts)


class WordOrdering:
    """Interface for multiplication-compatible well-orderings on words.

    Implementations provide :meth:`key`, a sort key that is monotone for the
    ordering; :meth:`compare` is derived from it.
    """

    name = "?"

    def key(self, w: bytes):
        raise NotImplementedError

    def compare(self, a: bytes, b: bytes) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        return 0 if ka == kb else 1


class LLexOrdering(WordOrdering):
    """Length first, ties broken left to right by variable precedence.

    ``precedence`` lists variable names from largest to smallest; it defaults
    to the alphabet order.
    """

    name = "llex"

    __slots__ = ("alphabet", "precedence", "_tbl")

    def __init__(self, alphabet: Alphabet, precedence=None):
        self.alphabet = alphabet
        if precedence is None:
            order = list(alphabet.symbols)
        else:
            order = list(precedence)
            if sorted(order) != sorted(alphabet.symbols):
                raise ValueError("precedence must list every variable exactly once")
        self.precedence = tuple(order)
        n = len(alphabet)
        # translate letter -> byte so that a larger variable gets a larger byte
        rank = {alphabet.index(name): pos for pos, name in enumerate(order)}
        tbl = bytearray(range(256))
        for letter in range(n):
            tbl[letter] = n - 1 - rank[letter]
        self._tbl = bytes(tbl)

    def key(self, w: bytes):
        return (len(w), w.translate(self._tbl))

    def compare(self, a: bytes, b: bytes) -> int:
        if len(a) != len(b):
            return -1 if len(a) < len(b) else 1
        if a == b:
            return 0
        return -1 if a.translate(self._tbl) < b.translate(self._tbl) else 1


def compare_llex(a: bytes, b: bytes, alphabet: Alphabet) -> int:
    """Length-lexicographic comparison; -1, 0 or 1."""
    return alphabet.llex.compare(a, b)


def occurrences(pattern: bytes, text: bytes) -> list[Occurrence]:
    """All splittings text = left + pattern + right, by increasing ``len(left)``.

    Overlapping matches are reported.  The empty pattern is rejected: a
    factor search for the empty word always succeeds and signals a bug in
    the caller.
    """
    if not pattern:
        raise ValueError("cannot search for the empty word")
    out = []
    pos = text.find(pattern)
    while pos != -1:
        out.append(Occurrence(text[:pos], text[pos + len(pattern):]))
        pos = text.find(pattern, pos + 1)
    return out


def proper_borders(w: bytes) -> list[int]:
    """Lengths L with 0 < L < len(w) such that w[:L] == w[-L:], ascending."""
    return [L for L in range(1, len(w)) if w[:L] == w[len(w) - L:]]


def overlaps(w1: bytes, w2: bytes) -> list[Overlap]:
    """All ways the two words share letters when placed over a common word.

    Containments are reported under the two inside kinds only; the
    suffix/prefix kinds carry witnesses strictly shorter than both words.
    For identical inputs each proper border is reported once (as
    SUFFIX_PREFIX) and the full coincidence is not an overlap.
    """
    if not w1 or not w2:
        raise ValueError("overlap enumeration needs non-empty words")
    out = []
    if len(w1) < len(w2):
        for occ in occurrences(w1, w2):
            out.append(Overlap(FIRST_INSIDE_SECOND, w1, len(occ.left)))
    elif len(w2) < len(w1):
        for occ in occurrences(w2, w1):
            out.append(Overlap(SECOND_INSIDE_FIRST, w2, len(occ.left)))
    same = w1 == w2
    for L in range(1, min(len(w1), len(w2))):
        if w1[len(w1) - L:] == w2[:L]:
            out.append(Overlap(SUFFIX_PREFIX, w2[:L], len(w1) - L))
        if not same and w1[:L] == w2[len(w2) - L:]:
            out.append(Overlap(PREFIX_SUFFIX, w1[:L], len(w2) - L))
    return out
