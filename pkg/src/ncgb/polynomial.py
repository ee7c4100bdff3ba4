"""Non-commutative polynomials over the rationals.

A polynomial is a finite map from words to non-zero ``Fraction``
coefficients.  All arithmetic is exact; there is no floating point
anywhere.  The text syntax shared with the command line lives here as
``parse_polynomial`` / ``format_polynomial``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .words import Alphabet, WordOrdering

_ZERO = Fraction(0)


class NcPolynomial:
    """A finitely supported word -> coefficient map; treat instances as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                acc = data.get(word, _ZERO) + coeff
                if acc:
                    data[word] = acc
                else:
                    del data[word]
        self._terms = data

    @classmethod
    def zero(cls) -> "NcPolynomial":
        return cls()

    @classmethod
    def from_term(cls, word: bytes, coeff=1) -> "NcPolynomial":
        return cls({word: Fraction(coeff)})

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coefficient(self, word: bytes) -> Fraction:
        return self._terms.get(word, _ZERO)

    def items_desc(self, ordering: WordOrdering):
        """Terms sorted with the largest word first."""
        return sorted(self._terms.items(), key=lambda kv: ordering.key(kv[0]), reverse=True)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(len(w) for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, NcPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return NcPolynomial({w: -c for w, c in self._terms.items()})

    def __add__(self, other):
        return add_scaled(self, 1, other)

    def __sub__(self, other):
        return add_scaled(self, -1, other)

    def __repr__(self):
        if not self._terms:
            return "NcPolynomial(0)"
        body = " + ".join(f"{c}*{w.hex() or 'l'}" for w, c in self._terms.items())
        return f"NcPolynomial({body})"


def leading(f: NcPolynomial, ordering: WordOrdering):
    """The (coefficient, word) pair of the largest support word of ``f``."""
    if not f:
        raise ValueError("the zero polynomial has no leading term")
    word = max(f.support(), key=ordering.key)
    return f.coefficient(word), word


def sandwich(left: bytes, f: NcPolynomial, right: bytes) -> NcPolynomial:
    """The two-sided product left * f * right."""
    if not left and not right:
        return f
    return NcPolynomial({left + w + right: c for w, c in f.items()})


def add_scaled(f: NcPolynomial, scalar, g: NcPolynomial) -> NcPolynomial:
    """f + scalar * g with zero coefficients dropped."""
    scalar = Fraction(scalar)
    out = dict(f.items())
    if scalar:
        for w, c in g.items():
            acc = out.get(w, _ZERO) + scalar * c
            if acc:
                out[w] = acc
            else:
                del out[w]
    res = NcPolynomial.__new__(NcPolynomial)
    res._terms = out
    return res


def make_monic(f: NcPolynomial, ordering: WordOrdering) -> NcPolynomial:
    """Scale ``f`` so its leading coefficient becomes 1."""
    lc, _ = leading(f, ordering)
    if lc == 1:
        return f
    return NcPolynomial({w: c / lc for w, c in f.items()})


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; carries the position and offending token."""

    def __init__(self, message, line=1, column=1, token=""):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.token = token


_TOKEN_RE = re.compile(r"(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()])|(?P<bad>\S)")


def _tokenize(text, line):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        col = m.start() + 1
        if m.lastgroup == "bad":
            raise PolynomialSyntaxError(
                f"unexpected character {m.group()!r}", line, col, m.group())
        tokens.append((m.lastgroup, m.group(), col))
    return tokens


class _Parser:
    def __init__(self, tokens, alphabet, line):
        self.tokens = tokens
        self.alphabet = alphabet
        self.line = line
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, "", 0)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        kind, text, col = tok if tok is not None else self.peek()
        if kind is None:
            col = self.tokens[-1][2] + len(self.tokens[-1][1]) if self.tokens else 1
            raise PolynomialSyntaxError(message + " (at end of input)", self.line, col)
        raise PolynomialSyntaxError(f"{message}, got {text!r}", self.line, col, text)

    def parse(self):
        terms = []
        sign = 1
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            self.next()
            sign = -1 if text == "-" else 1
        while True:
            coeff, word = self.term()
            terms.append((word, sign * coeff))
            kind, text, _ = self.peek()
            if kind is None:
                break
            if kind == "op" and text in "+-":
                self.next()
                sign = -1 if text == "-" else 1
            else:
                self.fail("expected '+' or '-' between terms")
        return NcPolynomial(terms)

    def term(self):
        coeff, word = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.next()
                c, w = self.factor()
                coeff *= c
                word += w
            else:
                return coeff, word

    def factor(self):
        kind, text, col = self.next()
        if kind == "num":
            return Fraction(text.replace(" ", "")), b""
        if kind == "name":
            try:
                letter = self.alphabet.index(text)
            except KeyError:
                self.fail(f"undeclared variable {text!r}", (kind, text, col))
            return Fraction(1), bytes([letter]) * self.power()
        if kind == "op" and text == "(":
            word = self.group_word()
            return Fraction(1), word * self.power()
        self.fail("expected a coefficient, variable or '('", (kind, text, col))

    def group_word(self):
        """The body of a parenthesized subword: variables and groups only."""
        word = b""
        expect_factor = True
        while True:
            kind, text, col = self.next()
            if kind == "op" and text == ")":
                if expect_factor:
                    self.fail("empty group", (kind, text, col))
                return word
            if not expect_factor:
                if kind == "op" and text == "*":
                    expect_factor = True
                    continue
                self.fail("expected '*' or ')' inside group", (kind, text, col))
            if kind == "name":
                try:
                    letter = self.alphabet.index(text)
                except KeyError:
                    self.fail(f"undeclared variable {text!r}", (kind, text, col))
                word += bytes([letter]) * self.power()
            elif kind == "op" and text == "(":
                word += self.group_word() * self.power()
            elif kind is None:
                self.fail("unterminated group", (kind, text, col))
            else:
                self.fail("only variables may appear inside a group", (kind, text, col))
            expect_factor = False

    def power(self):
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.next()
            kind, text, col = self.next()
            if kind != "num" or "/" in text:
                self.fail("exponent must be a non-negative integer", (kind, text, col))
            return int(text)
        return 1


def parse_polynomial(text: str, alphabet: Alphabet, line: int = 1) -> NcPolynomial:
    """Parse ``3*a*b^2 - 1/2*(b*a)^2 + 1`` style text."""
    tokens = _tokenize(text, line)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", line, 1)
    return _Parser(tokens, alphabet, line).parse()


def format_polynomial(f: NcPolynomial, alphabet: Alphabet, ordering: WordOrdering) -> str:
    """Render with terms in decreasing order; parses back to the same polynomial."""
    if not f:
        return "0"
    parts = []
    for k, (word, coeff) in enumerate(f.items_desc(ordering)):
        mag = abs(coeff)
        if not word:
            body = str(mag)
        elif mag == 1:
            body = alphabet.word_to_text(word)
        else:
            body = f"{mag}*{alphabet.word_to_text(word)}"
        if k == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)
