"""The four pair-elimination criteria and the identities that justify them."""

import random

import pytest

from ncgb.criteria import (
    assert_removals_dominated,
    backward_criterion,
    leading_word_criterion,
    multiply_criterion,
    tail_reduction,
)
from ncgb.engine import BasisState
from ncgb.obstructions import (
    aligned,
    compare_obstructions,
    nontrivial_obstructions,
    s_polynomial,
)
from ncgb.polynomial import add_scaled, parse_polynomial, sandwich
from oracles import random_basis


def basis(texts, alphabet):
    polys = [parse_polynomial(t, alphabet) for t in texts]
    return BasisState.from_polynomials(polys, alphabet.llex)


def news_batch(G, ordering, s):
    out = []
    for i in range(s + 1):
        out.extend(nontrivial_obstructions(i, s, G, ordering))
    return out


@pytest.fixture
def triple(xy):
    return basis(["y^3 - 1", "x^2*y^2 - x", "x*y*x^2*y + y^2"], xy)


@pytest.fixture
def chain(xy):
    return basis(["x^3*y*x + y", "x^2 + y", "x + 1"], xy)


class TestMultiplyCriterion:
    def test_extension_removed(self, triple, xy):
        big = aligned(0, 2, xy.word("xyxx"), b"", b"", xy.word("yy"), triple)
        small = aligned(1, 2, xy.word("xy"), b"", b"", xy.word("y"), triple)
        rep = multiply_criterion([big, small], triple, xy.llex)
        assert rep.survivors == [small]
        assert rep.removed == [(big, small)]
        assert rep.removed_m == 1
        assert_removals_dominated(rep, "m", triple, xy.llex)

    def test_singleton_unchanged(self, triple, xy):
        small = aligned(1, 2, xy.word("xy"), b"", b"", xy.word("y"), triple)
        rep = multiply_criterion([small], triple, xy.llex)
        assert rep.survivors == [small] and rep.removed_m == 0

    def test_identical_cofactors_stay(self, xy):
        G = basis(["x*y - 1", "x*y - y", "y*x - 1"], xy)
        news = [aligned(0, 2, b"", xy.word("x"), xy.word("x"), b"", G),
                aligned(1, 2, b"", xy.word("x"), xy.word("x"), b"", G)]
        rep = multiply_criterion(news, G, xy.llex)
        assert rep.survivors == news

    def test_mixed_targets_rejected(self, triple, xy):
        a = aligned(0, 1, xy.word("xx"), b"", b"", xy.word("y"), triple)
        b = aligned(1, 2, xy.word("xy"), b"", b"", xy.word("y"), triple)
        with pytest.raises(ValueError):
            multiply_criterion([a, b], triple, xy.llex)

    def test_empty_batch(self, triple, xy):
        assert multiply_criterion([], triple, xy.llex).survivors == []


class TestLeadingWordCriterion:
    def test_larger_source_index_removed(self, xy):
        G = basis(["x*y - 1", "x*y - y", "y*x - 1"], xy)
        lo = aligned(0, 2, b"", xy.word("x"), xy.word("x"), b"", G)
        hi = aligned(1, 2, b"", xy.word("x"), xy.word("x"), b"", G)
        rep = leading_word_criterion([hi, lo], G, xy.llex)
        assert rep.survivors == [lo]
        assert rep.removed == [(hi, lo)]
        assert_removals_dominated(rep, "f", G, xy.llex)

    def test_larger_left_cofactor_removed_on_tie(self, ab):
        # a*b occurs twice in a*b*a*b; same source, same target cofactors
        G = basis(["a*b - 1", "a*b*a*b - 1"], ab)
        news = nontrivial_obstructions(0, 1, G, ab.llex)
        centers = [o for o in news if not o.wj and not o.wj2]
        assert len(centers) == 2
        rep = leading_word_criterion(centers, G, ab.llex)
        assert len(rep.survivors) == 1
        assert rep.survivors[0].wi == b""
        removed = rep.removed[0][0]
        assert removed.wi == ab.word("ab")

    def test_singleton_unchanged(self, triple, xy):
        o = aligned(1, 2, xy.word("xy"), b"", b"", xy.word("y"), triple)
        rep = leading_word_criterion([o], triple, xy.llex)
        assert rep.survivors == [o]


class TestTailReduction:
    def test_empty_pending_set(self, triple, xy):
        news = news_batch(triple, xy.llex, 2)
        rep = tail_reduction(news, [], triple, xy.llex)
        assert rep.survivors == news and rep.removed_tail == 0

    def test_disjoint_induced_placement_removed(self, ab):
        G = basis(["a", "a*b", "b*a"], ab)
        old = aligned(0, 1, b"", ab.word("b"), b"", b"", G)
        candidate = aligned(1, 2, b"", ab.word("a"), ab.word("a"), b"", G)
        rep = tail_reduction([candidate], [old], G, ab.llex)
        assert rep.survivors == []
        assert rep.removed == [(candidate, old)]
        assert_removals_dominated(rep, "tail", G, ab.llex)

    def test_overlapping_induced_placement_survives(self, ab):
        G = basis(["a", "a*b", "b*a"], ab)
        old = aligned(0, 1, b"", ab.word("b"), b"", b"", G)
        candidate = aligned(1, 2, ab.word("b"), b"", b"", ab.word("b"), G)
        rep = tail_reduction([candidate], [old], G, ab.llex)
        assert rep.survivors == [candidate]


class TestBackwardCriterion:
    def test_rederived_pending_obstruction_removed(self, chain, xy):
        old = aligned(0, 1, b"", b"", xy.word("x"), xy.word("yx"), chain)
        news = news_batch(chain, xy.llex, 2)
        rep = backward_criterion([old], news, 2, chain, xy.llex)
        assert rep.survivors == []
        assert rep.removed_bk == 1

    def test_new_leading_word_not_a_factor(self, xy):
        G = basis(["x^3*y*x + y", "x^2 + y", "y^2 + x"], xy)
        old = aligned(0, 1, b"", b"", xy.word("x"), xy.word("yx"), G)
        news = news_batch(G, xy.llex, 2)
        rep = backward_criterion([old], news, 2, G, xy.llex)
        assert rep.survivors == [old]

    def test_removed_base_blocks_removal(self, chain, xy):
        # without the source-0 members of the new batch, the induced
        # obstruction has no covering base left
        old = aligned(0, 1, b"", b"", xy.word("x"), xy.word("yx"), chain)
        news = [o for o in news_batch(chain, xy.llex, 2) if o.i != 0]
        rep = backward_criterion([old], news, 2, chain, xy.llex)
        assert rep.survivors == [old]


def test_conservation_on_random_batches(xy):
    rng = random.Random(31)
    ordering = xy.llex
    for _ in range(300):
        G = random_basis(rng, ordering, 2, rng.randint(2, 4), max_degree=4)
        s = len(G) - 1
        news = news_batch(G, ordering, s)
        pending = []
        for j in range(s):
            for i in range(j + 1):
                pending.extend(nontrivial_obstructions(i, j, G, ordering))
        for rep, size in (
            (multiply_criterion(news, G, ordering), len(news)),
            (leading_word_criterion(news, G, ordering), len(news)),
            (tail_reduction(news, pending, G, ordering), len(news)),
            (backward_criterion(pending, news, s, G, ordering), len(pending)),
        ):
            assert len(rep.survivors) + len(rep.removed) == size
            assert not set(rep.survivors) & {o for o, _ in rep.removed}


def test_removals_dominated_on_random_batches(xy):
    rng = random.Random(37)
    ordering = xy.llex
    for _ in range(300):
        G = random_basis(rng, ordering, 2, rng.randint(2, 4), max_degree=4)
        s = len(G) - 1
        news = news_batch(G, ordering, s)
        pending = []
        for j in range(s):
            for i in range(j + 1):
                pending.extend(nontrivial_obstructions(i, j, G, ordering))
        assert_removals_dominated(multiply_criterion(news, G, ordering), "m", G, ordering)
        assert_removals_dominated(leading_word_criterion(news, G, ordering), "f", G, ordering)
        assert_removals_dominated(tail_reduction(news, pending, G, ordering), "tail", G, ordering)


def test_head_batch_identity(xy):
    """Dividing target cofactors decompose the larger S-polynomial exactly."""
    rng = random.Random(47)
    ordering = xy.llex
    checked = 0
    while checked < 1000:
        G = random_basis(rng, ordering, 2, rng.randint(2, 4), max_degree=4)
        s = len(G) - 1
        news = news_batch(G, ordering, s)
        for o1 in news:
            for o2 in news:
                if o1 is o2:
                    continue
                cut = len(o1.wj) - len(o2.wj)
                if cut < 0 or not o1.wj.endswith(o2.wj) or not o1.wj2.startswith(o2.wj2):
                    continue
                w = o1.wj[:cut]
                w2 = o1.wj2[len(o2.wj2):]
                i, j = o1.i, o2.i
                if i <= j:
                    third = aligned(i, j, o1.wi, o1.wi2, w + o2.wi, o2.wi2 + w2, G)
                    sign = 1
                else:
                    third = aligned(j, i, w + o2.wi, o2.wi2 + w2, o1.wi, o1.wi2, G)
                    sign = -1
                lhs = s_polynomial(o1, G, ordering)
                rhs = add_scaled(sandwich(w, s_polynomial(o2, G, ordering), w2),
                                 sign, s_polynomial(third, G, ordering))
                assert lhs == rhs
                strict = (i > j or (w or w2) or
                          (i == j and ordering.compare(o1.wi, o2.wi) > 0))
                if strict:
                    assert compare_obstructions(o1, o2, G, ordering) == 1
                    assert compare_obstructions(o1, third, G, ordering) == 1
                checked += 1
    assert checked >= 1000


def test_tail_identity(xy):
    """A pending obstruction splits a new one into itself plus an induced one."""
    rng = random.Random(53)
    ordering = xy.llex
    checked = 0
    while checked < 1000:
        G = random_basis(rng, ordering, 2, rng.randint(2, 4), max_degree=4)
        s = len(G) - 1
        news = news_batch(G, ordering, s)
        pending = []
        for j in range(s):
            for i in range(j + 1):
                pending.extend(nontrivial_obstructions(i, j, G, ordering))
        for o in news:
            for old in pending:
                if old.j != o.i:
                    continue
                if not o.wi.endswith(old.wj) or not o.wi2.startswith(old.wj2):
                    continue
                w = o.wi[:len(o.wi) - len(old.wj)]
                w2 = o.wi2[len(old.wj2):]
                induced = aligned(old.i, s, w + old.wi, old.wi2 + w2,
                                  o.wj, o.wj2, G)
                lhs = s_polynomial(o, G, ordering)
                rhs = add_scaled(s_polynomial(induced, G, ordering), -1,
                                 sandwich(w, s_polynomial(old, G, ordering), w2))
                assert lhs == rhs
                assert compare_obstructions(o, old, G, ordering) == 1
                assert compare_obstructions(o, induced, G, ordering) == 1
                checked += 1
    assert checked >= 1000


def test_rederivation_identity(xy):
    """Every placement of a new leading word splits an old S-polynomial."""
    rng = random.Random(59)
    ordering = xy.llex
    checked = 0
    while checked < 1000:
        G = random_basis(rng, ordering, 2, rng.randint(2, 4), max_degree=4)
        s = len(G) - 1
        lw_s = G.leading_words[s]
        if not lw_s:
            continue
        for j in range(s):
            for i in range(j + 1):
                for o in nontrivial_obstructions(i, j, G, ordering):
                    pos = o.common.find(lw_s)
                    while pos != -1:
                        w, w2 = o.common[:pos], o.common[pos + len(lw_s):]
                        lhs = s_polynomial(o, G, ordering)
                        first = aligned(o.i, s, o.wi, o.wi2, w, w2, G)
                        second = aligned(o.j, s, o.wj, o.wj2, w, w2, G)
                        rhs = add_scaled(s_polynomial(first, G, ordering), -1,
                                         s_polynomial(second, G, ordering))
                        assert lhs == rhs
                        checked += 1
                        pos = o.common.find(lw_s, pos + 1)
    assert checked >= 1000
