import itertools

import pytest

from deadend.core import ZERO, add, integer, parse, waiting
from deadend.measures import terminal_set
from deadend.oracle import (
    GenStore,
    Outcome,
    Winner,
    context,
    context_pool,
    distinguish,
    embed,
    order_violations,
    outcome,
    star,
)
from deadend.order import ge


@pytest.fixture(scope="module")
def gen():
    return GenStore()


def test_embed_examples(gen):
    assert gen.format(embed(ZERO, gen=gen)) == "0"
    assert gen.format(embed(integer(1), gen=gen)) == "{|0}"
    assert gen.format(embed(waiting(2), gen=gen)) == "{|0,{|0}}"


def test_embed_respects_sums(gen, day):
    games = day(3)
    for g, h in itertools.product(games, repeat=2):
        assert embed(add(g, h), gen=gen) == gen.add(embed(g, gen=gen), embed(h, gen=gen))


def test_outcome_examples(gen):
    assert outcome(0, gen) == Outcome(Winner.LEFT, Winner.RIGHT)
    assert outcome(star(gen), gen) == Outcome(Winner.RIGHT, Winner.LEFT)
    assert outcome(embed(integer(1), gen=gen), gen).right_first is Winner.LEFT
    assert str(Winner.LEFT) == "LeftWins" and str(Winner.RIGHT) == "RightWins"


def test_outcome_order():
    best = Outcome(Winner.LEFT, Winner.LEFT)
    worst = Outcome(Winner.RIGHT, Winner.RIGHT)
    mixed = Outcome(Winner.LEFT, Winner.RIGHT)
    assert best >= mixed >= worst
    assert not worst >= mixed
    assert not Outcome(Winner.RIGHT, Winner.LEFT) >= mixed


def test_context_examples(gen):
    assert gen.format(context(0, gen)) == "{0,{0|0}|{0|0}}"
    assert gen.format(context(2, gen)) == "{{{0,{0|0}|{0|0}}|0}|0}"
    with pytest.raises(ValueError):
        context(-1, gen)


def test_distinguish_examples(gen):
    assert distinguish(integer(2), waiting(2), gen=gen) is None
    w = distinguish(waiting(2), integer(2), gen=gen)
    assert w is not None and w.length == 1
    assert w.outcome_g is Winner.RIGHT and w.outcome_h is Winner.LEFT
    g = parse("{|W2,#3}")
    assert distinguish(g, g, gen=gen) is None


def test_distinguish_separates_day3(gen, day):
    games = day(3)
    found = 0
    for g, h in itertools.product(games, repeat=2):
        if terminal_set(g) <= terminal_set(h):
            assert distinguish(g, h, gen=gen) is None
            continue
        w = distinguish(g, h, gen=gen)
        assert w is not None
        assert w.length in terminal_set(g) and w.length not in terminal_set(h)
        assert (w.outcome_g, w.outcome_h) == (Winner.RIGHT, Winner.LEFT)
        assert not ge(g, h)
        found += 1
    assert found > 0


def test_context_pool_is_seeded():
    a, b = GenStore(), GenStore()
    pa = [a.format(x) for x in context_pool(20, 4, 3, a)]
    pb = [b.format(x) for x in context_pool(20, 4, 3, b)]
    assert pa == pb


def test_sampled_monotonicity_day3(gen, day):
    pool = context_pool(200, 4, 0, gen)
    games = day(3)
    for g, h in itertools.product(games, repeat=2):
        if ge(g, h):
            assert order_violations(g, h, pool, gen=gen) == []


def test_sampled_contexts_catch_reversed_pairs(gen):
    pool = context_pool(200, 4, 0, gen)
    assert order_violations(waiting(2), integer(2), pool, gen=gen)
