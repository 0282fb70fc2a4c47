import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deadend.core import (
    ZERO,
    EndStore,
    add,
    format_end,
    formal_birthday,
    integer,
    make_end,
    multiple,
    options,
    parse,
    subpositions,
    waiting,
)
from deadend.errors import InvalidOption, NotALeftEnd, NotationError
from deadend.measures import birthday, terminal_set
from deadend.order import eq

from .oracles import minkowski, terminal_lengths_by_runs

trees = st.recursive(
    st.just(frozenset()),
    lambda kids: st.frozensets(kids, max_size=3),
    max_leaves=12,
)


def intern(tree, store):
    return store.make(intern(t, store) for t in tree)


def test_zero_is_id_zero():
    assert make_end() == ZERO == 0
    assert options(ZERO) == ()


def test_make_end_is_idempotent_and_set_like():
    one = make_end({0})
    assert make_end({0}) == one
    a, b = integer(2), waiting(2)
    assert make_end({a, b}) == make_end({b, a}) == make_end([a, b, a])
    assert options(make_end({a, b})) == tuple(sorted({a, b}))


def test_unknown_child_is_rejected():
    store = EndStore()
    with pytest.raises(InvalidOption):
        store.make({5})


@given(trees, trees)
@settings(max_examples=200)
def test_interning_matches_isomorphism(t1, t2):
    store = EndStore()
    assert (intern(t1, store) == intern(t2, store)) == (t1 == t2)


def test_integer_and_waiting_families():
    assert integer(0) == ZERO
    assert options(integer(1)) == (ZERO,)
    assert options(integer(4)) == (integer(3),)
    assert waiting(0) == ZERO
    assert waiting(1) == integer(1)
    assert options(waiting(3)) == (ZERO, waiting(2))
    assert terminal_set(integer(3)).lengths() == [3]
    assert terminal_set(waiting(3)).lengths() == [1, 2, 3]
    with pytest.raises(ValueError):
        integer(-1)


def test_sum_identity_and_small_values():
    for g in (ZERO, integer(2), waiting(3), parse("{|W2,#3}")):
        assert add(ZERO, g) == g == add(g, ZERO)
    assert eq(add(integer(1), integer(1)), integer(2))
    assert add(integer(1), integer(1)) == integer(2)


def test_sum_laws_exhaustive_day3(day):
    games = day(3)
    for a, b in itertools.product(games, repeat=2):
        assert add(a, b) == add(b, a)
    for a, b, c in itertools.product(games, repeat=3):
        assert add(add(a, b), c) == add(a, add(b, c))


def test_sum_terminal_sets_and_birthdays_day3(day):
    games = day(3)
    for a, b in itertools.product(games, repeat=2):
        s = add(a, b)
        assert terminal_lengths_by_runs(s) == minkowski(terminal_lengths_by_runs(a), terminal_lengths_by_runs(b))
        assert formal_birthday(s) == formal_birthday(a) + formal_birthday(b)
        assert birthday(s) == formal_birthday(s)


def test_multiple():
    assert multiple(0, waiting(2)) == ZERO
    assert multiple(3, waiting(2)) == add(waiting(2), add(waiting(2), waiting(2)))


def test_subpositions_children_first():
    g = parse("{|W2,#3}")
    subs = subpositions(g)
    assert subs[-1] == g
    assert set(subs) == {ZERO, integer(1), integer(2), integer(3), waiting(2), g}
    seen = set()
    for x in subs:
        assert set(options(x)) <= seen
        seen.add(x)


class TestNotation:
    def test_basic_forms(self):
        assert parse("{|}") == ZERO
        assert parse("0") == ZERO
        assert parse("{·|}") == ZERO
        assert parse("#3") == integer(3)
        assert parse("W4") == waiting(4)
        assert parse("{|W2,#3}") == make_end({waiting(2), integer(3)})

    def test_worked_example_terminal_set(self):
        assert terminal_set(parse("{|W2,#3}")).lengths() == [2, 3, 4]

    def test_sum_and_multiple_precedence(self):
        assert parse("#2 + W2") == add(integer(2), waiting(2))
        assert parse("2*W2+#1") == add(multiple(2, waiting(2)), integer(1))
        assert parse("#1+#2+W3") == add(add(integer(1), integer(2)), waiting(3))
        assert parse("2*(#1+W2)") == multiple(2, add(integer(1), waiting(2)))
        assert parse(" { | #1 , { | 0 } } ") == make_end({integer(1)})

    @pytest.mark.parametrize(
        "text, offset",
        [("{|#1", 4), ("#", 1), ("{|#1,}", 5), ("3", 0), ("W2 W3", 3), ("", 0), ("{}", 1)],
    )
    def test_syntax_errors_report_offsets(self, text, offset):
        with pytest.raises(NotationError) as info:
            parse(text)
        assert info.value.offset == offset
        assert info.value.expected

    def test_left_options_rejected(self):
        with pytest.raises(NotALeftEnd):
            parse("{0|}")
        with pytest.raises(NotALeftEnd):
            parse("{|{#1|0}}")

    def test_format_prefers_shorthands(self):
        assert format_end(ZERO) == "0"
        assert format_end(integer(1)) == "#1"
        assert format_end(waiting(1)) == "#1"
        assert format_end(waiting(2)) == "W2"
        assert format_end(waiting(7)) == "W7"
        assert format_end(integer(12)) == "#12"
        assert format_end(make_end({integer(1), integer(2)})) == "{|#1,#2}"
        assert format_end(make_end({waiting(2)})) == "{|W2}"

    def test_round_trip_day4(self, day):
        for g in day(4):
            assert parse(format_end(g)) == g

    @given(trees)
    def test_round_trip_random_forms(self, tree):
        from deadend.core import default_store

        g = intern(tree, default_store())
        assert parse(format_end(g)) == g

    def test_round_trip_raw_sums(self, day):
        games = day(3)
        for a, b in itertools.product(games, repeat=2):
            s = add(a, b)
            assert parse(format_end(s)) == s
