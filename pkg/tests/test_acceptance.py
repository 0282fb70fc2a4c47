"""Acceptance criteria, one test each, printing a PASS/FAIL line.

All comparisons are exact (tolerance 0); runtime limits are pinned below.
"""

import io
import itertools
import time

from deadend.cli import run
from deadend.core import ZERO, EndStore, add, integer, make_end, multiple, options, parse, waiting
from deadend.enumeration import census, generate_day, verify_unique_factorisation
from deadend.factor import brute_force_divisors, divisor_table, length_bounds, one_bar_prime_check
from deadend.measures import birthday, flex, flex_of_sum_check, race, terminal_set
from deadend.oracle import GenStore, Winner, context_pool, distinguish, order_violations
from deadend.order import canonical, eq, ge, gt

EARLY_DAYS_SECONDS = 10.0
DAY5_SECONDS = 30 * 60.0
TABLE_SECONDS = 1.0


def report(capsys, number, title, problems, detail=""):
    status = "PASS" if not problems else "FAIL"
    with capsys.disabled():
        print(f"\n[acceptance] criterion {number} {title}: {status}{' ' + detail if detail else ''}")
        for p in problems[:20]:
            print(f"[acceptance]   - {p}")
    assert not problems, f"criterion {number} failed: {problems[:5]}"


def test_criterion_1_census(capsys):
    expected = {
        "ends": [1, 2, 4, 10, 52, 21278],
        "atoms": [0, 1, 2, 6, 41, 21221],
        "molecules": [None, None, 1, 3, 10, 56],
        "nontrivial_molecules": [None, None, None, None, 1, 5],
    }
    store = EndStore()
    problems = []
    start = time.monotonic()
    rows = [census(n, store) for n in range(5)]
    early = time.monotonic() - start
    rows.append(census(5, store))
    total = time.monotonic() - start
    for row in rows:
        for key, values in expected.items():
            want = values[row.day]
            if want is not None and getattr(row, key) != want:
                problems.append(f"day {row.day} {key}: got {getattr(row, key)}, want {want}")
    if early >= EARLY_DAYS_SECONDS:
        problems.append(f"days 0-4 took {early:.1f}s (limit {EARLY_DAYS_SECONDS}s)")
    if total >= DAY5_SECONDS:
        problems.append(f"day 5 took {total:.1f}s (limit {DAY5_SECONDS}s)")
    stretch = census(6, store), census(7, store)
    detail = "days 0-4 %.3fs, through day 5 %.2fs; stretch day 6 molecules %s, non-trivial %s / %s" % (
        early,
        total,
        stretch[0].molecules,
        stretch[0].nontrivial_molecules,
        stretch[1].nontrivial_molecules,
    )
    report(capsys, 1, "census days 0-5", problems, detail)


TABLE = [
    ("2*{|0,#1,#3}", (2, 2, 5, 3), 2),
    ("{|0,#3}+{|#1,#2,#3}", (3, 2, 6, 3), 2),
    ("2*{|#3,#4}", (8, 5, 2, 3), 2),
    ("{|#1,#2,#3}", (2, 2, 2, 1), 1),
    ("2*{|#1,#2,#3}", (4, 3, 4, 3), 2),
]


def test_criterion_2_length_bound_table(capsys):
    store = EndStore()
    problems = []
    start = time.monotonic()
    for text, cols, longest in TABLE:
        b = length_bounds(parse(text, store), store)
        if b.columns() != cols or b.longest != longest:
            problems.append(f"{text}: got {b.columns()} L={b.longest}, want {cols} L={longest}")
    elapsed = time.monotonic() - start
    if elapsed >= TABLE_SECONDS:
        problems.append(f"table took {elapsed:.2f}s (limit {TABLE_SECONDS}s)")
    report(capsys, 2, "length-bound table", problems, f"{elapsed:.3f}s")


def test_criterion_3_unique_factorisation(capsys):
    problems = []
    store = EndStore()
    checked = {}
    for n in range(6):
        rep = verify_unique_factorisation(n, store)
        checked[n] = rep.checked
        for g, facts in rep.counterexamples:
            problems.append(f"day {n}: game {g} has {len(facts)} factorisations")
    out, err = io.StringIO(), io.StringIO()
    code = run(["verify", "--day", "4"], out, err)
    if code != 0:
        problems.append(f"verify --day 4 exited {code}")
    report(capsys, 3, "unique factorisation", problems, f"checked {checked[4]} (day 4), {checked[5]} (day 5)")


def _is_good(x, g):
    return x in options(g) and not any(gt(x, y) for y in options(g))


def test_criterion_4_property_suites(capsys):
    store_games = generate_day(3).games
    day2 = generate_day(2).games
    day4 = generate_day(4).games
    problems = []

    def check(name, ok):
        if not ok:
            problems.append(name)

    g3 = store_games
    for a in g3:
        check(f"reflexive {a}", ge(a, a))
    for a, b, c in itertools.product(g3, repeat=3):
        if ge(a, b) and ge(b, c):
            check(f"transitive {a},{b},{c}", ge(a, c))
    sums = [add(a, b) for a, b in itertools.product(g3, repeat=2)]
    for a, b in itertools.product(g3 + sums[:40], repeat=2):
        if ge(a, b) and ge(b, a):
            check(f"antisymmetry {a},{b}", canonical(a) == canonical(b))
        if ge(a, b):
            check(f"terminal inclusion {a},{b}", terminal_set(a) <= terminal_set(b))
    for a, b in itertools.product(day4, repeat=2):
        if a <= b:
            s = add(a, b)
            check(f"minkowski {a},{b}", terminal_set(s) == terminal_set(a) + terminal_set(b))
    for a, b in itertools.product(g3, repeat=2):
        try:
            flex_of_sum_check(a, b)
        except AssertionError as exc:
            problems.append(f"flex sum {a},{b}: {exc}")
        if ge(a, b):
            check(f"flex relation {a},{b}", flex(a) <= flex(b))
        check(f"one-prime {a},{b}", one_bar_prime_check(a, b))
    for a in g3:
        check(f"flex-birth {a}", flex(a) <= birthday(a) and (flex(a) == birthday(a)) == (a == ZERO))
    raw2 = day2 + [add(a, b) for a, b in itertools.product(day2, repeat=2)]
    for g, h, j in itertools.product(raw2, day2, day2):
        if ge(add(g, j), add(h, j)):
            check(f"pocancellation {g},{h},{j}", ge(g, h))
    for n in (2, 3):
        for g, h in itertools.product(g3, repeat=2):
            if eq(multiple(n, g), multiple(n, h)):
                check(f"grothendieck n={n} {g},{h}", eq(g, h))
    for g, h in itertools.product(g3, repeat=2):
        s = add(g, h)
        for gp in options(g):
            if _is_good(add(gp, h), s):
                check(f"good options local {g},{h}", _is_good(gp, g))
    w2, one = waiting(2), integer(1)
    check("0 good in W2", _is_good(ZERO, w2))
    check("1 not good in 1+W2", not _is_good(one, add(one, w2)))
    report(capsys, 4, "property suites", problems)


def test_criterion_5_oracles(capsys):
    problems = []
    store = EndStore()
    gen = GenStore()
    day4 = generate_day(4, store).games
    for g in day4:
        if divisor_table(g, store) != brute_force_divisors(g, store):
            problems.append(f"divisor search diverges on {g}")
    g3 = generate_day(3, store).games
    witnesses = 0
    for g, h in itertools.product(g3, repeat=2):
        if terminal_set(g, store) <= terminal_set(h, store):
            continue
        w = distinguish(g, h, store, gen)
        if w is None or (w.outcome_g, w.outcome_h) != (Winner.RIGHT, Winner.LEFT):
            problems.append(f"no separating context for {g},{h}")
        witnesses += 1
    pool = context_pool(200, 4, 0, gen)
    comparable = 0
    for g, h in itertools.product(g3, repeat=2):
        if ge(g, h, store):
            comparable += 1
            bad = order_violations(g, h, pool, store, gen)
            if bad:
                problems.append(f"{len(bad)} contexts contradict {g} >= {h}")
    detail = f"{len(day4)} divisor checks, {witnesses} witnesses, {comparable} pairs x {len(pool)} contexts"
    report(capsys, 5, "oracle cross-checks", problems, detail)


def test_criterion_6_specific_values(capsys):
    problems = []
    g = parse("{|W2,#3}")
    if terminal_set(g).lengths() != [2, 3, 4] or race(g) != 2 or birthday(g) != 4:
        problems.append("terminal/race/birthday of {|W2,#3}")
    for n in range(1, 9):
        if flex(waiting(n)) != n - 1:
            problems.append(f"flex(W{n}) = {flex(waiting(n))}")
    if flex(parse("{|W3,#7}")) != 3:
        problems.append("flex({|W3,#7})")
    if flex(add(parse("{|0,#2}"), integer(1))) != 2:
        problems.append("flex({|0,#2}+#1)")
    for h in generate_day(3).games:
        if not eq(add(integer(1), h), make_end({h})):
            problems.append(f"1+G vs {{|G}} for {h}")
    report(capsys, 6, "specific values", problems)
