"""Divisors, atoms, factorisations and the rule engines that predict them.

Divisors are found with the difference-lemma recursion: every non-trivial
split ``g = h + k`` either has both parts dividing some option of ``g``, or
one part ``d`` divides every option ``g'`` and the other part is
``{| g' - d}``.  All ids handled here are canonical, so equality is id
equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import ZERO, EndId, EndStore, _store, integer
from .errors import NotAnAtom, ZeroGame
from .measures import (
    birthday,
    flex,
    is_integer,
    racing_options,
    stalling_options,
    terminal_set,
)
from .order import canonical, canonical_multiple, canonical_sum

Factorisation = tuple[EndId, ...]

ATOM_RULES = ("race1", "flex1", "bigbirth", "integer-option", "three-atoms")
UNIQUENESS_RULES = (
    "good-integer-option",
    "good-atom-option",
    "racing-integer-chain",
    "stalling-integer-chain",
)


def divisor_table(g: EndId, store: EndStore | None = None) -> dict[EndId, EndId]:
    """Map each divisor of ``g`` to its cofactor."""
    s = _store(store)
    return dict(_divisors(canonical(g, s), s))


def _divisors(g: EndId, s: EndStore) -> dict[EndId, EndId]:
    memo = s.memo("divisors")
    hit = memo.get(g)
    if hit is not None:
        return hit
    if g == ZERO:
        table = {ZERO: ZERO}
        memo[g] = table
        return table

    table = {ZERO: g, g: ZERO}
    goods = s.options(g)
    below = [_divisors(x, s) for x in goods]
    target_t = terminal_set(g, s)
    target_b = target_t.max()

    pool = sorted({d for tab in below for d in tab if d != ZERO})
    sizes = {d: terminal_set(d, s) for d in pool}
    for i, h in enumerate(pool):
        th = sizes[h]
        bh = th.max()
        for k in pool[i:]:
            tk = sizes[k]
            if bh + tk.max() != target_b or th + tk != target_t:
                continue
            if canonical_sum(h, k, s) == g:
                table[h] = k
                table[k] = h

    common = set(below[0])
    for tab in below[1:]:
        common &= tab.keys()
    common.discard(ZERO)
    for d in sorted(common):
        if d in table:
            continue
        rest = canonical(s.make(tab[d] for tab in below), s)
        if rest != ZERO and canonical_sum(d, rest, s) == g:
            table[d] = rest
            table[rest] = d

    memo[g] = table
    return table


def factors(g: EndId, store: EndStore | None = None) -> list[EndId]:
    """All divisors of ``g`` (canonical ids, sorted)."""
    return sorted(divisor_table(g, store))


def divides(h: EndId, g: EndId, store: EndStore | None = None) -> Optional[EndId]:
    """The quotient ``x`` with ``h + x = g``, or ``None`` when ``h`` does not divide ``g``."""
    s = _store(store)
    return _divisors(canonical(g, s), s).get(canonical(h, s))


def is_atom(g: EndId, store: EndStore | None = None) -> bool:
    s = _store(store)
    g = canonical(g, s)
    if g == ZERO:
        raise ZeroGame("0 is neither an atom nor a molecule")
    return len(_divisors(g, s)) == 2


def factorisations(g: EndId, store: EndStore | None = None) -> set[Factorisation]:
    s = _store(store)
    return set(_factorisations(canonical(g, s), s))


def _factorisations(g: EndId, s: EndStore) -> frozenset[Factorisation]:
    memo = s.memo("factorisations")
    hit = memo.get(g)
    if hit is not None:
        return hit
    if g == ZERO:
        out = frozenset({()})
    else:
        found = set()
        for d, q in _divisors(g, s).items():
            if d == ZERO or len(_divisors(d, s)) != 2:
                continue
            for rest in _factorisations(q, s):
                found.add(tuple(sorted(rest + (d,))))
        out = frozenset(found)
    memo[g] = out
    return out


def longest_len(g: EndId, store: EndStore | None = None) -> int:
    return max(len(f) for f in factorisations(g, store))


def longest_bound(g: EndId, store: EndStore | None = None) -> int:
    """Recursive upper bound on the longest factorisation length."""
    s = _store(store)
    return _bound(canonical(g, s), s)


def _bound(g: EndId, s: EndStore) -> int:
    memo = s.memo("bound")
    hit = memo.get(g)
    if hit is None:
        goods = s.options(g)
        if g == ZERO:
            hit = 0
        elif len(goods) == 1:
            hit = _bound(goods[0], s) + 1
        else:
            t = terminal_set(g, s)
            hit = min(
                t.min(),
                min(_bound(x, s) for x in goods) + 1,
                len(t) - 1,
                (flex(g, s) + 1) // 2,
            )
        memo[g] = hit
    return hit


@dataclass(frozen=True)
class LengthBounds:
    race: int
    option: int  # least longest length over good options, plus one
    terminal: int  # number of terminal lengths, minus one
    flex: int  # floor((flex + 1) / 2)
    longest: int

    def columns(self) -> tuple[int, int, int, int]:
        return (self.race, self.option, self.terminal, self.flex)


def length_bounds(g: EndId, store: EndStore | None = None) -> LengthBounds:
    """The individual length bounds for a game with several good options."""
    s = _store(store)
    g = canonical(g, s)
    if g == ZERO:
        raise ZeroGame("0 has no options to bound against")
    t = terminal_set(g, s)
    return LengthBounds(
        race=t.min(),
        option=min(longest_len(x, s) for x in s.options(g)) + 1,
        terminal=len(t) - 1,
        flex=(flex(g, s) + 1) // 2,
        longest=longest_len(g, s),
    )


def atom_rule(g: EndId, store: EndStore | None = None, check: bool = True) -> Optional[str]:
    """First sufficient atom condition that holds for ``g``, if any.

    With ``check`` set, a fired rule is confirmed against :func:`is_atom`.
    """
    s = _store(store)
    g = canonical(g, s)
    if g == ZERO:
        raise ZeroGame("0 is neither an atom nor a molecule")
    goods = s.options(g)
    t = terminal_set(g, s)
    fx = flex(g, s)
    rule = None
    if t.min() == 1:
        rule = "race1"
    elif fx == 1:
        rule = "flex1"
    elif len(goods) > 1 and t.max() > 2 * fx - 2:
        rule = "bigbirth"
    elif len(t) > 1 and any(is_integer(x, s) for x in goods):
        rule = "integer-option"
    elif sum(1 for x in goods if len(_divisors(x, s)) == 2) >= 3:
        rule = "three-atoms"
    if rule is not None and check and not is_atom(g, s):
        raise AssertionError(f"atom rule {rule} fired on a molecule")
    return rule


def _chain_holds(parts: Factorisation, pick, s: EndStore) -> bool:
    for a in set(parts):
        if not all(is_integer(x, s) for x in pick(a, s)):
            return False
    return True


def uniqueness_rules(g: EndId, store: EndStore | None = None, check: bool = True) -> list[str]:
    """Every sufficient unique-factorisation condition that holds for ``g``.

    Prime-factorisable is read as "integer", since 1 is the only prime known.
    """
    s = _store(store)
    g = canonical(g, s)
    if g == ZERO:
        return []
    goods = s.options(g)
    fired = []
    if any(is_integer(x, s) for x in goods):
        fired.append("good-integer-option")
    if any(x != ZERO and len(_divisors(x, s)) == 2 for x in goods):
        fired.append("good-atom-option")
    facts = _factorisations(g, s)
    some = min(facts)
    if _chain_holds(some, racing_options, s):
        fired.append("racing-integer-chain")
    if _chain_holds(some, stalling_options, s):
        fired.append("stalling-integer-chain")
    if fired and check and len(facts) != 1:
        raise AssertionError(f"uniqueness rules {fired} fired on a game with {len(facts)} factorisations")
    return fired


def uniqueness_rule(g: EndId, store: EndStore | None = None) -> Optional[str]:
    fired = uniqueness_rules(g, store)
    return fired[0] if fired else None


def one_bar_prime_check(h: EndId, k: EndId, store: EndStore | None = None) -> bool:
    s = _store(store)
    one = integer(1, s)
    if divides(one, canonical_sum(h, k, s), s) is None:
        return True
    return divides(one, h, s) is not None or divides(one, k, s) is not None


def strong_atom_check(g: EndId, n_max: int, store: EndStore | None = None) -> bool:
    s = _store(store)
    g = canonical(g, s)
    if g == ZERO or not is_atom(g, s):
        raise NotAnAtom("strong-atom check needs an atom")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return all(len(factorisations(canonical_multiple(n, g, s), s)) == 1 for n in range(1, n_max + 1))


def brute_force_divisors(g: EndId, store: EndStore | None = None) -> dict[EndId, EndId]:
    """Divisor table by exhaustive search over every canonical end born before ``g``.

    Candidate pairs are pruned by the additivity of terminal sets.
    """
    from .enumeration import generate_day

    s = _store(store)
    g = canonical(g, s)
    table = {ZERO: g, g: ZERO}
    if g == ZERO:
        return {ZERO: ZERO}
    b = birthday(g, s)
    target = terminal_set(g, s)
    pool = [x for x in generate_day(b - 1, store=s).games if x != ZERO]
    for i, h in enumerate(pool):
        th = terminal_set(h, s)
        for k in pool[i:]:
            if th + terminal_set(k, s) != target:
                continue
            if canonical_sum(h, k, s) == g:
                table[h] = k
                table[k] = h
    return table


@dataclass
class FactorReport:
    target: EndId
    divisors: list[EndId]
    factorisations: list[Factorisation]
    longest: int
    bound: int
    unique: bool
    atom_rule: Optional[str] = None
    uniqueness_rules: list[str] = field(default_factory=list)
    oracle_checked: bool = False


def factor_report(g: EndId, store: EndStore | None = None, oracle: bool = False) -> FactorReport:
    s = _store(store)
    g = canonical(g, s)
    table = _divisors(g, s)
    if oracle:
        expected = brute_force_divisors(g, s)
        if set(expected) != set(table):
            raise AssertionError(
                "divisor oracle disagrees: algorithm %s, brute force %s" % (sorted(table), sorted(expected))
            )
    facts = sorted(_factorisations(g, s))
    rule = atom_rule(g, s) if g != ZERO else None
    return FactorReport(
        target=g,
        divisors=sorted(table),
        factorisations=facts,
        longest=max(len(f) for f in facts),
        bound=_bound(g, s),
        unique=len(facts) == 1,
        atom_rule=rule,
        uniqueness_rules=uniqueness_rules(g, s),
        oracle_checked=oracle,
    )
