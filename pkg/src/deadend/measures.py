"""Terminal lengths, race, birthday, flexibility and option classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import ZERO, EndId, EndStore, _store
from .errors import ZeroGame


@dataclass(frozen=True)
class TerminalSet:
    """Set of terminal-run lengths, stored as a bitmask (bit ``t`` set iff ``t`` is a length)."""

    mask: int

    @classmethod
    def of(cls, lengths) -> "TerminalSet":
        mask = 0
        for t in lengths:
            if t < 0:
                raise ValueError("terminal lengths are nonnegative")
            mask |= 1 << t
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        m, t = self.mask, 0
        while m:
            if m & 1:
                yield t
            m >>= 1
            t += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, t: object) -> bool:
        return isinstance(t, int) and t >= 0 and bool(self.mask >> t & 1)

    def __le__(self, other: "TerminalSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "TerminalSet") -> bool:
        return self <= other and self.mask != other.mask

    def __add__(self, other: "TerminalSet") -> "TerminalSet":
        out = 0
        for t in self:
            out |= other.mask << t
        return TerminalSet(out)

    def shift(self, k: int) -> "TerminalSet":
        return TerminalSet(self.mask << k if k >= 0 else self.mask >> -k)

    def __or__(self, other: "TerminalSet") -> "TerminalSet":
        return TerminalSet(self.mask | other.mask)

    def min(self) -> int:
        return (self.mask & -self.mask).bit_length() - 1

    def max(self) -> int:
        return self.mask.bit_length() - 1

    def lengths(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return "TerminalSet(%s)" % self.lengths()


def terminal_set(g: EndId, store: EndStore | None = None) -> TerminalSet:
    s = _store(store)
    return TerminalSet(_terminal_mask(g, s, s.memo("terminal")))


def _terminal_mask(g: EndId, s: EndStore, memo: dict) -> int:
    hit = memo.get(g)
    if hit is None:
        opts = s.options(g)
        if not opts:
            hit = 1
        else:
            hit = 0
            for x in opts:
                hit |= _terminal_mask(x, s, memo)
            hit <<= 1
        memo[g] = hit
    return hit


def race(g: EndId, store: EndStore | None = None) -> int:
    return terminal_set(g, store).min()


def birthday(g: EndId, store: EndStore | None = None) -> int:
    return terminal_set(g, store).max()


def is_integer(g: EndId, store: EndStore | None = None) -> bool:
    return len(terminal_set(g, store)) == 1


@dataclass(frozen=True)
class FlexInfo:
    flex: int
    witness: tuple[EndId, ...]  # a longest flexible run, starting at the game itself


def flex(g: EndId, store: EndStore | None = None) -> int:
    s = _store(store)
    return _flex(g, s, s.memo("flex"), s.memo("terminal"))


def _flex(g: EndId, s: EndStore, memo: dict, tmemo: dict) -> int:
    hit = memo.get(g)
    if hit is None:
        m = _terminal_mask(g, s, tmemo)
        if m & (m - 1) == 0:
            hit = 0
        else:
            hit = 1 + max(_flex(x, s, memo, tmemo) for x in s.options(g))
        memo[g] = hit
    return hit


def flexibility(g: EndId, store: EndStore | None = None) -> FlexInfo:
    s = _store(store)
    run = [g]
    cur = g
    while not is_integer(cur, s):
        cur = versatile_options(cur, s)[0]
        run.append(cur)
    return FlexInfo(flex(g, s), tuple(run))


def flex_of_sum_check(g: EndId, h: EndId, store: EndStore | None = None) -> int:
    """Flexibility of ``g + h``, asserted against its closed form."""
    from .core import add

    s = _store(store)
    value = flex(add(g, h, s), s)
    gi, hi = is_integer(g, s), is_integer(h, s)
    if gi and hi:
        expected = 0
    elif hi:
        expected = flex(g, s) + birthday(h, s)
    elif gi:
        expected = flex(h, s) + birthday(g, s)
    else:
        expected = max(birthday(g, s) + flex(h, s), flex(g, s) + birthday(h, s))
    if value != expected:
        raise AssertionError(f"flex of sum is {value}, closed form gives {expected}")
    return value


def _require_nonzero(g: EndId) -> None:
    if g == ZERO:
        raise ZeroGame("the empty game has no options")


def racing_options(g: EndId, store: EndStore | None = None) -> list[EndId]:
    s = _store(store)
    _require_nonzero(g)
    target = race(g, s) - 1
    return [x for x in s.options(g) if race(x, s) == target]


def stalling_options(g: EndId, store: EndStore | None = None) -> list[EndId]:
    s = _store(store)
    _require_nonzero(g)
    target = birthday(g, s) - 1
    return [x for x in s.options(g) if birthday(x, s) == target]


def versatile_options(g: EndId, store: EndStore | None = None) -> list[EndId]:
    s = _store(store)
    _require_nonzero(g)
    target = flex(g, s) - 1
    return [x for x in s.options(g) if flex(x, s) >= target]
