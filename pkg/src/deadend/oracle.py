"""General misère forms and their outcomes, used as ground truth for the order.

Under misère play a player with no move on their turn wins.
"""

from __future__ import annotations

import enum
import random
import threading
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import EndId, EndStore, _store
from .measures import terminal_set

GenId = int


class Winner(enum.IntEnum):
    RIGHT = 0
    LEFT = 1

    def __str__(self) -> str:
        return "LeftWins" if self is Winner.LEFT else "RightWins"


@dataclass(frozen=True)
class Outcome:
    left_first: Winner
    right_first: Winner

    def __ge__(self, other: "Outcome") -> bool:
        return self.left_first >= other.left_first and self.right_first >= other.right_first

    def __le__(self, other: "Outcome") -> bool:
        return other >= self


class GenStore:
    """Interned general forms; id 0 is the empty game."""

    def __init__(self) -> None:
        self._nodes: list[tuple[tuple[GenId, ...], tuple[GenId, ...]]] = [((), ())]
        self._index = {((), ()): 0}
        self._lock = threading.Lock()
        self._sum: dict[tuple[GenId, GenId], GenId] = {}
        self._outcome: dict[GenId, Outcome] = {}
        self._embed: dict[tuple[int, EndId], GenId] = {}

    def __len__(self) -> int:
        return len(self._nodes)

    def make(self, left: Iterable[GenId] = (), right: Iterable[GenId] = ()) -> GenId:
        key = (tuple(sorted(set(left))), tuple(sorted(set(right))))
        found = self._index.get(key)
        if found is None:
            n = len(self._nodes)
            if any(not 0 <= x < n for x in key[0] + key[1]):
                raise ValueError("unknown option id")
            with self._lock:
                found = self._index.get(key)
                if found is None:
                    found = len(self._nodes)
                    self._nodes.append(key)
                    self._index[key] = found
        return found

    def left(self, g: GenId) -> tuple[GenId, ...]:
        return self._nodes[g][0]

    def right(self, g: GenId) -> tuple[GenId, ...]:
        return self._nodes[g][1]

    def add(self, a: GenId, b: GenId) -> GenId:
        if a == 0:
            return b
        if b == 0:
            return a
        if a > b:
            a, b = b, a
        hit = self._sum.get((a, b))
        if hit is None:
            la, ra = self._nodes[a]
            lb, rb = self._nodes[b]
            left = [self.add(x, b) for x in la] + [self.add(a, y) for y in lb]
            right = [self.add(x, b) for x in ra] + [self.add(a, y) for y in rb]
            hit = self.make(left, right)
            self._sum[(a, b)] = hit
        return hit

    def outcome(self, g: GenId) -> Outcome:
        hit = self._outcome.get(g)
        if hit is None:
            left, right = self._nodes[g]
            lf = Winner.LEFT if not left or any(self.outcome(x).right_first is Winner.LEFT for x in left) else Winner.RIGHT
            rf = Winner.RIGHT if not right or any(self.outcome(x).left_first is Winner.RIGHT for x in right) else Winner.LEFT
            hit = Outcome(lf, rf)
            self._outcome[g] = hit
        return hit

    def format(self, g: GenId) -> str:
        left, right = self._nodes[g]
        if not left and not right:
            return "0"
        return "{%s|%s}" % (",".join(self.format(x) for x in left), ",".join(self.format(x) for x in right))


_default_gen = GenStore()


def default_gen_store() -> GenStore:
    return _default_gen


def _gen(gen: GenStore | None) -> GenStore:
    return _default_gen if gen is None else gen


def embed(g: EndId, store: EndStore | None = None, gen: GenStore | None = None) -> GenId:
    """The general form of a Left dead end (empty Left set everywhere)."""
    s = _store(store)
    gs = _gen(gen)
    key = (id(s), g)
    hit = gs._embed.get(key)
    if hit is None:
        hit = gs.make((), (embed(x, s, gs) for x in s.options(g)))
        gs._embed[key] = hit
    return hit


def outcome(g: GenId, gen: GenStore | None = None) -> Outcome:
    return _gen(gen).outcome(g)


def star(gen: GenStore | None = None) -> GenId:
    gs = _gen(gen)
    return gs.make((0,), (0,))


def context(k: int, gen: GenStore | None = None) -> GenId:
    """Distinguishing game in which Right wants to pass exactly ``k`` times."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    gs = _gen(gen)
    s = star(gs)
    c = gs.make((0, s), (s,))
    for _ in range(k):
        c = gs.make((c,), (0,))
    return c


@dataclass(frozen=True)
class Witness:
    length: int
    outcome_g: Winner  # Right moving first on g + context(length)
    outcome_h: Winner  # Right moving first on h + context(length)


def distinguish(
    g: EndId, h: EndId, store: EndStore | None = None, gen: GenStore | None = None
) -> Optional[Witness]:
    """A context separating ``g`` from ``h`` when some terminal length of ``g`` is missing from ``h``."""
    s = _store(store)
    gs = _gen(gen)
    missing = [t for t in terminal_set(g, s) if t not in terminal_set(h, s)]
    if not missing:
        return None
    n = missing[0]
    c = context(n, gs)
    og = gs.outcome(gs.add(embed(g, s, gs), c)).right_first
    oh = gs.outcome(gs.add(embed(h, s, gs), c)).right_first
    return Witness(n, og, oh)


def random_context(rng: random.Random, depth: int, gen: GenStore | None = None, max_options: int = 3) -> GenId:
    """Random general form of formal birthday at most ``depth``."""
    gs = _gen(gen)
    if depth <= 0:
        return 0
    left = [random_context(rng, rng.randrange(depth), gs, max_options) for _ in range(rng.randint(0, max_options))]
    right = [random_context(rng, rng.randrange(depth), gs, max_options) for _ in range(rng.randint(0, max_options))]
    return gs.make(left, right)


def context_pool(count: int = 200, depth: int = 4, seed: int = 0, gen: GenStore | None = None) -> list[GenId]:
    rng = random.Random(seed)
    return [random_context(rng, depth, gen) for _ in range(count)]


def order_violations(
    g: EndId,
    h: EndId,
    contexts: Iterable[GenId],
    store: EndStore | None = None,
    gen: GenStore | None = None,
) -> list[GenId]:
    """Contexts in which ``h`` does strictly better than ``g`` for some mover."""
    s = _store(store)
    gs = _gen(gen)
    eg, eh = embed(g, s, gs), embed(h, s, gs)
    return [x for x in contexts if not gs.outcome(gs.add(eg, x)) >= gs.outcome(gs.add(eh, x))]
