"""Interned Left dead end forms, named families, sums and the text notation.

A Left dead end is stored as the sorted tuple of its Right options; Left
never has a move anywhere in the tree.  Forms are hash-consed, so two ids
are equal exactly when the game trees are isomorphic.
"""

from __future__ import annotations

import threading
from typing import Iterable

from .errors import InvalidOption, NotALeftEnd, NotationError

EndId = int
ZERO: EndId = 0


class EndStore:
    """Append-only table of interned forms.

    Memo tables for every derived quantity hang off the store (see
    :meth:`memo`), so they live exactly as long as the ids they are keyed by.
    """

    def __init__(self) -> None:
        self._nodes: list[tuple[EndId, ...]] = [()]
        self._index: dict[tuple[EndId, ...], EndId] = {(): ZERO}
        self._memos: dict[str, dict] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, g: object) -> bool:
        return isinstance(g, int) and 0 <= g < len(self._nodes)

    def options(self, g: EndId) -> tuple[EndId, ...]:
        return self._nodes[g]

    def make(self, options: Iterable[EndId]) -> EndId:
        key = tuple(sorted(set(options)))
        found = self._index.get(key)
        if found is not None:
            return found
        n = len(self._nodes)
        for child in key:
            if not 0 <= child < n:
                raise InvalidOption(f"unknown option id {child}")
        with self._lock:
            found = self._index.get(key)
            if found is None:
                found = len(self._nodes)
                self._nodes.append(key)
                self._index[key] = found
        return found

    def lookup(self, options: Iterable[EndId]) -> EndId | None:
        """Return the id of an already interned option set, if any."""
        return self._index.get(tuple(sorted(set(options))))

    def memo(self, name: str) -> dict:
        table = self._memos.get(name)
        if table is None:
            table = self._memos.setdefault(name, {})
        return table

    def nodes(self) -> list[tuple[EndId, ...]]:
        return list(self._nodes)


_default_store = EndStore()


def default_store() -> EndStore:
    return _default_store


def reset_default_store() -> EndStore:
    global _default_store
    _default_store = EndStore()
    return _default_store


def _store(store: EndStore | None) -> EndStore:
    return _default_store if store is None else store


def make_end(options: Iterable[EndId] = (), store: EndStore | None = None) -> EndId:
    return _store(store).make(options)


def options(g: EndId, store: EndStore | None = None) -> tuple[EndId, ...]:
    return _store(store).options(g)


def integer(n: int, store: EndStore | None = None) -> EndId:
    """The chain of length ``n``; ``integer(0)`` is the empty game."""
    if n < 0:
        raise ValueError("integer rank must be nonnegative")
    s = _store(store)
    g = ZERO
    for _ in range(n):
        g = s.make((g,))
    return g


def waiting(n: int, store: EndStore | None = None) -> EndId:
    """Waiting game of rank ``n``: Right may move to 0 or to the previous rank."""
    if n < 0:
        raise ValueError("waiting rank must be nonnegative")
    s = _store(store)
    g = ZERO
    for _ in range(n):
        g = s.make((ZERO, g))
    return g


def add(a: EndId, b: EndId, store: EndStore | None = None) -> EndId:
    """Disjunctive sum of two forms (no simplification)."""
    s = _store(store)
    memo = s.memo("add")
    return _add(a, b, s, memo)


def _add(a: EndId, b: EndId, s: EndStore, memo: dict) -> EndId:
    if a == ZERO:
        return b
    if b == ZERO:
        return a
    if a > b:
        a, b = b, a
    key = (a, b)
    hit = memo.get(key)
    if hit is not None:
        return hit
    opts = [_add(x, b, s, memo) for x in s.options(a)]
    opts += [_add(a, y, s, memo) for y in s.options(b)]
    result = s.make(opts)
    memo[key] = result
    return result


def multiple(n: int, g: EndId, store: EndStore | None = None) -> EndId:
    if n < 0:
        raise ValueError("multiplier must be nonnegative")
    total = ZERO
    for _ in range(n):
        total = add(total, g, store)
    return total


def formal_birthday(g: EndId, store: EndStore | None = None) -> int:
    s = _store(store)
    memo = s.memo("birth")
    return _birth(g, s, memo)


def _birth(g: EndId, s: EndStore, memo: dict) -> int:
    hit = memo.get(g)
    if hit is None:
        opts = s.options(g)
        hit = 1 + max(_birth(x, s, memo) for x in opts) if opts else 0
        memo[g] = hit
    return hit


def subpositions(g: EndId, store: EndStore | None = None) -> list[EndId]:
    """All distinct subpositions of ``g`` (including ``g``), children first."""
    s = _store(store)
    seen: set[EndId] = set()
    order: list[EndId] = []
    stack: list[tuple[EndId, bool]] = [(g, False)]
    while stack:
        x, expanded = stack.pop()
        if expanded:
            order.append(x)
            continue
        if x in seen:
            continue
        seen.add(x)
        stack.append((x, True))
        stack.extend((y, False) for y in s.options(x) if y not in seen)
    return order


# ---------------------------------------------------------------------------
# notation
#
#   game  := term ("+" term)*
#   term  := NAT "*" term | atom
#   atom  := "0" | "#" NAT | "W" NAT | "{" "|" [game ("," game)*] "}" | "(" game ")"


class _Parser:
    def __init__(self, text: str, store: EndStore) -> None:
        self.data = text.encode("utf-8")
        self.text = text
        self.pos = 0
        self.store = store

    def fail(self, expected: str) -> NotationError:
        found = self.data[self.pos:self.pos + 1].decode("utf-8", "replace") or "end of input"
        return NotationError(
            f"expected {expected} at byte {self.pos}, found {found!r}",
            offset=self.pos,
            expected=expected,
        )

    def skip(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> bytes:
        self.skip()
        return self.data[self.pos:self.pos + 1]

    def eat(self, token: bytes) -> bool:
        if self.peek() == token:
            self.pos += 1
            return True
        return False

    def expect(self, token: bytes) -> None:
        if not self.eat(token):
            raise self.fail(repr(token.decode()))

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos:self.pos + 1].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("a natural number")
        return int(self.data[start:self.pos])

    def parse(self) -> EndId:
        g = self.game()
        if self.peek():
            raise self.fail("'+' or end of input")
        return g

    def game(self) -> EndId:
        g = self.term()
        while self.eat(b"+"):
            g = add(g, self.term(), self.store)
        return g

    def term(self) -> EndId:
        c = self.peek()
        if c.isdigit():
            start = self.pos
            n = self.nat()
            if self.eat(b"*"):
                return multiple(n, self.term(), self.store)
            if n == 0:
                return ZERO
            self.pos = start
            raise self.fail("'*' after a multiplier, or a game")
        return self.atom()

    def atom(self) -> EndId:
        c = self.peek()
        if c == b"#":
            self.pos += 1
            return integer(self.nat(), self.store)
        if c == b"W":
            self.pos += 1
            return waiting(self.nat(), self.store)
        if c == b"(":
            self.pos += 1
            g = self.game()
            self.expect(b")")
            return g
        if c == b"{":
            self.pos += 1
            self.skip_dot()
            if self.peek() != b"|":
                at = self.pos
                if self.peek() in (b"}", b""):
                    raise self.fail("'|'")
                raise NotALeftEnd(
                    f"Left options are not allowed in a Left dead end (byte {at})",
                    offset=at,
                    expected="'|'",
                )
            self.pos += 1
            opts: list[EndId] = []
            if self.peek() != b"}":
                opts.append(self.game())
                while self.eat(b","):
                    opts.append(self.game())
            self.expect(b"}")
            return self.store.make(opts)
        raise self.fail("'0', '#n', 'Wn', '{' or '('")

    def skip_dot(self) -> None:
        # tolerate the typeset placeholder "·" for an empty Left set
        self.skip()
        dot = "·".encode("utf-8")
        if self.data.startswith(dot, self.pos):
            self.pos += len(dot)


def parse(text: str, store: EndStore | None = None) -> EndId:
    return _Parser(text, _store(store)).parse()


def _shorthand(g: EndId, s: EndStore) -> str | None:
    memo = s.memo("shorthand")
    if g in memo:
        return memo[g]
    name = None
    if g == ZERO:
        name = "0"
    else:
        opts = s.options(g)
        if len(opts) == 1:
            inner = _shorthand(opts[0], s)
            if inner is not None and (inner == "0" or inner.startswith("#")):
                name = "#%d" % (1 if inner == "0" else int(inner[1:]) + 1)
        elif len(opts) == 2 and opts[0] == ZERO:
            inner = _shorthand(opts[1], s)
            if inner == "#1":
                name = "W2"
            elif inner is not None and inner.startswith("W"):
                name = "W%d" % (int(inner[1:]) + 1)
    memo[g] = name
    return name


def format_end(g: EndId, store: EndStore | None = None) -> str:
    """Minimal notation for a form; ``parse(format_end(g)) == g``."""
    s = _store(store)
    name = _shorthand(g, s)
    if name is not None:
        return name
    return "{|" + ",".join(format_end(x, s) for x in s.options(g)) + "}"
