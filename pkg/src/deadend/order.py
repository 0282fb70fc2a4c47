"""Order, equality, good options and canonical forms.

Comparison of Left dead ends does not depend on the universe: ``g >= h``
holds exactly when ``g`` and ``h`` are both 0, or ``g`` is non-zero and every
Right option of ``g`` is ``>=`` some Right option of ``h``.
"""

from __future__ import annotations

from typing import Iterable

from .core import ZERO, EndId, EndStore, _store


def ge(g: EndId, h: EndId, store: EndStore | None = None) -> bool:
    s = _store(store)
    return _ge(g, h, s, s.memo("ge"))


def _ge(g: EndId, h: EndId, s: EndStore, memo: dict) -> bool:
    if g == h:
        return True
    if g == ZERO or h == ZERO:
        return False
    key = (g, h)
    hit = memo.get(key)
    if hit is None:
        hopts = s.options(h)
        hit = all(any(_ge(x, y, s, memo) for y in hopts) for x in s.options(g))
        memo[key] = hit
    return hit


def eq(g: EndId, h: EndId, store: EndStore | None = None) -> bool:
    return ge(g, h, store) and ge(h, g, store)


def gt(g: EndId, h: EndId, store: EndStore | None = None) -> bool:
    return ge(g, h, store) and not ge(h, g, store)


def compare(g: EndId, h: EndId, store: EndStore | None = None) -> str:
    """One of ``'='``, ``'>'``, ``'<'`` or ``'||'`` (incomparable)."""
    up, down = ge(g, h, store), ge(h, g, store)
    if up and down:
        return "="
    if up:
        return ">"
    if down:
        return "<"
    return "||"


def minimal(ids: Iterable[EndId], store: EndStore | None = None) -> list[EndId]:
    """Elements not strictly above another element, sorted by id."""
    s = _store(store)
    memo = s.memo("ge")
    pool = sorted(set(ids))
    return [
        x for x in pool
        if not any(y != x and _ge(x, y, s, memo) and not _ge(y, x, s, memo) for y in pool)
    ]


def good_options(g: EndId, store: EndStore | None = None) -> list[EndId]:
    s = _store(store)
    memo = s.memo("good")
    hit = memo.get(g)
    if hit is None:
        hit = minimal(s.options(g), s)
        memo[g] = hit
    return list(hit)


def canonical(g: EndId, store: EndStore | None = None) -> EndId:
    s = _store(store)
    return _canonical(g, s, s.memo("canon"))


def _canonical(g: EndId, s: EndStore, memo: dict) -> EndId:
    hit = memo.get(g)
    if hit is None:
        opts = {_canonical(x, s, memo) for x in s.options(g)}
        hit = s.make(minimal(opts, s))
        memo[g] = hit
        memo.setdefault(hit, hit)
    return hit


def is_canonical(g: EndId, store: EndStore | None = None) -> bool:
    return canonical(g, store) == g


def canonical_sum(a: EndId, b: EndId, store: EndStore | None = None) -> EndId:
    """Canonical form of ``a + b``, built without materialising the raw sum."""
    s = _store(store)
    canon = s.memo("canon")
    a = _canonical(a, s, canon)
    b = _canonical(b, s, canon)
    return _csum(a, b, s, s.memo("csum"), canon)


def _csum(a: EndId, b: EndId, s: EndStore, memo: dict, canon: dict) -> EndId:
    if a == ZERO:
        return b
    if b == ZERO:
        return a
    if a > b:
        a, b = b, a
    key = (a, b)
    hit = memo.get(key)
    if hit is None:
        opts = {_csum(x, b, s, memo, canon) for x in s.options(a)}
        opts.update(_csum(a, y, s, memo, canon) for y in s.options(b))
        hit = s.make(minimal(opts, s))
        memo[key] = hit
        canon.setdefault(hit, hit)
    return hit


def canonical_multiple(n: int, g: EndId, store: EndStore | None = None) -> EndId:
    total = ZERO
    for _ in range(n):
        total = canonical_sum(total, g, store)
    return total
