"""Canonical Left dead ends born by day n, their census, and Hasse diagrams.

The canonical ends born by day n are 0 together with ``{| S}`` for every
nonempty antichain ``S`` of the canonical ends born by day n - 1.
"""

from __future__ import annotations

import logging
import os
import struct
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .core import ZERO, EndId, EndStore, _store, format_end
from .errors import Overflow
from .factor import Factorisation, factorisations, is_atom
from .measures import birthday
from .order import canonical_sum, ge

log = logging.getLogger(__name__)

MAGIC = b"LDE1"
SNAPSHOT_VERSION = 1


@dataclass
class Budget:
    nodes: Optional[int] = None
    seconds: Optional[float] = None
    started: float = field(default_factory=time.monotonic)

    def check(self, produced: int, what: str) -> None:
        if self.nodes is not None and produced > self.nodes:
            raise Overflow(f"node budget of {self.nodes} exhausted while {what}", {"produced": produced})
        if self.seconds is not None and time.monotonic() - self.started > self.seconds:
            raise Overflow(f"time budget of {self.seconds}s exhausted while {what}", {"produced": produced})


@dataclass
class DayPoset:
    day: int
    games: list[EndId]
    store: EndStore = field(repr=False)

    def nonzero(self) -> list[EndId]:
        return [g for g in self.games if g != ZERO]

    def covers(self, include_zero: bool = False) -> list[tuple[EndId, EndId]]:
        """Pairs ``(upper, lower)`` with ``upper > lower`` and nothing strictly between."""
        items = self.games if include_zero else self.nonzero()
        s = self.store
        above = {g: [h for h in items if h != g and ge(g, h, s)] for g in items}
        out = []
        for g in items:
            below = above[g]
            for h in below:
                if any(k != h and h in above[k] for k in below):
                    continue
                out.append((g, h))
        return out


def incomparability_masks(games: list[EndId], store: EndStore) -> list[int]:
    """For each index, a bitmask of the later indices it is incomparable with."""
    n = len(games)
    masks = []
    for i, g in enumerate(games):
        m = 0
        for j in range(i + 1, n):
            h = games[j]
            if not ge(g, h, store) and not ge(h, g, store):
                m |= 1 << j
        masks.append(m)
    return masks


def antichains_from(first: int, masks: list[int]) -> Iterator[tuple[int, ...]]:
    """Every antichain whose least index is ``first``, depth first."""
    stack = [((first,), masks[first])]
    while stack:
        chosen, allowed = stack.pop()
        yield chosen
        children = []
        while allowed:
            low = allowed & -allowed
            j = low.bit_length() - 1
            allowed ^= low
            children.append((chosen + (j,), allowed & masks[j]))
        stack.extend(reversed(children))


def count_antichains(masks: list[int]) -> int:
    """Number of nonempty antichains, counted without materialising them."""

    def count(allowed: int) -> int:
        total = 0
        while allowed:
            low = allowed & -allowed
            j = low.bit_length() - 1
            allowed ^= low
            total += 1 + count(allowed & masks[j])
        return total

    return count((1 << len(masks)) - 1)


def _cache_path(day: int) -> Optional[Path]:
    root = os.environ.get("DEADEND_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"day{day}.lde"


def save_snapshot(poset: DayPoset, path: Path) -> None:
    """Write the forms needed for ``poset`` as little-endian 32-bit records."""
    s = poset.store
    needed: set[EndId] = set()
    stack = list(poset.games)
    while stack:
        g = stack.pop()
        if g in needed:
            continue
        needed.add(g)
        stack.extend(s.options(g))
    order = sorted(needed)
    local = {g: i for i, g in enumerate(order)}
    buf = bytearray(MAGIC)
    buf += struct.pack("<II", SNAPSHOT_VERSION, len(order))
    for g in order:
        opts = s.options(g)
        buf += struct.pack("<I", len(opts))
        buf += struct.pack("<%dI" % len(opts), *(local[x] for x in opts))
    buf += struct.pack("<II", poset.day, len(poset.games))
    buf += struct.pack("<%dI" % len(poset.games), *(local[g] for g in poset.games))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(bytes(buf))


def load_snapshot(path: Path, store: EndStore | None = None) -> DayPoset:
    s = _store(store)
    data = path.read_bytes()
    if data[:4] != MAGIC:
        raise ValueError(f"{path} is not a dead-end snapshot")
    version, count = struct.unpack_from("<II", data, 4)
    if version != SNAPSHOT_VERSION:
        raise ValueError(f"unsupported snapshot version {version}")
    pos = 12
    ids: list[EndId] = []
    for _ in range(count):
        (k,) = struct.unpack_from("<I", data, pos)
        pos += 4
        opts = struct.unpack_from("<%dI" % k, data, pos)
        pos += 4 * k
        ids.append(s.make(ids[x] for x in opts))
    day, n = struct.unpack_from("<II", data, pos)
    pos += 8
    games = sorted(ids[x] for x in struct.unpack_from("<%dI" % n, data, pos))
    return DayPoset(day, games, s)


def generate_day(
    n: int,
    store: EndStore | None = None,
    jobs: int = 1,
    budget: Budget | None = None,
) -> DayPoset:
    if n < 0:
        raise ValueError("day must be nonnegative")
    s = _store(store)
    days = s.memo("days")
    if n in days:
        return days[n]
    path = _cache_path(n)
    if path is not None and path.exists():
        poset = load_snapshot(path, s)
        days[n] = poset
        return poset
    if n == 0:
        poset = DayPoset(0, [ZERO], s)
        days[0] = poset
        return poset

    budget = budget or Budget()
    prev = generate_day(n - 1, s, jobs, budget).games
    masks = incomparability_masks(prev, s)
    log.info("day %d: enumerating antichains of %d games", n, len(prev))

    def branch(first: int) -> list[tuple[int, ...]]:
        out = []
        for chain in antichains_from(first, masks):
            out.append(chain)
            if len(out) % 4096 == 0:
                budget.check(len(out), f"enumerating day {n}")
        return out

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(branch, range(len(prev))))
    else:
        parts = [branch(i) for i in range(len(prev))]

    games = [ZERO]
    produced = 0
    for part in parts:
        for chain in part:
            games.append(s.make(prev[i] for i in chain))
            produced += 1
        budget.check(produced, f"interning day {n}")
    poset = DayPoset(n, sorted(set(games)), s)
    days[n] = poset
    if path is not None:
        save_snapshot(poset, path)
    return poset


@dataclass(frozen=True)
class CensusRow:
    day: int
    ends: Optional[int]
    atoms: Optional[int]
    molecules: Optional[int]
    nontrivial_molecules: Optional[int]

    def cells(self) -> list[str]:
        return [
            str(self.day),
            *("?" if v is None else str(v) for v in (self.ends, self.atoms, self.molecules, self.nontrivial_molecules)),
        ]


def _by_birthday(games: list[EndId], s: EndStore) -> dict[int, list[EndId]]:
    out: dict[int, list[EndId]] = {}
    for g in games:
        out.setdefault(birthday(g, s), []).append(g)
    return out


def _pair_sums(classes: dict[int, list[EndId]], n: int, s: EndStore, budget: Budget) -> set[EndId]:
    found: set[EndId] = set()
    births = sorted(b for b in classes if b > 0)
    done = 0
    for b1 in births:
        for b2 in births:
            if b2 < b1 or b1 + b2 > n:
                continue
            for i, h in enumerate(classes[b1]):
                pool = classes[b2][i:] if b1 == b2 else classes[b2]
                for k in pool:
                    found.add(canonical_sum(h, k, s))
                done += len(pool)
                budget.check(done, f"summing pairs for day {n}")
    return found


def molecules_by_day(n: int, store: EndStore | None = None, jobs: int = 1, budget: Budget | None = None) -> set[EndId]:
    """Canonical molecules born by day ``n``: sums of two non-zero ends."""
    s = _store(store)
    if n < 2:
        return set()
    budget = budget or Budget()
    classes = _by_birthday(generate_day(n - 1, s, jobs, budget).nonzero(), s)
    return _pair_sums(classes, n, s, budget)


def nontrivial_molecules_by_day(
    n: int, store: EndStore | None = None, jobs: int = 1, budget: Budget | None = None
) -> set[EndId]:
    """Molecules born by day ``n`` that 1 does not divide.

    Because 1 is prime, these are exactly the sums of two parts that 1 does
    not divide, i.e. parts with more than one good option.
    """
    s = _store(store)
    if n < 4:
        return set()
    budget = budget or Budget()
    parts = [g for g in generate_day(n - 2, s, jobs, budget).nonzero() if len(s.options(g)) > 1]
    return _pair_sums(_by_birthday(parts, s), n, s, budget)


def census(
    n: int,
    store: EndStore | None = None,
    max_day: int = 5,
    jobs: int = 1,
    budget: Budget | None = None,
) -> CensusRow:
    """Counts for ends born by day ``n``; cells beyond ``max_day`` generation are ``None``."""
    s = _store(store)
    budget = budget or Budget()
    ends = atoms = molecules = nontrivial = None
    if n - 1 <= max_day:
        mols = molecules_by_day(n, s, jobs, budget)
        molecules = len(mols)
        nontrivial = sum(1 for g in mols if len(s.options(g)) > 1)
    elif n - 2 <= max_day:
        nontrivial = len(nontrivial_molecules_by_day(n, s, jobs, budget))
    if n <= max_day:
        games = generate_day(n, s, jobs, budget).nonzero()
        ends = len(games) + 1
        atoms = 0
        for i, g in enumerate(games):
            atoms += is_atom(g, s)
            if i % 1024 == 0:
                budget.check(i, f"classifying day {n}")
        if atoms + molecules + 1 != ends:
            raise AssertionError(
                f"day {n}: {atoms} atoms + {molecules} molecules + 1 != {ends} ends"
            )
    return CensusRow(n, ends, atoms, molecules, nontrivial)


@dataclass
class UniquenessReport:
    day: int
    checked: int
    counterexamples: list[tuple[EndId, list[Factorisation]]]

    @property
    def all_unique(self) -> bool:
        return not self.counterexamples


def verify_unique_factorisation(
    n: int, store: EndStore | None = None, jobs: int = 1, budget: Budget | None = None
) -> UniquenessReport:
    s = _store(store)
    budget = budget or Budget()
    games = generate_day(n, s, jobs, budget).nonzero()
    bad = []
    for i, g in enumerate(games):
        facts = factorisations(g, s)
        if len(facts) != 1:
            bad.append((g, sorted(facts)))
        if i % 1024 == 0:
            budget.check(i, f"verifying day {n}")
    return UniquenessReport(n, len(games), bad)


def hasse_dot(n: int, store: EndStore | None = None, jobs: int = 1, budget: Budget | None = None) -> str:
    """Graphviz digraph of the covering relation on non-zero ends born by day ``n``.

    Edges run from the lesser game to the greater one; greater games sit higher.
    """
    s = _store(store)
    poset = generate_day(n, s, jobs, budget)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for g in poset.nonzero():
        lines.append('  g%d [label="%s"];' % (g, format_end(g, s)))
    for upper, lower in sorted(poset.covers(), key=lambda e: (e[1], e[0])):
        lines.append("  g%d -> g%d;" % (lower, upper))
    lines.append("}")
    return "\n".join(lines) + "\n"
