"""Heaps of dimers over a horizontal axis.

A dimer at position p occupies the two lattice columns p and p+1; two
dimers overlap iff their positions differ by at most one.  A heap is the
result of dropping dimers one by one, each falling until it rests on the
axis or on an overlapping dimer.  Heaps are stored in canonical form:
dimers sorted by (level, pos) and translated so the minimum position is 0,
making equality "equality up to horizontal translation".
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

Dimer = tuple[int, int]  # (pos, level)


class HeapError(ValueError):
    pass


class NotConnected(HeapError):
    pass


class NotStrict(HeapError):
    pass


class NotAPyramid(HeapError):
    pass


class NotHalfPyramid(HeapError):
    pass


class NotStacked(HeapError):
    pass


class SizeTooLarge(HeapError):
    pass


def _drop(items: Iterable[tuple[int, int]]) -> list[Dimer]:
    """Drop (pos, hint) items in the given order; returns resting dimers."""
    placed: list[Dimer] = []
    top: dict[int, int] = {}
    for pos, _hint in items:
        lvl = 1 + max(top.get(pos - 1, -1), top.get(pos, -1), top.get(pos + 1, -1))
        placed.append((pos, lvl))
        top[pos] = lvl
    return placed


class Heap:
    """Immutable fallen heap of dimers, canonical up to translation."""

    __slots__ = ("dimers",)

    def __init__(self, dimers: Iterable[Dimer]):
        ds = sorted(dimers, key=lambda d: (d[1], d[0]))
        if ds:
            lo = min(p for p, _ in ds)
            if lo:
                ds = [(p - lo, l) for p, l in ds]
        self.dimers: tuple[Dimer, ...]
        object.__setattr__(self, "dimers", tuple(ds))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Heap is immutable")

    def __len__(self) -> int:
        return len(self.dimers)

    def __eq__(self, other) -> bool:
        return isinstance(other, Heap) and self.dimers == other.dimers

    def __hash__(self) -> int:
        return hash(self.dimers)

    def __repr__(self) -> str:
        return f"Heap({list(self.dimers)!r})"

    def minimal_dimers(self) -> tuple[Dimer, ...]:
        return tuple(d for d in self.dimers if d[1] == 0)

    def to_json(self) -> str:
        return json.dumps({"dimers": [{"pos": p, "level": l} for p, l in self.dimers]})

    @staticmethod
    def from_json(text: str) -> "Heap":
        data = json.loads(text)
        dimers = [(int(d["pos"]), int(d["level"])) for d in data["dimers"]]
        h = Heap(dimers)
        if sorted(h.dimers) != sorted(refall(h.dimers).dimers) or len(set(h.dimers)) != len(dimers):
            raise HeapError("dimers do not form a fallen heap")
        return h


def refall(items: Iterable[tuple[int, int]]) -> Heap:
    """Drop (pos, level-hint) items, ascending by hint then pos.

    Idempotent on fallen heaps: replaying a heap by levels reproduces it.
    """
    ordered = sorted(items, key=lambda d: (d[1], d[0]))
    return Heap(_drop(ordered))


def compose(base: Heap, block: Heap, offset: int) -> Heap:
    """Drop `block`, shifted horizontally by `offset`, on top of `base`."""
    placed = list(base.dimers)
    top: dict[int, int] = {}
    for p, l in placed:
        if l > top.get(p, -1):
            top[p] = l
    for p, l in block.dimers:  # already sorted by (level, pos)
        q = p + offset
        lvl = 1 + max(top.get(q - 1, -1), top.get(q, -1), top.get(q + 1, -1))
        placed.append((q, lvl))
        top[q] = lvl
    return Heap(placed)


def width(heap: Heap) -> int:
    """Number of occupied columns (a dimer at p covers columns p and p+1)."""
    cols = {p for p, _ in heap.dimers} | {p + 1 for p, _ in heap.dimers}
    return len(cols)


def right_width(pyramid: Heap) -> int:
    """Occupied columns strictly right of the minimal dimer of a pyramid."""
    mins = pyramid.minimal_dimers()
    if len(mins) != 1:
        raise NotAPyramid(f"{len(mins)} minimal dimers")
    return max(p for p, _ in pyramid.dimers) - mins[0][0]


def _is_strict(dimer_set: frozenset[Dimer]) -> bool:
    return not any((p, l + 1) in dimer_set for p, l in dimer_set)


def _is_connected(dimers: Iterable[Dimer]) -> bool:
    cols = {p for p, _ in dimers} | {p + 1 for p, _ in dimers}
    return not cols or (max(cols) - min(cols) + 1 == len(cols))


@dataclass(frozen=True)
class HeapFlags:
    strict: bool
    connected: bool
    pyramid: bool
    half_pyramid: bool
    stacked: bool
    minimal_count: int


def classify(heap: Heap) -> HeapFlags:
    ds = heap.dimers
    dset = frozenset(ds)
    strict = _is_strict(dset)
    connected = _is_connected(ds)
    mins = heap.minimal_dimers()
    pyramid = len(mins) == 1
    half = pyramid and ds and mins[0][0] == max(p for p, _ in ds)
    stacked = False
    if ds and strict and connected:
        if pyramid:
            stacked = True
        else:
            f = pyramidal_factors(heap)
            stacked = all(
                gap >= 1 and right_width(fac) >= gap
                for fac, gap in zip(f.factors[:-1], f.gaps)
            )
    return HeapFlags(strict, connected, pyramid, bool(half), stacked, len(mins))


def _closure(dimers: list[Dimer], seeds: Iterable[Dimer]) -> set[Dimer]:
    """Transitive upward closure: everything lying above a member with
    overlapping horizontal projection."""
    cl = set(seeds)
    grew = True
    while grew:
        grew = False
        for d in dimers:
            if d in cl:
                continue
            p, l = d
            for q, m in cl:
                if abs(p - q) <= 1 and l > m:
                    cl.add(d)
                    grew = True
                    break
    return cl


def _refall_in_place(dimers: Iterable[Dimer]) -> list[Dimer]:
    """Refall keeping horizontal positions (no canonical translation)."""
    return _drop(sorted(dimers, key=lambda d: (d[1], d[0])))


@dataclass(frozen=True)
class Factorization:
    """Left-to-right pyramidal factors of a strict connected heap.

    Positions are reported in the coordinates of the input heap; `gaps[i]`
    is leftmost_positions[i+1] - minimal_positions[i] - 1.
    """

    factors: tuple[Heap, ...]
    gaps: tuple[int, ...]
    minimal_positions: tuple[int, ...]
    leftmost_positions: tuple[int, ...]


def pyramidal_factors(heap: Heap) -> Factorization:
    dset = frozenset(heap.dimers)
    if not _is_strict(dset):
        raise NotStrict("pyramidal factorization needs a strict heap")
    if not _is_connected(heap.dimers):
        raise NotConnected("pyramidal factorization needs a connected heap")
    parts: list[list[Dimer]] = []
    rest = list(heap.dimers)
    while True:
        mins = sorted(p for p, l in rest if l == 0)
        if len(mins) <= 1:
            parts.append(rest)
            break
        seeds = [(p, 0) for p in mins[:-1]]
        cl = _closure(rest, seeds)
        parts.append([d for d in rest if d not in cl])
        rest = _refall_in_place(cl)
    parts.reverse()
    factors = tuple(Heap(part) for part in parts)
    min_pos = tuple(next(p for p, l in part if l == 0) for part in parts)
    left_pos = tuple(min(p for p, _ in part) for part in parts)
    gaps = tuple(left_pos[i + 1] - min_pos[i] - 1 for i in range(len(parts) - 1))
    return Factorization(factors, gaps, min_pos, left_pos)


@dataclass(frozen=True)
class Single:
    """Half-pyramid consisting of the minimal dimer alone."""


@dataclass(frozen=True)
class CoverSplit:
    """Minimal dimer carrying one half-pyramid diagonally left above it."""

    inner: Heap


@dataclass(frozen=True)
class ArchSplit:
    """Minimal dimer with a left half-pyramid and one stacked straight above."""

    left: Heap
    top: Heap


HalfPyramidSplit = Single | CoverSplit | ArchSplit


def split_half_pyramid(q: Heap) -> HalfPyramidSplit:
    flags = classify(q)
    if not (flags.strict and flags.half_pyramid):
        raise NotHalfPyramid(repr(q))
    if len(q) == 1:
        return Single()
    (mp, _), = q.minimal_dimers()
    same_col = [d for d in q.dimers if d[0] == mp and d[1] > 0]
    others = [d for d in q.dimers if d != (mp, 0)]
    if not same_col:
        return CoverSplit(refall(others))
    dstar = min(same_col, key=lambda d: d[1])
    cl = _closure(others, [dstar])
    q1 = [d for d in others if d not in cl]
    return ArchSplit(refall(q1), refall(cl))


@dataclass(frozen=True)
class PyramidSplit:
    """Base half-pyramid (owning the minimal dimer) and the pyramid resting
    one column to its right."""

    base: Heap
    rest: Heap


def split_pyramid(p: Heap) -> Optional[PyramidSplit]:
    """Split off the base half-pyramid; None if `p` already is one."""
    flags = classify(p)
    if not (flags.strict and flags.pyramid):
        raise NotAPyramid(repr(p))
    if right_width(p) == 0:
        return None
    (mp, _), = p.minimal_dimers()
    col = [d for d in p.dimers if d[0] == mp + 1]
    if not col:
        raise NotAPyramid("no dimer one position right of the minimal dimer")
    dstar = min(col, key=lambda d: d[1])
    cl = _closure(list(p.dimers), [dstar])
    base = Heap(d for d in p.dimers if d not in cl)  # keeps its levels
    return PyramidSplit(base, refall(cl))


def _independent_subsets(cands: list[int], max_k: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of sorted candidate positions, pairwise >= 2 apart."""
    cur: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        for j in range(i, len(cands)):
            if cur and cands[j] < cur[-1] + 2:
                continue
            cur.append(cands[j])
            yield tuple(cur)
            if len(cur) < max_k:
                yield from rec(j + 1)
            cur.pop()

    yield from rec(0)


def enumerate_heaps(
    size: int,
    *,
    strict: bool = False,
    connected: bool = False,
    pyramid: bool = False,
    half_pyramid: bool = False,
    stacked: bool = False,
    max_size: int = 9,
) -> Iterator[Heap]:
    """Brute-force oracle: all fallen heaps of `size` dimers up to
    translation, matching every requested flag.

    Generates level by level (position window of width ~2*size).  Each
    translation class is produced exactly once: the representative with the
    leftmost ground dimer at position 0.
    """
    if size > max_size:
        raise SizeTooLarge(f"size {size} > {max_size}")
    if size <= 0:
        return
    want_strict = strict or stacked

    def matches(flags: HeapFlags) -> bool:
        return (
            (not strict or flags.strict)
            and (not connected or flags.connected)
            and (not pyramid or flags.pyramid)
            and (not half_pyramid or flags.half_pyramid)
            and (not stacked or flags.stacked)
        )

    def grow(dimers: list[Dimer], below: tuple[int, ...], remaining: int, level: int) -> Iterator[Heap]:
        if remaining == 0:
            h = Heap(dimers)
            if matches(classify(h)):
                yield h
            return
        cands = sorted({q for p in below for q in (p - 1, p, p + 1)})
        if want_strict:
            below_set = set(below)
            cands = [q for q in cands if q not in below_set]
        for s in _independent_subsets(cands, remaining):
            yield from grow(dimers + [(q, level) for q in s], s, remaining - len(s), level + 1)

    if pyramid or half_pyramid:
        ground_sets: Iterable[tuple[int, ...]] = [(0,)]
    else:
        window = list(range(2, 2 * size - 1))
        ground_sets = ((0,) + tail for tail in _chain_empty(_independent_subsets(window, size - 1)))
    for g in ground_sets:
        yield from grow([(q, 0) for q in g], g, size - len(g), 1)


def _chain_empty(it: Iterator[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    yield ()
    yield from it
