"""Square-lattice animals and the 45-degree rotation to heaps of dimers.

A cell (i, j) becomes a dimer at position i - j dropped from height i + j,
so N-neighbours land diagonally left above and E-neighbours diagonally
right above.  The inverse rebuilds one pyramid directly and pushes the
remaining factors down diagonally until the cell sets first touch.
"""
from __future__ import annotations

import json
from typing import Iterable, Iterator

from .heaps import (
    Dimer,
    Heap,
    HeapError,
    NotConnected,
    NotStrict,
    _closure,
    _is_connected,
    _is_strict,
    _refall_in_place,
    classify,
    refall,
)

Cell = tuple[int, int]


class ParityViolation(HeapError):
    """A dimer whose offset from the minimal dimer cannot come from a cell.

    Signals a bug or a non-representable heap; never silently fixed.
    """


class NotAnAnimal(ValueError):
    pass


class Animal:
    """Immutable 4-connected cell set, translated to min i = min j = 0."""

    __slots__ = ("cells",)

    def __init__(self, cells: Iterable[Cell]):
        cs = sorted(set(cells))
        if not cs:
            raise NotAnAnimal("empty cell set")
        mi = min(i for i, _ in cs)
        mj = min(j for _, j in cs)
        cs = [(i - mi, j - mj) for i, j in cs]
        if not _cells_connected(cs):
            raise NotAnAnimal("cells are not 4-connected")
        self.cells: tuple[Cell, ...]
        object.__setattr__(self, "cells", tuple(sorted(cs)))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Animal is immutable")

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other) -> bool:
        return isinstance(other, Animal) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Animal({list(self.cells)!r})"

    def to_json(self) -> str:
        return json.dumps({"cells": [list(c) for c in self.cells]})

    @staticmethod
    def from_json(text: str) -> "Animal":
        data = json.loads(text)
        return Animal((int(i), int(j)) for i, j in data["cells"])


def _cells_connected(cells: list[Cell]) -> bool:
    cset = set(cells)
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cset)


def animal_to_heap(a: Animal) -> Heap:
    """Rotate: cell (i, j) -> dimer position i - j, dropped in order of i + j."""
    return refall((i - j, i + j) for i, j in a.cells)


def _pyramid_cells(dimers: list[Dimer]) -> set[Cell]:
    """Direct coordinate map for a single pyramid; keeps i - j = position."""
    q = next(p for p, l in dimers if l == 0)
    cells = set()
    for p, l in dimers:
        rel = p - q
        if (l - rel) % 2:
            raise ParityViolation(f"dimer {(p, l)} offset {rel} from minimal {q}")
        cells.add((q + (l + rel) // 2, (l - rel) // 2))
    return cells


def _heap_cells(dimers: list[Dimer]) -> set[Cell]:
    mins = sorted(p for p, l in dimers if l == 0)
    if len(mins) == 1:
        return _pyramid_cells(dimers)
    seeds = [(p, 0) for p in mins[:-1]]
    cl = _closure(dimers, seeds)
    right = _heap_cells([d for d in dimers if d not in cl])
    upper = _heap_cells(_refall_in_place(cl))
    # push the upper part down along (-1,-1) until the sets first touch
    t = max(i + j for i, j in right) - min(i + j for i, j in upper) + 2
    while True:
        shifted = {(i + t, j + t) for i, j in upper}
        if shifted & right:
            raise HeapError("factors overlap before touching; heap not representable")
        if any(
            (i + di, j + dj) in right
            for i, j in shifted
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1))
        ):
            return right | shifted
        t -= 1
        if t < -4 * len(dimers):  # pragma: no cover - safety stop
            raise HeapError("push-down never connected")


def heap_to_animal(h: Heap) -> Animal:
    """Inverse rotation, defined on strict connected heaps."""
    dset = frozenset(h.dimers)
    if not _is_strict(dset):
        raise NotStrict(repr(h))
    if not _is_connected(h.dimers):
        raise NotConnected(repr(h))
    return Animal(_heap_cells(list(h.dimers)))


def is_directed(a: Animal) -> bool:
    """True iff the corner cell (min i, min j) reaches every cell by N/E steps.

    The source of a directed animal must be coordinatewise minimal, so only
    the corner can qualify.
    """
    source = (0, 0)  # cells are canonical: min i = min j = 0
    cset = set(a.cells)
    if source not in cset:
        return False
    seen = {source}
    stack = [source]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i, j + 1)):
            if nb in cset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cset)


def is_stacked_directed(a: Animal) -> bool:
    h = animal_to_heap(a)
    if not classify(h).stacked:
        return False
    return heap_to_animal(h) == a


def enumerate_directed_animals(n: int) -> Iterator[Animal]:
    """All directed animals of size n, by N/E-closure growth from the source."""
    if n <= 0:
        return
    level: set[frozenset[Cell]] = {frozenset({(0, 0)})}
    for _ in range(n - 1):
        nxt: set[frozenset[Cell]] = set()
        for s in level:
            for i, j in s:
                for cand in ((i + 1, j), (i, j + 1)):
                    if cand not in s:
                        nxt.add(s | {cand})
        level = nxt
    for s in sorted(level, key=sorted):
        yield Animal(s)
