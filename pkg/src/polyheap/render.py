"""SVG and ASCII renderers for paths, heaps and animals.

The SVG output commits to structure only: one polyline per path with one
line element per catastrophe step (class "catastrophe"), one rect per
dimer, one rect per cell.
"""
from __future__ import annotations

from .animals import Animal
from .heaps import Heap
from .paths import altitude_profile

_UNIT = 20


def _svg(width: int, height: int, body: list[str]) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n' + "\n".join(body) + "\n</svg>\n"
    )


def svg_path(tokens: str) -> str:
    ys = altitude_profile(tokens)
    top = max(ys) + 1
    pts = [(i * _UNIT + _UNIT, (top - y) * _UNIT) for i, y in enumerate(ys)]
    body = [
        '<polyline class="path" fill="none" stroke="black" points="'
        + " ".join(f"{x},{y}" for x, y in pts)
        + '"/>'
    ]
    for i, t in enumerate(tokens):
        if t == "C":
            (x1, y1), (x2, y2) = pts[i], pts[i + 1]
            body.append(
                f'<line class="catastrophe" stroke="red" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
            )
    return _svg((len(tokens) + 2) * _UNIT, (top + 2) * _UNIT, body)


def svg_heap(heap: Heap) -> str:
    if not heap.dimers:
        return _svg(_UNIT, _UNIT, [])
    top = max(l for _, l in heap.dimers) + 1
    right = max(p for p, _ in heap.dimers) + 2
    body = [
        f'<rect class="dimer" x="{p * _UNIT}" y="{(top - 1 - l) * _UNIT}" '
        f'width="{2 * _UNIT - 2}" height="{_UNIT - 2}" fill="tan" stroke="black"/>'
        for p, l in heap.dimers
    ]
    return _svg(right * _UNIT, top * _UNIT, body)


def svg_animal(animal: Animal) -> str:
    top = max(j for _, j in animal.cells) + 1
    right = max(i for i, _ in animal.cells) + 1
    body = [
        f'<rect class="cell" x="{i * _UNIT}" y="{(top - 1 - j) * _UNIT}" '
        f'width="{_UNIT - 2}" height="{_UNIT - 2}" fill="steelblue" stroke="black"/>'
        for i, j in animal.cells
    ]
    return _svg(right * _UNIT, top * _UNIT, body)


def ascii_path(tokens: str) -> str:
    ys = altitude_profile(tokens)
    top = max(ys)
    grid = [[" "] * len(tokens) for _ in range(top + 1)]
    for i, t in enumerate(tokens):
        y0, y1 = ys[i], ys[i + 1]
        ch = {"U": "/", "F": "_", "D": "\\"}.get(t, "!")
        row = max(y0, y1) if t != "C" else y0
        grid[row][i] = ch
    return "\n".join("".join(row) for row in reversed(grid)) or ""


def ascii_heap(heap: Heap) -> str:
    if not heap.dimers:
        return ""
    top = max(l for _, l in heap.dimers)
    right = max(p for p, _ in heap.dimers) + 2
    grid = [[" "] * (2 * right) for _ in range(top + 1)]
    for p, l in heap.dimers:
        grid[l][2 * p : 2 * p + 4] = list("[==]")
    return "\n".join("".join(row).rstrip() for row in reversed(grid))


def ascii_animal(animal: Animal) -> str:
    top = max(j for _, j in animal.cells)
    right = max(i for i, _ in animal.cells)
    grid = [[" "] * (right + 1) for _ in range(top + 1)]
    for i, j in animal.cells:
        grid[j][i] = "#"
    return "\n".join("".join(row).rstrip() for row in reversed(grid))
