"""The three-level correspondence between heaps of dimers and paths.

* omega:  strict half-pyramids  <->  plain Motzkin excursions
* psi:    strict pyramids       <->  excursions with catastrophes at altitude 0
* phi:    stacked heaps         <->  excursions with unrestricted catastrophes

A heap of size n+1 maps to a path of length n.  The inverse directions are
implemented as linear scans: each token drops one dimer, with a stack
tracking the positions to return to after a D step, and catastrophes
opening the next factor.
"""
from __future__ import annotations

from dataclasses import dataclass

from .heaps import (
    ArchSplit,
    CoverSplit,
    Heap,
    NotStacked,
    Single,
    classify,
    pyramidal_factors,
    split_half_pyramid,
    split_pyramid,
)
from .paths import InvalidPath, Mode, validate


def omega(q: Heap) -> str:
    """Encode a strict half-pyramid as a plain Motzkin excursion."""
    split = split_half_pyramid(q)
    if isinstance(split, Single):
        return ""
    if isinstance(split, CoverSplit):
        return "F" + omega(split.inner)
    assert isinstance(split, ArchSplit)
    return "U" + omega(split.left) + "D" + omega(split.top)


def _drops_to_heap(drops: list[int]) -> Heap:
    from .heaps import _drop

    return Heap(_drop((pos, i) for i, pos in enumerate(drops)))


def omega_inv(tokens: str) -> Heap:
    """Decode a plain Motzkin excursion into a strict half-pyramid.

    One dimer per token plus the initial minimal dimer: U opens an arch one
    position to the left, F steps one position left, D closes the innermost
    arch by dropping straight above its opening position.
    """
    validate(tokens, Mode.PLAIN)
    drops = [0]
    cur = 0
    stack: list[int] = []
    for t in tokens:
        if t == "U":
            stack.append(cur)
            cur -= 1
        elif t == "F":
            cur -= 1
        else:  # D
            cur = stack.pop()
        drops.append(cur)
    return _drops_to_heap(drops)


def psi(p: Heap) -> str:
    """Encode a strict pyramid; every right-width column contributes one
    altitude-0 catastrophe."""
    split = split_pyramid(p)
    if split is None:
        return omega(p)
    return omega(split.base) + "C" + psi(split.rest)


def psi_inv(tokens: str) -> Heap:
    """Decode an excursion with altitude-0 catastrophes into a strict
    pyramid; each C starts a half-pyramid one position right of the
    previous minimal position."""
    validate(tokens, Mode.CAT0)
    drops = [0]
    cur = 0
    anchor = 0
    stack: list[int] = []
    for t in tokens:
        if t == "U":
            stack.append(cur)
            cur -= 1
        elif t == "F":
            cur -= 1
        elif t == "D":
            cur = stack.pop()
        else:  # C at altitude 0
            anchor += 1
            cur = anchor
        drops.append(cur)
    return _drops_to_heap(drops)


def phi(h: Heap) -> str:
    """Encode a stacked heap as an excursion with catastrophes.

    The rightmost pyramidal factor is encoded first; each further factor
    P_i (right to left) contributes U-marked half-pyramids for its gap of
    width l, a catastrophe taken at altitude l, and the remaining pyramid.
    """
    flags = classify(h)
    if not flags.stacked:
        raise NotStacked(repr(h))
    f = pyramidal_factors(h)
    k = len(f.factors)
    out = [psi(f.factors[-1])]
    for i in range(k - 2, -1, -1):
        ell = f.gaps[i]
        p = f.factors[i]
        pieces = []
        for _ in range(ell):
            split = split_pyramid(p)
            if split is None:
                raise NotStacked(f"right width of factor {i} smaller than gap {ell}")
            pieces.append(split.base)
            p = split.rest
        out.append("".join("U" + omega(piece) for piece in pieces))
        out.append("C" + psi(p))
    return "".join(out)


@dataclass(frozen=True)
class _Segment:
    """One stretch of a catastrophe excursion ending in a high catastrophe:
    the pyramid part, the gap excursions read off the final up-crossings,
    and the catastrophe altitude (= gap width)."""

    pyramid_part: str
    gap_excursions: tuple[str, ...]
    gap: int


def _split_segments(tokens: str) -> list[str]:
    """Cut after every catastrophe taken at altitude >= 1."""
    segs: list[str] = []
    start = 0
    h = 0
    for i, t in enumerate(tokens):
        if t == "U":
            h += 1
        elif t == "D":
            h -= 1
        elif t == "C":
            if h >= 1:
                segs.append(tokens[start : i + 1])
                start = i + 1
            h = 0
    segs.append(tokens[start:])
    return segs


def _parse_segment(seg: str) -> _Segment:
    """Split a segment ending in a high catastrophe at the last up-crossings
    of altitudes 0 .. gap-1 before that catastrophe."""
    body, last = seg[:-1], seg[-1]
    assert last == "C"
    h = 0
    markers: dict[int, int] = {}
    for i, t in enumerate(body):
        if t == "U":
            markers[h] = i
            h += 1
        elif t == "D":
            h -= 1
        elif t == "C":
            h = 0
    ell = h  # altitude of the final catastrophe
    cuts = [markers[j] for j in range(ell)]
    pieces = []
    for j in range(ell):
        end = cuts[j + 1] if j + 1 < ell else len(body)
        pieces.append(body[cuts[j] + 1 : end])
    return _Segment(body[: cuts[0]], tuple(pieces), ell)


def _minimal_pos(h: Heap) -> int:
    mins = h.minimal_dimers()
    if len(mins) != 1:
        raise InvalidPath("intermediate factor is not a pyramid")
    return mins[0][0]


def _build_factor(gap_excursions: tuple[str, ...], pyramid_part: str) -> Heap:
    """Standalone pyramid: gap half-pyramids dropped at positions 0..l-1,
    then the following pyramid at position l."""
    parts = [omega_inv(x) for x in gap_excursions] + [psi_inv(pyramid_part)]
    placed: list[tuple[int, int]] = []
    top: dict[int, int] = {}
    for target, part in enumerate(parts):
        off = target - _minimal_pos(part)
        for p, _ in part.dimers:  # sorted by (level, pos)
            q = p + off
            lvl = 1 + max(top.get(q - 1, -1), top.get(q, -1), top.get(q + 1, -1))
            placed.append((q, lvl))
            top[q] = lvl
    return Heap(placed)


def phi_inv(tokens: str) -> Heap:
    """Decode an excursion with catastrophes into a stacked heap."""
    validate(tokens, Mode.CAT)
    segs = _split_segments(tokens)
    if len(segs) == 1:
        return psi_inv(segs[0])
    parsed = [_parse_segment(s) for s in segs[:-1]]
    first = psi_inv(parsed[0].pyramid_part)
    placed = list(first.dimers)
    top: dict[int, int] = {}
    for p, l in placed:
        if l > top.get(p, -1):
            top[p] = l
    prev_leftmost = 0
    for i, seg in enumerate(parsed):
        nxt_pyramid = parsed[i + 1].pyramid_part if i + 1 < len(parsed) else segs[-1]
        factor = _build_factor(seg.gap_excursions, nxt_pyramid)
        anchor = prev_leftmost - seg.gap - 1  # global position of the new minimal dimer
        off = anchor - _minimal_pos(factor)
        for p, _ in factor.dimers:
            q = p + off
            lvl = 1 + max(top.get(q - 1, -1), top.get(q, -1), top.get(q + 1, -1))
            placed.append((q, lvl))
            top[q] = lvl
        prev_leftmost = off  # factors are canonical, leftmost position 0
    return Heap(placed)
