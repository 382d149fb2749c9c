"""Motzkin excursions with catastrophes.

Tokens: U (+1), F (0), D (-1), C (catastrophe: from any altitude s >= 0
straight down to 0).  A catastrophe is its own token even when it moves
like F (at altitude 0) or D (at altitude 1); the counting sequences force
this.  Three path classes: plain (no C), cat0 (C at altitude 0 only),
cat (C anywhere).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

TOKENS = "UFDC"


class InvalidPath(ValueError):
    pass


class UnknownToken(InvalidPath):
    pass


class NegativeAltitude(InvalidPath):
    pass


class ForbiddenCatastrophe(InvalidPath):
    pass


class NonzeroFinalAltitude(InvalidPath):
    pass


class Mode(str, Enum):
    PLAIN = "plain"
    CAT0 = "cat0"
    CAT = "cat"

    def allows_catastrophe(self, altitude: int) -> bool:
        if self is Mode.PLAIN:
            return False
        if self is Mode.CAT0:
            return altitude == 0
        return True


@dataclass(frozen=True)
class PathStats:
    up: int
    flat: int
    down: int
    catastrophes: int
    catastrophe_altitudes: tuple[int, ...]

    @property
    def cumulative_catastrophe_size(self) -> int:
        return sum(self.catastrophe_altitudes)

    @property
    def high_catastrophe_count(self) -> int:
        return sum(1 for a in self.catastrophe_altitudes if a >= 1)


def validate(tokens: str | Sequence[str], mode: Mode = Mode.CAT) -> PathStats:
    """Check that `tokens` is a valid excursion for `mode`; return its stats."""
    word = "".join(tokens)
    h = 0
    up = flat = down = 0
    cat_alts: list[int] = []
    for i, t in enumerate(word):
        if t == "U":
            up += 1
            h += 1
        elif t == "F":
            flat += 1
        elif t == "D":
            if h == 0:
                raise NegativeAltitude(f"D at altitude 0 (index {i})")
            down += 1
            h -= 1
        elif t == "C":
            if not mode.allows_catastrophe(h):
                raise ForbiddenCatastrophe(
                    f"C at altitude {h} not allowed in mode {mode.value} (index {i})"
                )
            cat_alts.append(h)
            h = 0
        else:
            raise UnknownToken(f"{t!r} at index {i}")
    if h != 0:
        raise NonzeroFinalAltitude(f"final altitude {h}")
    return PathStats(up, flat, down, len(cat_alts), tuple(cat_alts))


def altitude_profile(tokens: str) -> list[int]:
    """Altitudes y_0 .. y_n of a valid catastrophe excursion."""
    ys = [0]
    for t in tokens:
        h = ys[-1]
        ys.append(h + 1 if t == "U" else h if t == "F" else h - 1 if t == "D" else 0)
    return ys


def enumerate_paths(n: int, mode: Mode) -> Iterator[str]:
    """All valid excursions of length n, in lexicographic token order."""
    buf: list[str] = []

    def rec(h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            if h == 0:
                yield "".join(buf)
            return
        if h > remaining and mode is not Mode.CAT:
            return  # cannot come back down in time
        # alphabetical: C < D < F < U
        if mode.allows_catastrophe(h):
            buf.append("C")
            yield from rec(0, remaining - 1)
            buf.pop()
        if h > 0:
            buf.append("D")
            yield from rec(h - 1, remaining - 1)
            buf.pop()
        buf.append("F")
        yield from rec(h, remaining - 1)
        buf.pop()
        buf.append("U")
        yield from rec(h + 1, remaining - 1)
        buf.pop()

    yield from rec(0, n)


def count_table(n: int, mode: Mode) -> tuple[tuple[int, ...], ...]:
    """Forward DP table c[i][h]: meanders of length i ending at altitude h.

    c[n][0] is the excursion count of length n.  Altitudes above i are
    unreachable, so row i is truncated to length i+1.
    """
    rows = [(1,)]
    cur = [1]
    for i in range(n):
        nxt = [0] * (i + 2)
        for h, c in enumerate(cur):
            if not c:
                continue
            nxt[h + 1] += c
            nxt[h] += c
            if h >= 1:
                nxt[h - 1] += c
            if mode.allows_catastrophe(h):
                nxt[0] += c
        cur = nxt
        rows.append(tuple(nxt))
    return tuple(rows)


def excursion_count(n: int, mode: Mode) -> int:
    return excursion_counts(n, mode)[n]


def excursion_counts(nmax: int, mode: Mode) -> list[int]:
    """Excursion counts for every length 0..nmax (two-row forward DP)."""
    cur = [1]
    out = [1]
    for i in range(nmax):
        nxt = [0] * (i + 2)
        for h, c in enumerate(cur):
            if not c:
                continue
            nxt[h + 1] += c
            nxt[h] += c
            if h >= 1:
                nxt[h - 1] += c
            if mode.allows_catastrophe(h):
                nxt[0] += c
        cur = nxt
        out.append(nxt[0])
    return out


def completion_table(n: int, mode: Mode) -> list[list[int]]:
    """Backward table f[i][h]: completions from altitude h after i steps to
    an excursion of length n.  Row i holds altitudes 0..i (the reachable ones)."""
    rows: list[list[int]] = [[] for _ in range(n + 1)]
    rows[n] = [1] + [0] * n if n else [1]
    for i in range(n - 1, -1, -1):
        nxt = rows[i + 1]
        row = []
        for h in range(i + 1):
            v = nxt[h + 1] + nxt[h]
            if h >= 1:
                v += nxt[h - 1]
            if mode.allows_catastrophe(h):
                v += nxt[0]
            row.append(v)
        rows[i] = row
    return rows


def _rng_for(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def sample_uniform(
    n: int, mode: Mode, seed: int, m: int, table: list[list[int]] | None = None
) -> list[str]:
    """m i.i.d. uniform excursions of length n, deterministic in seed.

    Token choices are made with exact integer weights from the completion
    table, so the distribution is exactly uniform.
    """
    f = table if table is not None else completion_table(n, mode)
    out = []
    for j in range(m):
        rng = _rng_for(seed, j)
        h = 0
        toks = []
        for i in range(n):
            nxt = f[i + 1]
            r = rng.randrange(f[i][h])
            w = nxt[h + 1]
            if r < w:
                toks.append("U")
                h += 1
                continue
            r -= w
            w = nxt[h]
            if r < w:
                toks.append("F")
                continue
            r -= w
            if h >= 1:
                w = nxt[h - 1]
                if r < w:
                    toks.append("D")
                    h -= 1
                    continue
                r -= w
            toks.append("C")
            h = 0
        out.append("".join(toks))
    return out


def exact_expectations(n: int, mode: Mode = Mode.CAT) -> dict[str, Fraction]:
    """Exact expectations over uniform length-n excursions.

    Returns E of: cumulative catastrophe size, number of D steps, number of
    catastrophes taken at altitude >= 1.
    """
    # state per altitude: (count, sum of cat sizes, sum of D counts, sum of high cats)
    cur = [(1, 0, 0, 0)]
    for i in range(n):
        nxt = [[0, 0, 0, 0] for _ in range(i + 2)]
        for h, (c, s, x, g) in enumerate(cur):
            if not c:
                continue
            for tgt, ds, dx, dg in ((h + 1, 0, 0, 0), (h, 0, 0, 0)):
                cell = nxt[tgt]
                cell[0] += c
                cell[1] += s + ds
                cell[2] += x + dx
                cell[3] += g + dg
            if h >= 1:
                cell = nxt[h - 1]
                cell[0] += c
                cell[1] += s
                cell[2] += x + c
                cell[3] += g
            if mode.allows_catastrophe(h):
                cell = nxt[0]
                cell[0] += c
                cell[1] += s + h * c
                cell[2] += x
                cell[3] += g + (c if h >= 1 else 0)
        cur = [tuple(cell) for cell in nxt]
    c, s, x, g = cur[0]
    return {
        "catastrophe_total": Fraction(s, c),
        "down_steps": Fraction(x, c),
        "high_catastrophes": Fraction(g, c),
    }


def path_to_json(tokens: str) -> str:
    return json.dumps({"tokens": tokens})


def path_from_json(text: str) -> str:
    text = text.strip()
    if text.startswith("{"):
        return str(json.loads(text)["tokens"])
    return text
