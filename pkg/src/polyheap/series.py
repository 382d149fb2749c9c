"""Exact truncated power series and the generating functions of the model.

Coefficients are `fractions.Fraction`; all arithmetic is exact.  Square
roots are expanded by the quadratic coefficient recurrence, so closed
forms containing radicals like sqrt(1 - 2z - 3z^2) can be compared
coefficient by coefficient with combinatorially built series.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

DEFAULT_ORDER = int(os.environ.get("POLYHEAP_ORDER", "64"))


class SeriesError(ValueError):
    pass


class ZeroConstantTermDivision(SeriesError):
    pass


class BadSqrtConstantTerm(SeriesError):
    pass


def _coerce(values, order=None) -> tuple[Fraction, ...]:
    cs = [Fraction(v) for v in values]
    if order is not None:
        cs = (cs + [Fraction(0)] * order)[:order]
    return tuple(cs)


@dataclass(frozen=True)
class Series:
    """Truncated power series in z; `order` = number of retained powers."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    @staticmethod
    def of(values, order: int | None = None) -> "Series":
        return Series(_coerce(values, order))

    @staticmethod
    def zero(order: int) -> "Series":
        return Series.of([], order)

    @staticmethod
    def one(order: int) -> "Series":
        return Series.of([1], order)

    @staticmethod
    def z(order: int) -> "Series":
        return Series.of([0, 1], order)

    def _zip(self, other: "Series") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        k = self._zip(other)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(k)))

    def __sub__(self, other: "Series") -> "Series":
        k = self._zip(other)
        return Series(tuple(self.coeffs[i] - other.coeffs[i] for i in range(k)))

    def __mul__(self, other: "Series") -> "Series":
        k = self._zip(other)
        out = [Fraction(0)] * k
        for i, a in enumerate(self.coeffs[:k]):
            if not a:
                continue
            for j in range(k - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(tuple(out))

    def scale(self, c) -> "Series":
        c = Fraction(c)
        return Series(tuple(a * c for a in self.coeffs))

    def div(self, other: "Series") -> "Series":
        if not other.coeffs or other.coeffs[0] == 0:
            raise ZeroConstantTermDivision("divisor has zero constant term")
        k = self._zip(other)
        b0 = other.coeffs[0]
        out: list[Fraction] = []
        for n in range(k):
            acc = self.coeffs[n]
            for i in range(n):
                acc -= out[i] * other.coeffs[n - i]
            out.append(acc / b0)
        return Series(tuple(out))

    def sqrt(self) -> "Series":
        if not self.coeffs or self.coeffs[0] != 1:
            raise BadSqrtConstantTerm("sqrt needs constant term 1")
        out = [Fraction(1)]
        for n in range(1, self.order):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc -= out[i] * out[n - i]
            out.append(acc / 2)
        return Series(tuple(out))

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by z^k, keeping the truncation order."""
        return Series((Fraction(0),) * k + self.coeffs[: self.order - k])

    def shift_down(self, k: int = 1) -> "Series":
        """Divide exactly by z^k; the low k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise SeriesError(f"not divisible by z^{k}")
        return Series(self.coeffs[k:])

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[:order])

    def to_json(self) -> str:
        return json.dumps([_frac_str(c) for c in self.coeffs])


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def ps_arith(a: Series, b: Series | None, op: str) -> Series:
    """Dispatcher over the four basic operations {add, mul, div, sqrt}."""
    if op == "sqrt":
        return a.sqrt()
    assert b is not None
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a.div(b)
    raise SeriesError(f"unknown op {op!r}")


@dataclass(frozen=True)
class StepSet:
    """Steps with multiplicities; fixed to the {-1, 0, +1} instance here."""

    steps: tuple[int, ...] = (-1, 0, 1)

    @property
    def max_down(self) -> int:  # c in the kernel-root count
        return -min(self.steps)

    @property
    def max_up(self) -> int:  # d
        return max(self.steps)


MOTZKIN_STEPS = StepSet()


def small_root_u1(order: int) -> Series:
    """Small kernel root: the fixpoint of y <- z (1 + y + y^2).

    Zero constant term; each iteration is exact one order further, so
    `order` iterations pin every retained coefficient.
    """
    y = Series.zero(order)
    one = Series.one(order)
    z = Series.z(order)
    for _ in range(order):
        y = z * (one + y + y * y)
    return y


def _radicand(order: int) -> Series:
    return Series.of([1, -2, -3], order)


def _sqrt_radicand(order: int) -> Series:
    return _radicand(order).sqrt()


def small_root_u1_closed(order: int) -> Series:
    """(1 - z - sqrt(1 - 2z - 3z^2)) / (2z), expanded exactly."""
    num = Series.of([1, -1], order + 1) - _sqrt_radicand(order + 1)
    return num.shift_down(1).scale(Fraction(1, 2))


def series_motzkin_excursions(order: int) -> Series:
    """Motzkin excursion counts 1, 1, 2, 4, 9, 21, ..."""
    return small_root_u1(order + 1).shift_down(1)


def series_motzkin_meanders(order: int) -> Series:
    """Meander counts 1, 2, 5, 13, 35, ... via the closed form
    (1 - 3z - sqrt(1 - 2z - 3z^2)) / (6z^2 - 2z)."""
    num = Series.of([1, -3], order + 1) - _sqrt_radicand(order + 1)
    den = Series.of([-2, 6], order)  # (6z^2 - 2z) / z
    return num.shift_down(1).div(den)


def series_catastrophe_excursions(order: int) -> Series:
    """Excursions with catastrophes: E / (1 - z M); 1, 2, 6, 19, 63, ..."""
    e = series_motzkin_excursions(order)
    m = series_motzkin_meanders(order)
    return e.div(Series.one(order) - m.shift_up(1))


def series_catastrophe_excursions_closed(order: int) -> Series:
    """Kernel-root closed form u1 (1 - 3z) / (z (1 + (u1 - 4) z))."""
    u1 = small_root_u1_closed(order + 1)
    num = (u1 * Series.of([1, -3], order + 1)).shift_down(1)
    den = Series.one(order) + (u1.truncate(order) + Series.of([-4], order)).shift_up(1)
    return num.div(den)


def series_half_pyramids(order: int) -> Series:
    """Strict half-pyramids by dimer count: 0, 1, 1, 2, 4, 9, 21, ..."""
    return series_motzkin_excursions(order).shift_up(1)


def series_half_pyramids_closed(order: int) -> Series:
    """(1 - z - sqrt((1+z)(1-3z))) / (2z); the radicand equals 1 - 2z - 3z^2."""
    rad = (Series.of([1, 1], order + 1) * Series.of([1, -3], order + 1)).sqrt()
    return (Series.of([1, -1], order + 1) - rad).shift_down(1).scale(Fraction(1, 2))


@dataclass(frozen=True)
class BiSeries:
    """Triangular bivariate table: rows[n][j] = coefficient of z^n u^j, j <= n."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def coeff(self, n: int, j: int) -> Fraction:
        row = self.rows[n]
        return row[j] if j < len(row) else Fraction(0)

    def at_u_one(self) -> Series:
        return Series(tuple(sum(row, Fraction(0)) for row in self.rows))

    def to_json(self) -> str:
        return json.dumps([[_frac_str(c) for c in row] for row in self.rows])


def _bi_from_powers(base: Series, order: int) -> BiSeries:
    """sum_{k>=0} u^k base^{k+1}, valid when base has zero constant term."""
    rows = [[Fraction(0)] * (n + 1) for n in range(order)]
    power = base.truncate(order)
    for k in range(order):
        if all(c == 0 for c in power.coeffs):
            break
        for n in range(order):
            c = power[n]
            if c and k <= n:
                rows[n][k] += c
        power = power * base
    return BiSeries(tuple(tuple(row) for row in rows))


def series_pyramids(order: int) -> BiSeries:
    """Strict pyramids: z marks dimers, u marks right width.
    Built as sum_k u^k Q^{k+1} with Q the half-pyramid series."""
    return _bi_from_powers(series_half_pyramids(order), order)


def series_pyramids_at_one_closed(order: int) -> Series:
    """(sqrt((1+z)/(1-3z)) - 1) / 2."""
    rad = Series.of([1, 1], order).div(Series.of([1, -3], order)).sqrt()
    return (rad - Series.one(order)).scale(Fraction(1, 2))


@dataclass(frozen=True)
class TriSeries:
    """Sparse trivariate table: entries[(n, j_u, j_t)] = coefficient of
    z^n u^j_u t^j_t."""

    order: int
    entries: Mapping[tuple[int, int, int], Fraction] = field(default_factory=dict)

    def coeff(self, n: int, ju: int, jt: int) -> Fraction:
        return self.entries.get((n, ju, jt), Fraction(0))

    def z_coefficient(self, n: int) -> dict[tuple[int, int], Fraction]:
        return {(ju, jt): c for (m, ju, jt), c in self.entries.items() if m == n and c}

    def at_ones(self) -> Series:
        out = [Fraction(0)] * self.order
        for (n, _, _), c in self.entries.items():
            out[n] += c
        return Series(tuple(out))

    def to_json(self) -> str:
        items = sorted((k, v) for k, v in self.entries.items() if v)
        return json.dumps([[list(k), _frac_str(v)] for k, v in items])


def series_stacked(order: int) -> TriSeries:
    """Stacked heaps: z dimers, u right width of the rightmost factor,
    t minimal dimers.  Built as sum_m t^{m+1} P(z,u) P(z,1)^{2m}."""
    p = series_pyramids(order)
    p1 = p.at_u_one()
    p1sq = p1 * p1
    entries: dict[tuple[int, int, int], Fraction] = {}
    weight = Series.one(order)  # P(z,1)^{2m}
    m = 0
    while 2 * m + 1 <= order:
        for n2 in range(order):
            w = weight[n2]
            if not w:
                continue
            for n1 in range(order - n2):
                row = p.rows[n1]
                for ju, c in enumerate(row):
                    if c:
                        key = (n1 + n2, ju, m + 1)
                        entries[key] = entries.get(key, Fraction(0)) + c * w
        weight = weight * p1sq
        m += 1
    return TriSeries(order, entries)


def series_stacked_closed(order: int) -> Series:
    """((1-2z)(1-3z) - (1-4z) sqrt((1-3z)(1+z))) / (2z (2 - 7z)).

    Derived by rationalizing P/(1 - P^2) with P = (sqrt((1+z)/(1-3z)) - 1)/2.
    """
    k = order + 1
    rad = (Series.of([1, -3], k) * Series.of([1, 1], k)).sqrt()
    num = Series.of([1, -2], k) * Series.of([1, -3], k) - Series.of([1, -4], k) * rad
    den = Series.of([4, -14], order)  # 2z(2 - 7z) / z
    return num.shift_down(1).div(den)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    mismatch: str | None = None


def _first_mismatch_series(a: Series, b: Series) -> str | None:
    for n in range(min(a.order, b.order)):
        if a[n] != b[n]:
            return f"z^{n}: {a[n]} != {b[n]}"
    return None


def _first_mismatch_bi(a: BiSeries, b: BiSeries) -> str | None:
    for n in range(min(a.order, b.order)):
        for j in range(n + 1):
            if a.coeff(n, j) != b.coeff(n, j):
                return f"z^{n} u^{j}: {a.coeff(n, j)} != {b.coeff(n, j)}"
    return None


def check_identities(
    order: int = 30, overrides: Mapping[str, Series] | None = None
) -> list[IdentityCheck]:
    """Coefficientwise consistency checks between the combinatorial builds
    and the closed forms.  Reports failures instead of raising; `overrides`
    substitutes named series (useful as a negative control)."""
    ov = dict(overrides or {})
    e = ov.get("E", series_motzkin_excursions(order))
    m = ov.get("M", series_motzkin_meanders(order))
    ecat = ov.get("Ecat", series_catastrophe_excursions(order))
    q = ov.get("Q", series_half_pyramids(order))
    p = series_pyramids(order)
    s = series_stacked(order)
    one = Series.one(order)

    out: list[IdentityCheck] = []

    def add(name: str, mismatch: str | None):
        out.append(IdentityCheck(name, mismatch is None, mismatch))

    add("half_pyramids_eq_z_excursions", _first_mismatch_series(q, e.shift_up(1)))
    add(
        "pyramids_eq_catastrophe_factorization",
        _first_mismatch_bi(p, _bi_from_powers(e.shift_up(1), order)),
    )
    add(
        "meanders_eq_last_passage_decomposition",
        _first_mismatch_series(m, e.div(one - e.shift_up(1))),
    )
    add(
        "stacked_diagonal_eq_z_catastrophe_excursions",
        _first_mismatch_series(s.at_ones(), ecat.shift_up(1)),
    )
    add(
        "kernel_root_fixpoint_eq_closed_form",
        _first_mismatch_series(small_root_u1(order), small_root_u1_closed(order)),
    )
    add(
        "half_pyramids_eq_closed_form",
        _first_mismatch_series(q, series_half_pyramids_closed(order)),
    )
    add(
        "pyramids_at_u1_eq_closed_form",
        _first_mismatch_series(p.at_u_one(), series_pyramids_at_one_closed(order)),
    )
    add(
        "stacked_diagonal_eq_closed_form",
        _first_mismatch_series(s.at_ones(), series_stacked_closed(order)),
    )
    add(
        "catastrophe_excursions_eq_kernel_closed_form",
        _first_mismatch_series(ecat, series_catastrophe_excursions_closed(order)),
    )
    return out
