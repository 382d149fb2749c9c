"""Exact and sampled statistics of catastrophe excursions and their heaps.

The exact estimators run the counting DP with carried sums; the sampled
estimators push uniform paths through the path-to-heap map.  Asymptotic
constants are kept as exact rationals and only compared against finite-n
trends with explicit tolerance windows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import NormalDist
from typing import Optional

from . import paths
from .bijection import phi, phi_inv
from .heaps import Heap, SizeTooLarge, pyramidal_factors, width
from .paths import Mode


@dataclass(frozen=True)
class AsymptoticConstants:
    rho: Fraction = Fraction(1)  # plain-path singularity
    rho0: Fraction = Fraction(2, 7)  # catastrophe singularity
    growth: Fraction = Fraction(7, 2)
    amplitude: Fraction = Fraction(3, 8)
    mu_catastrophe_total: Fraction = Fraction(3, 14)
    mu_down_steps: Fraction = Fraction(1, 7)
    mu_minimal_dimers: Fraction = Fraction(3, 28)
    width_lower: Fraction = Fraction(9, 28)
    width_upper: Fraction = Fraction(6, 7)

    def __post_init__(self):
        assert self.rho0 < self.rho
        assert self.width_lower == self.mu_catastrophe_total + self.mu_minimal_dimers


ASYMPTOTICS = AsymptoticConstants()


@dataclass(frozen=True)
class StatReport:
    name: str
    n: int
    kind: str  # "exact-dp" | "exhaustive" | "sampled(seed=..,m=..)"
    value: Fraction | float
    normalized: Fraction | float
    target: Optional[Fraction] = None
    relative_deviation: Optional[float] = None
    stderr: Optional[float] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def conv(v):
            return float(v) if isinstance(v, Fraction) else v

        d = {
            "name": self.name,
            "n": self.n,
            "kind": self.kind,
            "value": conv(self.value),
            "normalized": conv(self.normalized),
        }
        if self.target is not None:
            d["target"] = conv(self.target)
            d["relative_deviation"] = self.relative_deviation
        if self.stderr is not None:
            d["stderr"] = self.stderr
        d.update(self.extra)
        return d


def _exact_report(name: str, n: int, value: Fraction, normalized: Fraction, target: Fraction, **extra) -> StatReport:
    rel = abs(float(normalized) / float(target) - 1.0) if target else float("nan")
    return StatReport(name, n, "exact-dp", value, normalized, target, rel, extra=extra)


def expected_catastrophe_total(n: int) -> StatReport:
    """E of the summed catastrophe altitudes over uniform length-n excursions."""
    value = paths.exact_expectations(n)["catastrophe_total"]
    return _exact_report(
        "catastrophe_total", n, value, value / n, ASYMPTOTICS.mu_catastrophe_total
    )


def expected_se_count(n: int) -> StatReport:
    value = paths.exact_expectations(n)["down_steps"]
    return _exact_report("down_steps", n, value, value / n, ASYMPTOTICS.mu_down_steps)


def expected_minimal_dimers(n: int) -> StatReport:
    """Expected minimal-dimer count of the size-(n+1) heap image: one more
    than the expected number of high catastrophes."""
    high = paths.exact_expectations(n)["high_catastrophes"] if n else Fraction(0)
    value = high + 1
    normalized = high / n if n else Fraction(0)
    return _exact_report(
        "minimal_dimers", n, value, normalized, ASYMPTOTICS.mu_minimal_dimers
    )


def width_stats(
    n: int,
    *,
    samples: Optional[int] = None,
    seed: int = 0,
    exhaustive_max: int = 9,
) -> StatReport:
    """Width of uniform stacked heaps of size n (paths of length n-1).

    Exhaustive for n <= exhaustive_max, else sampled with `samples` draws.
    """
    if n < 1:
        raise ValueError("heap size must be >= 1")
    if samples is None:
        if n > exhaustive_max:
            raise SizeTooLarge(f"exhaustive width stats limited to size {exhaustive_max}")
        widths = [width(phi_inv(p)) for p in paths.enumerate_paths(n - 1, Mode.CAT)]
        kind = "exhaustive"
        stderr = None
    else:
        drawn = paths.sample_uniform(n - 1, Mode.CAT, seed, samples)
        widths = [width(phi_inv(p)) for p in drawn]
        kind = f"sampled(seed={seed},m={samples})"
        stderr = _stderr(widths)
    mean: Fraction | float = Fraction(sum(widths), len(widths))
    lo = float(ASYMPTOTICS.width_lower)
    hi = float(ASYMPTOTICS.width_upper)
    return StatReport(
        "width",
        n,
        kind,
        mean,
        mean / n,
        None,
        None,
        stderr,
        extra={
            "min": min(widths),
            "max": max(widths),
            "interval_per_n": [lo, hi],
            "interval_note": "lower bound read as (9/28)n; the (9/(28n)) rendering is a typo",
        },
    )


def _stderr(xs: list[int]) -> float:
    m = sum(xs) / len(xs)
    var = sum((x - m) ** 2 for x in xs) / (len(xs) - 1)
    return math.sqrt(var / len(xs))


@dataclass(frozen=True)
class GrowthReport:
    nmax: int
    ratio: float
    amplitude: float
    ratio_target: float = 3.5
    amplitude_target: float = 0.375
    trend: tuple[tuple[int, float, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "nmax": self.nmax,
            "ratio": self.ratio,
            "ratio_target": self.ratio_target,
            "amplitude": self.amplitude,
            "amplitude_target": self.amplitude_target,
            "trend": [list(t) for t in self.trend],
        }


def growth_check(nmax: int) -> GrowthReport:
    """a(n)/a(n-1) vs 7/2 and a(n) (2/7)^n vs 3/8 for the catastrophe counts."""
    counts = paths.excursion_counts(nmax, Mode.CAT)

    def amp(n: int) -> float:
        return float(Fraction(counts[n] * 2**n, 7**n))

    trend = tuple(
        (n, counts[n] / counts[n - 1], amp(n))
        for n in sorted({max(1, nmax // 8), nmax // 4, nmax // 2, nmax} - {0})
        if n >= 1
    )
    return GrowthReport(nmax, counts[nmax] / counts[nmax - 1], amp(nmax), trend=trend)


def instance_width_bounds(h: Heap) -> tuple[bool, bool, dict]:
    """Per-instance width bounds for a stacked heap via its path image:
    width >= (sum of gaps) + (factor count) + 1 and
    width <= (path length - D count) + 2."""
    tokens = phi(h)
    stats = paths.validate(tokens, Mode.CAT)
    f = pyramidal_factors(h)
    w = width(h)
    lower = sum(f.gaps) + len(f.factors) + 1
    upper = (len(tokens) - stats.down) + 2
    detail = {
        "width": w,
        "lower": lower,
        "upper": upper,
        "gaps": list(f.gaps),
        "factors": len(f.factors),
        "high_cat_altitudes": [a for a in stats.catastrophe_altitudes if a >= 1],
    }
    return w >= lower, w <= upper, detail


def chi_square_uniform(observed: list[int], significance: float = 1e-3) -> dict:
    """Goodness-of-fit of observed category counts against uniform.

    The critical value uses the Wilson-Hilferty cube approximation, accurate
    to a fraction of a unit at the degrees of freedom used here.
    """
    k = len(observed)
    total = sum(observed)
    expected = total / k
    stat = sum((o - expected) ** 2 for o in observed) / expected
    df = k - 1
    z = NormalDist().inv_cdf(1 - significance)
    critical = df * (1 - 2 / (9 * df) + z * math.sqrt(2 / (9 * df))) ** 3
    return {
        "statistic": stat,
        "df": df,
        "critical": critical,
        "significance": significance,
        "ok": stat <= critical,
    }
