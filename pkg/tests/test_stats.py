from fractions import Fraction

import pytest

from polyheap import paths
from polyheap.bijection import phi_inv
from polyheap.paths import Mode
from polyheap.stats import (
    ASYMPTOTICS,
    chi_square_uniform,
    expected_catastrophe_total,
    expected_minimal_dimers,
    expected_se_count,
    growth_check,
    instance_width_bounds,
    width_stats,
)


def test_asymptotic_constants_consistency():
    assert ASYMPTOTICS.growth == Fraction(7, 2)
    assert 1 / ASYMPTOTICS.rho0 == ASYMPTOTICS.growth
    assert (
        ASYMPTOTICS.width_lower
        == ASYMPTOTICS.mu_catastrophe_total + ASYMPTOTICS.mu_minimal_dimers
    )


def test_exact_means_small_n():
    # length 2: six paths, one catastrophe at altitude 1 (UC), one D (UD)
    rep = expected_catastrophe_total(2)
    assert rep.value == Fraction(1, 6)
    rep = expected_se_count(2)
    assert rep.value == Fraction(1, 6)
    rep = expected_minimal_dimers(2)
    assert rep.value == 1 + Fraction(1, 6)


def test_exact_means_converge_at_n1000():
    assert expected_catastrophe_total(1000).relative_deviation < 0.01
    assert expected_se_count(1000).relative_deviation < 0.01
    assert expected_minimal_dimers(1000).relative_deviation < 0.02


def test_growth_check_at_n1000():
    g = growth_check(1000)
    assert abs(g.ratio / 3.5 - 1) < 0.01
    assert abs(g.amplitude / 0.375 - 1) < 0.02
    # trend should approach the targets monotonically in deviation
    devs = [abs(r / 3.5 - 1) for _, r, _ in g.trend]
    assert devs[-1] == min(devs)


def test_instance_width_bounds_exhaustive_small():
    for n in range(8):
        for p in paths.enumerate_paths(n, Mode.CAT):
            ok_lo, ok_hi, detail = instance_width_bounds(phi_inv(p))
            assert ok_lo and ok_hi, detail


def test_width_stats_exhaustive():
    from polyheap.heaps import width

    rep = width_stats(3)
    assert rep.kind == "exhaustive"
    widths = [width(phi_inv(p)) for p in paths.enumerate_paths(2, Mode.CAT)]
    assert rep.value == Fraction(sum(widths), len(widths))
    assert rep.extra["min"] == min(widths)
    assert rep.extra["max"] == max(widths)


def test_width_stats_sampled_reproducible():
    a = width_stats(50, samples=100, seed=5)
    b = width_stats(50, samples=100, seed=5)
    assert a.value == b.value
    assert a.stderr == b.stderr > 0


def test_chi_square_accepts_uniform_and_rejects_skew():
    flat = [1000] * 213
    assert chi_square_uniform(flat)["ok"]
    skew = [1000] * 212 + [3000]
    assert not chi_square_uniform(skew)["ok"]


def test_chi_square_critical_value_reasonable():
    # chi2.ppf(0.999, 212) ~ 285.6; the cube approximation should be close
    res = chi_square_uniform([1000] * 213)
    assert 280 < res["critical"] < 292
