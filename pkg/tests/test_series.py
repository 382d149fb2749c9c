from fractions import Fraction

import pytest

from polyheap import paths
from polyheap.paths import Mode
from polyheap.series import (
    BadSqrtConstantTerm,
    Series,
    ZeroConstantTermDivision,
    check_identities,
    ps_arith,
    series_catastrophe_excursions,
    series_half_pyramids,
    series_motzkin_excursions,
    series_motzkin_meanders,
    series_pyramids,
    series_stacked,
    small_root_u1,
)


def test_series_arithmetic():
    a = Series.of([1, 2, 3], 5)
    b = Series.of([0, 1], 5)
    assert (a + b).coeffs[:3] == (Fraction(1), Fraction(3), Fraction(3))
    assert (a * b).coeffs[:4] == (Fraction(0), Fraction(1), Fraction(2), Fraction(3))
    assert ps_arith(a, b, "mul") == a * b
    # division round trip
    c = Series.of([1, 5, 7, 2], 8)
    assert (a * c).div(c).coeffs == a.truncate(8).coeffs[: (a * c).div(c).order]


def test_division_by_zero_constant_term():
    with pytest.raises(ZeroConstantTermDivision):
        Series.of([1], 4).div(Series.of([0, 1], 4))


def test_sqrt_inverts_square():
    s = Series.of([1, -2, -3], 10)
    r = s.sqrt()
    assert (r * r).coeffs == s.truncate(r.order).coeffs[: r.order]
    with pytest.raises(BadSqrtConstantTerm):
        Series.of([4, 1], 5).sqrt()


def test_small_root_satisfies_kernel_equation():
    u1 = small_root_u1(20)
    z = Series.z(20)
    assert u1.coeffs == (z * (Series.one(20) + u1 + u1 * u1)).coeffs
    assert u1[0] == 0 and u1[1] == 1


GOLDEN = {
    "E": [1, 1, 2, 4, 9, 21, 51, 127],
    "M": [1, 2, 5, 13, 35, 96, 267, 750],
    "Ecat": [1, 2, 6, 19, 63, 213, 729, 2513],
}


def test_golden_prefixes():
    assert [int(c) for c in series_motzkin_excursions(8).coeffs] == GOLDEN["E"]
    assert [int(c) for c in series_motzkin_meanders(8).coeffs] == GOLDEN["M"]
    assert [int(c) for c in series_catastrophe_excursions(8).coeffs] == GOLDEN["Ecat"]


def test_half_pyramids_is_shifted_excursions():
    q = series_half_pyramids(10)
    e = series_motzkin_excursions(10)
    assert q[0] == 0
    assert all(q[n] == e[n - 1] for n in range(1, 10))


def test_pyramid_table_small_coefficients():
    p = series_pyramids(6)
    # size-2 pyramids: right width 0 and 1
    assert [p.coeff(2, j) for j in range(3)] == [1, 1, 0]
    # size-3 pyramids: 2 + 2u + u^2
    assert [p.coeff(3, j) for j in range(4)] == [2, 2, 1, 0]
    assert [int(c) for c in p.at_u_one().coeffs[1:]] == GOLDEN["M"][:5]


def test_pyramid_u_marks_right_width():
    from collections import Counter
    from polyheap.heaps import enumerate_heaps, right_width

    for size in range(1, 7):
        hist = Counter(
            right_width(h) for h in enumerate_heaps(size, strict=True, pyramid=True)
        )
        p = series_pyramids(size + 1)
        for j in range(size + 1):
            assert p.coeff(size, j) == hist.get(j, 0)


def test_stacked_table_small_coefficients():
    s = series_stacked(6)
    # size-2 stacked heaps: t(1 + u)
    assert s.coeff(2, 0, 1) == 1 and s.coeff(2, 1, 1) == 1
    assert s.coeff(2, 0, 2) == 0
    got = [int(c) for c in s.at_ones().coeffs]
    assert got == [0, 1, 2, 6, 19, 63]


def test_stacked_t_marks_minimal_dimers():
    from collections import Counter
    from polyheap.heaps import classify, enumerate_heaps

    for size in range(1, 7):
        hist = Counter(
            classify(h).minimal_count for h in enumerate_heaps(size, stacked=True)
        )
        s = series_stacked(size + 1)
        by_t = Counter()
        for (n, _, jt), c in s.entries.items():
            if n == size:
                by_t[jt] += c
        assert {k: int(v) for k, v in by_t.items() if v} == dict(hist)


def test_check_identities_all_pass():
    assert all(c.ok for c in check_identities(30))
    assert all(c.ok for c in check_identities(2))


def test_check_identities_negative_control():
    q = series_half_pyramids(12)
    corrupted = Series(q.coeffs[:5] + (q.coeffs[5] + 1,) + q.coeffs[6:])
    results = {c.name: c for c in check_identities(12, overrides={"Q": corrupted})}
    bad = results["half_pyramids_eq_z_excursions"]
    assert not bad.ok and "z^5" in bad.mismatch


def test_series_vs_dp_counts():
    dp = paths.excursion_counts(19, Mode.CAT)
    s = series_catastrophe_excursions(20)
    assert [int(c) for c in s.coeffs] == dp


def test_json_coefficients_are_exact_strings():
    import json

    s = series_motzkin_excursions(5)
    assert json.loads(s.to_json()) == ["1", "1", "2", "4", "9"]
