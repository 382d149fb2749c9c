"""Verification suites behind `polyheap verify` and the acceptance tests.

Suites: counts, roundtrip, identities, bounds.  Each check returns a
CheckResult; a suite passes iff every check does.  The heavyweight
finite-n trend checks (exact means at n=1000, sampled widths at n=1001,
sampler calibration) are part of the bounds suite and activate once
max_n >= 1000.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import paths, series, stats
from .animals import (
    Animal,
    animal_to_heap,
    enumerate_directed_animals,
    heap_to_animal,
    is_directed,
)
from .bijection import omega, omega_inv, phi, phi_inv, psi, psi_inv
from .heaps import Heap, classify, enumerate_heaps, pyramidal_factors, right_width, width
from .paths import Mode

MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127]
MEANDERS = [1, 2, 5, 13, 35, 96, 267, 750]
CATASTROPHES = [1, 2, 6, 19, 63, 213, 729, 2513]

DEFAULT_SEED = 20260826


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (
            f" -- {self.detail}" if self.detail else ""
        )


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(ok), detail if not ok else "")


def _first_bad(pairs: Iterable[tuple]) -> str:
    for item in pairs:
        return repr(item)
    return ""


def suite_counts(max_n: int = 9) -> list[CheckResult]:
    out = []
    # DP vs frozen sequences
    for mode, seq in ((Mode.PLAIN, MOTZKIN), (Mode.CAT0, MEANDERS), (Mode.CAT, CATASTROPHES)):
        got = paths.excursion_counts(7, mode)
        out.append(_check(f"dp-counts-{mode.value}", got == seq, f"{got} != {seq}"))
    # enumeration vs DP
    for mode in Mode:
        bad = ""
        for n in range(min(max_n, 12) + 1):
            cnt = sum(1 for _ in paths.enumerate_paths(n, mode))
            if cnt != paths.excursion_count(n, mode):
                bad = f"n={n}: {cnt}"
                break
        out.append(_check(f"enumeration-vs-dp-{mode.value}", not bad, bad))
    # series vs DP, order 30
    for mode, ser in (
        (Mode.PLAIN, series.series_motzkin_excursions(30)),
        (Mode.CAT, series.series_catastrophe_excursions(30)),
    ):
        dp = paths.excursion_counts(29, mode)
        bad = _first_bad(
            (n, ser[n], dp[n]) for n in range(30) if ser[n] != dp[n]
        )
        out.append(_check(f"series-vs-dp-{mode.value}", not bad, bad))
    pyr = series.series_pyramids(30).at_u_one()
    dp0 = paths.excursion_counts(29, Mode.CAT0)
    bad = _first_bad((n, pyr[n], dp0[n - 1]) for n in range(1, 30) if pyr[n] != dp0[n - 1])
    out.append(_check("series-pyramids-vs-dp-cat0", not bad, bad))
    # heap oracle vs DP (size n+1 <-> length n)
    for name, flags, mode in (
        ("half-pyramids", dict(strict=True, half_pyramid=True), Mode.PLAIN),
        ("pyramids", dict(strict=True, pyramid=True), Mode.CAT0),
        ("stacked", dict(stacked=True), Mode.CAT),
    ):
        bad = ""
        for size in range(1, min(max_n, 8) + 1):
            cnt = sum(1 for _ in enumerate_heaps(size, **flags))
            want = paths.excursion_count(size - 1, mode)
            if cnt != want:
                bad = f"size={size}: {cnt} != {want}"
                break
        out.append(_check(f"heap-oracle-{name}", not bad, bad))
    # directed animals
    bad = ""
    for size in range(1, min(max_n, 8) + 1):
        cnt = sum(1 for _ in enumerate_directed_animals(size))
        if cnt != MEANDERS[size - 1]:
            bad = f"size={size}: {cnt}"
            break
    out.append(_check("directed-animal-counts", not bad, bad))
    return out


def suite_roundtrip(max_n: int = 9) -> list[CheckResult]:
    out = []
    # heap side: stacked heaps of size <= min(max_n, 9)
    bad = ""
    for size in range(1, min(max_n, 9) + 1):
        for h in enumerate_heaps(size, stacked=True):
            tokens = phi(h)
            paths.validate(tokens, Mode.CAT)
            if len(tokens) != size - 1 or phi_inv(tokens) != h:
                bad = f"size={size}: {h!r} -> {tokens!r}"
                break
        if bad:
            break
    out.append(_check("phi-roundtrip-on-heaps", not bad, bad))
    # path side: cat excursions of length <= min(max_n + 1, 10)
    bad = ""
    transport_bad = ""
    for n in range(min(max_n + 1, 10) + 1):
        for tokens in paths.enumerate_paths(n, Mode.CAT):
            h = phi_inv(tokens)
            flags = classify(h)
            if not flags.stacked or len(h) != n + 1 or phi(h) != tokens:
                bad = f"{tokens!r} -> {h!r}"
                break
            if not transport_bad:
                st = paths.validate(tokens, Mode.CAT)
                f = pyramidal_factors(h)
                high = [a for a in st.catastrophe_altitudes if a >= 1]
                if (
                    st.high_catastrophe_count + 1 != flags.minimal_count
                    or tuple(high[::-1]) != f.gaps
                ):
                    transport_bad = f"{tokens!r}: stats vs factors"
        if bad:
            break
    out.append(_check("phi-roundtrip-on-paths", not bad, bad))
    out.append(_check("statistic-transport", not transport_bad, transport_bad))
    # restriction coherence + psi C-count = right width
    bad = ""
    for size in range(1, min(max_n, 8) + 1):
        for h in enumerate_heaps(size, strict=True, pyramid=True):
            flags = classify(h)
            tokens = psi(h)
            if phi(h) != tokens or tokens.count("C") != right_width(h):
                bad = f"{h!r}"
                break
            if flags.half_pyramid and omega(h) != tokens:
                bad = f"{h!r} (omega)"
                break
        if bad:
            break
    out.append(_check("restriction-coherence", not bad, bad))
    bad = ""
    for n in range(min(max_n, 9) + 1):
        for tokens in paths.enumerate_paths(n, Mode.PLAIN):
            if not (omega_inv(tokens) == psi_inv(tokens) == phi_inv(tokens)):
                bad = repr(tokens)
                break
        if bad:
            break
    out.append(_check("inverse-restriction-coherence", not bad, bad))
    return out


def suite_identities(order: int = 30) -> list[CheckResult]:
    out = [
        _check(f"identity-{c.name}", c.ok, c.mismatch or "")
        for c in series.check_identities(order)
    ]
    e = series.series_motzkin_excursions(order)
    bad = _first_bad(
        (n, e[n])
        for n in range(order)
        if e[n].denominator != 1 or e[n] < 0
    )
    out.append(_check("series-integrality", not bad, bad))
    u1 = series.small_root_u1(order)
    z = series.Series.z(order)
    one = series.Series.one(order)
    fix = z * (one + u1 + u1 * u1)
    out.append(
        _check(
            "kernel-root-fixpoint-equation",
            u1.coeffs == fix.coeffs,
            "u1 != z(1 + u1 + u1^2)",
        )
    )
    return out


def suite_bounds(max_n: int = 10, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out = []
    bad = ""
    for size in range(1, min(max_n, 10) + 1):
        for p in paths.enumerate_paths(size - 1, Mode.CAT):
            h = phi_inv(p)
            ok_lo, ok_hi, detail = stats.instance_width_bounds(h)
            if not (ok_lo and ok_hi):
                bad = f"size={size}: {p!r} {detail}"
                break
        if bad:
            break
    out.append(_check("instance-width-bounds", not bad, bad))
    if max_n >= 1000:
        out.extend(deep_checks(seed=seed))
    return out


def deep_checks(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Finite-n trend checks at n=1000/1001 plus sampler calibration."""
    out = []
    rep = stats.expected_catastrophe_total(1000)
    out.append(
        _check(
            "mean-catastrophe-total-n1000",
            rep.relative_deviation <= 0.01,
            f"deviation {rep.relative_deviation:.4f}",
        )
    )
    rep = stats.expected_se_count(1000)
    out.append(
        _check(
            "mean-down-steps-n1000",
            rep.relative_deviation <= 0.01,
            f"deviation {rep.relative_deviation:.4f}",
        )
    )
    rep = stats.expected_minimal_dimers(1000)
    out.append(
        _check(
            "mean-minimal-dimers-n1000",
            rep.relative_deviation <= 0.02,
            f"deviation {rep.relative_deviation:.4f}",
        )
    )
    g = stats.growth_check(1000)
    out.append(
        _check(
            "growth-ratio-n1000",
            abs(g.ratio / g.ratio_target - 1) <= 0.01,
            f"ratio {g.ratio:.5f}",
        )
    )
    out.append(
        _check(
            "growth-amplitude-n1000",
            abs(g.amplitude / g.amplitude_target - 1) <= 0.02,
            f"amplitude {g.amplitude:.5f}",
        )
    )
    rep = stats.width_stats(1001, samples=2000, seed=seed)
    lo, hi = rep.extra["interval_per_n"]
    mean_per_n = float(rep.normalized)
    se_per_n = rep.stderr / rep.n
    out.append(
        _check(
            "sampled-width-n1001",
            lo + 3 * se_per_n < mean_per_n < hi - 3 * se_per_n,
            f"mean/n {mean_per_n:.4f}, se/n {se_per_n:.6f}",
        )
    )
    out.append(_check("sampler-calibration-chi2", *_sampler_calibration(seed)))
    out.append(_check("sampler-determinism", *_sampler_determinism(seed)))
    return out


def _sampler_calibration(seed: int) -> tuple[bool, str]:
    # 213 excursions of length 5 (size-6 heap images), 1000 samples each
    universe = list(paths.enumerate_paths(5, Mode.CAT))
    assert len(universe) == 213
    index = {p: i for i, p in enumerate(universe)}
    m = 213_000
    table = paths.completion_table(5, Mode.CAT)
    counts = [0] * len(universe)
    for p in paths.sample_uniform(5, Mode.CAT, seed, m, table=table):
        counts[index[p]] += 1
    res = stats.chi_square_uniform(counts, significance=1e-3)
    return res["ok"], f"chi2 {res['statistic']:.1f} vs critical {res['critical']:.1f}"


def _sampler_determinism(seed: int) -> tuple[bool, str]:
    a = paths.sample_uniform(40, Mode.CAT, seed, 50)
    b = paths.sample_uniform(40, Mode.CAT, seed, 50)
    detail = "reproducible" if a == b else "same seed produced different samples"
    return a == b, detail


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "counts": lambda max_n, seed: suite_counts(max_n),
    "roundtrip": lambda max_n, seed: suite_roundtrip(max_n),
    "identities": lambda max_n, seed: suite_identities(max(30, min(max_n, 64))),
    "bounds": lambda max_n, seed: suite_bounds(max_n, seed),
}


def run_suites(which: str, max_n: int, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    names = list(SUITES) if which == "all" else [which]
    results: list[CheckResult] = []
    for name in names:
        results.extend(SUITES[name](max_n, seed))
    return results
