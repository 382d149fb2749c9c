import pytest

from polyheap import paths
from polyheap.paths import (
    ForbiddenCatastrophe,
    Mode,
    NegativeAltitude,
    NonzeroFinalAltitude,
    UnknownToken,
    altitude_profile,
    completion_table,
    enumerate_paths,
    exact_expectations,
    excursion_count,
    excursion_counts,
    sample_uniform,
    validate,
)
from fractions import Fraction


def test_validate_counts_tokens():
    st = validate("UUFDC", Mode.CAT)
    assert (st.up, st.flat, st.down, st.catastrophes) == (2, 1, 1, 1)
    assert st.catastrophe_altitudes == (1,)
    assert st.cumulative_catastrophe_size == 1
    assert st.high_catastrophe_count == 1


def test_validate_empty_path():
    st = validate("", Mode.PLAIN)
    assert (st.up, st.flat, st.down, st.catastrophes) == (0, 0, 0, 0)


def test_validate_rejects_bad_inputs():
    with pytest.raises(UnknownToken):
        validate("UXD", Mode.CAT)
    with pytest.raises(NegativeAltitude):
        validate("D", Mode.CAT)
    with pytest.raises(NonzeroFinalAltitude):
        validate("U", Mode.CAT)
    with pytest.raises(ForbiddenCatastrophe):
        validate("C", Mode.PLAIN)
    with pytest.raises(ForbiddenCatastrophe):
        validate("UC", Mode.CAT0)
    # ground catastrophe is fine in cat0
    assert validate("C", Mode.CAT0).catastrophes == 1


def test_catastrophe_distinct_from_down_and_flat():
    # C at altitude 1 and D at altitude 1 are different words
    assert validate("UC", Mode.CAT) != validate("UD", Mode.CAT)
    ps = set(enumerate_paths(2, Mode.CAT))
    assert {"UC", "UD", "CC", "CF", "FC", "FF"} == ps


def test_altitude_profile():
    assert altitude_profile("UUFDC") == [0, 1, 2, 2, 1, 0]


ORACLE = {
    Mode.PLAIN: [1, 1, 2, 4, 9, 21, 51, 127],
    Mode.CAT0: [1, 2, 5, 13, 35, 96, 267, 750],
    Mode.CAT: [1, 2, 6, 19, 63, 213, 729, 2513],
}


@pytest.mark.parametrize("mode", list(Mode))
def test_counts_match_golden_sequences(mode):
    assert excursion_counts(7, mode) == ORACLE[mode]


@pytest.mark.parametrize("mode", list(Mode))
def test_enumeration_matches_dp(mode):
    for n in range(9):
        ps = list(enumerate_paths(n, mode))
        assert len(ps) == excursion_count(n, mode)
        assert len(set(ps)) == len(ps)
        assert ps == sorted(ps)  # lexicographic order
        for p in ps:
            validate(p, mode)


def test_mode_nesting():
    for n in range(7):
        plain = set(enumerate_paths(n, Mode.PLAIN))
        cat0 = set(enumerate_paths(n, Mode.CAT0))
        cat = set(enumerate_paths(n, Mode.CAT))
        assert plain <= cat0 <= cat


def test_completion_table_matches_counts():
    f = completion_table(8, Mode.CAT)
    assert f[0][0] == excursion_count(8, Mode.CAT)
    assert all(v >= 0 for row in f for v in row)
    assert f[8][0] == 1 and not any(f[8][1:])


def test_sampler_is_deterministic_and_valid():
    a = sample_uniform(20, Mode.CAT, seed=42, m=25)
    b = sample_uniform(20, Mode.CAT, seed=42, m=25)
    assert a == b
    assert sample_uniform(20, Mode.CAT, seed=43, m=25) != a
    for p in a:
        validate(p, Mode.CAT)


def test_sampler_hits_every_path_eventually():
    # n=2 has 6 paths; 600 samples should see all of them
    seen = set(sample_uniform(2, Mode.CAT, seed=1, m=600))
    assert seen == set(enumerate_paths(2, Mode.CAT))


def test_exact_expectations_small_n_by_hand():
    # length 2: CC CF FC FF UC UD; cat sizes 0,0,0,0,1,0; D counts 0,0,0,0,0,1
    ex = exact_expectations(2)
    assert ex["catastrophe_total"] == Fraction(1, 6)
    assert ex["down_steps"] == Fraction(1, 6)
    assert ex["high_catastrophes"] == Fraction(1, 6)


def test_exact_expectations_match_enumeration():
    for n in range(1, 8):
        ps = list(enumerate_paths(n, Mode.CAT))
        stats = [validate(p, Mode.CAT) for p in ps]
        ex = exact_expectations(n)
        assert ex["catastrophe_total"] == Fraction(
            sum(s.cumulative_catastrophe_size for s in stats), len(ps)
        )
        assert ex["down_steps"] == Fraction(sum(s.down for s in stats), len(ps))
        assert ex["high_catastrophes"] == Fraction(
            sum(s.high_catastrophe_count for s in stats), len(ps)
        )


def test_path_json_roundtrip():
    assert paths.path_from_json(paths.path_to_json("UFDC")) == "UFDC"
    assert paths.path_from_json("UFDC\n") == "UFDC"
