import pytest

from voa.models import ConfigError, Outcome, RunConfig, parse_subset


def test_outcome_combine():
    assert Outcome.combine(Outcome.PASS, Outcome.PASS) is Outcome.PASS
    assert Outcome.combine(Outcome.PASS, Outcome.INCONCLUSIVE) is Outcome.INCONCLUSIVE
    assert Outcome.combine(Outcome.INCONCLUSIVE, Outcome.FAIL) is Outcome.FAIL
    assert Outcome.combine() is Outcome.PASS
    assert Outcome.of(False) is Outcome.FAIL
    assert Outcome.PASS.value == "pass"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"l": 3},
        {"l": 0},
        {"l": 14},
        {"l": 2, "max_m": 51},
        {"l": 2, "max_m": -1},
        {"l": 2, "max_m": 1},
        {"l": 2, "pi_max_m": -1},
        {"l": 2, "subset": (3,)},
        {"l": 2, "subset": (1, 1)},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(**kwargs).validate()


def test_unsafe_large_lifts_caps():
    config = RunConfig(l=14, max_m=60, unsafe_large=True).validate()
    assert config.l == 14


def test_subset_is_sorted_and_exposed_in_params():
    config = RunConfig(l=4, subset=(3, 1)).validate()
    assert config.subset == (1, 3)
    assert config.params() == {"l": 4, "max_m": 50, "subset": [1, 3]}
    assert RunConfig(l=2).params()["subset"] is None


def test_parse_subset():
    assert parse_subset(None) is None
    assert parse_subset("") == ()
    assert parse_subset("{1,3}") == (1, 3)
    assert parse_subset(" 2 ") == (2,)
    with pytest.raises(ConfigError):
        parse_subset("a,b")
