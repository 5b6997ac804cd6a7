import pytest

from voa.models import ConfigError, Outcome, RunConfig
from voa.pipeline import COMMANDS, Verifier


@pytest.fixture(scope="module")
def verifier_l2():
    return Verifier(RunConfig(l=2))


def test_verify_singular(verifier_l2):
    report = verifier_l2.run("verify-singular")
    assert report.outcome is Outcome.PASS
    assert report.payload["term_count"] == 4
    assert report.payload["failures"] == []
    assert set(report.payload["annihilators"].values()) == {"0"}
    assert report.payload["affine_weight"] == report.payload["reflected_weight"]
    assert set(report.payload["lower_piece_dimensions"].values()) == {0}
    assert report.timing_ms is not None


def test_zhu(verifier_l2):
    report = verifier_l2.run("zhu")
    assert report.outcome is Outcome.PASS
    assert report.payload["term_count"] == 4
    assert report.payload["difference"] == "0"
    assert report.payload["computed"] == report.payload["displayed"]


def test_polynomials(verifier_l2):
    report = verifier_l2.run("polynomials")
    assert report.outcome is Outcome.PASS, report.payload["failures"]
    assert report.payload["polynomials"] == report.payload["closed_forms"]
    assert report.payload["dimensions"]["R"] == 8
    assert report.payload["dimensions"]["R0"] == 2
    assert report.payload["span_rank"] == 2


def test_classify(verifier_l2):
    report = verifier_l2.run("classify")
    assert report.outcome is Outcome.PASS
    assert len(report.payload["rows"]) == 4
    assert report.payload["dominant_supports"] == ["{}"]
    assert report.payload["solution_count"] == 4


def test_admissible(verifier_l2):
    report = verifier_l2.run("admissible")
    assert report.outcome is Outcome.PASS
    rows = report.payload["supports"]
    assert [row["support"] for row in rows] == ["{}", "{1}", "{1,2}", "{2}"]
    assert all(row["verdict"] is Outcome.PASS for row in rows)
    pi = report.payload["pi_check"]
    assert pi["outcome"] is Outcome.PASS
    assert sorted(pi["minimal"]) == sorted(pi["expected"])


def test_subset_filter():
    verifier = Verifier(RunConfig(l=2, subset=(1,)))
    assert [row["support"] for row in verifier.run("admissible").payload["supports"]] == ["{1}"]
    assert [row["support"] for row in verifier.run("classify").payload["rows"]] == ["{1}"]


def test_all(verifier_l2):
    report = verifier_l2.run("all")
    assert report.outcome is Outcome.PASS
    assert [s.command for s in report.payload["sections"]] == [c for c in COMMANDS if c != "all"]


def test_unknown_command_and_bad_config(verifier_l2):
    with pytest.raises(KeyError):
        verifier_l2.run("nope")
    with pytest.raises(ConfigError):
        Verifier(RunConfig(l=3))
    with pytest.raises(ConfigError):
        Verifier(RunConfig(l=2, max_m=1))


@pytest.mark.slow
def test_all_l4():
    assert Verifier(RunConfig(l=4)).run("all").outcome is Outcome.PASS
