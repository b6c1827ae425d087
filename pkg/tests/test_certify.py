import json
from fractions import Fraction

import pytest

from detorbit import certify
from detorbit.cli import main
from detorbit.forms import det3, from_string, to_string, x


def corrupted_det3():
    # flip the sign of x1 x5 x9
    return det3() - (x(1) * x(5) * x(9)).scale(2)


@pytest.fixture(scope="module")
def default_run():
    return certify.run_all(seed=0, trials=5)


def test_registry_order_and_ids():
    ids = certify.check_ids()
    assert ids[0] == "lemma1.det3.stab_dim"
    assert len(ids) == len(set(ids)) == 20


def test_lemma_coverage():
    lemmas = {lemma for lemma, _ in certify.REGISTRY.values()}
    assert lemmas == {"lemma1", "lemma3", "lemma4", "lemma6", "lemma7", "stabilizer"}


def test_run_check_examples():
    r = certify.run_check("lemma1.det3.stab_dim", seed=123)
    assert (r.status, r.observed, r.lemma) == ("pass", "16", "lemma1")
    assert certify.run_check("lemma4.limit.is_p2", seed=9).status == "pass"
    with pytest.raises(certify.UnknownCheck):
        certify.run_check("nonexistent", seed=0)


def test_run_all_passes(default_run):
    results, summary = default_run
    assert [r.check_id for r in results] == certify.check_ids()
    assert summary == {"total": 20, "passed": 20, "failed": 0, "inconclusive": 0}
    for r in results:
        assert (r.status == "pass") == (r.observed == r.expected)


def test_summary_totals(default_run):
    results, summary = default_run
    assert summary["total"] == len(results)
    assert summary["passed"] + summary["failed"] + summary["inconclusive"] == len(results)


def test_subset_and_unknown():
    results, summary = certify.run_all(checks=["lemma3.nu.p1", "lemma1.p2.orbit_dim"])
    # registry order, not request order
    assert [r.check_id for r in results] == ["lemma1.p2.orbit_dim", "lemma3.nu.p1"]
    with pytest.raises(certify.UnknownCheck):
        certify.run_all(checks=["bogus"])


def test_mutation_is_detected():
    bad = corrupted_det3()
    results, summary = certify.run_all(seed=0, trials=5, det3=bad, checks=[
        "lemma1.det3.stab_dim", "lemma1.det3.orbit_dim", "stab.generators.fix_det3",
        "lemma3.p1.in_phiZ"])
    assert all(r.status == "fail" for r in results)
    assert summary["failed"] == 4
    gen = next(r for r in results if r.check_id == "stab.generators.fix_det3")
    assert gen.witness["first_failure"]["u"]


def test_report_is_exact_and_deterministic():
    a = certify.report_json(*certify.run_all(seed=77, trials=3), seed=77)
    b = certify.report_json(*certify.run_all(seed=77, trials=3), seed=77)
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"tool_version", "seed", "checks", "summary"}
    witness = next(c for c in doc["checks"] if c["check_id"] == "lemma6.tau.witness_b")["witness"]
    value = witness["tau_sym"]
    num, den = value.split("/")
    assert Fraction(int(num), int(den)) != 0
    assert all("/" in v for p in witness["points"] for v in p)


def test_cli_run_all(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["run-all", "--seed", "5", "--trials", "2", "--json", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["seed"] == 5 and doc["summary"]["failed"] == 0
    text = capsys.readouterr().out
    assert "20 passed, 0 failed, 0 inconclusive of 20" in text


def test_cli_determinism(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["run-all", "--seed", "99", "--trials", "2", "--json", str(p),
                     "--check", "lemma6.tau.invariance", "--check", "lemma6.tau.witness_b"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_cli_corrupted_fixture_exits_one(tmp_path):
    fixture = tmp_path / "det3.txt"
    fixture.write_text(to_string(corrupted_det3()))
    rc = main(["run-all", "--det3", str(fixture), "--check", "lemma1.det3.stab_dim",
               "--check", "stab.generators.fix_det3", "--trials", "3"])
    assert rc == 1


def test_cli_fixture_round_trip(tmp_path, capsys):
    assert main(["show-form", "det3"]) == 0
    text = capsys.readouterr().out
    assert from_string(text) == det3()
    fixture = tmp_path / "det3.txt"
    fixture.write_text(text)
    assert main(["run-all", "--det3", str(fixture), "--check", "lemma1.det3.stab_dim"]) == 0


@pytest.mark.parametrize("argv", [
    ["run-all", "--check", "nonexistent"],
    ["run-all", "--seed", "-1"],
    ["run-all", "--seed", str(2**64)],
    ["run-all", "--trials", "0"],
    ["frobnicate"],
    [],
])
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_cli_bad_fixture(tmp_path):
    fixture = tmp_path / "bad.txt"
    fixture.write_text("1/1 x1^1\n")
    assert main(["run-all", "--det3", str(fixture)]) == 2


def test_cli_list_checks(capsys):
    assert main(["list-checks"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [ln.split("\t")[0] for ln in lines] == certify.check_ids()


def test_cli_max_seed_accepted():
    assert main(["run-all", "--seed", str(2**64 - 1), "--check", "lemma6.destab.b1"]) == 0
