import json
import subprocess
import sys
from pathlib import Path

import pytest

from setchoice.cli import main

from _golden import CASES, GOLDEN_DIR, ROOT, run_cli

INVALID_DIR = Path(__file__).resolve().parent / "data" / "invalid"
SCENARIOS = ROOT / "scenarios"

# same locations the parser-level tests pin down, but observed end to end
EXPECTED_LOCATIONS = {
    "syntax_error.json": "$",
    "empty_universe.json": "universe",
    "duplicate_objective.json": "universe[2]",
    "unknown_objective_offer.json": "alternatives[0].offers[1]",
    "unknown_objective_membership.json": "individuals[0].membership.zz",
    "membership_out_of_range.json": "individuals[0].membership.a",
    "empty_offers.json": "alternatives[0].offers",
    "empty_support.json": "individuals[0].membership",
    "duplicate_alternative_id.json": "alternatives[1].id",
    "duplicate_individual_id.json": "individuals[1].id",
    "membership_and_requires.json": "individuals[0]",
    "token_whitespace.json": "universe[1]",
}


def cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "setchoice", *args],
                          capture_output=True, text=True, check=False)


class TestGolden:
    @pytest.mark.parametrize("golden_name,scenario,args",
                             CASES, ids=[c[0] for c in CASES])
    def test_output_is_byte_identical(self, golden_name, scenario, args):
        expected = (GOLDEN_DIR / golden_name).read_bytes()
        assert run_cli(scenario, args) == expected

    def test_repeated_runs_are_byte_identical(self):
        args = ["evaluate", "--measure", "fuzzy", "--format", "json"]
        assert run_cli("weighted_split.json", args) == run_cli(
            "weighted_split.json", args)


class TestValidateVerb:
    def test_valid_scenario_exits_zero(self):
        proc = cli("validate", str(SCENARIOS / "crisp_pair.json"))
        assert proc.returncode == 0
        assert proc.stdout.startswith("OK")

    @pytest.mark.parametrize("name", sorted(EXPECTED_LOCATIONS))
    def test_invalid_corpus_exits_one_and_names_location(self, name):
        proc = cli("validate", str(INVALID_DIR / name))
        assert proc.returncode == 1, proc.stdout
        assert EXPECTED_LOCATIONS[name] in proc.stdout

    def test_missing_file_exits_one(self):
        proc = cli("validate", str(INVALID_DIR / "no_such_file.json"))
        assert proc.returncode == 1
        assert "cannot read" in proc.stderr


class TestPipelineVerbs:
    def test_evaluate_on_invalid_file_shows_report_only(self):
        proc = cli("evaluate", str(INVALID_DIR / "empty_offers.json"),
                   "--measure", "fuzzy")
        assert proc.returncode == 1
        assert "INVALID" in proc.stdout
        assert "social profile" not in proc.stdout

    def test_cardinal_on_weighted_scenario_fails_cleanly(self):
        proc = cli("evaluate", str(SCENARIOS / "weighted_split.json"),
                   "--measure", "cardinal")
        assert proc.returncode == 1
        assert "crisp" in proc.stderr
        assert "v1" in proc.stderr

    def test_precision_flag(self):
        proc = cli("rank", str(SCENARIOS / "weighted_split.json"),
                   "--measure", "fuzzy", "--format", "csv", "--precision", "3")
        assert proc.returncode == 0
        assert "0.600" in proc.stdout and "0.600000" not in proc.stdout

    def test_json_report_structure(self):
        proc = cli("evaluate", str(SCENARIOS / "crisp_pair.json"),
                   "--measure", "normalized", "--format", "json")
        payload = json.loads(proc.stdout)
        assert payload["social_profile"]["values"] == {"m": "1.000000"}
        assert payload["ranking"][0]["alternatives"] == ["m"]
        assert payload["partition"]["matched"] == ["alpha", "beta", "gamma"]


class TestUsageErrors:
    def test_unknown_measure_exits_two(self):
        proc = cli("utilities", str(SCENARIOS / "crisp_pair.json"),
                   "--measure", "jaccard")
        assert proc.returncode == 2

    def test_missing_measure_exits_two(self):
        proc = cli("evaluate", str(SCENARIOS / "crisp_pair.json"))
        assert proc.returncode == 2

    def test_bad_precision_exits_two(self):
        proc = cli("rank", str(SCENARIOS / "crisp_pair.json"),
                   "--measure", "fuzzy", "--precision", "99")
        assert proc.returncode == 2

    def test_unknown_format_exits_two(self):
        proc = cli("universes", str(SCENARIOS / "crisp_pair.json"),
                   "--format", "xml")
        assert proc.returncode == 2


class TestInProcessEntryPoint:
    def test_main_returns_exit_codes(self, capsys):
        assert main(["universes", str(SCENARIOS / "partial_overlap.json")]) == 0
        out = capsys.readouterr().out
        assert "offered only (1): a" in out
        assert main(["validate", str(INVALID_DIR / "empty_universe.json")]) == 1
