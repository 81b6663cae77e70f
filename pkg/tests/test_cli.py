"""Tests for the command-line interface."""

import json

import pytest
from typer.testing import CliRunner

from src.cli import app

runner = CliRunner()


def lines(result) -> list:
    return result.stdout.strip().splitlines()


class TestFacetsCommand:
    """Test the facets command"""

    def test_six(self):
        """Should print five facets in lex order."""
        result = runner.invoke(app, ["facets", "6"])
        assert result.exit_code == 0
        assert lines(result)[0] == "{x1, x3, x5}"
        assert len(lines(result)) == 5

    def test_one(self):
        """Should print the single edge."""
        result = runner.invoke(app, ["facets", "1"])
        assert lines(result) == ["{x1}"]

    def test_json(self):
        """Should emit facets as arrays of integers."""
        result = runner.invoke(app, ["facets", "5", "--format", "json"])
        payload = json.loads(result.stdout)
        assert payload["facets"] == [[1, 3, 5], [1, 4], [2, 4], [2, 5]]
        assert payload["variables"] == ["x1", "x2", "x3", "x4", "x5"]

    def test_csv(self):
        """Should emit one row per facet."""
        result = runner.invoke(app, ["facets", "3", "--format", "csv"])
        assert lines(result) == ["n,offset,facet", "3,0,1 3", "3,0,2"]

    def test_bad_n(self):
        """Should exit 2 for n < 1."""
        result = runner.invoke(app, ["facets", "0"])
        assert result.exit_code == 2


class TestIdealCommand:
    """Test the ideal command"""

    def test_facet(self):
        """Should list F(L_6)."""
        result = runner.invoke(app, ["ideal", "6", "--which", "facet"])
        assert lines(result) == ["x1x3x5", "x1x3x6", "x1x4x6", "x2x4x6", "x2x5"]

    def test_sr(self):
        """Should list the edge ideal of a path on three vertices."""
        result = runner.invoke(app, ["ideal", "3", "--which", "sr"])
        assert lines(result) == ["x1x2", "x2x3"]

    def test_p(self):
        """Should list P_7."""
        result = runner.invoke(app, ["ideal", "7", "--which", "p"])
        assert lines(result) == ["x3x5x7", "x4x6", "x4x7"]

    def test_p_too_small(self):
        """Should reject P_n for n < 5."""
        result = runner.invoke(app, ["ideal", "4", "--which", "p"])
        assert result.exit_code == 2


class TestDecomposeCommand:
    """Test the decompose command"""

    def test_both(self):
        """Should report equality with three components at n = 5."""
        result = runner.invoke(app, ["decompose", "5", "--source", "both"])
        assert result.exit_code == 0
        assert lines(result)[-1] == "equal: yes (3 components)"

    def test_one(self):
        """Should print (x1) for the single edge."""
        result = runner.invoke(app, ["decompose", "1", "--source", "brute-force"])
        assert lines(result) == ["(x1)"]

    def test_named_json(self):
        """Should carry kinds for the six members at n = 6."""
        result = runner.invoke(app, ["decompose", "6", "--source", "closed-form", "--format", "json"])
        members = json.loads(result.stdout)["closed_form"]
        assert len(members) == 6
        assert {m["kind"] for m in members} == {"A", "A'", "B", "B'"}


class TestInvariantsCommand:
    """Test the invariants command"""

    def test_closed_form(self):
        """Should print the closed-form report for n = 6."""
        result = runner.invoke(app, ["invariants", "6", "--format", "json"])
        payload = json.loads(result.stdout)
        assert [payload[k] for k in ("pd", "reg", "depth", "height", "bight")] == [2, 4, 4, 2, 3]
        assert payload["source"] == "closed-form"

    def test_hochster(self):
        """Should compute pd 1 and reg 2 for n = 4."""
        result = runner.invoke(app, ["invariants", "4", "--method", "hochster", "--jobs", "1", "--format", "json"])
        payload = json.loads(result.stdout)
        assert (payload["pd"], payload["reg"]) == (1, 2)
        assert payload["field"] == "QQ"

    def test_height_flag(self):
        """Should report height 2 with a flag at n = 2."""
        result = runner.invoke(app, ["invariants", "2", "--method", "hochster", "--jobs", "1", "--format", "json"])
        payload = json.loads(result.stdout)
        assert payload["height"] == 2
        assert len(payload["flags"]) == 1

    def test_over_limit(self):
        """Should refuse a Hochster sweep above the limit without --force."""
        result = runner.invoke(app, ["invariants", "13", "--method", "hochster"])
        assert result.exit_code == 2

    def test_bad_field(self):
        """Should refuse a composite characteristic."""
        result = runner.invoke(app, ["invariants", "4", "--method", "hochster", "--field", "4", "--jobs", "1"])
        assert result.exit_code == 2


class TestBettiCommand:
    """Test the betti command"""

    def test_json(self):
        """Should emit the table as records."""
        result = runner.invoke(app, ["betti", "4", "--jobs", "1", "--format", "json"])
        payload = json.loads(result.stdout)
        assert payload["betti"] == [{"beta": 3, "i": 0, "j": 2}, {"beta": 2, "i": 1, "j": 3}]

    def test_quotient(self):
        """Should add β_{0,0} in the quotient view."""
        result = runner.invoke(app, ["betti", "4", "--jobs", "1", "--view", "quotient", "--format", "csv"])
        assert lines(result) == ["i,j,beta", "0,0,1", "1,2,3", "2,3,2"]


class TestVerifyCommand:
    """Test the verify command"""

    def test_passes(self):
        """Should exit 0 and emit canonical JSON."""
        result = runner.invoke(app, ["verify", "--max-n", "8", "--checks", "facets,recursion", "--format", "json"])
        assert result.exit_code == 0
        text = result.stdout.rstrip("\n")
        payload = json.loads(text)
        assert payload["passed"] is True
        assert json.dumps(payload, indent=2, sort_keys=True) == text

    def test_deterministic_across_jobs(self):
        """Should produce identical JSON for different worker counts."""
        args = ["verify", "--max-n", "7", "--checks", "invariants,p-ideal", "--format", "json"]
        first = runner.invoke(app, args + ["--jobs", "1"])
        second = runner.invoke(app, args + ["--jobs", "2"])
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    @pytest.mark.slow
    def test_full_run_deterministic_across_jobs(self):
        """Should produce identical JSON for every check up to n = 10 with one and two workers."""
        args = ["verify", "--max-n", "10", "--format", "json"]
        first = runner.invoke(app, args + ["--jobs", "1"])
        second = runner.invoke(app, args + ["--jobs", "2"])
        assert first.exit_code == 0
        assert second.exit_code == 0
        assert first.stdout == second.stdout
        assert json.loads(first.stdout)["passed"] is True

    def test_strict(self):
        """Should exit 1 when the flagged case is promoted."""
        result = runner.invoke(app, ["verify", "--max-n", "3", "--checks", "invariants", "--strict", "--jobs", "1"])
        assert result.exit_code == 1

    def test_unknown_check(self):
        """Should exit 2 for an unknown check name."""
        result = runner.invoke(app, ["verify", "--checks", "bogus"])
        assert result.exit_code == 2
