from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from semigroup_diffops import NumericalSemigroup, Report, build_report, build_sigma
from semigroup_diffops.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_three_five(self, capsys):
        code, out, _ = run(capsys, "analyze", "3", "5", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert len(data["sigma"]["t_sigma"]) == 8
        assert data["sigma"]["mu"] == 13
        assert data["semigroup"]["gaps"] == [1, 2, 4, 7]

    def test_naturals(self, capsys):
        code, out, _ = run(capsys, "analyze", "1")
        assert code == 0 and "S = <1>" in out and "T(Sigma)" not in out

    def test_chain(self, capsys):
        code, out, _ = run(capsys, "analyze", "4", "6", "9", "11", "--blowup-chain", "--json")
        chain = json.loads(out)["blowup_chain"]
        assert [c["semigroup"] for c in chain] == [[4, 6, 9, 11], [2, 5], [2, 3], [1]]
        assert [c.get("next_adds_t_sigma") for c in chain] == [True, True, True, None]

    def test_full_text(self, capsys):
        code, out, _ = run(capsys, "analyze", "3", "5", "--blowup-chain", "--operators", "--overrings", "--verify")
        assert code == 0
        assert "overrings: 5, ideal classes: 7, not bijective" in out
        assert "verified: sigma, blowup, operators" in out

    def test_bad_input(self, capsys):
        code, _, err = run(capsys, "analyze", "4", "6")
        assert code == 2 and "gcd" in err
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "x"])
        assert exc.value.code == 2

    def test_invariant_violation_exit_code(self, capsys, monkeypatch):
        import semigroup_diffops.report as report

        monkeypatch.setattr(report, "run_verification", lambda *a, **k: ["forced mismatch"])
        code, _, err = run(capsys, "analyze", "3", "5", "--verify")
        assert code == 1 and "forced mismatch" in err


class TestReport:
    @pytest.mark.parametrize("gens", [[3, 5], [1], [4, 6, 9, 11], [3, 4, 5]])
    def test_roundtrip(self, gens):
        r = build_report(gens, blowup_chain=True, operators=True, overrings=True, ideal_points=[(4, 4)])
        text = r.to_json()
        assert Report.from_json(text) == r
        assert Report.from_json(text).to_json() == text

    def test_reproducible(self):
        a = build_report([3, 5], operators=True).to_json()
        assert build_report([3, 5], operators=True).to_json() == a
        # redundant input only changes the echoed (sorted) generators
        b = build_report([5, 3, 8], operators=True)
        assert b.generators == [3, 5, 8]
        assert b.sigma == Report.from_json(a).sigma
        assert b.operators == Report.from_json(a).operators

    def test_rejects_other_schema(self):
        data = json.loads(build_report([3, 5]).to_json())
        data["schema"] = 2
        with pytest.raises(ValueError):
            Report.from_dict(data)
        data["schema"] = 1
        data["extra"] = 0
        with pytest.raises(ValueError):
            Report.from_dict(data)

    def test_mu_consistency(self):
        r = build_report([4, 6, 9, 11])
        s = r.sigma
        assert s["mu"] == 2 * s["nu"] + 1 + 2 * s["delta"]


class TestOperators:
    def test_two_five(self, capsys):
        code, out, _ = run(capsys, "operators", "2", "5")
        assert code == 0 and "9 generators" in out
        assert "y^2      <-  d^2 - 4 t^-1 d" in out

    def test_counts(self, capsys):
        code, out, _ = run(capsys, "operators", "3", "4", "5", "--json")
        assert len(json.loads(out)["operators"]) == 11
        code, out, _ = run(capsys, "operators", "1", "--json")
        assert {r["operator"] for r in json.loads(out)["operators"]} == {"t", "d"}

    def test_check_and_unicode(self, capsys):
        code, out, _ = run(capsys, "operators", "2", "5", "--unicode", "--check", "t^2 d", "--check", "t^4 d")
        assert "∂² - 4t⁻¹∂" in out
        assert "t²∂ does not preserve C[S]" in out
        assert "t⁴∂ preserves C[S]" in out

    def test_bad_operator(self, capsys):
        code, _, err = run(capsys, "operators", "2", "5", "--check", "q")
        assert code == 2 and "cannot parse" in err


class TestDecompose:
    def test_three_five(self, capsys):
        code, out, _ = run(capsys, "decompose", "3", "5", "--", "4,3")
        assert code == 0 and "10 irreducible components" in out

    def test_json_and_flags_after_points(self, capsys):
        code, out, _ = run(capsys, "decompose", "2", "5", "--", "1,1", "--json", "--verify", "--box", "20")
        data = json.loads(out)
        values = sorted(c["value"] for c in data["components"] if c["kind"] == "complement_of_divisors")
        assert values == [[1, 4], [2, 3], [3, 2], [4, 1]]
        assert data["verified_box"] == 20

    def test_point_option(self, capsys):
        code, out, _ = run(capsys, "decompose", "3", "5", "--point", "(4,3)")
        assert code == 0

    def test_errors(self, capsys):
        assert run(capsys, "decompose", "3", "5", "--", "1,0")[0] == 2
        assert run(capsys, "decompose", "3", "5", "--", "0,0")[0] == 2
        assert run(capsys, "decompose", "3", "5")[0] == 2
        assert run(capsys, "sigma", "3", "5", "--", "4,3")[0] == 2
        assert run(capsys, "decompose", "3", "5", "--box", "0", "--", "4,3")[0] == 2


class TestOverrings:
    def test_three_four_five(self, capsys):
        code, out, _ = run(capsys, "overrings", "3", "4", "5")
        assert "3 overrings, 4 ideal classes, not bijective" in out
        assert "(not stable)" in out

    def test_two_nine(self, capsys):
        code, out, _ = run(capsys, "overrings", "2", "9", "--json")
        data = json.loads(out)
        assert data["overring_count"] == data["class_count"] == 5 and data["bijective"]

    def test_naturals(self, capsys):
        code, out, _ = run(capsys, "overrings", "1", "--json")
        assert len(json.loads(out)["fibers"]) == 1


class TestStaircase:
    def test_two_five_text(self, capsys):
        code, out, _ = run(capsys, "staircase", "2", "5", "--width", "10", "--height", "10")
        rows = out.splitlines()
        assert len(rows) == 10
        cells = "".join(r[4:] for r in rows)
        assert cells.count("#") == 100 - 6
        assert cells.count("T") == 4

    def test_grid_matches_gaps(self, capsys):
        sigma = build_sigma(NumericalSemigroup.from_generators([3, 5]))
        code, out, _ = run(capsys, "staircase", "3", "5", "--width", "9", "--height", "7")
        rows = out.splitlines()
        drawn = {(a, 6 - i) for i, r in enumerate(rows) for a, ch in enumerate(r[4:]) if ch != "#"}
        assert drawn == {p for p in sigma.gaps if p.a < 9 and p.b < 7}

    def test_naturals(self, capsys):
        code, out, _ = run(capsys, "staircase", "1", "--width", "4", "--height", "3")
        assert all(r[4:] == "####" for r in out.splitlines())

    def test_svg(self, capsys):
        code, out, _ = run(capsys, "staircase", "2", "5", "--svg", "--width", "6", "--height", "5")
        root = ET.fromstring(out)
        rects = [e for e in root if e.tag.endswith("rect")]
        assert len(rects) == 30
        assert sum(r.get("class") != "member" for r in rects) == 6

    def test_bad_size(self, capsys):
        assert run(capsys, "staircase", "2", "5", "--width", "0")[0] == 2
        assert run(capsys, "staircase", "2", "5", "--height", "-1")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "semigroup_diffops.cli", "sigma", "2", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "T(Sigma): (0,3), (1,2), (2,1), (3,0)" in proc.stdout
