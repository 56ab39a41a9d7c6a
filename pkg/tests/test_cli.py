import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from memcost.bundled import BUNDLED_SCENARIOS
from memcost.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "memcost", "workloads"],
                          capture_output=True, text=True, check=True)
    assert "OLTP" in proc.stdout and "derived" in proc.stdout


class TestFit:

    def _dataset(self, tmp_path, body):
        p = tmp_path / "cpus.csv"
        p.write_text("model,throughput,price_usd\n" + body)
        return p

    def test_synthetic_line(self, tmp_path, capsys):
        body = "".join(f"m{t},{t},{4.85 * t - 324!r}\n" for t in (90, 150, 200, 400, 597))
        code, out, _ = run(["fit", str(self._dataset(tmp_path, body)), "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["slope"] == pytest.approx(4.85, abs=1e-9)
        assert doc["intercept"] == pytest.approx(-324, abs=1e-9)
        assert doc["points"] == 5
        assert doc["residual_rms"] < 1e-9

    def test_text_output(self, tmp_path, capsys):
        code, out, _ = run(["fit", str(self._dataset(tmp_path, "a,100,500\nb,200,700\n"))], capsys)
        assert code == 0
        assert "slope         2.000000" in out
        assert "intercept     300.00" in out

    def test_one_row(self, tmp_path, capsys):
        code, _, err = run(["fit", str(self._dataset(tmp_path, "a,100,500\n"))], capsys)
        assert code == 3
        assert "insufficient data" in err

    def test_conflicting_prices(self, tmp_path, capsys):
        code, _, err = run(["fit", str(self._dataset(tmp_path, "E5-2620v3,250,417\nE5-2620v3,255,420\n"))],
                           capsys)
        assert code == 2
        assert "E5-2620v3" in err

    def test_degenerate(self, tmp_path, capsys):
        code, _, _ = run(["fit", str(self._dataset(tmp_path, "a,100,500\nb,100,600\n"))], capsys)
        assert code == 3

    def test_missing_file(self, tmp_path, capsys):
        code, _, _ = run(["fit", str(tmp_path / "nope.csv")], capsys)
        assert code == 2


class TestAnalyze:

    def test_rack_scale(self, capsys):
        code, out, _ = run(["analyze", "rack-scale", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["breakdown"]["ms"] == 456.0
        assert doc["breakdown"]["cl"] == 155.2
        assert doc["breakeven"]["equivalent_unit_cost"] == 0.653
        assert "$0.70/Gbps" in " ".join(doc["notes"])

    def test_zero_fabric_latency(self, tmp_path, capsys):
        p = tmp_path / "s.ini"
        p.write_text("[latency]\nbase_ns = 75\n")
        code, out, _ = run(["analyze", str(p), "--format", "json"], capsys)
        doc = json.loads(out)
        assert code == 0
        assert doc["breakdown"]["cl"] == 0
        assert doc["breakdown"]["cb"] is None
        assert doc["breakeven"]["equivalent_unit_cost"] == 0.938
        assert "latency.base_ns" not in doc["defaults"]
        assert "memory.price_per_gb_usd" in doc["defaults"]

    def test_text_without_fabric(self, tmp_path, capsys):
        p = tmp_path / "s.ini"
        p.write_text("")
        code, out, _ = run(["analyze", str(p)], capsys)
        assert code == 0
        assert "n/a (no fabric)" in out
        assert "Defaults applied:" in out

    def test_invalid_mfp(self, tmp_path, capsys):
        p = tmp_path / "s.ini"
        p.write_text("[workload]\nname = x\nsmt_level = 1\nmfp = 2\n[latency]\nbase_ns = 0\n")
        code, _, err = run(["analyze", str(p)], capsys)
        assert code == 2
        assert "workload.mfp" in err and "latency.base_ns" in err

    def test_missing_scenario(self, capsys):
        code, _, _ = run(["analyze", "no-such-scenario"], capsys)
        assert code == 2

    def test_warns_outside_window(self, capsys):
        code, _, err = run(["analyze", "row-scale"], capsys)
        assert code == 0
        assert "warning" in err and "133.3%" in err

    @pytest.mark.parametrize("name", BUNDLED_SCENARIOS)
    def test_json_round_trip(self, name, tmp_path, capsys):
        first = tmp_path / "first.json"
        code, out, _ = run(["analyze", name, "--format", "json", "--json-out", str(first)], capsys)
        assert code == 0 and first.read_text() == out
        code, again, _ = run(["analyze", str(first), "--format", "json"], capsys)
        assert code == 0
        assert again == out
        code, text1, _ = run(["analyze", name], capsys)
        code, text2, _ = run(["analyze", str(first)], capsys)
        assert text1 == text2


class TestSweep:

    def test_equal_cost_rack_scale(self, capsys):
        code, out, _ = run(["sweep", "rack-scale", "--curve", "equal-cost",
                            "--from", "0", "--to", "1", "--step", "0.05"], capsys)
        assert code == 0
        assert out.splitlines()[0] == "x,y,feasible,ms,cl,cb,g"
        r = rows(out)
        assert len(r) == 21
        assert r[0]["y"] == "0.938"

    def test_equal_cost_oltp(self, tmp_path, capsys):
        p = tmp_path / "oltp.ini"
        p.write_text("[workload]\nname = OLTP\n")
        code, out, _ = run(["sweep", str(p), "--curve", "equal-cost", "--from", "0%", "--to", "100%"], capsys)
        row = next(r for r in rows(out) if r["x"] == "0.4000")
        assert row["y"] == "0.553"

    def test_latency_cost(self, capsys):
        code, out, _ = run(["sweep", "rack-scale", "--curve", "latency-cost"], capsys)
        r = rows(out)
        assert r[0]["x"] == "0.0000" and r[0]["y"] == "0.00"
        assert r[8]["y"] == "155.20"

    def test_bandwidth_cost(self, capsys):
        code, out, _ = run(["sweep", "rack-scale", "--curve", "bandwidth-cost", "--unit-cost", "1",
                            "--from", "0", "--to", "1088", "--step", "544"], capsys)
        assert code == 0
        assert [(r["x"], r["y"]) for r in rows(out)] == [("0.0", "0.00"), ("544.0", "544.00"),
                                                         ("1088.0", "1088.00")]

    def test_gain_surface(self, tmp_path, capsys):
        out_path = tmp_path / "grid.csv"
        code, out, _ = run(["sweep", "rack-scale", "--curve", "gain-surface", "--from", "0", "--to", "0.4",
                            "--step", "0.4", "--unit-from", "0.1", "--unit-to", "1.5", "--unit-step", "1.4",
                            "--out", str(out_path)], capsys)
        assert code == 0 and out == ""
        r = rows(out_path.read_text())
        assert [(x["x"], x["y"], x["g"]) for x in r] == [
            ("0.0000", "0.100", "456.00"), ("0.0000", "1.500", "-305.60"),
            ("0.4000", "0.100", "300.80"), ("0.4000", "1.500", "-460.80")]

    def test_grid_cap(self, capsys):
        code, _, err = run(["sweep", "rack-scale", "--curve", "gain-surface", "--step", "0.0001",
                            "--unit-step", "0.0001"], capsys)
        assert code == 4 and "cap" in err

    def test_bad_range(self, capsys):
        code, _, _ = run(["sweep", "rack-scale", "--curve", "equal-cost", "--from", "1", "--to", "0"], capsys)
        assert code == 2

    def test_invalid_scenario(self, tmp_path, capsys):
        p = tmp_path / "s.ini"
        p.write_text("[workload]\nmfp = 150%\n")
        code, _, _ = run(["sweep", str(p), "--curve", "equal-cost"], capsys)
        assert code == 2


GOLDEN_RUNS = {
    "analyze.txt": ["analyze", "{name}"],
    "analyze.json": ["analyze", "{name}", "--format", "json"],
    "equal-cost.csv": ["sweep", "{name}", "--curve", "equal-cost", "--from", "0", "--to", "1", "--step", "0.05"],
}


@pytest.mark.golden
@pytest.mark.parametrize("name", BUNDLED_SCENARIOS)
@pytest.mark.parametrize("kind", list(GOLDEN_RUNS))
def test_golden(name, kind, capsys):
    argv = [a.format(name=name) for a in GOLDEN_RUNS[kind]]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    assert first.encode() == (GOLDEN / f"{name}.{kind}").read_bytes()
