"""Text, JSON and CSV renderings of analysis results.

Numbers are rounded here and only here: dollars to cents, unit costs to
3 decimals, latency to 0.1 ns. Input echoes are written unrounded so that a
JSON report can be fed back in as a scenario.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Optional

from memcost import engine
from memcost.latency import compose_latency
from memcost.model import CostBreakdown
from memcost.scenario_file import DEFAULT, TABLE, LoadedScenario
from memcost.sweep import CurvePoint, SurfacePoint

LAT_WINDOW = 1.0
CSV_COLUMNS = ("x", "y", "feasible", "ms", "cl", "cb", "g")


def fmt(value: float, decimals: int) -> str:
    text = f"{value:.{decimals}f}"
    # "-0.00" would make golden files depend on the sign of rounding noise.
    if text.lstrip("-").strip("0.") == "":
        text = text.lstrip("-")
    return text


def dollars(x: float) -> str:
    return fmt(x, 2)


def unit(x: float) -> str:
    return fmt(x, 3)


def _r(x: float, decimals: int) -> float:
    return float(fmt(x, decimals))


def build_report(loaded: LoadedScenario) -> dict:
    """Analyze a loaded scenario and assemble the report document."""
    s = loaded.scenario
    lat = compose_latency(s.latency)
    b = engine.analyze(s)
    bw = s.processor.mem_bandwidth_gbps
    notes = list(loaded.notes)
    if lat.lat_incr > LAT_WINDOW:
        notes.append(f"latency increase {lat.lat_incr:.1%} exceeds the 0-100% analysis window")
    be = engine.breakeven_unit_cost(b.ms_dollars, b.cl_dollars, bw, s.memory.baseline_unit_cost)
    if not be.feasible:
        notes.append("cost of latency exceeds memory savings: no fabric price reaches parity")
    has_fabric = s.fabric is not None
    return {
        "scenario": loaded.inputs,
        "resolved": loaded.resolved(),
        "defaults": sorted(k for k, v in loaded.provenance.items() if v == DEFAULT),
        "from_workload_table": sorted(k for k, v in loaded.provenance.items() if v == TABLE),
        "latency": {
            "base_ns": _r(s.latency.base_ns, 1),
            "delta_ns": _r(lat.delta_ns, 1),
            "total_ns": _r(lat.total_ns, 1),
            "lat_incr": _r(lat.lat_incr, 4),
        },
        "bandwidth_gbps": _r(bw, 1),
        "breakdown": {
            "ms": _r(b.ms_dollars, 2),
            "cl": _r(b.cl_dollars, 2),
            "cb": _r(b.cb_dollars, 2) if has_fabric else None,
            "g": _r(b.gain_dollars, 2) if has_fabric else None,
            "fabric_unit_cost": _r(s.fabric.unit_cost, 3) if has_fabric else None,
        },
        "breakeven": {
            "cb_budget": _r(be.cb_budget_dollars, 2),
            "delta_unit_cost": _r(be.delta_unit_cost, 3),
            "equivalent_unit_cost": _r(be.equivalent_unit_cost, 3),
            "feasible": be.feasible,
        },
        "notes": notes,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_text(report: dict) -> str:
    res = report["resolved"]
    proc, wl, mem = res["processor"], res["workload"], res["memory"]
    lat, bd, be = report["latency"], report["breakdown"], report["breakeven"]
    lines = [
        "Scenario",
        f"  processor        {proc['name']}: rate {proc['base_throughput']:g}, "
        f"{proc['mem_bandwidth_gbytes_per_s']:g} GB/s ({report['bandwidth_gbps']:.1f} Gbps)",
        f"  workload         {wl['name']}: SMT{wl['smt_level']}, MFP {fmt(wl['mfp'] * 100, 1)}%",
        f"  memory           {mem['capacity_gb_per_socket']:g} GB at ${mem['price_per_gb_usd']:g}/GB, "
        f"{fmt(mem['savings_fraction'] * 100, 1)}% pooled",
        f"  pricing          ${res['pricing']['slope_usd_per_throughput']:g} per rate point, "
        f"intercept ${res['pricing']['intercept_usd']:g}",
        "",
        "Latency",
        f"  base             {fmt(lat['base_ns'], 1):>10} ns",
        f"  added            {fmt(lat['delta_ns'], 1):>10} ns",
        f"  total            {fmt(lat['total_ns'], 1):>10} ns",
        f"  increase         {fmt(lat['lat_incr'] * 100, 1):>10} %",
        "",
        "Cost per socket",
        f"  memory savings   {'$' + dollars(bd['ms']):>10}",
        f"  latency cost     {'$' + dollars(bd['cl']):>10}",
    ]
    if bd["cb"] is None:
        lines += ["  bandwidth cost          n/a (no fabric)",
                  "  net gain                n/a (no fabric)"]
    else:
        lines += [
            f"  bandwidth cost   {'$' + dollars(bd['cb']):>10}   fabric ${unit(bd['fabric_unit_cost'])}/Gbps",
            f"  net gain         {'$' + dollars(bd['g']):>10}",
        ]
    lines += [
        "",
        "Breakeven fabric unit cost",
        f"  budget           {'$' + dollars(be['cb_budget']):>10}",
        f"  over baseline    {'$' + unit(be['delta_unit_cost']):>10} /Gbps",
        f"  equivalent       {'$' + unit(be['equivalent_unit_cost']):>10} /Gbps",
        f"  feasible         {'yes' if be['feasible'] else 'no':>10}",
    ]
    if report["notes"]:
        lines += ["", "Notes"] + [f"  - {n}" for n in report["notes"]]
    if report["from_workload_table"]:
        lines += ["", "From workload table: " + ", ".join(report["from_workload_table"])]
    if report["defaults"]:
        lines += ["", "Defaults applied: " + ", ".join(report["defaults"])]
    return "\n".join(lines) + "\n"


def _row(x: str, y: str, feasible: bool, b: Optional[CostBreakdown]) -> List[str]:
    head = [x, y, "true" if feasible else "false"]
    # Scenario-free points (plain bandwidth lines) leave the breakdown columns empty.
    if b is None:
        return head + [""] * 4
    return head + [dollars(b.ms_dollars), dollars(b.cl_dollars), dollars(b.cb_dollars), dollars(b.gain_dollars)]


def curve_csv(kind: str, points: Iterable) -> str:
    """CSV with columns x,y,feasible,ms,cl,cb,g for any curve kind.

    For ``gain-surface`` x is the latency increase, y the unit cost and g the gain.
    """
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for p in points:
        if kind == "gain-surface":
            assert isinstance(p, SurfacePoint)
            w.writerow(_row(fmt(p.lat_incr, 4), unit(p.unit_cost), p.gain_dollars >= 0, p.breakdown))
            continue
        assert isinstance(p, CurvePoint)
        if kind == "latency-cost":
            w.writerow(_row(fmt(p.x, 4), dollars(p.y), p.feasible, p.breakdown))
        elif kind == "equal-cost":
            w.writerow(_row(fmt(p.x, 4), unit(p.y), p.feasible, p.breakdown))
        elif kind == "bandwidth-cost":
            w.writerow(_row(fmt(p.x, 1), dollars(p.y), p.feasible, p.breakdown))
        else:
            raise ValueError(f"unknown curve kind {kind!r}")
    return out.getvalue()
