#!/usr/bin/env python3
"""Print the three headline curves for the bundled workloads on the reference socket.

    python3 scripts/reproduce_curves.py            # tables on stdout
    python3 scripts/reproduce_curves.py --csv out/ # one CSV per curve and workload
"""
import argparse
from dataclasses import replace
from pathlib import Path

from memcost import sweep
from memcost.bundled import load_workloads, scenario_path
from memcost.report import curve_csv
from memcost.scenario_file import load_scenario

MARKS = (0.0, 0.2, 0.4, 0.5, 0.6, 0.8, 1.0)
UNIT_COSTS = (0.25, 0.5, 1.0, 1.5, 2.0)


def workload_scenarios():
    base = load_scenario(scenario_path("rack-scale")).scenario
    for name, entry in load_workloads().items():
        if entry.mfp is None:
            continue
        yield name, replace(base, workload=replace(base.workload, name=name, smt_level=entry.smt_level,
                                                     mfp=entry.mfp))


def at(points, x):
    return next(p for p in points if abs(p.x - x) < 1e-9)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--csv", type=Path, help="write CSV files into this directory")
    args = ap.parse_args()

    scenarios = dict(workload_scenarios())
    latency = {n: sweep.latency_cost_curve(s) for n, s in scenarios.items()}
    equal = {n: sweep.equal_cost_curve(s) for n, s in scenarios.items()}

    head = "workload".ljust(15) + "".join(f"{x:>9.0%}" for x in MARKS)
    print("Cost of latency, $ per socket")
    print(head)
    for n, pts in latency.items():
        print(n.ljust(15) + "".join(f"{at(pts, x).y:>9.2f}" for x in MARKS))

    print("\nBreakeven equivalent fabric cost, $/Gbps")
    print(head)
    for n, pts in equal.items():
        print(n.ljust(15) + "".join(f"{at(pts, x).y:>9.3f}" for x in MARKS))

    lines = sweep.bandwidth_cost_lines(UNIT_COSTS, 0, 1000, 100)
    print("\nCost of bandwidth, $ per socket")
    print("Gbps".ljust(15) + "".join(f"{c:>9.2f}" for c in UNIT_COSTS))
    for i, p in enumerate(lines[UNIT_COSTS[0]]):
        print(f"{p.x:<15.0f}" + "".join(f"{lines[c][i].y:>9.2f}" for c in UNIT_COSTS))

    if args.csv:
        args.csv.mkdir(parents=True, exist_ok=True)
        for n in scenarios:
            (args.csv / f"{n}.latency-cost.csv").write_text(curve_csv("latency-cost", latency[n]))
            (args.csv / f"{n}.equal-cost.csv").write_text(curve_csv("equal-cost", equal[n]))
        for c, pts in lines.items():
            (args.csv / f"bandwidth-cost.{c:g}.csv").write_text(curve_csv("bandwidth-cost", pts))
        print(f"\nCSV written to {args.csv}")


if __name__ == "__main__":
    main()
