"""``memcost`` command line.

Exit codes: 0 success, 2 validation or ingestion error, 3 degenerate or
under-determined fit, 4 sweep grid over the point cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from memcost import priceperf, report, sweep
from memcost.bundled import BUNDLED_SCENARIOS, load_workloads, scenario_path
from memcost.errors import MemcostError, ValidationError
from memcost.model import require_finite
from memcost.scenario_file import load_scenario

CURVES = ("latency-cost", "bandwidth-cost", "equal-cost", "gain-surface")


def _number(text: str) -> float:
    """Range flag value; ``40%`` means 0.40."""
    t = text.strip()
    try:
        return float(t[:-1]) / 100.0 if t.endswith("%") else float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _resolve_scenario(arg: str) -> Path:
    p = Path(arg)
    if not p.exists() and arg in BUNDLED_SCENARIOS:
        return scenario_path(arg)
    return p


def _read_scenario(arg: str):
    path = _resolve_scenario(arg)
    if not path.exists():
        raise ValidationError([("scenario", arg, "no such file or bundled scenario")])
    return load_scenario(path)


def cmd_fit(args) -> int:
    records = priceperf.read_dataset(args.dataset)
    model = priceperf.fit_price_model(records)
    rms = priceperf.residual_rms(model, records)
    if args.format == "json":
        print(json.dumps({"slope": model.slope, "intercept": model.intercept,
                          "points": len(records), "residual_rms": rms}, sort_keys=True))
    else:
        print(f"slope         {model.slope:.6f} $/rate point")
        print(f"intercept     {model.intercept:.2f} $")
        print(f"points        {len(records)}")
        print(f"residual rms  {rms:.2f} $")
    return 0


def cmd_analyze(args) -> int:
    loaded = _read_scenario(args.scenario)
    doc = report.build_report(loaded)
    for note in doc["notes"]:
        if "exceeds the 0-100%" in note:
            print(f"warning: {note}", file=sys.stderr)
    text = report.report_json(doc) if args.format == "json" else report.report_text(doc)
    if args.json_out:
        Path(args.json_out).write_text(report.report_json(doc), encoding="utf-8")
    sys.stdout.write(text)
    return 0


def cmd_sweep(args) -> int:
    s = _read_scenario(args.scenario).scenario
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", sweep.RangeWarning)
        if args.curve == "bandwidth-cost":
            start = 0.0 if args.start is None else args.start
            stop = 2000.0 if args.stop is None else args.stop
            step = 100.0 if args.step is None else args.step
            if args.unit_cost is not None:
                delta = require_finite("unit_cost", args.unit_cost)
            elif s.fabric is not None:
                delta = max(s.fabric.unit_cost - s.memory.baseline_unit_cost, 0.0)
            else:
                delta = 1.0
            points = sweep.bandwidth_cost_curve(s, delta, start, stop, step)
        else:
            lat = (0.0 if args.start is None else args.start,
                   1.0 if args.stop is None else args.stop,
                   0.05 if args.step is None else args.step)
            if args.curve == "latency-cost":
                points = sweep.latency_cost_curve(s, *lat)
            elif args.curve == "equal-cost":
                points = sweep.equal_cost_curve(s, *lat)
            else:
                points = sweep.gain_surface(s, lat, (args.unit_from, args.unit_to, args.unit_step))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    text = report.curve_csv(args.curve, points)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_workloads(args) -> int:
    table = load_workloads()
    print(f"{'name':<15} {'smt':>3} {'mfp':>6}  {'source':<11} note")
    for e in table.values():
        mfp = "-" if e.mfp is None else f"{e.mfp:.2f}"
        print(f"{e.name:<15} {e.smt_level:>3} {mfp:>6}  {e.source:<11} {e.note}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="memcost",
        description="Cost/performance model for pooled (disaggregated) memory over an optical fabric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit the processor price/throughput line to a CSV dataset")
    p.add_argument("dataset", help="CSV with header model,throughput,price_usd")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("analyze", help="cost breakdown and breakeven fabric cost for a scenario")
    p.add_argument("scenario", help=f"scenario file, or one of {', '.join(BUNDLED_SCENARIOS)}")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--json-out", metavar="PATH", help="also write the JSON report here")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="emit a curve or grid as CSV")
    p.add_argument("scenario")
    p.add_argument("--curve", choices=CURVES, required=True)
    p.add_argument("--from", dest="start", type=_number,
                   help="axis start (latency fraction, or Gbps for bandwidth-cost)")
    p.add_argument("--to", dest="stop", type=_number)
    p.add_argument("--step", type=_number)
    p.add_argument("--unit-cost", type=_number,
                   help="bandwidth-cost: $/Gbps over the electrical baseline")
    p.add_argument("--unit-from", type=_number, default=0.0, help="gain-surface unit-cost axis ($/Gbps)")
    p.add_argument("--unit-to", type=_number, default=2.0)
    p.add_argument("--unit-step", type=_number, default=0.1)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("workloads", help="list the bundled workload MFP table")
    p.set_defaults(func=cmd_workloads)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MemcostError as e:
        if isinstance(e, ValidationError) and len(e.errors) > 1:
            print(f"error: {len(e.errors)} problems", file=sys.stderr)
            for path, value, msg in e.errors:
                print(f"  {path} = {value!r}: {msg}", file=sys.stderr)
        else:
            print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
