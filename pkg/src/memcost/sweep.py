"""Curves and grids over one or two free variables of a scenario.

Axis values are generated from an integer point index (``start + i*step``),
never by accumulating ``step``, so long sweeps do not drift.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from memcost import engine
from memcost.errors import GridCapError, ValidationError
from memcost.model import CostBreakdown, Scenario, require_finite, validate_scenario

MAX_POINTS = 10**6
DEFAULT_LAT_RANGE = (0.0, 1.0, 0.05)

# Tolerance for treating (stop - start)/step as a whole number of steps.
_STEP_EPS = 1e-9


class Axis(str, enum.Enum):
    LAT_INCR = "lat_incr"
    UNIT_COST = "unit_cost"
    BANDWIDTH = "bandwidth"


class RangeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SweepSpec:
    variable: Axis
    start: float
    stop: float
    step: float
    fixed: Optional[Scenario] = None

    def _check(self) -> None:
        start = require_finite("start", self.start)
        stop = require_finite("stop", self.stop)
        step = require_finite("step", self.step)
        errors = []
        if start > stop:
            errors.append(("start", start, f"must be <= stop ({stop:g})"))
        if step <= 0:
            errors.append(("step", step, "must be > 0"))
        if errors:
            raise ValidationError(errors)

    def count(self) -> int:
        self._check()
        span = (self.stop - self.start) / self.step
        nearest = round(span)
        steps = nearest if abs(span - nearest) <= _STEP_EPS * max(1.0, abs(span)) else math.floor(span)
        n = int(steps) + 1
        if n > MAX_POINTS:
            raise GridCapError(f"sweep of {n} points exceeds the cap of {MAX_POINTS}")
        return n

    def values(self) -> List[float]:
        return [min(self.start + i * self.step, self.stop) for i in range(self.count())]


@dataclass(frozen=True)
class CurvePoint:
    x: float
    y: float
    feasible: bool = True
    breakdown: Optional[CostBreakdown] = None


@dataclass(frozen=True)
class SurfacePoint:
    lat_incr: float
    unit_cost: float
    gain_dollars: float
    breakdown: CostBreakdown


def _lat_axis(start, stop, step, fixed) -> List[float]:
    xs = SweepSpec(Axis.LAT_INCR, start, stop, step, fixed).values()
    if xs[0] < 0:
        raise ValidationError([("lat_incr", xs[0], "must be >= 0")])
    if xs[-1] > 1.0:
        warnings.warn(f"latency increase up to {xs[-1]:g} exceeds the 0-1.0 analysis window",
                      RangeWarning, stacklevel=3)
    return xs


def latency_cost_curve(s: Scenario, start: float = 0.0, stop: float = 1.0,
                       step: float = 0.05) -> List[CurvePoint]:
    """CL in dollars as a function of fractional latency increase."""
    validate_scenario(s)
    out = []
    for x in _lat_axis(start, stop, step, s):
        b = engine.analyze(s, lat_incr=x)
        out.append(CurvePoint(x, b.cl_dollars, b.gain_dollars >= 0, b))
    return out


def bandwidth_cost_lines(unit_costs: Sequence[float], start: float, stop: float,
                         step: float) -> Dict[float, List[CurvePoint]]:
    """One line of CB = unit_cost * bandwidth per unit cost, over bandwidth in Gbps."""
    xs = SweepSpec(Axis.BANDWIDTH, start, stop, step).values()
    if xs[0] < 0:
        raise ValidationError([("bandwidth", xs[0], "must be >= 0")])
    return {u: [CurvePoint(x, engine.cost_of_bandwidth(u, x)) for x in xs] for u in unit_costs}


def bandwidth_cost_curve(s: Scenario, unit_cost_delta: float, start: float, stop: float,
                         step: float) -> List[CurvePoint]:
    """Like one line of :func:`bandwidth_cost_lines`, with the scenario's MS and CL attached."""
    validate_scenario(s)
    line = bandwidth_cost_lines([unit_cost_delta], start, stop, step)[unit_cost_delta]
    base = engine.analyze(s)
    out = []
    for pt in line:
        g = engine.net_gain(base.ms_dollars, base.cl_dollars, pt.y)
        b = CostBreakdown(
            ms_dollars=base.ms_dollars,
            cl_dollars=base.cl_dollars,
            cb_dollars=pt.y,
            gain_dollars=g,
            breakeven_delta_unit_cost=base.breakeven_delta_unit_cost,
            breakeven_equivalent_unit_cost=base.breakeven_equivalent_unit_cost,
            lat_incr=base.lat_incr,
        )
        out.append(CurvePoint(pt.x, pt.y, g >= 0, b))
    return out


def equal_cost_curve(s: Scenario, start: float = 0.0, stop: float = 1.0,
                     step: float = 0.05) -> List[CurvePoint]:
    """Breakeven equivalent unit cost ($/Gbps) vs. latency increase.

    Below the curve pooled memory is cheaper. Points where CL exceeds MS are
    kept and flagged ``feasible=False``.
    """
    validate_scenario(s)
    bw = s.processor.mem_bandwidth_gbps
    out = []
    for x in _lat_axis(start, stop, step, s):
        ms = engine.memory_savings(s.memory)
        cl = engine.cost_of_latency(s.workload, x, s.processor, s.pricing)
        be = engine.breakeven_unit_cost(ms, cl, bw, s.memory.baseline_unit_cost)
        b = CostBreakdown(
            ms_dollars=ms,
            cl_dollars=cl,
            cb_dollars=be.cb_budget_dollars,
            gain_dollars=engine.net_gain(ms, cl, be.cb_budget_dollars),
            breakeven_delta_unit_cost=be.delta_unit_cost,
            breakeven_equivalent_unit_cost=be.equivalent_unit_cost,
            lat_incr=x,
        )
        out.append(CurvePoint(x, be.equivalent_unit_cost, be.feasible, b))
    return out


def gain_surface(s: Scenario, lat_range=DEFAULT_LAT_RANGE,
                 unit_range=(0.0, 2.0, 0.1)) -> List[SurfacePoint]:
    """G over a (latency increase, absolute unit cost) grid, row-major by latency."""
    validate_scenario(s)
    lat_spec = SweepSpec(Axis.LAT_INCR, *lat_range, s)
    unit_spec = SweepSpec(Axis.UNIT_COST, *unit_range, s)
    total = lat_spec.count() * unit_spec.count()
    if total > MAX_POINTS:
        raise GridCapError(f"grid of {total} points exceeds the cap of {MAX_POINTS}")
    lats = _lat_axis(*lat_range, s)
    units = unit_spec.values()
    if units[0] < 0:
        raise ValidationError([("unit_cost", units[0], "must be >= 0")])
    out = []
    for x in lats:
        for u in units:
            b = engine.analyze(s, lat_incr=x, unit_cost=u)
            out.append(SurfacePoint(x, u, b.gain_dollars, b))
    return out
