"""Cost model: memory savings, cost of latency, cost of bandwidth, net gain.

The net gain of pooling memory over direct attach is

    G = MS - (CL + CB)

where MS is the DRAM value freed by pooling, CL is the price of a faster
processor that recovers the throughput lost to extra latency, and CB is the
fabric's cost over the electrical baseline. Setting G = 0 and dividing the
remaining budget by the socket's memory bandwidth gives the fabric unit cost
($/Gbps) at which both designs cost the same for the same performance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from memcost.errors import ValidationError
from memcost.latency import compose_latency
from memcost.model import (
    CostBreakdown,
    MemoryConfig,
    PricingModel,
    ProcessorConfig,
    Scenario,
    WorkloadProfile,
    require_finite,
    require_nonnegative,
    require_positive,
    validate_scenario,
)


@dataclass(frozen=True)
class BreakevenResult:
    cb_budget_dollars: float
    delta_unit_cost: float
    equivalent_unit_cost: float
    feasible: bool


def mfp_from_measurements(delta_et: float, delta_ml: float) -> float:
    """Memory fraction of performance: relative execution-time increase per relative latency increase."""
    delta_et = require_nonnegative("delta_et", delta_et)
    delta_ml = require_positive("delta_ml", delta_ml)
    return delta_et / delta_ml


def required_throughput(base_throughput: float, mfp: float, lat_incr: float) -> float:
    """Throughput a replacement processor needs to match the old one on direct-attached memory."""
    base_throughput = require_positive("base_throughput", base_throughput)
    mfp = require_nonnegative("mfp", mfp)
    lat_incr = require_nonnegative("lat_incr", lat_incr)
    return (1.0 + mfp * lat_incr) * base_throughput


def cost_of_latency(w: WorkloadProfile, lat_incr: float, p: ProcessorConfig,
                    m: PricingModel) -> float:
    # The intercept cancels in the price difference, so only the slope matters
    # and negative extrapolated prices never leak into CL.
    errors = [*w.violations(), *p.violations(), *m.violations()]
    if errors:
        raise ValidationError(errors)
    lat_incr = require_nonnegative("lat_incr", lat_incr)
    return m.slope * w.mfp * lat_incr * p.base_throughput


def memory_savings(mc: MemoryConfig) -> float:
    errors = list(mc.violations())
    if errors:
        raise ValidationError(errors)
    return mc.capacity_gb_per_socket * mc.price_per_gb * mc.savings_fraction


def cost_of_bandwidth(unit_cost_delta: float, bw_gbps: float) -> float:
    return (require_nonnegative("unit_cost_delta", unit_cost_delta)
            * require_nonnegative("bw_gbps", bw_gbps))


def switch_unit_cost(port_cost: float, link_rate_gbps: float) -> float:
    """Per-Gbps share of a switch port, e.g. $300/port on 100 Gbps links is $3/Gbps."""
    port_cost = require_nonnegative("port_cost", port_cost)
    link_rate_gbps = require_positive("link_rate_gbps", link_rate_gbps)
    return port_cost / link_rate_gbps


def net_gain(ms: float, cl: float, cb: float) -> float:
    return require_finite("ms", ms) - require_finite("cl", cl) - require_finite("cb", cb)


def breakeven_unit_cost(ms: float, cl: float, bw_gbps: float,
                        baseline_unit_cost: float) -> BreakevenResult:
    """Fabric unit cost at which G = 0.

    ``delta_unit_cost`` is the allowance over the electrical link;
    ``equivalent_unit_cost`` adds the baseline back and is the absolute
    $/Gbps a fabric may cost. An infeasible result (CL > MS) is returned,
    not raised.
    """
    budget = require_finite("ms", ms) - require_finite("cl", cl)
    bw_gbps = require_positive("bw_gbps", bw_gbps)
    baseline = require_nonnegative("baseline_unit_cost", baseline_unit_cost)
    delta = budget / bw_gbps
    return BreakevenResult(
        cb_budget_dollars=budget,
        delta_unit_cost=delta,
        equivalent_unit_cost=delta + baseline,
        feasible=budget >= 0,
    )


def fabric_delta_cost(s: Scenario, unit_cost: Optional[float] = None,
                      bw_gbps: Optional[float] = None) -> float:
    """CB for an absolute fabric unit cost (defaults to the scenario's fabric).

    A fabric cheaper than the electrical baseline gives a negative CB.
    """
    if unit_cost is None:
        unit_cost = s.fabric.unit_cost if s.fabric is not None else s.memory.baseline_unit_cost
    unit_cost = require_nonnegative("unit_cost", unit_cost)
    if bw_gbps is None:
        bw_gbps = s.processor.mem_bandwidth_gbps
    bw_gbps = require_nonnegative("bw_gbps", bw_gbps)
    return (unit_cost - s.memory.baseline_unit_cost) * bw_gbps


def analyze(s: Scenario, lat_incr: Optional[float] = None,
            unit_cost: Optional[float] = None) -> CostBreakdown:
    """Full breakdown for a scenario.

    ``lat_incr`` defaults to the scenario's composed latency budget and
    ``unit_cost`` (absolute $/Gbps) to the scenario fabric. With neither a
    fabric nor an explicit unit cost, CB is zero.
    """
    validate_scenario(s)
    if lat_incr is None:
        lat_incr = compose_latency(s.latency).lat_incr
    ms = memory_savings(s.memory)
    cl = cost_of_latency(s.workload, lat_incr, s.processor, s.pricing)
    cb = fabric_delta_cost(s, unit_cost)
    be = breakeven_unit_cost(ms, cl, s.processor.mem_bandwidth_gbps, s.memory.baseline_unit_cost)
    return CostBreakdown(
        ms_dollars=ms,
        cl_dollars=cl,
        cb_dollars=cb,
        gain_dollars=net_gain(ms, cl, cb),
        breakeven_delta_unit_cost=be.delta_unit_cost,
        breakeven_equivalent_unit_cost=be.equivalent_unit_cost,
        lat_incr=lat_incr,
    )
