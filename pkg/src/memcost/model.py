"""Domain types shared by every other module.

All monetary values are float dollars. Fractions (MFP, savings, latency
increase) are stored as fractions, never percentages.

The types are frozen dataclasses with no validation in ``__init__``, so an
invalid scenario can be built and then checked as a whole by
:func:`validate_scenario`, which reports every violation at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Iterator, Optional

from memcost.errors import ValidationError

BITS_PER_BYTE = 8
SMT_LEVELS = (1, 2, 4, 8)

# Highest single-benchmark MFP observed in the published simulations.
OBSERVED_MFP_MAX = 0.59


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _finite(x) -> bool:
    return _is_number(x) and math.isfinite(x)


def require_finite(name: str, value) -> float:
    if not _finite(value):
        raise ValidationError([(name, value, "must be a finite number")])
    return float(value)


def require_nonnegative(name: str, value) -> float:
    value = require_finite(name, value)
    if value < 0:
        raise ValidationError([(name, value, "must be >= 0")])
    return value


def require_positive(name: str, value) -> float:
    value = require_finite(name, value)
    if value <= 0:
        raise ValidationError([(name, value, "must be > 0")])
    return value


def gbytes_to_gbps(bw: float) -> float:
    """Convert gigabytes/second to gigabits/second (exactly 8 bits per byte)."""
    return require_nonnegative("bw", bw) * BITS_PER_BYTE


Violation = tuple  # (path, value, message)


def _check(path: str, value, ok: bool, msg: str) -> Iterator[Violation]:
    if not ok:
        yield (path, value, msg)


def _nonneg(prefix: str, obj, *names: str) -> Iterator[Violation]:
    for name in names:
        value = getattr(obj, name)
        if not _finite(value):
            yield (f"{prefix}.{name}", value, "must be a finite number")
        elif value < 0:
            yield (f"{prefix}.{name}", value, "must be >= 0")


def _positive(prefix: str, obj, *names: str) -> Iterator[Violation]:
    for name in names:
        value = getattr(obj, name)
        if not _finite(value):
            yield (f"{prefix}.{name}", value, "must be a finite number")
        elif value <= 0:
            yield (f"{prefix}.{name}", value, "must be > 0")


@dataclass(frozen=True)
class WorkloadProfile:
    name: str
    smt_level: int
    mfp: float

    def violations(self, prefix: str = "workload") -> Iterator[Violation]:
        yield from _check(f"{prefix}.smt_level", self.smt_level,
                          self.smt_level in SMT_LEVELS and not isinstance(self.smt_level, bool),
                          f"must be one of {SMT_LEVELS}")
        if not _finite(self.mfp):
            yield (f"{prefix}.mfp", self.mfp, "must be a finite number")
        else:
            yield from _check(f"{prefix}.mfp", self.mfp, 0.0 <= self.mfp <= 1.0,
                              "must be within [0, 1]")


@dataclass(frozen=True)
class ProcessorConfig:
    name: str
    base_throughput: float
    mem_bandwidth_gbytes_per_s: float

    @property
    def mem_bandwidth_gbps(self) -> float:
        return gbytes_to_gbps(self.mem_bandwidth_gbytes_per_s)

    def violations(self, prefix: str = "processor") -> Iterator[Violation]:
        yield from _positive(prefix, self, "base_throughput", "mem_bandwidth_gbytes_per_s")


@dataclass(frozen=True)
class PricingModel:
    """Affine processor price model: ``price = slope * throughput + intercept``."""

    slope: float
    intercept: float

    def violations(self, prefix: str = "pricing") -> Iterator[Violation]:
        yield from _positive(prefix, self, "slope")
        if not _finite(self.intercept):
            yield (f"{prefix}.intercept", self.intercept, "must be a finite number")


# Published least-squares fit over 54 Intel E5-2xxx v2/v3 models.
DEFAULT_PRICING = PricingModel(slope=4.85, intercept=-324.0)


@dataclass(frozen=True)
class LatencyProfile:
    base_ns: float
    distance_m_roundtrip: float = 0.0
    propagation_ns_per_m: float = 5.0
    serdes_ns: float = 0.0
    fec_ns: float = 0.0
    switch_ns: float = 0.0
    protocol_ns: float = 0.0

    def violations(self, prefix: str = "latency") -> Iterator[Violation]:
        yield from _positive(prefix, self, "base_ns")
        yield from _nonneg(prefix, self, *[f.name for f in fields(self) if f.name != "base_ns"])


@dataclass(frozen=True)
class MemoryConfig:
    capacity_gb_per_socket: float
    price_per_gb: float
    savings_fraction: float
    baseline_unit_cost: float = 0.1

    def violations(self, prefix: str = "memory") -> Iterator[Violation]:
        yield from _positive(prefix, self, "capacity_gb_per_socket")
        yield from _nonneg(prefix, self, "price_per_gb", "baseline_unit_cost")
        if not _finite(self.savings_fraction):
            yield (f"{prefix}.savings_fraction", self.savings_fraction, "must be a finite number")
        else:
            yield from _check(f"{prefix}.savings_fraction", self.savings_fraction,
                              0.0 <= self.savings_fraction <= 1.0, "must be within [0, 1]")


@dataclass(frozen=True)
class FabricCost:
    transceiver_unit_cost: float = 0.0
    cabling_unit_cost: float = 0.0
    switch_port_cost: float = 0.0
    link_rate_gbps: float = 100.0

    @property
    def unit_cost(self) -> float:
        """All-in fabric cost in $/Gbps (transceiver + cabling + switch port share)."""
        switch = self.switch_port_cost / self.link_rate_gbps if self.switch_port_cost else 0.0
        return self.transceiver_unit_cost + self.cabling_unit_cost + switch

    def violations(self, prefix: str = "fabric") -> Iterator[Violation]:
        yield from _nonneg(prefix, self, "transceiver_unit_cost", "cabling_unit_cost",
                           "switch_port_cost", "link_rate_gbps")
        if _finite(self.switch_port_cost) and self.switch_port_cost > 0:
            yield from _check(f"{prefix}.link_rate_gbps", self.link_rate_gbps,
                              _finite(self.link_rate_gbps) and self.link_rate_gbps > 0,
                              "must be > 0 when switch_port_cost > 0")


@dataclass(frozen=True)
class Scenario:
    processor: ProcessorConfig
    workload: WorkloadProfile
    memory: MemoryConfig
    latency: LatencyProfile
    pricing: PricingModel = DEFAULT_PRICING
    fabric: Optional[FabricCost] = None

    def violations(self) -> Iterator[Violation]:
        yield from self.processor.violations("processor")
        yield from self.workload.violations("workload")
        yield from self.memory.violations("memory")
        yield from self.latency.violations("latency")
        yield from self.pricing.violations("pricing")
        if self.fabric is not None:
            yield from self.fabric.violations("fabric")


def validate_scenario(s: Scenario) -> Scenario:
    """Return ``s`` unchanged if valid, else raise ValidationError listing every violation."""
    errors = list(s.violations())
    if errors:
        raise ValidationError(errors)
    return s


@dataclass(frozen=True)
class CostBreakdown:
    """Dollar figures for one scenario point.

    ``gain_dollars`` is always ``ms - cl - cb``; the breakeven unit costs are
    the fabric prices ($/Gbps) at which the gain would be exactly zero.
    """

    ms_dollars: float
    cl_dollars: float
    cb_dollars: float
    gain_dollars: float
    breakeven_delta_unit_cost: float
    breakeven_equivalent_unit_cost: float
    lat_incr: float
