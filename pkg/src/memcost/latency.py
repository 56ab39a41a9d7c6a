"""Memory latency budget for a pooled-memory fabric."""

from __future__ import annotations

from dataclasses import dataclass

from memcost.errors import ValidationError
from memcost.model import LatencyProfile, require_nonnegative

# 1 ns per 0.2 m of fiber.
DEFAULT_PROPAGATION_NS_PER_M = 5.0


@dataclass(frozen=True)
class LatencySummary:
    total_ns: float
    delta_ns: float
    lat_incr: float


def distance_delay(distance_m_roundtrip: float,
                   propagation_ns_per_m: float = DEFAULT_PROPAGATION_NS_PER_M) -> float:
    d = require_nonnegative("distance_m_roundtrip", distance_m_roundtrip)
    rate = require_nonnegative("propagation_ns_per_m", propagation_ns_per_m)
    return d * rate


def compose_latency(p: LatencyProfile) -> LatencySummary:
    """Sum the fabric components on top of the direct-attached baseline.

    ``lat_incr`` is the fractional increase over ``base_ns`` (0.40 means 40%).
    """
    errors = list(p.violations())
    if errors:
        raise ValidationError(errors)
    delta = (distance_delay(p.distance_m_roundtrip, p.propagation_ns_per_m)
             + p.serdes_ns + p.fec_ns + p.switch_ns + p.protocol_ns)
    return LatencySummary(total_ns=p.base_ns + delta, delta_ns=delta,
                          lat_incr=delta / p.base_ns)
