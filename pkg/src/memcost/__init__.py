"""Cost/performance model for disaggregated (pooled) memory."""

from memcost.engine import (
    BreakevenResult,
    analyze,
    breakeven_unit_cost,
    cost_of_bandwidth,
    cost_of_latency,
    memory_savings,
    mfp_from_measurements,
    net_gain,
    required_throughput,
    switch_unit_cost,
)
from memcost.errors import (
    DegenerateFitError,
    FitError,
    GridCapError,
    IngestError,
    InsufficientDataError,
    MemcostError,
    ValidationError,
)
from memcost.latency import LatencySummary, compose_latency, distance_delay
from memcost.model import (
    DEFAULT_PRICING,
    CostBreakdown,
    FabricCost,
    LatencyProfile,
    MemoryConfig,
    PricingModel,
    ProcessorConfig,
    Scenario,
    WorkloadProfile,
    gbytes_to_gbps,
    validate_scenario,
)
from memcost.priceperf import ProcessorRecord, fit_price_model, ingest_records, price_at

__version__ = "0.1.0"

__all__ = [
    "BreakevenResult", "analyze", "breakeven_unit_cost", "cost_of_bandwidth", "cost_of_latency",
    "memory_savings", "mfp_from_measurements", "net_gain", "required_throughput", "switch_unit_cost",
    "DegenerateFitError", "FitError", "GridCapError", "IngestError", "InsufficientDataError",
    "MemcostError", "ValidationError", "LatencySummary", "compose_latency", "distance_delay",
    "DEFAULT_PRICING", "CostBreakdown", "FabricCost", "LatencyProfile", "MemoryConfig", "PricingModel",
    "ProcessorConfig", "Scenario", "WorkloadProfile", "gbytes_to_gbps", "validate_scenario",
    "ProcessorRecord", "fit_price_model", "ingest_records", "price_at",
]
