from collections import OrderedDict
from dataclasses import replace

import pytest

from memcost.model import (
    DEFAULT_PRICING,
    FabricCost,
    LatencyProfile,
    MemoryConfig,
    ProcessorConfig,
    Scenario,
    WorkloadProfile,
)

_criteria = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test checks")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(n, (title, True))
    _criteria[n] = (prev[0], prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")


def make_scenario(mfp=0.20, distance=6.0, fabric=None, **overrides):
    """The reference socket: rate 400, 68 GB/s, 128 GB at $7.125/GB, half pooled, 75 ns DRAM."""
    s = Scenario(
        processor=ProcessorConfig("ref", 400.0, 68.0),
        workload=WorkloadProfile("w", 1, mfp),
        memory=MemoryConfig(128.0, 7.125, 0.5, 0.1),
        latency=LatencyProfile(base_ns=75.0, distance_m_roundtrip=distance),
        pricing=DEFAULT_PRICING,
        fabric=fabric,
    )
    return replace(s, **overrides) if overrides else s


@pytest.fixture
def spec_int():
    return make_scenario(0.20)


@pytest.fixture
def oltp():
    return make_scenario(0.27)


@pytest.fixture
def optical_fabric():
    return FabricCost(transceiver_unit_cost=1.0, cabling_unit_cost=0.5)
