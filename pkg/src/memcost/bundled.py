"""Bundled reference data: the workload MFP table and example scenarios.

``MEMCOST_DATA_DIR`` points the loaders at another directory with the same
layout (``workloads.csv``, ``scenarios/*.ini``).
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from memcost.errors import IngestError

BUNDLED_SCENARIOS = ("rack-scale", "row-scale", "datacenter-scale")


def data_dir() -> Path:
    override = os.environ.get("MEMCOST_DATA_DIR")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


@dataclass(frozen=True)
class WorkloadEntry:
    name: str
    smt_level: int
    mfp: Optional[float]  # None when no value is available
    source: str
    note: str


def load_workloads(path=None) -> Dict[str, WorkloadEntry]:
    path = Path(path) if path is not None else data_dir() / "workloads.csv"
    with path.open(newline="", encoding="utf-8") as f:
        lines = [line for line in f if not line.lstrip().startswith("#")]
    table = {}
    for rownum, row in enumerate(csv.DictReader(lines), start=2):
        try:
            mfp = float(row["mfp"]) if row["mfp"].strip() else None
            entry = WorkloadEntry(row["name"].strip(), int(row["smt_level"]), mfp,
                                  row["source"].strip(), row["note"].strip())
        except (KeyError, ValueError, AttributeError) as e:
            raise IngestError(f"{path}: bad workload row {rownum}: {e}")
        table[entry.name] = entry
    return table


def scenario_path(name: str) -> Path:
    return data_dir() / "scenarios" / f"{name}.ini"


def bundled_scenarios() -> List[Path]:
    return sorted((data_dir() / "scenarios").glob("*.ini"))
