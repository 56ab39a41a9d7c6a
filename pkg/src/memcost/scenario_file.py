"""Scenario files.

A scenario file is an INI document with sections ``processor``, ``workload``,
``memory``, ``latency``, ``pricing`` and optional ``fabric``. Key names carry
their units. Unknown sections or keys are errors. Fraction-valued keys take
either a plain fraction (``0.5``) or a percentage (``50%``).

A JSON document with the same sections is accepted too, as is a JSON report
written by ``memcost analyze --format json`` (its ``scenario`` member is
the echo of the original inputs).

Omitted keys fall back to the reference configuration (a SPEC INT rate 400
socket with 68 GB/s and 128 GB of DRAM at $7.125/GB). Which values came from
where is kept in :attr:`LoadedScenario.provenance`.
"""

from __future__ import annotations

import configparser
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List

from memcost.bundled import load_workloads
from memcost.errors import ValidationError
from memcost.model import (
    FabricCost,
    LatencyProfile,
    MemoryConfig,
    PricingModel,
    ProcessorConfig,
    Scenario,
    WorkloadProfile,
)

TEXT, NUMBER, INTEGER, FRACTION = "text", "number", "integer", "fraction"

# section -> file key -> (field name on the model type, kind, default)
SCHEMA: Dict[str, Dict[str, tuple]] = {
    "processor": {
        "name": ("name", TEXT, "reference processor"),
        "base_throughput": ("base_throughput", NUMBER, 400.0),
        "mem_bandwidth_gbytes_per_s": ("mem_bandwidth_gbytes_per_s", NUMBER, 68.0),
    },
    "workload": {
        "name": ("name", TEXT, "SPEC-INT-ST"),
        "smt_level": ("smt_level", INTEGER, None),
        "mfp": ("mfp", FRACTION, None),
    },
    "memory": {
        "capacity_gb_per_socket": ("capacity_gb_per_socket", NUMBER, 128.0),
        "price_per_gb_usd": ("price_per_gb", NUMBER, 7.125),
        "savings_fraction": ("savings_fraction", FRACTION, 0.5),
        "baseline_usd_per_gbps": ("baseline_unit_cost", NUMBER, 0.1),
    },
    "latency": {
        "base_ns": ("base_ns", NUMBER, 75.0),
        "distance_m_roundtrip": ("distance_m_roundtrip", NUMBER, 0.0),
        "propagation_ns_per_m": ("propagation_ns_per_m", NUMBER, 5.0),
        "serdes_ns": ("serdes_ns", NUMBER, 0.0),
        "fec_ns": ("fec_ns", NUMBER, 0.0),
        "switch_ns": ("switch_ns", NUMBER, 0.0),
        "protocol_ns": ("protocol_ns", NUMBER, 0.0),
    },
    "pricing": {
        "slope_usd_per_throughput": ("slope", NUMBER, 4.85),
        "intercept_usd": ("intercept", NUMBER, -324.0),
    },
    "fabric": {
        "transceiver_usd_per_gbps": ("transceiver_unit_cost", NUMBER, 0.0),
        "cabling_usd_per_gbps": ("cabling_unit_cost", NUMBER, 0.0),
        "switch_port_usd": ("switch_port_cost", NUMBER, 0.0),
        "link_rate_gbps": ("link_rate_gbps", NUMBER, 100.0),
    },
}
OPTIONAL_SECTIONS = ("fabric",)

USER, DEFAULT, TABLE = "user", "default", "workload table"


@dataclass(frozen=True)
class LoadedScenario:
    scenario: Scenario
    # Normalized user-supplied values, section -> key -> value.
    inputs: Dict[str, Dict[str, object]]
    # "section.key" -> USER | DEFAULT | TABLE, for every key of every present section.
    provenance: Dict[str, str]
    notes: List[str] = field(default_factory=list)

    def resolved(self) -> Dict[str, Dict[str, object]]:
        """Every effective value, keyed like the file."""
        s = self.scenario
        objs = {"processor": s.processor, "workload": s.workload, "memory": s.memory,
                "latency": s.latency, "pricing": s.pricing, "fabric": s.fabric}
        out = {}
        for section, keys in SCHEMA.items():
            obj = objs[section]
            if obj is None:
                continue
            out[section] = {key: getattr(obj, spec[0]) for key, spec in keys.items()}
        return out


def parse_value(raw, kind: str, path: str, errors: list):
    """Normalize one raw value. Appends to ``errors`` and returns None on failure."""
    if kind == TEXT:
        if not isinstance(raw, str) or not raw.strip():
            errors.append((path, raw, "must be non-empty text"))
            return None
        return raw.strip()
    if isinstance(raw, bool):
        errors.append((path, raw, "must be a number"))
        return None
    percent = False
    if isinstance(raw, str):
        text = raw.strip()
        if text.endswith("%"):
            percent = True
            text = text[:-1].strip()
        try:
            value = float(text)
        except ValueError:
            errors.append((path, raw, "must be a number"))
            return None
    elif isinstance(raw, (int, float)):
        value = float(raw)
    else:
        errors.append((path, raw, "must be a number"))
        return None
    if not math.isfinite(value):
        errors.append((path, raw, "must be a finite number"))
        return None
    if percent:
        if kind != FRACTION:
            errors.append((path, raw, "percent is only accepted for fraction-valued keys"))
            return None
        value = value / 100.0
    if kind == INTEGER:
        if value != int(value):
            errors.append((path, raw, "must be an integer"))
            return None
        return int(value)
    return value


def _read_sections(path: Path) -> Dict[str, Dict[str, object]]:
    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError([(str(path), None, f"invalid JSON: {e}")])
        if isinstance(doc, dict) and "scenario" in doc and "breakdown" in doc:
            doc = doc["scenario"]
        if not isinstance(doc, dict) or not all(isinstance(v, dict) for v in doc.values()):
            raise ValidationError([(str(path), None, "expected an object of sections")])
        return doc
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=None)
    parser.optionxform = str  # keys are case-sensitive
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as e:
        raise ValidationError([(str(path), None, f"unparseable scenario file: {e}")])
    return {name: dict(parser[name]) for name in parser.sections()}


def build_scenario(sections: Dict[str, Dict[str, object]], workloads=None) -> LoadedScenario:
    """Resolve raw sections into a validated Scenario, reporting every problem at once."""
    errors: list = []
    inputs: Dict[str, Dict[str, object]] = {}
    provenance: Dict[str, str] = {}
    notes: List[str] = []

    for section in sections:
        if section not in SCHEMA:
            errors.append((section, None, f"unknown section (expected one of {', '.join(SCHEMA)})"))

    values: Dict[str, Dict[str, object]] = {}
    for section, keys in SCHEMA.items():
        if section in OPTIONAL_SECTIONS and section not in sections:
            continue
        raw_section = sections.get(section, {})
        inputs[section] = {}
        values[section] = {}
        for key in raw_section:
            if key not in keys:
                errors.append((f"{section}.{key}", raw_section[key], "unknown key"))
        for key, (_, kind, default) in keys.items():
            path = f"{section}.{key}"
            if key in raw_section:
                value = parse_value(raw_section[key], kind, path, errors)
                inputs[section][key] = value
                values[section][key] = value
                provenance[path] = USER
            else:
                values[section][key] = default
                provenance[path] = DEFAULT

    # Workload MFP / SMT level from the bundled table when not given.
    wl = values["workload"]
    if wl["mfp"] is None or wl["smt_level"] is None:
        table = workloads if workloads is not None else load_workloads()
        entry = table.get(wl["name"])
        if entry is None:
            errors.append(("workload.name", wl["name"],
                           "not in the workload table; give mfp and smt_level explicitly"))
        else:
            if wl["smt_level"] is None:
                wl["smt_level"] = entry.smt_level
                provenance["workload.smt_level"] = TABLE
            if wl["mfp"] is None:
                if entry.mfp is None:
                    errors.append(("workload.mfp", None,
                                   f"no MFP value is available for {entry.name}; set mfp explicitly"))
                else:
                    wl["mfp"] = entry.mfp
                    provenance["workload.mfp"] = TABLE
                    if entry.source == "derived":
                        notes.append(f"workload {entry.name}: MFP {entry.mfp:g} is derived, not measured. {entry.note}")
            if provenance.get("workload.mfp") == TABLE and entry.note and entry.source != "derived":
                notes.append(f"workload {entry.name}: {entry.note}")

    def make(cls, section):
        return cls(**{SCHEMA[section][k][0]: v for k, v in values[section].items()})

    types = {"processor": ProcessorConfig, "workload": WorkloadProfile, "memory": MemoryConfig,
             "latency": LatencyProfile, "pricing": PricingModel, "fabric": FabricCost}
    built = {}
    for section, cls in types.items():
        if section not in values:
            built[section] = None
            continue
        # Sections with unparseable values were already reported; check the rest.
        if any(v is None for v in values[section].values()):
            continue
        built[section] = make(cls, section)
        errors.extend(built[section].violations(section))
    if errors:
        raise ValidationError(errors)

    scenario = Scenario(**built)
    if scenario.workload.mfp > 0.6:
        notes.append(f"MFP {scenario.workload.mfp:g} is above the highest observed value (0.59)")
    return LoadedScenario(scenario, inputs, provenance, notes)


def load_scenario(path, workloads=None) -> LoadedScenario:
    return build_scenario(_read_sections(Path(path)), workloads)
