"""Processor price vs. benchmark throughput.

Market data comes in as ``(model, throughput, price)`` rows, possibly several
per model (different vendors submit slightly different rates for the same
part). Duplicates are collapsed to their mean throughput, then price is
regressed on throughput with ordinary least squares.
"""

from __future__ import annotations

import csv
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from memcost.errors import DegenerateFitError, IngestError, InsufficientDataError, ValidationError
from memcost.model import PricingModel, require_finite

DATASET_HEADER = ("model", "throughput", "price_usd")


class ExtrapolationWarning(UserWarning):
    """The price model was evaluated where it predicts a negative price."""


@dataclass(frozen=True)
class ProcessorRecord:
    model: str
    throughput: float
    price: float


def _parse_row(row, rownum: int) -> Tuple[str, float, float]:
    try:
        model, throughput, price = row
    except (TypeError, ValueError):
        raise IngestError(f"row {rownum}: expected 3 fields (model, throughput, price), got {row!r}")
    model = str(model).strip()
    try:
        throughput = float(throughput)
        price = float(price)
    except (TypeError, ValueError):
        raise IngestError(f"row {rownum}: non-numeric throughput or price in {row!r}")
    if not model:
        raise IngestError(f"row {rownum}: empty model name")
    if not (math.isfinite(throughput) and throughput > 0):
        raise IngestError(f"row {rownum}: throughput must be > 0, got {throughput!r}")
    if not (math.isfinite(price) and price > 0):
        raise IngestError(f"row {rownum}: price must be > 0, got {price!r}")
    return model, throughput, price


def ingest_records(rows: Iterable[Sequence], row_numbers: Optional[Iterable[int]] = None) -> List[ProcessorRecord]:
    """Collapse raw rows to one record per model, sorted by model name.

    Throughputs of duplicate rows are averaged. Prices must agree exactly
    across a model's rows; a conflict is an error.
    """
    rows = list(rows)
    numbers = list(row_numbers) if row_numbers is not None else range(1, len(rows) + 1)
    if not rows:
        raise IngestError("no data rows")

    rates = defaultdict(list)
    prices = {}
    for rownum, row in zip(numbers, rows):
        model, throughput, price = _parse_row(row, rownum)
        if model in prices and prices[model] != price:
            raise IngestError(
                f"row {rownum}: conflicting price for {model!r} "
                f"({prices[model]!r} vs {price!r})"
            )
        prices[model] = price
        rates[model].append(throughput)

    # fsum is correctly rounded, so the mean does not depend on row order.
    return [ProcessorRecord(m, math.fsum(rates[m]) / len(rates[m]), prices[m])
            for m in sorted(prices)]


def read_dataset(path) -> List[ProcessorRecord]:
    """Load a ``model,throughput,price_usd`` CSV. Lines starting with ``#`` are skipped."""
    path = Path(path)
    rows, numbers = [], []
    with path.open(newline="", encoding="utf-8") as f:
        header_seen = False
        for lineno, row in enumerate(csv.reader(f), start=1):
            if not row or not "".join(row).strip():
                continue
            if row[0].lstrip().startswith("#"):
                continue
            if not header_seen:
                header = tuple(c.strip() for c in row)
                if header != DATASET_HEADER:
                    raise IngestError(
                        f"line {lineno}: expected header {','.join(DATASET_HEADER)}, got {','.join(row)}"
                    )
                header_seen = True
                continue
            rows.append(row)
            numbers.append(lineno)
    if not header_seen:
        raise IngestError(f"{path}: missing header {','.join(DATASET_HEADER)}")
    return ingest_records(rows, numbers)


def fit_price_model(records: Sequence[ProcessorRecord]) -> PricingModel:
    """Least-squares line of price on throughput."""
    n = len(records)
    if n < 2:
        raise InsufficientDataError(f"insufficient data: need at least 2 records, got {n}")
    xs = [r.throughput for r in records]
    ys = [r.price for r in records]
    x_mean = math.fsum(xs) / n
    y_mean = math.fsum(ys) / n
    sxx = math.fsum((x - x_mean) ** 2 for x in xs)
    if sxx == 0.0:
        raise DegenerateFitError("degenerate fit: all throughputs are equal")
    sxy = math.fsum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    if not slope > 0:
        raise DegenerateFitError(
            f"degenerate fit: price does not increase with throughput (slope {slope:g})"
        )
    return PricingModel(slope=slope, intercept=intercept)


def residuals(m: PricingModel, records: Sequence[ProcessorRecord]) -> List[float]:
    return [r.price - (m.slope * r.throughput + m.intercept) for r in records]


def residual_rms(m: PricingModel, records: Sequence[ProcessorRecord]) -> float:
    res = residuals(m, records)
    return math.sqrt(math.fsum(r * r for r in res) / len(res))


def price_at(m: PricingModel, throughput: float) -> float:
    """Model price at ``throughput``.

    Below ``-intercept/slope`` the line goes negative; the value is still
    returned but an :class:`ExtrapolationWarning` is emitted.
    """
    t = require_finite("throughput", throughput)
    if t <= 0:
        raise ValidationError([("throughput", throughput, "must be > 0")])
    price = m.slope * t + m.intercept
    if price < 0:
        warnings.warn(f"model price {price:.2f} at throughput {t:g} is negative",
                      ExtrapolationWarning, stacklevel=2)
    return price
