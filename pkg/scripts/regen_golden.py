#!/usr/bin/env python3
"""Rewrite tests/golden/ from the current CLI output.

Only run this after checking the diff by hand; the golden files are the
byte-level contract for `memcost analyze` and `memcost sweep`.
"""
import contextlib
import io
import sys
from pathlib import Path

from memcost.bundled import BUNDLED_SCENARIOS
from memcost.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

RUNS = {
    "{name}.analyze.txt": ["analyze", "{name}"],
    "{name}.analyze.json": ["analyze", "{name}", "--format", "json"],
    "{name}.equal-cost.csv": ["sweep", "{name}", "--curve", "equal-cost",
                              "--from", "0", "--to", "1", "--step", "0.05"],
}


def capture(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    if code != 0:
        sys.exit(f"{' '.join(argv)} exited {code}")
    return out.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name in BUNDLED_SCENARIOS:
        for fname, argv in RUNS.items():
            path = GOLDEN / fname.format(name=name)
            path.write_text(capture([a.format(name=name) for a in argv]), encoding="utf-8")
            print(f"wrote {path.relative_to(GOLDEN.parent.parent)}")
