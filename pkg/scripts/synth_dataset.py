#!/usr/bin/env python3
"""Write a synthetic processor price/performance CSV for ``memcost fit``.

Points lie on price = 4.85*throughput - 324 over the 90..597 throughput range,
with optional Gaussian price noise (non-positive prices are redrawn).

    python3 scripts/synth_dataset.py cpus.csv --noise 150 && memcost fit cpus.csv
"""
import argparse
import csv
import random
import sys


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", nargs="?", help="output path (default stdout)")
    ap.add_argument("-n", "--points", type=int, default=54)
    ap.add_argument("--noise", type=float, default=0.0, help="price noise std-dev in dollars")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    with fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["model", "throughput", "price_usd"])
        for i in range(args.points):
            t = round(rng.uniform(90, 597), 1)
            price = 4.85 * t - 324
            if args.noise:
                # Redraw rather than clip so the noise stays symmetric where prices are positive.
                noisy = price + rng.gauss(0, args.noise)
                while noisy <= 0:
                    noisy = price + rng.gauss(0, args.noise)
                price = noisy
            w.writerow([f"cpu-{i:03d}", t, f"{price:.2f}"])


if __name__ == "__main__":
    main()
