#!/usr/bin/env python3
"""Independent statistics oracle for the bundled observation fixture.

Computes the summary table and zone distribution with numpy only — no code
shared with the library under test — and freezes the values for the test
suite. Regenerate with:  python3 make_stats_oracle.py ../../data/observations.csv
"""
import csv
import sys

import numpy as np


def summarize(name, values):
    v = np.asarray(values, dtype=float)
    return [
        name,
        str(v.size),
        f"{v.mean():.12f}",
        f"{v.std(ddof=1):.12f}",
        f"{v.min():.12f}",
        f"{np.percentile(v, 25):.12f}",
        f"{np.percentile(v, 50):.12f}",
        f"{np.percentile(v, 75):.12f}",
        f"{v.max():.12f}",
    ]


def odeh_zone(arcv, w):
    v = arcv - (-0.1018 * w**3 + 0.7319 * w**2 - 6.3226 * w + 7.1651)
    if v >= 5.65:
        return "A"
    if v >= 2.0:
        return "B"
    if v >= -0.96:
        return "C"
    return "D"


def main():
    src = sys.argv[1] if len(sys.argv) > 1 else "../../data/observations.csv"
    out = sys.argv[2] if len(sys.argv) > 2 else "stats_oracle.csv"
    rows = list(csv.DictReader(open(src, newline="")))

    arcv = [float(r["arcv"]) for r in rows]
    w = [float(r["w"]) for r in rows]
    output = [float(r["output"]) for r in rows]

    lines = []
    lines.append(summarize("arcv", arcv))
    lines.append(summarize("w", w))
    lines.append(summarize("output", output))

    counts = {}
    for r in rows:
        z = odeh_zone(float(r["arcv"]), float(r["w"]))
        t, p = counts.get(z, (0, 0))
        counts[z] = (t + 1, p + int(r["output"]))
    for z in "ABCD":
        t, p = counts.get(z, (0, 0))
        lines.append([f"zone_{z}", str(t), str(p)])

    with open(out, "w", newline="") as fh:
        csv.writer(fh).writerows(lines)
    print(f"wrote {out}: {len(lines)} rows from {len(rows)} observations")


if __name__ == "__main__":
    main()
