"""Wall-time benchmark of the distance pipeline, with CSV and figure output.

Runs the end-to-end solve on one seeded random instance per requested size
(p = q = n/2), times each stage, and writes `bench.csv` plus a log-log
matplotlib figure `bench.png` with the fitted growth exponent of the total
time.  The exponent is reported, not asserted: it is an empirical reading.
"""

from __future__ import annotations

import csv
import random
import time
from pathlib import Path

import numpy as np

from .core import SplitGraphSpec
from .mincut import build_cut_graph, distance_from_cut, min_cut
from .model import coefficients, derive_sets
from .oracle import random_broom

DEFAULT_SIZES = (250, 500, 1000, 2000)


def time_instance(n: int, seed: int) -> dict:
    """Solve one seeded p = q = n/2 instance, timing each stage."""
    p = n // 2
    q = n - p
    rng = random.Random(seed * 1_000_003 + n)
    spec = SplitGraphSpec(p, q)
    t1 = random_broom(spec, rng)
    t2 = random_broom(spec, rng)

    stages = {}
    t0 = time.perf_counter()
    sets = derive_sets(t1, t2)
    stages["derive"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    coeffs = coefficients(sets)
    stages["coefficients"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    graph = build_cut_graph(coeffs)
    stages["build_cut"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    cut = min_cut(graph)
    stages["min_cut"] = time.perf_counter() - t0

    return {
        "n": n,
        "p": p,
        "q": q,
        "shared": len(sets.shared),
        "distance": distance_from_cut(coeffs, graph, cut),
        **{k: round(v, 6) for k, v in stages.items()},
        "total": round(sum(stages.values()), 6),
    }


def fitted_exponent(rows: list[dict]) -> float | None:
    """Least-squares slope of log(total) against log(n)."""
    usable = [(r["n"], r["total"]) for r in rows if r["total"] > 0]
    if len(usable) < 2:
        return None
    ns, ts = zip(*usable)
    slope = np.polyfit(np.log(ns), np.log(ts), 1)[0]
    return round(float(slope), 3)


def write_report(rows: list[dict], out_dir: Path) -> dict:
    """Write bench.csv and bench.png; returns their paths and the exponent."""
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "bench.csv"
    fields = list(rows[0].keys())
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)

    exponent = fitted_exponent(rows)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4.5))
    ns = [r["n"] for r in rows]
    ax.loglog(ns, [max(r["total"], 1e-9) for r in rows], "o-", label="total")
    for stage in ("derive", "coefficients", "min_cut"):
        ax.loglog(ns, [max(r[stage], 1e-9) for r in rows], "--", alpha=0.6, label=stage)
    ax.set_xlabel("n = p + q")
    ax.set_ylabel("wall time [s]")
    title = "distance pipeline wall time"
    if exponent is not None:
        title += f" (fitted exponent {exponent})"
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    png_path = out_dir / "bench.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)

    return {
        "csv": str(csv_path),
        "figure": str(png_path),
        "fitted_exponent": exponent,
    }


def run_bench(sizes, seed: int, out_dir: Path) -> dict:
    # untimed warm-up so lazy imports (scipy's flow engine) don't distort
    # the first measured point
    time_instance(min(200, max(sizes)), seed)
    rows = [time_instance(n, seed) for n in sizes]
    report = write_report(rows, out_dir)
    return {"seed": seed, "rows": rows, **report}
