"""Side-by-side table for finished run directories (e.g. the acceptance cache).

    python demos/compare_runs.py out/acceptance/runs/*
"""
import json
import sys
from pathlib import Path

import numpy as np

from microrl.robust_eval import SweepGrid, read_records


def summarize(run: Path) -> dict | None:
    metrics = [json.loads(l) for l in (run / "metrics.jsonl").read_text().splitlines()]
    if not metrics:
        return None  # started, nothing evaluated yet
    out = {"run": run.name, "step": metrics[-1]["step"], "final": metrics[-1]["eval_return_mean"],
           "best": max(m["eval_return_mean"] for m in metrics)}
    if (run / "sweep.jsonl").exists():
        grid = SweepGrid()
        m = np.array([r["mean"] for r in read_records(run / "sweep.jsonl")])
        out["off_nominal"] = m.reshape(len(grid.gravity), len(grid.friction))[grid.off_nominal()].mean()
    return out


def main(paths):
    rows = [summarize(Path(p)) for p in paths if (Path(p) / "metrics.jsonl").exists()]
    rows = [r for r in rows if r]
    if not rows:
        sys.exit("no run directories with metrics.jsonl given")
    print(f"{'run':<34}{'step':>8}{'final':>10}{'best':>10}{'off-nominal':>14}")
    for r in rows:
        off = f"{r['off_nominal']:.1f}" if "off_nominal" in r else "-"
        print(f"{r['run']:<34}{r['step']:>8}{r['final']:>10.1f}{r['best']:>10.1f}{off:>14}")


if __name__ == "__main__":
    main(sys.argv[1:])
