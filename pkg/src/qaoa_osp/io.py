"""CSV / JSON / PGM writers for experiment results.

Floats are written with 12 significant digits and lines end with ``\\n`` so
that identical inputs give byte-identical files.
"""
import csv
import json
from contextlib import contextmanager
from pathlib import Path

import numpy as np

from .errors import OutputError

EXHAUSTIVE_HEADER = ["rank", "ratio", "mse", "locations"]
LANDSCAPE_HEADER = ["beta1", "gamma_p", "p", "mixer", "avg_ratio", "best_ratio", "feasible_fraction"]
RUNS_HEADER = ["run_id", "mixer", "p", "seed", "beta1_init", "gammap_init", "beta1_final",
               "gammap_final", "evaluations", "final_avg_ratio", "best_sampled_ratio"]
DIFF_HEADER = ["rank", "reference_locations", "reference_ratio", "our_ratio_for_reference_set",
               "our_rank_for_reference_set", "our_locations", "our_ratio", "match"]


def fmt(x):
    return f"{float(x):.12g}"


def join_locations(locs):
    return "+".join(str(int(l)) for l in locs)


@contextmanager
def _open(path, mode="w"):
    path = Path(path)
    try:
        with open(path, mode, newline="" if "b" not in mode else None) as fh:
            yield fh
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e.strerror or e}") from e


def _write_csv(path, header, rows, trailer=None):
    with _open(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        if trailer:
            fh.write(trailer + "\n")


def write_exhaustive_csv(ranking, path):
    _write_csv(path, EXHAUSTIVE_HEADER,
               [[r.rank, fmt(r.ratio), fmt(r.mse), join_locations(r.locations)] for r in ranking])


def write_reference_diff_csv(rows, path):
    _write_csv(path, DIFF_HEADER, [[
        r["rank"], join_locations(r["reference_locations"]), fmt(r["reference_ratio"]),
        fmt(r["our_ratio_for_reference_set"]), r["our_rank_for_reference_set"],
        join_locations(r["our_locations"]), fmt(r["our_ratio"]), int(r["match"]),
    ] for r in rows])


def write_landscape_csv(cells, p, mixer, path):
    _write_csv(path, LANDSCAPE_HEADER, [
        [fmt(c.beta1), fmt(c.gamma_p), p, mixer, fmt(c.avg_ratio), fmt(c.best_ratio),
         fmt(c.feasible_fraction)] for c in cells])


def read_landscape_csv(path):
    from .experiments import LandscapeCell

    cells, meta = [], None
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            meta = (int(row["p"]), row["mixer"])
            cells.append(LandscapeCell(*(float(row[k]) for k in
                                         ("beta1", "gamma_p", "avg_ratio", "best_ratio", "feasible_fraction"))))
    return cells, meta


def write_runs_csv(summary, mixer, p, path):
    rows = []
    for run in summary.runs:
        res = run.result
        rows.append([run.run_id, mixer, p, run.seed, fmt(run.start[0]), fmt(run.start[1]),
                     fmt(res.best_params[0]), fmt(res.best_params[1]), res.evaluations,
                     fmt(run.final.avg_ratio), fmt(run.final.best_ratio)])
    _write_csv(path, RUNS_HEADER, rows, trailer=f"# mean={fmt(summary.mean)},std={fmt(summary.std)}")


def write_pgm(cells, grid_n, path):
    """Greyscale image of ``avg_ratio``: rows follow ``beta1``, columns ``gamma_p``; white = 1."""
    vals = np.array([c.avg_ratio for c in cells]).reshape(grid_n, grid_n)
    pix = np.clip(np.round(vals * 255), 0, 255).astype(np.uint8)
    with _open(path, "wb") as fh:
        fh.write(f"P5\n{grid_n} {grid_n}\n255\n".encode("ascii"))
        fh.write(pix.tobytes())


def write_json(obj, path):
    with _open(path) as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def emit_outputs(results, path, format="csv", **meta):
    """Dispatch on result kind: ``ranking``, ``landscape``, ``runs``, ``diff``, or a dict for JSON."""
    kind = meta.pop("kind", None)
    if format == "json":
        return write_json(results, path)
    if format == "pgm":
        return write_pgm(results, meta["grid_n"], path)
    writers = {
        "ranking": lambda: write_exhaustive_csv(results, path),
        "landscape": lambda: write_landscape_csv(results, meta["p"], meta["mixer"], path),
        "runs": lambda: write_runs_csv(results, meta["mixer"], meta["p"], path),
        "diff": lambda: write_reference_diff_csv(results, path),
    }
    if kind not in writers:
        raise ValueError(f"unknown result kind {kind!r}; expected one of {sorted(writers)}")
    return writers[kind]()
