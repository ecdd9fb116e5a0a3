# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/files/metrics.py


"""Evaluation-count metrics as CSV: measured counts next to the cost
model's prediction for the ball parameter used.
"""


import csv


METRICS_COLUMNS = [
    "run_id",
    "kind",
    "engine",
    "N_v",
    "N_s",
    "param_name",
    "param",
    "step1_evals",
    "step2_evals",
    "model_step12",
    "wall_seconds",
]


def metrics_row(run_id, kind, engine, n_voxels, n_sites, counters, model_step12, wall_seconds):
    """Return one metrics row as a dict."""

    return {
        "run_id": run_id,
        "kind": kind,
        "engine": engine,
        "N_v": n_voxels,
        "N_s": n_sites,
        "param_name": counters.param_name or "",
        "param": "" if counters.param == None else repr(float(counters.param)),
        "step1_evals": counters.step1_evals,
        "step2_evals": counters.step2_evals,
        "model_step12": "" if model_step12 == None else repr(float(model_step12)),
        "wall_seconds": f"{wall_seconds:.6f}",
    }


def emit_metrics(rows, path):
    """Write rows (dicts keyed by METRICS_COLUMNS) with a header line."""

    with open(path, "wt", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=METRICS_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def read_metrics(path):
    """Return the rows of a metrics file as dicts of strings."""

    with open(path, "rt", newline="") as f:
        return list(csv.DictReader(f))
