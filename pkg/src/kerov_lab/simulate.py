"""Ensemble runs: sample, eigensolve, build the diagram, compare with the limit shape."""
from __future__ import annotations

import csv
import io
import json
import math
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .diagram import (
    build_diagram,
    interlacing_gap,
    rescale,
    sup_distance,
    tilde_p,
    validate_interlacing,
)
from .linalg import default_tol, eigenvalues, principal_submatrix
from .randmat import RNG_ALGORITHM, EntryDist, RngSpec, sample_wigner, sample_wishart
from .shapes import vkls_shape, wishart_shape

ENSEMBLES = ("wigner", "wishart")
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class RunConfig:
    ensemble: str = "wigner"
    n: int = 100
    alpha: float | None = None
    dist: str = "gaussian"
    trials: int = 1
    seed: int = 0
    k_max: int = 4
    grid_step: float = 1e-3
    tol: float | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.ensemble not in ENSEMBLES:
            raise ValueError(f"unknown ensemble {self.ensemble!r}")
        if self.ensemble == "wigner":
            object.__setattr__(self, "alpha", None)
        elif self.alpha is None or not self.alpha >= 1:
            raise ValueError("wishart runs need alpha >= 1")
        EntryDist(self.dist)
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.trials < 1 or self.k_max < 1:
            raise ValueError("trials and k_max must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not self.grid_step > 0:
            raise ValueError("grid_step must be positive")
        if self.tol is not None and self.tol < 0:
            raise ValueError("tol must be nonnegative")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")

    @property
    def scale(self) -> float:
        return math.sqrt(self.n) if self.ensemble == "wigner" else float(self.n)

    def canonical_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))


def columns(config: RunConfig) -> list[str]:
    moments = [f"p{k}" for k in range(1, config.k_max + 1)]
    return ["trial", "sup_distance", "center", "interlace_gap"] + moments


def run_trial(config: RunConfig, trial: int) -> dict:
    start = time.perf_counter()
    rng = RngSpec(config.seed, trial)
    if config.ensemble == "wigner":
        matrix = sample_wigner(config.n, config.dist, rng)
        shape = vkls_shape()
    else:
        matrix = sample_wishart(config.n, config.alpha, config.dist, rng)
        shape = wishart_shape(config.alpha)
    minima = eigenvalues(matrix)
    maxima = eigenvalues(principal_submatrix(matrix))
    radius = float(np.max(np.abs(minima)))
    tol = default_tol(minima) if config.tol is None else config.tol
    pair = validate_interlacing(minima, maxima, tol)
    diagram = rescale(build_diagram(pair), config.scale)
    record = {
        "trial": trial,
        "sup_distance": sup_distance(diagram, shape, config.grid_step),
        "center": diagram.center,
        "interlace_gap": interlacing_gap(minima, maxima) / radius if radius else 0.0,
    }
    for k in range(1, config.k_max + 1):
        record[f"p{k}"] = tilde_p(diagram.pair, k)
    print(f"trial {trial}: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return record


def _run_one(args):
    return run_trial(*args)


def run(config: RunConfig, jobs: int = 1) -> list[dict]:
    tasks = [(config, t) for t in range(config.trials)]
    if jobs <= 1:
        return [run_trial(*task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))


def summarize(records: list[dict], names: list[str]) -> dict[str, dict[str, float]]:
    stats = {"median": statistics.median, "mean": lambda v: math.fsum(v) / len(v),
             "min": min, "max": max}
    return {name: {col: float(fn([r[col] for r in records])) for col in names}
            for name, fn in stats.items()}


def metadata(config: RunConfig) -> dict:
    return {"artifact": f"kerov-lab v{__version__}", "rng": RNG_ALGORITHM,
            "config": json.loads(config.canonical_json())}


def render(config: RunConfig, records: list[dict]) -> str:
    cols = columns(config)
    summary = summarize(records, cols[1:])
    if config.format == "json":
        doc = {"meta": metadata(config), "records": records, "summary": summary}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(f"# kerov-lab v{__version__} config={config.canonical_json()}\n")
    buf.write(f"# rng={RNG_ALGORITHM}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rec in records:
        writer.writerow([_fmt(rec[c]) for c in cols])
    for name, row in summary.items():
        writer.writerow([name] + [_fmt(row[c]) for c in cols[1:]])
    return buf.getvalue()


def _fmt(value) -> str:
    # repr gives the shortest decimal that round-trips
    return repr(value) if isinstance(value, float) else str(value)
