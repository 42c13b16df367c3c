#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Write the results of runs to comma separated tables.

Every table is written with pandas and holds only values determined by the
scenario and seed, so repeating a run reproduces every table byte for byte.
The run manifest also records the wall time and is the only file which
changes between repeats.
"""

from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from pycran import __version__
from pycran.sim.config import ScenarioConfig, write_config
from pycran.sim.grid import create_grid
from pycran.sim.model import SimulationResult

logger = logging.getLogger(__name__)

CDF_TABLES = {
    "cdf_instantaneous_edge.csv": "cdf_instantaneous_edge",
    "cdf_instantaneous_non_edge.csv": "cdf_instantaneous_non_edge",
    "cdf_average_edge.csv": "cdf_average_edge",
    "cdf_average_non_edge.csv": "cdf_average_non_edge",
}
EMIT_CHOICES = ("summary", "per-tti", "both")


def summary_table(results: list[SimulationResult], *, with_mean: bool = True) -> pd.DataFrame:
    """Return one row per run, and a final row of means over the runs.

    Parameters
    ----------
    results: list[SimulationResult]
        The runs.
    with_mean: bool
        Append the row of means, with run set to "mean".

    Returns
    -------
    pd.DataFrame
        The summary table.
    """
    df = pd.DataFrame([{"run": str(i), **result.summary.row()} for i, result in enumerate(results)])
    if not with_mean or df.empty:
        return df

    mean = df.drop(columns=["run", "seed"]).mean(numeric_only=True)
    mean_row = {column: "" for column in df.columns}
    mean_row.update(mean.to_dict())
    mean_row.update({"run": "mean", "scheme": df["scheme"].iloc[0]})

    return pd.concat([df, pd.DataFrame([mean_row])], ignore_index=True)


def per_ue_table(results: list[SimulationResult]) -> pd.DataFrame:
    """Return the average throughput and edge fraction of every user of
    every run."""
    frames = [
        pd.DataFrame(
            {
                "run": i,
                "ue": np.arange(len(result.summary.per_ue_average)),
                "average_throughput": result.summary.per_ue_average,
                "average_throughput_nocomp": result.summary.per_ue_average_nocomp,
                "edge_tti_fraction": result.summary.per_ue_edge_fraction,
            }
        )
        for i, result in enumerate(results)
    ]
    return pd.concat(frames, ignore_index=True)


def cdf_table(results: list[SimulationResult], name: str) -> pd.DataFrame:
    """Return the sorted samples of one CDF, pooled over every run."""
    samples = [getattr(result.summary, name) for result in results]
    return pd.DataFrame({"throughput": np.sort(np.concatenate(samples)) if samples else np.zeros(0)})


def per_tti_table(results: list[SimulationResult]) -> pd.DataFrame:
    """Return one row per user per TTI of every run with reports."""
    frames = []
    for i, result in enumerate(results):
        for report in result.reports:
            n_ues = len(report.throughput)
            frames.append(
                pd.DataFrame(
                    {
                        "run": i,
                        "tti": report.tti,
                        "ue": np.arange(n_ues),
                        "is_edge": report.is_edge,
                        "effective_sinr": report.effective_sinr,
                        "scheduled_rbs": report.scheduled_rbs,
                        "throughput": report.throughput,
                        "throughput_nocomp": report.throughput_nocomp,
                        "partition": repr(report.partition),
                        "activated": report.activated,
                        "iterations": report.iterations,
                        "regularized": report.regularized,
                    }
                )
            )
    if not frames:
        return pd.DataFrame(
            columns=[
                "run",
                "tti",
                "ue",
                "is_edge",
                "effective_sinr",
                "scheduled_rbs",
                "throughput",
                "throughput_nocomp",
                "partition",
                "activated",
                "iterations",
                "regularized",
            ]
        )
    return pd.concat(frames, ignore_index=True)


def config_hash(filepath: Path) -> str:
    """Return the hash of a scenario file."""
    return hashlib.blake2b(Path(filepath).read_bytes(), digest_size=16).hexdigest()


def write_results(
    results: list[SimulationResult],
    config: ScenarioConfig,
    directory: str | Path,
    *,
    emit: str = "summary",
    wall_time: float = 0.0,
) -> list[Path]:
    """Write the tables of a set of runs of one scenario.

    Parameters
    ----------
    results: list[SimulationResult]
        The runs.
    config: ScenarioConfig
        The scenario of the first run.
    directory: str or Path
        The output directory, created if needed.
    emit: str
        One of summary, per-tti or both.
    wall_time: float
        The wall time of the runs in seconds, for the manifest.

    Returns
    -------
    list[Path]
        The files written.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = [write_config(config, directory / "scenario.pf")]

    if emit in ("summary", "both"):
        tables = {"summary.csv": summary_table(results), "per_ue.csv": per_ue_table(results)}
        tables.update({filename: cdf_table(results, name) for filename, name in CDF_TABLES.items()})
        for filename, df in tables.items():
            df.to_csv(directory / filename, index=False)
            written.append(directory / filename)
    if emit in ("per-tti", "both"):
        per_tti_table(results).to_csv(directory / "per_tti.csv", index=False)
        written.append(directory / "per_tti.csv")

    meta = {
        "config_hash": config_hash(written[0]),
        "seed": config.seed,
        "runs": len(results),
        "scheme": config.scheme.label,
        "version": __version__,
        "wall_time_s": wall_time,
    }
    with (directory / "meta.json").open("w", encoding="utf-8") as file_out:
        json.dump(meta, file_out, indent=2)
    written.append(directory / "meta.json")

    logger.info("wrote %d file(s) to %s", len(written), directory)
    return written


def write_comparison(results: dict, config: ScenarioConfig, directory: str | Path, *, wall_time: float = 0.0) -> Path:
    """Write each scheme of a comparison to its own directory, and the mean
    row of every scheme to comparison.csv."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    rows = []
    for scheme, scheme_results in results.items():
        write_results(
            scheme_results, config.with_overrides(scheme=scheme), directory / scheme.label, wall_time=wall_time
        )
        rows.append(summary_table(scheme_results).iloc[-1])

    path = directory / "comparison.csv"
    pd.DataFrame(rows).drop(columns=["run", "seed", "digest"]).to_csv(path, index=False)
    logger.info("wrote the comparison of %d scheme(s) to %s", len(rows), path)

    return path


def write_sweep(points: list, axis: str, config: ScenarioConfig, directory: str | Path) -> Path:
    """Write the mean row of every sweep point to sweep.csv.

    The scenario template is echoed to the directory, with one scenario
    file per point next to it.

    Parameters
    ----------
    points: list[tuple[object, list[SimulationResult]]]
        The value and runs of each point.
    axis: str
        The swept parameter.
    config: ScenarioConfig
        The scenario template.
    directory: str or Path
        The output directory, created if needed.

    Returns
    -------
    Path
        The path to sweep.csv.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    template = write_config(config, directory / "scenario.pf")
    create_grid(template, axis, [value for value, _ in points], grid_name=axis)

    rows = []
    for value, point_results in points:
        row = summary_table(point_results).iloc[-1].drop(["run", "seed", "digest"])
        rows.append({axis: value, **row.to_dict()})

    path = directory / "sweep.csv"
    pd.DataFrame(rows).to_csv(path, index=False)
    logger.info("wrote %d sweep point(s) to %s", len(rows), path)

    return path
