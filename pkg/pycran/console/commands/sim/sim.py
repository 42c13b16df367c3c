#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The entry point for the simulation commands."""

import functools
import sys
import time
from pathlib import Path

import click

from pycran.error import EXIT_CONFIG_ERROR, EXIT_IO_ERROR, InvalidConfig
from pycran.schemes.enum import Scheme
from pycran.sim.config import ScenarioConfig, read_config
from pycran.sim.model import paired_comparison, run_many, sweep as run_sweep
from pycran.sim.output import EMIT_CHOICES, write_comparison, write_results, write_sweep
from pycran.util import setup_logging

SCHEME_NAMES = [scheme.label for scheme in Scheme]


def scenario_options(function):
    """Add the options shared by every simulation command."""
    options = [
        click.option("--config", "config_path", type=click.Path(path_type=Path), help="A scenario parameter file."),
        click.option(
            "--preset", type=click.Choice(["desk", "full"]), default="desk", show_default=True, help="Base scenario."
        ),
        click.option("--seed", type=click.IntRange(min=0), help="The seed of the first run."),
        click.option("--scheme", type=click.Choice(SCHEME_NAMES), help="The clustering scheme."),
        click.option("--rrhs", type=int, help="The number of RRHs."),
        click.option("--ttis", type=int, help="The number of TTIs of each run."),
        click.option("--runs", type=int, help="The number of runs, with consecutive seeds."),
        click.option("--out", type=click.Path(path_type=Path), default=Path("output"), show_default=True),
        click.option("--jobs", type=int, help="Parallel runs, by default the number of physical cores."),
        click.option("-v", "--verbose", count=True, help="Print debug messages."),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def exit_on_error(function):
    """Map configuration and I/O errors to exit codes."""

    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except InvalidConfig as exc:
            click.echo(f"invalid configuration: {exc}", err=True)
            sys.exit(EXIT_CONFIG_ERROR)
        except OSError as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(EXIT_IO_ERROR)

    return wrapper


def build_config(config_path, preset, seed, scheme, rrhs, ttis, runs) -> ScenarioConfig:
    """Read or pick the base scenario, then apply the command line
    overrides."""
    config = read_config(config_path) if config_path else ScenarioConfig.preset(preset)
    overrides = {"seed": seed, "scheme": scheme, "rrh_count": rrhs, "ttis": ttis, "runs": runs}
    return config.with_overrides(**{name: value for name, value in overrides.items() if value is not None})


@click.command()
@scenario_options
@click.option("--emit", type=click.Choice(EMIT_CHOICES), default="summary", show_default=True)
@exit_on_error
def run(config_path, preset, seed, scheme, rrhs, ttis, runs, out, jobs, verbose, emit):
    """Run a scenario once per seed and write its tables."""
    setup_logging(verbose)
    config = build_config(config_path, preset, seed, scheme, rrhs, ttis, runs)

    start = time.perf_counter()
    results = run_many(config, jobs=jobs, progress=sys.stderr.isatty(), keep_reports=emit != "summary")
    write_results(results, config, out, emit=emit, wall_time=time.perf_counter() - start)


@click.command()
@scenario_options
@click.option("--axis", required=True, help="The numeric parameter to sweep.")
@click.option("--values", "values", required=True, help="Comma separated values of the parameter.")
@exit_on_error
def sweep(config_path, preset, seed, scheme, rrhs, ttis, runs, out, jobs, verbose, axis, values):
    """Run a scenario for every value of one parameter."""
    setup_logging(verbose)
    config = build_config(config_path, preset, seed, scheme, rrhs, ttis, runs)

    try:
        parsed = [float(value) for value in values.split(",") if value]
    except ValueError as exc:
        raise InvalidConfig(f"could not parse the sweep values {values}") from exc

    points = run_sweep(config, axis, parsed, jobs=jobs, progress=sys.stderr.isatty())
    write_sweep(points, axis, config, out)


@click.command()
@scenario_options
@click.option(
    "--schemes",
    default=",".join(SCHEME_NAMES),
    show_default=True,
    help="Comma separated schemes, all run on the same seeds.",
)
@exit_on_error
def compare(config_path, preset, seed, scheme, rrhs, ttis, runs, out, jobs, verbose, schemes):
    """Run a scenario under several schemes on identical random streams."""
    setup_logging(verbose)
    config = build_config(config_path, preset, seed, scheme, rrhs, ttis, runs)

    try:
        chosen = [Scheme(name) for name in schemes.split(",") if name]
    except ValueError as exc:
        raise InvalidConfig(f"unknown scheme in {schemes}") from exc

    start = time.perf_counter()
    results = paired_comparison(config, chosen, jobs=jobs, progress=sys.stderr.isatty())
    write_comparison(results, config, out, wall_time=time.perf_counter() - start)
