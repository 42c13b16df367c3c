#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Run simulations of the network.

A scenario is described by a ScenarioConfig, which can be read from and
written to a parameter file. run_simulation runs one seed of a scenario,
run_many runs consecutive seeds in parallel, and paired_comparison and sweep
build on it to compare schemes and parameter values.
"""

from pycran.sim.config import ScenarioConfig, read_config, write_config
from pycran.sim.model import (
    RunSummary,
    SimulationResult,
    TtiReport,
    paired_comparison,
    run_many,
    run_simulation,
    sweep,
)

__all__ = [
    "RunSummary",
    "ScenarioConfig",
    "SimulationResult",
    "TtiReport",
    "paired_comparison",
    "read_config",
    "run_many",
    "run_simulation",
    "sweep",
    "write_config",
]
