#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Fixtures shared by the test modules."""

import numpy as np
import pytest

from pycran.sim.config import ScenarioConfig


@pytest.fixture
def rng():
    """A seeded generator, so every test sees the same draws."""
    return np.random.default_rng(12345)


@pytest.fixture
def tiny_config():
    """The desk scenario shrunk to a few users and RBs."""
    return ScenarioConfig.desk().with_overrides(rrh_count=3, ues_per_cell=4, num_rbs=3, ttis=4)


class FakeEvaluator:
    """Throughputs of a TTI given as a lookup table.

    Parameters
    ----------
    served: dict[int, list[int]]
        The users of each RRH.
    edge: set[int]
        The edge users.
    singleton: dict[int, float]
        The throughput of every user without cooperation.
    coalitions: dict[frozenset, dict[int, float]]
        The throughput of users under a coalition, falling back to
        singleton for users not listed.
    """

    def __init__(self, served, edge, singleton, coalitions=None):
        self.served = served
        self.edge_ues = frozenset(edge)
        self.singleton = singleton
        self.coalitions = coalitions or {}
        self.calls = 0

    def served_ues(self, rrh):
        return self.served[rrh]

    def throughputs(self, coalition):
        self.calls += 1
        table = self.coalitions.get(frozenset(coalition), {})
        return {ue: table.get(ue, self.singleton[ue]) for rrh in coalition for ue in self.served[rrh]}


@pytest.fixture
def fake_evaluator_factory():
    """Build fake evaluators."""
    return FakeEvaluator
