#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the round robin scheduler."""

import numpy as np
import pytest

from pycran.sched import RbGrid, round_robin_schedule


def test_fair_share():
    grid = round_robin_schedule(list(range(15)), 106, 8, np.random.default_rng(0))
    counts = grid.counts()

    assert len(grid.groups) == 106
    assert all(len(group) == 8 for group in grid.groups)
    assert set(counts.values()) == {56, 57}
    assert sum(counts.values()) == 106 * 8
    assert list(counts.values()).count(57) == 8


@pytest.mark.parametrize("seed", range(5))
def test_groups_are_consecutive_windows(seed):
    ues = [3, 9, 4, 11, 20]
    grid = round_robin_schedule(ues, 7, 4, np.random.default_rng(seed))
    sequence = [ue for group in grid.groups for ue in group]

    assert sorted(sequence[:5]) == sorted(ues)
    assert sequence[5:10] == sequence[:5]


def test_depleted_cell():
    grid = round_robin_schedule([7, 2, 5], 4, 8, np.random.default_rng(1))
    for rb in range(4):
        assert len(grid.groups[rb]) == 8
        assert sorted(grid.distinct(rb)) == [2, 5, 7]
    assert grid.counts() == {2: 4, 5: 4, 7: 4}


def test_empty_cell():
    grid = round_robin_schedule([], 4, 8, np.random.default_rng(1))
    assert grid == RbGrid(4, ())
    assert grid.distinct(0) == []
    assert grid.scheduled_rbs() == {}


def test_same_stream_same_schedule():
    first = round_robin_schedule(list(range(10)), 12, 4, np.random.default_rng(42))
    second = round_robin_schedule(list(range(10)), 12, 4, np.random.default_rng(42))
    assert first == second
