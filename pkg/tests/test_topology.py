#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the hexagonal layout, user drops, mobility and attachment."""

from itertools import combinations

import numpy as np
import pytest

from pycran.error import InvalidConfig, InvalidInput
from pycran.topology import Ue, build_layout, drop_ues, inside_hexagon, rings_for_count
from pycran.topology.mobility import advance_mobility, update_attachment

CIRCUMRADIUS = 125.0
ISD = np.sqrt(3.0) * CIRCUMRADIUS


@pytest.mark.parametrize(("count", "rings"), [(1, 0), (2, 1), (7, 1), (8, 2), (12, 2), (19, 2), (20, 3)])
def test_rings_for_count(count, rings):
    assert rings_for_count(count) == rings


def test_layout_spiral():
    layout, rrhs = build_layout(19, CIRCUMRADIUS)

    assert layout.inter_site_distance == pytest.approx(ISD)
    assert [rrh.id for rrh in rrhs] == list(range(19))
    assert np.allclose(rrhs[0].position, 0.0)
    for rrh in rrhs[1:7]:
        assert np.linalg.norm(rrh.position) == pytest.approx(ISD)
    for rrh in rrhs[7:]:
        assert np.linalg.norm(rrh.position) > ISD * 1.5


def test_layout_rejects_bad_input():
    with pytest.raises(InvalidConfig):
        build_layout(0, CIRCUMRADIUS)
    with pytest.raises(InvalidConfig):
        build_layout(7, -1.0)


def test_seven_cell_wraparound_neighbours():
    layout, rrhs = build_layout(7, CIRCUMRADIUS)
    for a, b in combinations(rrhs, 2):
        assert layout.wrap_distance(a.position, b.position) == pytest.approx(ISD)


def test_wraparound_never_exceeds_direct_distance():
    layout, rrhs = build_layout(19, CIRCUMRADIUS)
    positions = np.array([rrh.position for rrh in rrhs])
    direct = np.linalg.norm(positions[:, np.newaxis] - positions[np.newaxis], axis=-1)
    wrapped = layout.distance_matrix(positions, positions)

    assert wrapped.shape == (19, 19)
    assert np.all(wrapped <= direct + 1e-9)
    assert np.allclose(np.diag(wrapped), 0.0)


def test_single_cell_has_no_images():
    layout, _ = build_layout(1, CIRCUMRADIUS)
    assert layout.wraparound_translations.shape == (1, 2)
    assert layout.wrap_distance(np.array([0.0, 0.0]), np.array([100.0, 0.0])) == pytest.approx(100.0)


def test_wrap_position():
    layout, _ = build_layout(7, CIRCUMRADIUS)
    offset = np.array([3.0, -2.0])

    assert np.allclose(layout.wrap_position(offset), offset)
    for vector in layout.lattice:
        assert np.allclose(layout.wrap_position(vector + offset), offset)


def test_inside_hexagon():
    assert inside_hexagon(np.array([0.0, 0.0]), CIRCUMRADIUS)
    assert inside_hexagon(np.array([0.0, CIRCUMRADIUS]), CIRCUMRADIUS)
    assert not inside_hexagon(np.array([0.0, CIRCUMRADIUS + 1.0]), CIRCUMRADIUS)
    assert not inside_hexagon(np.array([np.sqrt(3.0) / 2.0 * CIRCUMRADIUS + 0.1, 0.0]), CIRCUMRADIUS)


def test_drop_ues(rng):
    _, rrhs = build_layout(7, CIRCUMRADIUS)
    ues = drop_ues(rrhs, 6, CIRCUMRADIUS, rng, speed=1.5)

    assert len(ues) == 42
    assert [ue.id for ue in ues] == list(range(42))
    for ue in ues:
        rrh = rrhs[ue.serving_rrh]
        assert inside_hexagon(ue.position - rrh.position, CIRCUMRADIUS)
        assert np.linalg.norm(ue.direction) == pytest.approx(1.0)
        assert ue.speed == 1.5
        assert not ue.is_edge


def test_drop_ues_rejects_empty_cells(rng):
    _, rrhs = build_layout(7, CIRCUMRADIUS)
    with pytest.raises(InvalidConfig):
        drop_ues(rrhs, 0, CIRCUMRADIUS, rng)


def test_mobility_displacement():
    layout, _ = build_layout(7, CIRCUMRADIUS)
    moving = Ue(0, np.array([10.0, 20.0]), np.array([0.6, 0.8]), 5000.0 / 3600.0, 0)
    still = Ue(1, np.array([-5.0, 5.0]), np.array([1.0, 0.0]), 0.0, 0)

    advance_mobility([moving, still], 1e-3, layout)

    assert np.linalg.norm(moving.position - np.array([10.0, 20.0])) == pytest.approx(1.3889e-3, rel=1e-4)
    assert np.array_equal(still.position, np.array([-5.0, 5.0]))


def test_mobility_wraps_users():
    layout, _ = build_layout(7, CIRCUMRADIUS)
    ue = Ue(0, np.array([0.0, 0.0]), np.array([1.0, 0.0]), 10.0, 0)
    footprint = np.linalg.norm(layout.lattice[0]) / 2.0

    for _ in range(200):
        advance_mobility([ue], 1.0, layout)
        assert np.linalg.norm(ue.position) <= footprint * 1.2


def test_mobility_rejects_bad_step():
    layout, _ = build_layout(7, CIRCUMRADIUS)
    with pytest.raises(InvalidInput):
        advance_mobility([], 0.0, layout)


def test_update_attachment():
    ues = [
        Ue(0, np.zeros(2), np.array([1.0, 0.0]), 0.0, 0),
        Ue(1, np.zeros(2), np.array([1.0, 0.0]), 0.0, 0),
        Ue(2, np.zeros(2), np.array([1.0, 0.0]), 0.0, 1),
    ]
    losses = np.array(
        [
            [100.0, 90.0, 110.0],
            [100.0, 100.0, 120.0],
            [95.0, 101.0, 99.0],
        ]
    )

    handovers = update_attachment(ues, losses)

    assert handovers == [0, 2]
    assert [ue.serving_rrh for ue in ues] == [1, 0, 0]
    assert update_attachment(ues, losses) == []
