#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Cell layout and the radio heads and users which live in it.

The network is a spiral hexagonal grid of RRHs, centered at the origin. The
composite footprint of the grid tiles the plane, so interference and
mobility are computed on a torus: every RRH is seen at its nearest image and
users leaving the footprint re-enter on the opposite side.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from pycran.error import InvalidConfig
from pycran.math.vector import unit_direction

logger = logging.getLogger(__name__)

# Axial directions of a hexagonal grid, in the order used to walk a ring
AXIAL_DIRECTIONS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))
SQRT3 = np.sqrt(3.0)


@dataclass
class Rrh:
    """A remote radio head."""

    id: int
    position: np.ndarray
    tx_power_total: float = 1.0
    num_antennas: int = 4
    antenna_gain: float = 8.17


@dataclass
class Ue:
    """A single-antenna user, moving in a straight line at constant speed."""

    id: int
    position: np.ndarray
    direction: np.ndarray
    speed: float
    serving_rrh: int
    antenna_gain: float = 0.0
    is_edge: bool = False


@dataclass(frozen=True)
class HexLayout:
    """The geometry of the grid.

    Parameters
    ----------
    rrh_count: int
        The number of RRHs in the grid.
    circumradius: float
        The circumradius of each hexagonal cell, in metres.
    rings: int
        The number of rings of the smallest full hexagon containing the grid.
    wraparound_translations: np.ndarray
        The images of the footprint used for interference, including the zero
        translation, shape (T, 2).
    lattice: np.ndarray
        The six lattice vectors which tile the plane with the footprint.
    """

    rrh_count: int
    circumradius: float
    rings: int
    wraparound_translations: np.ndarray = field(repr=False)
    lattice: np.ndarray = field(repr=False)

    @property
    def inter_site_distance(self) -> float:
        """The distance between neighbouring RRHs."""
        return SQRT3 * self.circumradius

    def wrap_distance(self, point_a: np.ndarray, point_b: np.ndarray) -> np.ndarray:
        """Return the distance from point(s) a to point(s) b at its nearest
        image.

        Parameters
        ----------
        point_a: np.ndarray
            Coordinates of shape (..., 2).
        point_b: np.ndarray
            Coordinates broadcastable against point_a.

        Returns
        -------
        np.ndarray
            The minimum distance over all wraparound images of point b.
        """
        delta = np.asarray(point_a, dtype=float) - np.asarray(point_b, dtype=float)
        images = delta[..., np.newaxis, :] - self.wraparound_translations
        return np.min(np.linalg.norm(images, axis=-1), axis=-1)

    def distance_matrix(self, ue_positions: np.ndarray, rrh_positions: np.ndarray) -> np.ndarray:
        """Return the (U, L) wraparound distance matrix."""
        return self.wrap_distance(ue_positions[:, np.newaxis, :], rrh_positions[np.newaxis, :, :])

    def wrap_position(self, position: np.ndarray) -> np.ndarray:
        """Move a position back into the footprint around the origin.

        The nearest lattice point is subtracted until the origin is the
        nearest lattice point.

        Parameters
        ----------
        position: np.ndarray
            The position to wrap.

        Returns
        -------
        np.ndarray
            The equivalent position inside the footprint.
        """
        position = np.array(position, dtype=float)
        while True:
            candidates = np.linalg.norm(position - self.lattice, axis=1)
            nearest = int(np.argmin(candidates))
            if candidates[nearest] >= np.linalg.norm(position):
                return position
            position = position - self.lattice[nearest]


def _axial_to_cartesian(q: int, r: int, inter_site_distance: float) -> np.ndarray:
    return inter_site_distance * np.array([q + r / 2.0, SQRT3 / 2.0 * r])


def _spiral_axial(n_sites: int) -> list[tuple[int, int]]:
    """Return the axial coordinates of the first n sites of a hexagonal
    spiral, center first then ring by ring."""
    sites = [(0, 0)]
    ring = 1
    while len(sites) < n_sites:
        q, r = AXIAL_DIRECTIONS[4][0] * ring, AXIAL_DIRECTIONS[4][1] * ring
        for dq, dr in AXIAL_DIRECTIONS:
            for _ in range(ring):
                sites.append((q, r))
                q, r = q + dq, r + dr
        ring += 1

    return sites[:n_sites]


def rings_for_count(rrh_count: int) -> int:
    """Return the number of rings of the smallest full hexagon holding a
    number of sites."""
    rings = 0
    while 3 * rings * (rings + 1) + 1 < rrh_count:
        rings += 1
    return rings


def build_layout(
    rrh_count: int,
    circumradius: float,
    *,
    tx_power_total: float = 1.0,
    num_antennas: int = 4,
    antenna_gain: float = 8.17,
) -> tuple[HexLayout, list[Rrh]]:
    """Build the spiral hexagonal grid of RRHs.

    For counts which are not a centred hexagonal number, the wraparound of the
    smallest enclosing full hexagon is used.

    Parameters
    ----------
    rrh_count: int
        The number of RRHs.
    circumradius: float
        The cell circumradius in metres.
    tx_power_total: float
        The total transmit power of each RRH, in watts.
    num_antennas: int
        The number of transmit antennas of each RRH.
    antenna_gain: float
        The transmit antenna gain in dBi.

    Returns
    -------
    layout: HexLayout
        The geometry of the grid.
    rrhs: list[Rrh]
        The RRHs, with ids in spiral order.
    """
    if rrh_count <= 0:
        raise InvalidConfig(f"rrh_count must be at least 1, got {rrh_count}")
    if circumradius <= 0:
        raise InvalidConfig(f"circumradius must be positive, got {circumradius}")

    isd = SQRT3 * circumradius
    rrhs = [
        Rrh(i, _axial_to_cartesian(q, r, isd), tx_power_total, num_antennas, antenna_gain)
        for i, (q, r) in enumerate(_spiral_axial(rrh_count))
    ]

    rings = rings_for_count(rrh_count)
    q, r = rings + 1, rings
    lattice = []
    for _ in range(6):
        lattice.append(_axial_to_cartesian(q, r, isd))
        q, r = -r, q + r
    lattice = np.array(lattice)

    translations = np.zeros((1, 2))
    if rings > 0:
        translations = np.vstack([translations, lattice])

    layout = HexLayout(rrh_count, circumradius, rings, translations, lattice)
    logger.debug("built %d RRHs on %d ring(s), inter-site distance %.2f m", rrh_count, rings, isd)

    return layout, rrhs


def inside_hexagon(offset: np.ndarray, circumradius: float) -> bool:
    """Check if an offset from a cell center lies inside the pointy-top
    hexagonal cell."""
    x, y = abs(offset[0]), abs(offset[1])
    return x <= SQRT3 / 2.0 * circumradius and y + x / SQRT3 <= circumradius


def drop_ues(
    rrhs: list[Rrh],
    ues_per_cell: int,
    circumradius: float,
    rng: np.random.Generator,
    *,
    speed: float = 0.0,
    antenna_gain: float = 0.0,
) -> list[Ue]:
    """Drop users uniformly inside the hexagonal cell of each RRH.

    Positions are drawn by rejection sampling from the bounding box of the
    hexagon. Each user gets a uniformly random direction which it keeps for
    the whole run.

    Parameters
    ----------
    rrhs: list[Rrh]
        The RRHs whose cells are populated.
    ues_per_cell: int
        The number of users in each cell.
    circumradius: float
        The cell circumradius in metres.
    rng: np.random.Generator
        The topology random stream.
    speed: float
        The speed of every user, in m/s.
    antenna_gain: float
        The receive antenna gain in dBi.

    Returns
    -------
    list[Ue]
        The users, with ids ordered by cell.
    """
    if ues_per_cell < 1:
        raise InvalidConfig(f"ues_per_cell must be at least 1, got {ues_per_cell}")

    half_width = SQRT3 / 2.0 * circumradius
    ues = []
    for rrh in rrhs:
        for _ in range(ues_per_cell):
            while True:
                offset = rng.uniform((-half_width, -circumradius), (half_width, circumradius))
                if inside_hexagon(offset, circumradius):
                    break
            direction = unit_direction(rng.uniform(0.0, 2.0 * np.pi))
            ues.append(Ue(len(ues), rrh.position + offset, direction, speed, rrh.id, antenna_gain))

    return ues
