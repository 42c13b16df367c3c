#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Edge users and the carrier-to-interference matrix.

The edge users are the fraction of scheduled users with the lowest effective
SINR without JT-CoMP. Each edge user reports the macro-scale C/I toward
every interfering RRH, the reports of the edge users of an RRH are averaged
in dB, and the sorted columns form the (L - 1) x L matrix which orders the
merge attempts of the coalition formation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from pycran.error import InvalidInput
from pycran.math.constants import INFINITE_CI


@dataclass(frozen=True)
class EdgeClassification:
    """The edge users of a TTI.

    Parameters
    ----------
    order: tuple[int, ...]
        The edge users in ascending effective SINR, ties by id.
    threshold: float | None
        The highest effective SINR among the edge users.
    """

    order: tuple[int, ...]
    threshold: float | None

    @property
    def edge(self) -> frozenset[int]:
        """The set of edge users."""
        return frozenset(self.order)

    @property
    def rank(self) -> dict[int, int]:
        """The position of each edge user in the edge order."""
        return {ue: i for i, ue in enumerate(self.order)}

    def flags(self, ue_ids) -> dict[int, bool]:
        """Return the edge flag of each user."""
        edge = self.edge
        return {ue: ue in edge for ue in ue_ids}


def classify_edge_ues(effective_sinrs: dict[int, float], edge_fraction: float) -> EdgeClassification:
    """Mark the users with the lowest effective SINR as edge users.

    Parameters
    ----------
    effective_sinrs: dict[int, float]
        The effective SINR without JT-CoMP of every scheduled user.
    edge_fraction: float
        The fraction of users which are edge users, in (0, 1).

    Returns
    -------
    EdgeClassification
        The floor(edge_fraction U) edge users.
    """
    if not 0 < edge_fraction < 1:
        raise InvalidInput(f"the edge fraction must be in (0, 1), got {edge_fraction}")

    n_edge = math.floor(edge_fraction * len(effective_sinrs) + 1e-9)
    ranked = sorted(effective_sinrs, key=lambda ue: (effective_sinrs[ue], ue))[:n_edge]
    threshold = effective_sinrs[ranked[-1]] if ranked else None

    return EdgeClassification(tuple(ranked), threshold)


def ci_value(v: np.ndarray, edge_ue: int, serving_rrh: int, interferer_rrh: int) -> float:
    """Return the C/I of an edge user toward an interferer, in dB.

    Parameters
    ----------
    v: np.ndarray
        The (U, L) macro-scale losses in dB.
    edge_ue: int
        The edge user.
    serving_rrh: int
        Its serving RRH.
    interferer_rrh: int
        The interfering RRH.

    Returns
    -------
    float
        v_interferer - v_serving.
    """
    return float(v[edge_ue, interferer_rrh] - v[edge_ue, serving_rrh])


@dataclass(frozen=True)
class CiMatrix:
    """The sorted, averaged C/I of every RRH toward its interferers.

    Parameters
    ----------
    values: np.ndarray
        (L - 1, L) C/I in dB, each column ascending. Columns of RRHs without
        edge users are infinite.
    ids: np.ndarray
        (L - 1, L) interferer id of every entry.
    """

    values: np.ndarray
    ids: np.ndarray

    def row_pairs(self, row: int, threshold_db: float) -> list[tuple[float, int, int]]:
        """Return the examined pairs of a row.

        The RRHs are in priority order, ascending C/I with ties by RRH id,
        and only pairs at or below the threshold are kept.

        Returns
        -------
        list[tuple[float, int, int]]
            (C/I, RRH, candidate) for every examined pair.
        """
        pairs = [
            (float(self.values[row, rrh]), rrh, int(self.ids[row, rrh]))
            for rrh in range(self.values.shape[1])
            if self.values[row, rrh] <= threshold_db
        ]
        return sorted(pairs)

    def linked(self, rrh: int, candidate: int, threshold_db: float) -> bool:
        """Check if an RRH sees a candidate as an interferer at or below the
        threshold."""
        column = self.values[:, rrh]
        return bool(np.any((self.ids[:, rrh] == candidate) & (column <= threshold_db)))

    def count_linked(self, threshold_db: float) -> int:
        """The number of entries at or below the threshold."""
        return int(np.count_nonzero(self.values <= threshold_db))


def build_ci_matrix(edge_ues_by_rrh: dict[int, list[int]], v: np.ndarray) -> CiMatrix:
    """Build the C/I matrix.

    Parameters
    ----------
    edge_ues_by_rrh: dict[int, list[int]]
        The edge users of each RRH.
    v: np.ndarray
        The (U, L) macro-scale losses in dB.

    Returns
    -------
    CiMatrix
        The matrix and the interferer ids.
    """
    n_rrh = v.shape[1]
    values = np.full((n_rrh - 1, n_rrh), INFINITE_CI)
    ids = np.zeros((n_rrh - 1, n_rrh), dtype=int)

    for rrh in range(n_rrh):
        interferers = np.array([other for other in range(n_rrh) if other != rrh], dtype=int)
        edge_ues = edge_ues_by_rrh.get(rrh, [])
        if not edge_ues or interferers.size == 0:
            ids[:, rrh] = interferers
            continue
        averaged = np.mean([[ci_value(v, ue, rrh, other) for other in interferers] for ue in edge_ues], axis=0)
        order = np.argsort(averaged, kind="stable")
        values[:, rrh] = averaged[order]
        ids[:, rrh] = interferers[order]

    return CiMatrix(values, ids)
