#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Zero-forcing beamforming toward the strong user of each cluster."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from pycran.error import InvalidInput
from pycran.math.vector import renorm_vec

logger = logging.getLogger(__name__)

DEFAULT_MAX_CONDITION = 1e8
REGULARISATION_SCALE = 1e-10


@dataclass(frozen=True)
class BeamSet:
    """The unit-norm beamformers of one RRH on one RB.

    Parameters
    ----------
    rrh: int
        The RRH id.
    w: np.ndarray
        The (N, n_b) beamforming matrix, one column per active beam.
    regularized: bool
        Set when the inverse of H H^H had to be regularised.
    """

    rrh: int
    w: np.ndarray
    regularized: bool = False

    @property
    def num_beams(self) -> int:
        """The number of active beams."""
        return self.w.shape[1]


def zf_beamformers(strong_channels: np.ndarray, rrh: int = 0, max_condition: float = DEFAULT_MAX_CONDITION) -> BeamSet:
    """Compute the normalised zero-forcing beamformers.

    The beamforming matrix is the Moore-Penrose pseudo-inverse
    W = H^H (H H^H)^-1 of the strong users' channels, with each column
    normalised to unit length. When H is too badly conditioned a Tikhonov
    term of 1e-10 trace(H H^H) / N is added before inverting.

    Parameters
    ----------
    strong_channels: np.ndarray
        The (n_b, N) matrix whose rows are the strong users' channels, with
        n_b <= N.
    rrh: int
        The RRH id, for book keeping.
    max_condition: float
        The largest condition number of H inverted without regularisation.

    Returns
    -------
    BeamSet
        The beamformers, column n steered at strong user n.
    """
    h = np.atleast_2d(np.asarray(strong_channels, dtype=complex))
    n_beams, n_antennas = h.shape
    if n_beams > n_antennas:
        raise InvalidInput(f"cannot zero-force {n_beams} users with {n_antennas} antennas")

    gram = h @ h.conj().T
    regularized = bool(np.linalg.cond(h) > max_condition)
    if regularized:
        epsilon = REGULARISATION_SCALE * np.real(np.trace(gram)) / n_antennas
        gram = gram + epsilon * np.eye(n_beams)
        logger.warning("H for RRH %d is badly conditioned, regularising the ZF inverse", rrh)

    w = h.conj().T @ linalg.solve(gram, np.eye(n_beams), assume_a="her")
    w = np.column_stack([renorm_vec(column) for column in w.T])

    return BeamSet(rrh, w, regularized)
