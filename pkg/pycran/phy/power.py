#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Transmit power of beams and of the users sharing a beam."""

from __future__ import annotations

import numpy as np

from pycran.error import DegenerateChannel, InvalidInput


def beam_power(tx_power_total: float, num_beams: int, num_subcarriers: int) -> float:
    """Return the power of one beam on one subcarrier.

    The total power of an RRH is split equally between all of its beams and
    all of the available subcarriers.

    Parameters
    ----------
    tx_power_total: float
        The total transmit power in watts.
    num_beams: int
        The number of beams N.
    num_subcarriers: int
        The total number of subcarriers.

    Returns
    -------
    float
        The power per beam per subcarrier, in watts.
    """
    if tx_power_total <= 0 or num_beams < 1 or num_subcarriers < 1:
        raise InvalidInput("transmit power, beams and subcarriers must all be positive")
    return tx_power_total / (num_beams * num_subcarriers)


def ftpc_coefficients(cluster_gains, p_ftpc: float) -> np.ndarray:
    """Split a beam's power between its users with fractional transmit power
    control.

    Parameters
    ----------
    cluster_gains: array_like
        The channel gains ||h||^2 of the cluster members.
    p_ftpc: float
        The decay factor, between 0 and 1.

    Returns
    -------
    np.ndarray
        The power coefficients a_k = G_k^-p / sum_j G_j^-p, in the order of
        the gains given.
    """
    gains = np.asarray(cluster_gains, dtype=float)
    if np.any(gains <= 0):
        raise DegenerateChannel("FTPC is undefined for a zero channel gain")
    if not 0 <= p_ftpc <= 1:
        raise InvalidInput(f"the FTPC decay factor must be in [0, 1], got {p_ftpc}")

    # gains relative to the largest one
    weights = (gains / gains.max()) ** (-p_ftpc)
    return weights / weights.sum()
