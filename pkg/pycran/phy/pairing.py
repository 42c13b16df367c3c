#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Pairing of scheduled users into NOMA clusters."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from pycran.error import UndefinedCorrelation
from pycran.phy.enum import PairingOrder


def correlation_metric(h_s: np.ndarray, h_w: np.ndarray) -> float:
    """Return the normalised correlation |h_s h_w^H| / (|h_s| |h_w|).

    Parameters
    ----------
    h_s: np.ndarray
        The channel row vector of the strong user.
    h_w: np.ndarray
        The channel row vector of the weak user.

    Returns
    -------
    float
        The correlation, in [0, 1].
    """
    norm_s = np.linalg.norm(h_s)
    norm_w = np.linalg.norm(h_w)
    if norm_s == 0 or norm_w == 0:
        raise UndefinedCorrelation("the correlation metric is undefined for a zero channel vector")

    return float(min(1.0, np.abs(np.vdot(h_w, h_s)) / (norm_s * norm_w)))


def split_strong_weak(ue_ids: list[int], gains: dict[int, float], num_beams: int) -> tuple[list[int], list[int]]:
    """Split users into strong and weak users.

    The number of active beams is min(N, ceil(U / 2)). The users with the
    largest gain are strong, with ties going to the lower id.

    Returns
    -------
    strong: list[int]
        Strong users, in descending gain.
    weak: list[int]
        Weak users, in descending gain.
    """
    ranked = sorted(ue_ids, key=lambda ue: (-gains[ue], ue))
    n_active = min(num_beams, -(-len(ranked) // 2))
    return ranked[:n_active], ranked[n_active:]


def pair_noma_users(
    ue_ids: list[int],
    channels: dict[int, np.ndarray],
    num_beams: int,
    order: PairingOrder = PairingOrder.GREEDY,
) -> list[tuple[int, int | None]]:
    """Pair the users scheduled on an RB of one RRH.

    With 2N users there are N pairs. With fewer users, fewer beams are
    active and a strong user without a weak partner is served alone.

    Parameters
    ----------
    ue_ids: list[int]
        The distinct users scheduled on the RB.
    channels: dict[int, np.ndarray]
        The channel row vector of each user toward the RRH.
    num_beams: int
        The number of beams N.
    order: PairingOrder
        The matching rule.

    Returns
    -------
    list[tuple[int, int | None]]
        One (strong, weak) pair per active beam, beam n being entry n.
    """
    if not ue_ids:
        return []

    gains = {ue: float(np.sum(np.abs(channels[ue]) ** 2)) for ue in ue_ids}
    strong, weak = split_strong_weak(ue_ids, gains, num_beams)
    partners: dict[int, int | None] = dict.fromkeys(strong)

    if weak and PairingOrder(order) == PairingOrder.OPTIMAL:
        scores = np.array([[correlation_metric(channels[s], channels[w]) for w in weak] for s in strong])
        rows, cols = linear_sum_assignment(scores, maximize=True)
        for row, col in zip(rows, cols, strict=True):
            partners[strong[row]] = weak[col]
    else:
        remaining = sorted(weak)
        for s in strong:
            if not remaining:
                break
            best = max(remaining, key=lambda w: (correlation_metric(channels[s], channels[w]), -w))
            partners[s] = best
            remaining.remove(best)

    return [(s, partners[s]) for s in strong]
