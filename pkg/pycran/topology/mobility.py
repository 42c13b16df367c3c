#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""User movement and attachment to the serving RRH."""

from __future__ import annotations

import logging

import numpy as np

from pycran.error import InvalidInput
from pycran.topology import HexLayout, Ue

logger = logging.getLogger(__name__)


def advance_mobility(ues: list[Ue], dt: float, layout: HexLayout) -> None:
    """Move every user along its direction for a time step.

    Users which leave the footprint re-enter on the opposite side, keeping
    their direction.

    Parameters
    ----------
    ues: list[Ue]
        The users, updated in place.
    dt: float
        The time step in seconds.
    layout: HexLayout
        The grid geometry, used for wrapping.
    """
    if not dt > 0:
        raise InvalidInput(f"time step must be positive, got {dt}")

    for ue in ues:
        if ue.speed == 0:
            continue
        ue.position = layout.wrap_position(ue.position + ue.direction * ue.speed * dt)


def update_attachment(ues: list[Ue], macro_losses: np.ndarray) -> list[int]:
    """Attach each user to the RRH with the lowest macro-scale loss.

    There is no hysteresis, but a tie with the current serving RRH keeps the
    current RRH.

    Parameters
    ----------
    ues: list[Ue]
        The users, updated in place.
    macro_losses: np.ndarray
        The (U, L) matrix of macro-scale losses v in dB.

    Returns
    -------
    list[int]
        The ids of the users which were handed over, in ascending order.
    """
    handovers = []
    for ue in ues:
        losses = macro_losses[ue.id]
        best = int(np.argmin(losses))
        if losses[ue.serving_rrh] <= losses[best]:
            continue
        logger.debug("handover of UE %d from RRH %d to RRH %d", ue.id, ue.serving_rrh, best)
        ue.serving_rrh = best
        handovers.append(ue.id)

    return handovers
