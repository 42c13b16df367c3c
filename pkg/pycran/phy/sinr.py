#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Per-subcarrier SINR after SIC, with and without JT-CoMP.

All terms are built from the received beam gains |h_l w_{l,n}|^2 of the
user toward every beam on the RB. Beams of RRHs which do not transmit on the
RB do not interfere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pycran.phy.beamforming import BeamSet
from pycran.phy.cluster import RbAllocation


@dataclass(frozen=True)
class SinrBreakdown:
    """The received power of a user split into its components, in watts."""

    useful: float
    intrabeam: float
    interbeam: float
    intercell: float
    noise: float

    @property
    def interference(self) -> float:
        """The total interference plus noise."""
        return self.intrabeam + self.interbeam + self.intercell + self.noise

    @property
    def sinr(self) -> float:
        """The linear SINR."""
        return self.useful / self.interference


def received_beam_gains(h_ue: np.ndarray, beam_sets: dict[int, BeamSet]) -> dict[int, np.ndarray]:
    """Return |h_l w_{l,n}|^2 for every active beam.

    Parameters
    ----------
    h_ue: np.ndarray
        The (L, N) channels of one user toward every RRH, or the (U, L, N)
        channels of every user.
    beam_sets: dict[int, BeamSet]
        The beamformers of the RRHs transmitting on the RB.

    Returns
    -------
    dict[int, np.ndarray]
        The gain of each beam of each transmitting RRH, with a leading user
        axis when all users are given.
    """
    return {rrh: np.abs(h_ue[..., rrh, :] @ beam_set.w) ** 2 for rrh, beam_set in beam_sets.items()}


def _total_power(gains: dict[int, np.ndarray], allocation: RbAllocation, rrhs) -> float:
    return float(sum(np.sum(gains[rrh]) * allocation.beam_power[rrh] for rrh in rrhs))


def sinr_no_comp(
    ue: int, rrh: int, allocation: RbAllocation, gains: dict[int, np.ndarray], noise: float
) -> SinrBreakdown:
    """Return the SINR of a user served by a single RRH.

    Parameters
    ----------
    ue: int
        The user.
    rrh: int
        The serving RRH, with a cluster containing the user.
    allocation: RbAllocation
        The allocation of the RB.
    gains: dict[int, np.ndarray]
        The received beam gains of the user.
    noise: float
        The noise power per subcarrier, in watts.

    Returns
    -------
    SinrBreakdown
        The SINR components.
    """
    cluster = allocation.cluster_of(rrh, ue)
    own = gains[rrh]
    power = allocation.beam_power[rrh]
    beam_gain = own[cluster.beam]

    return SinrBreakdown(
        useful=float(beam_gain * cluster.coefficient(ue) * power),
        intrabeam=float(beam_gain * cluster.residual(ue) * power),
        interbeam=float((np.sum(own) - beam_gain) * power),
        intercell=_total_power(gains, allocation, [other for other in gains if other != rrh]),
        noise=noise,
    )


def sinr_comp(
    ue: int,
    rrh: int,
    coalition,
    allocation: RbAllocation,
    gains: dict[int, np.ndarray],
    noise: float,
) -> SinrBreakdown:
    """Return the SINR of an edge user served jointly by a coalition.

    The useful powers of all the serving beams add up. The serving RRH
    contributes intrabeam and interbeam interference as without JT-CoMP. A
    cooperating RRH contributes the members of the serving cluster decoded
    after the user and its other beams, which are counted as intercell
    interference together with every RRH outside the coalition.

    Parameters
    ----------
    ue: int
        The edge user.
    rrh: int
        Its serving RRH.
    coalition: set[int]
        The coalition of the serving RRH.
    allocation: RbAllocation
        The allocation with JT-CoMP applied for the coalition.
    gains: dict[int, np.ndarray]
        The received beam gains of the user.
    noise: float
        The noise power per subcarrier, in watts.

    Returns
    -------
    SinrBreakdown
        The SINR components.
    """
    if len(coalition) < 2 or ue not in allocation.comp_beams:  # noqa: PLR2004
        return sinr_no_comp(ue, rrh, allocation, gains, noise)

    serving = sinr_no_comp(ue, rrh, allocation, gains, 0.0)
    useful = serving.useful
    outside = [other for other in gains if other not in coalition]
    intercell = _total_power(gains, allocation, outside)

    for coop, beam in allocation.comp_beams[ue].items():
        if coop == rrh:
            continue
        cluster = allocation.clusters[coop][beam]
        power = allocation.beam_power[coop]
        beam_gain = gains[coop][beam]
        useful += beam_gain * cluster.coefficient(ue) * power
        intercell += beam_gain * cluster.residual(ue) * power
        intercell += (np.sum(gains[coop]) - beam_gain) * power

    return SinrBreakdown(float(useful), serving.intrabeam, serving.interbeam, float(intercell), noise)
