#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Macro-scale losses and fast fading.

The macro-scale loss between a user and an RRH is made up of the path loss,
a log-normal shadowing term frozen for the run and the antenna gains. The
channel vector of each pair is redrawn every TTI from Rayleigh fading scaled
by the macro-scale loss, and is flat over every RB of the TTI.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from pycran.error import InvalidInput
from pycran.math import db_to_linear, dbm_to_watts
from pycran.math.constants import MIN_PATHLOSS_DISTANCE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathlossModel:
    """A log-distance path loss model of the form A log10(d) + B + C
    log10(f / 5), with a distance floor.

    The defaults are the line-of-sight urban microcell coefficients.
    """

    slope: float = 22.7
    intercept: float = 41.0
    frequency_slope: float = 20.0
    min_distance: float = MIN_PATHLOSS_DISTANCE

    def __call__(self, distance: float | np.ndarray, carrier_ghz: float) -> float | np.ndarray:
        distance = np.asarray(distance, dtype=float)
        if np.any(np.isnan(distance)) or np.isnan(carrier_ghz):
            raise InvalidInput("NaN passed to the path loss model")
        if carrier_ghz <= 0:
            raise InvalidInput(f"carrier frequency must be positive, got {carrier_ghz} GHz")

        loss = (
            self.slope * np.log10(np.maximum(distance, self.min_distance))
            + self.intercept
            + self.frequency_slope * np.log10(carrier_ghz / 5.0)
        )
        return float(loss) if loss.ndim == 0 else loss


def pathloss_db(distance: float | np.ndarray, carrier_ghz: float, model: PathlossModel | None = None):
    """Return the path loss in dB.

    Parameters
    ----------
    distance: float or np.ndarray
        The distance in metres, clamped to the model's floor.
    carrier_ghz: float
        The carrier frequency in GHz.
    model: PathlossModel [optional]
        The path loss coefficients, default urban microcell.

    Returns
    -------
    float or np.ndarray
        The path loss in dB.
    """
    return (model or PathlossModel())(distance, carrier_ghz)


def draw_shadowing(rng: np.random.Generator, std_db: float, size: int | tuple[int, ...] | None = None):
    """Draw zero mean log-normal shadowing, in dB."""
    if std_db < 0:
        raise InvalidInput(f"shadowing standard deviation must be non-negative, got {std_db}")
    if std_db == 0:
        return 0.0 if size is None else np.zeros(size)
    return rng.normal(0.0, std_db, size)


@dataclass(frozen=True)
class MacroLoss:
    """The macro-scale loss components of every (UE, RRH) pair, shape (U, L).

    The total loss is always computed from the components, so v = pathloss +
    shadowing - G_T - G_R holds exactly.
    """

    pathloss: np.ndarray
    shadowing: np.ndarray
    gain_tx: np.ndarray
    gain_rx: np.ndarray

    @property
    def v(self) -> np.ndarray:
        """The total macro-scale loss in dB."""
        return self.pathloss + self.shadowing - self.gain_tx - self.gain_rx


def macro_losses(
    distances: np.ndarray,
    shadowing: np.ndarray,
    gain_tx: np.ndarray,
    gain_rx: np.ndarray,
    carrier_ghz: float,
    model: PathlossModel | None = None,
) -> MacroLoss:
    """Compute the macro-scale losses of every pair.

    Parameters
    ----------
    distances: np.ndarray
        The (U, L) wraparound distances in metres.
    shadowing: np.ndarray
        The (U, L) frozen shadowing in dB.
    gain_tx: np.ndarray
        The transmit antenna gain of each RRH in dBi, shape (L,).
    gain_rx: np.ndarray
        The receive antenna gain of each user in dBi, shape (U,).
    carrier_ghz: float
        The carrier frequency in GHz.
    model: PathlossModel [optional]
        The path loss coefficients.

    Returns
    -------
    MacroLoss
        The loss components.
    """
    shape = distances.shape
    return MacroLoss(
        pathloss=np.asarray(pathloss_db(distances, carrier_ghz, model)).reshape(shape),
        shadowing=np.asarray(shadowing, dtype=float).reshape(shape),
        gain_tx=np.broadcast_to(np.asarray(gain_tx, dtype=float)[np.newaxis, :], shape),
        gain_rx=np.broadcast_to(np.asarray(gain_rx, dtype=float)[:, np.newaxis], shape),
    )


@dataclass(frozen=True)
class ChannelRealization:
    """The channel vectors of one TTI.

    Parameters
    ----------
    h: np.ndarray
        Complex array of shape (U, L, N), the row vector from RRH l to UE u.
    """

    h: np.ndarray

    def __getitem__(self, key):
        return self.h[key]

    @property
    def gains(self) -> np.ndarray:
        """The channel gains ||h||^2, shape (U, L)."""
        return np.sum(np.abs(self.h) ** 2, axis=-1)


def realize_channels(macro: MacroLoss, num_antennas: int, rng: np.random.Generator) -> ChannelRealization:
    """Draw a fresh Rayleigh faded channel for every pair.

    Parameters
    ----------
    macro: MacroLoss
        The macro-scale losses of the TTI.
    num_antennas: int
        The number of transmit antennas N.
    rng: np.random.Generator
        The fading random stream.

    Returns
    -------
    ChannelRealization
        The channel vectors, with E[|h_i|^2] = 10^(-v/10) per antenna.
    """
    v = macro.v
    shape = (*v.shape, num_antennas)
    fading = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    amplitude = np.sqrt(db_to_linear(-v))[..., np.newaxis]

    return ChannelRealization(amplitude * fading)


def noise_power(
    bandwidth_hz: float, thermal_density_dbm_hz: float = -174.0, noise_figure_db: float = 9.0
) -> float:
    """Return the thermal noise power in a bandwidth, in watts.

    Parameters
    ----------
    bandwidth_hz: float
        The bandwidth, usually one subcarrier.
    thermal_density_dbm_hz: float
        The thermal noise density in dBm/Hz.
    noise_figure_db: float
        The receiver noise figure.

    Returns
    -------
    float
        The noise power in watts.
    """
    if not bandwidth_hz > 0:
        raise InvalidInput(f"bandwidth must be positive, got {bandwidth_hz}")
    return float(dbm_to_watts(thermal_density_dbm_hz + noise_figure_db + 10.0 * np.log10(bandwidth_hz)))
