#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for path loss, shadowing, fading and noise."""

import numpy as np
import pytest
from scipy import stats

from pycran.channel import (
    ChannelRealization,
    MacroLoss,
    PathlossModel,
    draw_shadowing,
    macro_losses,
    noise_power,
    pathloss_db,
    realize_channels,
)
from pycran.error import InvalidInput
from pycran.math import watts_to_dbm


def test_pathloss_values():
    assert pathloss_db(10.0, 5.0) == pytest.approx(63.7)
    assert pathloss_db(100.0, 3.5) == pytest.approx(22.7 * 2 + 41.0 + 20.0 * np.log10(0.7))


def test_pathloss_distance_floor():
    assert pathloss_db(1.0, 3.5) == pytest.approx(pathloss_db(10.0, 3.5))
    assert pathloss_db(0.0, 3.5) == pytest.approx(pathloss_db(10.0, 3.5))


def test_pathloss_array_and_custom_model():
    model = PathlossModel(slope=30.0, intercept=30.0, frequency_slope=0.0, min_distance=1.0)
    losses = pathloss_db(np.array([1.0, 10.0, 100.0]), 2.0, model)
    assert np.allclose(losses, [30.0, 60.0, 90.0])


def test_pathloss_rejects_bad_input():
    with pytest.raises(InvalidInput):
        pathloss_db(np.nan, 3.5)
    with pytest.raises(InvalidInput):
        pathloss_db(10.0, 0.0)


def test_shadowing(rng):
    assert np.array_equal(draw_shadowing(rng, 0.0, (3, 2)), np.zeros((3, 2)))
    with pytest.raises(InvalidInput):
        draw_shadowing(rng, -1.0)

    samples = draw_shadowing(rng, 4.0, 20000)
    assert np.std(samples) == pytest.approx(4.0, rel=0.05)
    assert stats.kstest(samples / 4.0, "norm").pvalue > 1e-3


def test_macro_loss_identity(rng):
    distances = rng.uniform(5.0, 500.0, (5, 3))
    shadowing = rng.normal(0.0, 4.0, (5, 3))
    gain_tx = np.array([8.17, 8.17, 5.0])
    gain_rx = np.zeros(5)

    macro = macro_losses(distances, shadowing, gain_tx, gain_rx, 3.5)

    expected = pathloss_db(distances, 3.5) + shadowing - gain_tx[np.newaxis, :] - gain_rx[:, np.newaxis]
    assert macro.v.shape == (5, 3)
    assert np.allclose(macro.v, expected)


def test_fading_mean_power(rng):
    n_ues = 4000
    v = np.full((n_ues, 1), 20.0)
    macro = macro_losses(np.full((n_ues, 1), 100.0), np.zeros((n_ues, 1)), np.zeros(1), np.zeros(n_ues), 3.5)
    macro = type(macro)(v, np.zeros_like(v), np.zeros_like(v), np.zeros_like(v))

    channels = realize_channels(macro, 4, rng)

    assert isinstance(channels, ChannelRealization)
    assert channels.h.shape == (n_ues, 1, 4)
    assert np.mean(np.abs(channels.h) ** 2) == pytest.approx(0.01, rel=0.05)
    assert channels.gains.shape == (n_ues, 1)
    assert np.allclose(channels[0], channels.h[0])


def test_noise_power():
    noise = noise_power(15e3)
    assert watts_to_dbm(noise) == pytest.approx(-174.0 + 9.0 + 10.0 * np.log10(15e3))
    assert noise_power(30e3) == pytest.approx(2.0 * noise)

    with pytest.raises(InvalidInput):
        noise_power(0.0)


def unit_macro(v):
    """Macro losses of exactly v dB."""
    zeros = np.zeros_like(v)
    return MacroLoss(v, zeros, zeros, zeros)


def test_fading_amplitude_is_rayleigh(rng):
    v = rng.uniform(0.0, 40.0, (25000, 1))

    channels = realize_channels(unit_macro(v), 4, rng)
    amplitude = np.abs(channels.h) / np.sqrt(10.0 ** (-v[..., np.newaxis] / 10.0))

    assert stats.kstest(amplitude.ravel(), stats.rayleigh(scale=1.0 / np.sqrt(2.0)).cdf).pvalue > 1e-3


def test_fading_is_independent_between_ttis(rng):
    macro = unit_macro(np.zeros((4, 1)))
    draws = np.array([realize_channels(macro, 4, rng).h.ravel() for _ in range(10_000)])

    lagged = np.abs(np.sum(draws[1:] * np.conj(draws[:-1])))
    power = np.sum(np.abs(draws[1:]) ** 2)

    assert lagged / power < 0.02
