#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Calculate basic quantities.

This sub-module houses the conversions between logarithmic and linear
quantities which are used throughout the simulator, i.e. dBm to watts,
as well as conversions of speeds into SI units.
"""

import numpy as np
from astropy import units


def db_to_linear(value_db):
    """Convert a value in decibels into a linear ratio.

    Parameters
    ----------
    value_db: float or np.ndarray
        The value in dB.

    Returns
    -------
    The linear ratio.
    """

    return 10.0 ** (np.asarray(value_db, dtype=float) / 10.0)


def linear_to_db(value):
    """Convert a linear ratio into decibels.

    Zero is mapped to -inf rather than raising a warning.

    Parameters
    ----------
    value: float or np.ndarray
        The linear ratio.

    Returns
    -------
    The value in dB.
    """

    with np.errstate(divide="ignore"):
        return 10.0 * np.log10(np.asarray(value, dtype=float))


def dbm_to_watts(power_dbm):
    """Convert a power in dBm into watts.

    Parameters
    ----------
    power_dbm: float or np.ndarray
        The power in dBm.

    Returns
    -------
    The power in watts.
    """

    return (db_to_linear(power_dbm) * units.mW).to_value(units.W)


def watts_to_dbm(power_watts):
    """Convert a power in watts into dBm.

    Parameters
    ----------
    power_watts: float or np.ndarray
        The power in watts.

    Returns
    -------
    The power in dBm.
    """

    return linear_to_db((np.asarray(power_watts, dtype=float) * units.W).to_value(units.mW))


def kmh_to_ms(speed_kmh):
    """Convert a speed from km/h to m/s.

    Parameters
    ----------
    speed_kmh: float
        The speed in km/h.

    Returns
    -------
    The speed in m/s.
    """

    return (speed_kmh * units.km / units.h).to_value(units.m / units.s)
