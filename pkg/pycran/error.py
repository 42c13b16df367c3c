#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Error codes and custom exceptions for pycran.

These are pretty basic, and don't do much. The exit codes are the ones
returned by the command line interface.
"""

EXIT_SUCCESS = 0
EXIT_FAIL = 1
EXIT_CONFIG_ERROR = 2
EXIT_IO_ERROR = 3


class PyCranError(Exception):
    """Base exception for everything raised by pycran."""


class InvalidConfig(PyCranError):
    """Exception for when a scenario parameter is missing, unknown or out of
    range."""


class InvalidInput(PyCranError):
    """Exception for when a numerical input is NaN or outside its domain."""


class UndefinedCorrelation(PyCranError):
    """Exception for when the correlation metric is asked for a zero
    channel vector."""


class DegenerateChannel(PyCranError):
    """Exception for when a channel gain of zero is used for power
    allocation."""


class UndefinedEffectiveSinr(PyCranError):
    """Exception for when an effective SINR is requested for a UE which was
    not scheduled."""


class InvalidComparison(PyCranError):
    """Exception for when two payoff vectors over different RRHs are
    compared."""


class PreconditionViolation(PyCranError):
    """Exception for when a coalition operation is attempted on a coalition
    which does not allow it."""
