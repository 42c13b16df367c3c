#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Link adaptation.

The SINR of every scheduled RB is mapped to a CQI, and so to a modulation
and code rate, separately per RB. The transport block of each RB is the
byte aligned floor of N_RE R Q_m, and the throughput of a user is the sum
over its RBs divided by the TTI duration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from pycran.error import InvalidConfig, InvalidInput, UndefinedEffectiveSinr
from pycran.link.enum import Modulation, SinrAveraging
from pycran.math import db_to_linear, linear_to_db
from pycran.math.constants import BITS_PER_BYTE, MAX_RE_PER_RB, SUBCARRIERS_PER_RB, SYMBOLS_PER_SLOT

logger = logging.getLogger(__name__)

# (modulation order, code rate x 1024) of CQI 1 to 15, for up to 256QAM
CQI_ROWS = (
    (2, 78),
    (2, 193),
    (2, 449),
    (4, 378),
    (4, 490),
    (4, 616),
    (6, 466),
    (6, 567),
    (6, 666),
    (6, 772),
    (6, 873),
    (8, 711),
    (8, 797),
    (8, 885),
    (8, 948),
)
DEFAULT_CQI_THRESHOLDS_DB = tuple(round(-6.7 + 2.1 * i, 1) for i in range(len(CQI_ROWS)))
DMRS_RE_PER_RB = 24


@dataclass(frozen=True)
class CqiTable:
    """The CQI table, and the SINR threshold of each CQI.

    Parameters
    ----------
    thresholds_db: tuple[float, ...]
        The lowest SINR, in dB, at which each of CQI 1 to 15 is selected.
    """

    thresholds_db: tuple[float, ...] = DEFAULT_CQI_THRESHOLDS_DB

    def __post_init__(self) -> None:
        thresholds = np.asarray(self.thresholds_db, dtype=float)
        if thresholds.size != len(CQI_ROWS):
            raise InvalidConfig(f"the CQI table needs {len(CQI_ROWS)} thresholds, got {thresholds.size}")
        if np.any(np.diff(thresholds) <= 0):
            raise InvalidConfig("CQI thresholds must be strictly increasing")

    @property
    def modulation_order(self) -> np.ndarray:
        """Q_m of CQI 1 to 15."""
        return np.array([row[0] for row in CQI_ROWS])

    @property
    def code_rate_x1024(self) -> np.ndarray:
        """The code rate times 1024 of CQI 1 to 15."""
        return np.array([row[1] for row in CQI_ROWS])

    @property
    def efficiency(self) -> np.ndarray:
        """The spectral efficiency of CQI 1 to 15."""
        return self.modulation_order * self.code_rate_x1024 / 1024

    def modulation(self, cqi: int) -> Modulation | None:
        """Return the modulation of a CQI, or None for CQI 0."""
        return None if cqi == 0 else Modulation(int(self.modulation_order[cqi - 1]))


@dataclass(frozen=True)
class TbsResult:
    """The transport blocks of one user in one TTI."""

    per_rb_bits: tuple[int, ...]
    total_bits: int
    throughput_bps: float


def sinr_to_cqi(sinr_linear, table: CqiTable | None = None):
    """Map linear SINR(s) to CQI.

    The CQI is the largest index whose threshold is at most the SINR in dB,
    or 0 below the lowest threshold.

    Parameters
    ----------
    sinr_linear: float or np.ndarray
        The non-negative linear SINR.
    table: CqiTable [optional]
        The CQI table.

    Returns
    -------
    int or np.ndarray
        The CQI index, 0 to 15.
    """
    table = table or CqiTable()
    sinr = np.asarray(sinr_linear, dtype=float)
    if np.any(np.isnan(sinr)):
        raise InvalidInput("cannot map a NaN SINR to a CQI")
    if np.any(sinr < 0):
        raise InvalidInput("SINR must be non-negative")

    cqi = np.searchsorted(np.asarray(table.thresholds_db), linear_to_db(sinr), side="right")
    return int(cqi) if cqi.ndim == 0 else cqi


def per_rb_tbs(cqi, table: CqiTable | None = None, layers: int = 1, dmrs_re: int = DMRS_RE_PER_RB):
    """Return the transport block size of one RB in bits.

    Parameters
    ----------
    cqi: int or np.ndarray
        The CQI index, 0 to 15.
    table: CqiTable [optional]
        The CQI table.
    layers: int
        The number of MIMO layers.
    dmrs_re: int
        The resource elements per RB used by the DM-RS.

    Returns
    -------
    int or np.ndarray
        The number of bits, rounded down to a whole byte.
    """
    table = table or CqiTable()
    cqi = np.asarray(cqi, dtype=int)
    if np.any((cqi < 0) | (cqi > len(CQI_ROWS))):
        raise InvalidInput("CQI must be between 0 and 15")

    n_re = min(MAX_RE_PER_RB, SUBCARRIERS_PER_RB * SYMBOLS_PER_SLOT - dmrs_re)
    index = np.maximum(cqi - 1, 0)
    bits = (n_re * layers * table.modulation_order[index] * table.code_rate_x1024[index]) // 1024
    bits = np.where(cqi == 0, 0, bits // BITS_PER_BYTE * BITS_PER_BYTE)

    return int(bits) if bits.ndim == 0 else bits


def ue_throughput(per_rb_sinrs, tti_seconds: float = 1e-3, table: CqiTable | None = None) -> TbsResult:
    """Return the transport blocks and throughput of a user in a TTI.

    Parameters
    ----------
    per_rb_sinrs: array_like
        The SINR of every RB the user is scheduled on.
    tti_seconds: float
        The TTI duration.
    table: CqiTable [optional]
        The CQI table.

    Returns
    -------
    TbsResult
        The per-RB and total bits and the throughput in bits per second.
    """
    sinrs = np.asarray(per_rb_sinrs, dtype=float)
    if sinrs.size == 0:
        return TbsResult((), 0, 0.0)

    bits = np.atleast_1d(per_rb_tbs(sinr_to_cqi(sinrs, table), table))
    total = int(np.sum(bits))

    return TbsResult(tuple(int(b) for b in bits), total, total / tti_seconds)


def effective_sinr(per_rb_sinrs, averaging: SinrAveraging | str = SinrAveraging.LINEAR) -> float:
    """Average the SINRs of the RBs a user is scheduled on.

    Parameters
    ----------
    per_rb_sinrs: array_like
        The linear SINR of every scheduled RB.
    averaging: SinrAveraging
        Average the linear values, or the values in dB.

    Returns
    -------
    float
        The effective SINR, as a linear ratio.
    """
    sinrs = np.asarray(per_rb_sinrs, dtype=float)
    if sinrs.size == 0:
        raise UndefinedEffectiveSinr("no RBs were scheduled, the effective SINR is undefined")

    if SinrAveraging(averaging) == SinrAveraging.DB:
        return float(db_to_linear(np.mean(linear_to_db(sinrs))))
    return float(np.mean(sinrs))
