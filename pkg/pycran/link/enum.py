#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Enumerators for link adaptation."""

from enum import auto

from aenum import MultiValueEnum


# pylint: disable=too-few-public-methods
class SinrAveraging(MultiValueEnum):
    """The domain the per-RB SINRs are averaged in to give an effective
    SINR."""

    LINEAR = auto(), "linear"
    DB = auto(), "db", "dB"


class Modulation(MultiValueEnum):
    """Modulation schemes of the CQI table, keyed by modulation order."""

    QPSK = 2, "QPSK"
    QAM16 = 4, "16QAM"
    QAM64 = 6, "64QAM"
    QAM256 = 8, "256QAM"
