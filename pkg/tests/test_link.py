#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the CQI mapping, transport block sizes and effective SINR."""

import numpy as np
import pytest

from pycran.error import InvalidConfig, InvalidInput, UndefinedEffectiveSinr
from pycran.link import DEFAULT_CQI_THRESHOLDS_DB, CqiTable, effective_sinr, per_rb_tbs, sinr_to_cqi, ue_throughput
from pycran.link.enum import Modulation, SinrAveraging
from pycran.math import db_to_linear


def test_default_table():
    table = CqiTable()
    assert len(table.thresholds_db) == 15
    assert DEFAULT_CQI_THRESHOLDS_DB[0] == -6.7
    assert DEFAULT_CQI_THRESHOLDS_DB[-1] == pytest.approx(22.7)
    assert table.efficiency[-1] == pytest.approx(8 * 948 / 1024)
    assert table.modulation(0) is None
    assert table.modulation(1) == Modulation.QPSK
    assert table.modulation(15) == Modulation.QAM256
    assert Modulation("64QAM") == Modulation.QAM64


def test_table_validation():
    with pytest.raises(InvalidConfig):
        CqiTable(tuple(range(14)))
    with pytest.raises(InvalidConfig):
        CqiTable((0.0,) * 15)


@pytest.mark.parametrize(
    ("sinr_db", "cqi"),
    [(-20.0, 0), (-6.8, 0), (-6.6, 1), (0.0, 4), (10.0, 8), (22.6, 14), (22.8, 15), (40.0, 15)],
)
def test_sinr_to_cqi(sinr_db, cqi):
    assert sinr_to_cqi(db_to_linear(sinr_db)) == cqi


def test_sinr_to_cqi_edge_cases():
    assert sinr_to_cqi(0.0) == 0
    assert list(sinr_to_cqi(db_to_linear(np.array([-10.0, 30.0])))) == [0, 15]
    with pytest.raises(InvalidInput):
        sinr_to_cqi(np.nan)
    with pytest.raises(InvalidInput):
        sinr_to_cqi(-1.0)


def test_per_rb_tbs():
    assert per_rb_tbs(0) == 0
    assert per_rb_tbs(1) == 16
    assert per_rb_tbs(15) == 1064
    assert per_rb_tbs(15, layers=2) == 2128
    assert all(bits % 8 == 0 for bits in per_rb_tbs(np.arange(16)))
    assert np.all(np.diff(per_rb_tbs(np.arange(16))) >= 0)
    with pytest.raises(InvalidInput):
        per_rb_tbs(16)


def test_ue_throughput():
    assert ue_throughput([]).throughput_bps == 0.0

    result = ue_throughput(db_to_linear(np.array([30.0, 30.0, -30.0])))
    assert result.per_rb_bits == (1064, 1064, 0)
    assert result.total_bits == 2128
    assert result.throughput_bps == pytest.approx(2.128e6)
    assert ue_throughput([1000.0], tti_seconds=0.5e-3).throughput_bps == pytest.approx(2.128e6)


def test_effective_sinr():
    assert effective_sinr([1.0, 100.0]) == pytest.approx(50.5)
    assert effective_sinr([1.0, 100.0], SinrAveraging.DB) == pytest.approx(10.0)
    assert effective_sinr([1.0, 100.0], "dB") == pytest.approx(10.0)
    with pytest.raises(UndefinedEffectiveSinr):
        effective_sinr([])
