#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Enumerators for the clustering schemes."""

from enum import auto

from aenum import MultiValueEnum


# pylint: disable=too-few-public-methods
class Scheme(MultiValueEnum):
    """The clustering scheme of a run.

    NO_COMP never clusters, SC_JT_COMP uses fixed distance based clusters,
    GC_JT_COMP clusters greedily on edge throughput and GAME_JT_COMP runs the
    merge and split coalition formation.
    """

    NO_COMP = auto(), "no_comp", "nocomp"
    SC_JT_COMP = auto(), "sc_jt_comp", "sc"
    GC_JT_COMP = auto(), "gc_jt_comp", "gc"
    GAME_JT_COMP = auto(), "game_jt_comp", "game"

    @property
    def label(self) -> str:
        """The name used in configuration and output files."""
        return self._values_[1]

    @property
    def reactivates(self) -> bool:
        """Whether the clustering is run again on handovers and edge status
        changes."""
        return self in (Scheme.GC_JT_COMP, Scheme.GAME_JT_COMP)
