#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Enumerators for the physical layer."""

from enum import auto

from aenum import MultiValueEnum


# pylint: disable=too-few-public-methods
class PairingOrder(MultiValueEnum):
    """How strong users are matched to weak users.

    GREEDY matches strong users one at a time, in order of descending channel
    gain. OPTIMAL maximises the total correlation over all pairs.
    """

    GREEDY = auto(), "greedy"
    OPTIMAL = auto(), "optimal"
