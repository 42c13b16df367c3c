#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""A snapshot of the network, compared between TTIs to decide when the
clustering runs again."""

from __future__ import annotations

from dataclasses import dataclass

from pycran.game.partition import Partition
from pycran.topology import Ue


@dataclass(frozen=True)
class NetworkState:
    """The attachment, edge status and partition of the network at a TTI.

    Parameters
    ----------
    tti: int
        The TTI index.
    serving: tuple[int, ...]
        The serving RRH of each user, indexed by user id.
    edge: frozenset[int]
        The edge users.
    partition: Partition
        The partition used for the TTI.
    """

    tti: int
    serving: tuple[int, ...]
    edge: frozenset[int]
    partition: Partition

    @classmethod
    def capture(cls, tti: int, ues: list[Ue], edge: frozenset[int], partition: Partition) -> NetworkState:
        """Take a snapshot of the users."""
        return cls(tti, tuple(ue.serving_rrh for ue in ues), frozenset(edge), partition)

    def served_by(self, rrh: int) -> list[int]:
        """The users attached to an RRH."""
        return [ue for ue, serving in enumerate(self.serving) if serving == rrh]
