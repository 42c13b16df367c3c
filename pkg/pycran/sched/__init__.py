#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Round robin scheduling of users onto RBs.

Every TTI each RRH draws a fresh random sequence of its attached users and
hands out groups of K N users per RB in a cyclic manner, wrapping the
sequence until every RB is allocated.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RbGrid:
    """The users one RRH schedules on each of its RBs.

    Parameters
    ----------
    num_rbs: int
        The number of RBs.
    groups: tuple[tuple[int, ...], ...]
        The K N scheduled users of each RB. A user appears more than once in
        a group only when the RRH has fewer than K N users.
    """

    num_rbs: int
    groups: tuple[tuple[int, ...], ...]

    def distinct(self, rb: int) -> list[int]:
        """Return the users of an RB with duplicates removed, keeping the
        first occurrence."""
        if not self.groups:
            return []
        return list(dict.fromkeys(self.groups[rb]))

    def scheduled_rbs(self) -> dict[int, list[int]]:
        """Return the RBs each user is scheduled on."""
        rbs: dict[int, list[int]] = {}
        for rb in range(len(self.groups)):
            for ue in self.distinct(rb):
                rbs.setdefault(ue, []).append(rb)
        return rbs

    def counts(self) -> Counter:
        """Return how many RBs each user is scheduled on."""
        return Counter({ue: len(rbs) for ue, rbs in self.scheduled_rbs().items()})


def round_robin_schedule(rrh_ues: list[int], num_rbs: int, group_size: int, rng: np.random.Generator) -> RbGrid:
    """Schedule the users of an RRH for one TTI.

    RB r takes entries [r K N, (r + 1) K N) of the endlessly repeated random
    sequence of users.

    Parameters
    ----------
    rrh_ues: list[int]
        The users attached to the RRH.
    num_rbs: int
        The number of RBs.
    group_size: int
        K N, the number of users per RB.
    rng: np.random.Generator
        The scheduling random stream.

    Returns
    -------
    RbGrid
        The schedule, empty when the RRH has no users.
    """
    if not rrh_ues:
        return RbGrid(num_rbs, ())

    sequence = rng.permutation(np.asarray(sorted(rrh_ues)))
    n_ues = len(sequence)
    groups = tuple(
        tuple(int(sequence[(rb * group_size + i) % n_ues]) for i in range(group_size)) for rb in range(num_rbs)
    )

    return RbGrid(num_rbs, groups)
