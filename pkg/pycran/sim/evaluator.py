#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Throughput of the users of a TTI under any clustering.

The channels and schedules of a TTI are fixed before any clustering is
tried, so the allocation of every RB without JT-CoMP, and the gain of every
user toward every beam, are computed once. The throughput of a user then
depends only on the coalition of its serving RRH: interference from outside
the coalition only depends on the beam powers, which JT-CoMP does not
change. Coalition throughputs are therefore cached by coalition, and the
throughput of a whole partition is assembled from its coalitions.
"""

from __future__ import annotations

import logging

import numpy as np

from pycran.game.ci import EdgeClassification
from pycran.game.partition import Coalition, Partition
from pycran.link import effective_sinr, ue_throughput
from pycran.phy.cluster import RbAllocation, apply_comp, build_rb_allocation
from pycran.phy.power import beam_power
from pycran.phy.sinr import received_beam_gains, sinr_comp, sinr_no_comp
from pycran.sched import RbGrid
from pycran.sim.config import ScenarioConfig

logger = logging.getLogger(__name__)


class TtiEvaluator:
    """Evaluates the users of one TTI.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario.
    h: np.ndarray
        The (U, L, N) channels of the TTI.
    schedules: dict[int, RbGrid]
        The schedule of every RRH.
    serving: tuple[int, ...]
        The serving RRH of every user.
    """

    def __init__(self, config: ScenarioConfig, h: np.ndarray, schedules: dict[int, RbGrid], serving) -> None:
        self.config = config
        self.h = h
        self.schedules = schedules
        self.serving = tuple(serving)
        self.noise = config.noise_watts
        self.table = config.cqi_table
        self.edge_ues: frozenset[int] = frozenset()
        self._edge_rank: dict[int, int] = {}
        self._cache: dict[Coalition, dict[int, float]] = {}

        n_ues, n_rrhs = h.shape[0], h.shape[1]
        self._served = {rrh: [] for rrh in range(n_rrhs)}
        for ue, rrh in enumerate(self.serving):
            self._served[rrh].append(ue)

        power = beam_power(config.tx_power_watts, config.num_antennas, config.num_subcarriers)
        beam_powers = dict.fromkeys(range(n_rrhs), power)

        self.allocations: list[RbAllocation] = []
        self._groups: list[dict[int, list[int]]] = []
        self._gains: list[dict[int, np.ndarray]] = []
        for rb in range(config.num_rbs):
            groups = {rrh: grid.distinct(rb) for rrh, grid in schedules.items() if grid.groups}
            allocation = build_rb_allocation(
                rb,
                groups,
                h,
                config.num_antennas,
                beam_powers,
                config.p_ftpc,
                pairing_order=config.pairing_order,
                max_condition=config.zf_max_condition,
            )
            self.allocations.append(allocation)
            self._groups.append(groups)
            self._gains.append(received_beam_gains(h, allocation.beam_sets))

        # scheduled RBs of each user, by its serving RRH
        self.scheduled_rbs: dict[int, list[int]] = {}
        for rb, groups in enumerate(self._groups):
            for rrh, ues in groups.items():
                for ue in ues:
                    self.scheduled_rbs.setdefault(ue, []).append(rb)

        self._nocomp_sinrs = {ue: [] for ue in self.scheduled_rbs}
        self._nocomp_by_rb: list[dict[int, float]] = []
        for rb, groups in enumerate(self._groups):
            per_rb = {}
            for rrh, ues in groups.items():
                for ue in ues:
                    per_rb[ue] = sinr_no_comp(ue, rrh, self.allocations[rb], self.gains(ue, rb), self.noise).sinr
                    self._nocomp_sinrs[ue].append(per_rb[ue])
            self._nocomp_by_rb.append(per_rb)

        self.nocomp = {ue: self._throughput(self._nocomp_sinrs.get(ue, [])) for ue in range(n_ues)}
        self.effective_sinrs = {
            ue: effective_sinr(sinrs, config.sinr_averaging) for ue, sinrs in self._nocomp_sinrs.items()
        }

    # Private methods ----------------------------------------------------------

    def _throughput(self, sinrs: list[float]) -> float:
        return ue_throughput(sinrs, self.config.tti_seconds, self.table).throughput_bps

    def _comp_throughputs(self, coalition: Coalition) -> dict[int, float]:
        sinrs = {ue: [] for rrh in coalition for ue in self._served[rrh] if ue in self.scheduled_rbs}

        for rb, groups in enumerate(self._groups):
            comp_edges = {
                ue: rrh
                for rrh in coalition
                for ue in groups.get(rrh, [])
                if ue in self.edge_ues
            }
            if not comp_edges:
                for rrh in coalition:
                    for ue in groups.get(rrh, []):
                        sinrs[ue].append(self._nocomp_by_rb[rb][ue])
                continue

            allocation = apply_comp(
                self.allocations[rb], coalition, comp_edges, self._edge_rank, self.h, self.config.p_ftpc
            )
            for rrh in coalition:
                for ue in groups.get(rrh, []):
                    if ue in comp_edges:
                        breakdown = sinr_comp(ue, rrh, coalition, allocation, self.gains(ue, rb), self.noise)
                    else:
                        breakdown = sinr_no_comp(ue, rrh, allocation, self.gains(ue, rb), self.noise)
                    sinrs[ue].append(breakdown.sinr)

        throughputs = {ue: 0.0 for rrh in coalition for ue in self._served[rrh]}
        throughputs.update({ue: self._throughput(values) for ue, values in sinrs.items()})
        return throughputs

    # Public methods -----------------------------------------------------------

    @property
    def regularized(self) -> int:
        """The number of regularised ZF inverses over all RBs."""
        return sum(allocation.regularized for allocation in self.allocations)

    def gains(self, ue: int, rb: int) -> dict[int, np.ndarray]:
        """The received beam gains of a user on an RB."""
        return {rrh: gains[ue] for rrh, gains in self._gains[rb].items()}

    def served_ues(self, rrh: int) -> list[int]:
        """The users attached to an RRH."""
        return self._served[rrh]

    def set_edges(self, classification: EdgeClassification) -> None:
        """Set the edge users of the TTI, clearing the cached throughputs."""
        self.edge_ues = classification.edge
        self._edge_rank = classification.rank
        self._cache.clear()

    def throughputs(self, coalition: Coalition) -> dict[int, float]:
        """Return the throughput of every user served by a coalition, with the
        coalition cooperating.

        Parameters
        ----------
        coalition: Coalition
            The RRHs.

        Returns
        -------
        dict[int, float]
            The throughput in bits per second of every user attached to the
            coalition, zero for users which were not scheduled.
        """
        coalition = Coalition(coalition)
        if coalition not in self._cache:
            if len(coalition) == 1:
                self._cache[coalition] = {ue: self.nocomp[ue] for rrh in coalition for ue in self._served[rrh]}
            else:
                self._cache[coalition] = self._comp_throughputs(coalition)
        return self._cache[coalition]

    def partition_throughputs(self, partition: Partition) -> np.ndarray:
        """Return the throughput of every user with a partition active."""
        throughputs = np.zeros(len(self.serving))
        for coalition in partition:
            for ue, value in self.throughputs(coalition).items():
                throughputs[ue] = value
        return throughputs
