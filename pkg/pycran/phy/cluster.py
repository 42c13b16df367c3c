#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""NOMA clusters and the per-RB allocation which holds them.

An RbAllocation is built once per RB without JT-CoMP. Applying a coalition
returns a new allocation in which the edge users served by the coalition
have joined a cluster of each cooperating RRH, the clusters of the
coalition decode edge users first and their power is re-split over the
grown clusters. The beamformers are never changed by JT-CoMP.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from pycran.phy.beamforming import BeamSet, zf_beamformers
from pycran.phy.enum import PairingOrder
from pycran.phy.pairing import correlation_metric, pair_noma_users
from pycran.phy.power import ftpc_coefficients


@dataclass(frozen=True)
class NomaCluster:
    """The users sharing one beam of an RRH.

    Parameters
    ----------
    rrh: int
        The RRH id.
    beam: int
        The beam index, 0 based.
    strong: int
        The user the beam is steered at.
    members: tuple[int, ...]
        The members in decoding order.
    power_coeffs: np.ndarray
        The power fraction of each member, aligned with members.
    beam_power: float
        The beam power per subcarrier, in watts.
    """

    rrh: int
    beam: int
    strong: int
    members: tuple[int, ...]
    power_coeffs: np.ndarray = field(repr=False)
    beam_power: float = 0.0

    def position(self, ue: int) -> int:
        """Return the decoding position of a member."""
        return self.members.index(ue)

    def coefficient(self, ue: int) -> float:
        """Return the power fraction of a member."""
        return float(self.power_coeffs[self.position(ue)])

    def residual(self, ue: int) -> float:
        """Return the power fraction of the members decoded after a member,
        which remain as interference after SIC."""
        return float(np.sum(self.power_coeffs[self.position(ue) + 1 :]))


@dataclass
class RbAllocation:
    """Everything transmitted on one RB.

    Parameters
    ----------
    rb: int
        The RB index.
    beam_sets: dict[int, BeamSet]
        The beamformers of every RRH with active beams.
    clusters: dict[int, list[NomaCluster]]
        The clusters of every RRH with active beams, indexed by beam.
    beam_power: dict[int, float]
        The per-beam, per-subcarrier power of each RRH.
    comp_beams: dict[int, dict[int, int]]
        For each JT-CoMP edge user, the beam serving it at each RRH of its
        coalition.
    """

    rb: int
    beam_sets: dict[int, BeamSet]
    clusters: dict[int, list[NomaCluster]]
    beam_power: dict[int, float]
    comp_beams: dict[int, dict[int, int]] = field(default_factory=dict)
    _beam_of: dict[tuple[int, int], int] = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        for rrh, clusters in self.clusters.items():
            for cluster in clusters:
                for ue in cluster.members:
                    self._beam_of.setdefault((rrh, ue), cluster.beam)

    @property
    def regularized(self) -> int:
        """The number of RRHs whose ZF inverse was regularised."""
        return sum(beam_set.regularized for beam_set in self.beam_sets.values())

    def beam_of(self, rrh: int, ue: int) -> int:
        """Return the beam of an RRH whose cluster contains a user."""
        return self._beam_of[(rrh, ue)]

    def cluster_of(self, rrh: int, ue: int) -> NomaCluster:
        """Return the cluster of an RRH which contains a user."""
        return self.clusters[rrh][self.beam_of(rrh, ue)]


def build_rb_allocation(
    rb: int,
    groups: dict[int, list[int]],
    h: np.ndarray,
    num_beams: int,
    beam_powers: dict[int, float],
    p_ftpc: float,
    *,
    pairing_order: PairingOrder = PairingOrder.GREEDY,
    max_condition: float | None = None,
) -> RbAllocation:
    """Build the allocation of an RB without JT-CoMP.

    Parameters
    ----------
    rb: int
        The RB index.
    groups: dict[int, list[int]]
        The distinct users scheduled on the RB by each RRH.
    h: np.ndarray
        The (U, L, N) channel array of the TTI.
    num_beams: int
        The number of beams N.
    beam_powers: dict[int, float]
        The per-beam power of each RRH.
    p_ftpc: float
        The FTPC decay factor.
    pairing_order: PairingOrder
        The matching rule for strong and weak users.
    max_condition: float [optional]
        The conditioning limit passed to the ZF solver.

    Returns
    -------
    RbAllocation
        The allocation, decoding in ascending order of channel gain.
    """
    beam_sets = {}
    clusters = {}
    for rrh in sorted(groups):
        ues = groups[rrh]
        if not ues:
            continue
        vectors = {ue: h[ue, rrh] for ue in ues}
        pairs = pair_noma_users(ues, vectors, num_beams, pairing_order)
        strong_rows = np.array([vectors[strong] for strong, _ in pairs])
        kwargs = {} if max_condition is None else {"max_condition": max_condition}
        beam_sets[rrh] = zf_beamformers(strong_rows, rrh, **kwargs)

        clusters[rrh] = []
        for beam, (strong, weak) in enumerate(pairs):
            members = (strong,) if weak is None else (weak, strong)
            gains = [np.sum(np.abs(vectors[ue]) ** 2) for ue in members]
            clusters[rrh].append(
                NomaCluster(rrh, beam, strong, members, ftpc_coefficients(gains, p_ftpc), beam_powers[rrh])
            )

    return RbAllocation(rb, beam_sets, clusters, {rrh: beam_powers[rrh] for rrh in clusters})


def assign_comp_beams(
    edge_ue: int, serving_rrh: int, coalition, h: np.ndarray, allocation: RbAllocation
) -> dict[int, int]:
    """Find the beam of each cooperating RRH which an edge user joins.

    The user joins the cluster whose strong user is most correlated with it,
    taking the lowest beam index on a tie. RRHs with no active beam on the
    RB are left out.

    Parameters
    ----------
    edge_ue: int
        The edge user, scheduled on the RB by its serving RRH.
    serving_rrh: int
        The serving RRH of the user.
    coalition: set[int]
        The coalition of the serving RRH.
    h: np.ndarray
        The (U, L, N) channel array of the TTI.
    allocation: RbAllocation
        The allocation of the RB.

    Returns
    -------
    dict[int, int]
        The beam serving the user at each RRH of the coalition, including the
        serving RRH.
    """
    beams = {serving_rrh: allocation.beam_of(serving_rrh, edge_ue)}
    for rrh in sorted(set(coalition) - {serving_rrh}):
        if rrh not in allocation.clusters:
            continue
        scores = [correlation_metric(h[edge_ue, rrh], h[cluster.strong, rrh]) for cluster in allocation.clusters[rrh]]
        beams[rrh] = int(np.argmax(scores))

    return beams


def apply_comp(
    allocation: RbAllocation,
    coalition,
    comp_edges: dict[int, int],
    edge_rank: dict[int, int],
    h: np.ndarray,
    p_ftpc: float,
) -> RbAllocation:
    """Return a copy of an allocation with JT-CoMP active for a coalition.

    Parameters
    ----------
    allocation: RbAllocation
        The allocation without JT-CoMP.
    coalition: set[int]
        The cooperating RRHs, at least two.
    comp_edges: dict[int, int]
        The edge users served by the coalition on the RB, mapped to their
        serving RRH.
    edge_rank: dict[int, int]
        The position of every edge user in the network-wide edge order.
    h: np.ndarray
        The (U, L, N) channel array of the TTI.
    p_ftpc: float
        The FTPC decay factor.

    Returns
    -------
    RbAllocation
        The allocation with grown clusters for the coalition's RRHs.
    """
    comp_beams = {
        ue: assign_comp_beams(ue, serving, coalition, h, allocation)
        for ue, serving in sorted(comp_edges.items(), key=lambda item: edge_rank[item[0]])
    }

    clusters = dict(allocation.clusters)
    for rrh in sorted(set(coalition) & set(allocation.clusters)):
        grown = []
        for cluster in allocation.clusters[rrh]:
            joined = [ue for ue, beams in comp_beams.items() if beams.get(rrh) == cluster.beam]
            everyone = list(cluster.members) + [ue for ue in joined if ue not in cluster.members]
            gains = {ue: float(np.sum(np.abs(h[ue, rrh]) ** 2)) for ue in everyone}
            edges = sorted((ue for ue in everyone if ue in comp_edges), key=edge_rank.__getitem__)
            others = sorted((ue for ue in everyone if ue not in comp_edges), key=gains.__getitem__)
            members = tuple(edges + others)
            grown.append(
                replace(
                    cluster,
                    members=members,
                    power_coeffs=ftpc_coefficients([gains[ue] for ue in members], p_ftpc),
                )
            )
        clusters[rrh] = grown

    return RbAllocation(
        allocation.rb,
        allocation.beam_sets,
        clusters,
        allocation.beam_power,
        {**allocation.comp_beams, **comp_beams},
    )
