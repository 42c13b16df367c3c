#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The clustering schemes the coalition formation game is compared against.

Without JT-CoMP every RRH is a singleton. Static clustering groups
neighbouring RRHs once per run. Greedy clustering starts from singletons on
every activation and, from a random RRH, commits the coalition which
maximises the sum throughput of the edge users it serves.
"""

from __future__ import annotations

import logging
from itertools import combinations

import numpy as np

from pycran.error import InvalidConfig
from pycran.game.formation import CoalitionEvaluator
from pycran.game.partition import Coalition, Partition
from pycran.schemes.enum import Scheme
from pycran.topology import Rrh

logger = logging.getLogger(__name__)

__all__ = ["Scheme", "greedy_clusters", "no_comp_baseline", "static_clusters"]

DISTANCE_DECIMALS = 6


def no_comp_baseline(rrh_ids) -> Partition:
    """Return the partition without JT-CoMP, all singletons."""
    return Partition.singletons(rrh_ids)


def static_clusters(rrhs: list[Rrh], cluster_size: int) -> Partition:
    """Group neighbouring RRHs into clusters of a fixed size.

    The RRH furthest from the centroid of the network anchors a cluster,
    which is filled with the unassigned RRHs nearest to it. When the RRHs do
    not divide evenly, the short cluster is formed first, at the edge of the
    network. Distances are rounded so ties go to the lowest id.

    Parameters
    ----------
    rrhs: list[Rrh]
        The RRHs.
    cluster_size: int
        The size of the clusters.

    Returns
    -------
    Partition
        The static clusters.
    """
    if cluster_size < 1:
        raise InvalidConfig(f"the static cluster size must be at least 1, got {cluster_size}")

    positions = {rrh.id: np.asarray(rrh.position, dtype=float) for rrh in rrhs}
    centroid = np.mean(list(positions.values()), axis=0)

    def distance(a: np.ndarray, b: np.ndarray) -> float:
        return round(float(np.linalg.norm(a - b)), DISTANCE_DECIMALS)

    unassigned = sorted(positions)
    sizes = [cluster_size] * (len(unassigned) // cluster_size)
    if len(unassigned) % cluster_size:
        sizes.insert(0, len(unassigned) % cluster_size)

    clusters = []
    for size in sizes:
        anchor = min(unassigned, key=lambda rrh: (-distance(positions[rrh], centroid), rrh))
        unassigned.remove(anchor)
        nearest = sorted(unassigned, key=lambda rrh: (distance(positions[rrh], positions[anchor]), rrh))[: size - 1]
        for rrh in nearest:
            unassigned.remove(rrh)
        clusters.append([anchor, *nearest])

    return Partition(clusters)


def edge_sum_throughput(evaluator: CoalitionEvaluator, coalition: Coalition) -> float:
    """Return the sum throughput of the edge users served by a coalition."""
    throughputs = evaluator.throughputs(coalition)
    return float(
        sum(throughputs[ue] for rrh in coalition for ue in evaluator.served_ues(rrh) if ue in evaluator.edge_ues)
    )


def greedy_clusters(
    rrh_ids, evaluator: CoalitionEvaluator, max_size: int, rng: np.random.Generator
) -> tuple[Partition, int]:
    """Cluster the RRHs greedily on the throughput of their edge users.

    Parameters
    ----------
    rrh_ids: iterable of int
        The RRHs.
    evaluator: CoalitionEvaluator
        Gives the throughputs of the TTI under any coalition.
    max_size: int
        The largest coalition considered.
    rng: np.random.Generator
        The clustering random stream, used to pick the anchors.

    Returns
    -------
    partition: Partition
        The greedy clusters.
    iterations: int
        The number of coalitions evaluated.
    """
    unassigned = sorted(rrh_ids)
    clusters = []
    iterations = 0

    while unassigned:
        anchor = unassigned[int(rng.integers(len(unassigned)))]
        others = [rrh for rrh in unassigned if rrh != anchor]
        best, best_score = None, -np.inf
        for n_others in range(min(max_size, len(unassigned))):
            for combo in combinations(others, n_others):
                subset = tuple(sorted((anchor, *combo)))
                score = edge_sum_throughput(evaluator, Coalition(subset))
                iterations += 1
                if score > best_score or (score == best_score and subset < best):
                    best, best_score = subset, score
        clusters.append(best)
        unassigned = [rrh for rrh in unassigned if rrh not in best]

    logger.debug("greedy clustering gave %s after %d evaluation(s)", clusters, iterations)
    return Partition(clusters), iterations
