#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Payoffs of the RRHs and the utility of a coalition.

The payoff of an RRH rewards coalitions where none of its edge users loses
throughput and none of its non-edge users falls below a fraction 1 - d_f of
its throughput without JT-CoMP. Summing the sign terms and the penalty terms
the change of payoff always reduces to 2 - 3 (xi_e + xi_ne), where the xi
count the users which broke a condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from pycran.error import InvalidComparison


@dataclass
class PayoffState:
    """What the payoffs are measured against.

    Parameters
    ----------
    cumulative: dict[int, float]
        The payoff of each RRH after the last accepted operation.
    edge_baselines: dict[int, float]
        The throughput of each edge user under the last accepted partition.
    nocomp: dict[int, float]
        The throughput of each user without JT-CoMP.
    """

    cumulative: dict[int, float] = field(default_factory=dict)
    edge_baselines: dict[int, float] = field(default_factory=dict)
    nocomp: dict[int, float] = field(default_factory=dict)

    @classmethod
    def fresh(cls, rrhs) -> PayoffState:
        """Return a state with every payoff at zero."""
        return cls({rrh: 0.0 for rrh in rrhs})


@dataclass(frozen=True)
class RrhPayoff:
    """The payoff of an RRH for a candidate coalition, with the counters of
    users whose throughput stayed equal (q) or broke a condition (xi), and
    of edge users which gained throughput."""

    phi: float
    xi_e: int
    xi_ne: int
    q_e: int
    q_ne: int
    gained_e: int = 0


def non_edge_floor(nocomp, d_f: float):
    """The lowest throughput a non-edge user may fall to, (1 - d_f) times its
    throughput without JT-CoMP. Works on scalars and arrays."""
    return (1.0 - d_f) * nocomp


def sgn(delta_b: float, delta_a: float) -> int:
    """Return the sign of delta_b - delta_a."""
    if delta_b < delta_a:
        return -1
    if delta_b > delta_a:
        return 1
    return 0


def rrh_payoff(
    rrh: int,
    edge_ues,
    non_edge_ues,
    throughputs_b: dict[int, float],
    state: PayoffState,
    d_f: float,
) -> RrhPayoff:
    """Evaluate the payoff of an RRH for a candidate coalition.

    Parameters
    ----------
    rrh: int
        The RRH.
    edge_ues: list[int]
        The edge users served by the RRH.
    non_edge_ues: list[int]
        The non-edge users served by the RRH.
    throughputs_b: dict[int, float]
        The throughput of every user with the candidate coalition active.
    state: PayoffState
        The cumulative payoffs and the throughput baselines.
    d_f: float
        The acceptable fractional decrease of non-edge throughput.

    Returns
    -------
    RrhPayoff
        The payoff and its counters.
    """
    edge_signs = [sgn(throughputs_b[ue], state.edge_baselines[ue]) for ue in edge_ues]
    non_edge_signs = [sgn(throughputs_b[ue], non_edge_floor(state.nocomp[ue], d_f)) for ue in non_edge_ues]

    q_e, xi_e = edge_signs.count(0), edge_signs.count(-1)
    q_ne, xi_ne = non_edge_signs.count(0), non_edge_signs.count(-1)
    k_e, k_ne = len(edge_signs), len(non_edge_signs)

    phi = (
        sum(edge_signs)
        + sum(non_edge_signs)
        - (k_e - 1 - q_e + xi_e)
        - (k_ne - 1 - q_ne + xi_ne)
        + state.cumulative.get(rrh, 0.0)
    )

    return RrhPayoff(phi, xi_e, xi_ne, q_e, q_ne, edge_signs.count(1))


def payoff_delta(xi_e: int, xi_ne: int) -> int:
    """The closed form of the change in payoff."""
    return 2 - 3 * (xi_e + xi_ne)


def conditions_hold(edge_ues, non_edge_ues, throughputs_b: dict[int, float], state: PayoffState, d_f: float) -> bool:
    """Check directly that no edge user lost throughput and no non-edge user
    fell below its threshold."""
    return all(throughputs_b[ue] >= state.edge_baselines[ue] for ue in edge_ues) and all(
        throughputs_b[ue] >= non_edge_floor(state.nocomp[ue], d_f) for ue in non_edge_ues
    )


def pareto_prefers(candidate_payoffs: dict[int, float], incumbent_payoffs: dict[int, float]) -> bool:
    """Check if a candidate is preferred by Pareto order.

    Parameters
    ----------
    candidate_payoffs: dict[int, float]
        The payoff of each RRH with the candidate.
    incumbent_payoffs: dict[int, float]
        The payoff of each RRH currently.

    Returns
    -------
    bool
        True if no payoff falls and at least one rises.
    """
    if set(candidate_payoffs) != set(incumbent_payoffs):
        raise InvalidComparison("payoffs can only be compared over the same RRHs")

    no_worse = all(candidate_payoffs[rrh] >= incumbent_payoffs[rrh] for rrh in candidate_payoffs)
    better = any(candidate_payoffs[rrh] > incumbent_payoffs[rrh] for rrh in candidate_payoffs)

    return no_worse and better


def utility(payoffs: dict[int, float], coalition) -> float:
    """The utility of a coalition, the sum of its members' payoffs."""
    return float(sum(payoffs[rrh] for rrh in coalition))
