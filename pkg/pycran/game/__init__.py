#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The coalition formation game played by the RRHs.

The RRHs are the players. An RRH gains payoff from a coalition when its edge
users gain throughput without its non-edge users losing more than a fraction
d_f of their throughput without JT-CoMP.
"""

from pycran.game.ci import CiMatrix, EdgeClassification, build_ci_matrix, ci_value, classify_edge_ues
from pycran.game.formation import (
    ActivationStats,
    CoalitionGame,
    FormationResult,
    Operation,
    enforce_non_edge_bound,
    reactivation_triggers,
    run_coalition_formation,
)
from pycran.game.partition import Partition
from pycran.game.payoff import (
    PayoffState,
    RrhPayoff,
    non_edge_floor,
    pareto_prefers,
    payoff_delta,
    rrh_payoff,
    sgn,
    utility,
)
from pycran.game.stability import check_dhp_stable

__all__ = [
    "ActivationStats",
    "CiMatrix",
    "CoalitionGame",
    "EdgeClassification",
    "FormationResult",
    "Operation",
    "Partition",
    "PayoffState",
    "RrhPayoff",
    "build_ci_matrix",
    "check_dhp_stable",
    "ci_value",
    "classify_edge_ues",
    "enforce_non_edge_bound",
    "non_edge_floor",
    "pareto_prefers",
    "payoff_delta",
    "reactivation_triggers",
    "rrh_payoff",
    "run_coalition_formation",
    "sgn",
    "utility",
]
