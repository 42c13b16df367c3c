#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for partitions, payoffs, the C/I matrix and the merge and split
coalition formation."""

import itertools

import numpy as np
import pytest

from pycran.error import InvalidComparison, InvalidInput, PreconditionViolation
from pycran.game import (
    CoalitionGame,
    Operation,
    Partition,
    PayoffState,
    build_ci_matrix,
    check_dhp_stable,
    classify_edge_ues,
    enforce_non_edge_bound,
    non_edge_floor,
    pareto_prefers,
    payoff_delta,
    reactivation_triggers,
    rrh_payoff,
    run_coalition_formation,
    sgn,
)
from pycran.game.formation import breaching_members
from pycran.game.payoff import conditions_hold
from pycran.sim.state import NetworkState

SERVED = {0: [0, 1], 1: [2, 3]}
EDGE = {0, 2}
SINGLETON = {0: 1.0, 1: 10.0, 2: 1.0, 3: 10.0}


def two_rrh_ci(ci_0=5.0, ci_1=3.0):
    """The C/I matrix of two RRHs, each with one edge user."""
    v = np.array([[100.0, 100.0 + ci_0], [0.0, 0.0], [100.0 + ci_1, 100.0], [0.0, 0.0]])
    return build_ci_matrix({0: [0], 1: [2]}, v)


def two_rrh_game(factory, coalition_throughputs, *, partition=None, ci=None, **kwargs):
    """Two RRHs with one edge and one non-edge user each."""
    evaluator = factory(SERVED, EDGE, SINGLETON, {frozenset({0, 1}): coalition_throughputs})
    state = PayoffState.fresh([0, 1])
    state.nocomp = dict(SINGLETON)
    game = CoalitionGame(
        evaluator,
        state,
        ci or two_rrh_ci(),
        partition or Partition.singletons([0, 1]),
        **kwargs,
    )
    return game, evaluator


# Partitions -------------------------------------------------------------------


def test_partition_basics():
    partition = Partition([[2, 0], [1]])

    assert partition == Partition([[1], [0, 2]])
    assert hash(partition) == hash(Partition([[1], [0, 2]]))
    assert partition.coalitions == (frozenset({0, 2}), frozenset({1}))
    assert partition.rrhs == frozenset({0, 1, 2})
    assert partition.sizes == [2, 1]
    assert partition.average_size == pytest.approx(1.5)
    assert partition.max_size == 2
    assert partition.coalition_of(2) == frozenset({0, 2})
    assert len(Partition.singletons(range(4))) == 4


def test_partition_merge_and_split():
    partition = Partition.singletons([0, 1, 2])

    merged = partition.merge([{0}, {2}])
    assert merged == Partition([[0, 2], [1]])
    assert merged.split({0, 2}, 2) == partition
    assert partition == Partition.singletons([0, 1, 2])


def test_partition_errors():
    with pytest.raises(InvalidInput):
        Partition([[0], []])
    with pytest.raises(InvalidInput):
        Partition([[0, 1], [1, 2]])
    with pytest.raises(PreconditionViolation):
        Partition.singletons([0, 1]).merge([{0, 1}])
    with pytest.raises(PreconditionViolation):
        Partition.singletons([0, 1]).split({0}, 0)
    with pytest.raises(InvalidInput):
        Partition.singletons([0, 1]).validate([0, 1, 2])
    with pytest.raises(InvalidInput):
        Partition([[0, 1, 2]]).validate([0, 1, 2], max_coalition_size=2)


# Payoffs ----------------------------------------------------------------------


def test_sgn():
    assert sgn(2.0, 1.0) == 1
    assert sgn(1.0, 2.0) == -1
    assert sgn(1.5, 1.5) == 0


def test_payoff_change_closed_form():
    rng = np.random.default_rng(2024)

    for _ in range(10_000):
        n_edge, n_non_edge = rng.integers(0, 5, size=2)
        edge = list(range(n_edge))
        non_edge = list(range(n_edge, n_edge + n_non_edge))
        ues = edge + non_edge

        # integer throughputs give ties as well as gains and losses
        state = PayoffState(
            {0: float(rng.integers(-5, 5))},
            {ue: float(rng.integers(0, 4)) for ue in edge},
            {ue: float(rng.integers(0, 4)) for ue in non_edge},
        )
        throughputs = {ue: float(rng.integers(0, 4)) for ue in ues}
        d_f = float(rng.choice([0.0, 0.25, 0.5]))

        payoff = rrh_payoff(0, edge, non_edge, throughputs, state, d_f=d_f)

        assert payoff.phi - state.cumulative[0] == payoff_delta(payoff.xi_e, payoff.xi_ne)
        assert (payoff.xi_e + payoff.xi_ne == 0) == conditions_hold(edge, non_edge, throughputs, state, d_f)
        assert payoff.gained_e == sum(throughputs[ue] > state.edge_baselines[ue] for ue in edge)


def test_payoff_counters():
    state = PayoffState({0: 0.0}, {0: 2.0, 1: 2.0}, {2: 10.0, 3: 10.0})
    throughputs = {0: 3.0, 1: 2.0, 2: 5.0, 3: 7.0}

    payoff = rrh_payoff(0, [0, 1], [2, 3], throughputs, state, d_f=0.5)

    assert (payoff.q_e, payoff.xi_e, payoff.q_ne, payoff.xi_ne) == (1, 0, 1, 0)
    assert payoff.phi == 2


def test_pareto_prefers():
    assert pareto_prefers({0: 1.0, 1: 0.0}, {0: 0.0, 1: 0.0})
    assert not pareto_prefers({0: 0.0, 1: 0.0}, {0: 0.0, 1: 0.0})
    assert not pareto_prefers({0: 2.0, 1: -1.0}, {0: 0.0, 1: 0.0})
    with pytest.raises(InvalidComparison):
        pareto_prefers({0: 1.0}, {1: 0.0})


# Edge users and C/I -----------------------------------------------------------


def test_classify_edge_ues():
    classification = classify_edge_ues({0: 5.0, 1: 1.0, 2: 3.0, 3: 1.0}, 0.5)

    assert classification.order == (1, 3)
    assert classification.edge == frozenset({1, 3})
    assert classification.threshold == 1.0
    assert classification.rank == {1: 0, 3: 1}
    assert classification.flags([0, 1]) == {0: False, 1: True}


def test_classify_edge_ues_rounds_down():
    classification = classify_edge_ues({0: 5.0, 1: 1.0, 2: 3.0, 3: 1.0}, 0.2)
    assert classification.order == ()
    assert classification.threshold is None


@pytest.mark.parametrize("fraction", [0.0, 1.0, -0.1])
def test_classify_edge_ues_bad_fraction(fraction):
    with pytest.raises(InvalidInput):
        classify_edge_ues({0: 1.0}, fraction)


def test_ci_matrix():
    v = np.array(
        [
            [100.0, 110.0, 104.0],
            [102.0, 100.0, 100.0],
            [106.0, 108.0, 100.0],
        ]
    )
    ci = build_ci_matrix({0: [0], 2: [1, 2]}, v)

    assert ci.values.shape == (2, 3)
    assert list(ci.values[:, 0]) == [4.0, 10.0]
    assert list(ci.ids[:, 0]) == [2, 1]
    assert np.all(np.isinf(ci.values[:, 1]))
    assert list(ci.ids[:, 1]) == [0, 2]
    assert list(ci.values[:, 2]) == [4.0, 4.0]
    assert list(ci.ids[:, 2]) == [0, 1]

    assert ci.row_pairs(0, 10.0) == [(4.0, 0, 2), (4.0, 2, 0)]
    assert ci.row_pairs(1, 10.0) == [(4.0, 2, 1), (10.0, 0, 1)]
    assert ci.row_pairs(1, 5.0) == [(4.0, 2, 1)]
    assert ci.linked(0, 1, 10.0)
    assert not ci.linked(0, 1, 9.9)
    assert not ci.linked(1, 0, 100.0)


def test_count_linked():
    ci = two_rrh_ci()

    assert ci.count_linked(10.0) == 2
    assert ci.count_linked(4.0) == 1
    assert ci.count_linked(1.0) == 0


# Coalition formation ----------------------------------------------------------


def test_beneficial_merge_is_accepted(fake_evaluator_factory):
    game, _ = two_rrh_game(fake_evaluator_factory, {0: 2.0, 1: 9.0, 2: 2.0, 3: 9.0})

    final = game.run()

    assert final == Partition([[0, 1]])
    assert game.stats.merge_tests == 1
    assert game.stats.accepted_merges == 1
    assert game.stats.split_tests == 0
    assert game.stats.iterations == 1
    assert game.stats.linked_pairs == 2
    assert game.stats.soundness_violations == 0
    assert game.state.cumulative == {0: 2.0, 1: 2.0}
    assert game.state.edge_baselines == {0: 2.0, 2: 2.0}
    assert check_dhp_stable(game) == (True, None)


def test_harmful_merge_is_rejected(fake_evaluator_factory):
    game, _ = two_rrh_game(fake_evaluator_factory, {0: 2.0, 1: 5.0, 2: 2.0, 3: 9.0})

    final = game.run()

    assert final == Partition.singletons([0, 1])
    assert game.stats.merge_tests == 1
    assert game.stats.accepted_merges == 0
    assert game.state.cumulative == {0: 0.0, 1: 0.0}
    assert check_dhp_stable(game) == (True, None)


def test_merge_outcome_is_memoised(fake_evaluator_factory):
    game, evaluator = two_rrh_game(fake_evaluator_factory, {0: 2.0, 1: 5.0, 2: 2.0, 3: 9.0})

    first = game.evaluate_merge([{0}, {1}])
    calls = evaluator.calls
    second = game.evaluate_merge([{1}, {0}])

    assert first is second
    assert evaluator.calls == calls


def test_pairs_above_threshold_are_not_examined(fake_evaluator_factory):
    game, _ = two_rrh_game(
        fake_evaluator_factory, {0: 2.0, 1: 9.0, 2: 2.0, 3: 9.0}, ci=two_rrh_ci(15.0, 15.0), ci_threshold_db=10.0
    )

    assert game.run() == Partition.singletons([0, 1])
    assert game.stats.iterations == 0


def test_size_cap(fake_evaluator_factory):
    evaluator = fake_evaluator_factory(
        SERVED, EDGE, SINGLETON, {frozenset({0, 1}): {0: 2.0, 1: 9.0, 2: 2.0, 3: 9.0}}
    )
    state = PayoffState.fresh([0, 1])
    state.nocomp = dict(SINGLETON)

    result = run_coalition_formation(
        evaluator, state, two_rrh_ci(), Partition.singletons([0, 1]), max_coalition_size=1
    )

    assert result.partition == Partition.singletons([0, 1])
    assert result.stats.size_cap_rejections == 1
    assert result.stats.merge_tests == 0


def test_harmful_coalition_is_split(fake_evaluator_factory):
    game, _ = two_rrh_game(
        fake_evaluator_factory, {0: 0.5, 1: 10.0, 2: 0.5, 3: 10.0}, partition=Partition([[0, 1]])
    )

    final = game.run()

    assert final == Partition.singletons([0, 1])
    assert game.stats.split_tests == 1
    assert game.stats.accepted_splits == 1
    # merging back would recreate the starting partition
    assert game.stats.merge_tests == 0
    assert check_dhp_stable(game) == (True, None)


def test_breaching_start_is_split_on_construction(fake_evaluator_factory):
    game, _ = two_rrh_game(
        fake_evaluator_factory, {0: 2.0, 1: 5.0, 2: 2.0, 3: 9.0}, partition=Partition([[0, 1]])
    )

    assert game.partition == Partition.singletons([0, 1])
    assert game.stats.forced_splits == 1
    assert game.state.edge_baselines == {0: 1.0, 2: 1.0}

    final = game.run()

    assert final == Partition.singletons([0, 1])
    assert game.stats.merge_tests == 0
    assert check_dhp_stable(game) == (True, None)


@pytest.mark.parametrize(("d_f", "expected", "splits"), [(0.4, [[0], [1]], 1), (0.6, [[0, 1]], 0)])
def test_enforce_non_edge_bound(fake_evaluator_factory, d_f, expected, splits):
    evaluator = fake_evaluator_factory(
        SERVED, EDGE, SINGLETON, {frozenset({0, 1}): {0: 2.0, 1: 5.0, 2: 2.0, 3: 9.0}}
    )

    partition, forced = enforce_non_edge_bound(Partition([[0, 1]]), evaluator, SINGLETON, d_f)

    assert partition == Partition(expected)
    assert forced == splits


def test_merge_without_edge_gain_is_rejected(fake_evaluator_factory):
    game, _ = two_rrh_game(fake_evaluator_factory, dict(SINGLETON))

    outcome = game.evaluate_merge([{0}, {1}])

    assert not outcome.accepted
    assert outcome.reason == "no-gain"
    assert all(payoff.xi_e + payoff.xi_ne == 0 for payoff in outcome.payoffs.values())
    assert game.run() == Partition.singletons([0, 1])
    assert check_dhp_stable(game) == (True, None)


def test_stability_beyond_admissible_merges(fake_evaluator_factory):
    game, _ = two_rrh_game(fake_evaluator_factory, {0: 2.0, 1: 9.0, 2: 2.0, 3: 9.0}, ci=two_rrh_ci(15.0, 15.0))

    assert game.run() == Partition.singletons([0, 1])
    assert check_dhp_stable(game) == (True, None)
    assert check_dhp_stable(game, admissible_only=False) == (False, Operation("merge", ((0,), (1,))))


@pytest.mark.parametrize("seed", range(25))
def test_random_games_end_stable_and_within_threshold(fake_evaluator_factory, seed):
    rng = np.random.default_rng(seed)
    rrhs = list(range(4))
    served = {rrh: [2 * rrh, 2 * rrh + 1] for rrh in rrhs}
    edge = {2 * rrh for rrh in rrhs}
    singleton = {ue: (1.0 + rng.random() if ue in edge else 10.0) for ue in range(8)}

    tables = {}
    for size in (2, 3, 4):
        for members in itertools.combinations(rrhs, size):
            tables[frozenset(members)] = {
                ue: singleton[ue] * (rng.uniform(0.5, 2.0) if ue in edge else rng.uniform(0.4, 1.2))
                for rrh in members
                for ue in served[rrh]
            }
    evaluator = fake_evaluator_factory(served, edge, singleton, tables)
    state = PayoffState.fresh(rrhs)
    state.nocomp = dict(singleton)
    ci = build_ci_matrix({rrh: [2 * rrh] for rrh in rrhs}, np.zeros((8, 4)))

    def edge_total(partition):
        return sum(
            value for coalition in partition for ue, value in evaluator.throughputs(coalition).items() if ue in edge
        )

    game = CoalitionGame(evaluator, state, ci, Partition([[0, 1], [2, 3]]), d_f=0.4)
    start = edge_total(game.partition)
    final = game.run()

    assert edge_total(final) >= start
    assert game.stats.soundness_violations == 0
    assert check_dhp_stable(game, admissible_only=False) == (True, None)
    for coalition in final:
        assert breaching_members(coalition, evaluator, singleton, 0.4) == []
        for ue, value in evaluator.throughputs(coalition).items():
            assert ue in edge or value >= non_edge_floor(singleton[ue], 0.4)


def test_unstable_partition_is_reported(fake_evaluator_factory):
    game, _ = two_rrh_game(fake_evaluator_factory, {0: 2.0, 1: 9.0, 2: 2.0, 3: 9.0})

    stable, violation = check_dhp_stable(game)

    assert not stable
    assert violation == Operation("merge", ((0,), (1,)))


def test_split_needs_two_members(fake_evaluator_factory):
    game, _ = two_rrh_game(fake_evaluator_factory, {})
    with pytest.raises(PreconditionViolation):
        game.evaluate_split({0}, 0)
    with pytest.raises(PreconditionViolation):
        game.try_merge([{0}])


def test_reactivation_triggers():
    partition = Partition.singletons([0, 1])
    state = NetworkState(1, (0, 0, 1), frozenset({2}), partition)

    assert reactivation_triggers(None, state)
    assert not reactivation_triggers(state, NetworkState(2, (0, 0, 1), frozenset({2}), partition))
    assert reactivation_triggers(state, NetworkState(2, (0, 1, 1), frozenset({2}), partition))
    assert reactivation_triggers(state, NetworkState(2, (0, 0, 1), frozenset({0}), partition))
