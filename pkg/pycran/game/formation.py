#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Merge and split coalition formation.

An activation starts from the partition left by the previous activation,
after splitting members off any coalition which, on the channels of this
TTI, leaves a non-edge user below its threshold. The rows of the C/I matrix
are walked in order and, for every RRH whose C/I toward a candidate is at or
below the threshold, the coalition of the RRH is merged with the coalition
of the candidate if every involved RRH is better off by Pareto order, the
utility of the merged coalition exceeds the utilities of its parts, at least
one edge user of the involved RRHs gains throughput and the size cap is
respected. Then single members are split off under the same rules. Merge and
split passes repeat until a whole pass accepts nothing.

Every accepted operation raises the summed throughput of the edge users, so
no partition is held twice within one activation. Partitions visited before
are skipped without being evaluated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Protocol

from pycran.error import PreconditionViolation
from pycran.game.ci import CiMatrix
from pycran.game.partition import Coalition, Partition
from pycran.game.payoff import (
    PayoffState,
    RrhPayoff,
    conditions_hold,
    non_edge_floor,
    pareto_prefers,
    rrh_payoff,
    utility,
)

logger = logging.getLogger(__name__)


class CoalitionEvaluator(Protocol):
    """What the game needs to know about the users of a TTI."""

    edge_ues: frozenset[int]

    def served_ues(self, rrh: int) -> list[int]:
        """The users attached to an RRH."""

    def throughputs(self, coalition: Coalition) -> dict[int, float]:
        """The throughput of every user served by a coalition, with the
        coalition cooperating."""


@dataclass
class ActivationStats:
    """Counters of one activation, or summed over several."""

    activations: int = 0
    merge_tests: int = 0
    accepted_merges: int = 0
    split_tests: int = 0
    accepted_splits: int = 0
    size_cap_rejections: int = 0
    soundness_violations: int = 0
    forced_splits: int = 0  # members split off to restore the non-edge threshold
    linked_pairs: int = 0  # C/I entries at or below the threshold

    @property
    def iterations(self) -> int:
        """The number of merge and split operations evaluated."""
        return self.merge_tests + self.split_tests

    def __iadd__(self, other: ActivationStats) -> ActivationStats:
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))
        return self


@dataclass(frozen=True)
class Outcome:
    """The evaluation of a merge or split, independent of when it is
    applied."""

    accepted: bool
    payoffs: dict[int, RrhPayoff] = field(default_factory=dict)
    deltas: dict[int, float] = field(default_factory=dict)
    throughputs: dict[int, float] = field(default_factory=dict)
    sound: bool = True
    reason: str = ""


@dataclass(frozen=True)
class Operation:
    """A merge of coalitions, or a split of a member off a coalition."""

    kind: str
    coalitions: tuple[tuple[int, ...], ...]
    member: int | None = None


def _edge_gains(payoffs: dict[int, RrhPayoff]) -> bool:
    return any(payoff.gained_e for payoff in payoffs.values())


def _reason(pareto: bool, gains: bool) -> str:
    if not pareto:
        return "pareto"
    return "" if gains else "no-gain"


def breaching_members(coalition: Coalition, evaluator: CoalitionEvaluator, nocomp: dict[int, float], d_f: float):
    """Return the members of a coalition with a non-edge user below its
    threshold while the coalition cooperates, in ascending order."""
    throughputs = evaluator.throughputs(coalition)
    return sorted(
        rrh
        for rrh in coalition
        if any(
            throughputs[ue] < non_edge_floor(nocomp[ue], d_f)
            for ue in evaluator.served_ues(rrh)
            if ue not in evaluator.edge_ues
        )
    )


def enforce_non_edge_bound(
    partition: Partition, evaluator: CoalitionEvaluator, nocomp: dict[int, float], d_f: float
) -> tuple[Partition, int]:
    """Split members off coalitions until no non-edge user is below its
    threshold.

    A coalition formed on earlier channels may no longer respect the
    threshold. The lowest breaching member of the first breaching coalition
    is split off, and the check repeats on the new partition.

    Parameters
    ----------
    partition: Partition
        The standing partition.
    evaluator: CoalitionEvaluator
        Gives the throughputs of the TTI under any coalition.
    nocomp: dict[int, float]
        The throughput of every user without JT-CoMP.
    d_f: float
        The acceptable fractional decrease of non-edge throughput.

    Returns
    -------
    partition: Partition
        The partition with every coalition respecting the threshold.
    splits: int
        The number of members split off.
    """
    splits = 0
    while True:
        for coalition in partition.coalitions:
            if len(coalition) < 2:  # noqa: PLR2004
                continue
            breaching = breaching_members(coalition, evaluator, nocomp, d_f)
            if breaching:
                partition = partition.split(coalition, breaching[0])
                splits += 1
                break
        else:
            return partition, splits


class CoalitionGame:
    """One activation of the coalition formation.

    Parameters
    ----------
    evaluator: CoalitionEvaluator
        Gives the throughputs of the TTI under any coalition.
    state: PayoffState
        The cumulative payoffs and the no JT-CoMP throughputs. The edge
        baselines are reset to the starting partition.
    ci: CiMatrix
        The C/I matrix of the TTI.
    partition: Partition
        The starting partition. Coalitions breaking the non-edge threshold
        on this TTI are split before the first pass.
    d_f: float
        The acceptable fractional decrease of non-edge throughput.
    ci_threshold_db: float
        Only pairs at or below this C/I are examined.
    max_coalition_size: int
        The size cap of a coalition.
    """

    def __init__(
        self,
        evaluator: CoalitionEvaluator,
        state: PayoffState,
        ci: CiMatrix,
        partition: Partition,
        *,
        d_f: float = 0.4,
        ci_threshold_db: float = 10.0,
        max_coalition_size: int = 4,
    ) -> None:
        self.evaluator = evaluator
        self.state = state
        self.ci = ci
        self.d_f = d_f
        self.ci_threshold_db = ci_threshold_db
        self.max_coalition_size = max_coalition_size

        self.partition, forced = enforce_non_edge_bound(partition, evaluator, state.nocomp, d_f)
        if forced:
            logger.debug("split %d member(s) off %s to restore the non-edge threshold", forced, partition)

        self.stats = ActivationStats(activations=1, forced_splits=forced, linked_pairs=ci.count_linked(ci_threshold_db))
        self.visited = {partition, self.partition}
        self._merges: dict[frozenset[Coalition], Outcome] = {}
        self._splits: dict[tuple[Coalition, int], Outcome] = {}

        for rrh in self.partition.rrhs:
            self.state.cumulative.setdefault(rrh, 0.0)
        for coalition in self.partition:
            self._update_baselines(coalition, evaluator.throughputs(coalition))

    # Private methods ----------------------------------------------------------

    def _split_users(self, rrh: int) -> tuple[list[int], list[int]]:
        served = self.evaluator.served_ues(rrh)
        edge = [ue for ue in served if ue in self.evaluator.edge_ues]
        non_edge = [ue for ue in served if ue not in self.evaluator.edge_ues]
        return edge, non_edge

    def _update_baselines(self, coalition: Coalition, throughputs: dict[int, float]) -> None:
        for rrh in coalition:
            edge, _ = self._split_users(rrh)
            for ue in edge:
                self.state.edge_baselines[ue] = throughputs[ue]

    def _payoffs(self, groups: list[tuple[Coalition, dict[int, float]]]) -> tuple[dict[int, RrhPayoff], bool]:
        payoffs = {}
        sound = True
        for coalition, throughputs in groups:
            for rrh in sorted(coalition):
                edge, non_edge = self._split_users(rrh)
                payoffs[rrh] = rrh_payoff(rrh, edge, non_edge, throughputs, self.state, self.d_f)
                sound &= conditions_hold(edge, non_edge, throughputs, self.state, self.d_f)
        return payoffs, sound

    def _apply(self, new_partition: Partition, outcome: Outcome, groups: list[Coalition]) -> None:
        if not outcome.sound:
            self.stats.soundness_violations += 1
            logger.warning("accepted an operation with a throughput condition broken")
        for rrh, delta in outcome.deltas.items():
            self.state.cumulative[rrh] += delta
        for coalition in groups:
            self._update_baselines(coalition, outcome.throughputs)
        self.partition = new_partition
        self.visited.add(new_partition)

    # Public methods -----------------------------------------------------------

    def evaluate_merge(self, parts) -> Outcome:
        """Evaluate merging coalitions, without applying it.

        Parameters
        ----------
        parts: iterable of Coalition
            The coalitions to merge.

        Returns
        -------
        Outcome
            Whether the merge is accepted, with the payoffs of the involved
            RRHs.
        """
        key = frozenset(Coalition(part) for part in parts)
        if key in self._merges:
            return self._merges[key]

        union = Coalition().union(*key)
        if len(union) > self.max_coalition_size:
            outcome = Outcome(False, reason="size-cap")
        else:
            throughputs = self.evaluator.throughputs(union)
            payoffs, sound = self._payoffs([(union, throughputs)])
            candidate = {rrh: payoff.phi for rrh, payoff in payoffs.items()}
            incumbent = {rrh: self.state.cumulative[rrh] for rrh in union}
            pareto = pareto_prefers(candidate, incumbent)
            increases = utility(candidate, union) > sum(utility(incumbent, part) for part in key)
            gains = _edge_gains(payoffs)
            deltas = {rrh: candidate[rrh] - incumbent[rrh] for rrh in union}
            outcome = Outcome(
                pareto and increases and gains, payoffs, deltas, throughputs, sound, _reason(pareto, gains)
            )

        self._merges[key] = outcome
        return outcome

    def evaluate_split(self, coalition: Coalition, member: int) -> Outcome:
        """Evaluate splitting a member off a coalition, without applying it.

        Parameters
        ----------
        coalition: Coalition
            The coalition, of at least two RRHs.
        member: int
            The RRH which leaves as a singleton.

        Returns
        -------
        Outcome
            Whether the split is accepted, with the payoffs of the members.
        """
        coalition = Coalition(coalition)
        if len(coalition) < 2 or member not in coalition:  # noqa: PLR2004
            raise PreconditionViolation(f"can not split RRH {member} off {sorted(coalition)}")

        key = (coalition, member)
        if key in self._splits:
            return self._splits[key]

        leaver = Coalition({member})
        rest = coalition - leaver
        throughputs_leaver = self.evaluator.throughputs(leaver)
        throughputs_rest = self.evaluator.throughputs(rest)
        payoffs, sound = self._payoffs([(leaver, throughputs_leaver), (rest, throughputs_rest)])
        candidate = {rrh: payoff.phi for rrh, payoff in payoffs.items()}
        incumbent = {rrh: self.state.cumulative[rrh] for rrh in coalition}
        deltas = {rrh: candidate[rrh] - incumbent[rrh] for rrh in coalition}
        pareto = pareto_prefers(candidate, incumbent)
        gains = _edge_gains(payoffs)

        outcome = Outcome(
            pareto and gains,
            payoffs,
            deltas,
            {**throughputs_rest, **throughputs_leaver},
            sound,
            _reason(pareto, gains),
        )
        self._splits[key] = outcome
        return outcome

    def try_merge(self, parts) -> bool:
        """Test a merge of coalitions and apply it if accepted.

        Merges that were tested before, or that would recreate a partition
        visited in this activation, are skipped.

        Parameters
        ----------
        parts: iterable of Coalition
            At least two coalitions of the current partition.

        Returns
        -------
        bool
            True if the merge was applied.
        """
        parts = sorted({Coalition(part) for part in parts}, key=sorted)
        if len(parts) < 2:  # noqa: PLR2004
            raise PreconditionViolation("a merge needs at least two distinct coalitions")
        new_partition = self.partition.merge(parts)
        if new_partition in self.visited:
            return False

        fresh = frozenset(parts) not in self._merges
        outcome = self.evaluate_merge(parts)
        if fresh:
            if outcome.reason == "size-cap":
                self.stats.size_cap_rejections += 1
            else:
                self.stats.merge_tests += 1
        if not outcome.accepted:
            return False

        self._apply(new_partition, outcome, [Coalition().union(*parts)])
        self.stats.accepted_merges += 1
        logger.debug("merged %s, payoff changes %s", [sorted(part) for part in parts], outcome.deltas)
        return True

    def try_split(self, coalition: Coalition, member: int) -> bool:
        """Test splitting a member off a coalition and apply it if accepted.

        Parameters
        ----------
        coalition: Coalition
            A coalition of the current partition, with at least two RRHs.
        member: int
            The RRH which leaves.

        Returns
        -------
        bool
            True if the split was applied.
        """
        coalition = Coalition(coalition)
        new_partition = self.partition.split(coalition, member)
        if new_partition in self.visited:
            return False

        fresh = (coalition, member) not in self._splits
        outcome = self.evaluate_split(coalition, member)
        if fresh:
            self.stats.split_tests += 1
        if not outcome.accepted:
            return False

        self._apply(new_partition, outcome, [Coalition({member}), coalition - {member}])
        self.stats.accepted_splits += 1
        logger.debug("split RRH %d off %s, payoff changes %s", member, sorted(coalition), outcome.deltas)
        return True

    def merge_pass(self) -> bool:
        """Walk the rows of the C/I matrix once, trying every examined pair.

        Returns
        -------
        bool
            True if any merge was applied.
        """
        accepted = False
        for row in range(self.ci.values.shape[0]):
            pairs = self.ci.row_pairs(row, self.ci_threshold_db)
            if not pairs:
                break
            for _, rrh, candidate in pairs:
                own = self.partition.coalition_of(rrh)
                other = self.partition.coalition_of(candidate)
                if own == other:
                    continue
                accepted |= self.try_merge([own, other])
        return accepted

    def split_pass(self) -> bool:
        """Sweep every member of every coalition, trying to split it off.

        Sweeps repeat until one accepts nothing.

        Returns
        -------
        bool
            True if any split was applied.
        """
        accepted = False
        while True:
            applied = False
            for coalition in self.partition.coalitions:
                if len(coalition) < 2:  # noqa: PLR2004
                    continue
                for member in sorted(coalition):
                    if self.try_split(coalition, member):
                        applied = True
                        break
                if applied:
                    break
            if not applied:
                return accepted
            accepted = True

    def run(self) -> Partition:
        """Run merge and split passes until neither changes the partition.

        Returns
        -------
        Partition
            The final partition of the activation.
        """
        while True:
            merged = self.merge_pass()
            split = self.split_pass()
            if not merged and not split:
                break

        logger.debug(
            "activation finished with %s after %d iteration(s)", self.partition, self.stats.iterations
        )
        return self.partition


@dataclass(frozen=True)
class FormationResult:
    """The result of an activation."""

    partition: Partition
    stats: ActivationStats
    game: CoalitionGame


def run_coalition_formation(
    evaluator: CoalitionEvaluator,
    state: PayoffState,
    ci: CiMatrix,
    partition: Partition,
    *,
    d_f: float = 0.4,
    ci_threshold_db: float = 10.0,
    max_coalition_size: int = 4,
) -> FormationResult:
    """Run one activation of the coalition formation.

    Parameters
    ----------
    evaluator: CoalitionEvaluator
        Gives the throughputs of the TTI under any coalition.
    state: PayoffState
        The payoff state, updated in place.
    ci: CiMatrix
        The C/I matrix of the TTI.
    partition: Partition
        The result of the previous activation, or all singletons.
    d_f: float
        The acceptable fractional decrease of non-edge throughput.
    ci_threshold_db: float
        The C/I threshold in dB.
    max_coalition_size: int
        The size cap of a coalition.

    Returns
    -------
    FormationResult
        The final partition, the counters of the activation and the game,
        which can be checked for stability.
    """
    game = CoalitionGame(
        evaluator,
        state,
        ci,
        partition,
        d_f=d_f,
        ci_threshold_db=ci_threshold_db,
        max_coalition_size=max_coalition_size,
    )
    final = game.run()
    final.validate(partition.rrhs, max_coalition_size if partition.max_size <= max_coalition_size else None)

    return FormationResult(final, game.stats, game)


def reactivation_triggers(prev_state, curr_state) -> bool:
    """Check if the clustering has to be run again.

    Parameters
    ----------
    prev_state: NetworkState or None
        The state of the previous TTI, None before the first TTI.
    curr_state: NetworkState
        The state of this TTI.

    Returns
    -------
    bool
        True if a user was handed over or changed its edge status.
    """
    if prev_state is None:
        return True
    return prev_state.serving != curr_state.serving or prev_state.edge != curr_state.edge
