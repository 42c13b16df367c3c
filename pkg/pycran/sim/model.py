#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The TTI loop of a simulation, and the runs built on it.

Each TTI moves the users, recomputes the macro-scale losses and the
attachment, draws fresh fading and a fresh schedule, evaluates every user
without JT-CoMP, classifies the edge users, runs the clustering of the scheme
if it has to be run again and finally evaluates every user under the
resulting partition.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from pycran.channel import draw_shadowing, macro_losses, realize_channels
from pycran.error import InvalidConfig
from pycran.game.ci import build_ci_matrix, classify_edge_ues
from pycran.game.formation import (
    ActivationStats,
    enforce_non_edge_bound,
    reactivation_triggers,
    run_coalition_formation,
)
from pycran.game.partition import Partition
from pycran.game.payoff import PayoffState, non_edge_floor
from pycran.game.stability import check_dhp_stable
from pycran.schemes import greedy_clusters, no_comp_baseline, static_clusters
from pycran.schemes.enum import Scheme
from pycran.sched import round_robin_schedule
from pycran.sim.config import ScenarioConfig
from pycran.sim.evaluator import TtiEvaluator
from pycran.sim.state import NetworkState
from pycran.sim.streams import RandomStreams
from pycran.topology import build_layout, drop_ues
from pycran.topology.mobility import advance_mobility, update_attachment
from pycran.util import count_cpu_cores

logger = logging.getLogger(__name__)

REDUCTION_BRACKETS = (10, 20, 30, 40, 50)


@dataclass(frozen=True)
class TtiReport:
    """What happened in one TTI.

    The per user arrays are indexed by user id. Users which were not
    scheduled have a NaN effective SINR and zero throughput.
    """

    tti: int
    effective_sinr: np.ndarray
    is_edge: np.ndarray
    throughput: np.ndarray
    throughput_nocomp: np.ndarray
    scheduled_rbs: np.ndarray
    partition: Partition
    activated: bool
    iterations: int
    stats: ActivationStats
    regularized: int
    handovers: int
    non_edge_violations: int = 0

    @property
    def average_size(self) -> float:
        """The mean coalition size."""
        return self.partition.average_size

    @property
    def max_size(self) -> int:
        """The size of the largest coalition."""
        return self.partition.max_size


@dataclass
class RunSummary:
    """The aggregate metrics of one run."""

    seed: int
    scheme: Scheme
    ttis: int
    per_ue_average: np.ndarray
    per_ue_average_nocomp: np.ndarray
    per_ue_edge_fraction: np.ndarray
    average_edge_throughput: float = 0.0
    average_non_edge_throughput: float = 0.0
    cdf_instantaneous_edge: np.ndarray = field(default_factory=lambda: np.zeros(0))
    cdf_instantaneous_non_edge: np.ndarray = field(default_factory=lambda: np.zeros(0))
    cdf_average_edge: np.ndarray = field(default_factory=lambda: np.zeros(0))
    cdf_average_non_edge: np.ndarray = field(default_factory=lambda: np.zeros(0))
    decreased_instantaneous_pct: float = 0.0
    max_non_edge_reduction: float = 0.0
    increased_pct: float = 0.0
    equal_pct: float = 0.0
    decreased_pct: float = 0.0
    reduction_brackets: dict[int, float] = field(default_factory=lambda: dict.fromkeys(REDUCTION_BRACKETS, 0.0))
    activations: int = 0
    average_iterations: float = 0.0
    average_coalition_size: float = 0.0
    average_max_coalition_size: float = 0.0
    stats: ActivationStats = field(default_factory=ActivationStats)
    regularized: int = 0
    handovers: int = 0
    non_edge_violations: int = 0
    stability_checks: int = 0
    stability_failures: int = 0
    digest: str = ""

    def row(self) -> dict:
        """The scalar metrics as one row of the summary table."""
        row = {
            "seed": self.seed,
            "scheme": self.scheme.label,
            "ttis": self.ttis,
            "ues": len(self.per_ue_average),
            "average_edge_throughput": self.average_edge_throughput,
            "average_non_edge_throughput": self.average_non_edge_throughput,
            "average_throughput": float(np.mean(self.per_ue_average)) if len(self.per_ue_average) else 0.0,
            "decreased_instantaneous_pct": self.decreased_instantaneous_pct,
            "max_non_edge_reduction": self.max_non_edge_reduction,
            "increased_pct": self.increased_pct,
            "equal_pct": self.equal_pct,
            "decreased_pct": self.decreased_pct,
        }
        row.update({f"reduced_over_{bracket}_pct": value for bracket, value in self.reduction_brackets.items()})
        row.update(
            {
                "activations": self.activations,
                "average_iterations": self.average_iterations,
                "average_coalition_size": self.average_coalition_size,
                "average_max_coalition_size": self.average_max_coalition_size,
                "merge_tests": self.stats.merge_tests,
                "accepted_merges": self.stats.accepted_merges,
                "split_tests": self.stats.split_tests,
                "accepted_splits": self.stats.accepted_splits,
                "size_cap_rejections": self.stats.size_cap_rejections,
                "soundness_violations": self.stats.soundness_violations,
                "forced_splits": self.stats.forced_splits,
                "linked_pairs": self.stats.linked_pairs,
                "non_edge_violations": self.non_edge_violations,
                "regularized": self.regularized,
                "handovers": self.handovers,
                "stability_checks": self.stability_checks,
                "stability_failures": self.stability_failures,
                "digest": self.digest,
            }
        )
        return row


@dataclass
class SimulationResult:
    """A run summary with the report of every TTI, if they were kept."""

    config: ScenarioConfig
    summary: RunSummary
    reports: list[TtiReport] = field(default_factory=list)


class Simulation:
    """The state of one run, advanced a TTI at a time.

    Parameters
    ----------
    config: ScenarioConfig
        The validated scenario.
    """

    def __init__(self, config: ScenarioConfig) -> None:
        self.config = config
        self.streams = RandomStreams(config.seed)
        self.scheme = config.scheme

        self.layout, self.rrhs = build_layout(
            config.rrh_count,
            config.circumradius_m,
            tx_power_total=config.tx_power_watts,
            num_antennas=config.num_antennas,
            antenna_gain=config.rrh_antenna_gain_dbi,
        )
        self.rrh_ids = [rrh.id for rrh in self.rrhs]
        self.rrh_positions = np.array([rrh.position for rrh in self.rrhs])
        self.ues = drop_ues(
            self.rrhs,
            config.ues_per_cell,
            config.circumradius_m,
            self.streams["topology"],
            speed=config.ue_speed_ms,
            antenna_gain=config.ue_antenna_gain_dbi,
        )
        self.streams.record("topology", np.array([[*ue.position, *ue.direction] for ue in self.ues]))

        n_ues = len(self.ues)
        self.shadowing = np.asarray(
            draw_shadowing(self.streams["shadowing"], config.shadow_std_db, (n_ues, config.rrh_count))
        )
        self.streams.record("shadowing", self.shadowing)
        self.gain_tx = np.array([rrh.antenna_gain for rrh in self.rrhs])
        self.gain_rx = np.array([ue.antenna_gain for ue in self.ues])

        self.payoff_state = PayoffState.fresh(self.rrh_ids)
        self.prev_state: NetworkState | None = None
        self.partition = no_comp_baseline(self.rrh_ids)
        if self.scheme == Scheme.SC_JT_COMP:
            self.partition = static_clusters(self.rrhs, config.static_cluster_size)
            logger.info("static clusters %s", self.partition)

        self.stability_checks = 0
        self.stability_failures = 0

    # Private methods ----------------------------------------------------------

    def _cluster(self, evaluator: TtiEvaluator, v: np.ndarray) -> tuple[int, ActivationStats]:
        if self.scheme == Scheme.GC_JT_COMP:
            self.partition, iterations = greedy_clusters(
                self.rrh_ids, evaluator, self.config.greedy_max_size, self.streams["clustering"]
            )
            return iterations, ActivationStats(activations=1)

        self.payoff_state.nocomp = dict(evaluator.nocomp)
        edge_by_rrh = {
            rrh: [ue for ue in evaluator.served_ues(rrh) if ue in evaluator.edge_ues] for rrh in self.rrh_ids
        }
        ci = build_ci_matrix(edge_by_rrh, v)
        result = run_coalition_formation(
            evaluator,
            self.payoff_state,
            ci,
            self.partition,
            d_f=self.config.d_f,
            ci_threshold_db=self.config.ci_threshold_db,
            max_coalition_size=self.config.max_coalition_size,
        )
        self.partition = result.partition

        if self.config.check_stability:
            stable, violation = check_dhp_stable(result.game)
            self.stability_checks += 1
            if not stable:
                self.stability_failures += 1
                logger.warning("partition %s is not stable, %s is accepted", self.partition, violation)

        return result.stats.iterations, result.stats

    # Public methods -----------------------------------------------------------

    def step(self, tti: int) -> TtiReport:
        """Advance the network by one TTI.

        Parameters
        ----------
        tti: int
            The index of the TTI, mobility is skipped on the first.

        Returns
        -------
        TtiReport
            The report of the TTI.
        """
        config = self.config
        if tti > 0:
            advance_mobility(self.ues, config.tti_seconds, self.layout)

        positions = np.array([ue.position for ue in self.ues])
        distances = self.layout.distance_matrix(positions, self.rrh_positions)
        macro = macro_losses(
            distances, self.shadowing, self.gain_tx, self.gain_rx, config.carrier_ghz, config.pathloss_model
        )
        v = macro.v

        serving_before = [ue.serving_rrh for ue in self.ues]
        handed_over = update_attachment(self.ues, v)
        handovers = len(handed_over) if tti > 0 else 0
        serving = tuple(ue.serving_rrh for ue in self.ues)
        if tti > 0:
            for rrh in sorted(set(serving_before) - set(serving)):
                logger.warning("RRH %d lost all of its users at TTI %d", rrh, tti)

        channels = realize_channels(macro, config.num_antennas, self.streams["fading"])
        self.streams.record("fading", channels.h)

        schedules = {}
        for rrh in self.rrh_ids:
            served = [ue for ue, srv in enumerate(serving) if srv == rrh]
            schedules[rrh] = round_robin_schedule(served, config.num_rbs, config.group_size, self.streams["scheduling"])
            self.streams.record("scheduling", np.asarray(schedules[rrh].groups, dtype=np.int64))

        evaluator = TtiEvaluator(config, channels.h, schedules, serving)
        classification = classify_edge_ues(evaluator.effective_sinrs, config.edge_fraction)
        evaluator.set_edges(classification)
        for ue in self.ues:
            ue.is_edge = ue.id in evaluator.edge_ues

        state = NetworkState.capture(tti, self.ues, evaluator.edge_ues, self.partition)
        activated = self.scheme.reactivates and reactivation_triggers(self.prev_state, state)
        iterations, stats = 0, ActivationStats()
        if activated:
            iterations, stats = self._cluster(evaluator, v)
        elif self.scheme == Scheme.GAME_JT_COMP:
            self.partition, forced = enforce_non_edge_bound(self.partition, evaluator, evaluator.nocomp, config.d_f)
            if forced:
                logger.debug("split %d member(s) off standing coalitions at TTI %d", forced, tti)
            stats = ActivationStats(forced_splits=forced)
        self.prev_state = state

        n_ues = len(self.ues)
        effective = np.full(n_ues, np.nan)
        for ue, value in evaluator.effective_sinrs.items():
            effective[ue] = value
        scheduled = np.zeros(n_ues, dtype=int)
        for ue, rbs in evaluator.scheduled_rbs.items():
            scheduled[ue] = len(rbs)

        is_edge = np.array([ue.is_edge for ue in self.ues])
        throughput = evaluator.partition_throughputs(self.partition)
        nocomp = np.array([evaluator.nocomp[ue] for ue in range(n_ues)])

        return TtiReport(
            tti=tti,
            effective_sinr=effective,
            is_edge=is_edge,
            throughput=throughput,
            throughput_nocomp=nocomp,
            scheduled_rbs=scheduled,
            partition=self.partition,
            activated=activated,
            iterations=iterations,
            stats=stats,
            regularized=evaluator.regularized,
            handovers=handovers,
            non_edge_violations=int(np.sum(~is_edge & (throughput < non_edge_floor(nocomp, config.d_f)))),
        )


def summarize(config: ScenarioConfig, reports: list[TtiReport], n_ues: int, **extra) -> RunSummary:
    """Aggregate the reports of a run.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario of the run.
    reports: list[TtiReport]
        The report of every TTI.
    n_ues: int
        The number of users.
    **extra
        Fields of the summary which do not come from the reports.

    Returns
    -------
    RunSummary
        The aggregate metrics, zeros when there are no reports.
    """
    summary = RunSummary(
        seed=config.seed,
        scheme=config.scheme,
        ttis=len(reports),
        per_ue_average=np.zeros(n_ues),
        per_ue_average_nocomp=np.zeros(n_ues),
        per_ue_edge_fraction=np.zeros(n_ues),
        **extra,
    )
    if not reports:
        return summary

    throughput = np.array([report.throughput for report in reports])
    nocomp = np.array([report.throughput_nocomp for report in reports])
    edge = np.array([report.is_edge for report in reports])

    summary.per_ue_average = throughput.mean(axis=0)
    summary.per_ue_average_nocomp = nocomp.mean(axis=0)
    summary.per_ue_edge_fraction = edge.mean(axis=0)

    summary.cdf_instantaneous_edge = np.sort(throughput[edge])
    summary.cdf_instantaneous_non_edge = np.sort(throughput[~edge])
    summary.average_edge_throughput = float(np.mean(throughput[edge])) if edge.any() else 0.0
    summary.average_non_edge_throughput = float(np.mean(throughput[~edge])) if (~edge).any() else 0.0

    # averages of each user over the TTIs it spent in each status
    edge_ttis = edge.sum(axis=0)
    non_edge_ttis = (~edge).sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        edge_average = np.where(edge, throughput, 0.0).sum(axis=0) / edge_ttis
        non_edge_average = np.where(~edge, throughput, 0.0).sum(axis=0) / non_edge_ttis
    summary.cdf_average_edge = np.sort(edge_average[edge_ttis > 0])
    summary.cdf_average_non_edge = np.sort(non_edge_average[non_edge_ttis > 0])

    summary.decreased_instantaneous_pct = float(100.0 * np.mean(throughput < nocomp))
    reference = (~edge) & (nocomp > 0)
    if reference.any():
        reduction = 1.0 - throughput[reference] / nocomp[reference]
        summary.max_non_edge_reduction = float(max(0.0, np.max(reduction)))

    average, average_nocomp = summary.per_ue_average, summary.per_ue_average_nocomp
    summary.increased_pct = float(100.0 * np.mean(average > average_nocomp))
    summary.equal_pct = float(100.0 * np.mean(average == average_nocomp))
    summary.decreased_pct = float(100.0 * np.mean(average < average_nocomp))
    with np.errstate(invalid="ignore", divide="ignore"):
        reduction = np.where(average_nocomp > 0, 1.0 - average / average_nocomp, 0.0)
    summary.reduction_brackets = {
        bracket: float(100.0 * np.mean(reduction > bracket / 100.0)) for bracket in REDUCTION_BRACKETS
    }

    summary.activations = sum(report.activated for report in reports)
    total_iterations = sum(report.iterations for report in reports)
    summary.average_iterations = total_iterations / summary.activations if summary.activations else 0.0
    summary.average_coalition_size = float(np.mean([report.average_size for report in reports]))
    summary.average_max_coalition_size = float(np.mean([report.max_size for report in reports]))
    for report in reports:
        summary.stats += report.stats
    summary.regularized = sum(report.regularized for report in reports)
    summary.handovers = sum(report.handovers for report in reports)
    summary.non_edge_violations = sum(report.non_edge_violations for report in reports)

    return summary


def run_simulation(config: ScenarioConfig, *, progress: bool = False, keep_reports: bool = True) -> SimulationResult:
    """Run one simulation.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario, validated before the run starts.
    progress: bool
        Show a progress bar over the TTIs.
    keep_reports: bool
        Return the report of every TTI with the summary.

    Returns
    -------
    SimulationResult
        The summary of the run and its reports.
    """
    config.validate()
    logger.info(
        "running %s with %d RRHs for %d TTIs, seed %d", config.scheme.label, config.rrh_count, config.ttis, config.seed
    )

    simulation = Simulation(config)
    reports = [simulation.step(tti) for tti in tqdm(range(config.ttis), disable=not progress, desc="TTIs")]
    summary = summarize(
        config,
        reports,
        len(simulation.ues),
        stability_checks=simulation.stability_checks,
        stability_failures=simulation.stability_failures,
        digest=simulation.streams.digest,
    )
    logger.info(
        "finished seed %d: %d activation(s), average coalition size %.2f",
        config.seed,
        summary.activations,
        summary.average_coalition_size,
    )

    return SimulationResult(config, summary, reports if keep_reports else [])


def _run(args: tuple[ScenarioConfig, bool]) -> SimulationResult:
    config, keep_reports = args
    return run_simulation(config, keep_reports=keep_reports)


def run_many(
    config: ScenarioConfig, *, jobs: int | None = None, progress: bool = False, keep_reports: bool = False
) -> list[SimulationResult]:
    """Run config.runs simulations with seeds seed, seed + 1, and so on.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario of the first run.
    jobs: int [optional]
        The number of processes, by default the number of physical cores.
        Runs are done in this process when it is 1.
    progress: bool
        Show a progress bar over the runs.
    keep_reports: bool
        Keep the report of every TTI of every run.

    Returns
    -------
    list[SimulationResult]
        The result of each run, in seed order.
    """
    work = [(config.with_overrides(seed=config.seed + i), keep_reports) for i in range(config.runs)]
    jobs = min(jobs or count_cpu_cores(), len(work))

    if jobs <= 1:
        return [_run(item) for item in tqdm(work, disable=not progress, desc="runs")]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(tqdm(executor.map(_run, work), total=len(work), disable=not progress, desc="runs"))


def paired_comparison(
    config: ScenarioConfig, schemes, *, jobs: int | None = None, progress: bool = False
) -> dict[Scheme, list[SimulationResult]]:
    """Run the same scenario and seeds under several schemes.

    Every scheme draws its topology, shadowing, fading and schedules from
    the same streams, so only the clustering differs between the runs.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario.
    schemes: list of Scheme or str
        At least two schemes.
    jobs: int [optional]
        The number of processes.
    progress: bool
        Show progress bars.

    Returns
    -------
    dict[Scheme, list[SimulationResult]]
        The runs of each scheme.
    """
    schemes = [Scheme(scheme) for scheme in schemes]
    if len(schemes) < 2:  # noqa: PLR2004
        raise InvalidConfig("a comparison needs at least two schemes")

    return {
        scheme: run_many(config.with_overrides(scheme=scheme), jobs=jobs, progress=progress)
        for scheme in dict.fromkeys(schemes)
    }


def _coerce(axis: str, default, value):
    try:
        number = float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidConfig(f"{axis} takes numbers, got {value!r}") from exc
    if isinstance(default, int):
        if not number.is_integer():
            raise InvalidConfig(f"{axis} takes whole numbers, got {value}")
        return int(number)
    return number


def sweep(
    config: ScenarioConfig, axis: str, values, *, jobs: int | None = None, progress: bool = False
) -> list[tuple[object, list[SimulationResult]]]:
    """Run the scenario for every value of one numeric parameter.

    Every value is converted to the type of the parameter first, whole
    numbers only for integer parameters. Points whose value is out of range
    for the parameter are skipped with a warning.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario template.
    axis: str
        The name of a numeric parameter.
    values: list
        The values of the parameter.
    jobs: int [optional]
        The number of processes.
    progress: bool
        Show progress bars.

    Returns
    -------
    list[tuple[object, list[SimulationResult]]]
        The runs of each value.
    """
    default = getattr(config, axis, None)
    if isinstance(default, bool) or not isinstance(default, (int, float)):
        raise InvalidConfig(f"{axis} is not a numeric parameter")

    typed = [_coerce(axis, default, value) for value in values]

    points = []
    for value in typed:
        try:
            point = config.with_overrides(**{axis: value})
        except InvalidConfig as exc:
            logger.warning("skipping sweep point %s = %s: %s", axis, value, exc)
            continue
        logger.info("sweep point %s = %s", axis, value)
        points.append((value, run_many(point, jobs=jobs, progress=progress)))

    return points
