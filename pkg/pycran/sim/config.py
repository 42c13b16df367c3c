#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Scenario configuration.

A scenario is stored as a parameter file, with one parameter per line
written as the name, padded to 40 characters, followed by its value. Lines
starting with # are comments and lists are comma separated. Parameters
missing from a file take their default value, unknown parameters are an
error.
"""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from aenum import MultiValueEnum

from pycran.channel import PathlossModel, noise_power
from pycran.error import InvalidConfig
from pycran.link import DEFAULT_CQI_THRESHOLDS_DB, CqiTable
from pycran.link.enum import SinrAveraging
from pycran.math import dbm_to_watts, kmh_to_ms
from pycran.math.constants import SUBCARRIERS_PER_RB
from pycran.phy.enum import PairingOrder
from pycran.schemes.enum import Scheme

logger = logging.getLogger(__name__)

ENUM_FIELDS = {"scheme": Scheme, "pairing_order": PairingOrder, "sinr_averaging": SinrAveraging}


@dataclass(frozen=True)
class ScenarioConfig:
    """Every tunable parameter of a simulation.

    The defaults are those of a 12 RRH small cell network with 15 users per
    cell, 4 transmit antennas and 106 RBs of 15 kHz subcarriers.
    """

    # Topology and mobility
    rrh_count: int = 12
    circumradius_m: float = 125.0
    ues_per_cell: int = 15
    ue_speed_kmh: float = 5.0
    rrh_height_m: float = 10.0
    ue_height_m: float = 1.5

    # Radio
    carrier_ghz: float = 3.5
    tx_power_dbm: float = 30.0
    num_antennas: int = 4
    users_per_cluster: int = 2
    rrh_antenna_gain_dbi: float = 8.17
    ue_antenna_gain_dbi: float = 0.0
    shadow_std_db: float = 4.0
    bandwidth_mhz: float = 20.0
    subcarrier_spacing_khz: float = 15.0
    num_rbs: int = 106
    noise_figure_db: float = 9.0
    thermal_noise_dbm_hz: float = -174.0
    pathloss_slope: float = 22.7
    pathloss_intercept: float = 41.0
    pathloss_frequency_slope: float = 20.0
    pathloss_min_distance_m: float = 10.0
    tti_seconds: float = 1e-3

    # Physical layer and link adaptation
    p_ftpc: float = 0.4
    pairing_order: PairingOrder = PairingOrder.GREEDY
    zf_max_condition: float = 1e8
    sinr_averaging: SinrAveraging = SinrAveraging.LINEAR
    cqi_thresholds_db: tuple[float, ...] = DEFAULT_CQI_THRESHOLDS_DB

    # Clustering
    scheme: Scheme = Scheme.GAME_JT_COMP
    d_f: float = 0.4
    edge_fraction: float = 0.2
    ci_threshold_db: float = 10.0
    max_coalition_size: int = 4
    static_cluster_size: int = 4
    greedy_max_size: int = 4
    check_stability: bool = False

    # Run control
    ttis: int = 1000
    seed: int = 0
    runs: int = 1

    def __post_init__(self) -> None:
        for name, enum in ENUM_FIELDS.items():
            value = getattr(self, name)
            if not isinstance(value, enum):
                try:
                    object.__setattr__(self, name, enum(value))
                except ValueError as exc:
                    raise InvalidConfig(f"{value} is not a valid value for {name}") from exc
        object.__setattr__(self, "cqi_thresholds_db", tuple(float(t) for t in self.cqi_thresholds_db))

    # Presets ------------------------------------------------------------------

    @classmethod
    def full(cls) -> ScenarioConfig:
        """The full scale scenario."""
        return cls()

    @classmethod
    def desk(cls) -> ScenarioConfig:
        """A scenario small enough to run on a desktop in minutes."""
        return cls(rrh_count=7, ues_per_cell=6, num_rbs=12, num_antennas=2, ttis=200)

    @classmethod
    def preset(cls, name: str) -> ScenarioConfig:
        """Return a preset by name."""
        presets = {"desk": cls.desk, "full": cls.full}
        if name not in presets:
            raise InvalidConfig(f"unknown preset {name}, choose from {', '.join(presets)}")
        return presets[name]()

    # Derived quantities -------------------------------------------------------

    @property
    def tx_power_watts(self) -> float:
        """The total transmit power of an RRH."""
        return float(dbm_to_watts(self.tx_power_dbm))

    @property
    def ue_speed_ms(self) -> float:
        """The user speed in m/s."""
        return float(kmh_to_ms(self.ue_speed_kmh))

    @property
    def num_subcarriers(self) -> int:
        """The number of subcarriers over all RBs."""
        return self.num_rbs * SUBCARRIERS_PER_RB

    @property
    def group_size(self) -> int:
        """K N, the number of users scheduled per RB."""
        return self.users_per_cluster * self.num_antennas

    @property
    def noise_watts(self) -> float:
        """The noise power of a subcarrier."""
        return noise_power(self.subcarrier_spacing_khz * 1e3, self.thermal_noise_dbm_hz, self.noise_figure_db)

    @property
    def pathloss_model(self) -> PathlossModel:
        """The path loss model."""
        return PathlossModel(
            self.pathloss_slope, self.pathloss_intercept, self.pathloss_frequency_slope, self.pathloss_min_distance_m
        )

    @property
    def cqi_table(self) -> CqiTable:
        """The CQI table."""
        return CqiTable(self.cqi_thresholds_db)

    # Public methods -----------------------------------------------------------

    def validate(self) -> ScenarioConfig:
        """Check every parameter is in range.

        Returns
        -------
        ScenarioConfig
            The config itself, so calls can be chained.
        """
        checks = [
            (self.rrh_count >= 1, "rrh_count must be at least 1"),
            (self.ues_per_cell >= 1, "ues_per_cell must be at least 1"),
            (self.circumradius_m > 0, "circumradius_m must be positive"),
            (self.num_antennas >= 1, "num_antennas must be at least 1"),
            (self.users_per_cluster == 2, "users_per_cluster must be 2"),  # noqa: PLR2004
            (self.carrier_ghz > 0, "carrier_ghz must be positive"),
            (self.num_rbs >= 1, "num_rbs must be at least 1"),
            (self.ue_speed_kmh >= 0, "ue_speed_kmh must not be negative"),
            (self.shadow_std_db >= 0, "shadow_std_db must not be negative"),
            (self.subcarrier_spacing_khz > 0, "subcarrier_spacing_khz must be positive"),
            (
                self.num_subcarriers * self.subcarrier_spacing_khz <= self.bandwidth_mhz * 1e3,
                "the RBs do not fit in the bandwidth",
            ),
            (self.tti_seconds > 0, "tti_seconds must be positive"),
            (0 < self.edge_fraction < 1, "edge_fraction must be in (0, 1)"),
            (0 <= self.d_f <= 1, "d_f must be in [0, 1]"),
            (0 <= self.p_ftpc <= 1, "p_ftpc must be in [0, 1]"),
            (self.max_coalition_size >= 1, "max_coalition_size must be at least 1"),
            (self.static_cluster_size >= 1, "static_cluster_size must be at least 1"),
            (self.greedy_max_size >= 1, "greedy_max_size must be at least 1"),
            (self.zf_max_condition > 1, "zf_max_condition must be larger than 1"),
            (self.ttis >= 0, "ttis must not be negative"),
            (self.runs >= 1, "runs must be at least 1"),
            (self.seed >= 0, "seed must not be negative"),
        ]
        for ok, message in checks:
            if not ok:
                raise InvalidConfig(message)
        CqiTable(self.cqi_thresholds_db)

        return self

    def with_overrides(self, **overrides) -> ScenarioConfig:
        """Return a validated copy with some parameters changed."""
        unknown = set(overrides) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise InvalidConfig(f"unknown parameter(s): {', '.join(sorted(unknown))}")
        return dataclasses.replace(self, **overrides).validate()


def format_value(value) -> str:
    """Format a parameter value for a parameter file."""
    if isinstance(value, MultiValueEnum):
        return str(value._values_[1])  # noqa: SLF001
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return ",".join(format_value(v) for v in value)
    return repr(value) if isinstance(value, float) else str(value)


def parse_value(name: str, text: str, default):
    """Parse the text of a parameter, using the type of its default."""
    try:
        if name in ENUM_FIELDS:
            return ENUM_FIELDS[name](text)
        if isinstance(default, bool):
            if text.lower() not in ("true", "false"):
                raise ValueError(text)
            return text.lower() == "true"
        if isinstance(default, int):
            return int(text)
        if isinstance(default, float):
            return float(text)
        if isinstance(default, tuple):
            return tuple(float(v) for v in text.split(",") if v)
    except ValueError as exc:
        raise InvalidConfig(f"invalid value {text!r} for {name}") from exc

    return text


def read_config(filepath: str | Path) -> ScenarioConfig:
    """Read a scenario from a parameter file.

    Parameters
    ----------
    filepath: str or Path
        The path to the parameter file.

    Returns
    -------
    ScenarioConfig
        The validated scenario.
    """
    defaults = ScenarioConfig()
    names = {f.name for f in dataclasses.fields(ScenarioConfig)}
    values = {}

    with Path(filepath).open(encoding="utf-8") as file_in:
        lines = file_in.readlines()

    for number, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        split = line.split()
        if len(split) != 2:  # noqa: PLR2004
            raise InvalidConfig(f"invalid syntax on line {number} of {filepath}: {line.strip()}")
        name, text = split
        if name not in names:
            raise InvalidConfig(f"unknown parameter {name} on line {number} of {filepath}")
        values[name] = parse_value(name, text, getattr(defaults, name))

    logger.debug("read %d parameter(s) from %s", len(values), filepath)
    return ScenarioConfig(**values).validate()


def write_config(config: ScenarioConfig, filepath: str | Path) -> Path:
    """Write every parameter of a scenario to a parameter file.

    Parameters
    ----------
    config: ScenarioConfig
        The scenario.
    filepath: str or Path
        The output path.

    Returns
    -------
    Path
        The path written to.
    """
    filepath = Path(filepath)
    with filepath.open("w", encoding="utf-8") as file_out:
        file_out.write("# pycran scenario\n")
        for f in dataclasses.fields(config):
            file_out.write(f"{f.name:40s} {format_value(getattr(config, f.name))}\n")

    return filepath
