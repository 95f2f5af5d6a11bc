"""Scenario execution: integrate a configured run, analyze every sample,
write the correlation time series as CSV, and summarize."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

from .correlations import CorrelationTriple, correlations
from .dynamics import IntegrationConfig, Trajectory, integrate
from .model import ModelParams, StateParams, initial_state_correlated, initial_state_factorized

CSV_HEADER = "omega_t,mutual_information,classical_correlation,quantum_discord"
SCENARIOS = ("correlated", "factorized")
SWEEPABLE = ("gamma_ratio", "state_theta", "state_phi", "scenario")
TAIL_FRACTION = 0.2


@dataclass(frozen=True)
class ScenarioConfig:
    """One run: initial-state choice, model parameters, integration window, output."""

    scenario: str = "correlated"
    state_theta: float = math.pi / 3.0
    state_phi: float = 3.0 * math.pi / 4.0
    gamma_ratio: float = 0.2
    t_max: float = 30.0
    dt: float = 1e-3
    sample_every: int = 100
    output_path: str = "correlations.csv"

    def __post_init__(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ValueError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        if not self.output_path:
            raise ValueError("output_path must be nonempty")
        # Constructing the typed parameter objects runs their range checks.
        self.state_params()
        self.model_params()
        self.integration_config()

    def state_params(self) -> StateParams:
        return StateParams(theta=self.state_theta, phi=self.state_phi)

    def model_params(self) -> ModelParams:
        return ModelParams(omega=1.0, gamma_ratio=self.gamma_ratio)

    def integration_config(self) -> IntegrationConfig:
        return IntegrationConfig(dt=self.dt, t_max=self.t_max, sample_every=self.sample_every)


@dataclass(frozen=True)
class ScenarioSummary:
    config: ScenarioConfig
    n_samples: int
    initial: CorrelationTriple
    max_discord: float
    max_discord_omega_t: float
    min_discord: float
    min_discord_omega_t: float
    tail_mutual_info: float
    tail_classical: float
    tail_discord: float


@dataclass(eq=False)
class ScenarioResult:
    config: ScenarioConfig
    trajectory: Trajectory
    triples: list[CorrelationTriple] = field(default_factory=list)

    def summary(self) -> ScenarioSummary:
        omega_ts = [s.omega_t for s in self.trajectory.samples]
        discords = [t.discord for t in self.triples]
        i_max = max(range(len(discords)), key=discords.__getitem__)
        i_min = min(range(len(discords)), key=discords.__getitem__)
        k = max(1, int(math.floor(len(self.triples) * TAIL_FRACTION)))
        tail = self.triples[len(self.triples) - k :]
        return ScenarioSummary(
            config=self.config,
            n_samples=len(self.triples),
            initial=self.triples[0],
            max_discord=discords[i_max],
            max_discord_omega_t=omega_ts[i_max],
            min_discord=discords[i_min],
            min_discord_omega_t=omega_ts[i_min],
            tail_mutual_info=sum(t.mutual_info for t in tail) / k,
            tail_classical=sum(t.classical for t in tail) / k,
            tail_discord=sum(t.discord for t in tail) / k,
        )


def initial_state(config: ScenarioConfig):
    state = config.state_params()
    if config.scenario == "correlated":
        return initial_state_correlated(state)
    return initial_state_factorized(state)


def format_float(value: float) -> str:
    """Canonical CSV number format: 12 significant digits, no excess zeros."""
    return format(value, ".12g")


def csv_lines(result: ScenarioResult) -> list[str]:
    lines = [CSV_HEADER]
    for sample, triple in zip(result.trajectory.samples, result.triples):
        lines.append(
            ",".join(
                format_float(v)
                for v in (sample.omega_t, triple.mutual_info, triple.classical, triple.discord)
            )
        )
    return lines


def write_csv(result: ScenarioResult, path: str | Path) -> None:
    Path(path).write_text("\n".join(csv_lines(result)) + "\n", encoding="ascii")


def run_scenario(config: ScenarioConfig, write: bool = True) -> ScenarioResult:
    """Integrate one configured scenario and analyze every recorded sample."""
    traj = integrate(initial_state(config), config.model_params(), config.integration_config())
    result = ScenarioResult(config=config, trajectory=traj)
    result.triples = [correlations(s.rho_ab) for s in traj.samples]
    if write:
        write_csv(result, config.output_path)
    return result


def _sweep_output_path(base: str, vary: str, value: object) -> str:
    p = Path(base)
    tag = value if isinstance(value, str) else format(value, "g")
    return str(p.with_name(f"{p.stem}_{vary}_{tag}{p.suffix or '.csv'}"))


def run_sweep(
    base: ScenarioConfig, vary: str, values: Sequence[object], write: bool = True
) -> list[ScenarioResult]:
    """Run the base scenario once per value of one swept field."""
    if vary not in SWEEPABLE:
        raise ValueError(f"vary must be one of {SWEEPABLE}, got {vary!r}")
    if not values:
        raise ValueError("values must be nonempty")
    results = []
    for value in values:
        cfg = replace(
            base,
            **{vary: value},
            output_path=_sweep_output_path(base.output_path, vary, value),
        )
        results.append(run_scenario(cfg, write=write))
    return results


def summary_lines(summary: ScenarioSummary) -> list[str]:
    cfg = summary.config
    return [
        f"scenario={cfg.scenario} gamma_ratio={format_float(cfg.gamma_ratio)} "
        f"theta={format_float(cfg.state_theta)} phi={format_float(cfg.state_phi)} "
        f"samples={summary.n_samples}",
        f"  initial: I={format_float(summary.initial.mutual_info)} "
        f"C={format_float(summary.initial.classical)} D={format_float(summary.initial.discord)}",
        f"  discord max {format_float(summary.max_discord)} at omega_t={format_float(summary.max_discord_omega_t)}; "
        f"min {format_float(summary.min_discord)} at omega_t={format_float(summary.min_discord_omega_t)}",
        f"  tail mean: I={format_float(summary.tail_mutual_info)} "
        f"C={format_float(summary.tail_classical)} D={format_float(summary.tail_discord)}",
    ]
