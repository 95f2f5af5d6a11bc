#!/usr/bin/env python3
"""Regenerate every figure from scratch through the two public CLIs.

Runs the simulation CLI once per needed trajectory (this is the slow part,
a few minutes at the default lengths), then the figure CLI once per figure.
Both tools are invoked as subprocesses, exactly as a user would call them.

    python3 scripts/reproduce_figures.py --outdir figures_out
    python3 scripts/reproduce_figures.py --outdir /tmp/smoke --t-max 2
"""

from __future__ import annotations

import argparse
import math
import subprocess
import sys
from pathlib import Path

PHI_ENTANGLING = 3.0 * math.pi / 4.0
PHI_DECAYING = math.pi / 4.0


def sh(args: list[str]) -> None:
    print("+", " ".join(args))
    subprocess.run(args, check=True)


def simulate(outdir: Path, t_max: float) -> dict[str, tuple[str, ...]]:
    """Produce all CSVs; return figure id -> ordered input paths."""
    sim = [sys.executable, "-m", "cavity_discord.cli"]

    def run(scenario: str, phi: float, ratio: float, name: str) -> str:
        path = outdir / f"{name}.csv"
        sh(
            sim
            + [
                "run",
                "--scenario", scenario,
                "--state-phi", str(phi),
                "--gamma-ratio", str(ratio),
                "--t-max", str(t_max),
                "--out", str(path),
            ]
        )
        return str(path)

    inputs: dict[str, tuple[str, ...]] = {}
    sweep_values = ["0.2", "0.4", "1", "2"]
    for fig, scenario in (("fig1a", "correlated"), ("fig1b", "factorized")):
        base = outdir / f"{scenario}_sweep.csv"
        sh(
            sim
            + [
                "sweep",
                "--scenario", scenario,
                "--vary", "gamma_ratio",
                "--values", ",".join(sweep_values),
                "--t-max", str(t_max),
                "--out", str(base),
            ]
        )
        inputs[fig] = tuple(
            str(outdir / f"{scenario}_sweep_gamma_ratio_{v}.csv") for v in sweep_values
        )

    for fig, phi, ratio in (
        ("fig2a", PHI_ENTANGLING, 0.2),
        ("fig2b", PHI_ENTANGLING, 5.0),
        ("fig2c", PHI_DECAYING, 0.2),
        ("fig2d", PHI_DECAYING, 5.0),
    ):
        inputs[fig] = tuple(
            run(scenario, phi, ratio, f"{scenario}_{fig}") for scenario in ("correlated", "factorized")
        )

    inputs["fig3a"] = inputs["fig2b"]
    inputs["fig3b"] = inputs["fig2d"]
    return inputs


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="figures_out", help="directory for CSVs and images")
    parser.add_argument("--t-max", type=float, default=50.0, help="trajectory length, omega*t units")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    inputs = simulate(outdir, args.t_max)
    for figure_id, paths in inputs.items():
        sh(
            [
                sys.executable, "-m", "discord_figures.cli",
                "plot",
                "--figure", figure_id,
                "--inputs", ",".join(paths),
                "--out", str(outdir / f"{figure_id}.png"),
            ]
        )
    print(f"done: {outdir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
