"""End-to-end acceptance: render every figure from CSVs made by the real CLI.

The simulation package is exercised strictly as an external tool (subprocess
console entry point); nothing from it is imported here. Trajectories are
shortened to omega*t <= 2 to keep the run fast; the CSV schema is identical
at any length.
"""

from __future__ import annotations

import math
import subprocess
import sys

import pytest

from discord_figures import CSV_HEADER, FigureSpec, render

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"

SIM = [sys.executable, "-m", "cavity_discord.cli"]


def run_sim(args: list[str], cwd) -> None:
    proc = subprocess.run(SIM + args, capture_output=True, cwd=cwd)
    assert proc.returncode == 0, proc.stderr.decode()


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    """One short trajectory per scenario/phase/damping combination, plus sweeps."""
    root = tmp_path_factory.mktemp("csvs")
    phases = {"entangling": 3.0 * math.pi / 4.0, "decaying": math.pi / 4.0}
    for scenario in ("correlated", "factorized"):
        for phase, phi in phases.items():
            for ratio in (0.2, 5.0):
                run_sim(
                    [
                        "run",
                        "--scenario", scenario,
                        "--state-phi", str(phi),
                        "--gamma-ratio", str(ratio),
                        "--t-max", "2",
                        "--out", str(root / f"{scenario}_{phase}_{ratio}.csv"),
                    ],
                    cwd=root,
                )
    for scenario in ("correlated", "factorized"):
        run_sim(
            [
                "sweep",
                "--scenario", scenario,
                "--vary", "gamma_ratio",
                "--values", "0.2,1",
                "--t-max", "2",
                "--out", str(root / f"{scenario}_sweep.csv"),
            ],
            cwd=root,
        )
    return root


def figure_inputs(csv_dir, figure_id: str) -> tuple[str, ...]:
    def pair(phase: str, ratio: float) -> tuple[str, str]:
        return (
            str(csv_dir / f"correlated_{phase}_{ratio}.csv"),
            str(csv_dir / f"factorized_{phase}_{ratio}.csv"),
        )
    return {
        "fig1a": tuple(
            str(csv_dir / f"correlated_sweep_gamma_ratio_{v}.csv") for v in ("0.2", "1")
        ),
        "fig1b": tuple(
            str(csv_dir / f"factorized_sweep_gamma_ratio_{v}.csv") for v in ("0.2", "1")
        ),
        "fig2a": pair("entangling", 0.2),
        "fig2b": pair("entangling", 5.0),
        "fig2c": pair("decaying", 0.2),
        "fig2d": pair("decaying", 5.0),
        "fig3a": pair("entangling", 5.0),
        "fig3b": pair("decaying", 5.0),
    }[figure_id]


def test_b1_every_figure_renders_and_empty_csv_is_rejected(csv_dir, tmp_path):
    rendered = []
    for figure_id in ("fig1a", "fig1b", "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b"):
        out = tmp_path / f"{figure_id}.png"
        render(FigureSpec(figure_id, figure_inputs(csv_dir, figure_id), str(out)))
        rendered.append(out.read_bytes()[:8] == PNG_MAGIC)

    empty = tmp_path / "header_only.csv"
    empty.write_text(",".join(CSV_HEADER) + "\n")
    good = figure_inputs(csv_dir, "fig2a")[0]
    proc = subprocess.run(
        [
            sys.executable, "-m", "discord_figures.cli",
            "plot", "--figure", "fig2a",
            "--inputs", f"{good},{empty}",
            "--out", str(tmp_path / "reject.png"),
        ],
        capture_output=True,
    )
    rejected = proc.returncode != 0 and "header_only.csv" in proc.stderr.decode()

    ok = all(rendered) and rejected
    print(
        f"[{'PASS' if ok else 'FAIL'}] B1: {sum(rendered)}/8 figures rendered as PNG; "
        f"header-only CSV rejected with offending path: {rejected}"
    )
    assert ok
