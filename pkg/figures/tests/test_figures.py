"""Unit tests for CSV parsing, spec validation, and rendering."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from discord_figures import (
    CSV_HEADER,
    FIGURE_IDS,
    FigureInputError,
    FigureSpec,
    read_columns,
    render,
    spec_from_json,
    sweep_label,
)
from discord_figures.cli import main

HEADER_LINE = ",".join(CSV_HEADER)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def write_csv(path: Path, rows: int = 5, scale: float = 1.0) -> Path:
    lines = [HEADER_LINE]
    for i in range(rows):
        t = 0.1 * i
        d = scale * 0.5 / (1.0 + t)
        c = scale * 0.3 / (1.0 + t)
        lines.append(f"{t},{c + d},{c},{d}")
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return path


class TestFigureSpec:
    def test_rejects_unknown_id(self):
        with pytest.raises(ValueError, match="unknown figure id"):
            FigureSpec("fig9z", ("a.csv",), "out.png")

    def test_rejects_empty_inputs(self):
        with pytest.raises(ValueError, match="at least one"):
            FigureSpec("fig1a", (), "out.png")

    @pytest.mark.parametrize("figure_id", ["fig2a", "fig2d", "fig3a", "fig3b"])
    def test_two_scenario_figures_need_two_inputs(self, figure_id):
        with pytest.raises(ValueError, match="exactly two"):
            FigureSpec(figure_id, ("a.csv",), "out.png")
        with pytest.raises(ValueError, match="exactly two"):
            FigureSpec(figure_id, ("a.csv", "b.csv", "c.csv"), "out.png")

    def test_sweep_figures_take_any_count(self):
        FigureSpec("fig1a", ("a.csv", "b.csv", "c.csv"), "out.png")
        FigureSpec("fig1b", ("a.csv",), "out.png")

    def test_from_json_round_trip(self, tmp_path):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(
            json.dumps(
                {
                    "figure_id": "fig2a",
                    "input_csv_paths": ["a.csv", "b.csv"],
                    "output_image_path": "out.png",
                }
            )
        )
        spec = spec_from_json(spec_path)
        assert spec == FigureSpec("fig2a", ("a.csv", "b.csv"), "out.png")

    @pytest.mark.parametrize(
        "payload,match",
        [
            ([1, 2], "JSON object"),
            ({"figure_id": "fig2a"}, "missing spec key"),
            (
                {
                    "figure_id": "fig2a",
                    "input_csv_paths": ["a", "b"],
                    "output_image_path": "o",
                    "dpi": 300,
                },
                "unknown spec keys",
            ),
        ],
    )
    def test_from_json_rejects_bad_payloads(self, tmp_path, payload, match):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(json.dumps(payload))
        with pytest.raises(ValueError, match=match):
            spec_from_json(spec_path)


class TestReadColumns:
    def test_reads_values_in_order(self, tmp_path):
        path = write_csv(tmp_path / "a.csv", rows=3)
        cols = read_columns(path)
        assert cols.omega_t == [0.0, 0.1, 0.2]
        assert len(cols.series["quantum_discord"]) == 3
        assert cols.series["mutual_information"][0] == pytest.approx(0.8)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FigureInputError, match="nope.csv"):
            read_columns(tmp_path / "nope.csv")

    def test_wrong_header(self, tmp_path):
        path = tmp_path / "a.csv"
        path.write_text("time,discord\n0,0.5\n")
        with pytest.raises(FigureInputError, match="unexpected header"):
            read_columns(path)

    def test_header_only(self, tmp_path):
        path = tmp_path / "a.csv"
        path.write_text(HEADER_LINE + "\n")
        with pytest.raises(FigureInputError, match="no data rows"):
            read_columns(path)

    def test_short_row(self, tmp_path):
        path = tmp_path / "a.csv"
        path.write_text(HEADER_LINE + "\n0.0,0.8,0.3\n")
        with pytest.raises(FigureInputError, match="cells"):
            read_columns(path)

    def test_non_numeric_row(self, tmp_path):
        path = tmp_path / "a.csv"
        path.write_text(HEADER_LINE + "\n0.0,0.8,0.3,oops\n")
        with pytest.raises(FigureInputError, match="not numeric"):
            read_columns(path)

    def test_error_message_carries_path(self, tmp_path):
        path = tmp_path / "broken.csv"
        path.write_text(HEADER_LINE + "\n")
        with pytest.raises(FigureInputError) as err:
            read_columns(path)
        assert "broken.csv" in str(err.value)
        assert err.value.path == str(path)


class TestSweepLabel:
    def test_recovers_ratio_from_sweep_name(self):
        assert sweep_label("out/sweep_gamma_ratio_0.2.csv") == "gamma/omega = 0.2"
        assert sweep_label("sweep_gamma_ratio_5.csv") == "gamma/omega = 5"

    def test_falls_back_to_stem(self):
        assert sweep_label("runs/my_run.csv") == "my_run"


class TestRender:
    @pytest.mark.parametrize("figure_id", FIGURE_IDS)
    def test_renders_every_figure_id(self, tmp_path, figure_id):
        a = write_csv(tmp_path / "sweep_gamma_ratio_0.2.csv", scale=1.0)
        b = write_csv(tmp_path / "sweep_gamma_ratio_1.csv", scale=0.5)
        out = tmp_path / f"{figure_id}.png"
        render(FigureSpec(figure_id, (str(a), str(b)), str(out)))
        assert out.read_bytes()[:8] == PNG_MAGIC

    def test_render_does_not_mutate_inputs(self, tmp_path):
        a = write_csv(tmp_path / "a.csv")
        b = write_csv(tmp_path / "b.csv", scale=0.4)
        before = (a.read_bytes(), b.read_bytes())
        render(FigureSpec("fig2a", (str(a), str(b)), str(tmp_path / "o.png")))
        assert (a.read_bytes(), b.read_bytes()) == before

    def test_render_propagates_bad_input(self, tmp_path):
        a = write_csv(tmp_path / "a.csv")
        bad = tmp_path / "bad.csv"
        bad.write_text(HEADER_LINE + "\n")
        with pytest.raises(FigureInputError, match="bad.csv"):
            render(FigureSpec("fig2a", (str(a), str(bad)), str(tmp_path / "o.png")))


class TestCli:
    def test_plot_success(self, tmp_path, capsys):
        a = write_csv(tmp_path / "a.csv")
        b = write_csv(tmp_path / "b.csv", scale=0.4)
        out = tmp_path / "fig2a.png"
        code = main(["plot", "--figure", "fig2a", "--inputs", f"{a},{b}", "--out", str(out)])
        assert code == 0
        assert out.read_bytes()[:8] == PNG_MAGIC
        assert str(out) in capsys.readouterr().out

    def test_plot_via_spec_file(self, tmp_path):
        a = write_csv(tmp_path / "a.csv")
        spec_path = tmp_path / "spec.json"
        out = tmp_path / "fig1a.png"
        spec_path.write_text(
            json.dumps(
                {
                    "figure_id": "fig1a",
                    "input_csv_paths": [str(a)],
                    "output_image_path": str(out),
                }
            )
        )
        assert main(["plot", "--spec", str(spec_path)]) == 0
        assert out.exists()

    def test_spec_excludes_flags(self, tmp_path, capsys):
        code = main(["plot", "--spec", "s.json", "--figure", "fig1a"])
        assert code == 1
        assert "one or the other" in capsys.readouterr().err

    def test_missing_flags(self, capsys):
        code = main(["plot", "--figure", "fig2a"])
        assert code == 1
        err = capsys.readouterr().err
        assert "--inputs" in err and "--out" in err

    def test_bad_csv_exits_nonzero_with_path(self, tmp_path, capsys):
        a = write_csv(tmp_path / "a.csv")
        bad = tmp_path / "empty.csv"
        bad.write_text(HEADER_LINE + "\n")
        code = main(
            ["plot", "--figure", "fig2b", "--inputs", f"{a},{bad}", "--out", str(tmp_path / "o.png")]
        )
        assert code == 1
        assert "empty.csv" in capsys.readouterr().err

    def test_unknown_figure_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["plot", "--figure", "fig7x", "--inputs", "a.csv", "--out", "o.png"])
        assert exc.value.code != 0
