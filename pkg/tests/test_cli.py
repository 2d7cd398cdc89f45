"""End-to-end CLI tests: commands, formats, and exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from returndist.cli import main
from returndist.distfit import LaplaceParams, sample_laplace
from returndist.market_data import OHLCV_HEADER

from conftest import ohlcv_csv_from_returns


@pytest.fixture
def laplace_csv(tmp_path):
    """OHLCV file whose returns are a fixed-seed Laplace sample."""
    returns = sample_laplace(1500, LaplaceParams(mu=0.0, scale=0.008), 2012)
    path = tmp_path / "SYN.csv"
    path.write_text(ohlcv_csv_from_returns(returns), encoding="utf-8")
    return path


class TestAnalyze:
    def test_json_report(self, laplace_csv, capsys):
        assert main(["analyze", "--input", str(laplace_csv)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["symbol"] == "SYN"
        assert payload["n"] == 1500
        assert payload["better_fit"] == "laplace"
        assert payload["shapiro_p"] < 1e-10
        assert payload["excess_kurtosis"] > 1.0
        assert payload["warnings"] == []

    def test_markdown_report(self, laplace_csv, capsys):
        assert main(["analyze", "--input", str(laplace_csv), "--format", "markdown"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("| metric")
        assert "| better_fit" in out

    def test_markdown_and_json_values_agree(self, laplace_csv, capsys):
        main(["analyze", "--input", str(laplace_csv)])
        payload = json.loads(capsys.readouterr().out)
        main(["analyze", "--input", str(laplace_csv), "--format", "markdown"])
        markdown = capsys.readouterr().out
        for key in ("skew", "excess_kurtosis", "shapiro_w", "ks_laplace", "aic_normal"):
            cell = next(
                line.split("|")[2].strip()
                for line in markdown.splitlines()
                if line.startswith(f"| {key} ")
            )
            assert float(cell) == float(f"{payload[key]:.6g}")

    def test_price_column_selection(self, tmp_path, capsys):
        # adj_close halved relative to close: same returns either way,
        # but build distinct columns to prove the flag is honored
        lines = [",".join(OHLCV_HEADER)]
        closes = [100.0, 101.0, 99.5, 102.0, 103.5, 101.25, 104.0]
        for i, c in enumerate(closes):
            adj = c * (1.0 + 0.01 * i)
            lines.append(f"2012-01-{3 + i:02d},{c},{c},{c},{c},{adj},10")
        path = tmp_path / "mix.csv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")

        main(["analyze", "--input", str(path), "--price-column", "close"])
        by_close = json.loads(capsys.readouterr().out)
        main(["analyze", "--input", str(path), "--price-column", "adj_close"])
        by_adj = json.loads(capsys.readouterr().out)
        assert by_close["normal_fit"]["mean"] != by_adj["normal_fit"]["mean"]

    def test_returns_only_round_trip(self, tmp_path, capsys):
        sample_path = tmp_path / "draws.txt"
        assert main([
            "sample", "--dist", "laplace", "--n", "1200", "--seed", "4",
            "--lambda", "0.01", "--output", str(sample_path),
        ]) == 0
        assert main(["analyze", "--input", str(sample_path), "--returns-only"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 1200
        assert payload["better_fit"] == "laplace"

    def test_null_rows_reported(self, tmp_path, capsys):
        text = ohlcv_csv_from_returns([0.01, -0.02, 0.005, 0.01, -0.01, 0.02, 0.0, 0.01])
        lines = text.splitlines()
        lines.insert(4, "2012-01-20,null,null,null,null,null,null")
        path = tmp_path / "gaps.csv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        assert main(["analyze", "--input", str(path)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["warnings"]) == 1
        assert "null" in payload["warnings"][0]

    def test_missing_file_exit_2(self, tmp_path, capsys):
        assert main(["analyze", "--input", str(tmp_path / "nope.csv")]) == 2
        assert "error" in capsys.readouterr().err

    def test_single_row_exit_2(self, tmp_path, capsys):
        path = tmp_path / "one.csv"
        path.write_text(
            ",".join(OHLCV_HEADER) + "\n2012-01-03,1,1,1,1,1,0\n", encoding="utf-8"
        )
        assert main(["analyze", "--input", str(path)]) == 2

    def test_bad_header_exit_2(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n1,2,3\n", encoding="utf-8")
        assert main(["analyze", "--input", str(path)]) == 2

    def test_constant_returns_exit_3(self, tmp_path, capsys):
        path = tmp_path / "flat.txt"
        path.write_text("0.01\n" * 50, encoding="utf-8")
        assert main(["analyze", "--input", str(path), "--returns-only"]) == 3

    def test_unknown_flag_exit_1(self, laplace_csv, capsys):
        assert main(["analyze", "--input", str(laplace_csv), "--bogus"]) == 1


class TestSample:
    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        argv = ["sample", "--dist", "normal", "--n", "5000", "--seed", "42", "--output"]
        assert main(argv + [str(a)]) == 0
        assert main(argv + [str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert len(a.read_text().splitlines()) == 5000

    def test_single_laplace_value_repeatable(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        argv = ["sample", "--dist", "laplace", "--n", "1", "--seed", "7", "--output"]
        main(argv + [str(a)])
        main(argv + [str(b)])
        assert a.read_text() == b.read_text()

    def test_usage_errors(self, tmp_path, capsys):
        out = str(tmp_path / "x.txt")
        cases = [
            ["sample", "--dist", "normal", "--n", "0", "--seed", "1", "--output", out],
            ["sample", "--dist", "normal", "--n", "5", "--seed", "-1", "--output", out],
            ["sample", "--dist", "normal", "--n", "5", "--seed", str(2**64), "--output", out],
            ["sample", "--dist", "normal", "--n", "5", "--seed", "1", "--sigma", "0", "--output", out],
            ["sample", "--dist", "normal", "--n", "5", "--seed", "1", "--lambda", "1", "--output", out],
            ["sample", "--dist", "laplace", "--n", "5", "--seed", "1", "--sigma", "1", "--output", out],
            ["sample", "--dist", "laplace", "--n", "5", "--seed", "1", "--lambda", "-2", "--output", out],
            ["sample", "--dist", "cauchy", "--n", "5", "--seed", "1", "--output", out],
        ]
        for argv in cases:
            assert main(argv) == 1, argv
            capsys.readouterr()

    def test_custom_params_respected(self, tmp_path):
        path = tmp_path / "shifted.txt"
        main([
            "sample", "--dist", "normal", "--n", "4000", "--seed", "6",
            "--mu", "5.0", "--sigma", "0.1", "--output", str(path),
        ])
        values = [float(line) for line in path.read_text().splitlines()]
        mean = sum(values) / len(values)
        assert abs(mean - 5.0) < 0.01


class TestEcdfCommand:
    def test_csv_contract(self, laplace_csv, tmp_path):
        out = tmp_path / "curves.csv"
        assert main(["ecdf", "--input", str(laplace_csv), "--output", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "x,ecdf,normal_cdf,laplace_cdf"
        assert len(lines) - 1 == 1500
        ecdf_col = [float(line.split(",")[1]) for line in lines[1:]]
        assert ecdf_col == sorted(ecdf_col)
        assert ecdf_col[-1] == 1.0

    def test_svg_output(self, laplace_csv, tmp_path):
        import xml.etree.ElementTree as ET

        out = tmp_path / "curves.svg"
        assert main([
            "ecdf", "--input", str(laplace_csv), "--format", "svg", "--output", str(out),
        ]) == 0
        root = ET.fromstring(out.read_text())
        assert root.tag.endswith("svg")

    def test_bad_format_exit_1(self, laplace_csv, tmp_path, capsys):
        assert main([
            "ecdf", "--input", str(laplace_csv), "--format", "png",
            "--output", str(tmp_path / "x"),
        ]) == 1


class TestHistCommand:
    def test_histogram_json(self, laplace_csv, tmp_path):
        out = tmp_path / "hist.json"
        assert main([
            "hist", "--input", str(laplace_csv), "--bins", "40", "--output", str(out),
        ]) == 0
        payload = json.loads(out.read_text())
        assert payload["symbol"] == "SYN"
        assert sum(payload["counts"]) == payload["n"] == 1500
        assert len(payload["bin_edges"]) == 41
        widths = [
            payload["bin_edges"][i + 1] - payload["bin_edges"][i]
            for i in range(len(payload["counts"]))
        ]
        integral = sum(d * w for d, w in zip(payload["densities"], widths))
        assert integral == pytest.approx(1.0, abs=1e-9)

    def test_default_bins_100(self, laplace_csv, tmp_path):
        out = tmp_path / "hist.json"
        main(["hist", "--input", str(laplace_csv), "--output", str(out)])
        assert len(json.loads(out.read_text())["counts"]) == 100

    def test_constant_returns_single_bin(self, tmp_path):
        path = tmp_path / "flat.txt"
        path.write_text("0.01\n" * 30, encoding="utf-8")
        out = tmp_path / "hist.json"
        assert main([
            "hist", "--input", str(path), "--returns-only",
            "--bins", "1", "--output", str(out),
        ]) == 0
        payload = json.loads(out.read_text())
        assert payload["counts"] == [30]

    def test_zero_bins_exit_1(self, laplace_csv, tmp_path):
        assert main([
            "hist", "--input", str(laplace_csv), "--bins", "0",
            "--output", str(tmp_path / "x"),
        ]) == 1


class TestDeterminism:
    def test_analyze_bit_identical_across_processes(self, laplace_csv):
        def run() -> bytes:
            proc = subprocess.run(
                [sys.executable, "-m", "returndist", "analyze", "--input", str(laplace_csv)],
                capture_output=True,
                check=True,
            )
            return proc.stdout

        assert run() == run()
