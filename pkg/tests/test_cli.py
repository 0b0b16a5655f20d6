"""Command-line behavior: output shapes, exit codes, determinism."""

from __future__ import annotations

import json
import shutil
import subprocess
from pathlib import Path

import pytest

from warpdeg.cli import main
from warpdeg.codes import gauss_to_dt, parse_gauss, serialize
from warpdeg.diagram import to_gauss
from warpdeg.families import twist_minimal

TREFOIL = "O1+U2+O3+U1+O2+U3+"
FIGURE8 = "O1+U2-O3-U1+O4+U3-O2-U4+"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def test_analyze_text_output(capsys):
    code, out, err = run(capsys, "analyze", TREFOIL)
    assert code == 0 and err == ""
    assert out.splitlines() == [
        "crossings: 3",
        "d(D)=1 d(-D)=1 e=2 spn=1",
        "profile: 1 2 1 2 1 2",
        "polynomial: 3*t^1 + 3*t^2",
        "monotone: no",
    ]


def test_analyze_quiet_keeps_only_the_summary_line(capsys):
    code, out, _ = run(capsys, "analyze", TREFOIL, "--quiet")
    assert code == 0
    assert out.splitlines() == ["d(D)=1 d(-D)=1 e=2 spn=1"]


def test_analyze_records_output(capsys):
    code, out, _ = run(capsys, "analyze", FIGURE8, "--output", "records")
    assert code == 0
    record = json.loads(out)
    assert record["crossings"] == 4
    assert record["e"] == 3
    assert record["spn"] == 1
    assert record["monotone"] is False
    assert record["canonical"] == serialize(parse_gauss(FIGURE8))


def test_analyze_reads_codes_from_files(capsys, tmp_path):
    path = tmp_path / "diagram.txt"
    path.write_text("# a trefoil\n" + TREFOIL + "\n", encoding="utf-8")
    code, out, _ = run(capsys, "analyze", str(path), "--quiet")
    assert code == 0
    assert out.splitlines() == ["d(D)=1 d(-D)=1 e=2 spn=1"]


def test_analyze_respects_the_format_flag(capsys):
    code, out, _ = run(capsys, "analyze", "4 6 2", "--format", "dt",
                       "--quiet")
    assert code == 0
    assert "e=2" in out


def test_analyze_rejects_garbage_with_exit_2(capsys):
    code, out, err = run(capsys, "analyze", "O1+U2+")  # open strand
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def test_oracle_agrees_on_a_bundled_diagram(capsys):
    code, out, _ = run(capsys, "oracle", FIGURE8)
    assert code == 0
    assert out.splitlines()[-1] == "verdict: AGREE"


def test_oracle_random_batches_are_deterministic(capsys):
    argv = ("oracle", "--random", "12", "--max-crossings", "6",
            "--seed", "3", "--output", "records")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0
    records = [json.loads(line) for line in first[1].splitlines()]
    assert len(records) == 12
    assert all(record["agree"] for record in records)


def test_oracle_needs_a_code_or_a_random_count(capsys):
    assert run(capsys, "oracle")[0] == 2


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def test_generate_twist_matches_the_library(capsys):
    code, out, _ = run(capsys, "generate", "twist", "--n", "3")
    assert code == 0
    assert out.strip() == serialize(to_gauss(twist_minimal(3)))


def test_generate_supports_all_notations(capsys):
    for family, params in (("twist", ("--n", "4")),
                           ("rational", ("--p", "3", "--q", "2")),
                           ("ozawa", ("--n", "2"))):
        gauss = run(capsys, "generate", family, *params)[1].strip()
        dt = run(capsys, "generate", family, *params, "--format", "dt")[1]
        pd = run(capsys, "generate", family, *params, "--format", "pd")[1]
        assert gauss and dt.strip() and pd.strip().startswith("X(")
        code, out, _ = run(capsys, "analyze", gauss, "--output", "records")
        assert code == 0


def test_generated_ozawa_has_sum_two(capsys):
    gauss = run(capsys, "generate", "ozawa", "--n", "5")[1].strip()
    code, out, _ = run(capsys, "analyze", gauss, "--quiet")
    assert code == 0
    assert "e=2" in out


def test_generate_requires_family_parameters(capsys):
    assert run(capsys, "generate", "twist")[0] == 2
    assert run(capsys, "generate", "ozawa")[0] == 2
    assert run(capsys, "generate", "rational", "--p", "2")[0] == 2


# ---------------------------------------------------------------------------
# batch
# ---------------------------------------------------------------------------

def test_batch_reports_good_and_bad_lines(capsys, tmp_path):
    path = tmp_path / "codes.txt"
    path.write_text(
        "# comment only\n"
        f"{TREFOIL}\n"
        "\n"
        "O1+U2+  # does not close up\n"
        f"{FIGURE8}   # trailing comment\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "batch", str(path), "--output", "records")
    assert code == 1
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["line"] for r in records] == [2, 4, 5]
    assert "error" in records[1]
    assert records[2]["e"] == 3


def test_batch_of_clean_lines_exits_zero(capsys, tmp_path):
    path = tmp_path / "codes.txt"
    path.write_text(f"{TREFOIL}\n{FIGURE8}\n", encoding="utf-8")
    code, out, _ = run(capsys, "batch", str(path))
    assert code == 0
    assert out.splitlines()[-1] == "batch: 0 failed line(s)"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_bundled_table_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.splitlines()[-1] == "ALL CHECKS PASSED (335 checks)"


def test_verify_quiet_prints_one_line(capsys):
    code, out, _ = run(capsys, "verify", "--quiet")
    assert code == 0
    assert out.splitlines() == ["ALL CHECKS PASSED (335 checks)"]


def test_verify_records_mode_lists_every_check(capsys):
    code, out, _ = run(capsys, "verify", "--output", "records")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 335
    assert all(row["passed"] for row in rows)
    assert {"check", "scope", "passed", "details"} == set(rows[0])


def _broken_table(tmp_path: Path) -> Path:
    from warpdeg.table import default_table_path

    out = []
    for line in default_table_path().read_text(encoding="utf-8").splitlines():
        if '"name": "granny"' in line:
            obj = json.loads(line)
            obj["expected"]["e"] = 3
            line = json.dumps(obj)
        out.append(line)
    path = tmp_path / "broken.tbl"
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    return path


def test_verify_honors_the_table_environment_variable(capsys, tmp_path,
                                                      monkeypatch):
    monkeypatch.setenv("WARPDEG_TABLE", str(_broken_table(tmp_path)))
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL expected-e" in out


def test_verify_table_flag_beats_the_environment(capsys, tmp_path,
                                                 monkeypatch):
    from warpdeg.table import default_table_path

    monkeypatch.setenv("WARPDEG_TABLE", str(_broken_table(tmp_path)))
    code, out, _ = run(capsys, "verify", "--table",
                       str(default_table_path()), "--quiet")
    assert code == 0
    assert out.splitlines() == ["ALL CHECKS PASSED (335 checks)"]


def test_verify_missing_table_is_a_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--table",
                       str(tmp_path / "absent.tbl"))
    assert code == 2
    assert err.startswith("error:")


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------

def test_convert_between_notations(capsys):
    from warpdeg.codes import dt_to_gauss, parse_dt

    want_dt = serialize(gauss_to_dt(parse_gauss(FIGURE8)))
    code, out, _ = run(capsys, "convert", FIGURE8, "--to", "dt")
    assert code == 0 and out.strip() == want_dt
    # back to gauss: strand roles survive, signs do not (DT carries none)
    code, out, _ = run(capsys, "convert", want_dt, "--format", "dt",
                       "--to", "gauss")
    assert code == 0
    assert out.strip() == serialize(dt_to_gauss(parse_dt(want_dt)))


def test_convert_to_pd_is_not_supported(capsys):
    code, _, err = run(capsys, "convert", TREFOIL, "--to", "pd")
    assert code == 2
    assert "planar embedding" in err


# ---------------------------------------------------------------------------
# top level
# ---------------------------------------------------------------------------

def test_unknown_subcommands_exit_2(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_records_mode_is_byte_identical_across_runs(capsys):
    argv = ("analyze", FIGURE8, "--output", "records")
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.skipif(shutil.which("warpdeg") is None,
                    reason="entry point not installed")
def test_installed_entry_point_runs_verify():
    proc = subprocess.run(["warpdeg", "verify", "--quiet"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "ALL CHECKS PASSED (335 checks)"
