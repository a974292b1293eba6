"""Command-line interface: flags, exit codes, stream formats."""

import json
import subprocess
import sys

import pytest

from segmagic.cli import main

from conftest import fixture_path

FIX_5x5 = str(fixture_path("universal_5x5"))
FIX_4x4_1258 = str(fixture_path("universal_4x4_1258"))
FIX_4x4_0125 = str(fixture_path("universal_4x4_0125"))
FIX_PAL_888 = str(fixture_path("palindromic_3x3_888"))


def run(argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    return main(argv)


# --- verify ---------------------------------------------------------------


def test_verify_pandiagonal_with_constant(capsys):
    assert main(["verify", FIX_5x5, "--expect", "pandiagonal", "--constant", "176"]) == 0
    out = capsys.readouterr().out
    assert "pandiagonal-magic" in out
    assert "176" in out


def test_verify_expectation_failure_is_exit_1(capsys):
    assert main(["verify", FIX_4x4_1258, "--expect", "pandiagonal"]) == 1
    captured = capsys.readouterr()
    assert "check failed" in captured.err
    assert "magic" in captured.err


def test_verify_wrong_constant_is_exit_1(capsys):
    assert main(["verify", FIX_4x4_0125, "--expect", "magic", "--constant", "176"]) == 1
    assert "88" in capsys.readouterr().err


def test_verify_json_output(capsys):
    assert main(["verify", FIX_4x4_0125, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["category"] == "magic"
    assert data["constant"] == 88


def test_verify_reads_stdin(capsys, monkeypatch):
    assert run(["verify", "--expect", "semi"], "11 22\n22 11\n", monkeypatch) == 0
    assert "semi-magic" in capsys.readouterr().out


def test_missing_file_is_exit_2(capsys):
    assert main(["verify", "no/such/file.sq"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_parse_error_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.sq"
    bad.write_text("12 3x\n45 67\n", encoding="utf-8")
    assert main(["verify", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "parse error" in err
    assert "line 1" in err


def test_unknown_flag_is_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["verify", FIX_5x5, "--nope"])
    assert err.value.code == 2


def test_no_command_is_exit_2():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


# --- classify / transform ----------------------------------------------------


def test_classify_all_transforms_json(capsys):
    assert main(["classify", FIX_4x4_1258, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data["universality"]) == {
        "rot180",
        "mirror-h",
        "mirror-v",
        "digit-reverse",
    }
    for entry in data["universality"].values():
        assert entry["verdict"] == "magic-same-constant"
        assert entry["constant"] == 176


def test_classify_transform_subset(capsys):
    assert main(["classify", FIX_PAL_888, "--transforms", "rot180", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert list(data["universality"]) == ["rot180"]
    assert data["universality"]["rot180"]["verdict"] == "semi-magic"


def test_classify_unknown_transform_is_exit_2(capsys):
    assert main(["classify", FIX_PAL_888, "--transforms", "spin"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_transform_round_trip(capsys):
    assert main(["transform", FIX_5x5, "--apply", "rot180", "--apply", "rot180"]) == 0
    out = capsys.readouterr().out
    from segmagic import parse_square

    assert parse_square(out) == parse_square(
        fixture_path("universal_5x5").read_text(encoding="utf-8")
    )


def test_transform_single(capsys):
    assert main(["transform", FIX_5x5, "--apply", "rot180"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "21 10 05 58 82"


def test_transform_invalid_digit_is_exit_1(capsys, monkeypatch):
    assert run(["transform", "--apply", "rot180"], "13 31\n31 13\n", monkeypatch) == 1
    err = capsys.readouterr().err
    assert "digit 3" in err


def test_transform_bad_choice_is_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["transform", FIX_5x5, "--apply", "spin"])
    assert err.value.code == 2


# --- search / palindromes ------------------------------------------------------


def test_search_plain_stream(capsys):
    assert main(["search", "--alphabet", "012", "--expect", "magic"]) == 0
    captured = capsys.readouterr()
    blocks = captured.out.strip().split("\n\n")
    assert len(blocks) == 8
    assert "8 squares" in captured.err
    assert blocks == sorted(blocks)


def test_search_jsonl(capsys):
    assert main(
        [
            "search",
            "--alphabet",
            "012",
            "--expect",
            "magic",
            "--transforms",
            "rot180,digit-reverse",
            "--jsonl",
        ]
    ) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 8
    for line in lines:
        record = json.loads(line)
        assert record["category"] == "magic"
        assert record["constant"] == 33
        assert record["universality"]["rot180"]["verdict"] == "magic-same-constant"
        assert len(record["rows"]) == 3


def test_search_dedup(capsys):
    assert main(
        [
            "search",
            "--alphabet",
            "012",
            "--expect",
            "magic",
            "--transforms",
            "rot180,digit-reverse",
            "--dedup",
        ]
    ) == 0
    captured = capsys.readouterr()
    assert "2 squares" in captured.err


def test_search_via_latin_matches_direct(capsys):
    assert main(["search", "--alphabet", "125", "--expect", "semi"]) == 0
    direct = capsys.readouterr().out
    assert main(["search", "--alphabet", "125", "--expect", "semi", "--via-latin"]) == 0
    assert capsys.readouterr().out == direct


def test_search_jobs_match_serial(capsys):
    assert main(["search", "--alphabet", "012", "--expect", "magic"]) == 0
    serial = capsys.readouterr().out
    assert main(["search", "--alphabet", "012", "--expect", "magic", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == serial


def test_search_order_mismatch_is_exit_2(capsys):
    assert main(["search", "--alphabet", "0125", "--order", "3"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_palindromes_cli(capsys):
    assert main(
        ["palindromes", "--alphabet", "125", "--order", "3", "--width", "3"]
    ) == 0
    captured = capsys.readouterr()
    assert "72 squares" in captured.err
    blocks = captured.out.strip().split("\n\n")
    assert len(blocks) == 72
    first_fixture = fixture_path("palindromic_3x3_888").read_text(encoding="utf-8")
    wanted = "\n".join(
        line for line in first_fixture.splitlines() if not line.startswith("#")
    ).strip()
    assert wanted in blocks


# --- dates ----------------------------------------------------------------------


def test_dates_exact(capsys):
    assert main(
        [
            "dates",
            "--alphabet",
            "01258",
            "--from",
            "01.01.2010",
            "--to",
            "31.12.2010",
            "--mode",
            "exact",
        ]
    ) == 0
    assert capsys.readouterr().out.splitlines() == [
        "08.05.2010",
        "18.05.2010",
        "28.05.2010",
        "05.08.2010",
        "15.08.2010",
        "25.08.2010",
    ]


def test_dates_subset_json(capsys):
    assert main(
        [
            "dates",
            "--alphabet",
            "0125",
            "--from",
            "01.05.2010",
            "--to",
            "31.05.2010",
            "--json",
        ]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 11
    assert data[0] == "01.05.2010" and data[-1] == "25.05.2010"


def test_dates_bad_range_is_exit_2(capsys):
    assert main(
        ["dates", "--alphabet", "0125", "--from", "02.05.2010", "--to", "01.05.2010"]
    ) == 2
    assert "usage error" in capsys.readouterr().err


def test_dates_bad_format_is_exit_2(capsys):
    assert main(
        ["dates", "--alphabet", "0125", "--from", "2010-05-01", "--to", "31.05.2010"]
    ) == 2


# --- render ----------------------------------------------------------------------


def test_render_plain_round_trip(capsys):
    assert main(["render", FIX_4x4_0125]) == 0
    out = capsys.readouterr().out
    from segmagic import parse_square

    assert parse_square(out) == parse_square(
        fixture_path("universal_4x4_0125").read_text(encoding="utf-8")
    )


def test_render_bordered_matches_golden(capsys, fixtures_dir):
    assert main(
        ["render", FIX_5x5, "--style", "bordered", "--border-label", "88+88"]
    ) == 0
    golden = (fixtures_dir / "bordered_5x5_88plus88.golden").read_text(
        encoding="utf-8"
    )
    assert capsys.readouterr().out == golden


def test_render_sevenseg(capsys, monkeypatch):
    assert run(["render", "-", "--style", "sevenseg"], "8\n", monkeypatch) == 0
    assert capsys.readouterr().out == " _\n|_|\n|_|\n"


def test_render_json(capsys):
    assert main(["render", FIX_PAL_888, "--style", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"][1] == ["111", "222", "555"]


# --- entry point -------------------------------------------------------------------


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "segmagic", "verify", FIX_5x5, "--expect", "magic"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "pandiagonal-magic" in proc.stdout
