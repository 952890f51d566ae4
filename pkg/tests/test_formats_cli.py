from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from click.testing import CliRunner

from jetample import bundled
from jetample.cli import cli
from jetample.formats import (
    ParseError,
    SignatureError,
    digest,
    format_surface,
    parse_class,
    parse_surface,
)

P2_TEXT = "RANK 1\nGRAM\n1\nCANONICAL -3\nCURVES\n1 H\n"


def run(*args: str):
    return CliRunner().invoke(cli, list(args), prog_name="jetample", catch_exceptions=False)


# --- parsing ------------------------------------------------------------------------


def test_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_surface("RANK 1\nGRAM\n  q\nCANONICAL -3\nCURVES\n1 H\n", "t.surf")
    assert (info.value.line, info.value.column) == (3, 3)
    assert str(info.value).startswith("t.surf:3:3:")


def test_missing_section():
    with pytest.raises(ParseError, match="CURVES"):
        parse_surface("RANK 1\nGRAM\n1\nCANONICAL -3\n")


def test_hodge_violation_rejected():
    with pytest.raises(SignatureError):
        parse_surface("RANK 2\nGRAM\n1 0\n0 1\nCANONICAL 0 0\nCURVES\n1 0 A\n")


def test_comments_ignored():
    m = parse_surface("# header\n" + P2_TEXT.replace("GRAM\n", "GRAM   # intersection form\n"))
    assert m.rank == 1


def test_bundled_models():
    p2 = bundled.load_surface("p2").model
    assert p2.rank == 1 and p2.canonical.coords == (-3,)
    blp2 = bundled.load_surface("blp2.surf").model
    assert [c.label for c in blp2.curves] == ["E", "F"]
    assert bundled.load_blowup("k3_node").model.source.rank == 2


def test_every_bundled_surface_round_trips():
    for name in bundled.corpus_names():
        if not name.endswith(".surf"):
            continue
        m = parse_surface(bundled.corpus_text(name), name)
        again = parse_surface(format_surface(m), name)
        assert format_surface(again) == format_surface(m)
        assert again.gram == m.gram and again.canonical == m.canonical


def test_digest_tracks_content():
    text = bundled.corpus_text("p2.surf")
    assert digest(text) == digest(text)
    assert digest(text) != digest(text + " ")
    assert digest("a", "b") != digest("ab")


def test_parse_class_forms(blp2, k3):
    assert parse_class(blp2, "3,1").coords == (3, 1)
    assert parse_class(blp2, "H-E").coords == (1, -1)
    assert parse_class(blp2, "2F + E").coords == (2, -1)
    assert parse_class(blp2, "1/2 H").coords == (Fraction(1, 2), 0)
    assert parse_class(k3, "3E+G") == parse_class(k3, "3E") + parse_class(k3, "G")
    for bad in ("", "H E", "Q", "1,x"):
        with pytest.raises(ValueError):
            parse_class(blp2, bad)


# --- CLI --------------------------------------------------------------------------------


def test_ln_prints_number():
    res = run("cluster", "ln", "--n", "3")
    assert res.exit_code == 0 and res.output.strip() == "6"


@pytest.mark.parametrize(
    "args, code",
    [
        (("certify", "--model", "p2", "--L", "4H", "--k", "1"), 0),
        (("certify", "--model", "k3_pencil", "--L", "5E+2G", "--k", "1", "--blowup", "k3_node"), 2),
        (("cluster", "colength", "x*y", "x*(x+y)"), 2),
        (("cluster", "colength", "y^2 - x^3", "x"), 0),
        (("campedelli", "verify"), 0),
        (("zariski", "--model", "nowhere", "--d", "1"), 1),
        (("zariski", "--model", "blp2", "--d", "2,-3"), 1),
        (("certify", "--model", "p2", "--L", "4H", "--k", "1", "--blowup", "k3_node"), 1),
    ],
)
def test_exit_codes(args, code):
    assert run(*args).exit_code == code


def test_errors_are_one_line():
    res = run("zariski", "--model", "blp2", "--d", "Q")
    assert res.exit_code == 1
    assert "error:" in res.output and "Traceback" not in res.output


@pytest.mark.parametrize(
    "args",
    [
        ("certify", "--model", "p2", "--L", "4H", "--k", "1"),
        ("seshadri", "--blowup", "blp2", "--L", "3H"),
        ("cluster", "noether", "y - x^2", "y^2", "--tree"),
        ("campedelli", "verify"),
    ],
)
@pytest.mark.parametrize("emit", ["text", "json"])
def test_repeatable_output(args, emit):
    first, second = run(*args, "--emit", emit), run(*args, "--emit", emit)
    assert first.output == second.output


def test_json_and_text_agree():
    args = ("certify", "--model", "k3_pencil", "--L", "5E+2G", "--k", "1", "--blowup", "k3_node")
    data = json.loads(run(*args, "--emit", "json").output)
    text = run(*args).output
    assert data["result"]["verdict"] == "Obstructions"
    assert f"verdict: {data['result']['verdict']}" in text
    assert data["command"] in text and data["digest"] in text
    assert data["command"].startswith("jetample certify --model k3_pencil")


def test_timing_is_opt_in():
    assert "wall_time_s" not in json.loads(run("campedelli", "verify", "--emit", "json").output)
    assert "wall_time_s" in json.loads(run("campedelli", "verify", "--emit", "json", "--timing").output)


def test_corpus_round_trip(tmp_path: Path):
    assert run("corpus", "export", "--to", str(tmp_path)).exit_code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == bundled.corpus_names()
    surf = tmp_path / "blp2.surf"
    assert run("corpus", "check", str(surf)).exit_code == 0
    canonical = run("corpus", "format", str(surf)).output
    surf.write_text(canonical)
    assert run("corpus", "format", str(surf)).output == canonical
    assert run("corpus", "check", str(surf)).exit_code == 0
    # an exported blow-up resolves its SOURCE next to itself
    assert run("seshadri", "--blowup", str(tmp_path / "blp2.blowup"), "--L", "3H").exit_code == 0


def test_corpus_check_flags_bad_file(tmp_path: Path):
    bad = tmp_path / "bad.surf"
    bad.write_text("RANK 2\nGRAM\n1 0\n0 1\nCANONICAL 0 0\nCURVES\n1 0 A\n")
    res = run("corpus", "check", str(bad), "--emit", "json")
    assert res.exit_code == 2
    assert not json.loads(res.output)["result"]["ok"]


def test_corpus_check_all():
    res = run("corpus", "check", "--emit", "json")
    assert res.exit_code == 0 and json.loads(res.output)["result"]["ok"]


def test_digest_in_report_changes_with_file(tmp_path: Path):
    surf = tmp_path / "p.surf"
    surf.write_text(P2_TEXT)
    a = json.loads(run("zariski", "--model", str(surf), "--d", "2", "--emit", "json").output)["digest"]
    surf.write_text(P2_TEXT + "# edited\n")
    b = json.loads(run("zariski", "--model", str(surf), "--d", "2", "--emit", "json").output)["digest"]
    assert a != b
