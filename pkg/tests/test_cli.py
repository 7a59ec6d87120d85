from __future__ import annotations

import json
from pathlib import Path

import pytest

from heffter.arrayfile import parse_array, serialize_array
from heffter.cli import main
from heffter.errors import ArrayFormatError
from heffter.h3 import construct_raw_h3, simple_h3

H35_FILE = """heffter 3 5 31
6 7 -10 -4 1
-9 5 2 -11 13
3 -12 8 15 -14
"""


def test_parse_serialize_round_trip() -> None:
    H = parse_array(H35_FILE)
    assert H.cells == ((6, 7, -10, -4, 1), (-9, 5, 2, -11, 13), (3, -12, 8, 15, -14))
    assert serialize_array(H) == H35_FILE
    assert parse_array(serialize_array(H)) == H


def test_parse_accepts_trailing_comments() -> None:
    assert parse_array(H35_FILE + "# published example\n\n").modulus == 31


def test_parse_rejects_malformed_inputs() -> None:
    cases = {
        "": "empty",
        "heffter 3 5\n": "header",
        "heffter 3 5 32\n": "modulus",
        "steiner 3 5 31\n": "header",
        "heffter 2 5 21\n": "m, n >=",
    }
    for text, hint in cases.items():
        with pytest.raises(ArrayFormatError):
            parse_array(text)


def test_parse_rejects_bad_entries_with_positions() -> None:
    zero = H35_FILE.replace("6 7 -10 -4 1", "0 7 -10 -4 1")
    with pytest.raises(ArrayFormatError) as err:
        parse_array(zero)
    assert err.value.line == 2 and err.value.column == 1

    out_of_range = H35_FILE.replace("-11", "-19")
    with pytest.raises(ArrayFormatError) as err:
        parse_array(out_of_range)
    assert err.value.line == 3 and err.value.column == 4

    duplicate = H35_FILE.replace("-12", "7")  # |7| already at line 2, column 2
    with pytest.raises(ArrayFormatError) as err:
        parse_array(duplicate)
    assert err.value.line == 4 and err.value.column == 2
    assert "line 2, column 2" in str(err.value)

    short_row = H35_FILE.replace("-9 5 2 -11 13", "-9 5 2 -11")
    with pytest.raises(ArrayFormatError) as err:
        parse_array(short_row)
    assert err.value.line == 3


def test_cli_genus_prints_published_value(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["genus", "--n", "5"]) == 0
    assert capsys.readouterr().out.strip() == "94"


def test_cli_gen3_verify_pipeline(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["gen3", "--n", "8"]) == 0
    array_text = capsys.readouterr().out
    path = tmp_path / "h38.txt"
    path.write_text(array_text, encoding="ascii")

    assert main(["verify", "--file", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["is_heffter"] and doc["is_simple"]
    assert doc["row_partial_sums"][0] == [36, 25, 17, 16, 26, 32, 35, 0]
    assert doc["row_partial_sums"][1] == [4, 46, 30, 10, 15, 32, 2, 0]
    assert doc["row_partial_sums"][2] == [9, 27, 2, 23, 8, 34, 12, 0]


def test_cli_verify_flags_non_simple_array(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "raw38.txt"
    path.write_text(serialize_array(construct_raw_h3(8)), encoding="ascii")
    assert main(["verify", "--file", str(path)]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["is_heffter"] and not doc["is_simple"]
    assert doc["row_simple"] == [False, True, True]


def test_cli_reorder_applies_published_permutation(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    path = tmp_path / "raw38.txt"
    path.write_text(serialize_array(construct_raw_h3(8)), encoding="ascii")
    assert main(["reorder", "--file", str(path), "--perm", "1,2,6,8,5,3,4,7"]) == 0
    out = capsys.readouterr().out
    assert parse_array(out) == simple_h3(8)


def test_cli_reorder_rejects_bad_permutation(tmp_path: Path, capsys) -> None:
    path = tmp_path / "raw38.txt"
    path.write_text(serialize_array(construct_raw_h3(8)), encoding="ascii")
    assert main(["reorder", "--file", str(path), "--perm", "1,1,2,3,4,5,6,7"]) == 2


def test_cli_orderings_reports_single_cycle(tmp_path: Path, capsys) -> None:
    path = tmp_path / "h35.txt"
    path.write_text(H35_FILE, encoding="ascii")
    assert main(["orderings", "--file", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["single_cycle"] and doc["orbit_length"] == 15
    assert doc["composition_cycle"][:4] == [[1, 1], [2, 2], [3, 3], [2, 4]]


def test_cli_develop_rows_and_cols(tmp_path: Path, capsys) -> None:
    path = tmp_path / "h35.txt"
    path.write_text(H35_FILE, encoding="ascii")
    assert main(["develop", "--file", str(path), "--cols"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["k"] == 3 and doc["cycle_count"] == 155
    assert doc["pair_coverage_ok"] and doc["translation_closed"]

    assert main(["develop", "--file", str(path), "--rows", "--expand"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["k"] == 5 and doc["cycle_count"] == 93
    assert len(doc["cycles"]) == 93


def test_cli_embed_certifies_and_reports_genus(tmp_path: Path, capsys) -> None:
    for n, genus in ((3, 20), (5, 94)):
        path = tmp_path / f"h3{n}.txt"
        path.write_text(serialize_array(simple_h3(n)), encoding="ascii")
        assert main(["embed", "--file", str(path)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["genus"] == genus
        assert all(doc["checks"].values())


def test_cli_search_found_and_none(tmp_path: Path, capsys) -> None:
    path = tmp_path / "raw38.txt"
    path.write_text(serialize_array(construct_raw_h3(8)), encoding="ascii")
    assert main(["search", "--file", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "found"
    assert doc["reordered_is_simple"]

    assert main(["search", "--file", str(path), "--budget", "2"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "budget_exceeded"


def test_cli_generate_emits_parseable_array(capsys) -> None:
    assert main(["generate", "--m", "5", "--n", "4", "--seed", "3"]) == 0
    H = parse_array(capsys.readouterr().out)
    assert (H.m, H.n, H.modulus) == (5, 4, 41)


def test_cli_missing_file_is_usage_error(capsys) -> None:
    assert main(["verify", "--file", "/nonexistent/path.txt"]) == 2


def test_cli_malformed_file_is_usage_error(tmp_path: Path, capsys) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("heffter 3 5 31\n1 2 3\n", encoding="ascii")
    assert main(["verify", "--file", str(path)]) == 2


def test_cli_unknown_subcommand_exits_2() -> None:
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_embed_rejects_even_by_even(tmp_path: Path, capsys) -> None:
    # A 4 x 4 array admits no ordering construction: check failure exit code.
    from heffter.search import SearchConfig, generate_heffter

    H = generate_heffter(4, 4, SearchConfig(node_budget=2_000_000))
    assert H is not None
    path = tmp_path / "h44.txt"
    path.write_text(serialize_array(H), encoding="ascii")
    assert main(["embed", "--file", str(path)]) == 1
