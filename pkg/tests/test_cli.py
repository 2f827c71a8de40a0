import io
import json
from pathlib import Path

import pytest

from zwcodes.cli import main, parse_vector
from zwcodes.residue_field import build_field
from zwcodes.zw_ring import ZwInt

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


GOLDEN_CASES = [
    ("field_table_p29_pinned.txt", ["field-table", "--pi", "-1,4", "--pins", "published"], 0),
    ("field_table_p29.jsonl", ["field-table", "--p", "29", "--format", "json"], 0),
    ("decode_p71_single_row.txt",
     ["decode", "--pi", "7,2", "--alpha", "2,-2", "--rows", "1", "--vector", "w,1,w-1,1,1,0,0,0,1,1"], 0),
    ("decode_p29_two_rows.txt", ["decode", "--pi", "-1,4", "--rows", "2", "--vector", "a^1,a^2,1,a^3"], 0),
    ("decode_p29_three_rows_location.txt",
     ["decode", "--pi", "-1,4", "--rows", "3", "--vector", "1,a^3,1,a^2"], 1),
    ("decode_p29_four_rows.txt",
     ["decode", "--pi", "-1,4", "--rows", "4", "--vector", "(-2,-1),(0,0),(1,0),(0,0)"], 0),
    ("make_code_p29_rows2.txt", ["make-code", "--pi", "-1,4", "--rows", "2"], 0),
    ("simulate_p29.json",
     ["simulate", "--pi", "-1,4", "--rows", "2", "--dist", "1=1.0", "--trials", "1000",
      "--seed", "7", "--format", "json"], 0),
]


@pytest.mark.parametrize("name,argv,status", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv, status):
    code, text = run(*argv)
    assert code == status
    assert text == (GOLDEN / name).read_text()


def test_field_table_p29_json_matches_find_prime():
    code, text = run("field-table", "--p", "29", "--format", "json")
    lines = [json.loads(x) for x in text.splitlines()]
    assert code == 0
    assert lines[0]["pi"] == {"a": -1, "b": 4}
    assert len(lines) == 30


def test_field_table_csv():
    code, text = run("field-table", "--pi", "7,2", "--format", "csv")
    rows = text.splitlines()
    assert code == 0 and rows[0] == "k,a,b,norm,weight,pinned" and len(rows) == 72


@pytest.mark.parametrize("argv", [
    ["field-table", "--p", "30"],
    ["field-table", "--pi", "2,1"],
    ["field-table"],
    ["field-table", "--pi", "-1,4", "--p", "29"],
    ["field-table", "--pi", "7,2", "--pins", "published"],
    ["decode", "--pi", "-1,4", "--rows", "2", "--vector", "1,2,3"],
    ["decode", "--pi", "-1,4", "--rows", "2", "--vector", "1,2,x,4"],
    ["decode", "--pi", "-1,4", "--rows", "2"],
    ["decode", "--pi", "-1,4", "--rows", "2", "--alpha-target", "+w", "--vector", "0,0,0,0"],
    ["make-code", "--pi", "7,2", "--alpha", "2,-2", "--rows", "2"],
    ["simulate", "--pi", "-1,4", "--rows", "2", "--trials", "0"],
    ["simulate", "--pi", "-1,4", "--rows", "2", "--dist", "1=0.4"],
    ["simulate", "--pi", "-1,4", "--rows", "2", "--seed", "-1"],
    ["rate-compare", "--p", "30", "--k", "1"],
    ["rate-compare", "--p", "29"],
    ["encode", "--pi", "-1,4", "--rows", "2", "--message", "1,2,3"],
    ["bogus"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_field_table_p30_message(capsys):
    code, _ = run("field-table", "--p", "30")
    assert code == 2
    assert "not a prime = 1 mod 7" in capsys.readouterr().err


def test_decode_exit_codes():
    assert run("decode", "--pi", "-1,4", "--rows", "3", "--vector", "a^1,a^2,1,a^3")[0] == 1
    assert run("decode", "--pi", "-1,4", "--rows", "4", "--vector", "1,a^3,1,a^2")[0] == 1
    assert run("decode", "--pi", "-1,4", "--rows", "3", "--vector", "5,0,0,0")[0] == 0
    assert run("decode", "--pi", "-1,4", "--rows", "2", "--vector", "0,0,0,0")[0] == 0


def test_decode_json_schema():
    code, text = run("decode", "--pi", "7,2", "--alpha", "2,-2", "--rows", "1",
                     "--vector", "w,1,w-1,1,1,0,0,0,1,1", "--format", "json")
    out = json.loads(text)
    assert code == 0
    assert out["verdict"] == "Corrected"
    assert out["errors"] == [{"pos": 4, "value_label": 32, "value_a": 0, "value_b": 1}]
    assert out["corrected"][4] == 40 and out["reason"] is None


def test_decode_three_rows_location_reason():
    code, text = run("decode", "--pi", "-1,4", "--rows", "3", "--vector", "1,a^3,1,a^2",
                     "--format", "json")
    assert code == 1
    assert json.loads(text)["reason"] == "location checks disagree"


def test_encode_roundtrip():
    code, text = run("encode", "--pi", "-1,4", "--rows", "2", "--message", "3,w", "--format", "json")
    word = json.loads(text)["codeword"]
    assert code == 0
    vec = ",".join(map(str, word))
    code, text = run("decode", "--pi", "-1,4", "--rows", "2", "--vector", vec, "--format", "json")
    assert code == 0 and json.loads(text)["verdict"] == "NoError"


def test_simulate_deterministic_and_formats():
    argv = ["simulate", "--pi", "-1,4", "--rows", "2", "--dist", "1=1.0", "--trials", "1000",
            "--seed", "7"]
    a, b = run(*argv, "--format", "json"), run(*argv, "--format", "json", "--workers", "4")
    assert a == b
    assert json.loads(a[1])["corrected_ok"] == 1000
    code, text = run(*argv, "--format", "csv")
    assert text.splitlines()[1] == "1000,0,1000,0,0,0,7,29,2"
    code, text = run(*argv)
    assert "corrected_ok: 1000" in text


def test_rate_compare():
    code, text = run("rate-compare", "--p", "29", "--k", "2", "--format", "json")
    assert code == 0
    assert json.loads(text) == {"p": 29, "k": 2, "r_octonion": "1/2",
                                "r_hurwitz_subring": "3/7", "ratio": "7/6"}
    code, text = run("rate-compare", "--p", "71", "--k", "6", "--format", "csv")
    assert text.splitlines()[1] == "71,6,3/5,18/35,7/6"


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# p29 two-row code\npi = -1,4\nrows = 2\nformat = json\n")
    code, text = run("decode", "--config", str(cfg), "--vector", "a^1,a^2,1,a^3")
    assert code == 0 and json.loads(text)["errors"][0]["pos"] == 0
    # command-line flags win over the file
    code, text = run("decode", "--config", str(cfg), "--format", "text", "--vector", "0,0,0,0")
    assert "NoError" in text
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert run("decode", "--config", str(bad), "--vector", "0")[0] == 2


def test_parse_vector_notations():
    f = build_field(ZwInt(-1, 4))
    assert parse_vector("5,0,1,0", f) == [5, 0, 1, 0]
    assert parse_vector("(-2,-1),(0,0),(1,0),(0,0)", f) == [5, 0, 1, 0]
    assert parse_vector("-2-w,0,1,-1", f) == [5, 0, 1, 28]
    assert parse_vector("w,-w,2+2w,w-2", f) == [22, 7, 17, 20]
    assert parse_vector("a^0,a^4,alpha^7", f, 8) == [1, 7, 17]


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "zwcodes", "rate-compare", "--p", "29", "--k", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "7/6" in res.stdout
