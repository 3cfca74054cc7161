import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from archimedes_sqrt.cli import main
from archimedes_sqrt.rational import parse_fraction
from archimedes_sqrt.tables import emit_table

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("which", [1, 2, 3, 4])
def test_tables_match_golden(which):
    expected = (GOLDEN / f"table{which}.txt").read_text(encoding="utf-8")
    assert emit_table(which) == expected
    code, out = run(f"table{which}")
    assert code == 0 and out == expected


def test_table2_last_row():
    assert emit_table(2).splitlines()[-1] == "1351² − 3×780² = 1, 1351/780 ∼ 1.732051"


def test_table4_last_row():
    lines = emit_table(4).splitlines()
    assert len(lines) == 7
    assert lines[-1] == "(591 1/8)² = 349428 49/64"


def test_table1_increments():
    lines = emit_table(1).splitlines()
    incs = [line.split() for line in lines if line.startswith("+")]
    assert [i[0] for i in incs] == ["+241", "+243", "+245", "+247"]
    assert [i[1] for i in incs] == ["+723", "+729", "+735", "+741"]


def test_dyadic_sqrt_command():
    assert run("dyadic-sqrt", "349450", "--depth", "3", "--side", "lower") == (0, "591 1/8\n")
    assert run("dyadic-sqrt", "349450", "--depth", "2", "--side", "upper") == (0, "591 1/4\n")
    code, out = run("dyadic-sqrt", "349450", "--trace")
    assert out.splitlines()[-1] == "591 1/8"


def test_pi_jsonl_final_record():
    code, out = run("pi", "--policy", "archimedes", "--format", "jsonl")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1]["lower"] == "25344/8069"
    assert records[-1]["upper"] == "29376/9347"
    chains = {r["trace"] for r in records[:-1]}
    assert chains == {"circumscribed", "inscribed"}


def test_pi_override_beta_what_if():
    code, out = run("pi", "--override", "3=1009 1/4", "--override", "inscribed:4=2017 1/3",
                    "--format", "jsonl")
    assert code == 0
    lower = parse_fraction(json.loads(out.splitlines()[-1])["lower"])
    assert lower == Fraction(96 * 66) / (2017 + Fraction(1, 3))
    assert lower > 3 + Fraction(9, 64)


def test_pi_text_and_csv():
    code, out = run("pi")
    assert code == 0 and out.splitlines()[-1] == "3.140909 < π < 3.142826"
    code, out = run("pi", "--policy", "dyadic:5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["chain"] for r in rows} == {"circumscribed", "inscribed"}


@pytest.mark.parametrize("argv, code", [
    (("verify", "223/71", "--side", "lower"), 0),
    (("verify", "22/7", "--side", "upper"), 0),
    (("verify", "63/20", "--side", "lower"), 3),
    (("theorem1", "5/3"), 0),
    (("sqrt-enclose", "3", "2", "1"), 2),
    (("brute-table", "4", "10"), 2),
    (("cf", "9", "3"), 2),
    (("pi", "--override", "3=1009"), 2),
    (("hero", "0", "3"), 2),
    (("frobnicate",), 1),
    (("dyadic-sqrt", "1/0"), 1),
    (("sqrt-enclose", "3", "x", "2"), 1),
    (("pi", "--policy", "dyadic:x"), 1),
    (("pi", "--override", "nonsense"), 1),
    (("verify", "3"), 1),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code
    if code in (1, 2):
        err = capsys.readouterr().err.strip()
        assert err and "\n" not in err


def test_usage_error_names_argument(capsys):
    run("sqrt-enclose", "3", "x", "2")
    assert "LO" in capsys.readouterr().err


def test_sqrt_enclose_formats():
    code, out = run("sqrt-enclose", "3", "1", "2", "--steps", "16")
    assert out == (GOLDEN / "table3.txt").read_text(encoding="utf-8")
    code, out = run("sqrt-enclose", "5", "2", "3", "--width", "1/100", "--format", "jsonl")
    last = json.loads(out.splitlines()[-1])
    assert {"step", "lo", "hi", "mediant", "residual"} <= set(last)
    width = parse_fraction(last["hi"]) - parse_fraction(last["lo"])
    assert width <= Fraction(1, 100)


def _fraction_fields(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return True
    return isinstance(value, str) and value and value.lstrip("-")[0].isdigit() and \
        "." not in value and " " not in value


@pytest.mark.parametrize("argv", [
    ("table3",), ("table4",), ("pi",), ("heath-mixed",), ("hero", "1", "3", "--steps", "4"),
    ("cf", "3", "12"), ("pell2", "8"), ("squares", "118", "124"), ("brute-table", "3", "780"),
    ("theorem1", "7/4"), ("dyadic-sqrt", "9082321", "--side", "upper"),
])
def test_machine_formats_round_trip(argv):
    _, out = run(*argv, "--format", "jsonl")
    n_checked = 0
    for line in out.splitlines():
        for value in json.loads(line).values():
            if _fraction_fields(value):
                parse_fraction(str(value))
                n_checked += 1
    assert n_checked > 0
    _, out = run(*argv, "--format", "csv")
    for row in csv.DictReader(io.StringIO(out)):
        for value in row.values():
            if _fraction_fields(value):
                parse_fraction(value)


def test_csv_values_equal_jsonl_values():
    _, js = run("table3", "--format", "jsonl")
    _, cs = run("table3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    for row, line in zip(rows, js.splitlines()):
        rec = json.loads(line)
        assert parse_fraction(row["lo"]) == parse_fraction(rec["lo"])
        assert parse_fraction(row["hi"]) == parse_fraction(rec["hi"])


@pytest.mark.parametrize("argv", [("table2",), ("pi", "--format", "jsonl"), ("cf", "7", "9")])
def test_deterministic(argv):
    assert run(*argv) == run(*argv)


def test_module_entry_point_utf8():
    proc = subprocess.run([sys.executable, "-m", "archimedes_sqrt", "table4"],
                          capture_output=True, check=True, env={"PYTHONIOENCODING": "utf-8",
                                                                "PATH": ""})
    assert proc.stdout.decode("utf-8") == (GOLDEN / "table4.txt").read_text(encoding="utf-8")
    assert b"\r\n" not in proc.stdout
