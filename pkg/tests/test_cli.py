import csv
import io
import json
from fractions import Fraction

from hypothesis import given, strategies as st

from ctverify.cli import ROW_FIELDS, format_exact, main, main_entry, parse_exact
from ctverify.gammaprod import PiPower

import pytest


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_format_parse_round_trip_examples():
    assert parse_exact(format_exact(776160)) == 776160
    assert parse_exact(format_exact(Fraction(3, 4))) == Fraction(3, 4)
    assert parse_exact(format_exact(Fraction(8, 2))) == 4
    assert parse_exact(format_exact(PiPower(Fraction(3, 4), 1))) == PiPower(Fraction(3, 4), 1)
    assert parse_exact(format_exact(PiPower(Fraction(-5, 2), -3))) == PiPower(
        Fraction(-5, 2), -3
    )


@given(st.integers())
def test_round_trip_integers(n):
    assert parse_exact(format_exact(n)) == n


@given(st.fractions())
def test_round_trip_fractions(q):
    assert parse_exact(format_exact(q)) == q


def test_parse_rejects_malformed_pi_power():
    with pytest.raises(ValueError):
        parse_exact("3*pi^(1/3)")


def test_verify_cry_exit_zero(capsys):
    code, out = run_cli(capsys, ["verify-cry", "--n-max", "4"])
    assert code == 0
    assert "4 rows, 0 mismatches" in out


def test_json_rows_have_canonical_key_order(capsys):
    code, out = run_cli(capsys, ["verify-cry", "--n", "3", "--output", "json"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1
    assert list(rows[0]) == ROW_FIELDS
    assert rows[0]["lhs"] == "10"
    assert parse_exact(rows[0]["rhs"]) == 10
    assert rows[0]["match"] is True
    assert rows[0]["elapsed_ms"] is None


def test_csv_output_shape(capsys):
    code, out = run_cli(capsys, ["ratio-table", "--n-max", "3", "--output", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ROW_FIELDS
    assert len(rows) == 4
    assert rows[1][ROW_FIELDS.index("match")] == "true"
    assert rows[1][ROW_FIELDS.index("k")] == ""


def test_timing_flag_fills_elapsed(capsys):
    code, out = run_cli(capsys, ["verify-cry", "--n", "2", "--output", "json", "--timing"])
    assert code == 0
    (row,) = json.loads(out)
    assert isinstance(row["elapsed_ms"], int) and row["elapsed_ms"] >= 0


def test_report_file_matches_stdout(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(
        capsys, ["verify-cry", "--n-max", "3", "--output", "json", "--report", str(path)]
    )
    assert code == 0
    assert path.read_text() == out


def test_report_with_text_output_is_structured(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(capsys, ["verify-cry", "--n", "2", "--report", str(path)])
    assert code == 0
    assert "rows" in out  # human table on stdout
    assert json.loads(path.read_text())[0]["identity"] == "cry"


def test_threads_do_not_change_output(capsys):
    _, out1 = run_cli(
        capsys, ["verify-cry", "--n-max", "5", "--output", "json", "--threads", "1"]
    )
    _, out8 = run_cli(
        capsys, ["verify-cry", "--n-max", "5", "--output", "json", "--threads", "8"]
    )
    assert out1 == out8


def test_conjecture2_rows(capsys):
    code, out = run_cli(capsys, ["verify-conjecture2", "--n", "2", "--output", "json"])
    assert code == 0
    rows = json.loads(out)
    assert [r["identity"] for r in rows] == [
        "conjecture2-term",
        "conjecture2-term",
        "conjecture2-term",
        "conjecture2-sum",
    ]
    assert [r["lhs"] for r in rows] == ["0", "1", "1", "2"]
    assert rows[3]["match"] is True


def test_duplication_table_half_integer_max(capsys):
    code, out = run_cli(capsys, ["duplication-table", "--z-max", "3/2", "--output", "json"])
    assert code == 0
    rows = json.loads(out)
    assert [r["z"] for r in rows] == ["1/2", "1", "3/2"]
    assert all(r["match"] for r in rows)
    assert parse_exact(rows[0]["lhs"]) == PiPower(Fraction(1), 1)


def test_ct_eval_reproduces_known_value(capsys):
    code, out = run_cli(
        capsys,
        [
            "ct-eval",
            "--target", "0,1,3",
            "--factor", "1,1,1:2",
            "--factor", "0,1,1:2",
            "--factor", "0,0,1:2",
            "--factor", "1,0,0:1",
            "--factor", "1,1,0:1",
            "--factor", "0,1,0:1",
            "--oracle",
            "--output", "json",
        ],
    )
    assert code == 0
    (row,) = json.loads(out)
    assert row["lhs"] == "10"
    assert row["method"] == "both"


def test_mismatch_sets_exit_one(capsys, monkeypatch):
    import ctverify.identities as ident

    monkeypatch.setattr(ident, "catalan_product", lambda n: 999)
    code, out = run_cli(capsys, ["verify-cry", "--n", "2"])
    assert code == 1
    assert "NO" in out and "1 mismatches" in out


def test_oracle_disagreement_sets_exit_three(capsys, monkeypatch):
    import ctverify.identities as ident

    monkeypatch.setattr(ident, "diophantine_coefficient", lambda p: -7)
    code = main(["verify-cry", "--n", "2", "--oracle"])
    capsys.readouterr()
    assert code == 3


def test_usage_errors_set_exit_two(capsys):
    assert main(["verify-cry"]) == 2  # no n selection
    assert main(["verify-cry", "--n", "2", "--n-max", "4"]) == 2  # both selections
    assert main(["verify-cry", "--n-min", "5", "--n-max", "3"]) == 2  # empty range
    assert main(["verify-morris", "--n", "1"]) == 2  # missing required params
    assert main(["duplication-table", "--z-max", "1/3"]) == 2
    assert main(["ct-eval", "--target", "0,0", "--factor", "nonsense"]) == 2
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_bad_params_set_exit_two(capsys):
    code = main(["verify-morris", "--n", "1", "--a", "0", "--b", "0", "--m", "1"])
    capsys.readouterr()
    assert code == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_main_entry_raises_system_exit(capsys, monkeypatch):
    monkeypatch.setattr("sys.argv", ["ctverify", "verify-cry", "--n", "1"])
    with pytest.raises(SystemExit) as exc:
        main_entry()
    capsys.readouterr()
    assert exc.value.code == 0
