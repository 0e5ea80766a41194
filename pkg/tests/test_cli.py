"""CLI behavior: exit codes, report shapes, determinism, SVG output."""

import io
import json
import subprocess
import sys

import pytest
from jsonschema import Draft202012Validator

from convexsplit.cli import main
from convexsplit.exactgeom import point_seq
from convexsplit.ordertype import is_order_type_homogeneous, tuple_sign

ZIGZAG_CSV = "0,0\n1,1\n2,0\n3,1\n"
MOMENT3_CSV = "".join(f"{i}/9,{i*i}/81,{i**3}/729\n" for i in range(1, 9))

PAIRS_TABLE = {
    "k": 1,
    "elements": ["a1", "a2", "a3", "a4"],
    "signs": [
        {"subset": ["a1", "a2"], "sign": 1},
        {"subset": ["a1", "a3"], "sign": -1},
        {"subset": ["a1", "a4"], "sign": -1},
        {"subset": ["a2", "a3"], "sign": -1},
        {"subset": ["a2", "a4"], "sign": -1},
        {"subset": ["a3", "a4"], "sign": 1},
    ],
}

NON_FLIP_TABLE = {
    "k": 1,
    "elements": ["a1", "a2", "a3", "a4"],
    "signs": [
        {"subset": ["a1", "a2"], "sign": -1},
        {"subset": ["a1", "a3"], "sign": 1},
        {"subset": ["a1", "a4"], "sign": -1},
        {"subset": ["a2", "a3"], "sign": 1},
        {"subset": ["a2", "a4"], "sign": 1},
        {"subset": ["a3", "a4"], "sign": 1},
    ],
}


@pytest.fixture(scope="module")
def validator():
    with open("docs/report-schema.json", encoding="utf-8") as fh:
        schema = json.load(fh)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


@pytest.fixture()
def run(capsys, validator):
    def runner(argv, expect_report=True):
        code = main(argv)
        out = capsys.readouterr().out
        if not expect_report:
            assert out == ""
            return code, None
        report = json.loads(out)
        validator.validate(report)
        return code, report

    return runner


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestParsing:
    def test_missing_command(self, run):
        code, _ = run([], expect_report=False)
        assert code == 2

    def test_unknown_flag(self, run):
        code, _ = run(["homog", "--frob", "1"], expect_report=False)
        assert code == 2

    def test_missing_input(self, run):
        code, _ = run(["homog"], expect_report=False)
        assert code == 2

    def test_dim_mismatch(self, run, tmp_path):
        path = write(tmp_path, "p.csv", ZIGZAG_CSV)
        code, _ = run(["homog", "--input", path, "--dim", "3"],
                      expect_report=False)
        assert code == 2

    def test_inconsistent_widths(self, run, tmp_path):
        path = write(tmp_path, "p.csv", "0,0\n1,2,3\n")
        code, _ = run(["verify-gp", "--input", path], expect_report=False)
        assert code == 2

    def test_bad_rational(self, run, tmp_path):
        path = write(tmp_path, "p.csv", "0,zero\n1,1\n")
        code, _ = run(["verify-gp", "--input", path], expect_report=False)
        assert code == 2

    def test_stdin_input(self, run, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(ZIGZAG_CSV))
        code, report = run(["homog", "--input", "-"])
        assert code == 0
        assert report["result"]["n"] == 4

    def test_csv_and_json_inputs_agree(self, run, tmp_path):
        csv = write(tmp_path, "p.csv", "# a comment\n" + ZIGZAG_CSV)
        obj = {"dim": 2, "points": [["0", "0"], ["1", "1"],
                                    ["2", "0"], ["3", "1"]]}
        js = write(tmp_path, "p.json", json.dumps(obj))
        _, from_csv = run(["homog", "--input", csv])
        _, from_json = run(["homog", "--input", js])
        assert from_csv["result"] == from_json["result"]


class TestVerifyGp:
    def test_accepts(self, run, tmp_path):
        path = write(tmp_path, "p.csv", ZIGZAG_CSV)
        code, report = run(["verify-gp", "--input", path])
        assert code == 0
        assert report["result"] == {"n": 4, "dim": 2,
                                    "general_position": True}

    def test_rejects_with_witness(self, run, tmp_path):
        path = write(tmp_path, "p.csv", "0,0\n1,1\n2,2\n0,1\n")
        code, report = run(["verify-gp", "--input", path])
        assert code == 3
        assert report["result"]["general_position"] is False
        assert report["result"]["witness"] == [0, 1, 2]


class TestHomog:
    def test_convex_path(self, run, tmp_path):
        path = write(tmp_path, "p.csv", "0,0\n3,1\n4,4\n2,6\n-1,5\n")
        code, report = run(["homog", "--input", path])
        assert code == 0
        assert report["result"]["homogeneous"] is True
        assert report["result"]["sign"] == 1

    def test_zigzag_witnesses_reevaluate(self, run, tmp_path):
        path = write(tmp_path, "p.csv", ZIGZAG_CSV)
        code, report = run(["homog", "--input", path])
        assert code == 0
        a, b = report["result"]["witnesses"]
        assert [a, b] == [[0, 1, 2], [0, 2, 3]]
        seq = point_seq([(0, 0), (1, 1), (2, 0), (3, 1)])
        assert tuple_sign(seq, tuple(a)) != tuple_sign(seq, tuple(b))

    def test_degenerate_input_reports_witness(self, run, tmp_path):
        path = write(tmp_path, "p.csv", "0,0\n1,1\n2,2\n0,1\n")
        code, report = run(["homog", "--input", path])
        assert code == 3
        assert report["error"]["type"] == "general-position"
        assert report["error"]["witness"] == [0, 1, 2]


class TestFlip:
    def test_points_mode(self, run, tmp_path):
        w = "0,0\n1,2\n2,1/4\n3,9/4\n4,1\n5,3\n"
        path = write(tmp_path, "w.csv", w)
        code, report = run(["flip", "--input", path])
        assert code == 0
        assert report["config"]["mode"] == "points"
        assert report["result"]["flip"] is False
        assert report["result"]["witness"]["subset"] == [0, 3]
        assert report["result"]["witness"]["signs"] == [-1, 1, -1, -1]

    def test_points_mode_flip(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        code, report = run(["flip", "--input", path])
        assert code == 0
        assert report["result"] == {"n": 4, "k": 2, "flip": True}

    def test_table_mode(self, run, tmp_path):
        path = write(tmp_path, "t.json", json.dumps(NON_FLIP_TABLE))
        code, report = run(["flip", "--input", path])
        assert code == 0
        assert report["config"]["mode"] == "table"
        assert report["result"]["flip"] is False
        assert report["result"]["witness"]["subset"] == ["a1"]
        assert report["result"]["witness"]["signs"] == [-1, 1, -1]

    def test_table_mode_flip(self, run, tmp_path):
        path = write(tmp_path, "t.json", json.dumps(PAIRS_TABLE))
        code, report = run(["flip", "--input", path])
        assert code == 0
        assert report["result"] == {"n": 4, "k": 1, "flip": True}

    def test_bad_table(self, run, tmp_path):
        path = write(tmp_path, "t.json", '{"signs": []}')
        code, _ = run(["flip", "--input", path], expect_report=False)
        assert code == 2


class TestCrossings:
    def test_zigzag(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        code, report = run(["crossings", "--input", path])
        assert code == 0
        result = report["result"]
        assert result["max_crossings"] == 3
        assert result["witness"] == {"kind": "perturbed", "subset": [0, 2],
                                     "sides": [-1, -1]}
        assert result["witness_crossings"] == 3

    def test_budget(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        code, report = run(["crossings", "--input", path,
                            "--oracle-budget", "3"])
        assert code == 4
        assert report["error"]["type"] == "budget"
        assert report["error"]["n"] == 4


class TestDecompose:
    def test_zigzag(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        code, report = run(["decompose", "--input", path])
        assert code == 0
        result = report["result"]
        assert result["pieces"] == 2
        assert result["blocks"] == [[0, 2], [2, 3]]

    def test_blocks_reevaluate_as_convex(self, run, tmp_path):
        pts = [(0, 4), (1, 6), (2, 9), (3, 7), (4, 4), (5, 7), (6, 0)]
        path = write(tmp_path, "p.csv",
                     "".join(f"{x},{y}\n" for x, y in pts))
        code, report = run(["decompose", "--input", path])
        assert code == 0
        seq = point_seq(pts)
        for lo, hi in report["result"]["blocks"]:
            piece = seq.subsequence(range(lo, hi + 1))
            assert len(piece) <= 2 or is_order_type_homogeneous(piece)

    def test_svg(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        svg = tmp_path / "z.svg"
        code, _ = run(["decompose", "--input", path, "--out-svg", str(svg)])
        assert code == 0
        text = svg.read_text()
        assert text.count("<polyline") == 2
        assert text.count("<circle") == 4

    def test_svg_needs_dim_2(self, run, tmp_path):
        path = write(tmp_path, "m.csv", MOMENT3_CSV)
        svg = tmp_path / "m.svg"
        code, _ = run(["decompose", "--input", path, "--out-svg", str(svg)],
                      expect_report=False)
        assert code == 2
        assert not svg.exists()


class TestSample:
    def test_quintic(self, run):
        code, report = run(["sample", "--curve", "quintic", "--eps", "4/11"])
        assert code == 0
        result = report["result"]
        assert result["n"] == 11
        assert result["dim"] == 2
        assert len(result["params"]) == 11
        assert len(result["points"]) == 11

    def test_flag_and_json_configs_agree(self, run, tmp_path):
        spec = write(tmp_path, "c.json", '{"curve": "quintic"}')
        _, a = run(["sample", "--curve", "quintic", "--eps", "4/11"])
        _, b = run(["sample", "--input", spec, "--eps", "4/11"])
        assert a["result"] == b["result"]

    def test_moment_json_dim_key(self, run, tmp_path):
        spec = write(tmp_path, "c.json", '{"curve": "moment", "d": 3}')
        code, report = run(["sample", "--input", spec, "--eps", "1/4"])
        assert code == 0
        assert report["result"]["dim"] == 3

    def test_deterministic_reports(self, run):
        argv = ["sample", "--curve", "quintic", "--eps", "1/5",
                "--seed", "3"]
        _, a = run(argv)
        _, b = run(argv)
        a.pop("timing")
        b.pop("timing")
        assert a == b

    def test_seed_changes_sample(self, run):
        _, a = run(["sample", "--curve", "quintic", "--eps", "1/5"])
        _, b = run(["sample", "--curve", "quintic", "--eps", "1/5",
                    "--seed", "1"])
        assert a["result"]["params"] != b["result"]["params"]

    def test_missing_eps(self, run):
        code, _ = run(["sample", "--curve", "quintic"], expect_report=False)
        assert code == 2

    def test_nonpositive_eps(self, run):
        code, _ = run(["sample", "--curve", "quintic", "--eps", "0"],
                      expect_report=False)
        assert code == 2

    def test_degenerate_curve_reports_cell(self, run):
        code, report = run(["sample", "--curve", "poly",
                            "--coeffs", '[["0","1"],["0","1"]]',
                            "--eps", "1/2"])
        assert code == 3
        assert report["error"]["type"] == "sampling"
        assert report["error"]["cell"] == 2

    def test_svg_written_for_planar_curves(self, run, tmp_path):
        svg = tmp_path / "q.svg"
        code, _ = run(["sample", "--curve", "quintic", "--eps", "4/11",
                       "--out-svg", str(svg)])
        assert code == 0
        assert svg.read_text().count("<circle") == 11


class TestDecomposeCurve:
    def test_quintic(self, run):
        code, report = run(["decompose-curve", "--curve", "quintic",
                            "--eps", "1/5"])
        assert code == 0
        result = report["result"]
        assert result["pieces"] == 4
        assert result["certified_max_crossings"] == 3
        assert result["intervals"][0][0] == -1
        assert result["intervals"][-1][1] == 1
        assert len(result["intervals"]) == 4
        assert len(result["cuts"]) == 3

    def test_dented_arc_flags(self, run):
        code, report = run(["decompose-curve", "--curve", "dented_arc",
                            "--dents", "3", "--depth", "1/100",
                            "--eps", "1/36"])
        assert code == 0
        assert report["result"]["pieces"] == 7

    def test_certification_respects_budget(self, run):
        code, report = run(["decompose-curve", "--curve", "quintic",
                            "--eps", "1/5", "--oracle-budget", "5"])
        assert code == 0
        assert "certified_max_crossings" not in report["result"]

    def test_bad_curve_params(self, run):
        code, _ = run(["decompose-curve", "--curve", "dented_arc",
                       "--dents", "3", "--depth", "1/2", "--eps", "1/36"],
                      expect_report=False)
        assert code == 2


class TestReduce:
    def test_pairs_table(self, run, tmp_path):
        path = write(tmp_path, "t.json", json.dumps(PAIRS_TABLE))
        code, report = run(["reduce", "--input", path])
        assert code == 0
        result = report["result"]
        assert result["m"] == 3
        assert result["reduced_m"] == 3
        assert result["reduced_n"] <= result["n"]
        assert result["block_sizes"] == [2, 2, 2]
        assert result["reduced"]["k"] == 1

    def test_bad_table(self, run, tmp_path):
        path = write(tmp_path, "t.json", '{"k": 1}')
        code, _ = run(["reduce", "--input", path], expect_report=False)
        assert code == 2


class TestBounds:
    def test_range(self, run):
        code, report = run(["bounds", "--k", "1..4"])
        assert code == 0
        result = report["result"]
        assert result["k"] == [1, 2, 3, 4]
        assert result["c"] == [3, 28, "619/3", "8053/6"]
        assert result["known_bounds"] == {"c1": 3, "c2_le": 22, "M1": 3,
                                          "M2": 4, "M3_le": 22}

    def test_single(self, run):
        code, report = run(["bounds", "--k", "3"])
        assert code == 0
        assert report["result"]["c"] == ["619/3"]

    def test_bad_range(self, run):
        code, _ = run(["bounds", "--k", "4..2"], expect_report=False)
        assert code == 2


class TestRamsey:
    def test_homogeneous_input(self, run, tmp_path):
        path = write(tmp_path, "m.csv", MOMENT3_CSV)
        code, report = run(["ramsey", "--input", path])
        assert code == 0
        result = report["result"]
        assert result["homogeneous_input"] is True
        assert "longest" not in result
        assert [s["k"] for s in result["stages"]] == [2, 1]
        assert result["final"]["length"] == 8

    def test_zigzag_goes_through_longest(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        code, report = run(["ramsey", "--input", path])
        assert code == 0
        result = report["result"]
        assert result["homogeneous_input"] is False
        assert result["longest"] == {"length": 3, "labels": [0, 1, 2]}
        assert result["final"]["labels"] == [0, 1, 2]

    def test_budget_guards_search(self, run, tmp_path):
        path = write(tmp_path, "z.csv", ZIGZAG_CSV)
        code, report = run(["ramsey", "--input", path,
                            "--oracle-budget", "3"])
        assert code == 4
        assert report["error"]["type"] == "budget"


class TestReporting:
    def test_out_json_matches_stdout(self, run, tmp_path):
        out = tmp_path / "r.json"
        code, report = run(["bounds", "--k", "2", "--out-json", str(out)])
        assert code == 0
        assert json.loads(out.read_text()) == report

    def test_threads_env(self, run, monkeypatch):
        monkeypatch.setenv("CONVEXSPLIT_THREADS", "7")
        _, report = run(["bounds", "--k", "1"])
        assert report["config"]["threads"] == 7

    def test_threads_flag_wins(self, run, monkeypatch):
        monkeypatch.setenv("CONVEXSPLIT_THREADS", "7")
        _, report = run(["bounds", "--k", "1", "--threads", "3"])
        assert report["config"]["threads"] == 3

    def test_bad_threads(self, run, monkeypatch):
        code, _ = run(["bounds", "--k", "1", "--threads", "0"],
                      expect_report=False)
        assert code == 2
        monkeypatch.setenv("CONVEXSPLIT_THREADS", "many")
        code, _ = run(["bounds", "--k", "1"], expect_report=False)
        assert code == 2

    def test_keys_are_sorted(self, run, capsys):
        main(["bounds", "--k", "1"])
        out = capsys.readouterr().out
        assert out == json.dumps(json.loads(out), indent=2,
                                 sort_keys=True) + "\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "convexsplit", "bounds", "--k", "1..2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["result"]["c"] == [3, 28]
