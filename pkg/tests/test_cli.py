import io
import json
from contextlib import redirect_stderr, redirect_stdout

from volbounds.cli import run
from volbounds.maps import load_map, maps_isomorphic, medial, pyramid, validate_map


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class TestLob:
    def test_pi_over_four(self):
        code, out, _ = invoke(["lob", "--theta", "0.7853981633974483"])
        assert code == 0
        assert out.strip() == "0.457983"

    def test_constants(self):
        code, out, _ = invoke(["constants"])
        assert code == 0
        assert "v_tet: 1.014942" in out
        assert "v_oct: 3.663862" in out


class TestPolyFamily:
    def test_prism_nine_bounds(self):
        code, out, _ = invoke(["poly", "family", "--name", "prism", "--n", "9", "--bounds"])
        assert code == 0
        # the all-trivalent refinement beats the prism bound from n = 8 on
        assert "triangle-trivalent" in out and "prism-atkinson" in out
        rows = {line.split()[0]: line.split() for line in out.splitlines() if "upper" in line}
        assert float(rows["triangle-trivalent"][2]) < float(rows["prism-atkinson"][2])

    def test_unknown_family(self):
        code, _, err = invoke(["poly", "family", "--name", "dodecahedron", "--n", "5", "--bounds"])
        assert code == 2
        assert "unknown family" in err

    def test_missing_n(self):
        code, _, err = invoke(["poly", "family", "--name", "prism", "--bounds"])
        assert code == 2

    def test_json_format(self):
        code, out, _ = invoke(
            ["--format", "json", "poly", "family", "--name", "cube", "--bounds"]
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["census"]["V"] == 8
        assert any(r["name"] == "edge-bound" for r in doc["bounds"])
        for row in doc["bounds"]:
            if row["applicable"]:
                assert len(row["value"].split(".")[1]) == 6


class TestPolyFiles:
    def test_medial_round_trip(self, tmp_path):
        src = tmp_path / "pyr4.json"
        med_path = tmp_path / "medial.json"
        code, _, _ = invoke(["poly", "family", "--name", "pyramid", "--n", "4", "--out", str(src)])
        assert code == 0
        code, out, _ = invoke(["poly", "medial", "--file", str(src), "--out", str(med_path)])
        assert code == 0
        reloaded = load_map(med_path)
        assert validate_map(reloaded) == validate_map(medial(pyramid(4)))
        assert maps_isomorphic(reloaded, medial(pyramid(4)))

    def test_dual_writes_file(self, tmp_path):
        src = tmp_path / "cube.json"
        dual_path = tmp_path / "dual.json"
        invoke(["poly", "family", "--name", "cube", "--out", str(src)])
        code, out, _ = invoke(["poly", "dual", "--file", str(src), "--out", str(dual_path)])
        assert code == 0
        census = validate_map(load_map(dual_path))
        assert (census.V, census.E, census.F) == (6, 12, 8)

    def test_bad_file(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"darts": 2, "alpha": [0, 1], "sigma": [0, 1]}')
        code, _, err = invoke(["poly", "graph", "--file", str(bad)])
        assert code == 2
        assert "fixed-dart" in err


class TestLinkTwoBridge:
    def test_worked_example_table(self):
        code, out, _ = invoke(["link", "two-bridge", "--fraction", "55/17"])
        assert code == 0
        assert "continued fraction [3, 4, 4]" in out
        assert "t=3" in out and "c=11" in out
        adams_row = next(line for line in out.splitlines() if line.strip().startswith("adams-twist"))
        assert "16.042742" in adams_row

    def test_deterministic_output(self):
        first = invoke(["link", "two-bridge", "--fraction", "55/17"])
        second = invoke(["link", "two-bridge", "--fraction", "55/17"])
        assert first == second

    def test_json_document(self):
        code, out, _ = invoke(["--format", "json", "link", "two-bridge", "--fraction", "55/17", "--jones", "1,2"])
        assert code == 0
        doc = json.loads(out)
        assert doc["twists"]["t"] == 3 and doc["twists"]["c"] == 11
        assert doc["white_census"] == {"3": 2, "4": 3}
        by_name = {r["name"]: r for r in doc["bounds"]}
        assert by_name["jones-lower"]["value"] == "7.327725"
        assert by_name["two-bridge-upper"]["best"] is True
        assert doc["warnings"] == []

    def test_torus_link_warning(self):
        code, out, _ = invoke(["link", "two-bridge", "--fraction", "7/6"])
        assert code == 0
        assert "torus link" in out

    def test_figure_eight_flagging(self):
        code, out, _ = invoke(["--format", "json", "link", "two-bridge", "--fraction", "5/2"])
        doc = json.loads(out)
        by_name = {r["name"]: r for r in doc["bounds"]}
        assert not by_name["adams-crossing"]["applicable"]

    def test_invalid_fraction(self):
        for bad in ("55", "4/2", "17/55", "x/y"):
            code, _, err = invoke(["link", "two-bridge", "--fraction", bad])
            assert code == 2, bad

    def test_bound_selector(self):
        code, out, _ = invoke(["link", "two-bridge", "--fraction", "55/17", "--bound", "agol-thurston"])
        assert code == 0
        assert out.strip() == "20.298832"


class TestLinkTwists:
    def test_not_applicable_exit_code(self):
        code, _, err = invoke(["link", "twists", "--lengths", "3,4,4", "--bound", "adams-twist"])
        assert code == 3
        assert "not applicable" in err

    def test_flags_enable(self):
        code, out, _ = invoke(
            [
                "link", "twists", "--lengths", "3,4,4",
                "--reduced", "--alternating", "--not-borromean",
                "--bound", "adams-twist",
            ]
        )
        assert code == 0
        assert out.strip() == "16.042742"

    def test_unknown_bound_name(self):
        code, _, err = invoke(["link", "twists", "--lengths", "3,4,4", "--bound", "nosuch"])
        assert code == 2

    def test_zero_length_rejected(self):
        code, _, err = invoke(["link", "twists", "--lengths", "3,0,4"])
        assert code == 2


class TestLinkAugment:
    def test_two_bridge_augment(self, tmp_path):
        out_file = tmp_path / "aug.json"
        code, out, _ = invoke(
            ["--format", "json", "link", "augment", "--fraction", "55/17", "--out", str(out_file)]
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["census"]["V"] == 9
        assert doc["white_census"] == {"3": 2, "4": 3}
        saved = json.loads(out_file.read_text())
        assert saved["white_census"] == {"3": 2, "4": 3}

    def test_diagram_file_input(self, tmp_path):
        diagram_path = tmp_path / "diagram.json"
        code, _, _ = invoke(
            ["link", "augment", "--fraction", "13/5", "--out-diagram", str(diagram_path)]
        )
        assert code == 0
        code, out, _ = invoke(["--format", "json", "link", "augment", "--file", str(diagram_path)])
        assert code == 0
        doc = json.loads(out)
        assert doc["census"]["V"] == 12  # 13/5 = [2,1,1,2] has t=4 twists

    def test_usage_error(self):
        code, _, _ = invoke(["link", "augment"])
        assert code == 2


def test_unknown_subcommand():
    code, _, _ = invoke(["frobnicate"])
    assert code == 2
