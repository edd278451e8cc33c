import json
import pathlib
import subprocess
import sys

import pytest

from autgeom.reports import Report

from conftest import run_cli

# Golden schema: stable report structure and payload keys per subcommand.
GOLDEN = json.loads(
    (pathlib.Path(__file__).parent / "golden" / "cli_schema.json").read_text()
)
GOLDEN_SCHEMA = GOLDEN["payload_keys"]

SMOKE_ARGS = {
    "verify-relations": ["verify-relations"],
    "gpq": ["gpq", "--n", "4", "--p", "1", "--q", "2", "--w", "a1"],
    "inner-gpq": ["inner-gpq", "--p", "1", "--q", "2"],
    "gl-rep": ["gl-rep", "L12"],
    "lk-basis": ["lk-basis", "--k", "3"],
    "sanov": ["sanov"],
    "voronoi": ["voronoi", "--gens", "1,1,0;1,-1,0;1,0,1;1,0,-1"],
    "check-octo": [
        "check-octo", "--u1", "1,1,0", "--u2", "1,-1,0",
        "--v1", "1,0,1", "--v2", "1,0,-1",
    ],
    "nielsen-flat": ["nielsen-flat", "--scale", "1"],
    "lemma-pq": ["lemma-pq", "--tau", "1,0", "--p", "1", "--q", "2"],
    "induce": ["induce", "--d", "3", "--ell", "5/2"],
}


@pytest.mark.parametrize("command", sorted(SMOKE_ARGS))
def test_subcommand_passes_and_matches_schema(command):
    code, report = run_cli(SMOKE_ARGS[command])
    assert code == 0
    assert report.passed
    d = report.to_dict()
    assert sorted(d.keys()) == GOLDEN["report"]
    for check in d["checks"]:
        assert sorted(check.keys()) == GOLDEN["check"]
    assert sorted(d["payload"].keys()) == GOLDEN_SCHEMA[command]
    # JSON round trip preserves the report exactly.
    assert Report.from_dict(json.loads(json.dumps(d))).to_dict() == d


class TestExitCodes:
    def test_verification_failure_is_one(self):
        code, report = run_cli(["verify-relations", "--inject-fault"])
        assert code == 1
        assert not report.passed
        assert any(c.name == "injected-fault" and not c.passed for c in report.checks)

    def test_octo_failure_is_one(self):
        code, report = run_cli(
            ["check-octo", "--u1", "1,0,0", "--u2", "0,1,0",
             "--v1", "1,0,0", "--v2", "0,1,0"]
        )
        assert code == 1
        failed = [c.name for c in report.checks if not c.passed]
        assert failed == ["difference-orthogonality"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["gpq", "--n", "4", "--p", "1", "--q", "2", "--w", "a7"],
            ["gpq", "--n", "4", "--p", "0", "--q", "2", "--w", "a1"],
            ["gpq", "--n", "4", "--p", "1", "--q", "2", "--w", "zz"],
            ["inner-gpq", "--p", "0", "--q", "1"],
            ["gl-rep", "L13"],
            ["gl-rep", "bogus"],
            ["lk-basis", "--k", "1"],
            ["lemma-pq", "--tau", "1,0", "--p", "2", "--q", "2"],
            ["lemma-pq", "--tau", "x", "--p", "1", "--q", "2"],
            ["voronoi", "--gens", "1,0,0;0,1,0"],
            ["nielsen-flat", "--scale", "0"],
            ["induce", "--d", "0", "--ell", "1"],
        ],
    )
    def test_precondition_violations_are_two(self, argv):
        code, report = run_cli(argv)
        assert code == 2
        assert "error" in report.payload

    def test_unknown_subcommand_is_two(self):
        with pytest.raises(SystemExit) as err:
            run_cli(["frobnicate"])
        assert err.value.code == 2


class TestPayloads:
    def test_gl_rep_matrices(self):
        code, report = run_cli(["gl-rep", "L12"])
        assert code == 0
        assert report.payload["mu"] == [[1, 0], [1, 1]]
        assert len(report.payload["ab5"]) == 5

    def test_gl_rep_power(self):
        _, report = run_cli(["gl-rep", "L21", "--power", "4"])
        assert report.payload["mu"] == [[1, 4], [0, 1]]

    def test_lk_basis_words(self):
        _, report = run_cli(["lk-basis", "--k", "3"])
        assert report.payload["words"] == ["a2", "a1 a2 a1^-1", "a1^2"]

    def test_voronoi_fcc_classification(self):
        _, report = run_cli(SMOKE_ARGS["voronoi"])
        cls = report.payload["classification"]
        assert cls["f_vector"] == [14, 24, 12]
        assert cls["is_rhombic_dodecahedron"] is True
        assert set(cls["diag_ratios_sq"]) == {"2"}
        assert report.payload["volume"] == "2"

    def test_nielsen_flat_writes_off(self, tmp_path):
        out = str(tmp_path / "cell.off")
        code, report = run_cli(["nielsen-flat", "--scale", "1", "--out", out])
        assert code == 0
        assert report.payload["off_path"] == out
        header = open(out).read().splitlines()
        assert header[0] == "OFF" and header[1] == "14 12 24"
        sidecar = json.loads(open(report.payload["sidecar_path"]).read())
        assert len(sidecar["vertices"]) == 14

    def test_induce_values(self):
        _, report = run_cli(["induce", "--d", "3", "--ell", "5/2"])
        assert report.payload["length_sq"] == "25/12"

    def test_verify_relations_out_mode(self):
        code, report = run_cli(["verify-relations", "--mode", "out"])
        assert code == 0
        assert any("mod-inner" in c.name for c in report.checks)


class TestEndToEnd:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "autgeom", "sanov"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        data = json.loads(proc.stdout)
        assert data["passed"] is True

    def test_pretty_output(self):
        proc = subprocess.run(
            [sys.executable, "-m", "autgeom", "inner-gpq", "--p", "1", "--q", "2",
             "--pretty"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "overall: PASS" in proc.stdout
        assert "[PASS]" in proc.stdout

    def test_error_goes_to_stderr(self):
        proc = subprocess.run(
            [sys.executable, "-m", "autgeom", "lemma-pq", "--tau", "1,0",
             "--p", "2", "--q", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
        assert proc.stdout == ""
        assert "error" in proc.stderr
