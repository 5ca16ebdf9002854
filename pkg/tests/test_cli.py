import json

from lrotor.catalog import build_catalog
from lrotor.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_elliptic_ellipsoid(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--mu", "1", "--c", "-2",
                               "--eps", "1", "--class", "elliptic")
        assert code == 0
        data = json.loads(out)
        assert data == {"family": "III-a", "a": 1.0, "b": 1.0, "epsilon": 1}

    def test_umbilic(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--mu", "1", "--c", "0",
                               "--eps", "1", "--class", "elliptic")
        assert code == 0
        assert json.loads(out) == {"family": "umbilic", "R": 1.0}

    def test_inadmissible_is_config_error(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--mu", "1", "--c", "2",
                               "--eps", "1", "--class", "hyperbolic1")
        assert code == 2
        assert "error" in err

    def test_writes_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run_cli(capsys, "classify", "--mu", "-1", "--c", "2",
                             "--eps", "1", "--class", "hyperbolic1",
                             "--out", str(out_path))
        assert code == 0
        assert json.loads(out_path.read_text())["family"] == "I-a"


class TestVerify:
    def test_catenoid_with_zero_mean_relation(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--named", "catenoid-1",
                               "--relation", "H0")
        assert code == 0
        assert "PASS" in out

    def test_failure_sets_exit_one(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--named", "catenoid-1",
                               "--relation", "linear:q=2")
        assert code == 1
        assert "FAIL" in out

    def test_unknown_surface(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--named", "nope")
        assert code == 2

    def test_report_file(self, capsys, tmp_path):
        path = tmp_path / "rep.json"
        code, _, _ = run_cli(capsys, "verify", "--named", "umbilic-elliptic",
                             "--grid", "8x8", "--out", str(path))
        assert code == 0
        report = json.loads(path.read_text())
        assert report["passed"] is True
        assert report["grid"] == [8, 8]


class TestSolve:
    def test_power_law_final_row(self, capsys, tmp_path):
        path = tmp_path / "sol.csv"
        code, _, _ = run_cli(capsys, "solve", "--relation", "linear:q=2",
                             "--r0", "1", "--K0", "1", "--r-end", "2",
                             "--out", str(path))
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "r,K"
        r, k = map(float, lines[-1].split(","))
        assert r == 2.0
        assert abs(k - 4.0) <= 1e-8

    def test_stdout_output(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--relation", "H0",
                               "--r0", "1", "--K0", "2", "--r-end", "2")
        assert code == 0
        rows = out.strip().splitlines()
        r, k = map(float, rows[-1].split(","))
        assert abs(k - 1.0) <= 1e-8  # K = 2/r

    def test_bare_relation_with_coefficient_flags(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--relation", "linear",
                               "--q", "2", "--r0", "1", "--K0", "1",
                               "--r-end", "2")
        assert code == 0
        assert abs(float(out.strip().splitlines()[-1].split(",")[1]) - 4.0) \
            <= 1e-8
        code, out, _ = run_cli(capsys, "solve", "--relation", "quadratic",
                               "--mu", "1", "--r0", "1", "--K0", "0.5",
                               "--r-end", "2")
        assert code == 0
        assert abs(float(out.strip().splitlines()[-1].split(",")[1]) - 2 / 3) \
            <= 1e-8


class TestGenerate:
    def test_writes_obj_and_csv(self, capsys, tmp_path):
        base = tmp_path / "mesh"
        code, out, _ = run_cli(capsys, "generate", "--named", "catenoid-1",
                               "--grid", "8x8", "--out", str(base))
        assert code == 0
        obj = (tmp_path / "mesh.obj").read_text()
        csv = (tmp_path / "mesh.csv").read_text()
        assert obj.startswith("v ")
        assert len([l for l in obj.splitlines() if l.startswith("v ")]) == 64
        assert csv.splitlines()[0] == "r,t,k_m,k_p,H,K_G,W"

    def test_deterministic_output(self, capsys, tmp_path):
        outputs = []
        for name in ("a", "b"):
            base = tmp_path / name
            code, _, _ = run_cli(capsys, "generate", "--named",
                                 "quadric-III-a", "--grid", "12x9",
                                 "--out", str(base))
            assert code == 0
            outputs.append(((tmp_path / f"{name}.obj").read_bytes(),
                            (tmp_path / f"{name}.csv").read_bytes()))
        assert outputs[0] == outputs[1]

    def test_requires_out(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--named", "catenoid-1")
        assert code == 2

    def test_config_file_surface(self, capsys, tmp_path):
        cfg = {
            "surface": {
                "class": "elliptic", "epsilon": 1,
                "momentum": {"variant": "linear", "R": 1.0},
                "r_interval": [0.5, 2.0], "anchor": 1.25,
            },
            "out": str(tmp_path / "s"),
            "grid": [4, 4],
        }
        cfg_path = tmp_path / "job.json"
        cfg_path.write_text(json.dumps(cfg))
        code, _, _ = run_cli(capsys, "generate", "--config", str(cfg_path))
        assert code == 0
        assert (tmp_path / "s.obj").exists()


class TestCatalog:
    def test_lists_every_entry(self, capsys):
        code, out, _ = run_cli(capsys, "catalog")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        cat = build_catalog()
        assert len(lines) == len(cat)
        for key in ("catenoid-1", "enneper-3", "quadric-IV-d",
                    "cone-parabolic-timelike", "hopf-hyperbolic2-q0.5",
                    "cylinder-lorentzian"):
            assert any(l.startswith(key) for l in lines), key

    def test_catalog_keys_match_verify_coverage(self):
        # no silent gaps: every key the listing shows verifies cleanly
        cat = build_catalog()
        assert len(cat) >= 40
        groups = {e.group for e in cat.values()}
        assert groups == {"planes", "cylinders", "cones", "umbilics",
                          "zero-mean-curvature", "hopf", "quadratic",
                          "quadrics"}


class TestConfig:
    def test_bad_grid(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--named", "catenoid-1",
                               "--grid", "16by16")
        assert code == 2

    def test_env_tolerance(self, capsys, monkeypatch):
        monkeypatch.setenv("LROTOR_TOL", "not-a-float")
        code, _, err = run_cli(capsys, "verify", "--named", "catenoid-1")
        assert code == 2
        monkeypatch.setenv("LROTOR_TOL", "1e-5")
        code, out, _ = run_cli(capsys, "verify", "--named", "catenoid-1")
        assert code == 0
