import subprocess
import sys


from halrect import bench
from halrect.cli import main


def test_solve(capsys):
    assert main(["solve", "--problem", "Branin", "--n", "2", "--selection", "gl", "--agg", "13d"]) == 0
    out = capsys.readouterr().out
    assert "solved   yes" in out and "variant  gl/13d" in out


def test_solve_unsolved_exit_code(capsys):
    assert main(["solve", "--problem", "Bukin6", "--n", "2", "--m-max", "50"]) == 1
    assert "solved   no" in capsys.readouterr().out


def test_solve_with_shift(capsys):
    assert main(["solve", "--problem", "Bukin6", "--n", "2", "--rho", "0.05", "--check-invariants"]) == 0
    assert "rho=0.05" in capsys.readouterr().out


def test_unknown_problem_is_reported(capsys):
    assert main(["solve", "--problem", "Nope", "--n", "2"]) == 2
    assert "unknown problem" in capsys.readouterr().err


def test_sweep_and_oc(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("variants = gl/13d, ia/13c\nproblems = Booth, Matyas\nm_max = 5000\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "out")]) == 0
    results = tmp_path / "out" / "results.csv"
    assert len(bench.read_records(results)) == 4
    assert main(["oc", "--in", str(results), "--out", str(tmp_path / "oc.csv")]) == 0
    assert (tmp_path / "oc.csv").read_bytes() == (tmp_path / "out" / "oc.csv").read_bytes()


def test_sweep_out_from_config(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(f"problems = Sphere\nn_max = 2\nout = {tmp_path / 'o'}\n")
    assert main(["sweep", "--config", str(cfg)]) == 0
    assert (tmp_path / "o" / "summary.csv").exists()


def test_sweep_without_out_fails(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("problems = Sphere\n")
    assert main(["sweep", "--config", str(cfg)]) == 2
    assert "output directory" in capsys.readouterr().err


def test_sweep_bad_config_names_line(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("problems = Sphere\nspeed = fast\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    assert main(["sweep", "--config", str(tmp_path / "none.cfg"), "--out", str(tmp_path)]) == 2
    assert "none.cfg" in capsys.readouterr().err


def test_perturb_sweep(tmp_path):
    out = tmp_path / "p"
    assert main(["perturb-sweep", "--rho", "0.025,0.05", "--problems", "Bukin6", "--out", str(out)]) == 0
    recs = bench.read_records(out / "results.csv")
    assert [r.rho for r in recs] == [0.025, 0.05]
    assert all(r.solved for r in recs)


def test_threads_env_is_validated(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HALRECT_THREADS", "-1")
    assert main(["perturb-sweep", "--rho", "0", "--problems", "Sphere", "--n-max", "2", "--out", str(tmp_path)]) == 2
    assert "HALRECT_THREADS" in capsys.readouterr().err


def test_problems_manifest(tmp_path, capsys):
    assert main(["problems", "--n-max", "2", "--problems", "Branin,Bukin6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# name") and len(lines) == 3
    assert main(["problems", "--out", str(tmp_path / "m.tsv")]) == 0
    assert (tmp_path / "m.tsv").read_text().count("\n") > 50


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "halrect", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for cmd in ("solve", "sweep", "perturb-sweep", "oc", "problems"):
        assert cmd in proc.stdout
