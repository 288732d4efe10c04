import json
import subprocess
import sys

import numpy as np
import pytest

from galcurves.cli import run
from galcurves.polyline import Polyline


def test_frenet_example1(capsys):
    assert run(["frenet", "--curve", "example1", "--at", "1"]) == 0
    assert capsys.readouterr().out.strip() == "T=(1,0,-0.5) N=(0,1,0) B=(0,0,1) kappa=1 tau=2"


def test_frenet_range_on_family(capsys):
    assert run(["frenet", "--curve", "circular-helix:kappa0=2,tau0=1", "--range", "0:1:3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3 and lines[0].startswith("s=0 T=(1,0,0)")


def test_frenet_family_at_needs_domain(capsys):
    assert run(["frenet", "--curve", "salkowski:kappa0=1,tau=s", "--at", "0.5"]) == 1
    assert run(["frenet", "--curve", "salkowski:kappa0=1,tau=s", "--at", "0.5",
                "--domain", "0:1"]) == 0


def test_family_circular_helix_csv(tmp_path):
    out = tmp_path / "helix.csv"
    code = run(["family", "--kind", "circular-helix", "--kappa0", "1", "--tau0", "1",
                "--range", "0:3.14159265:101", "--format", "csv", "--out", str(out)])
    assert code == 0
    poly = Polyline.from_csv(out.read_text())
    assert len(poly) == 101
    s = poly.s[-1]
    assert poly.samples[-1, 2:] == pytest.approx([1 - np.cos(s), s - np.sin(s)], abs=1e-14)


@pytest.mark.parametrize("kind, extra", [
    ("general-helix", ["--m", "2", "--kappa", "1/s"]),
    ("salkowski", ["--kappa0", "1", "--tau", "s"]),
    ("anti-salkowski", ["--kappa", "exp(-s)", "--tau0", "2"]),
])
def test_family_kinds(tmp_path, kind, extra):
    out = tmp_path / "c.json"
    assert run(["family", "--kind", kind, *extra, "--range", "1:2:11", "--format", "json",
                "--out", str(out), "--steps", "500"]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["samples"]) == 11 and doc["meta"]["source"] == kind


def test_family_missing_parameter(capsys):
    assert run(["family", "--kind", "salkowski", "--kappa0", "1", "--range", "0:1:5"]) == 1
    assert "needs tau" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run(["bogus"]) == 1
    assert run(["family", "--kind", "circular-helix", "--range", "0:1"]) == 1
    assert run(["reconstruct", "--kappa", "1", "--tau", "1", "--range", "1:0:5"]) == 1
    assert run(["reconstruct", "--kappa", "1", "--tau", "1", "--range", "0:1:1"]) == 1
    assert run(["frenet", "--curve", "nonsense", "--at", "1"]) == 1
    assert run(["frenet", "--curve", "example1"]) == 1
    capsys.readouterr()


def test_numerical_failures(capsys):
    assert run(["reconstruct", "--kappa", "ln(s)", "--tau", "1", "--range", "0:1:5"]) == 2
    assert run(["reconstruct", "--kappa", "sin(", "--tau", "1", "--range", "0:1:5"]) == 2
    assert run(["family", "--kind", "circular-helix", "--kappa0", "-1", "--tau0", "1",
                "--range", "0:1:5"]) == 2
    assert run(["frenet", "--curve", "example1", "--at", "0.1"]) == 2
    capsys.readouterr()


def test_smarandache_command(capsys):
    assert run(["smarandache", "--kind", "tn", "--curve", "example2", "--range", "0:2:5",
                "--format", "csv"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0] == "s,x,y,z"
    assert [float(v) for v in rows[1].split(",")] == pytest.approx([0, 1, 0.8, -0.4])


def test_reconstruct_default_steps(capsys):
    assert run(["reconstruct", "--kappa", "1", "--tau", "1", "--range", "0:3.141592653589793:11",
                "--format", "json", "--no-meta"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["meta"]["params"]["steps"] == 1100
    assert doc["samples"][-1][2:] == pytest.approx([2.0, np.pi], abs=1e-10)


def test_admissible_command(capsys):
    assert run(["admissible", "--curve", "example1", "--range", "0.5:3:101"]) == 0
    assert "admissible=true min_kappa=0.333333333333333" in capsys.readouterr().out


def test_verify_command(capsys):
    assert run(["verify"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "checks passed" in out
    assert run(["verify", "--tolerance", "0"]) == 2
    capsys.readouterr()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "galcurves", "frenet", "--curve", "example2",
                           "--at", "0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("T=(1,-0.2,-0.4) N=(0,1,0) B=(0,0,1) kappa=1 tau=2")
