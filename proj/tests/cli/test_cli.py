import json
import os
import subprocess

import pytest

CLI = os.environ.get("TOTALCOLOR_CLI", "totalcolor")
MANIFEST = os.environ.get("TOTALCOLOR_MANIFEST", "audit_manifest.json")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_build_sn_tm(tmp_path):
    out = tmp_path / "g.json"
    r = run("build", "--family", "sn-tm", "--n", "4", "--out", str(out))
    assert r.returncode == 0
    graph = json.loads(out.read_text())
    assert graph["vertices"] == 24
    assert graph["max_degree"] == 3


def test_build_dot():
    r = run("build", "--family", "circulant", "--n", "5", "--diffs", "1,4", "--format", "dot")
    assert r.returncode == 0
    assert r.stdout.startswith('graph "circulant"')
    assert r.stdout.count("--") == 5


def test_color_theorem_then_verify(tmp_path):
    cert = tmp_path / "c.json"
    r = run("color", "--family", "sn-tm", "--n", "4", "--strategy", "theorem", "--out", str(cert))
    assert r.returncode == 0
    doc = json.loads(cert.read_text())
    assert doc["palette"] == 4
    assert doc["verified"] is True
    assert run("verify", str(cert)).returncode == 0


@pytest.mark.parametrize("strategy", ["greedy", "exact"])
def test_color_other_strategies(tmp_path, strategy):
    cert = tmp_path / "c.json"
    r = run("color", "--family", "kneser-complement", "--n", "4", "--k", "2", "--strategy", strategy,
            "--out", str(cert))
    assert r.returncode == 0
    assert run("verify", str(cert)).returncode == 0
    if strategy == "exact":
        assert json.loads(cert.read_text())["palette"] == 5


def test_outputs_are_byte_deterministic():
    args = ("color", "--family", "dihedral-interval", "--n", "12", "--k", "1")
    assert run(*args).stdout == run(*args).stdout


def test_verify_rejects_every_single_byte_color_mutation(tmp_path):
    cert = tmp_path / "c.json"
    assert run("color", "--family", "sn-tm", "--n", "3", "--out", str(cert)).returncode == 0
    doc = json.loads(cert.read_text())
    for index, value in enumerate(doc["vertex_colors"]):
        for digit in "0123456789":
            if digit == str(value):
                continue
            bad = json.loads(cert.read_text())
            bad["vertex_colors"][index] = int(digit)
            path = tmp_path / "bad.json"
            path.write_text(json.dumps(bad))
            assert run("verify", str(path)).returncode == 1


def test_verify_reports_garbage(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert run("verify", str(path)).returncode == 1


def test_exact():
    r = run("exact", "--family", "sn-tm", "--n", "3")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["chi"] == 3
    assert report["type"] == "TYPE_I"


def test_claims_kneser_6_2_is_inapplicable():
    r = run("claims", "--theorem", "kneser", "--n", "6", "--k", "2")
    assert r.returncode == 1
    assert "INAPPLICABLE" in r.stdout


def test_claims_json_row():
    r = run("claims", "--theorem", "sn-tm", "--n", "3", "--format", "json")
    assert r.returncode == 0
    row = json.loads(r.stdout)["reports"][0]
    assert row["verdict"] == "CONFIRMED"
    assert row["constructed"] == 3
    assert row["exact"] == 3


def test_claims_all_matches_manifest():
    r = run("claims", "--all", "--manifest", MANIFEST)
    assert r.returncode == 0, r.stdout
    rows = [line for line in r.stdout.splitlines()[1:] if line and not line.startswith("manifest")]
    assert len(rows) == 25


def test_budget_environment_override():
    env = dict(os.environ, TOTALCOLOR_BUDGET="1")
    r = run("exact", "--family", "an-star3", "--n", "5", env=env)
    assert r.returncode == 0
    assert json.loads(r.stdout)["exact"] is False


def test_export_certificate_to_dot(tmp_path):
    cert = tmp_path / "c.json"
    assert run("color", "--family", "sn-tm", "--n", "3", "--out", str(cert)).returncode == 0
    r = run("export", str(cert), "--format", "dot")
    assert r.returncode == 0
    assert "label=" in r.stdout


def test_export_graph_round_trip(tmp_path):
    graph = tmp_path / "g.json"
    assert run("build", "--family", "kneser-complement", "--n", "5", "--k", "2", "--out", str(graph)).returncode == 0
    r = run("export", str(graph))
    assert r.returncode == 0
    assert json.loads(r.stdout) == json.loads(graph.read_text())


@pytest.mark.parametrize("args", [
    ("build", "--family", "nope", "--n", "3"),
    ("build", "--n", "3"),
    ("color", "--family", "sn-tm", "--n", "3", "--strategy", "magic"),
    ("claims",),
    ("claims", "--theorem", "fermat"),
    ("frobnicate",),
    ("verify", "/nonexistent/cert.json"),
])
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2
