import json
import subprocess


def run(cli, *args, stdin=None):
    return subprocess.run([cli, *args], input=stdin, capture_output=True, text=True)


def test_verify_fixture(qcs_cli, tmp_path):
    text = run(qcs_cli, "fixture", "simple4").stdout
    path = tmp_path / "simple4.qcs"
    path.write_text(text)
    assert run(qcs_cli, "verify", str(path)).returncode == 0
    out = run(qcs_cli, "analyze", str(path), "--format", "structured")
    assert out.returncode == 0
    assert json.loads(out.stdout)["primitive_level"] == "infinite"


def test_invalid_structure_exit(qcs_cli):
    doc = "n 2\ndot 2 1 1 2\ncolon 1 2 2 1\n"
    assert run(qcs_cli, "verify", "-", stdin=doc).returncode == 1


def test_precondition_exit(qcs_cli):
    doc = run(qcs_cli, "fixture", "trivial:3").stdout
    out = run(qcs_cli, "analyze", "-", "--field", "primitive_level", stdin=doc)
    assert out.returncode == 2


def test_parse_error_exit(qcs_cli):
    assert run(qcs_cli, "verify", "-", stdin="n 2\ndot 1\n").returncode == 3
    assert run(qcs_cli, "no-such-verb").returncode == 3


def test_bound_exit(qcs_cli):
    assert run(qcs_cli, "enumerate", "--order", "6").returncode == 4


def test_count_only(qcs_cli):
    out = run(qcs_cli, "enumerate", "--order", "3", "--count-only")
    assert out.returncode == 0
    assert json.loads(out.stdout)["count"] == 26
