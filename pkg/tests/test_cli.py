import io
import json
import subprocess
import sys

import pytest

from conftest import DATA
from gisemi.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def G(name):
    return DATA / f"{name}.json"


def test_mul_example():
    assert run("mul", G("g_r1"), "@e;p", "p;@e") == (0, "@e;@e\n", "")


def test_mul_json():
    code, out, _ = run("mul", G("g_c2"), "x;@b", "@b;x", "--json")
    assert code == 0 and json.loads(out) == {"product": "x;x"}


def test_poly_examples():
    assert run("poly", "reduce", "--alphabet", "p,q", "q' p")[:2] == (0, "0\n")
    assert run("poly", "reduce", "--alphabet", "p,q", "p q' q p'")[:2] == (0, "p p'\n")
    assert run("poly", "mul", "--alphabet", "p", "p'", "p")[:2] == (0, "1\n")


def test_analyze_example():
    code, out, _ = run("analyze", G("g_a2"), "--bound", "4")
    assert code == 0 and "D_b^0 ≅ B⁰_2 (matrix units)" in out


def test_factor_example():
    assert run("factor", G("g_c2"), "--vertex", "a", "y.x.y")[:2] == (0, "u1=y u2=x.y\n")
    assert run("factor", G("g_c2"), "--vertex", "a", "--cycles", "x.y.x.y")[:2] == (0, "x.y x.y\n")
    assert run("factor", G("g_flow"), "--component", "a,b", "x.y")[:2] == (0, "u1=@a u2=x.y\n")


def test_green():
    assert run("green", G("g_c2"), "--rel", "J", "@a;@a", "@b;@b")[:2] == (0, "true\n")
    assert run("green", G("g_c2"), "--rel", "D", "@a;@a", "@b;@b")[:2] == (0, "false\n")


def test_enum():
    code, out, _ = run("enum", G("g_c2"), "--set", "Q_e", "--vertex", "a")
    assert code == 0 and out == "@a\ny\n# 2 members, complete=true\n"
    code, out, _ = run("enum", G("g_a2"), "--set", "D_e", "--vertex", "b", "--bound", "1", "--json")
    assert code == 0 and json.loads(out)["members"] == ["@b;@b", "@b;x", "x;@b", "x;x"]
    code, out, _ = run("enum", G("g_flow"), "--set", "J_A", "--component", "a,b", "--bound", "0")
    assert out.split() == ["@a;@a", "@b;@b"]


def test_iso_check():
    code, out, _ = run("iso-check", G("g_c2"), "--vertex", "a", "x.y;@a")
    assert code == 0
    assert out == "element: x.y;@a\npolycyclic: x.y\nbrandt: (@a | x.y | @a)\nround_trip: true\n"
    code, out, _ = run("iso-check", G("g_flow"), "--component", "a,b", "x.y;y", "--json")
    assert code == 0 and json.loads(out)["round_trip"] is True


def test_verify_exit_codes():
    assert run("verify", G("g_c2"), "--bound", "2", "--samples", "200")[0] == 0
    code, out, _ = run("verify", G("g_r1"), "--bound", "2", "--samples", "200")
    assert code == 3 and "FAIL j_equals_d" in out


@pytest.mark.parametrize("argv, code, needle", [
    (["mul", G("g_c2"), "zz;zz"], 1, "zz"),
    (["mul", G("g_c2"), "x;@a"], 1, "ends at"),
    (["mul", G("g_c2"), "x;x;x"], 2, "position"),
    (["enum", G("g_c2"), "--set", "Q_e", "--vertex", "q"], 1, "'q'"),
    (["enum", G("g_c2"), "--set", "Q_e"], 2, "--vertex"),
    (["enum", G("g_c2"), "--set", "Q_A", "--vertex", "a"], 2, "--component"),
    (["enum", G("g_flow"), "--set", "Q_A", "--component", "a"], 1, ""),
    (["enum", G("g_c2"), "--set", "Q_e", "--vertex", "a", "--bound", "-1"], 2, "non-negative"),
    (["factor", G("g_c2"), "--vertex", "a", "x.x"], 1, ""),
    (["poly", "reduce", "--alphabet", "p", "r"], 1, "'r'"),
    (["poly", "reduce", "--alphabet", "p", "p ''"], 2, "position"),
    (["poly", "reduce", "--alphabet", "p", "p", "p"], 2, "exactly one"),
    (["green", G("g_c2"), "--rel", "Q", "@a;@a", "@a;@a"], 2, ""),
    (["analyze", DATA / "missing.json"], 1, "missing.json"),
    (["frobnicate"], 2, ""),
])
def test_exit_code_matrix(argv, code, needle):
    got, _, err = run(*argv)
    assert got == code
    if code == 2 and needle == "":
        return
    assert needle in err


def test_bad_graph_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"], "edges": [{"id": "x", "src": "a", "dst": "b"}]}')
    code, _, err = run("analyze", bad)
    assert code == 1 and "'b'" in err


@pytest.mark.parametrize("argv", [
    ["analyze", G("g_flow"), "--json"],
    ["verify", G("g_flow"), "--bound", "2", "--samples", "300", "--seed", "4", "--json"],
    ["enum", G("g_r2"), "--set", "I_e", "--vertex", "e", "--bound", "3", "--json"],
])
def test_json_is_byte_stable_across_processes(argv):
    cmd = [sys.executable, "-m", "gisemi.cli"] + [str(a) for a in argv]
    one = subprocess.run(cmd, capture_output=True, check=False)
    two = subprocess.run(cmd, capture_output=True, check=False)
    assert one.returncode == 0 and one.stdout == two.stdout
    json.loads(one.stdout)


def test_color_disabled_by_env(monkeypatch):
    class Tty(io.StringIO):
        def isatty(self):
            return True

    out = Tty()
    main(["verify", str(G("g_a2")), "--bound", "2", "--samples", "50"], stdout=out, stderr=io.StringIO())
    assert "\033[" in out.getvalue()
    monkeypatch.setenv("GIS_COLOR", "0")
    out = Tty()
    main(["verify", str(G("g_a2")), "--bound", "2", "--samples", "50"], stdout=out, stderr=io.StringIO())
    assert "\033[" not in out.getvalue()
