import io
import json
import subprocess
import sys

import pytest

from conftest import FIGURE_EIGHT, TREFOIL
from thompsonlinks.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_reduce():
    assert run("reduce", "w0", "w0'") == (0, "pair . .\n")
    code, text = run("reduce", "x0")
    assert text.strip() == "pair ((..).) (.(..))"
    assert run("reduce", *text.split()) == (0, text)


def test_reduce_parse_errors():
    assert run("reduce", "x7")[0] == 1
    assert run("reduce", "pair", "((..)", ".")[0] == 1


def test_member():
    assert run("member", "w1")[1].splitlines()[0] == "yes"
    code, text = run("member", "x0")
    assert text.splitlines() == ["no", "plus gaps: 0,1,2,1", "minus gaps: 0,2,0,1"]
    assert run("member", "pair", ".", ".")[1].startswith("yes")
    data = json.loads(run("member", "x0", "--json")[1])
    assert data == {"member": False, "plus_gaps": "0,1,2,1", "minus_gaps": "0,2,0,1"}


def test_link():
    assert run("link", "x0")[1].count("X[") == 4
    assert run("link", "w0", "w0'")[1].strip() == "L 1"
    assert run("link", "w0")[1].count("X[") == 8
    gauss = run("link", "x0", "--format", "gauss")[1]
    assert gauss.split()[0][0] in "OU"
    assert run("link", "x0", "--mirror")[1] != run("link", "x0")[1]


def test_color_pd_text_and_file(tmp_path):
    code, text = run("color", TREFOIL)
    assert code == 0 and "colorable: true" in text
    path = tmp_path / "fig8.pd"
    path.write_text(FIGURE_EIGHT + "\n")
    code, text = run("color", str(path), "--bound", "7")
    assert "colorable: false" in text and "coloring_number: 5" in text
    data = json.loads(run("color", TREFOIL, "--json")[1])
    assert data["colorings"] == 9 and data["kernel_dimension"] == 2


def test_color_element():
    code, text = run("color", "w2")
    assert code == 0 and "colorable: true" in text and "source: element" in text
    assert "colorable: false" in run("color", "L 1")[1]


def test_color_errors():
    assert run("color", "X[1,2,3]")[0] == 1
    assert run("color", TREFOIL, "--p", "1")[0] == 2
    assert run("color", "w0 w1 w2 w3 w0 w1", "--p", "9")[0] == 2


def test_verify():
    code, text = run("verify", "--samples", "50", "--max-len", "6")
    assert code == 0
    assert "failures: 0" in text and "passed: 50" in text
    data = json.loads(run("verify", "--samples", "20", "--json")[1])
    assert data["passed"] == 20


def test_verify_empty_and_errors():
    code, text = run("verify", "--samples", "0")
    assert code == 0 and "samples: 0" in text
    assert run("verify", "--samples", "-1")[0] == 2


def test_verify_x_alphabet():
    code, text = run("verify", "--alphabet", "x", "--samples", "80", "--max-len", "6")
    assert code == 0
    line = next(l for l in text.splitlines() if l.startswith("uncolorable_non_members"))
    assert int(line.split()[-1]) > 0


def test_render(tmp_path):
    outs = {}
    for what in ("tree", "strip", "link"):
        a, b = tmp_path / f"{what}1.svg", tmp_path / f"{what}2.svg"
        assert run("render", "w0", "--what", what, "--out", str(a))[0] == 0
        assert run("render", "w0", "--what", what, "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()
        outs[what] = a.read_text()
        assert outs[what].startswith("<svg")
    run("render", "x0", "--what", "strip", "--out", str(tmp_path / "x0.svg"))
    assert "not 3-strip-colorable" in (tmp_path / "x0.svg").read_text()
    assert "not 3-strip-colorable" not in outs["strip"]


def test_render_identity_link(tmp_path):
    out = tmp_path / "id.svg"
    assert run("render", "pair", ".", ".", "--what", "link", "--out", str(out))[0] == 0
    assert "<circle" in out.read_text()


def test_render_bad_path(tmp_path):
    assert run("render", "x0", "--out", str(tmp_path / "missing" / "a.svg"))[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "thompsonlinks", "reduce", "x0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "pair ((..).) (.(..))"
