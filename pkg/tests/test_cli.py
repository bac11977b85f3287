from __future__ import annotations

import json
import subprocess
import sys

import pytest

from framing_orbits import framing as fr
from framing_orbits.cli import run
from framing_orbits.generators import word_from_json


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
        return str(p)
    return _write


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    try:
        doc = json.loads(out)
    except json.JSONDecodeError:
        doc = None
    return code, doc


T11 = {"genus": 1, "boundary": 1}
T12 = {"genus": 1, "boundary": 2}


def test_surface_info(capsys):
    code, doc = call(capsys, "surface", "info", "-g", "2", "-b", "3")
    assert code == 0
    assert doc == {"surface": {"genus": 2, "boundary": 3}, "b1": 6, "euler_characteristic": -5}
    assert call(capsys, "surface", "info", "-g", "1", "-b", "0")[0] == 1


def test_framing_classify_and_canon(capsys, write):
    path = write("f.json", {"surface": T11, "rot_alpha": [6], "rot_beta": [4]})
    code, doc = call(capsys, "framing", "classify", path)
    assert code == 0 and doc["key"] == {"kind": "genus1", "nu": [0], "a_tilde": 2}
    code, doc = call(capsys, "framing", "canon", path)
    assert code == 0
    assert doc["canonical"]["rot_alpha"] == [2] and doc["canonical"]["rot_beta"] == [0]
    f = fr.framing_from_json(json.loads(open(path).read()))
    assert fr.apply_word(f, word_from_json(doc["word"])) == fr.framing_from_json(doc["canonical"])


def test_framing_equiv(capsys, write):
    a = write("a.json", {"surface": T11, "rot_alpha": [6], "rot_beta": [4]})
    b = write("b.json", {"surface": T11, "rot_alpha": [2], "rot_beta": [0]})
    c = write("c.json", {"surface": T11, "rot_alpha": [1], "rot_beta": [0]})
    code, doc = call(capsys, "framing", "equiv", a, b)
    assert code == 0 and doc["equivalent"] and doc["witness"]
    code, doc = call(capsys, "framing", "equiv", b, c)
    assert code == 0 and doc == {"equivalent": False, "witness": None}


def test_framing_realize(capsys, write):
    ok = write("k.json", {"surface": T12, "key": {"kind": "genus1", "nu": [-2, 2], "a_tilde": 2}})
    code, doc = call(capsys, "framing", "realize", ok)
    assert code == 0 and doc["framing"]["rot_alpha"] == [2]
    bad = write("k2.json", {"surface": T12, "key": {"kind": "genus1", "nu": [-2, 2], "a_tilde": 3}})
    code, doc = call(capsys, "framing", "realize", bad)
    assert code == 2 and doc["error"] == "InfeasibleError"


def test_big_integers_round_trip(capsys, write):
    big = str(10 ** 40 + 7)
    path = write("big.json", {"surface": T12, "rot_alpha": [big], "rot_beta": ["3"],
                              "rot_boundary": [5]})
    code, doc = call(capsys, "framing", "canon", path)
    assert code == 0 and doc["canonical"]["rot_alpha"] == [1]


def test_spin_commands(capsys, write):
    code, doc = call(capsys, "spin", "orbits", "-g", "1", "-b", "1")
    assert code == 0
    fibers = {tuple(r["h"]): r for r in doc["fibers"]}
    assert fibers[(1,)]["enumerated"] == 0
    assert fibers[(0,)]["enumerated"] == 2 and fibers[(0,)]["block_sizes"] == [3, 1]
    w1 = write("w1.json", {"surface": {"genus": 1, "boundary": 1}, "base": [0, 0]})
    w2 = write("w2.json", {"surface": {"genus": 1, "boundary": 1}, "base": [1, 0]})
    code, doc = call(capsys, "spin", "equiv", w1, w2)
    assert code == 0 and doc == {"equivalent": True, "witness": [0, 1]}
    code, doc = call(capsys, "spin", "classify", w1)
    assert code == 0 and doc["arf"] == 0


def test_rel_commands(capsys, write):
    f = write("r.json", {"surface": T12, "delta_nu": [-2, 2], "rot_alpha": [2], "rot_beta": [0],
                         "arc_ceil": [5]})
    code, doc = call(capsys, "rel", "classify", f)
    assert code == 0 and doc["key"] == {"kind": "rel_genus1", "a_tilde": 2, "gen_arf": 1}
    code, doc = call(capsys, "rel", "canon", f)
    assert code == 0 and doc["case"] == 1 and doc["canonical"]["arc_ceil"] == [0]
    g = write("r2.json", {"surface": T12, "delta_nu": [-2, 2], "rot_alpha": [4], "rot_beta": [2],
                          "arc_ceil": [-3]})
    code, doc = call(capsys, "rel", "equiv", f, g)
    assert code == 0 and doc["equivalent"] and doc["witness"] is not None
    code, doc = call(capsys, "rel", "exists", f)
    assert code == 0 and doc["exists"]
    bad = write("bad.json", {"surface": T12, "delta_nu": [0, 1]})
    assert call(capsys, "rel", "exists", bad)[0] == 2
    g0 = write("g0.json", {"surface": {"genus": 0, "boundary": 2}, "delta_nu": [1, 1],
                           "arc_ceil": [0]})
    code, doc = call(capsys, "rel", "classify", g0)
    assert code == 2 and doc["error"] == "UnsupportedCaseError"


def test_malformed_input(capsys, write):
    assert call(capsys, "framing", "classify", write("x.json", "{not json"))[0] == 1
    assert call(capsys, "framing", "classify", write("y.json", {"surface": T11}))[0] == 1
    assert call(capsys, "framing", "classify", "/nonexistent/file.json")[0] == 1
    assert call(capsys, "nonsense")[0] == 1


def test_verify(capsys):
    code, doc = call(capsys, "verify", "--suite", "spin", "--seed", "4", "--max-size", "4")
    assert code == 0 and doc["failures"] == [] and doc["suite"] == "spin"


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "framing_orbits", "surface", "info", "-g", "0",
                           "-b", "1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["euler_characteristic"] == 1
