import json
import subprocess
import sys

import pytest
from hypothesis import given

from oracles import digraphs
from p22free.cli import main
from p22free.constructions import Family, all_params, build_family, enumerate_params, remark_digraph
from p22free.digraph import Digraph, new_digraph, reverse
from p22free.io import ParseError, decode_document, decode_json, encode_dot, encode_json


def test_encode_remark():
    doc = json.loads(encode_json(remark_digraph()))
    assert doc["n"] == 5
    assert len(doc["arcs"]) == 12
    assert doc["arcs"] == sorted(doc["arcs"])


def test_encode_empty():
    assert encode_json(new_digraph(1)) == '{"n":1,"arcs":[]}'


@pytest.mark.parametrize(
    "text,message,position",
    [
        ('{"n":3,"arcs":[[2,2]]}', "loop", "$.arcs[0]"),
        ('{"n":3,"arcs":[[0,1],[0,1]]}', "duplicate arc", "$.arcs[1]"),
        ('{"n":3,"arcs":[[0,3]]}', "vertex out of range", "$.arcs[0]"),
        ('{"n":0,"arcs":[]}', "n must be", "$.n"),
        ('{"n":3}', "arcs must be", "$.arcs"),
        ('{"n":3,"arcs":[[0]]}', "pair of integers", "$.arcs[0]"),
        ("[1, 2]", "JSON object", "$"),
    ],
)
def test_parse_errors(text, message, position):
    with pytest.raises(ParseError) as info:
        decode_json(text)
    assert message in str(info.value)
    assert info.value.position == position


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        decode_json('{"n": 3,\n "arcs": [}')
    assert info.value.position.startswith("line 2")


def test_metadata_roundtrip():
    D = remark_digraph()
    text = encode_json(D, {"provenance": "test", "family": None})
    H, meta = decode_document(text)
    assert H == D
    assert meta == {"provenance": "test", "family": None}
    with pytest.raises(ValueError):
        encode_json(D, {"n": 4})


def test_dot_examples():
    cyc = Digraph.from_arcs(2, [(0, 1), (1, 0)])
    assert encode_dot(cyc) == "digraph D {\n  v0 -> v1;\n  v1 -> v0;\n}\n"
    assert encode_dot(new_digraph(3)) == "digraph D {\n}\n"
    D3 = build_family(enumerate_params(Family.D3, 16)[0])
    assert sum(" -> " in line for line in encode_dot(D3).splitlines()) == 80


@pytest.mark.parametrize("n", range(13, 21))
def test_json_roundtrip_family_members(n):
    for p in all_params(n):
        D = build_family(p)
        assert decode_json(encode_json(D)) == D


@given(digraphs(1, 10))
def test_json_roundtrip_random(D):
    assert decode_json(encode_json(D)) == D
    assert encode_json(decode_json(encode_json(D))) == encode_json(D)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_formula(capsys):
    assert run(capsys, "formula", "14") == (0, "62\n", "")
    code, out, err = run(capsys, "formula", "5")
    assert code == 65 and out == "" and "13" in err


def test_cli_remark_then_check(tmp_path, capsys):
    path = tmp_path / "remark.json"
    assert run(capsys, "remark", "-o", str(path))[0] == 0
    assert run(capsys, "check", str(path)) == (0, "FREE\n", "")


def test_cli_check_witness(tmp_path, capsys):
    path = tmp_path / "p22.json"
    path.write_text('{"n":4,"arcs":[[0,1],[0,2],[1,3],[2,3]]}')
    assert run(capsys, "check", str(path)) == (1, "P22 0 1 2 3\n", "")


def test_cli_build_and_recognize(tmp_path, capsys):
    path = tmp_path / "d3_16.json"
    assert run(capsys, "build", "D3", "--n", "16", "-o", str(path))[0] == 0
    doc = json.loads(path.read_text())
    assert doc["family"] == "D3" and len(doc["arcs"]) == 80
    assert run(capsys, "recognize", str(path)) == (0, "Member(D3, as-is)\n", "")


def test_cli_recognize_not_extremal(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text(encode_json(new_digraph(13)))
    assert run(capsys, "recognize", str(path)) == (2, "NotExtremal(wrong arc count)\n", "")


def test_cli_recognize_reversed(tmp_path, capsys):
    path = tmp_path / "r.json"
    path.write_text(encode_json(reverse(build_family(enumerate_params(Family.D5, 14)[0]))))
    assert run(capsys, "recognize", str(path)) == (0, "Member(D5, reversed)\n", "")


def test_cli_build_filters(capsys):
    code, out, _ = run(capsys, "build", "d2", "--n", "13", "--v4", "4")
    assert code == 0
    assert json.loads(out)["params"]["v4"] == 4
    code, out, _ = run(capsys, "build", "D8", "--n", "14", "--variant", "b", "--format", "dot")
    assert code == 0 and out.startswith("digraph D {")
    assert run(capsys, "build", "D1", "--n", "14")[0] == 65
    assert run(capsys, "build", "D1", "--n", "13", "--c", "9")[0] == 65
    assert run(capsys, "build", "D11", "--n", "13")[0] == 65


def test_cli_search(capsys):
    assert run(capsys, "search", "--n", "4") == (0, "best_arcs=8\noptimal=true\nwitnesses=3\n", "")
    assert run(capsys, "search", "--n", "5", "--bnb")[1] == "best_arcs=12\noptimal=true\nwitnesses=1\n"
    code, out, _ = run(capsys, "search", "--n", "13", "--seed-family", "--limit", "2000")
    assert code == 0 and out.startswith("best_arcs=55\noptimal=false")
    assert run(capsys, "search", "--n", "6", "--exhaustive")[0] == 65
    assert run(capsys, "search", "--n", "4", "--exhaustive", "--bnb")[0] == 64


def test_cli_audit(tmp_path, capsys):
    path = tmp_path / "d1.json"
    path.write_text(encode_json(build_family(enumerate_params(Family.D1, 13)[0])))
    code, out, _ = run(capsys, "audit", str(path))
    assert code == 0 and "max out-degree k = 7" in out
    code, out, _ = run(capsys, "audit", str(path), "--vertex", "7", "--kv")
    assert code == 0 and "out-neighborhood-indegree[v=7]=true" in out
    assert run(capsys, "audit", str(path), "--vertex", "40")[0] == 65


def test_cli_error_codes(tmp_path, capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 64 and "usage" in err
    assert run(capsys, "formula", "--bogus", "3")[0] == 64
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 66
    bad = tmp_path / "bad.json"
    bad.write_text('{"n":3,"arcs":[[1,1]]}')
    code, out, err = run(capsys, "check", str(bad))
    assert code == 65 and out == "" and "loop" in err


def test_cli_output_is_deterministic(capsys):
    first = run(capsys, "build", "D4", "--n", "18")
    second = run(capsys, "build", "D4", "--n", "18")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "p22free", "formula", "16"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "80\n"
