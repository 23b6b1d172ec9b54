"""Command-line interface: exit codes, formats, determinism."""

import json

import pytest

from eisenforest.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_root(capsys):
    code, out, _ = run(capsys, "check", "7", "8", "5")
    assert code == 0
    assert "primitive" in out
    assert "(7,8,3)" in out
    assert "1/2" in out
    assert "path: A" in out


def test_check_twin_form(capsys):
    code, out, _ = run(capsys, "check", "7", "8", "3")
    assert code == 0
    assert "twin form" in out
    assert "path: A" in out


def test_check_negative_cases(capsys):
    code, out, _ = run(capsys, "check", "3", "4", "5")
    assert code == 1
    assert "not Eisensteinian" in out
    code, out, _ = run(capsys, "check", "14", "16", "10")
    assert code == 1
    code, out, _ = run(capsys, "check", "7", "5", "8")
    assert code == 1


def test_check_equilateral(capsys):
    code, out, _ = run(capsys, "check", "1", "1", "1")
    assert code == 0
    assert "equilateral special case" in out


def test_malformed_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "7", "8", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "7", "8", "-5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--max-a", "10", "--format", "xml"])
    assert exc.value.code == 2


def test_enumerate_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-a", "13", "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3  # header + the two roots
    assert lines[1].split() == ["A", "0", "1", "2", "7", "8", "5", "3"]
    assert lines[2].split() == ["B", "0", "1", "3", "13", "15", "7", "8"]


def test_enumerate_jsonl_schema(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-a", "100", "--format", "jsonl")
    assert code == 0
    lines = out.splitlines()
    assert lines
    for line in lines:
        rec = json.loads(line)
        assert list(rec) == ["a", "b", "c", "twin_c", "n", "m", "path", "depth"]
        assert all(isinstance(rec[k], int) for k in ("a", "b", "c", "twin_c", "n", "m", "depth"))
    first = json.loads(lines[0])
    assert first == {"a": 7, "b": 8, "c": 5, "twin_c": 3, "n": 1, "m": 2, "path": "A", "depth": 0}


def test_enumerate_include_flags(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--max-a", "13", "--format", "jsonl",
        "--include-twins", "--include-equilateral")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 5  # equilateral + 2 nodes x (tree, twin)
    assert recs[0]["a"] == 1 and recs[0]["path"] is None
    assert recs[1]["c"] == 5 and recs[2]["c"] == 3  # twin row swaps c and twin_c
    assert recs[2]["twin_c"] == 5


def test_enumerate_dot(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-a", "300", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.rstrip().endswith("}")
    assert '"A" [label="(7,8,5/3)"];' in out
    assert '"B" [label="(13,15,7/8)"];' in out
    assert '"A" -> "A:1" [label="1"];' in out
    assert '"B" -> "B:5" [label="5"];' in out
    assert '"A:5.5" [label="(37,40,33/7)"];' in out
    # every non-root node has exactly one incoming edge, roots have none
    node_lines = [l for l in out.splitlines() if "[label=" in l and "->" not in l]
    edge_lines = [l for l in out.splitlines() if "->" in l]
    assert len(edge_lines) == len(node_lines) - 2
    # edges never cross between the two trees: two weakly-connected components
    for line in edge_lines:
        src, dst = line.split("->")
        assert src.strip()[1] == dst.strip()[1]


def test_path_and_locate(capsys):
    code, out, _ = run(capsys, "path", "49", "55", "39")
    assert code == 0
    assert out.strip() == "B:5"
    code, out, _ = run(capsys, "locate", "B:5")
    assert code == 0
    assert "(49,55,39)" in out
    assert "(49,55,16)" in out
    assert "3/5" in out
    code, out, _ = run(capsys, "locate", "A")
    assert "(7,8,5)" in out


def test_path_domain_failures(capsys):
    code, _, err = run(capsys, "path", "3", "4", "5")
    assert code == 1
    assert "not a forest triple" in err
    code, _, err = run(capsys, "path", "1", "1", "1")
    assert code == 1
    assert "equilateral" in err


def test_locate_bad_syntax(capsys):
    code, _, err = run(capsys, "locate", "Z:9")
    assert code == 2
    code, _, err = run(capsys, "locate", "A:7")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-a", "50")
    assert code == 0
    assert out.strip() == "OK: nodes=7, triples=14"
    code, out, err = run(capsys, "verify", "--max-a", "3")
    assert code == 0
    assert out.strip() == "OK: nodes=0, triples=0"
    assert "vacuous" in err


def test_verify_2000(capsys):
    code, out, _ = run(capsys, "verify", "--max-a", "2000")
    assert code == 0
    assert out.startswith("OK: nodes=")


def test_determinism(capsys):
    first = run(capsys, "enumerate", "--max-a", "500", "--format", "jsonl")
    second = run(capsys, "enumerate", "--max-a", "500", "--format", "jsonl")
    assert first == second
    first = run(capsys, "enumerate", "--max-a", "500", "--format", "dot")
    second = run(capsys, "enumerate", "--max-a", "500", "--format", "dot")
    assert first == second


def test_table_and_jsonl_carry_identical_data(capsys):
    _, table, _ = run(capsys, "enumerate", "--max-a", "200", "--format", "table")
    _, jsonl, _ = run(capsys, "enumerate", "--max-a", "200", "--format", "jsonl")
    table_rows = [line.split() for line in table.splitlines()[1:]]
    json_rows = [
        [str(r["path"]), str(r["depth"]), str(r["n"]), str(r["m"]),
         str(r["a"]), str(r["b"]), str(r["c"]), str(r["twin_c"])]
        for r in map(json.loads, jsonl.splitlines())
    ]
    assert table_rows == json_rows
