import json

import pytest

from totirr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    target = tmp_path / name
    target.write_text(text, encoding="utf-8")
    return str(target)


def test_compute_undirected(tmp_path, capsys):
    f = write(tmp_path, "c5.txt", "U 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = run(capsys, "compute", "--input", f)
    assert code == 0
    assert out == "irr_t=0\n"


def test_compute_directed(tmp_path, capsys):
    arcs = "\n".join(f"{i} {j}" for i in range(4) for j in range(i + 1, 4))
    f = write(tmp_path, "k4.txt", f"D 4\n{arcs}\n")
    code, out, _ = run(capsys, "compute", "--input", f)
    assert code == 0
    assert out == "irr_in=10 irr_out=10\n"


def test_compute_malformed_input(tmp_path, capsys):
    f = write(tmp_path, "bad.txt", "Q 3\n0 1\n")
    code, _, err = run(capsys, "compute", "--input", f)
    assert code == 2
    assert "error:" in err


def test_compute_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "compute", "--input", str(tmp_path / "nope.txt"))
    assert code == 2
    assert "error:" in err


def test_joint_writes_k2_and_reports(tmp_path, capsys):
    k1 = write(tmp_path, "k1.txt", "U 1\n")
    out_file = tmp_path / "k2.txt"
    code, out, _ = run(
        capsys, "joint", "--left", k1, "--right", k1, "--u", "0", "--v", "0",
        "--out", str(out_file), "--report",
    )
    assert code == 0
    assert out_file.read_text(encoding="utf-8") == "U 2\n0 1\n"
    lines = out.splitlines()
    assert "union_irr=0" in lines
    assert "oracle_irr=0" in lines
    assert "engine_delta=0" in lines
    assert "formula=Prop27Equal predicted=2 agrees=false" in lines


def test_joint_triangle_report(tmp_path, capsys):
    c3 = write(tmp_path, "c3.txt", "U 3\n0 1\n0 2\n1 2\n")
    code, out, _ = run(capsys, "joint", "--left", c3, "--right", c3, "--u", "0", "--v", "0", "--report")
    assert code == 0
    assert "oracle_irr=8" in out.splitlines()
    assert "formula=Prop27Equal predicted=10 agrees=false" in out.splitlines()


def test_joint_bad_vertex(tmp_path, capsys):
    k1 = write(tmp_path, "k1.txt", "U 1\n")
    code, _, err = run(capsys, "joint", "--left", k1, "--right", k1, "--u", "5", "--v", "0")
    assert code == 2
    assert "error:" in err


def test_transform_undirected_report(tmp_path, capsys):
    p4 = write(tmp_path, "p4.txt", "U 4\n0 1\n1 2\n2 3\n")
    out_file = tmp_path / "out.txt"
    code, out, _ = run(
        capsys, "transform", "--input", p4, "--cut", "1", "0", "--target", "2",
        "--out", str(out_file), "--report",
    )
    assert code == 0
    lines = out.splitlines()
    assert "irr_before=4" in lines
    assert "oracle_irr=6" in lines
    assert "engine_delta=2" in lines
    assert "formula=Thm33Case2 predicted=6 agrees=true" in lines
    # edge (1, 0) moved onto 2: result is the star centered at 2
    assert out_file.read_text(encoding="utf-8") == "U 4\n0 2\n1 2\n2 3\n"


def test_transform_directed_head(tmp_path, capsys):
    ring = write(tmp_path, "ring.txt", "D 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(
        capsys, "transform", "--input", ring, "--cut", "0", "1", "--target", "2",
        "--end", "head", "--report",
    )
    assert code == 0
    lines = out.splitlines()
    assert "irr_before=0" in lines
    assert "oracle_irr=6" in lines
    assert "formula=Prop47InCase2 predicted=6 agrees=true" in lines


def test_transform_end_flag_rejected_for_undirected(tmp_path, capsys):
    p4 = write(tmp_path, "p4.txt", "U 4\n0 1\n1 2\n2 3\n")
    code, _, err = run(
        capsys, "transform", "--input", p4, "--cut", "1", "0", "--target", "2", "--end", "head",
    )
    assert code == 2
    assert "error:" in err


def test_transform_non_cut_edge(tmp_path, capsys):
    tri = write(tmp_path, "c3.txt", "U 3\n0 1\n0 2\n1 2\n")
    code, _, err = run(capsys, "transform", "--input", tri, "--cut", "0", "1", "--target", "2")
    assert code == 2


def test_audit_csv_and_exit_code(tmp_path, capsys):
    out_file = tmp_path / "rep.csv"
    code, out, _ = run(
        capsys, "audit", "--suite", "edge-joint", "--instances", "25",
        "--seed", "0xC0FFEE", "--format", "csv", "--out", str(out_file),
    )
    assert code == 0
    assert "engine_ok=true" in out
    text = out_file.read_text(encoding="utf-8")
    assert text.startswith("instance_id,seed,operation,")
    # identical invocation, identical bytes
    out_file2 = tmp_path / "rep2.csv"
    run(
        capsys, "audit", "--suite", "edge-joint", "--instances", "25",
        "--seed", "0xC0FFEE", "--format", "csv", "--out", str(out_file2),
    )
    assert out_file.read_bytes() == out_file2.read_bytes()


def test_audit_hex_and_decimal_seed_agree(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    run(capsys, "audit", "--suite", "lemma34", "--instances", "10", "--seed", "0xC0FFEE", "--out", str(a))
    run(capsys, "audit", "--suite", "lemma34", "--instances", "10", "--seed", "12648430", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_audit_json_format(tmp_path, capsys):
    out_file = tmp_path / "rep.json"
    code, _, _ = run(
        capsys, "audit", "--suite", "closed-forms", "--instances", "8",
        "--format", "json", "--out", str(out_file),
    )
    assert code == 0
    obj = json.loads(out_file.read_text(encoding="utf-8"))
    assert obj["suite"] == "closed-forms"
    assert obj["engine_ok"] is True
    assert obj["disagreements"] == []


def test_audit_unknown_suite_is_usage_error(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["audit", "--suite", "bogus", "--out", str(tmp_path / "x.csv")])
    assert exc.value.code == 2


def test_generate_deterministic(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    run(capsys, "generate", "--family", "random", "--params", "15", "--seed", "9", "--out", str(a))
    run(capsys, "generate", "--family", "random", "--params", "15", "--seed", "9", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_generate_oriented_bipartite(tmp_path, capsys):
    out_file = tmp_path / "kb.txt"
    code, _, _ = run(
        capsys, "generate", "--family", "complete-bipartite", "--params", "2", "2",
        "--orient", "left-right", "--out", str(out_file),
    )
    assert code == 0
    assert out_file.read_text(encoding="utf-8") == "D 4\n0 2\n0 3\n1 2\n1 3\n"


def test_generate_param_count_checked(tmp_path, capsys):
    code, _, err = run(
        capsys, "generate", "--family", "path", "--params", "3", "4", "--out", str(tmp_path / "x.txt"),
    )
    assert code == 2
    assert "error:" in err


def test_generate_left_right_requires_bipartite(tmp_path, capsys):
    code, _, err = run(
        capsys, "generate", "--family", "cycle", "--params", "5",
        "--orient", "left-right", "--out", str(tmp_path / "x.txt"),
    )
    assert code == 2
