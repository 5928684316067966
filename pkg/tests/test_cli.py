"""Command-line behaviour: outputs, pipelines, exit codes."""

import json

import pytest

from stardi import (
    dicycle,
    parse_digraph,
    serialize,
    serialize_colouring,
    star_dichromatic,
    underlying_graph,
    wheel,
)
from stardi.cli import main


@pytest.fixture
def c3(tmp_path):
    path = tmp_path / "c3.dg"
    path.write_text(serialize(dicycle(3)))
    return str(path)


@pytest.fixture
def c4_graph(tmp_path):
    path = tmp_path / "c4.ug"
    path.write_text(serialize(underlying_graph(dicycle(4))))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------------
# compute


def test_compute_star(capsys, c3):
    code, out, _ = run(capsys, "compute", "--param", "star", "--input", c3)
    assert code == 0
    assert out == "star 3/2\n"


def test_compute_integer_value_prints_plainly(capsys, c3):
    code, out, _ = run(capsys, "compute", "--param", "dichromatic", "--input", c3)
    assert (code, out) == (0, "dichromatic 2\n")


def test_compute_json_document(capsys, c3):
    code, out, _ = run(capsys, "compute", "--param", "star", "--input", c3, "--json")
    assert code == 0
    document = json.loads(out)
    assert document["param"] == "star"
    assert document["value"] == {"num": "3", "den": "2"}
    witness = document["witness"]
    assert (witness["k"], witness["d"]) == (3, 2)
    assert len(witness["colours"]) == 3


def test_compute_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(serialize(dicycle(4))))
    code, out, _ = run(capsys, "compute", "--param", "alpha", "--input", "-")
    assert (code, out) == (0, "alpha 3\n")


def test_compute_digirth_of_acyclic_input(capsys, tmp_path):
    path = tmp_path / "path.dg"
    path.write_text("p dg 3 2\na 0 1\na 1 2\n")
    code, out, _ = run(capsys, "compute", "--param", "digirth", "--input", str(path))
    assert (code, out) == (0, "digirth inf\n")
    code, out, _ = run(
        capsys, "compute", "--param", "digirth", "--input", str(path), "--json"
    )
    assert code == 0
    assert json.loads(out)["value"] is None


def test_compute_va_needs_a_graph(capsys, c3, c4_graph):
    code, _, err = run(capsys, "compute", "--param", "va", "--input", c3)
    assert code == 2
    assert "'p ug' input" in err
    code, out, _ = run(capsys, "compute", "--param", "va", "--input", c4_graph)
    assert (code, out) == (0, "va 4/3\n")


def test_compute_star_rejects_graph_input(capsys, c4_graph):
    code, _, err = run(capsys, "compute", "--param", "star", "--input", c4_graph)
    assert code == 2
    assert "'p dg' input" in err


def test_compute_paranoid_agrees(capsys, c3):
    base = run(capsys, "compute", "--param", "circular", "--input", c3)
    paranoid = run(
        capsys, "compute", "--param", "circular", "--input", c3, "--paranoid"
    )
    assert base[:2] == paranoid[:2] == (0, "circular 3/2\n")


def test_compute_fractional_cap(capsys, tmp_path):
    path = tmp_path / "c5.dg"
    path.write_text(serialize(dicycle(5)))
    code, _, err = run(
        capsys, "compute", "--param", "fractional", "--input", str(path), "--cap", "4"
    )
    assert code == 3
    assert "exceed" in err


def test_compute_missing_file(capsys):
    code, _, err = run(capsys, "compute", "--param", "star", "--input", "/nope.dg")
    assert code == 2
    assert "error:" in err


def test_compute_malformed_input(capsys, tmp_path):
    path = tmp_path / "bad.dg"
    path.write_text("p dg 2 1\na 0 5\n")
    code, _, err = run(capsys, "compute", "--param", "star", "--input", str(path))
    assert code == 2
    assert "out of range" in err


# ----------------------------------------------------------------------------
# verify


def test_verify_accepts_a_good_colouring(capsys, c3, tmp_path):
    col = tmp_path / "good.col"
    col.write_text("0 0\n1 1\n2 2\n")
    code, out, _ = run(
        capsys,
        *("verify", "--kind", "acyclic", "--k", "3", "--d", "2"),
        *("--input", c3, "--colouring", str(col)),
    )
    assert (code, out) == (0, "OK\n")


def test_verify_rejects_a_bad_colouring(capsys, c3, tmp_path):
    col = tmp_path / "bad.col"
    col.write_text("0 0\n1 0\n2 0\n")
    code, out, _ = run(
        capsys,
        *("verify", "--kind", "acyclic", "--k", "3", "--d", "2"),
        *("--input", c3, "--colouring", str(col)),
    )
    assert code == 1
    assert out.startswith("cyclic-window")


def test_verify_tree_kind_takes_graphs(capsys, c4_graph, tmp_path):
    col = tmp_path / "tree.col"
    col.write_text("0 0\n1 1\n2 2\n3 3\n")
    code, out, _ = run(
        capsys,
        *("verify", "--kind", "tree", "--k", "4", "--d", "3"),
        *("--input", c4_graph, "--colouring", str(col)),
    )
    assert (code, out) == (0, "OK\n")


def test_verify_malformed_colouring(capsys, c3, tmp_path):
    col = tmp_path / "short.col"
    col.write_text("0 0\n")
    code, _, err = run(
        capsys,
        *("verify", "--kind", "acyclic", "--k", "3", "--d", "2"),
        *("--input", c3, "--colouring", str(col)),
    )
    assert code == 2
    assert "missing colour" in err


def test_compute_then_verify_pipeline(capsys, c3, tmp_path):
    code, out, _ = run(capsys, "compute", "--param", "star", "--input", c3, "--json")
    assert code == 0
    witness = json.loads(out)["witness"]
    col = tmp_path / "w.col"
    col.write_text("".join(f"{v} {c}\n" for v, c in enumerate(witness["colours"])))
    code, out, _ = run(
        capsys,
        *("verify", "--kind", "acyclic"),
        *("--k", str(witness["k"]), "--d", str(witness["d"])),
        *("--input", c3, "--colouring", str(col)),
    )
    assert (code, out) == (0, "OK\n")


# ----------------------------------------------------------------------------
# generate


def test_generate_to_stdout(capsys):
    code, out, _ = run(capsys, "generate", "--family", "dicycle", "--n", "4")
    assert code == 0
    assert parse_digraph(out) == dicycle(4)


def test_generate_to_file(capsys, tmp_path):
    out_path = tmp_path / "w4.ug"
    code, _, _ = run(
        capsys, "generate", "--family", "wheel", "--k", "4", "--out", str(out_path)
    )
    assert code == 0
    assert parse_digraph(out_path.read_text()) == wheel(4)


def test_generate_transform_needs_input(capsys, c3, tmp_path):
    code, _, err = run(capsys, "generate", "--family", "add-source")
    assert code == 2
    assert "needs an input" in err
    code, out, _ = run(capsys, "generate", "--family", "add-source", "--input", c3)
    assert code == 0
    assert parse_digraph(out).n == 4


def test_generate_missing_parameter(capsys):
    code, _, err = run(capsys, "generate", "--family", "circulant", "--k", "5")
    assert code == 2
    assert "needs --d" in err


def test_generate_orient_seed(capsys):
    code, first, _ = run(
        capsys,
        *("generate", "--family", "wheel", "--k", "4", "--orient-seed", "9"),
    )
    assert code == 0
    D = parse_digraph(first)
    assert underlying_graph(D) == wheel(4)
    code, second, _ = run(
        capsys,
        *("generate", "--family", "wheel", "--k", "4", "--orient-seed", "9"),
    )
    assert first == second
    code, _, err = run(
        capsys,
        *("generate", "--family", "dicycle", "--n", "3", "--orient-seed", "9"),
    )
    assert code == 2
    assert "graph families" in err


# ----------------------------------------------------------------------------
# sweep


def test_sweep_prints_value_and_writes_witness(capsys, c4_graph, tmp_path):
    out_path = tmp_path / "best.dg"
    code, out, _ = run(
        capsys,
        *("sweep", "--param", "star", "--input", c4_graph, "--out", str(out_path)),
    )
    assert (code, out) == (0, "star 4/3\n")
    best = parse_digraph(out_path.read_text())
    assert star_dichromatic(best).value == star_dichromatic(dicycle(4)).value


def test_sweep_cap(capsys, tmp_path):
    path = tmp_path / "w5.ug"
    path.write_text(serialize(wheel(5)))
    code, _, err = run(
        capsys, "sweep", "--param", "star", "--input", str(path), "--cap", "6"
    )
    assert code == 3
    assert "exceed" in err


def test_sweep_wheel_symmetry(capsys, tmp_path):
    path = tmp_path / "w3.ug"
    path.write_text(serialize(wheel(3)))
    code, out, _ = run(
        capsys,
        *("sweep", "--param", "star", "--input", str(path), "--wheel-symmetry", "3"),
    )
    assert (code, out) == (0, "star 3/2\n")


# ----------------------------------------------------------------------------
# reproduce


def test_reproduce_single_group(capsys):
    code, out, _ = run(capsys, "reproduce", "--only", "dicycles")
    assert code == 0
    lines = out.strip().split("\n")
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("rows pass")


def test_reproduce_rejects_unknown_group(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["reproduce", "--only", "everything"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_serialize_colouring_roundtrips_through_verify(capsys, c3, tmp_path):
    witness = star_dichromatic(dicycle(3)).witness
    col = tmp_path / "w.col"
    col.write_text(serialize_colouring(witness))
    code, out, _ = run(
        capsys,
        *("verify", "--kind", "acyclic", "--k", str(witness.k), "--d", str(witness.d)),
        *("--input", c3, "--colouring", str(col)),
    )
    assert (code, out) == (0, "OK\n")
