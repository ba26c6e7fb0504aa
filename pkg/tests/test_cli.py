"""CLI surface: exit codes, pipelines, formats, output files."""

import json

import pytest

import polycensus as pc
from polycensus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def feed(monkeypatch, text):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


def test_enumerate_block_counts(capsys):
    code, out, err = run(capsys, "enumerate", "--q", "12")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 12
    for line in lines:
        g = pc.decode(line)
        assert g.q == 12 and pc.is_polyhedral(g)


def test_enumerate_single_order(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "14", "--p", "8")
    assert code == 0
    assert len(out.splitlines()) == 42
    code, out, _ = run(capsys, "enumerate", "--q", "6")
    assert code == 0
    assert out.splitlines() == ["C~"]


def test_enumerate_empty_block_is_not_an_error(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "14", "--p", "10")
    assert code == 0
    assert out == ""


def test_enumerate_bound_violation(capsys):
    code, out, err = run(capsys, "enumerate", "--q", "5")
    assert code == 2
    assert "error" in err


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "14", "--p", "8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert len(doc["entries"]) == 42
    assert all(e["p"] == 8 for e in doc["entries"])


def test_enumerate_dot_files(capsys, tmp_path):
    code, _, _ = run(
        capsys, "enumerate", "--q", "9", "--format", "dot", "--out", str(tmp_path / "d")
    )
    assert code == 0
    names = sorted(f.name for f in (tmp_path / "d").iterdir())
    assert names == ["0905.01.dot", "0906.01.dot"]
    text = (tmp_path / "d" / "0905.01.dot").read_text()
    assert text.startswith('graph "0905.01"')


def test_outdir_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("POLYCENSUS_OUTDIR", str(tmp_path))
    code, _, _ = run(capsys, "enumerate", "--q", "6", "--format", "dot", "--out", "rel")
    assert code == 0
    assert (tmp_path / "rel" / "0604.01.dot").exists()


def test_classify(capsys):
    code, out, err = run(capsys, "classify")
    assert code == 0 and err == ""
    assert "solutions: 3" in out
    assert "g_1408.12" in out and "g_1408.13" in out and "g_1408.39" in out


def test_classify_report_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "classify", "--report", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert len(doc["candidate_rows"]) == 3
    assert len(doc["solutions"]) == 3


def test_classify_no_prune(capsys):
    code, out, _ = run(capsys, "classify", "--no-prune")
    assert code == 0
    assert "agree on the solution certificates" in out


def test_complement_pipeline(capsys, monkeypatch):
    feed(monkeypatch, "C~\n")
    code, out, _ = run(capsys, "complement")
    assert code == 0
    assert pc.decode(out.strip()) == pc.complete(4).complement()


def test_complement_twice_is_identity(capsys):
    line = pc.encode(pc.wheel(5))
    code, once, _ = run(capsys, "complement", line)
    code, twice, _ = run(capsys, "complement", once.strip())
    assert twice.strip() == line


def test_dual_subcommand(capsys):
    code, out, _ = run(capsys, "dual", "C~")
    assert code == 0
    assert out.strip() == "C~"  # the tetrahedron is its own dual
    code, _, err = run(capsys, "dual", "Bw")
    assert code == 2
    assert "polyhedral" in err


def test_check_subcommand(capsys):
    code, out, _ = run(capsys, "check", "C~")
    assert code == 0
    assert out.strip() == (
        "planar=true 3-connected=true polyhedral=true "
        "self-dual=true self-complementary=false"
    )
    code, out, _ = run(capsys, "check", "Dhc")  # C5
    assert out.strip() == (
        "planar=true 3-connected=false polyhedral=false "
        "self-dual=false self-complementary=true"
    )


def test_malformed_graph6_reports_position(capsys):
    code, _, err = run(capsys, "check", "C!")
    assert code == 2
    assert "position 1" in err


def test_empty_stdin_is_an_input_error(capsys, monkeypatch):
    feed(monkeypatch, "")
    code, _, err = run(capsys, "complement")
    assert code == 2
    assert "error" in err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_pipeline_chain(capsys, monkeypatch):
    # enumerate | dual: every line decodes and stays polyhedral
    code, out, _ = run(capsys, "enumerate", "--q", "11")
    feed(monkeypatch, out)
    code, out2, _ = run(capsys, "dual")
    assert code == 0
    duals = [pc.decode(line) for line in out2.splitlines()]
    assert len(duals) == 4
    assert all(pc.is_polyhedral(d) for d in duals)
