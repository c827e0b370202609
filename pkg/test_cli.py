import io

import pytest

from src import SOLVER_VERSION, families
from src.cli import EXIT_CAPABILITY, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, main
from src.graph_core import graph6_str, parse_graph6
from src.logging_store import read_report
from src.symmetry import is_isomorphic


@pytest.fixture(autouse=True)
def quiet(monkeypatch, tmp_path):
    monkeypatch.setenv("VERBOSE", "0")
    monkeypatch.setenv("DCHI_CACHE_DIR", str(tmp_path / "cache"))


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue().splitlines()


def fields(line):
    return dict(part.split("=", 1) for part in line.split())


def write_colouring(path, colours):
    path.write_text("".join(f"{v} {c}\n" for v, c in enumerate(colours)))
    return str(path)


# ---------- solve ----------

def test_solve_c6():
    code, lines = run(["solve", "EhEG"])
    assert code == EXIT_OK
    row = fields(lines[0])
    assert row["chi_D"] == "4" and row["chi"] == "2" and row["delta"] == "2"
    assert row["extremal"] == "C6"


def test_solve_single_vertex():
    code, lines = run(["solve", "@"])
    assert code == EXIT_OK
    assert fields(lines[0])["chi_D"] == "1"


def test_solve_with_cap():
    code, lines = run(["solve", "--cap", "3", "EhEG"])
    assert code == EXIT_OK
    assert fields(lines[0])["feasible"] == "false"
    code, lines = run(["solve", "--cap", "4", "--witness", "EhEG"])
    row = fields(lines[0])
    assert row["feasible"] == "true"
    assert len(row["witness"].split(",")) == 6


def test_solve_witness_pairs():
    _, lines = run(["solve", "--witness", graph6_str(families.path(3))])
    witness = dict(pair.split(":") for pair in fields(lines[0])["witness"].split(","))
    assert sorted(witness) == ["0", "1", "2"]
    assert len(set(witness.values())) == 3


def test_solve_from_file(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("# two cycles\nDhc\n\nEhEG\n")
    code, lines = run(["solve", "--file", str(path)])
    assert code == EXIT_OK
    assert [fields(line)["chi_D"] for line in lines] == ["3", "4"]


def test_enum_piped_into_solve():
    code, codes = run(["enum", "--n", "3"])
    assert code == EXIT_OK and len(codes) == 2
    code, lines = run(["solve"], stdin="\n".join(codes) + "\n")
    assert code == EXIT_OK
    assert [fields(line)["chi_D"] for line in lines] == ["3", "3"]


def test_enum_four_vertices():
    code, lines = run(["enum", "--n", "4"])
    assert code == EXIT_OK
    assert len(lines) == 6
    assert all(parse_graph6(line).n == 4 for line in lines)


# ---------- certify ----------

def test_certify_distinguishing_c5(tmp_path):
    g6 = graph6_str(families.cycle(5))
    code, lines = run(["certify", g6, write_colouring(tmp_path / "c.txt", (1, 2, 3, 1, 2))])
    assert code == EXIT_OK
    row = fields(lines[0])
    assert row["proper"] == "true" and row["distinguishing"] == "true" and row["aut_order"] == "1"


def test_certify_alternating_c6_is_not_distinguishing(tmp_path):
    g6 = graph6_str(families.cycle(6))
    code, lines = run(["certify", g6, write_colouring(tmp_path / "c.txt", (1, 2, 1, 2, 1, 2))])
    assert code == EXIT_NEGATIVE
    row = fields(lines[0])
    assert row["proper"] == "true"
    assert row["aut_order"] == "6"
    assert row["fixed"] == "-"


def test_certify_rainbow_triangle(tmp_path):
    code, _ = run(["certify", "Bw", write_colouring(tmp_path / "c.txt", (1, 2, 3))])
    assert code == EXIT_OK


def test_certify_partial_colouring(tmp_path, capsys):
    g6 = graph6_str(families.cycle(5))
    code, _ = run(["certify", g6, write_colouring(tmp_path / "c.txt", (1, 2, 3))])
    assert code == EXIT_INPUT
    assert "partial colouring" in capsys.readouterr().err


def test_certify_bad_colouring_file(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("0 1\n0 2\n")
    code, _ = run(["certify", "A_", str(path)])
    assert code == EXIT_INPUT
    code, _ = run(["certify", "A_", str(tmp_path / "missing.txt")])
    assert code == EXIT_INPUT


# ---------- classify and roots ----------

def test_classify_k33():
    code, lines = run(["classify", "EFz_"])
    assert code == EXIT_OK
    row = fields(lines[0])
    assert row["extremal"] == "balanced-bipartite,complete-multipartite"
    assert "complete-multipartite" in row["classes"].split(",")
    assert row["p"] == "3"


def test_classify_disconnected():
    _, lines = run(["classify", "A?"])
    assert fields(lines[0])["extremal"] == "disconnected"


def test_roots():
    code, lines = run(["roots", "Dhc", graph6_str(families.star(3))])
    assert code == EXIT_OK
    assert is_isomorphic(parse_graph6(fields(lines[0])["root"]), families.cycle(5))
    assert fields(lines[1])["root"] == "not-a-line-graph"


# ---------- sweeps ----------

def test_sweep_writes_report(tmp_path):
    out_path = tmp_path / "cranston.jsonl"
    code, lines = run(["sweep", "--theorem", "Cranston", "--n-max", "6", "--no-cache", "--out", str(out_path)])
    assert code == EXIT_OK
    header, records = read_report(str(out_path))
    assert header["theorem"] == "Cranston" and header["solver_version"] == SOLVER_VERSION
    assert len(records) == len(lines)
    assert sum(fields(line)["exception"] == "true" for line in lines) == 1


def test_sweep_uses_cache_dir(tmp_path):
    code, _ = run(["sweep", "--theorem", "CT-2Delta", "--n-max", "3"])
    assert code == EXIT_OK
    assert (tmp_path / "cache" / SOLVER_VERSION).is_dir()


def test_sweep_needs_override_above_seven(capsys):
    code, _ = run(["sweep", "--theorem", "CT-2Delta", "--n-max", "8", "--no-cache"])
    assert code == EXIT_INPUT
    assert "override" in capsys.readouterr().err


def test_sweep_rejects_unknown_theorem():
    with pytest.raises(SystemExit):
        main(["sweep", "--theorem", "Brooks"], out=io.StringIO())


def test_whitney_small():
    code, lines = run(["whitney", "--max-edges", "4", "--no-cache"])
    assert code == EXIT_OK
    assert lines
    for line in lines:
        row = fields(line)
        assert row["chi_index"] == row["chi_D_line"]


# ---------- exit codes ----------

def test_parse_error_reports_line(capsys):
    code, lines = run(["solve", "Dhc", "A!"])
    assert code == EXIT_INPUT
    assert len(lines) == 1
    assert "line 2" in capsys.readouterr().err


def test_mixed_sources_are_rejected(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Dhc\n")
    code, _ = run(["solve", "Dhc", "--file", str(path)])
    assert code == EXIT_INPUT


def test_disconnected_input():
    code, _ = run(["solve", "A?"])
    assert code == EXIT_INPUT


def test_oversized_input_is_a_capability_error():
    code, _ = run(["solve", graph6_str(families.cycle(11))])
    assert code == EXIT_CAPABILITY


def test_version():
    with pytest.raises(SystemExit) as info:
        main(["--version"], out=io.StringIO())
    assert info.value.code == 0
