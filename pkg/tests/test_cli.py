import pytest

from chromatic import formats
from chromatic.cli import main


@pytest.fixture
def files(tmp_path):
    (tmp_path / "k33.gr").write_text(
        "p edge 6 9\n" + "".join(f"e {u} {v}\n" for u in (1, 2, 3) for v in (4, 5, 6))
        + "x 1 2 3\n"
    )
    (tmp_path / "c6.gr").write_text(
        "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n"
    )
    (tmp_path / "p6.gr").write_text(
        "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n"
    )
    (tmp_path / "one_edge.h3").write_text("p h3 3 1\nh 1 2 3\n")
    (tmp_path / "fano.h3").write_text(
        "p h3 7 7\nh 1 2 3\nh 1 4 5\nh 1 6 7\nh 2 4 6\nh 2 5 7\nh 3 4 7\nh 3 5 6\n"
    )
    (tmp_path / "fam.chs").write_text("p chs 3 1 1\nA 1 2\nB 2 3\n")
    (tmp_path / "edge.gr").write_text("p edge 2 1\ne 1 2\nx 1\n")
    (tmp_path / "edge.lst").write_text("l 1 1 2\nl 2 1 2\n")
    (tmp_path / "bad.pc").write_text("pc 1 1\npc 2 1\n")
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_solve_fall_k33_no(files, capsys):
    code, out = run(capsys, "solve", "--problem", "fall", "--in", str(files / "k33.gr"), "--k", "3")
    assert code == 0 and out.strip() == "NO"


def test_solve_h2col_fano_no(files, capsys):
    code, out = run(capsys, "solve", "--problem", "h2col", "--in", str(files / "fano.h3"))
    assert code == 0 and out.strip() == "NO"


def test_solve_chs_witness(files, capsys):
    code, out = run(capsys, "solve", "--problem", "chs", "--in", str(files / "fam.chs"))
    assert code == 0
    assert out.splitlines() == ["YES", "S 1"]


def test_solve_listcol_certificate(files, capsys):
    code, out = run(
        capsys, "solve", "--problem", "listcol",
        "--in", str(files / "edge.gr"), "--lists", str(files / "edge.lst"), "--k", "2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "YES"
    images = formats.parse_mapping("\n".join(lines[1:]) + "\n", 2)
    assert images[0] != images[1]


def test_solve_compact_and_surjhom(files, capsys):
    code, out = run(capsys, "solve", "--problem", "compact", "--in", str(files / "p6.gr"))
    assert code == 0 and out.splitlines()[0] == "NO"
    code, out = run(capsys, "solve", "--problem", "surjhom", "--in", str(files / "p6.gr"))
    assert code == 0 and out.splitlines()[0] == "YES"


def test_solve_biclique(files, capsys):
    code, out = run(capsys, "solve", "--problem", "biclique", "--in", str(files / "k33.gr"), "--k", "1")
    assert code == 0 and out.splitlines()[0] == "YES"


def test_solve_input_error_exit_10(files, capsys):
    code, _ = run(capsys, "solve", "--problem", "h2col", "--in", str(files / "missing.h3"))
    assert code == 10
    code, _ = run(capsys, "solve", "--problem", "fall", "--in", str(files / "k33.gr"))
    assert code == 10  # --k missing
    code, _ = run(capsys, "solve", "--problem", "nope", "--in", str(files / "k33.gr"))
    assert code == 10


def test_solve_precondition_exit_11(files, capsys):
    code, _ = run(
        capsys, "solve", "--problem", "preext",
        "--in", str(files / "edge.gr"), "--pre", str(files / "bad.pc"), "--k", "2",
    )
    assert code == 11  # improper precoloring


def test_reduce_thm7_and_retract_round_trip(files, capsys):
    out_prefix = files / "t7"
    code, out = run(capsys, "reduce", "--rule", "thm7", "--in", str(files / "one_edge.h3"),
                    "--out", str(out_prefix))
    assert code == 0 and "22 vertices" in out
    code, out = run(capsys, "solve", "--problem", "retract",
                    "--in", str(out_prefix) + ".gr", "--c6", str(out_prefix) + ".meta")
    assert code == 0 and out.splitlines()[0] == "YES"


def test_reduce_thm13_summary(files, capsys):
    code, out = run(capsys, "reduce", "--rule", "thm13", "--in", str(files / "one_edge.h3"),
                    "--out", str(files / "t13"))
    assert code == 0 and "9 vertices" in out
    parsed = formats.parse_bipartite((files / "t13.gr").read_text())
    assert parsed.n == 9


def test_reduce_prop12_emits_query_files(files, capsys):
    code, out = run(capsys, "reduce", "--rule", "prop12", "--in", str(files / "c6.gr"),
                    "--out", str(files / "p12"))
    assert code == 0 and "1 query file(s) emitted" in out
    q = formats.parse_precoloring((files / "p12_q1.pc").read_text(), 6)
    assert sorted(q.values()) == [1, 1, 2, 2, 3, 3]


def test_reduce_cor9_writes_complement(files, capsys):
    code, _ = run(capsys, "reduce", "--rule", "cor9", "--in", str(files / "k33.gr"),
                  "--out", str(files / "comp"))
    assert code == 0
    parsed = formats.parse_bipartite((files / "comp.gr").read_text())
    assert parsed.graph.m == 0


def test_reduce_precondition_exit_11(files, capsys):
    code, _ = run(capsys, "reduce", "--rule", "prop12", "--in", str(files / "p6.gr"),
                  "--out", str(files / "nope"))
    assert code == 11  # diameter 5 exceeds 3


def test_reduce_fmps(files, capsys):
    code, out = run(capsys, "reduce", "--rule", "fmps", "--in", str(files / "edge.gr"),
                    "--out", str(files / "flawed"), "--lists", str(files / "edge.lst"))
    assert code == 0 and "8 vertices" in out


def test_verify_flaw_suite(files, capsys):
    code, out = run(capsys, "verify", "--suite", "flaw")
    assert code == 0
    assert "suite flaw pass 1 0" in out


def test_verify_unknown_suite_exit_10(capsys):
    code, _ = run(capsys, "verify", "--suite", "bogus")
    assert code == 10


def test_verify_budget_exhaustion_exit_2(capsys):
    code, out = run(capsys, "verify", "--suite", "faik", "--budget", "0.000001")
    assert code == 2
    assert "incomplete" in out


def test_verify_seed_changes_corpus_deterministically(capsys):
    code1, out1 = run(capsys, "verify", "--suite", "cor9", "--seed", "5")
    code2, out2 = run(capsys, "verify", "--suite", "cor9", "--seed", "5")
    assert code1 == code2 == 0
    assert out1 == out2


def test_threads_env_parsing(monkeypatch):
    from chromatic.cli import _workers_from_env

    monkeypatch.delenv("CHROMATIC_THREADS", raising=False)
    assert _workers_from_env() == 1
    monkeypatch.setenv("CHROMATIC_THREADS", "4")
    assert _workers_from_env() == 4
    monkeypatch.setenv("CHROMATIC_THREADS", "0")
    assert _workers_from_env() >= 1
    monkeypatch.setenv("CHROMATIC_THREADS", "nope")
    from chromatic import InputError

    with pytest.raises(InputError):
        _workers_from_env()
