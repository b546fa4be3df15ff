import csv
import io
import time

import pytest

from oppm import bench
from oppm.cli import main
from oppm.fileio import ParseError, read_matrix, read_sequence, write_matrix
from oppm.match2d import Matrix


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    return write


def test_gen_is_deterministic(tmp_path):
    for run in ("a", "b"):
        assert main(["gen", "--n", "300", "--m", "7", "--seed", "42", "--trials", "2", "--out", str(tmp_path / run)]) == 0
    for name in ("text-0.txt", "pattern-0.txt", "text-1.txt", "pattern-1.txt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    assert (tmp_path / "a" / "text-0.txt").read_bytes() != (tmp_path / "a" / "text-1.txt").read_bytes()


def test_gen_sigma_one_is_constant(tmp_path):
    main(["gen", "--n", "50", "--m", "3", "--sigma", "1", "--out", str(tmp_path)])
    assert set(read_sequence(tmp_path / "text-0.txt")) == {1}


def test_gen_2d_writes_matrices(tmp_path):
    main(["gen", "--dim", "2", "--n", "6", "--m", "2", "--out", str(tmp_path)])
    t = read_matrix(tmp_path / "text-0.txt")
    p = read_matrix(tmp_path / "pattern-0.txt")
    assert (t.width, t.height, p.width, p.height) == (6, 6, 2, 2)


@pytest.mark.parametrize("argv", [["--n", "0", "--m", "1"], ["--n", "3", "--m", "4"], ["--n", "3", "--m", "1", "--sigma", "0"]])
def test_gen_rejects_bad_sizes(tmp_path, argv):
    with pytest.raises(SystemExit) as exc:
        main(["gen", *argv, "--out", str(tmp_path)])
    assert exc.value.code == 2


def test_generate_million_chars_quickly():
    start = time.perf_counter()
    text, _ = bench.generate(1, 1_000_000, 10, 1000, 0)
    elapsed = time.perf_counter() - start
    assert len(text) == 1_000_000 and min(text) >= 1 and max(text) <= 1000
    assert elapsed < 1.0


@pytest.mark.parametrize("algo", ["duel", "kmp", "naive"])
def test_match_1d_output(files, capsys, algo):
    t = files("t.txt", "10 50 30\n60 40\n")
    p = files("p.txt", "1 3 2\n")
    assert main(["match", str(t), str(p), "--algo", algo]) == 0
    assert capsys.readouterr().out == "1\n3\n"


def test_match_stats_block(files, capsys):
    t = files("t.txt", "10 50 30 60 40\n")
    p = files("p.txt", "1 3 2\n")
    main(["match", str(t), str(p), "--stats"])
    out = capsys.readouterr().out.splitlines()
    assert out[:2] == ["1", "3"]
    assert any(line.startswith("# time_ns=") and "comparisons=" in line for line in out)
    assert any(line.startswith("# stage sweeping:") for line in out)


@pytest.mark.parametrize("algo", ["duel", "reduction2d", "kmp", "naive"])
def test_match_2d_self(files, capsys, algo):
    p = files("p.txt", "2 2\n1 2\n4 3\n")
    main(["match", "--dim", "2", "--algo", algo, str(p), str(p)])
    assert capsys.readouterr().out == "1 1\n"


def test_match_parse_error_reports_line(files, capsys):
    t = files("t.txt", "1 2\n3 x\n")
    p = files("p.txt", "1 2\n")
    assert main(["match", str(t), str(p)]) == 2
    assert "t.txt:2:" in capsys.readouterr().err


def test_matrix_parse_errors(files):
    with pytest.raises(ParseError) as exc:
        read_matrix(files("m1.txt", "2 2\n1 2\n3\n"))
    assert exc.value.line == 3
    with pytest.raises(ParseError) as exc:
        read_matrix(files("m2.txt", "2 3\n1 2\n3 4\n"))
    with pytest.raises(ParseError) as exc:
        read_matrix(files("m3.txt", "2\n"))
    assert exc.value.line == 1


def test_matrix_roundtrip(tmp_path):
    m = Matrix.from_rows([[1, -2, 3], [4, 5, -6]])
    write_matrix(tmp_path / "m.txt", m)
    assert read_matrix(tmp_path / "m.txt") == m


def test_match_pattern_longer_than_text(files, capsys, caplog):
    t = files("t.txt", "1 2\n")
    p = files("p.txt", "1 2 3\n")
    assert main(["match", str(t), str(p)]) == 0
    assert capsys.readouterr().out == ""
    assert "pattern larger than text" in caplog.text


def test_naive_and_duel_agree_on_generated_workload(tmp_path, capsys):
    main(["gen", "--n", "400", "--m", "3", "--sigma", "4", "--seed", "5", "--out", str(tmp_path)])
    outs = []
    for algo in ("duel", "naive", "kmp"):
        main(["match", str(tmp_path / "text-0.txt"), str(tmp_path / "pattern-0.txt"), "--algo", algo])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2] and outs[0]


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_bench_row_count_and_header(tmp_path):
    out = tmp_path / "b.csv"
    main(["bench", "--algo", "duel,kmp", "--n", "200,300,400", "--m", "5", "--trials", "2", "--out", str(out)])
    data = out.read_bytes()
    assert b"\r" not in data
    lines = data.decode("utf-8").splitlines()
    assert lines[0] == "algo,dim,n,m,sigma,trial,seed,time_ns,comparisons"
    assert len(lines) == 1 + 12
    rows = read_csv(data.decode())
    keys = [(r["algo"], int(r["n"]), int(r["m"]), int(r["trial"])) for r in rows]
    assert keys == sorted(keys)


def test_bench_comparisons_reproducible(tmp_path):
    args = ["bench", "--algo", "duel,kmp,naive", "--n", "500", "--m", "4,9", "--trials", "3", "--seed", "9"]
    main([*args, "--out", str(tmp_path / "1.csv")])
    main([*args, "--out", str(tmp_path / "2.csv")])
    first = read_csv((tmp_path / "1.csv").read_text())
    second = read_csv((tmp_path / "2.csv").read_text())
    assert [r["comparisons"] for r in first] == [r["comparisons"] for r in second]


def test_bench_2d(tmp_path):
    out = tmp_path / "b.csv"
    main(["bench", "--dim", "2", "--algo", "duel,reduction2d", "--n", "12", "--m", "2,3", "--sigma", "5", "--out", str(out)])
    assert len(read_csv(out.read_text())) == 4


def test_bench_rejects_unknown_algo(tmp_path):
    with pytest.raises(SystemExit):
        main(["bench", "--algo", "reduction2d", "--n", "10", "--m", "2"])


def test_summarize(tmp_path, capsys):
    out = tmp_path / "b.csv"
    main(["bench", "--algo", "duel,kmp", "--n", "300", "--m", "5", "--trials", "3", "--out", str(out)])
    main(["summarize", str(out)])
    rows = read_csv(capsys.readouterr().out)
    assert [(r["algo"], r["trials"]) for r in rows] == [("duel", "3"), ("kmp", "3")]
    raw = read_csv(out.read_text())
    mean = sum(int(r["comparisons"]) for r in raw if r["algo"] == "duel") / 3
    assert float(rows[0]["mean_comparisons"]) == pytest.approx(mean)


def test_preset_grid():
    points = bench.grid_points([], [], "paper-small")
    assert (100_000, 10) in points and (10_000, 10) in points and (100_000, 100) in points
    assert max(n for n, _ in points) == 100_000
    paper = bench.grid_points([], [], "paper")
    assert (1_000_000, 5) in paper and (100_000, 10) in paper


def test_run_match_report_stages():
    text, pattern = bench.generate(1, 2000, 6, 1000, 1)
    rep = bench.run_match("duel", 1, text, pattern)
    assert set(rep.stages) == {"preprocess", "dueling", "sweeping"}
    assert rep.comparisons == rep.stages["dueling"]["comparisons"] + rep.stages["sweeping"]["comparisons"]
    assert rep.positions == bench.run_match("kmp", 1, text, pattern).positions
