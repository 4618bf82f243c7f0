import io
import json
from collections import Counter

import pytest

from revsort import cli
from revsort.oracle import verify_script


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def call(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_sort_text(call):
    assert call(["sort"], "1 2 3\n") == (0, "", "")
    assert call(["sort"], "-1\n") == (0, "1 1\n", "")
    code, out, _ = call(["sort", "--verify"], "2 1\n")
    assert code == 0 and len(out.splitlines()) == 3


def test_sort_json_matches_text(call):
    _, text, _ = call(["sort"], "3 -1 2 -4\n")
    _, doc, _ = call(["sort", "--json"], "3 -1 2 -4\n")
    doc = json.loads(doc)
    assert doc["n"] == 4 and doc["distance"] == len(doc["reversals"])
    assert doc["reversals"] == [[int(t) for t in line.split()] for line in text.splitlines()]


def test_sort_from_file(call, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("2 1\n")
    code, out, _ = call(["sort", "--json", str(path)])
    assert code == 0 and json.loads(out)["distance"] == 3


@pytest.mark.parametrize("line", ["1 1", "0", "1 x", "2 3"])
def test_sort_invalid(call, line):
    code, out, err = call(["sort"], line)
    assert code == 1 and out == "" and "error" in err


def test_sort_verification_failure(call, monkeypatch):
    monkeypatch.setattr(cli, "sort", lambda raw: [(1, 1)])
    code, _, err = call(["sort", "--verify"], "2 1")
    assert code == 2 and "verification" in err


def test_gen(call):
    a, b = call(["gen", "5", "--seed", "42"]), call(["gen", "5"])
    assert a == b and a[0] == 0
    assert sorted(abs(int(t)) for t in a[1].split()) == [1, 2, 3, 4, 5]
    assert call(["gen", "1", "--seed", "3"])[1].strip() in ("1", "-1")
    assert call(["gen", "0"])[0] == 1


def test_gen_coverage():
    seen = Counter(tuple(cli.random_perm(3, seed)) for seed in range(10_000))
    assert len(seen) == 48


def test_gen_then_sort_roundtrip(call):
    for seed in range(5):
        line = " ".join(map(str, cli.random_perm(30, seed)))
        code, out, _ = call(["sort", "--verify"], line)
        script = [[int(t) for t in row.split()] for row in out.splitlines()]
        assert code == 0 and verify_script([int(t) for t in line.split()], script)


def test_bench(call, tmp_path):
    fig = tmp_path / "scaling.png"
    code, out, _ = call(["bench", "50", "100", "--figure", str(fig)])
    rows = out.splitlines()
    assert code == 0 and rows[0] == "n,seed,millis,reversals" and len(rows) == 3
    assert [r.split(",")[0] for r in rows[1:]] == ["50", "100"]
    assert fig.stat().st_size > 0
    _, again, _ = call(["bench", "50", "100"])
    assert [r.split(",")[3] for r in again.splitlines()] == [r.split(",")[3] for r in rows]


def test_oracle_subcommands(call, tmp_path):
    assert call(["oracle", "distance", "2 1"]) == (0, "3\n", "")
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert call(["oracle", "check", "1 2", str(empty)]) == (0, "ok\n", "")
    flip = tmp_path / "flip.txt"
    flip.write_text("1 1\n")
    assert call(["oracle", "check", "-1", str(flip)]) == (0, "ok\n", "")
    assert call(["oracle", "check", "2 1", str(flip)]) == (2, "fail\n", "")
    assert call(["oracle", "check", "-1"], "1 1\n") == (0, "ok\n", "")
    assert call(["oracle", "distance", "1 2 3 4 5 6 7 8 9"])[0] == 1
