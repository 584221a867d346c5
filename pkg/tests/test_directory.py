import json
import io

import pytest

from grover_sim.cli import main
from grover_sim.directory import (
    DirectoryError,
    parse_directory,
    qubits_for,
    search_directory,
)


def write(tmp_path, text, name="dir.txt", encoding="utf-8"):
    path = tmp_path / name
    path.write_bytes(text.encode(encoding) if isinstance(text, str) else text)
    return str(path)


def invoke(*argv):
    out = io.StringIO()
    return main(list(argv), out=out), out.getvalue()


def test_parse_assigns_load_order():
    recs = parse_directory("alice,555-0101\nbob,555-0102\r\n\ncarol, 555-0103\n")
    assert [(r.key, r.value, r.index) for r in recs] == [
        ("alice", "555-0101", 0),
        ("bob", "555-0102", 1),
        ("carol", "555-0103", 2),
    ]


def test_number_may_contain_commas():
    (rec,) = parse_directory("x,+1 555, ext 4\n")
    assert rec.value == "+1 555, ext 4"


def test_malformed_line_reports_number():
    with pytest.raises(DirectoryError) as err:
        parse_directory("a,1\nb,2\nno comma here\n")
    assert err.value.line == 3


@pytest.mark.parametrize("count, n", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (1000, 10), (1024, 10), (1025, 11)])
def test_padding(count, n):
    assert qubits_for(count) == n


def test_four_records_exact():
    recs = parse_directory("a,1\nb,2\nc,3\nd,4\n")
    report = search_directory(recs, "d", seed=0)
    assert report["success_prob"] == pytest.approx(1.0, abs=1e-12)
    assert report["found"] and report["number"] == "4"
    assert report["sampled_index"] == 3
    assert report["oracle_queries"] == 1
    assert report["classical_expected_queries"] == 2


def test_thousand_records(tmp_path):
    lines = "".join(f"person{i:04d},555-{i:04d}\n" for i in range(1000))
    code, text = invoke("directory", "--file", write(tmp_path, lines), "--name", "person0733", "--seed", "5")
    assert code == 0
    report = json.loads(text)
    assert report["padded_size"] == 1024
    assert report["oracle_queries"] <= 805
    assert report["success_prob"] >= 0.5
    assert report["classical_expected_queries"] == 500
    if report["found"]:
        assert report["number"] == "555-0733"


def test_miss_is_reported_honestly():
    # N=2: one record plus one padding slot, success probability exactly 1/2
    recs = parse_directory("solo,42\nother,43\n")
    reports = [search_directory(recs, "solo", seed=s) for s in range(40)]
    assert {r["found"] for r in reports} == {True, False}
    miss = next(r for r in reports if not r["found"])
    assert miss["number"] is None
    assert miss["sampled_index"] == 1


def test_retries_accumulate_queries():
    recs = parse_directory("".join(f"k{i},{i}\n" for i in range(3)))  # N=4, exact hit
    report = search_directory(recs, "k1", retries=3)
    assert report["attempts"] == 1 and report["oracle_queries"] == 1

    recs = parse_directory("solo,42\nother,43\n")  # N=2, AUTO = 0 iterations
    seed = next(s for s in range(40) if not search_directory(recs, "solo", seed=s)["found"])
    report = search_directory(recs, "solo", seed=seed, retries=5)
    assert report["attempts"] >= 2


def test_deterministic_output(tmp_path):
    path = write(tmp_path, "".join(f"n{i},{i}\n" for i in range(37)))
    assert invoke("directory", "--file", path, "--name", "n20", "--seed", "9") == invoke(
        "directory", "--file", path, "--name", "n20", "--seed", "9"
    )


@pytest.mark.parametrize(
    "content, key, expect",
    [
        ("a,1\nb,2\n", "zed", "not in directory"),
        ("a,1\nb,2\na,3\n", "a", "appears 2 times"),
        ("a,1\nbroken\n", "a", "line 2"),
        ("", "a", "empty"),
        (b"a,1\n\xff\xfe,2\n", "a", "line 2"),
    ],
)
def test_input_errors_exit_2(tmp_path, capsys, content, key, expect):
    code, _ = invoke("directory", "--file", write(tmp_path, content), "--name", key)
    assert code == 2
    assert expect in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    code, _ = invoke("directory", "--file", str(tmp_path / "nope.txt"), "--name", "a")
    assert code == 2
    assert "cannot read" in capsys.readouterr().err


def test_utf8_names(tmp_path):
    path = write(tmp_path, "Zoë,1\nJosé,2\n李,3\n")
    code, text = invoke("directory", "--file", path, "--name", "李")
    assert code == 0
    assert json.loads(text)["name"] == "李"
