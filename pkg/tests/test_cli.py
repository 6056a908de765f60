import csv
import io
import json

import pytest

from zfspan.cli import main, parse_csv_row
from zfspan.enumeration import labeled_graph
from zfspan.formats import to_graph6
from zfspan.isomorphism import are_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_path4(capsys):
    code, out, _ = run(capsys, "compute", "--rule", "standard", "--family", "path:4", "--json")
    rec = json.loads(out)["records"][0]
    assert code == 0 and (rec["z"], rec["f"], rec["span"]) == (1, 1, 1)


def test_compute_fig2_witness(capsys):
    code, out, _ = run(capsys, "compute", "--rule", "digraph", "--family", "fig2", "--witness",
                       "--trace", "--json")
    rec = json.loads(out)["records"][0]
    assert rec["z"] == 1 and rec["z_witness"] == [0]
    assert rec["f"] == 3 and rec["f_witness"] == [1, 2, 3] and rec["f_trace"] == []


def test_compute_skew_k2(capsys):
    code, out, _ = run(capsys, "compute", "--rule", "skew", "--family", "complete:2", "--json")
    doc = json.loads(out)
    rec = doc["records"][0]
    assert doc["schema"] == "zf-span/1"
    assert rec["z"] == 0 and rec["f"] is None and rec["span"] == 0 and rec["poly"] == [1, 2, 1]
    code, out, _ = run(capsys, "compute", "--rule", "skew", "--family", "complete:2")
    assert "1 + 2*x + x^2" in out


def test_csv_matches_json(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("\n".join(to_graph6(labeled_graph(4, i)) for i in range(0, 64, 5)) + "\n")
    _, js, _ = run(capsys, "compute", "--input", str(path), "--json", "--witness", "--trace")
    _, cs, _ = run(capsys, "compute", "--input", str(path), "--csv", "--witness", "--trace")
    rows = [parse_csv_row(r) for r in csv.DictReader(io.StringIO(cs))]
    assert rows == json.loads(js)["records"]


def test_compute_errors(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("A_\nC\n")
    code, _, err = run(capsys, "compute", "--input", str(bad))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "compute", "--family", "path:30")
    assert code == 3
    code, _, _ = run(capsys, "compute", "--rule", "standard", "--family", "dcycle:3")
    assert code == 2


def test_compute_edge_list(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n")
    _, out, _ = run(capsys, "compute", "--input", str(path), "--json")
    assert json.loads(out)["records"][0]["span"] == 1


def test_batch_nonisomorphic_order4(capsys, tmp_path):
    reps = []
    for i in range(64):
        g = labeled_graph(4, i)
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
    src = tmp_path / "g4.g6"
    src.write_text("\n".join(map(to_graph6, reps)) + "\n")
    out = tmp_path / "out.jsonl"
    code, stdout, _ = run(capsys, "batch", "--input", str(src), "--out", str(out))
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert code == 0 and len(rows) == 11
    spans = {r["input"]: r["span"] for r in rows}
    assert spans["C~"] == 0 and spans["C?"] == 0
    summary = json.loads(stdout)["summary"]
    assert summary["rows"] == 11 and summary["min_span"] == 0 and summary["max_span"] == 2


def test_batch_empty_and_malformed(capsys, tmp_path):
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    out = tmp_path / "o.jsonl"
    code, stdout, _ = run(capsys, "batch", "--input", str(empty), "--out", str(out))
    assert code == 0 and out.read_text() == "" and json.loads(stdout)["summary"]["rows"] == 0

    bad = tmp_path / "bad.g6"
    bad.write_text("A_\nzz\nBw\n")
    code, _, _ = run(capsys, "batch", "--input", str(bad), "--out", str(out), "--keep-going")
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert code == 0 and len(rows) == 3 and "error" in rows[1] and rows[1]["line"] == 2
    code, _, _ = run(capsys, "batch", "--input", str(bad), "--out", str(out))
    assert code == 2


def test_batch_csv_equals_jsonl(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("A_\nBw\nzz\nC~\n")
    j, c = tmp_path / "o.jsonl", tmp_path / "o.csv"
    run(capsys, "batch", "--input", str(src), "--out", str(j), "--keep-going")
    run(capsys, "batch", "--input", str(src), "--out", str(c), "--format", "csv", "--keep-going")
    from_json = [{k: v for k, v in json.loads(line).items() if k != "schema"}
                 for line in j.read_text().splitlines()]
    from_csv = [parse_csv_row(r) for r in csv.DictReader(io.StringIO(c.read_text()))]
    assert from_json == from_csv


@pytest.mark.parametrize("theorem, max_n", [("span0_standard", "6"), ("tree_bounds", "8"),
                                            ("digraph_span0", "4")])
def test_verify_passes(capsys, theorem, max_n):
    code, out, _ = run(capsys, "verify", "--theorem", theorem, "--max-n", max_n)
    assert code == 0 and "PASS" in out


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--theorem", "nope")[0] == 2
    assert run(capsys, "verify", "--theorem", "tree_bounds", "--max-n", "12")[0] == 3
    code, out, _ = run(capsys, "verify", "--theorem", "span_high_standard", "--max-n", "3", "--json")
    assert code == 1 and json.loads(out)["counterexamples"][0]["code"] == "A_"


def test_verify_json_worker_independent(capsys):
    _, a, _ = run(capsys, "verify", "--theorem", "skew_span0", "--max-n", "5", "--json")
    _, b, _ = run(capsys, "verify", "--theorem", "skew_span0", "--max-n", "5", "--json",
                  "--workers", "2")
    assert a == b


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--family", "complete:2")
    assert code == 0 and out.strip() == "A_"
