import json

import pytest

from lcbs.cli import (BENCH_COLUMNS, EXIT_FAIL, EXIT_IO, EXIT_OK,
                      EXIT_REFUSED, format_witness_file, main,
                      parse_witness_file)
from lcbs.core import MatchPoint, Witness
from lcbs.instances import ParseError

A_TEXT = "2 1 3 4 6 5 4\n"
B_TEXT = "1 2 3 5 6 4\n"


@pytest.fixture()
def pair_files(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text(A_TEXT)
    b.write_text(B_TEXT)
    return str(a), str(b)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -------------------------------------------------------------------- solve


def test_solve_plain(pair_files, capsys):
    a, b = pair_files
    code, out, err = run(capsys, "solve", a, b, "--engine", "dense")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "length 4"
    assert "engine dense" in lines
    assert "matches 7" in lines
    assert "peak 4 4 6" in lines


def test_solve_json_schema_and_determinism(pair_files, capsys):
    a, b = pair_files
    docs = []
    for _ in range(2):
        code, out, _ = run(capsys, "solve", a, b, "--engine", "sparse",
                           "--witness", "--json")
        assert code == EXIT_OK
        docs.append(json.loads(out))
    assert list(docs[0]) == ["engine", "n", "m", "matches", "length",
                             "witness", "peak", "elapsed_ms", "aux_elements",
                             "probes"]
    for d in docs:
        d.pop("elapsed_ms")
    assert docs[0] == docs[1]
    d = docs[0]
    assert d["engine"] == "sparse" and d["length"] == 4
    assert d["witness"]["pairs"] == [[0, 1], [2, 2], [4, 4], [6, 5]]
    assert d["witness"]["values"] == [2, 3, 6, 4]
    assert d["witness"]["peak_pos"] == 2
    assert d["peak"] == {"i": 4, "j": 4, "value": 6}
    assert d["probes"] >= 14


def test_solve_json_length_only_rolling_has_no_peak(pair_files, capsys):
    a, b = pair_files
    code, out, _ = run(capsys, "solve", a, b, "--engine", "rolling", "--json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert "peak" not in d and "witness" not in d and "probes" not in d
    assert d["length"] == 4


def test_solve_auto_reports_resolved_engine(pair_files, capsys):
    a, b = pair_files
    code, out, _ = run(capsys, "solve", a, b, "--json")
    assert code == EXIT_OK
    assert json.loads(out)["engine"] in ("dense", "rolling", "sparse")


def test_solve_witness_roundtrip_through_verify(pair_files, tmp_path, capsys):
    a, b = pair_files
    w = str(tmp_path / "w.txt")
    for engine in ("dense", "rolling", "sparse", "oracle"):
        code, _, _ = run(capsys, "solve", a, b, "--engine", engine,
                         "--witness-out", w)
        assert code == EXIT_OK
        code, out, _ = run(capsys, "verify", a, b, w)
        assert code == EXIT_OK
        assert out.strip() == "witness ok: length 4"


def test_solve_json_witness_roundtrips_into_verify(pair_files, tmp_path,
                                                   capsys):
    a, b = pair_files
    code, out, _ = run(capsys, "solve", a, b, "--witness", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    lines = [f"{i} {j}" for i, j in doc["witness"]["pairs"]]
    lines.append(f"peak {doc['witness']['peak_pos']}")
    w = tmp_path / "w.txt"
    w.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", a, b, str(w))
    assert code == EXIT_OK
    assert out.strip() == f"witness ok: length {doc['length']}"


def test_solve_empty_side(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("\n")
    b.write_text(B_TEXT)
    code, out, _ = run(capsys, "solve", str(a), str(b), "--json")
    assert code == EXIT_OK
    assert json.loads(out)["length"] == 0


def test_solve_missing_file(tmp_path, capsys):
    a = tmp_path / "a.txt"
    a.write_text(A_TEXT)
    code, _, err = run(capsys, "solve", str(a), str(tmp_path / "nope.txt"))
    assert code == EXIT_IO
    assert "error" in err


def test_solve_bad_symbol(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("1 2 x\n")
    b.write_text("1\n")
    code, _, err = run(capsys, "solve", str(a), str(b))
    assert code == EXIT_IO and "not an integer" in err
    a.write_text("1 99999999999999999999\n")
    code, _, err = run(capsys, "solve", str(a), str(b))
    assert code == EXIT_IO and "64-bit" in err


def test_solve_oracle_refusal(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text(" ".join(["7"] * 30) + "\n")
    b.write_text(" ".join(["7"] * 30) + "\n")
    code, _, err = run(capsys, "solve", str(a), str(b), "--engine", "oracle")
    assert code == EXIT_REFUSED
    assert "refused" in err


# ---------------------------------------------------------------------- gen


def test_gen_deterministic(tmp_path, capsys):
    outs = []
    for rep in range(2):
        pa = tmp_path / f"a{rep}.txt"
        pb = tmp_path / f"b{rep}.txt"
        code, _, _ = run(capsys, "gen", "--n", "40", "--m", "30", "--sigma",
                         "7", "--seed", "11", "--out-a", str(pa),
                         "--out-b", str(pb))
        assert code == EXIT_OK
        outs.append(pa.read_text() + "|" + pb.read_text())
    assert outs[0] == outs[1]
    toks = outs[0].split("|")[0].split()
    assert len(toks) == 40
    assert all(1 <= int(t) <= 7 for t in toks)
    pa = tmp_path / "other.txt"
    code, _, _ = run(capsys, "gen", "--n", "40", "--m", "30", "--sigma", "7",
                     "--seed", "12", "--out-a", str(pa), "--out-b",
                     str(tmp_path / "ob.txt"))
    assert code == EXIT_OK
    assert pa.read_text() != outs[0].split("|")[0]


def test_gen_match_density_tracks_alphabet(tmp_path, capsys):
    # E[M] = n*m / sigma; allow three binomial standard deviations
    pa = tmp_path / "a.txt"
    pb = tmp_path / "b.txt"
    code, _, _ = run(capsys, "gen", "--n", "1000", "--m", "1000", "--sigma",
                     "1000", "--seed", "42", "--out-a", str(pa),
                     "--out-b", str(pb))
    assert code == EXIT_OK
    a = [int(t) for t in pa.read_text().split()]
    b = [int(t) for t in pb.read_text().split()]
    counts = {}
    for x in a:
        counts[x] = counts.get(x, 0) + 1
    M = sum(counts.get(y, 0) for y in b)
    expect = 1000 * 1000 / 1000
    slack = 3 * (1000 * 1000 * (1 / 1000) * (1 - 1 / 1000)) ** 0.5
    assert abs(M - expect) <= slack, (M, expect, slack)


def test_gen_rejects_bad_sigma(tmp_path, capsys):
    code, _, err = run(capsys, "gen", "--n", "4", "--m", "4", "--sigma", "0",
                       "--out-a", str(tmp_path / "a"), "--out-b",
                       str(tmp_path / "b"))
    assert code == EXIT_IO and "sigma" in err


# ------------------------------------------------------------------- verify


def test_verify_rejects_invalid_chain(pair_files, tmp_path, capsys):
    a, b = pair_files
    w = tmp_path / "w.txt"
    # wrong order: j decreases
    w.write_text("1 0\n2 2\n4 4\n6 3\npeak 2\n")
    code, out, _ = run(capsys, "verify", a, b, str(w))
    assert code == EXIT_FAIL
    assert "j not strictly increasing" in out
    # not a match
    w.write_text("0 0\npeak 0\n")
    code, out, _ = run(capsys, "verify", a, b, str(w))
    assert code == EXIT_FAIL and "not a match" in out
    # broken rise: 6 then 4 with the peak at the end
    w.write_text("4 4\n6 5\npeak 1\n")
    code, out, _ = run(capsys, "verify", a, b, str(w))
    assert code == EXIT_FAIL and "increasing up to the peak" in out


def test_verify_empty_witness_ok(pair_files, tmp_path, capsys):
    a, b = pair_files
    w = tmp_path / "w.txt"
    w.write_text("")
    code, out, _ = run(capsys, "verify", a, b, str(w))
    assert code == EXIT_OK and "length 0" in out


@pytest.mark.parametrize("text,msg", [
    ("1 0\n2 2\n", "missing peak line"),
    ("peak 0\n", "peak line without pair lines"),
    ("1 0\npeak 3\n", "peak index out of range"),
    ("1 0\npeak -1\n", "peak index out of range"),
    ("1 0\npeak 0\n2 2\n", "pair line after the peak line"),
    ("1 0\npeak 0\npeak 0\n", "duplicate peak line"),
    ("1 0 9\npeak 0\n", "expected 'i j'"),
    ("1 z\npeak 0\n", "expected integers"),
    ("peak\n", "peak line needs one index"),
])
def test_verify_parse_errors(pair_files, tmp_path, capsys, text, msg):
    a, b = pair_files
    w = tmp_path / "w.txt"
    w.write_text(text)
    code, _, err = run(capsys, "verify", a, b, str(w))
    assert code == EXIT_IO
    assert msg in err


def test_witness_file_format_helpers():
    pts = (MatchPoint(1, 0, 1), MatchPoint(2, 2, 3))
    text = format_witness_file(Witness(pts, 1))
    assert text == "1 0\n2 2\npeak 1\n"
    assert parse_witness_file(text) == ([(1, 0), (2, 2)], 1)
    assert format_witness_file(Witness((), None)) == ""
    assert parse_witness_file("") == ([], None)
    with pytest.raises(ParseError):
        parse_witness_file("1 0\n")


# -------------------------------------------------------------------- bench


def test_bench_csv(tmp_path, capsys):
    csv_path = tmp_path / "out.csv"
    code, _, _ = run(capsys, "bench", "--sizes", "8,14", "--sigmas", "2,5",
                     "--engines", "dense,rolling,sparse", "--reps", "2",
                     "--seed", "3", "--csv", str(csv_path))
    assert code == EXIT_OK
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == ",".join(BENCH_COLUMNS)
    assert len(lines) == 1 + 2 * 2 * 2 * 3
    first = lines[1].split(",")
    assert first[0] == "dense"
    assert first[1] == "8" and first[2] == "8"
    # dense and rolling rows leave probes empty; sparse rows fill it
    for line in lines[1:]:
        cells = line.split(",")
        assert (cells[-1] == "") == (cells[0] != "sparse")


def test_bench_header_only_when_reps_zero(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "8", "--sigmas", "2",
                       "--reps", "0")
    assert code == EXIT_OK
    assert out.strip() == ",".join(BENCH_COLUMNS)


def test_bench_rejects_bad_engine(capsys):
    code, _, err = run(capsys, "bench", "--sizes", "8", "--sigmas", "2",
                       "--engines", "dense,oracle")
    assert code == EXIT_IO
    assert "--engines" in err


def test_bench_rejects_bad_lists(capsys):
    code, _, err = run(capsys, "bench", "--sizes", "8;9", "--sigmas", "2")
    assert code == EXIT_IO and "--sizes" in err
    code, _, err = run(capsys, "bench", "--sizes", "8", "--sigmas", ",")
    assert code == EXIT_IO and "--sigmas" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()
