import io
import json

import jsonschema
import pytest

from pretropisms.cli import BENCH_HEADER, main

REPORT_SCHEMA = {
    "type": "object",
    "required": ["mode", "rays", "validated", "stats", "wallclock_ms"],
    "properties": {
        "mode": {"enum": ["naive", "vertical", "horizontal", "oracle"]},
        "rays": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "validated": {"type": "array", "items": {"type": "boolean"}},
        "wallclock_ms": {"type": "number", "minimum": 0},
        "stats": {
            "type": "object",
            "required": ["intersections", "containments", "sum", "per_level"],
            "properties": {
                "intersections": {"type": "integer", "minimum": 0},
                "containments": {"type": "integer", "minimum": 0},
                "sum": {"type": "integer", "minimum": 0},
                "per_level": {"type": "array", "items": {
                    "type": "object",
                    "required": ["level", "intersections", "containments", "sum"]}},
            },
        },
    },
}


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run(argv)
    assert code == 0
    doc = json.loads(text)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return doc


def test_generate_reduced(tmp_path):
    code, text = run(["generate", "reduced-cyclic", "4", "--out", str(tmp_path)])
    assert code == 0
    files = sorted(tmp_path.iterdir())
    assert len(files) == 3 == len(text.split())
    for f in files:
        doc = json.loads(f.read_text())
        assert doc["ambient_dim"] == 3 and len(doc["points"]) == 4


def test_generate_full(tmp_path):
    assert run(["generate", "cyclic", "5", "--out", str(tmp_path)])[0] == 0
    docs = [json.loads(f.read_text()) for f in sorted(tmp_path.iterdir())]
    assert len(docs) == 5 and all(d["ambient_dim"] == 5 for d in docs)


def test_generate_bad_n(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["generate", "cyclic", "2", "--out", str(tmp_path)])
    assert exc.value.code == 2


def test_pretropisms_json():
    doc = run_json(["pretropisms", "--family", "reduced-cyclic", "--n", "4"])
    assert doc["mode"] == "horizontal"
    assert doc["rays"] == [[-1, 0, -1], [1, 0, 1]]
    st = doc["stats"]
    assert st["sum"] == st["intersections"] + st["containments"]
    assert sum(lvl["sum"] for lvl in st["per_level"]) == st["sum"]


def test_pretropisms_from_files_and_order(tmp_path):
    run(["generate", "reduced-cyclic", "4", "--out", str(tmp_path)])
    files = [str(f) for f in sorted(tmp_path.iterdir())]
    a = run_json(["pretropisms", *files])
    b = run_json(["pretropisms", *files, "--order", "2,0,1"])
    assert a["rays"] == b["rays"]
    combined = tmp_path / "all.json"
    combined.write_text(json.dumps({"supports": [json.loads(open(f).read()) for f in files]}))
    assert run_json(["pretropisms", str(combined)])["rays"] == a["rays"]


def test_pretropisms_modes_magnitudes():
    h = run_json(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--mode", "horizontal"])
    v = run_json(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--mode", "vertical"])
    # published counts for n = 4: 56 horizontal, 65 vertical
    assert 56 / 3 <= h["stats"]["sum"] <= 56 * 3
    assert 65 / 3 <= v["stats"]["sum"] <= 65 * 3
    assert h["rays"] == v["rays"]


def test_workers_byte_identical_rays():
    base = ["pretropisms", "--family", "reduced-cyclic", "--n", "4"]
    one = run_json(base + ["--workers", "1"])
    eight = run_json(base + ["--workers", "8"])
    assert json.dumps(one["rays"]) == json.dumps(eight["rays"])
    assert one["stats"] == eight["stats"]


def test_lower_hull_flag():
    doc = run_json(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--lower-hull"])
    assert doc["rays"] == [[1, 0, 1]] and doc["lower_hull"] is True


def test_oracle_mode_and_cap():
    doc = run_json(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--mode", "oracle"])
    assert doc["rays"] == [[-1, 0, -1], [1, 0, 1]]
    code, _ = run(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--mode", "oracle",
                   "--oracle-cap", "10"])
    assert code == 4


def test_dimension_mismatch(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"ambient_dim": 2, "points": [[0, 0], [1, 0]]}))
    b.write_text(json.dumps({"ambient_dim": 3, "points": [[0, 0, 0], [1, 0, 0]]}))
    assert run(["pretropisms", str(a), str(b)])[0] == 3


def test_csv_and_table_formats():
    code, text = run(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--format", "csv"])
    assert code == 0
    assert text.splitlines() == ["validated,x1,x2,x3", "1,-1,0,-1", "1,1,0,1"]
    code, text = run(["pretropisms", "--family", "reduced-cyclic", "--n", "4", "--format", "table"])
    assert code == 0 and "mode: horizontal" in text and "level 2:" in text


@pytest.mark.parametrize("n", [4, 5])
def test_verify_passes(n):
    code, text = run(["verify", "--family", "reduced-cyclic", "--n", str(n)])
    assert code == 0 and text.startswith("PASS")


def test_verify_corrupted_fixture(tmp_path):
    fixture = tmp_path / "bad.json"
    fixture.write_text(json.dumps({"rays": [[1, 0, 1], [0, 1, 0]]}))
    code, text = run(["verify", "--family", "reduced-cyclic", "--n", "4", "--expected", str(fixture)])
    assert code == 1
    assert "expected: missing [-1, 0, -1]" in text
    assert "expected: extra [0, 1, 0]" in text


def test_verify_good_fixture(tmp_path):
    fixture = tmp_path / "good.json"
    fixture.write_text(json.dumps({"rays": [[1, 0, 1], [-1, 0, -1]]}))
    assert run(["verify", "--family", "reduced-cyclic", "--n", "4", "--expected", str(fixture)])[0] == 0


def test_verify_oracle_cap():
    assert run(["verify", "--family", "reduced-cyclic", "--n", "4", "--oracle-cap", "5"])[0] == 4


def test_bench_csv():
    code, text = run(["bench", "reduced-cyclic", "4", "6"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == ",".join(BENCH_HEADER) == "n,v_int,v_con,v_sum,h_int,h_con,h_sum,ratio"
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["4", "5", "6"]
    for r in rows:
        assert int(r[3]) == int(r[1]) + int(r[2])
        assert int(r[6]) == int(r[4]) + int(r[5])
        assert float(r[7]) >= 1.0
    # the n = 5 row reproduces the published counts exactly: 750, 20, 770 and 395, 5, 400
    assert rows[1] == ["5", "750", "20", "770", "395", "5", "400", "1.92500"]


def test_bench_timeout():
    code, text = run(["bench", "reduced-cyclic", "7", "7", "--timeout-secs", "0.01"])
    assert code == 0
    assert text.splitlines()[1] == "7,timeout,timeout,timeout,timeout,timeout,timeout,timeout"


def test_bench_table():
    code, text = run(["bench", "reduced-cyclic", "4", "4", "--format", "table", "--modes", "horizontal"])
    assert code == 0
    assert text.splitlines()[1].split() == ["4", "-", "-", "-", "64", "2", "66", "-"]
