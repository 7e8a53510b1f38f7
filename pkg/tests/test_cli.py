import csv
import io
import json
import re
import subprocess
import sys

import pytest

from smallgons.cli import EXIT_CERT, EXIT_OK, EXIT_USAGE, main
from smallgons.document import DocumentError, PolygonDocument, dumps_csv, load_polygon_source, loads_csv
from smallgons.families import REFERENCE_TABLE, construct_bn, construct_regular
from smallgons.render import render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestDocument:
    def test_round_trip_is_byte_identical(self):
        doc = PolygonDocument.from_instance(construct_bn(32))
        text = doc.dumps()
        again = PolygonDocument.loads(text)
        assert again.dumps() == text
        assert again.vertices == doc.vertices
        assert again.t == doc.t

    def test_seventeen_digits_restore_floats(self):
        doc = PolygonDocument.from_instance(construct_bn(64))
        raw = json.loads(doc.dumps())
        assert [tuple(v) for v in raw["vertices"]] == doc.vertices
        certs = raw["certificates"]
        assert all(certs[k] is True for k in ("is_small", "is_convex", "is_equilateral", "is_symmetric"))
        assert certs["diameter_edges"] == 63

    def test_csv_round_trip(self):
        p = construct_bn(16).polygon
        assert loads_csv(dumps_csv(p)) == p

    def test_source_sniffing(self):
        p = construct_regular(5).polygon
        assert load_polygon_source(dumps_csv(p)).polygon == p
        doc = PolygonDocument.from_instance(construct_regular(5))
        assert load_polygon_source(doc.dumps()).family == "regular"

    @pytest.mark.parametrize(
        "text",
        ["{not json", '{"family": "x"}', "0,0\n1,1\n", "0,0\n1\n0,1\n", "a,b\n1,1\n0,1\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(DocumentError):
            load_polygon_source(text)

    def test_vertex_count_mismatch(self):
        raw = json.loads(PolygonDocument.from_instance(construct_regular(5)).dumps())
        raw["n"] = 6
        with pytest.raises(DocumentError):
            PolygonDocument.loads(json.dumps(raw))


class TestRender:
    def test_b16(self):
        svg = render_svg(construct_bn(16).polygon)
        pts = re.search(r'<polygon class="boundary" points="([^"]+)"', svg).group(1).split()
        assert len(pts) == 16
        assert 'stroke-dasharray' in svg
        assert svg.count('class="diameter"') == 15

    def test_pentagram(self):
        assert render_svg(construct_regular(5).polygon).count('class="diameter"') == 5

    def test_without_graph(self):
        assert 'class="diameter"' not in render_svg(construct_regular(5).polygon, show_diameter_graph=False)

    def test_deterministic_and_upright(self):
        p = construct_regular(4).polygon
        svg = render_svg(p)
        assert svg == render_svg(p)
        pts = [tuple(map(float, s.split(","))) for s in
               re.search(r'points="([^"]+)"', svg).group(1).split()]
        # v0 = (0, 0) is the bottom vertex, so it has the largest SVG y
        assert pts[0][1] == max(y for _, y in pts)


class TestConstructVerify:
    def test_construct_summary(self, capsys):
        code, out, _ = run(capsys, "construct", "bn", "16")
        assert code == EXIT_OK
        assert "perimeter  3.1352878881" in out

    def test_named_options(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "z32")
        assert code == EXIT_OK and "perimeter  3.1403202340" in out

    def test_pipeline(self, capsys, tmp_path):
        path = tmp_path / "b64.json"
        assert run(capsys, "construct", "bn", "64", "--out", str(path))[0] == EXIT_OK
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_OK
        assert out.count(" pass") == 4

    def test_csv_output_verifies_without_side(self, capsys, tmp_path):
        path = tmp_path / "b16.csv"
        assert run(capsys, "construct", "bn", "16", "--out", str(path))[0] == EXIT_OK
        assert len(path.read_text().splitlines()) == 16
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_OK

    def test_scaled_polygon_fails(self, capsys, tmp_path):
        path = tmp_path / "big.csv"
        path.write_text(dumps_csv(construct_bn(16).polygon.scaled(1.01)))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_CERT
        assert re.search(r"small\s+FAIL", out)

    def test_fixture_tolerance(self, capsys, tmp_path):
        path = tmp_path / "x8.json"
        run(capsys, "construct", "fixture:X8", "--out", str(path))
        assert run(capsys, "verify", str(path))[0] == EXIT_OK
        assert run(capsys, "verify", str(path), "--tol", "1e-9")[0] == EXIT_CERT

    def test_unclaimed_flag_does_not_fail(self, capsys, tmp_path):
        path = tmp_path / "v8.json"
        run(capsys, "construct", "fixture:V8", "--out", str(path))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_OK
        assert "not claimed" in out

    @pytest.mark.parametrize(
        "argv",
        [["construct", "bn", "17"], ["construct"], ["verify", "/nonexistent/file.json"],
         ["verify", "x", "--tol", "0"], ["nope"], ["construct", "bn", "abc"]],
    )
    def test_usage_errors(self, capsys, argv):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
        capsys.readouterr()
        assert code == EXIT_USAGE


class TestTableGaps:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "table")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert "3.1352878881" in lines[1]

    def test_csv_parses_back(self, capsys):
        _, out, _ = run(capsys, "table", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [int(r["n"]) for r in rows] == [16, 32, 64, 128, 256]
        for r in rows:
            ref = REFERENCE_TABLE[int(r["n"])]
            assert float(r["L_B"]) == pytest.approx(ref[2], abs=1e-10)
            assert float(r["ub"]) == pytest.approx(ref[3], abs=1e-10)

    def test_gaps(self, capsys):
        code, out, _ = run(capsys, "gaps")
        assert code == EXIT_OK
        assert "fraction of gap closed 0.871589" in out
        assert "fraction of gap closed 0.632796" in out


class TestRenderCommand:
    def test_family(self, capsys, tmp_path):
        out = tmp_path / "b16.svg"
        assert run(capsys, "render", "bn", "16", "--out", str(out))[0] == EXIT_OK
        assert out.read_text().count('class="diameter"') == 15

    def test_from_document(self, capsys, tmp_path):
        doc = tmp_path / "r5.json"
        doc.write_text(PolygonDocument.from_instance(construct_regular(5)).dumps())
        svg = tmp_path / "r5.svg"
        assert run(capsys, "render", str(doc), "--out", str(svg), "--no-show-diameter-graph")[0] == EXIT_OK
        assert 'class="diameter"' not in svg.read_text()

    def test_requires_out(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["render", "bn", "16"])
        capsys.readouterr()
        assert info.value.code == EXIT_USAGE


def test_module_entry_point_pipes():
    made = subprocess.run(
        [sys.executable, "-m", "smallgons", "construct", "bn", "16", "--out", "-"],
        capture_output=True, text=True, check=True,
    )
    doc = PolygonDocument.loads(made.stdout)
    assert doc.n == 16
    checked = subprocess.run(
        [sys.executable, "-m", "smallgons", "verify"], input=made.stdout, capture_output=True, text=True
    )
    assert checked.returncode == EXIT_OK
