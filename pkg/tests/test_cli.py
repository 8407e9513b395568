import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from optapprox import __version__
from optapprox.cli import main, parse_args, parse_orders, parse_roots
from optapprox.errors import UsageError
from optapprox.roots import zero_set_sweep

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestParsing:
    @pytest.mark.parametrize("text,want", [
        ("4", [4]),
        ("1..5", [1, 2, 3, 4, 5]),
        ("2..10:+4", [2, 6, 10]),
        ("8..1024:*2", [8, 16, 32, 64, 128, 256, 512, 1024]),
    ])
    def test_orders(self, text, want):
        assert parse_orders(text) == want

    @pytest.mark.parametrize("text", ["", "a", "5..2", "1..9:*1", "0..8:*2", "1..4:+0"])
    def test_bad_orders(self, text):
        with pytest.raises(UsageError):
            parse_orders(text)

    def test_roots(self):
        fp = parse_roots("1:2,2+1j,-1:1", leading=2)
        assert fp.roots == (1, 2 + 1j, -1)
        assert fp.mults == (2, 1, 1)
        assert fp.leading == 2

    def test_bad_roots(self):
        with pytest.raises(UsageError):
            parse_roots("1:x")
        with pytest.raises(UsageError):
            parse_roots("1:0")

    def test_defaults(self):
        ns = parse_args(["approximant", "--f", "1,-1", "--alpha", "1", "--n", "4"])
        assert ns.orders == [4] and ns.alpha == 1.0
        assert ns.kind.value == "integral" and ns.format == "json"

    def test_figure_config(self):
        ns = parse_args(["zeros", "--f", "1,-1,1", "--family", "taylor", "--n", "1..50",
                         "--format", "svg", "--out", "x.svg"])
        assert ns.orders == list(range(1, 51))
        np.testing.assert_array_equal(ns.target.coeffs, [1, -1, 1])

    def test_root_spec_geometric_grid(self):
        ns = parse_args(["decay", "--roots", "1:2", "--alpha", "1", "--n", "8..1024:*2"])
        assert ns.target.mults == (2,)
        assert ns.orders[-1] == 1024

    def test_format_from_extension(self):
        assert parse_args(["decay", "--f", "1,-1", "--out", "a.csv"]).format == "csv"


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["approximant", "--bogus"])
        assert exc.value.code == 1

    def test_no_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 1

    @pytest.mark.parametrize("argv", [
        ["approximant"],
        ["approximant", "--f", "1,x"],
        ["approximant", "--f", "1,-1", "--family", "taylor,cesaro"],
        ["approximant", "--f", "1,-1", "--format", "svg", "--out", "a.svg"],
        ["zeros", "--f", "1,-1", "--format", "svg"],
    ])
    def test_usage(self, argv, capsys):
        assert run(argv, capsys)[0] == 1

    @pytest.mark.parametrize("argv", [
        ["approximant", "--f", "0,0"],
        ["approximant", "--f", "0,1", "--family", "taylor"],
        ["approximant", "--f", "1,-1,1", "--family", "closedform"],
        ["approximant", "--f", "1,-1", "--family", "rieszmean", "--alpha", "0.5"],
        ["decay", "--f", "1,-1", "--alpha", "1.5", "--kind", "coeff"],
        ["approximant", "--roots", "0.5:1", "--family", "powerlift", "--n", "3"],
    ])
    def test_domain(self, argv, capsys):
        assert run(argv, capsys)[0] == 2

    def test_selftest_ok(self, capsys):
        code, out, err = run(["selftest"], capsys)
        assert code == 0
        assert "FAIL" not in err and err.count("PASS") >= 10
        assert json.loads(out)["passed"] is True


class TestOutputs:
    def test_approximant_json(self, capsys):
        code, out, _ = run(["approximant", "--f", "1,-1", "--alpha", "1", "--n", "3"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["version"] == __version__
        assert doc["config"]["n"] == [3] and doc["config"]["kind"] == "integral"
        np.testing.assert_allclose(doc["approximants"][0]["ratios"],
                                   np.array([13, 7, 3]) / 25, atol=1e-12)

    def test_approximant_csv(self, capsys):
        _, out, _ = run(["approximant", "--f", "1,-1", "--n", "1..2", "--format", "csv"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == ["family", "alpha", "kind", "n", "residual_norm_sq",
                                 "k", "re", "im"]
        assert len(rows) == 2 + 3
        assert "-0" not in [r["im"] for r in rows]

    def test_decay_csv_round_trip(self, tmp_path, capsys):
        out = tmp_path / "d.csv"
        assert main(["decay", "--f", "1,-1", "--n", "8..64:*2", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert list(rows[0]) == ["family", "alpha", "kind", "n", "dist_sq", "scaled"]
        assert [int(r["n"]) for r in rows] == [8, 16, 32, 64]
        from optapprox.decay import decay_table
        want = decay_table([1, -1], "optimal", 1.0, "integral", [8])[0].dist_sq
        assert float(rows[0]["dist_sq"]) == want

    def test_zeros_csv(self, capsys):
        _, out, _ = run(["zeros", "--f", "1,-1", "--family", "taylor,riesz", "--n", "1..3",
                         "--format", "csv"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == ["family", "alpha", "kind", "n", "index", "re", "im", "modulus"]
        assert len(rows) == 2 * (1 + 2 + 3)

    def test_zeros_svg(self, tmp_path):
        out = tmp_path / "z.svg"
        argv = ["zeros", "--f", "1,-1,1", "--family", "taylor,cesaro,riesz", "--n", "1..10",
                "--out", str(out)]
        assert main(argv) == 0
        for fam in ("taylor", "cesaro", "riesz"):
            path = tmp_path / f"z_{fam}.svg"
            root = ET.parse(path).getroot()
            assert root.tag == SVG_NS + "svg"
            circles = root.findall(SVG_NS + "circle")
            guides = [c for c in circles if c.get("fill") == "none"]
            assert len(guides) == 1
            # a section can have lower degree than its order
            sets = zero_set_sweep([1, -1, 1], fam, 1.0, "integral", range(1, 11))
            assert len(circles) - 1 == sum(rs.roots.size for rs in sets)
        assert not out.exists()

    def test_single_family_svg_keeps_name(self, tmp_path):
        out = tmp_path / "one.svg"
        assert main(["zeros", "--f", "1,-1", "--family", "taylor", "--n", "1..4",
                     "--out", str(out)]) == 0
        assert out.exists()

    def test_gram_csv(self, capsys):
        _, out, _ = run(["gram", "--f", "1,-1", "--n", "2", "--format", "csv"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        G = {(int(r["row"]), int(r["col"])): float(r["re"]) for r in rows}
        assert G[(1, 1)] == 3 and G[(2, 2)] == 5 and G[(1, 2)] == -2
        assert G[(0, 3)] == 1 and G[(1, 3)] == 0

    def test_roots_input(self, capsys):
        code, out, _ = run(["approximant", "--roots", "1:2", "--family", "powerlift",
                            "--n", "6"], capsys)
        assert code == 0
        assert json.loads(out)["approximants"][0]["meta"]["gamma"] == 2

    @pytest.mark.parametrize("argv", [
        ["decay", "--f", "1,-1,1", "--n", "4..32:*2", "--format", "csv"],
        ["zeros", "--f", "1,-1", "--family", "riesz", "--n", "1..6"],
        ["approximant", "--f", "2,1j", "--n", "5", "--kind", "coeff", "--alpha", "-1"],
    ])
    def test_deterministic(self, argv, capsys):
        a = run(argv, capsys)[1]
        b = run(argv, capsys)[1]
        assert a == b

    def test_atomic_write_leaves_no_temp(self, tmp_path):
        out = tmp_path / "a.json"
        assert main(["approximant", "--f", "1,-1", "--out", str(out)]) == 0
        assert [p.name for p in tmp_path.iterdir()] == ["a.json"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "optapprox", "--version"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
