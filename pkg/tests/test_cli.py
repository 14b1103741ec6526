import json
import math

import pytest

from kerov_lab.cli import main, parse_spectra, shape_rows


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSimulate:
    def test_deterministic_csv(self, tmp_path, capsys):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            code, _, _ = run_cli(capsys, "simulate", "--ensemble", "wigner", "--n", "30",
                                 "--trials", "3", "--seed", "42", "--out", str(p))
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()
        lines = paths[0].read_text().splitlines()
        assert lines[0].startswith("# kerov-lab v0.1.0 config={")
        assert lines[1] == "# rng=philox4x64-10/box-muller"
        assert lines[2] == "trial,sup_distance,center,interlace_gap,p1,p2,p3,p4"
        assert [l.split(",")[0] for l in lines[3:]] == ["0", "1", "2", "median", "mean", "min", "max"]

    def test_center_equals_p1(self, capsys):
        code, out, _ = run_cli(capsys, "simulate", "--n", "20", "--trials", "2", "--k-max", "2")
        assert code == 0
        for line in out.splitlines()[3:5]:
            _, sup, center, gap, p1, _ = line.split(",")
            assert center == p1 and float(sup) >= 0

    def test_json_wishart(self, capsys):
        code, out, _ = run_cli(capsys, "simulate", "--ensemble", "wishart", "--alpha", "2.25",
                               "--n", "20", "--trials", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"meta", "records", "summary"}
        assert doc["meta"]["config"]["alpha"] == 2.25
        assert doc["meta"]["rng"] == "philox4x64-10/box-muller"
        assert len(doc["records"]) == 2
        assert set(doc["summary"]) == {"median", "mean", "min", "max"}

    def test_wigner_ignores_alpha(self, capsys):
        code, out, _ = run_cli(capsys, "simulate", "--n", "10", "--alpha", "3")
        assert code == 0 and '"alpha":null' in out

    @pytest.mark.parametrize("argv", [
        ["--ensemble", "wishart", "--n", "10"],
        ["--n", "1"],
        ["--trials", "0"],
        ["--grid-step", "0"],
        ["--jobs", "0"],
    ])
    def test_invalid_config(self, capsys, argv):
        code, _, err = run_cli(capsys, "simulate", *argv)
        assert code == 2 and "invalid config" in err

    def test_eigensolver_failure_exit(self, capsys, monkeypatch):
        from kerov_lab import simulate
        from kerov_lab.errors import NoConvergence

        def boom(*_):
            raise NoConvergence(0)

        monkeypatch.setattr(simulate, "eigenvalues", boom)
        code, _, err = run_cli(capsys, "simulate", "--n", "5")
        assert code == 3 and "eigensolver" in err

    def test_argparse_errors_exit_two(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["simulate", "--ensemble", "goe"])
        assert info.value.code == 2


class TestShape:
    def test_vkls_zero(self, capsys):
        code, out, _ = run_cli(capsys, "shape", "--kind", "vkls", "--from", "-3", "--to", "3",
                               "--step", "0.5")
        assert code == 0
        rows = dict(tuple(map(float, l.split(","))) for l in out.splitlines()[1:])
        assert rows[0.0] == pytest.approx(4 / math.pi)
        assert rows[2.0] == 2.0 and rows[-2.0] == 2.0

    def test_wishart_edges(self):
        rows = dict(shape_rows("wishart", 2.25, 0.0, 7.0, 0.3))
        assert rows[0.25] == 2.0 and rows[6.25] == 4.0

    def test_large_step(self):
        assert [x for x, _ in shape_rows("vkls", None, -1.0, 1.0, 5.0)] == [-1.0, 1.0]

    @pytest.mark.parametrize("argv", [["--from", "1", "--to", "0"], ["--from", "0", "--to", "1", "--step", "0"],
                                      ["--kind", "wishart", "--from", "0", "--to", "1"]])
    def test_bad_range(self, capsys, argv):
        code, _, _ = run_cli(capsys, "shape", *argv)
        assert code == 2


class TestMoments:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--k-max", "10")
        assert code == 0
        table, g_part = out.split("\n\n")
        rows = [l.split(",") for l in table.splitlines()]
        header, body = rows[0], rows[1:]
        assert len(body) == 10
        col = {name: i for i, name in enumerate(header)}
        assert body[3][col["wigner"]] == "6"
        assert body[1][col["m_dyck"]] == "a^2 + 2*a"
        for r in body:
            assert r[col["m_flag"]] == r[col["semicircle_flag"]] == r[col["mp_flag"]] == "EXACT-EQUAL"
        assert all(l.endswith(",OK") for l in g_part.splitlines()[1:])

    def test_mismatch_exit(self, capsys, monkeypatch):
        from kerov_lab import cli
        from kerov_lab.poly import Poly

        monkeypatch.setattr(cli, "wishart_moment_oracle", lambda k: Poly([0, 0, 7]))
        code, out, _ = run_cli(capsys, "moments", "--k-max", "3")
        assert code == 4 and "MISMATCH" in out


class TestDiagram:
    def write(self, tmp_path, text):
        p = tmp_path / "spectra.txt"
        p.write_text(text)
        return str(p)

    def test_breakpoints(self, tmp_path, capsys):
        code, out, _ = run_cli(capsys, "diagram", self.write(tmp_path, "3 1\n2\n"))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# center=2.0"
        rows = [l.split(",") for l in lines[2:]]
        assert [(float(x), float(w)) for x, w, k in rows if k != "pad"] == [(1, 1), (2, 2), (3, 1)]
        assert [(float(x), float(w)) for x, w, k in rows if k == "pad"] == [(0, 2), (4, 2)]

    def test_single(self, tmp_path, capsys):
        code, out, _ = run_cli(capsys, "diagram", self.write(tmp_path, "5\n\n"))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# center=5.0"
        assert sum(1 for l in lines if l.endswith(",pad")) == 2

    def test_single_without_second_line(self, tmp_path, capsys):
        code, _, _ = run_cli(capsys, "diagram", self.write(tmp_path, "5\n"))
        assert code == 0

    def test_violation(self, tmp_path, capsys):
        code, _, err = run_cli(capsys, "diagram", self.write(tmp_path, "3 1\n4\n"))
        assert code == 5 and "interlacing" in err

    @pytest.mark.parametrize("text", ["3 x\n2\n", "", "3 1\n2 1\n", "1\n\n2\n"])
    def test_parse_failure(self, tmp_path, capsys, text):
        code, _, _ = run_cli(capsys, "diagram", self.write(tmp_path, text))
        assert code == 2

    def test_missing_file(self, tmp_path, capsys):
        code, _, _ = run_cli(capsys, "diagram", str(tmp_path / "nope"))
        assert code == 2

    def test_parse_commas(self):
        assert parse_spectra("3, 1\n2") == ([3.0, 1.0], [2.0])
