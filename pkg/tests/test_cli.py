import json

import khr.cli as cli
from khr.dyck import KnotParams
from khr.formula import superpolynomial
from khr.laurent import invariant_from_json


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_trefoil_latex(self, capsys):
        code, out, _ = run(capsys, "compute", "3", "2", "--form", "P", "--format", "latex")
        assert code == 0
        assert out.strip() == (
            "\\frac{a (qt)^{-1/2} t + a (qt)^{1/2} t^{-1} - a^{2} (qt)^{-1/2}}{1-t}"
        )

    def test_unknot_text(self, capsys):
        code, out, _ = run(capsys, "compute", "1", "5", "--form", "P")
        assert code == 0
        assert out.strip() == "(1) / (1-t)"

    def test_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "compute", "3", "2", "--format", "json")
        assert code == 0
        assert invariant_from_json(json.loads(out)) == superpolynomial(KnotParams(3, 2))

    def test_hhh_and_euler_forms(self, capsys):
        code, hhh_out, _ = run(capsys, "compute", "3", "2", "--form", "HHH")
        assert code == 0 and "a*q^-1" in hhh_out
        code, euler_out, _ = run(capsys, "compute", "3", "2", "--form", "euler")
        assert code == 0 and euler_out.startswith("(-a")

    def test_link_rejected_with_exit_3(self, capsys):
        code, _, err = run(capsys, "compute", "4", "2")
        assert code == 3
        assert "gcd" in err

    def test_usage_error_exit_2(self, capsys):
        assert run(capsys, "compute", "3")[0] == 2
        assert run(capsys, "compute", "0", "2")[0] == 2
        assert run(capsys, "compute", "3", "2", "--form", "bogus")[0] == 2

    def test_max_leaves_guard(self, capsys):
        code, _, err = run(capsys, "compute", "8", "5", "--max-leaves", "10")
        assert code == 2
        assert "refusing" in err

    def test_byte_determinism(self, capsys):
        first = run(capsys, "compute", "5", "3", "--format", "json")
        second = run(capsys, "compute", "5", "3", "--format", "json")
        assert first == second


class TestCache:
    def test_store_then_load(self, capsys, tmp_path):
        code, first, _ = run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        assert code == 0
        files = list(tmp_path.glob("compute_*.json"))
        assert len(files) == 1
        code, second, _ = run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        assert code == 0 and second == first

    def test_corrupt_file_recomputed_with_warning(self, capsys, tmp_path):
        run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        (victim,) = tmp_path.glob("compute_*.json")
        victim.write_text("{not json")
        code, out, err = run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        assert code == 0
        assert "discarding corrupt cache" in err
        assert out.strip().startswith("(a*q^(-1/2)")
        # the overwrite repaired the entry
        assert json.loads(victim.read_text())["m"] == 3

    def test_version_bump_misses(self, capsys, tmp_path, monkeypatch):
        run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        monkeypatch.setattr(cli, "CACHE_VERSION", "999.0")
        run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        assert len(list(tmp_path.glob("compute_*.json"))) == 2

    def test_env_var_selects_directory(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
        code, _, _ = run(capsys, "compute", "2", "3")
        assert code == 0
        assert len(list(tmp_path.glob("compute_*.json"))) == 1

    def test_cache_info_and_clear(self, capsys, tmp_path):
        run(capsys, "compute", "3", "2", "--cache-dir", str(tmp_path))
        code, out, _ = run(capsys, "cache", "info", "--cache-dir", str(tmp_path))
        assert code == 0 and "entries: 1" in out
        code, out, _ = run(capsys, "cache", "clear", "--cache-dir", str(tmp_path))
        assert code == 0 and "removed 1" in out
        assert not list(tmp_path.glob("compute_*.json"))

    def test_cache_without_directory_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.delenv(cli.CACHE_ENV, raising=False)
        assert run(capsys, "cache", "info")[0] == 2


class TestPaths:
    def test_plain_listing(self, capsys):
        code, out, _ = run(capsys, "paths", "3", "2")
        assert code == 0
        assert out.splitlines() == ["NNEEE", "NENEE"]

    def test_json_with_stats(self, capsys):
        code, out, _ = run(capsys, "paths", "3", "2", "--with-stats", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data[0]["path"] == "NNEEE" and data[0]["area"] == 1
        assert data[1]["hplus"] == 1


class TestVerify:
    def test_single_pair(self, capsys):
        code, out, _ = run(capsys, "verify", "3", "2")
        assert code == 0
        assert "overall: pass" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "3", "2", "--format", "json")
        assert code == 0
        (report,) = json.loads(out)
        assert report["overall_pass"] is True

    def test_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--range", "msum<=5", "--suite", "cross", "--suite", "catalan")
        assert code == 0
        assert out.count("overall: pass") == sum(1 for _ in _range_pairs(5))

    def test_bad_range_spec(self, capsys):
        assert run(capsys, "verify", "--range", "k<=4")[0] == 2

    def test_range_and_pair_conflict(self, capsys):
        assert run(capsys, "verify", "3", "2", "--range", "msum<=4")[0] == 2

    def test_missing_arguments(self, capsys):
        assert run(capsys, "verify")[0] == 2

    def test_link_exit_code(self, capsys):
        assert run(capsys, "verify", "4", "2")[0] == 3


def _range_pairs(bound):
    import math

    for s in range(2, bound + 1):
        for m in range(1, s):
            if math.gcd(m, s - m) == 1 and m >= s - m:
                yield (m, s - m)


class TestCatalanCommand:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "catalan", "5", "3")
        assert code == 0
        assert "7 paths" in out

    def test_check_json(self, capsys):
        code, out, _ = run(capsys, "catalan", "5", "2", "--check", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data == {
            "check_pass": True,
            "m": 5,
            "n": 2,
            "paths": 3,
            "specialization": 3,
        }
