import json

import pytest

from pslseq.cli import default_alpha, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBasicCommands:
    def test_psl(self, capsys):
        code, out, _ = run_cli(capsys, "psl", "--hex", "712", "--n", "11")
        assert code == 0
        assert out.strip() == "1"

    def test_decode(self, capsys):
        code, out, _ = run_cli(capsys, "decode", "--hex", "0", "--n", "2")
        assert code == 0
        assert out.strip() == "--"

    def test_encode_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "encode", "--seq", "+++---+--+-")
        assert code == 0
        assert out.strip() == "712"

    def test_invalid_hex_is_diagnostic(self, capsys):
        code, _, err = run_cli(capsys, "psl", "--hex", "zz", "--n", "8")
        assert code == 1
        assert err.startswith("error:")

    def test_length_mismatch(self, capsys):
        code, _, err = run_cli(capsys, "psl", "--hex", "fff", "--n", "4")
        assert code == 1
        assert "error:" in err

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            main(["frobnicate"])


class TestJsonFormat:
    def test_header_line(self, capsys):
        _, out, _ = run_cli(capsys, "psl", "--hex", "712", "--n", "11", "--format", "json")
        lines = out.splitlines()
        assert json.loads(lines[0]) == {"pslseq_format": 1}
        assert json.loads(lines[1])["psl"] == 1

    def test_optimize_deterministic_bytes(self, capsys):
        argv = [
            "optimize", "--n", "24", "--threshold", "200", "--seed", "77",
            "--alpha", "2", "--format", "json",
        ]
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second
        payload = json.loads(first.splitlines()[1])
        assert payload["master_seed"] == 77
        assert "elapsed_seconds" not in payload


class TestOptimize:
    def test_prints_seed_when_auto(self, capsys):
        code, out, _ = run_cli(capsys, "optimize", "--n", "12", "--threshold", "50")
        assert code == 0
        assert out.startswith("seed: ")

    def test_init_hex_seeding(self, capsys):
        code, out, _ = run_cli(
            capsys, "optimize", "--n", "11", "--threshold", "1", "--seed", "0",
            "--init-hex", "712",
        )
        assert code == 0
        assert "best PSL: 1" in out

    def test_results_file(self, capsys, tmp_path):
        path = tmp_path / "res.jsonl"
        run_cli(
            capsys, "optimize", "--n", "12", "--threshold", "50", "--seed", "5",
            "--results", str(path),
        )
        rec = json.loads(path.read_text().splitlines()[0])
        assert rec["n"] == 12


class TestOtherCommands:
    def test_sweep_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--n", "16", "--alphas", "2,3", "--restarts", "2",
            "--threshold", "50", "--seed", "1",
        )
        assert code == 0
        lines = out.splitlines()
        assert "V*" in lines[1]
        assert len(lines) == 4

    def test_rotate_scan(self, capsys, tmp_path):
        path = tmp_path / "profile.csv"
        code, out, _ = run_cli(
            capsys, "rotate-scan", "--hex", "712", "--n", "11",
            "--profile-out", str(path),
        )
        assert code == 0
        assert "min PSL:" in out
        assert len(path.read_text().splitlines()) == 11

    def test_gen_mseq(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "mseq", "--poly", "b", "--state", "1")
        assert code == 0
        assert "n: 7" in out

    def test_gen_legendre(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "legendre", "--p", "7", "--format", "json")
        assert code == 0
        payload = json.loads(out.splitlines()[1])
        assert payload["n"] == 7
        assert payload["hex"] == "68"  # 1101000 = ++-+---

    def test_gen_legendre_rejects_composite(self, capsys):
        code, _, err = run_cli(capsys, "gen", "legendre", "--p", "9")
        assert code == 1
        assert "error:" in err

    def test_exhaustive(self, capsys):
        code, out, _ = run_cli(capsys, "exhaustive", "--n", "13")
        assert code == 0
        assert "optimal PSL: 1" in out

    def test_verify_table(self, capsys):
        code, out, _ = run_cli(capsys, "verify-table")
        assert code == 0
        assert "0 mismatches" in out


class TestDefaults:
    def test_alpha_bands(self):
        assert default_alpha(100) == 3
        assert default_alpha(500) == 3
        assert default_alpha(501) == 4
        assert default_alpha(1500) == 4
        assert default_alpha(3000) == 5
        assert default_alpha(4096) == 6
