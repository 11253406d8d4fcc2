import json
import subprocess
import sys

import pytest

from morphic.cli import main, parse_coding
from morphic.words import WordDomainError, ternary_alphabet

TERN = ternary_alphabet()
PREFIX_32 = "01121220122020011220200120010112"
THUE_MORSE_16 = "0110100110010110"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParseCoding:
    def test_positional(self):
        assert parse_coding("0,1,3", TERN).values == (0, 1, 3)

    def test_named(self, s3):
        assert parse_coding("c=3,a=0,b=1", s3.alphabet).values == (0, 1, 3)

    @pytest.mark.parametrize("text", ["", "0,1", "0,1,2,3", "a=0,1,2", "a=0,a=1,b=2", "x,y,z"])
    def test_rejects(self, text):
        with pytest.raises(WordDomainError):
            parse_coding(text, TERN)


class TestGenerate:
    def test_default_preset(self, capsys):
        code, out, _ = run(capsys, "generate", "--length", "32")
        assert code == 0 and out == PREFIX_32 + "\n"

    def test_sigma3(self, capsys):
        code, out, _ = run(capsys, "generate", "--preset", "sigma3", "--length", "9")
        assert code == 0 and out == "abcbcacab\n"

    def test_coded_output(self, capsys):
        code, out, _ = run(
            capsys, "generate", "--preset", "sigma3", "--length", "6", "--coding", "a=0,b=1,c=3"
        )
        assert code == 0 and out == "013130\n"

    def test_seed_override(self, capsys):
        code, out, _ = run(capsys, "generate", "--preset", "sigma3", "--length", "3", "--seed", "c")
        assert code == 0 and out == "cab\n"

    def test_morphism_file(self, capsys, tmp_path):
        f = tmp_path / "tm.txt"
        f.write_text("0 -> 01\n1 -> 10\n")
        code, out, _ = run(capsys, "generate", "--morphism", str(f), "--length", "16")
        assert code == 0 and out == THUE_MORSE_16 + "\n"

    def test_morphism_file_with_coding(self, capsys, tmp_path):
        f = tmp_path / "m.txt"
        f.write_text("a -> ab\nb -> ba\na = 0\nb = 12\n")
        code, out, _ = run(capsys, "generate", "--morphism", str(f), "--length", "4")
        assert code == 0 and out == "0,12,12,0\n"

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "generate", "--morphism", "/no/such/file", "--length", "4")
        assert code == 2 and "morphic:" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "w.txt"
        code, out, _ = run(capsys, "generate", "--length", "8", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == "01121220\n"


class TestComplexity:
    def test_csv_deterministic(self, capsys):
        code, first, _ = run(capsys, "complexity", "--n-from", "1", "--n-to", "4")
        assert code == 0
        code, second, _ = run(capsys, "complexity", "--n-from", "1", "--n-to", "4")
        assert first == second
        assert first.splitlines()[0] == "n,rho,rho_ab,rho_plus,ds_min,ds_max,evenness"
        assert first.splitlines()[1] == "1,3,3,3,0,2,1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "complexity", "--n-to", "2", "--format", "json")
        rows = json.loads(out)
        assert code == 0 and rows[1]["rho"] == 9

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "complexity", "--n-from", "5", "--n-to", "2")
        assert code == 2 and "morphic:" in err


class TestVerify:
    def test_single_check(self, capsys):
        code, out, err = run(capsys, "verify", "dc-counts", "--n-max", "10")
        assert code == 0
        report = json.loads(out)
        assert report["check"] == "dc-counts" and report["failures"] == []
        assert "ok" in err

    def test_check_with_small_override(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem1", "--n-max", "64")
        assert code == 0 and json.loads(out)["tuples_checked"] == 64

    def test_unknown_check_is_usage_error(self, capsys):
        assert main(["verify", "nope"]) == 2

    def test_all_rejects_n_max(self, capsys):
        code, _, err = run(capsys, "verify", "all", "--n-max", "5")
        assert code == 2 and "morphic:" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "rep.json"
        code, out, _ = run(
            capsys, "verify", "mirror-closure", "--n-max", "4", "--out", str(target)
        )
        assert code == 0
        assert json.loads(target.read_text())["check"] == "mirror-closure"
        assert "ok" in out


class TestIvp:
    def test_gap_free_coding(self, capsys):
        code, out, _ = run(
            capsys, "ivp", "--preset", "sigma3", "--coding", "0,1,2", "--n-from", "3", "--n-to", "30"
        )
        assert code == 0 and json.loads(out)["gaps"] == {}

    def test_gapped_coding(self, capsys):
        code, out, _ = run(
            capsys, "ivp", "--preset", "sigma3", "--coding", "0,1,3", "--n-from", "3", "--n-to", "30"
        )
        assert code == 1
        assert json.loads(out)["gaps"]["4"] == [3]


class TestKernel:
    def test_closed(self, capsys):
        code, out, _ = run(capsys, "kernel", "--e-max", "2", "--len", "16")
        assert code == 0
        report = json.loads(out)
        assert report["tuples_checked"] == 7 * 16


class TestWitness:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "witness", "--length", "8")
        assert code == 0 and out == "n=8 k=3 digit_sum=12 word=21220122\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "witness", "--length", "4", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert (payload["word"], payload["left"], payload["right"]) == ("2122", "2", "122")


def test_console_script_round_trip():
    proc = subprocess.run(
        [sys.executable, "-m", "morphic.cli", "generate", "--length", "16"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == PREFIX_32[:16]
