import csv
import io
import subprocess
import sys
from fractions import Fraction

import pytest

from nsjack import cli
from nsjack.pieri import expansions


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pieri_zi_example(capsys):
    code, out, _ = run(["pieri", "--eta", "0,0", "--mode", "zi", "1", "--alpha", "2"], capsys)
    assert code == 0
    assert out.splitlines()[1:] == ["E(1,0)  1", "E(0,1)  -1/3"]


def test_pieri_e1_three_terms(capsys):
    code, out, _ = run(["pieri", "--eta", "0,0,0", "--mode", "e1", "--alpha", "2"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 4


def test_pieri_sym_schur(capsys):
    code, out, _ = run(["pieri", "--eta", "1,0", "--mode", "sym", "1", "--alpha", "1"], capsys)
    assert code == 0
    assert [line.split()[-1] for line in out.splitlines()[1:]] == ["1", "1"]


def test_pieri_ep_modes(capsys):
    _, out, _ = run(["pieri", "--eta", "1,0,0,0", "--mode", "ep", "2", "--alpha", "2"], capsys)
    assert "oracle" in out.splitlines()[0]
    _, out, _ = run(["pieri", "--eta", "1,0,0", "--mode", "ep", "2", "--alpha", "5/2"], capsys)
    assert "closed form" in out.splitlines()[0]
    _, out, _ = run(["pieri", "--eta", "1,0,0", "--mode", "eN1", "--alpha", "2"], capsys)
    _, out2, _ = run(["pieri", "--eta", "1,0,0", "--mode", "ep", "2", "--alpha", "2"], capsys)
    assert out.splitlines()[1:] == out2.splitlines()[1:]
    _, out, _ = run(["pieri", "--eta", "1,0", "--mode", "ep", "2", "--alpha", "2"], capsys)
    assert out.splitlines()[1:] == ["E(2,1)  1"]


@pytest.mark.parametrize("argv", [
    ["pieri", "--eta", "1,0", "--mode", "zz", "--alpha", "2"],
    ["pieri", "--eta", "1,0", "--mode", "zi", "3", "--alpha", "2"],
    ["pieri", "--eta", "1,0", "--mode", "zi", "--alpha", "2"],
    ["pieri", "--eta", "0,1", "--mode", "sym", "1", "--alpha", "2"],
    ["pieri", "--eta", "1,x", "--mode", "e1", "--alpha", "2"],
    ["pieri", "--eta", "1,0", "--mode", "e1", "--alpha", "0"],
    ["pieri", "--eta", "1,0", "--mode", "e1", "--alpha", "2", "--n", "3"],
    ["pieri", "--eta", "1", "--mode", "eN1", "--alpha", "2"],
    ["explore", "--n", "2", "--p", "3", "--alpha", "2", "--max-weight", "1"],
    ["gen", "--n", "0", "--alpha", "2", "--max-weight", "1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_singular_alpha_exit_1(capsys):
    code, _, err = run(["pieri", "--eta", "1,0", "--mode", "e1", "--alpha", "-1"], capsys)
    assert code == 1
    assert "vanishing factor" in err


def test_gen_counts(tmp_path, capsys):
    out = tmp_path / "c.nsj"
    code, _, err = run(["gen", "--n", "2", "--alpha", "2", "--max-weight", "1", "--out", str(out)], capsys)
    assert code == 0 and "generated 3 polynomials" in err
    assert [l.split(" := ")[0] for l in out.read_text().splitlines()[3:]] == ["E 0,0", "E 1,0", "E 0,1"]
    code, text, _ = run(["gen", "--n", "3", "--alpha", "2", "--max-weight", "0"], capsys)
    assert text.splitlines()[3:] == ["E 0,0,0 := 1 * 0,0,0"]


def test_gen_regeneration_identical(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for path in (a, b):
        run(["gen", "--n", "3", "--alpha", "7/3", "--max-weight", "3", "--out", str(path)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_verify_passes(capsys):
    code, out, _ = run(["verify", "--n", "3", "--alpha", "2", "--max-weight", "3"], capsys)
    assert code == 0
    assert out.count("[PASS]") == 8 and "[FAIL]" not in out


def test_verify_fault_injection(monkeypatch, capsys):
    real = expansions.kernel

    def flipped(eta, subset, alpha):
        k = real(eta, subset, alpha)
        return type(k)(-k.A, k.Bhat, k.Btilde, k.B, k.chi, k.chi_tilde)

    monkeypatch.setattr(expansions, "kernel", flipped)
    code, out, _ = run(["verify", "--n", "2", "--alpha", "2", "--max-weight", "2"], capsys)
    assert code == 1
    assert "[FAIL] p=1 closed form vs oracle" in out
    assert "[FAIL] p=N-1 closed forms vs oracle" in out
    assert "[PASS] eigenrelation of E_eta" in out


def test_explore_csv(tmp_path, capsys):
    out = tmp_path / "x.csv"
    code, _, err = run(["explore", "--n", "2", "--p", "1", "--alpha", "2", "--max-weight", "2",
                        "--out", str(out)], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert rows and list(rows[0]) == cli.CSV_COLUMNS
    assert all(Fraction(r["A_oracle"]) for r in rows)
    assert "m_star:" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nsjack", "pieri", "--eta", "0,0", "--mode", "zi", "2",
                           "--alpha", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1:] == ["E(0,1)  1"]
