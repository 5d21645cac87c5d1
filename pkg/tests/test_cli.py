import json
import subprocess
import sys

import pytest

from cuntzsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "delta(s(6,2))")
    assert code == 0
    assert out.strip() == "I(1) ⊗ s(6,2) + s(2,1) ⊗ s(3,2) + s(3,1) ⊗ s(2,2) + s(6,2) ⊗ I(1)"


def test_eval_errors_exit_2(capsys):
    code, _, err = run(capsys, "eval", "s(2,3)")
    assert code == 2 and "index 3 exceeds arity 2" in err
    code, out, _ = run(capsys, "--json", "eval", "s(2,")
    assert code == 2
    assert json.loads(out)["column"] == 5


def test_unknown_check_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "nosuch")
    assert code == 2 and "invalid choice" in err


def test_check_pass_and_json(capsys):
    code, out, _ = run(capsys, "check", "coassoc", "--max-n", "24", "--json")
    report = json.loads(out)
    assert code == 0 and report["result"] == "pass"
    assert report["input"]["max_n"] == 24


def test_check_fail_exit_1(capsys):
    code, out, _ = run(capsys, "check", "morphism", "--f", "swap2", "--max-product", "4")
    assert code == 1 and "fail" in out


def test_antipode_witness_forms(capsys):
    code, out, _ = run(capsys, "check", "antipode-witness", "--n", "2", "--form", "I1-x", "--json")
    assert code == 0
    assert json.loads(out)["witness"]["W"] == "0"


def test_haar_unique_spec_example(capsys):
    code, out, _ = run(capsys, "check", "haar-unique", "--max-n", "12", "--max-len", "0", "--json")
    assert code == 0 and json.loads(out)["details"]["unique"]


def test_seed_is_deterministic(capsys):
    a = run(capsys, "--seed", "11", "check", "pentagon", "--count", "5", "--json")
    b = run(capsys, "check", "pentagon", "--count", "5", "--seed", "11", "--json")
    assert a == b and a[0] == 0


def test_list_flags(capsys):
    code, out, _ = run(capsys, "check", "rep-vi", "--pairs", "2,2", "3,3", "--vectors", "9",
                       "--json")
    assert code == 0 and json.loads(out)["input"]["pairs"] == [[2, 2], [3, 3]]
    code, _, _ = run(capsys, "check", "rep-vi", "--pairs", "2x2")
    assert code == 2


def test_rep_orbits(capsys):
    code, out, _ = run(capsys, "rep", "orbits", "--n", "2", "--m", "3", "--window", "4", "--json")
    r = json.loads(out)
    assert code == 0 and r["size"] == 16 and r["partition_ok"]
    code, out, _ = run(capsys, "rep", "orbits", "--n", "3", "--window", "10")
    assert code == 0 and "cycle 0" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "cuntzsum", "eval", "s(2,1)' s(2,1)"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "I(2)"
