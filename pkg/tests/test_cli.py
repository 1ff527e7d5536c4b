from __future__ import annotations

import json

import numpy as np
import pytest

from grcodes import io
from grcodes.cli import main

U14 = "1+g^2+g^5+g^9+g^12"


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_classify(capsys):
    rc, out, _ = run(capsys, "classify", "--group", "C14", "--elem", U14)
    assert rc == 0 and out.strip() == "unit; inverse = self"
    rc, out, _ = run(capsys, "classify", "--group", "C2", "--elem", "1 + g")
    assert out.startswith("zero-divisor; witness = ")
    rc, out, _ = run(capsys, "classify", "--group", "C3", "--ring", "z", "--elem", "1 + g")
    assert out.strip() == "neither; det = 2"


def test_matrix(capsys):
    rc, out, _ = run(capsys, "matrix", "--group", "C2", "--elem", "1 + g")
    assert rc == 0 and out.splitlines() == ["2 2 gf2", "1 1", "1 1"]


def test_code_bundle_and_distance(capsys, tmp_path):
    path = tmp_path / "ham.txt"
    rc, _, err = run(capsys, "code", "--group", "C7", "--elem", "1 + g^2 + g^3", "-o", str(path), "--distance")
    assert rc == 0 and "(7,4,3)" in err
    first = path.read_text()
    rc, _, _ = run(capsys, "code", "--group", "C7", "--elem", "1 + g^2 + g^3", "-o", str(path))
    assert path.read_text() == first
    rc, out, _ = run(capsys, "distance", "--input", str(path), "--threads", "2")
    assert rc == 0 and out.strip() == "d = 3"


def test_unit_code_with_basis(capsys):
    rc, out, _ = run(capsys, "code", "--group", "C14", "--elem", U14, "--kind", "unit", "--basis", "first:7")
    assert rc == 0
    b = io.parse_bundle(out)
    assert (b.n, b.k) == (14, 7)
    rc, _, err = run(capsys, "code", "--group", "C14", "--elem", U14, "--kind", "unit")
    assert rc == 1 and "auto" in err


def test_best_basis(capsys):
    rc, out, err = run(capsys, "code", "--group", "C14", "--elem", U14, "--kind", "unit", "--basis", "best:7")
    assert rc == 0 and "exhaustive" in err and "d = 4" in err


def test_json_summary(capsys):
    rc, out, _ = run(capsys, "code", "--group", "C2xC4", "--elem", "1 + h(a + a^2 + a^3)", "--format", "json-summary", "--distance")
    doc = json.loads(out)
    assert (doc["n"], doc["k"], doc["d"]) == (8, 4, 4)


def test_dual_and_selfdual(capsys):
    rc, out, err = run(capsys, "dual", "--group", "C7", "--elem", "1 + g^2 + g^3")
    assert rc == 0 and "principal" in err
    assert io.parse_bundle(out).k == 3
    rc, out, _ = run(capsys, "selfdual", "--group", "C2xC4", "--elem", "1 + h(a + a^2 + a^3)")
    assert out.splitlines()[-1] == "self-dual: true"


def test_ideal(capsys):
    rc, out, _ = run(capsys, "ideal", "--group", "C7", "--elem", "1 + g^2 + g^3")
    assert out.strip() == "true"
    rc, out, _ = run(capsys, "ideal", "--group", "C7", "--elem", "1 + g^2 + g^3", "--basis", "first:2")
    assert out.strip() == "false"


def test_cyclic(capsys):
    rc, out, err = run(capsys, "cyclic", "--group", "C7", "--elem", "1 + g^2 + g^3", "--distance")
    assert rc == 0 and "(7,4,3)" in err
    rc, _, err = run(capsys, "cyclic", "--group", "C5", "--elem", "0")
    assert rc == 2


def test_ldpc(capsys):
    rc, out, err = run(capsys, "ldpc", "--m", "5", "--labels", "C3xC2", "--j", "2", "--seed", "4", "--format", "alist")
    assert rc == 0 and "seed=4" in err
    H = io.parse_alist(out)
    assert H.shape == (10, 30)
    rc2, out2, _ = run(capsys, "ldpc", "--m", "5", "--labels", "C3xC2", "--j", "2", "--seed", "4", "--format", "alist")
    assert out2 == out
    rc, out, _ = run(capsys, "ldpc", "--m", "4", "--k", "3", "--j", "1", "--f", "1,g,g^3", "--format", "text")
    M, _ = io.parse_matrix(out)
    assert M.shape == (4, 12) and np.all(M.sum(axis=1) == 3)


def test_distance_cap_and_estimate(capsys):
    args = ["distance", "--group", "C40", "--elem", "1 + g", "--cap", "20"]
    rc, _, err = run(capsys, *args)
    assert rc == 3
    rc, out, _ = run(capsys, *args, "--estimate", "50")
    assert rc == 0 and out.startswith("d <= 2 ")


@pytest.mark.parametrize(
    "argv,code",
    [
        (["classify", "--group", "C5", "--elem", "1 + q"], 1),
        (["classify", "--group", "Q8", "--elem", "1"], 1),
        (["classify"], 1),
        (["code", "--group", "C7", "--elem", "1 + g^2 + g^3", "--basis", "indices:0,1,2,3,4"], 2),
        (["code", "--group", "C7", "--elem", "1 + g^2 + g^3", "--kind", "unit", "--basis", "first:2"], 2),
        (["code", "--group", "C7", "--elem", "1", "--basis", "bogus"], 1),
        (["ldpc", "--m", "5", "--j", "2"], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        rc = main(argv)
    except SystemExit as exc:  # argparse usage errors
        rc = exc.code
    assert rc == code


def test_certificate_printed(capsys):
    rc, _, err = run(capsys, "code", "--group", "C7", "--elem", "1 + g^2 + g^3", "--kind", "unit", "--basis", "first:2")
    assert rc == 2 and "certificate:" in err


def test_verify_command_deterministic(capsys):
    rc1, out1, _ = run(capsys, "verify-paper")
    rc2, out2, _ = run(capsys, "verify-paper")
    assert out1 == out2
    assert rc1 == rc2 == 2  # the published Hamming element rows fail
    assert out1.count("FAIL") == 2
