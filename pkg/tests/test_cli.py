import json

import pytest

from carlitz.cli import main
from carlitz.serialize import (decode_apoly, decode_padic, decode_ratfunc,
                               decode_series, encode_apoly, encode_padic,
                               encode_ratfunc, encode_series)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_zeta_example(capsys):
    code, out = run_cli(capsys, "zeta", "--q", "2", "--y", "-1", "--dmax", "4")
    assert code == 0
    doc = json.loads(out)
    z = doc["z"]
    assert z[0] == {"lead": 0, "coeffs": [[1]], "prec": None}
    assert z[1] == {"lead": 1, "coeffs": [[1]], "prec": None}   # the value pi
    assert all(entry["coeffs"] == [] for entry in z[2:])


def test_trivzero_example(capsys):
    code, out = run_cli(capsys, "trivzero", "--q", "2", "--i", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["isZero"] is True and doc["value"] == []
    code, out = run_cli(capsys, "trivzero", "--q", "3", "--i", "1")
    doc = json.loads(out)
    assert doc["isZero"] is False


def test_perm_example(capsys):
    code, out = run_cli(capsys, "perm", "act", "--perm", "0:1,1:0",
                        "--on", "zp", "--y", "5", "--q", "2")
    assert code == 0
    assert json.loads(out)["result"] == 6


def test_newton_and_zeros_output(capsys):
    code, out = run_cli(capsys, "zeta", "--q", "2", "--y", "-3", "--dmax", "6",
                        "--newton", "--zeros")
    assert code == 0
    doc = json.loads(out)
    assert doc["newton"]["sheats"] == "true"
    assert doc["newton"]["runs"] == [1, 1]
    assert len(doc["zeros"]) == 2
    assert all(z["residualValuation"] >= 30 for z in doc["zeros"])


def test_exit_codes(capsys):
    code, _ = run_cli(capsys, "zeta", "--q", "2", "--y", "-1", "--dmax", "64")
    assert code == 3
    code, _ = run_cli(capsys, "ortho", "--l", "9", "--j", "0", "--m", "2",
                      "--q", "2")
    assert code == 2
    code, _ = run_cli(capsys, "eval", "--family", "g", "--index", "99",
                      "--at", "t", "--q", "2")
    assert code == 3    # family cache bound
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 64
    assert main([]) == 64


def test_byte_determinism(capsys):
    args = ("zeta", "--q", "3", "--y", "-5", "--dmax", "4", "--newton",
            "--zeros", "--seed", "7")
    _, out1 = run_cli(capsys, *args)
    _, out2 = run_cli(capsys, *args)
    assert out1 == out2
    args = ("expand", "--basis", "G", "--f", "x^3+t*x", "--m", "2", "--q", "2")
    _, out1 = run_cli(capsys, *args)
    _, out2 = run_cli(capsys, *args)
    assert out1 == out2


def test_text_format(capsys):
    code, out = run_cli(capsys, "det", "--q", "2", "--m", "2",
                        "--format", "text")
    assert code == 0
    assert json.loads(out)["equal"] is True   # indented but valid JSON


def test_json_round_trip(ctx2, capsys):
    # every emitted value re-parses into the originating type
    _, out = run_cli(capsys, "expand", "--basis", "g", "--f", "x^2", "--m",
                     "2", "--q", "2")
    doc = json.loads(out)
    for entry in doc["coeffs"]:
        r = decode_ratfunc(ctx2.k, entry)
        assert encode_ratfunc(r) == entry
    _, out = run_cli(capsys, "zeta", "--q", "2", "--y", "-3", "--dmax", "3")
    doc = json.loads(out)
    for entry in doc["z"]:
        series = decode_series(ctx2.kinf, entry)
        assert encode_series(series) == entry
    _, out = run_cli(capsys, "table", "--q", "2", "--max", "2")
    doc = json.loads(out)
    for entry in doc["D"]:
        f = decode_apoly(ctx2.A, entry)
        assert encode_apoly(f) == entry
    _, out = run_cli(capsys, "perm", "act", "--perm", "0:1,1:0", "--on",
                     "sinfty", "--x", "p^3", "--y", "-3", "--q", "2")
    doc = json.loads(out)
    y = decode_padic(2, doc["result"]["y"])
    assert encode_padic(y) == doc["result"]["y"]
    assert y.to_int() == -3


def test_gamma_and_measure_commands(capsys):
    code, out = run_cli(capsys, "gamma", "--points", "1:1+p", "--y", "-1",
                        "--q", "2", "--prec", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"]["coeffs"] == [[1]] * 6    # geometric series
    code, out = run_cli(capsys, "measure", "conv", "--dirac", "t",
                        "--dirac2", "t+1", "--order", "4", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    # moments of the Dirac at 2t+1 (point addition under convolution)
    _, out2 = run_cli(capsys, "measure", "transform", "--dirac", "2*t+1",
                      "--order", "4", "--q", "3")
    doc2 = json.loads(out2)
    assert doc["moments"] == doc2["moments"]


def test_modulus_override(capsys):
    # the other irreducible quadratic over F_2 builds a working F_4
    code, out = run_cli(capsys, "table", "--q", "4", "--modulus", "1,1,1",
                        "--max", "1")
    assert code == 0
    code, _ = run_cli(capsys, "table", "--q", "4", "--modulus", "1,0,1",
                      "--max", "1")
    assert code == 2    # x^2 + 1 is reducible over F_2
