import json

import pytest

from ehzcodes import io
from ehzcodes.cli import main

import reference as ref


def _run(capsys, *argv):
    rc = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def ex1(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    rc, out, _ = _run(capsys, "build", "ehz", "--p", 17, "--points", ",".join(map(str, ref.A_S)),
                      "--k", 3, "--out", path)
    assert rc == 0 and out.strip() == "EHZ [9,3,7]_17 MDS"
    return path


@pytest.fixture
def ex4(tmp_path, capsys):
    path = tmp_path / "ex4.json"
    rc, _, _ = _run(capsys, "build", "ehz", "--p", 11, "--points", "3,4,5,6,7", "--k", 3, "--out", path)
    assert rc == 0
    return path


def test_build_writes_loadable_descriptor(ex1):
    code = io.code_from_json(json.loads(ex1.read_text()))
    assert code.G.data.tolist() == ref.A_G


def test_build_nmds_in_power_format(tmp_path, capsys):
    pts = ",".join(ref.B_S)
    rc, out, _ = _run(capsys, "build", "ehz", "--p", 2, "--m", 4, "--modulus", "1,1,0,0,1",
                      "--points", pts, "--k", 7, "--format", "power", "--out", tmp_path / "b.json")
    assert rc == 0 and out.startswith("EHZ [14,7,7]_16 NMDS (zero-sum subset")


def test_build_roth_lempel(capsys):
    rc, out, err = _run(capsys, "build", "rl", "--p", 11, "--points", "3,4,5,6,7", "--k", 4, "--delta", 0)
    assert rc == 0 and json.loads(out)["kind"] == "RothLempel"
    assert err.strip() == "RothLempel [7,4,4]_11 MDS"


def test_ecp_and_decode(ex1, tmp_path, capsys):
    pair = tmp_path / "pair.json"
    rc, out, _ = _run(capsys, "ecp", ex1, "--out", pair)
    assert rc == 0 and "MdsOdd pair, ell=2, verified=True" in out
    word = ",".join(map(str, ref.A_Y))
    rc, out, _ = _run(capsys, "decode", ex1, "--pair", pair, "--word", word, "--trace")
    assert rc == 0
    lines = out.splitlines()
    assert "s-space basis: {(1,6,10)}" in lines
    assert "Z: {2,6}" in lines
    assert f"codeword: ({','.join(map(str, ref.A_CODEWORD))})" in lines
    rc, out, _ = _run(capsys, "decode", ex1, "--word", ",".join(map(str, ref.A_CODEWORD)))
    assert rc == 0 and "outcome: AlreadyCodeword" in out


def test_decode_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "b.json"
    _run(capsys, "build", "ehz", "--p", 2, "--m", 4, "--modulus", "1,1,0,0,1",
         "--points", ",".join(ref.B_S), "--k", 7, "--out", path)
    rc, out, _ = _run(capsys, "decode", path, "--word", ",".join(ref.B_Y))
    assert rc == 3 and "outcome: TooManyErrors" in out


def test_deephole_commands(ex4, capsys):
    rc, out, _ = _run(capsys, "deephole", "radius", ex4)
    assert rc == 0 and json.loads(out)["rho"] == 3
    rc, out, _ = _run(capsys, "deephole", "check", ex4, "--vector", "7,10,5,5,1,4")
    assert rc == 0 and out.splitlines()[-1] == "true"
    rc, out, _ = _run(capsys, "deephole", "class1", ex4, "--g-km1", 3, "--f", "7,10,0,4", "--u-last", 3)
    rep = json.loads(out)
    assert rep["deep_hole"] and rep["certificate"]["delta"] == 8
    rc, out, _ = _run(capsys, "deephole", "class2", ex4, "--g-kp1", 2, "--g-km1", 8, "--f", "2,5,0,3",
                      "--u-last", 0)
    assert json.loads(out)["certificate"]["forbidden"] == sorted(ref.D_CLASS2_FORBIDDEN_AT_ZERO)


def test_generate_stream(ex4, capsys):
    rc, out, _ = _run(capsys, "generate", ex4, "--g-kp1", 0, "--g-km1", 3, "--f", "7,10,0,4")
    lines = out.splitlines()
    assert rc == 0 and len(lines) == 4
    branches = sorted(json.loads(x)["branch"] for x in lines)
    assert branches == ["class1-eq", "class1-set", "class1-set", "class1-set"]


def test_output_is_byte_stable(ex4, capsys):
    argv = ("generate", ex4, "--g-kp1", 2, "--max-outputs", 3)
    first = _run(capsys, *argv)[1]
    assert first == _run(capsys, *argv)[1] and first.count("\n") == 3


def test_analyze_equiv_oracle(ex1, ex4, capsys):
    rc, out, _ = _run(capsys, "analyze", ex4)
    rep = json.loads(out)
    assert rc == 0 and rep["d"] == 4 and rep["classification"] == "MDS"
    rc, out, _ = _run(capsys, "equiv", ex4, ex4)
    assert json.loads(out)["verdict"] == "Equivalent"
    rc, out, _ = _run(capsys, "oracle", "distance", ex1, "--word", ",".join(map(str, ref.A_Y)))
    assert rc == 0 and out.strip() == "2"


def test_exit_codes(tmp_path, ex1, capsys):
    assert _run(capsys, "build", "ehz", "--p", 11, "--points", "1,1,2", "--k", 3)[0] == 2
    assert _run(capsys, "build", "ehz", "--points", "1,2", "--k", 3)[0] == 2
    assert _run(capsys, "decode", tmp_path / "missing.json", "--word", "1")[0] == 2
    assert _run(capsys, "decode", ex1, "--word", "1,2")[0] == 2
    assert _run(capsys, "oracle", "holes", ex1, "--guard-vectors", 100)[0] == 4
