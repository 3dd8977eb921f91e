import json

import numpy as np
import pytest

from ehzcodes import codes as cl
from ehzcodes import ecp, io, mdsgen
from ehzcodes.codes import Polynomial
from ehzcodes.deephole import DeepHoleQuery
from ehzcodes.errors import ParseError
from ehzcodes.fqmat import FqMatrix

import reference as ref


def _via_text(d):
    return json.loads(io.dumps(d))


@pytest.mark.parametrize("F", [ref.F11, ref.F16])
def test_field_round_trip(F):
    assert io.field_from_json(_via_text(io.field_to_json(F))) == F


@pytest.mark.parametrize("mode", ["int", "power", "poly"])
def test_matrix_round_trip(mode):
    M = FqMatrix.from_rows(ref.F16, ref.B_G)
    back = io.matrix_from_json(ref.F16, _via_text(io.matrix_to_json(M, mode)))
    assert back == M
    empty = FqMatrix.zeros(ref.F16, 0, 3)
    assert io.matrix_from_json(ref.F16, io.matrix_to_json(empty)).shape == (0, 3)


@pytest.mark.parametrize("mode", ["int", "power"])
def test_code_round_trip(code_b, mode):
    back = io.code_from_json(_via_text(io.code_to_json(code_b, mode)))
    assert back.G == code_b.G and back.H == code_b.H and back.kind == "EHZ"
    assert back.config == code_b.config
    assert io.code_hash(back) == io.code_hash(code_b)


def test_code_declared_shape_checked(code_a):
    d = io.code_to_json(code_a)
    d["K"] = 4
    with pytest.raises(ParseError):
        io.code_from_json(d)
    with pytest.raises(ParseError):
        io.field_from_json({"m": 1})


def test_pair_round_trip(code_a, code_b):
    for code, mode in ((code_a, "int"), (code_b, "power")):
        pair = ecp.build_ecp(code)
        back = io.pair_from_json(code.field, _via_text(io.pair_to_json(pair, mode)))
        assert back.G_A == pair.G_A and back.G_B == pair.G_B
        assert (back.case_tag, back.ell, back.transform) == (pair.case_tag, pair.ell, pair.transform)


def test_query_round_trip(code_d):
    q = DeepHoleQuery(code_d, 0, 3, Polynomial(ref.F11, ref.D_CLASS1["f"]), 8, 1)
    back = io.query_from_json(code_d, _via_text(io.query_to_json(q)))
    assert back == q


def test_certificate_serializes(code_d):
    q = DeepHoleQuery(code_d, 0, 3, Polynomial(ref.F11, ref.D_CLASS1["f"]), 4)
    cert = mdsgen.extend_with_deep_hole(code_d, q)
    d = _via_text(io.certificate_to_json(cert))
    assert d["branch"] == "class1-eq" and d["mds_proof"] is True
    assert io.code_from_json(d["child"]).G == cert.child.G
    assert [int(x) for x in d["row"]] == ref.D_CHILD_LAST_ROWS["eq"][:-1]
