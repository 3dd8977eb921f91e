import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ehzcodes import codes as cl
from ehzcodes import ecp
from ehzcodes.codes import EvalConfig
from ehzcodes.errors import DimensionMismatch, GammaInS, WrongKind
from ehzcodes.fqmat import FqMatrix, rank

import reference as ref


def test_gamma_transform_example(code_a):
    t = ecp.gamma_transform(code_a.config, 3, ref.A_GAMMA)
    assert list(t.S_prime) == ref.A_S_PRIME
    assert list(t.u_prime) == ref.A_U_PRIME
    assert t.u_prime[-1] == 3
    printed = ecp.gamma_transform(code_a.config, 3, ref.A_GAMMA, exponent="k-1")
    assert list(printed.v_prime) == ref.A_V_PRIME_PRINTED
    with pytest.raises(GammaInS):
        ecp.gamma_transform(code_a.config, 3, 3)
    with pytest.raises(ValueError):
        ecp.gamma_transform(code_a.config, 3, 2, exponent="k+1")


def test_u_prime_matches_direct_weights(code_a):
    # the closed form must agree with u computed directly on the transformed points
    t = ecp.gamma_transform(code_a.config, 3, 2)
    assert cl.u_vector(ref.F17, list(t.S_prime)).tolist() == list(t.u_prime)


def test_decoding_radius(code_a, code_b, code_c, code_d):
    assert ecp.decoding_radius(code_a) == (2, "MdsOdd")
    assert ecp.decoding_radius(code_b) == (3, "NmdsEven")
    assert ecp.decoding_radius(code_c) == (3, "NmdsOdd")
    assert ecp.decoding_radius(code_d) == (1, "MdsEven")
    with pytest.raises(WrongKind):
        ecp.decoding_radius(cl.grs(code_a.config, 3))


def test_example_pair_shapes_and_verification(code_a, code_b):
    pa = ecp.build_ecp(code_a)
    assert (pa.G_A.rows, pa.G_B.rows) == (3, 2)
    assert pa.G_A.data.tolist() == ref.A_GA and pa.G_B.data.tolist() == ref.A_GB
    assert pa.transform.exponent == "k"
    assert ecp.verify_ecp(pa, code_a).all_ok
    pb = ecp.build_ecp(code_b)
    assert (pb.case_tag, pb.G_A.rows, pb.G_B.rows) == ("NmdsEven", 4, 3)
    assert ecp.verify_ecp(pb, code_b).all_ok


def test_printed_v_prime_exponent_breaks_product_condition(code_a):
    pair = ecp._mds_odd_pair(code_a, 2, ref.A_GAMMA, "k-1")
    assert not ecp.verify_ecp(pair, code_a).cond_i


def test_truncated_first_code_fails_rank_condition(code_a):
    pair = ecp.build_ecp(code_a)
    short = ecp.EcpPair(pair.case_tag, pair.ell, FqMatrix(ref.F17, pair.G_A.data[:2]), pair.G_B)
    assert rank(short.G_A) == 2
    assert not ecp.verify_ecp(short, code_a).cond_iii


def test_decode_example_one(code_a):
    out = ecp.decode(code_a, ref.A_Y)
    assert out.variant == "Corrected"
    assert out.codeword.tolist() == ref.A_CODEWORD
    assert out.error.tolist() == ref.A_ERROR
    assert out.positions == ref.A_Z
    assert out.trace["s0"].tolist() == ref.A_S0
    assert out.trace["a"].tolist() == ref.A_LOCATOR
    assert out.trace["Z"] == ref.A_Z


def test_decode_codeword_and_bad_length(code_a):
    out = ecp.decode(code_a, ref.A_CODEWORD)
    assert out.variant == "AlreadyCodeword" and out.ok
    with pytest.raises(DimensionMismatch):
        ecp.decode(code_a, [1, 2, 3])


def test_decode_example_two_reports_too_many_errors(code_b):
    out = ecp.decode(code_b, ref.F16.vector(ref.B_Y))
    assert out.variant == "TooManyErrors" and not out.ok
    assert out.reason.startswith("more than 3 errors")


def test_default_gamma(code_a):
    assert ecp.default_gamma(code_a.config) == 2
    full = EvalConfig.create(ref.F11, range(1, 11))
    assert ecp.default_gamma(full) == 0


@st.composite
def ehz_instances(draw):
    F = draw(st.sampled_from([ref.F11, ref.F13, ref.F16, ref.F17]))
    n = draw(st.integers(6, min(F.q - 2, 11)))
    k = draw(st.integers(3, n - 2))
    S = draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n, unique=True))
    return cl.ehz(EvalConfig.create(F, S), k)


@given(ehz_instances(), st.data())
@settings(max_examples=60, deadline=None)
def test_round_trip_within_radius(code, data):
    F = code.field
    pair = ecp.build_ecp(code)
    msg = data.draw(st.lists(st.integers(0, F.q - 1), min_size=code.K, max_size=code.K))
    c = cl.encode(code, msg)
    wt = data.draw(st.integers(0, pair.ell))
    pos = data.draw(st.lists(st.integers(0, code.N - 1), min_size=wt, max_size=wt, unique=True))
    e = np.zeros(code.N, dtype=np.int64)
    for p in pos:
        e[p] = data.draw(st.integers(1, F.q - 1))
    out = ecp.decode(code, F.add(c, e), pair)
    assert out.ok
    assert out.codeword.tolist() == c.tolist()
    assert set(out.positions) == set(pos)
    if wt:
        assert set(out.positions) <= set(out.trace["Z"])
