import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ehzcodes import codes as cl
from ehzcodes.codes import EvalConfig, Polynomial
from ehzcodes.errors import (BadDimension, DimensionMismatch, DuplicatePoints, NotInVk,
                             WrongKind)
from ehzcodes.fqmat import FqMatrix, matmul, same_row_space, transpose
from ehzcodes.gf import FieldSpec

import reference as ref

F5, F7 = FieldSpec(5), FieldSpec(7)


def test_u_vector_small():
    assert cl.u_vector(F7, [1, 2]).tolist() == [6, 1]


def test_grs_dimension_one():
    code = cl.grs(EvalConfig.create(F5, [0, 1, 2]), 1)
    assert code.G.data.tolist() == [[1, 1, 1]]


@given(st.sampled_from([ref.F11, ref.F13, ref.F16]), st.data())
@settings(max_examples=40, deadline=None)
def test_parity_check_annihilates(F, data):
    n = data.draw(st.integers(5, min(F.q - 1, 10)))
    k = data.draw(st.integers(3, n - 2))
    S = data.draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n, unique=True))
    cfg = EvalConfig.create(F, S)
    for code in (cl.grs(cfg, k), cl.egrs(cfg, k), cl.ehz(cfg, k)):
        assert not matmul(code.G, transpose(code.H)).data.any()
        assert (code.K, code.N - code.K) == (code.G.rows, code.H.rows)


def test_example_generator_and_parity_matrices(code_a, code_b):
    assert code_a.G.data.tolist() == ref.A_G
    assert code_a.H.data.tolist() == ref.A_H
    assert code_b.G == FqMatrix.from_rows(ref.F16, ref.B_G)
    assert code_b.H == FqMatrix.from_rows(ref.F16, ref.B_H)
    assert cl.u_vector(ref.F16, ref.F16.vector(ref.B_S)).tolist() == ref.F16.vector(ref.B_U).tolist()


def test_systematic_generator_spans_code(code_c):
    assert same_row_space(FqMatrix(ref.F13, ref.C_G_SYSTEMATIC), code_c.G)


def test_syndromes(code_a, code_b):
    assert cl.syndrome(code_a, ref.A_Y).tolist() == ref.A_SYNDROME
    assert cl.syndrome(code_b, ref.F16.vector(ref.B_Y)).tolist() == ref.F16.vector(ref.B_SYNDROME).tolist()
    assert not cl.syndrome(code_a, ref.A_CODEWORD).any()
    with pytest.raises(DimensionMismatch):
        cl.syndrome(code_a, [1, 2])


def test_encode_ehz(code_a):
    assert cl.encode_ehz(code_a, Polynomial(ref.F17, [1])).tolist() == ref.A_G[0]
    top = cl.encode_ehz(code_a, Polynomial(ref.F17, [0, 0, 0, 1]))
    assert top.tolist() == ref.A_G[2]
    with pytest.raises(NotInVk):
        cl.encode_ehz(code_a, Polynomial(ref.F17, [0, 0, 1]))
    msg = [2, 5, 7]
    assert cl.encode(code_a, msg).tolist() == cl.encode_ehz(code_a, Polynomial(ref.F17, [2, 5, 0, 7])).tolist()


def test_min_distances(code_a, code_b, code_c):
    assert cl.min_distance_bruteforce(code_a) == 7 and code_a.d_method == "codewords"
    assert cl.min_distance_bruteforce(code_b, guard=10**6) == 7
    assert code_b.d_method == "columns"
    assert cl.min_distance_bruteforce(code_c) == 8


def test_mds_minors(code_a, code_b, code_d):
    assert cl.is_mds_minors(code_a) and cl.is_mds_minors(code_d)
    assert not cl.is_mds_minors(code_b)
    full = cl.generic_code(FqMatrix.identity(F7, 4))
    assert cl.is_mds_minors(full) and full.H.rows == 0


def test_classify(code_a, code_b, code_c):
    assert cl.classify_ehz(code_a) == ("MDS", None)
    verdict, witness = cl.classify_ehz(code_b)
    assert verdict == "NMDS" and len(witness) == 7 and int(ref.F16.sum(np.array(witness))) == 0
    assert int(ref.F16.sum(ref.F16.vector(ref.B_ZERO_SUM_SUBSET))) == 0
    verdict, witness = cl.classify_ehz(code_c)
    assert verdict == "NMDS" and len(witness) == 5 and sum(witness) % 13 == 0
    assert set(witness) <= set(ref.C_S)
    assert sum(ref.C_ZERO_SUM_SUBSET) % 13 == 0
    with pytest.raises(WrongKind):
        cl.classify_ehz(cl.grs(code_a.config, 3))


def test_roth_lempel_mds_follows_delta_sets():
    for delta in range(11):
        code = cl.roth_lempel(ref.F11, ref.D_S, 4, delta)
        assert (code.N, code.K) == (7, 4)
        assert cl.is_mds_minors(code) == (delta in ref.D_DELTA_SETS)
    assert cl.min_distance_bruteforce(cl.roth_lempel(ref.F11, ref.D_S, 4, 0)) == 4


def test_delta_sets():
    assert [d for d in range(11) if cl.is_nk_delta_set(ref.F11, ref.D_S, 3, d)[0]] == ref.D_DELTA_SETS
    ok, wit = cl.is_nk_delta_set(ref.F11, ref.D_S, 3, 1)
    assert not ok and sum(wit) % 11 == 1
    assert cl.is_zero_sum_free(ref.F17, ref.A_S, 3) == (True, None)


def test_schur_square():
    cfg = EvalConfig.create(ref.F11, range(1, 8))
    assert cl.schur_square_dim(cl.grs(cfg, 3)) == 5
    assert cl.schur_product(cl.grs(cfg, 3), cl.grs(cfg, 3)).K == 5
    assert cl.schur_square_dim(cl.grs(cfg, 5)) == 7


def test_elementary_symmetric():
    assert cl.sigma(F7, [1, 2], 1) == 3
    assert cl.sigma(F7, [2, 3], 2) == 6
    assert cl.sigma(F7, [2, 3], 5) == 0
    T = [3, 5, 6, 10]
    for i in range(5):
        direct = sum(int(np.prod(c)) for c in itertools.combinations(T, i)) % 11
        assert cl.sigma(ref.F11, T, i) == direct
    vals = np.array([[1, 2, 3], [4, 5, 6]])
    s1, s2 = cl.sigma12_batched(ref.F11, vals)
    assert s1.tolist() == [cl.sigma(ref.F11, r, 1) for r in vals.tolist()]
    assert s2.tolist() == [cl.sigma(ref.F11, r, 2) for r in vals.tolist()]


def test_weight_enumerator_mds_counts(code_d):
    we = cl.weight_enumerator(code_d)
    assert sum(we) == 11**3 and we[0] == 1 and we[1:4] == [0, 0, 0]


def test_dual_of_grs_is_grs(code_a):
    cfg = code_a.config
    assert same_row_space(cl.dual(cl.grs(cfg, 3)).G, cl.grs(cfg, 3).H)


def test_construction_errors():
    with pytest.raises(DuplicatePoints):
        EvalConfig.create(F7, [1, 1, 2])
    with pytest.raises(ValueError):
        EvalConfig.create(F7, [1, 2], [1, 0])
    with pytest.raises(BadDimension):
        cl.ehz(EvalConfig.create(F7, [1, 2, 3, 4]), 3)
    with pytest.raises(BadDimension):
        cl.roth_lempel(F7, [1, 2], 3, 0)
    with pytest.raises(ValueError):
        cl.CodeDescriptor("Bogus", FqMatrix.identity(F7, 1), FqMatrix.zeros(F7, 0, 1))
