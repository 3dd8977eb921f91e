import itertools

import numpy as np
import pytest

from ehzcodes import codes as cl
from ehzcodes import oracle
from ehzcodes.errors import DimensionMismatch, GuardExceeded
from ehzcodes.fqmat import FqMatrix
from ehzcodes.gf import FieldSpec

import reference as ref


def test_nearest_codeword_example(code_a):
    res = oracle.nearest_codeword(code_a, ref.A_Y)
    assert res.distance == 2 and res.unique
    assert res.codeword.tolist() == ref.A_CODEWORD


def test_distance_of_codeword_and_deep_hole(code_a, code_d):
    assert oracle.error_distance(code_a, ref.A_CODEWORD) == 0
    assert oracle.error_distance(code_d, ref.D_CLASS2_VECTOR) == 3
    for v in ref.D_CLASS1_VECTORS:
        assert oracle.error_distance(code_d, v) == 3


def test_ties_are_reported(code_d):
    res = oracle.nearest_codeword(code_d, ref.D_CLASS2_VECTOR)
    assert not res.unique


def test_all_deep_holes_toy_code():
    F3 = FieldSpec(3)
    G = [[1, 0, 1, 1], [0, 1, 1, 2]]
    code = cl.generic_code(FqMatrix(F3, G))
    words = [tuple((a * np.array(G[0]) + b * np.array(G[1])) % 3) for a in range(3) for b in range(3)]
    dist = {v: min(sum(x != y for x, y in zip(v, c)) for c in words)
            for v in itertools.product(range(3), repeat=4)}
    rho = max(dist.values())
    assert oracle.covering_radius_bruteforce(code) == rho
    expected = [v for v in itertools.product(range(3), repeat=4) if dist[v] == rho]
    assert [tuple(v) for v in oracle.all_deep_holes(code)] == expected


def test_budgets(code_a):
    with pytest.raises(ValueError):
        oracle.OracleBudget(max_codewords=0)
    with pytest.raises(GuardExceeded):
        oracle.nearest_codeword(code_a, ref.A_Y, oracle.OracleBudget(max_codewords=100))
    with pytest.raises(GuardExceeded):
        oracle.covering_radius_bruteforce(code_a, oracle.OracleBudget(max_vectors=1000))
    with pytest.raises(DimensionMismatch):
        oracle.error_distance(code_a, [1, 2])
