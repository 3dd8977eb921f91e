import sys, pathlib; sys.path.insert(0, str(pathlib.Path(__file__).parent))
import numpy as np
import pytest

from ehzcodes import codes as cl
from ehzcodes.codes import EvalConfig

import reference as ref


@pytest.fixture(scope="session")
def code_a():
    return cl.ehz(EvalConfig.create(ref.F17, ref.A_S), ref.A_K)


@pytest.fixture(scope="session")
def code_b():
    return cl.ehz(EvalConfig.create(ref.F16, ref.B_S), ref.B_K)


@pytest.fixture(scope="session")
def code_c():
    return cl.ehz(EvalConfig.create(ref.F13, ref.C_S), ref.C_K)


@pytest.fixture(scope="session")
def code_d():
    return cl.ehz(EvalConfig.create(ref.F11, ref.D_S), ref.D_K)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
