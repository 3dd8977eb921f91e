"""
Error-correcting pairs for extended Han-Zhang codes and the pair decoder.

An ``l``-ECP of a code ``C`` of length ``N`` is a pair of codes ``(A, B)``
with ``A * B`` inside the dual of ``C``, ``d(B^perp) > l``, ``dim A > l`` and
``d(A) + d(C) > N``.  Such a pair locates up to ``l`` errors through a
kernel computation and recovers their values with one linear solve.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from . import codes as cl
from .codes import CodeDescriptor, EvalConfig
from .errors import DimensionMismatch, GammaInS, GuardExceeded, NoValidPair, WrongKind
from .fqmat import (FqMatrix, Unique, _null_space_array, column_subsets_full_rank,
                    first_singular_minor, mat_mul_arrays, rank, solve)
from .gf import FieldSpec

CASES = ("MdsOdd", "MdsEven", "NmdsOdd", "NmdsEven")


@dataclass(frozen=True)
class TransformedConfig:
    """Points ``S'``, multipliers ``v'`` and weights ``u'`` after moving ``gamma`` to infinity."""

    gamma: int
    exponent: str
    S_prime: tuple[int, ...]
    v_prime: tuple[int, ...]
    u_prime: tuple[int, ...]


@dataclass
class EcpPair:
    case_tag: str
    ell: int
    G_A: FqMatrix
    G_B: FqMatrix
    transform: TransformedConfig | None = None


@dataclass
class DecodeOutcome:
    """Result of one decoding attempt.

    ``variant`` is ``"AlreadyCodeword"``, ``"Corrected"`` or ``"TooManyErrors"``;
    ``trace`` keeps the intermediate quantities (syndrome, kernel basis,
    locator vector ``a`` and its zero set ``Z``).
    """

    variant: str
    codeword: np.ndarray | None = None
    error: np.ndarray | None = None
    positions: tuple[int, ...] = ()
    reason: str = ""
    trace: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.variant != "TooManyErrors"


# --- gamma transform -------------------------------------------------------------------------

def u_prime_weights(field: FieldSpec, S: np.ndarray, gamma: int) -> np.ndarray:
    """Closed-form weights of the transformed point set (last entry for the point 0)."""
    n = S.size
    x = field.sub(S, gamma)
    out = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        acc = field.pow(int(x[i]), n)
        for j in range(n):
            if j != i:
                acc = field.mul(acc, field.div(int(x[j]), field.sub(int(S[j]), int(S[i]))))
        out[i] = acc
    last = 1
    for j in range(n):
        last = field.mul(last, int(x[j]))
    out[n] = last if n % 2 == 0 else field.neg(last)
    return out


def gamma_transform(cfg: EvalConfig, k: int, gamma, exponent: str = "k") -> TransformedConfig:
    """Map ``a_i -> (a_i - gamma)^{-1}`` and append the point 0.

    ``exponent`` selects ``v'_i = v_i (a_i - gamma)^e`` with ``e = k`` or
    ``e = k - 1``.
    """
    F = cfg.field
    g = int(F.vector([gamma])[0])
    if g in cfg.S:
        raise GammaInS(f"gamma = {g} lies in the evaluation set")
    if exponent not in ("k", "k-1"):
        raise ValueError("exponent must be 'k' or 'k-1'")
    e = k if exponent == "k" else k - 1
    S = cfg.points
    x = F.sub(S, g)
    Sp = np.append(F.inv(x), 0)
    vp = np.append(F.mul(cfg.mults, F.pow(x, e)), 1)
    up = u_prime_weights(F, S, g)
    return TransformedConfig(g, exponent, tuple(map(int, Sp)), tuple(map(int, vp)), tuple(map(int, up)))


def default_gamma(cfg: EvalConfig) -> int:
    """First nonzero field element outside ``S``; 0 only when nothing else is free."""
    used = set(cfg.S)
    for g in range(1, cfg.field.q):
        if g not in used:
            return g
    if 0 not in used:
        return 0
    raise NoValidPair("every field element is an evaluation point; no gamma available")


# --- pair construction --------------------------------------------------------------------

def _require_ehz(code: CodeDescriptor) -> None:
    if code.kind != "EHZ":
        raise WrongKind(f"expected an EHZ code, got {code.kind}")


def ehz_distance(code: CodeDescriptor) -> int:
    """Minimum distance of an EHZ code from the zero-sum criterion."""
    _require_ehz(code)
    verdict, _ = cl.classify_ehz(code)
    n, k = code.config.n, code.K
    return n - k + 2 if verdict == "MDS" else n - k + 1


def decoding_radius(code: CodeDescriptor) -> tuple[int, str]:
    _require_ehz(code)
    n, k = code.config.n, code.K
    verdict, _ = cl.classify_ehz(code)
    odd = (n - k) % 2 == 1
    if verdict == "MDS":
        return ((n - k - 1) // 2, "MdsOdd") if odd else ((n - k) // 2, "MdsEven")
    return ((n - k - 1) // 2, "NmdsOdd") if odd else ((n - k) // 2, "NmdsEven")


def _dual_mults(cfg: EvalConfig) -> np.ndarray:
    F = cfg.field
    return F.mul(F.inv(cfg.mults), cl.u_vector(F, cfg.S))


def _egrs(cfg: EvalConfig, k: int, v: np.ndarray) -> np.ndarray:
    return cl._egrs_matrix(cfg, k, v)


def _mds_odd_pair(code: CodeDescriptor, ell: int, gamma: int, exponent: str) -> EcpPair:
    cfg = code.config
    F = cfg.field
    t = gamma_transform(cfg, code.K, gamma, exponent)
    Sp = np.array(t.S_prime, dtype=np.int64)
    vp = np.array(t.v_prime, dtype=np.int64)
    up = np.array(t.u_prime, dtype=np.int64)
    ones = np.ones(Sp.size, dtype=np.int64)
    GA = cl._vandermonde(F, Sp, ones, range(ell + 1))
    GB = cl._vandermonde(F, Sp, F.mul(F.inv(vp), up), range(ell))
    return EcpPair("MdsOdd", ell, FqMatrix(F, GA), FqMatrix(F, GB), t)


def _pair_for_case(code: CodeDescriptor, case: str, ell: int) -> EcpPair:
    cfg = code.config
    F = cfg.field
    ones = np.ones(cfg.n, dtype=np.int64)
    w = _dual_mults(cfg)
    if case in ("MdsEven", "NmdsEven"):
        GA = _egrs(cfg, ell + 1, ones)
        GB = _egrs(cfg, ell, w)
        GB[:, -1] = F.neg(GB[:, -1])
    elif case == "NmdsOdd":
        body = cl._vandermonde(F, cfg.points, ones, range(ell + 1))
        GA = np.hstack([body, np.zeros((ell + 1, 1), dtype=np.int64)])
        GB = _egrs(cfg, ell, w)
    else:
        raise ValueError(case)
    return EcpPair(case, ell, FqMatrix(F, GA), FqMatrix(F, GB))


def build_ecp(code: CodeDescriptor, gamma=None, verify: bool = True) -> EcpPair:
    """Construct the pair prescribed for the code's case.

    For the MDS odd case the construction passes through the gamma transform;
    the ``v'`` exponent ``k`` is tried first and ``k - 1`` second, and the one
    that verifies is recorded on ``pair.transform``.
    """
    _require_ehz(code)
    ell, case = decoding_radius(code)
    if case != "MdsOdd":
        pair = _pair_for_case(code, case, ell)
        if verify and not verify_ecp(pair, code).all_ok:
            raise NoValidPair(f"constructed {case} pair failed verification")
        return pair
    g = default_gamma(code.config) if gamma is None else int(code.field.vector([gamma])[0])
    for exponent in ("k", "k-1"):
        pair = _mds_odd_pair(code, ell, g, exponent)
        if not verify or verify_ecp(pair, code).all_ok:
            return pair
    raise NoValidPair("neither v' exponent yields a valid pair")


# --- verification ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EcpReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    d_A: int | None = None
    d_C: int | None = None

    @property
    def all_ok(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv

    def as_dict(self) -> dict:
        return {"cond_i": self.cond_i, "cond_ii": self.cond_ii, "cond_iii": self.cond_iii,
                "cond_iv": self.cond_iv, "d_A": self.d_A, "d_C": self.d_C}


def _columns_independent(field: FieldSpec, M: np.ndarray, t: int, guard: int) -> bool:
    """Every set of at most ``t`` columns of ``M`` is linearly independent."""
    N = M.shape[1]
    for w in range(1, t + 1):
        if w > M.shape[0]:
            return False
        if cl.math.comb(N, w) > guard:
            raise GuardExceeded(f"C({N},{w}) column subsets exceeds guard {guard}")
        combos = itertools.combinations(range(N), w)
        while True:
            block = list(itertools.islice(combos, 20000))
            if not block:
                break
            if not column_subsets_full_rank(field, M, np.array(block, dtype=np.int64)).all():
                return False
    return True


def code_distance(G: FqMatrix, guard: int = cl.DEFAULT_GUARD) -> int:
    """Minimum distance of the code spanned by ``G``: MDS shortcut, then exhaustive."""
    keep = np.flatnonzero(np.any(G.data != 0, axis=0))
    Gp = FqMatrix(G.field, G.data[:, keep])
    r = rank(Gp)
    if r == Gp.rows and first_singular_minor(Gp, guard=guard) is None:
        return Gp.cols - r + 1
    return cl.min_distance_bruteforce(cl.generic_code(Gp), guard)


def verify_ecp(pair: EcpPair, code: CodeDescriptor, guard: int = cl.DEFAULT_GUARD) -> EcpReport:
    F = code.field
    GA, GB = pair.G_A.data, pair.G_B.data
    if GA.shape[1] != code.N or GB.shape[1] != code.N:
        raise DimensionMismatch("pair length differs from code length")
    ell = pair.ell
    prods = F.mul(GA[:, None, :], GB[None, :, :]).reshape(-1, code.N)
    cond_i = not np.any(mat_mul_arrays(F, prods, code.G.data.T))
    cond_ii = _columns_independent(F, GB, ell, guard)
    cond_iii = rank(pair.G_A) > ell
    d_A = code_distance(pair.G_A, guard)
    if code.d is not None:
        d_C = code.d
    elif code.kind == "EHZ":
        d_C = ehz_distance(code)
    else:
        d_C = cl.min_distance_bruteforce(code, guard)
    cond_iv = d_A + d_C > code.N
    return EcpReport(bool(cond_i), bool(cond_ii), bool(cond_iii), bool(cond_iv), d_A, d_C)


# --- decoding ----------------------------------------------------------------------------------

def ecp_decode(code: CodeDescriptor, pair: EcpPair, y) -> DecodeOutcome:
    """Decode ``y`` with the pair; corrects any error pattern of weight ``<= pair.ell``."""
    F = code.field
    yv = F.vector(y) if not isinstance(y, np.ndarray) else np.asarray(y, dtype=np.int64)
    if yv.shape != (code.N,):
        raise DimensionMismatch(f"received word of length {yv.size}, expected {code.N}")
    syn = cl.syndrome(code, yv)
    trace: dict[str, Any] = {"syndrome": syn}
    if not np.any(syn):
        return DecodeOutcome("AlreadyCodeword", yv.copy(), np.zeros_like(yv), (), "", trace)

    ell = pair.ell
    GA, GB = pair.G_A.data, pair.G_B.data
    M = mat_mul_arrays(F, F.mul(GB, yv[None, :]), GA.T)
    basis = _null_space_array(F, M)
    if basis.shape[0]:
        # scale each basis vector so its first nonzero entry is 1
        lead = basis[np.arange(basis.shape[0]), (basis != 0).argmax(axis=1)]
        basis = F.mul(basis, F.inv(lead)[:, None])
    trace["s_basis"] = basis
    if basis.shape[0] == 0:
        return DecodeOutcome("TooManyErrors", reason=f"more than {ell} errors: trivial locator space",
                             trace=trace)
    s0 = basis[0]
    a = mat_mul_arrays(F, s0[None, :], GA)[0]
    Z = tuple(int(i) for i in np.flatnonzero(a == 0))
    trace.update(s0=s0, a=a, Z=Z)
    if len(Z) > code.N - code.K:
        return DecodeOutcome("TooManyErrors", reason=f"more than {ell} errors: |Z| = {len(Z)} too large",
                             trace=trace)
    H = code.H.data
    sol = solve(FqMatrix(F, H[:, list(Z)].reshape(H.shape[0], len(Z))), syn)
    if not isinstance(sol, Unique):
        kind = type(sol).__name__.lower()
        return DecodeOutcome("TooManyErrors", reason=f"more than {ell} errors: restricted system {kind}",
                             trace=trace)
    x = np.zeros(code.N, dtype=np.int64)
    x[list(Z)] = sol.x
    support = tuple(int(i) for i in np.flatnonzero(x))
    if len(support) > ell:
        return DecodeOutcome("TooManyErrors", reason=f"more than {ell} errors: solution weight {len(support)}",
                             trace=trace)
    c = F.sub(yv, x)
    return DecodeOutcome("Corrected", c, x, support, "", trace)


def decode(code: CodeDescriptor, y, pair: EcpPair | None = None) -> DecodeOutcome:
    return ecp_decode(code, pair or build_ecp(code), y)
