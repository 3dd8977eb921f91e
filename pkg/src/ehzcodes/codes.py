"""
Code constructions and basic analytics.

Builds generalized Reed-Solomon (GRS), extended GRS (EGRS), Roth-Lempel and
extended Han-Zhang (EHZ) codes with explicit generator and parity-check
matrices, and provides exhaustive analytics for small codes: minimum distance,
the MDS minor test, duals, Schur products and the subset predicates that
decide when the constructions are MDS.

Every descriptor is validated on construction: ``rank(G) = K``,
``rank(H) = N - K`` and ``G H^T = 0``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import (BadDimension, DimensionMismatch, DuplicatePoints, GuardExceeded,
                     NotInVk, WrongKind)
from .fqmat import (FqMatrix, _null_space_array, _rref_array, column_subsets_full_rank,
                    first_singular_minor, mat_mul_arrays, rank)
from .gf import FieldElement, FieldSpec

KINDS = ("GRS", "EGRS", "EHZ", "RothLempel", "Extension", "Generic")
DEFAULT_GUARD = 10**7


# --- domain types -------------------------------------------------------------------

@dataclass(frozen=True)
class EvalConfig:
    """Evaluation points ``S = (a_1..a_n)`` and nonzero multipliers ``v``.

    Points and multipliers are stored packed as tuples of ints.
    """

    field: FieldSpec
    S: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.S) != len(self.v):
            raise DimensionMismatch(f"{len(self.S)} points but {len(self.v)} multipliers")
        if len(set(self.S)) != len(self.S):
            raise DuplicatePoints("evaluation points must be pairwise distinct")
        if any(x == 0 for x in self.v):
            raise ValueError("multipliers must be nonzero")
        if len(self.S) > self.field.q:
            raise BadDimension(f"n = {len(self.S)} exceeds q = {self.field.q}")

    @classmethod
    def create(cls, field: FieldSpec, S: Iterable, v: Iterable | None = None) -> "EvalConfig":
        pts = tuple(int(x) for x in field.vector(S))
        mult = tuple(int(x) for x in field.vector(v)) if v is not None else (1,) * len(pts)
        return cls(field, pts, mult)

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def points(self) -> np.ndarray:
        return np.array(self.S, dtype=np.int64)

    @property
    def mults(self) -> np.ndarray:
        return np.array(self.v, dtype=np.int64)


class Polynomial:
    """Polynomial over GF(q) with coefficients indexed by degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable):
        c = [int(x) for x in field.vector(coeffs)]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        """Evaluate at a packed value or array of packed values (Horner)."""
        F = self.field
        scalar = not isinstance(x, np.ndarray)
        xs = np.atleast_1d(np.asarray(x, dtype=np.int64))
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, xs), c)
        return int(acc[0]) if scalar else acc

    def in_Fqk(self, k: int) -> bool:
        return self.degree < k

    def in_Vk(self, k: int) -> bool:
        return self.degree <= k and self.coeff(k - 1) == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.key, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"


@dataclass
class CodeDescriptor:
    """A linear ``[N, K]`` code with generator ``G`` and parity-check ``H``."""

    kind: str
    G: FqMatrix
    H: FqMatrix
    config: EvalConfig | None = None
    extras: dict[str, Any] = dc_field(default_factory=dict)
    d: int | None = None
    d_method: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown code kind {self.kind!r}")
        validate_code(self.G, self.H)

    @property
    def field(self) -> FieldSpec:
        return self.G.field

    @property
    def N(self) -> int:
        return self.G.cols

    @property
    def K(self) -> int:
        return self.G.rows


def validate_code(G: FqMatrix, H: FqMatrix) -> None:
    if G.field != H.field:
        raise DimensionMismatch("G and H over different fields")
    if G.cols != H.cols:
        raise DimensionMismatch(f"G has {G.cols} columns, H has {H.cols}")
    K, N = G.shape
    if H.rows != N - K:
        raise DimensionMismatch(f"H must have {N - K} rows, got {H.rows}")
    if rank(G) != K:
        raise DimensionMismatch("generator matrix is not of full row rank")
    if rank(H) != N - K:
        raise DimensionMismatch("parity-check matrix is not of full row rank")
    if K and H.rows and np.any(mat_mul_arrays(G.field, G.data, H.data.T)):
        raise AssertionError("G H^T != 0: parity-check matrix does not annihilate the code")


def generic_code(G: FqMatrix, kind: str = "Generic", extras: dict | None = None) -> CodeDescriptor:
    """Wrap an arbitrary full-rank generator matrix, deriving ``H`` from its kernel."""
    if rank(G) != G.rows:
        raise DimensionMismatch("generator matrix is not of full row rank")
    H = FqMatrix(G.field, _null_space_array(G.field, G.data).reshape(-1, G.cols))
    return CodeDescriptor(kind, G, H, extras=dict(extras or {}))


# --- multipliers and evaluation matrices -------------------------------------------------

def u_vector(field: FieldSpec, S: Sequence) -> np.ndarray:
    """``u_i = prod_{j != i} (a_i - a_j)^{-1}``."""
    a = field.vector(S)
    if len(set(a.tolist())) != a.size:
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    if a.size < 2:
        raise BadDimension("need at least two points")
    diff = field.sub(a[:, None], a[None, :])
    np.fill_diagonal(diff, 1)
    prod = np.ones(a.size, dtype=np.int64)
    for j in range(a.size):
        prod = field.mul(prod, diff[:, j])
    return field.inv(prod)


def _vandermonde(field: FieldSpec, a: np.ndarray, v: np.ndarray, degrees: Sequence[int]) -> np.ndarray:
    if len(degrees) == 0:
        return np.zeros((0, a.size), dtype=np.int64)
    e = np.asarray(degrees, dtype=np.int64)[:, None]
    return field.mul(field.pow(a[None, :], e), v[None, :])


def _grs_matrix(cfg: EvalConfig, k: int, v: np.ndarray | None = None) -> np.ndarray:
    vv = cfg.mults if v is None else v
    return _vandermonde(cfg.field, cfg.points, vv, range(k))


def _egrs_matrix(cfg: EvalConfig, k: int, v: np.ndarray | None = None) -> np.ndarray:
    body = _grs_matrix(cfg, k, v)
    tail = np.zeros((k, 1), dtype=np.int64)
    if k:
        tail[-1, 0] = 1
    return np.hstack([body, tail])


def _dual_mults(cfg: EvalConfig) -> np.ndarray:
    F = cfg.field
    return F.mul(F.inv(cfg.mults), u_vector(F, cfg.S))


def grs(cfg: EvalConfig, k: int) -> CodeDescriptor:
    """``GRS_k(S, v)``: rows ``(v_i a_i^j)`` for ``j < k``."""
    n = cfg.n
    if not 1 <= k <= n:
        raise BadDimension(f"GRS dimension must satisfy 1 <= k <= n = {n}, got {k}")
    F = cfg.field
    G = FqMatrix(F, _grs_matrix(cfg, k))
    if n - k:
        H = FqMatrix(F, _grs_matrix(cfg, n - k, _dual_mults(cfg)))
    else:
        H = FqMatrix.zeros(F, 0, n)
    return CodeDescriptor("GRS", G, H, cfg, {}, n - k + 1, "analytic")


def egrs(cfg: EvalConfig, k: int) -> CodeDescriptor:
    """``GRS_k(S, v, inf)``: the GRS rows plus a point at infinity on the top degree."""
    n = cfg.n
    if not 1 <= k <= n:
        raise BadDimension(f"EGRS dimension must satisfy 1 <= k <= n = {n}, got {k}")
    F = cfg.field
    G = FqMatrix(F, _egrs_matrix(cfg, k))
    Hd = _egrs_matrix(cfg, n - k + 1, _dual_mults(cfg))
    Hd[:, -1] = F.neg(Hd[:, -1])
    H = FqMatrix(F, Hd)
    return CodeDescriptor("EGRS", G, H, cfg, {}, n - k + 2, "analytic")


def ehz_generator(cfg: EvalConfig, k: int) -> np.ndarray:
    F = cfg.field
    degrees = list(range(k - 1)) + [k]
    body = _vandermonde(F, cfg.points, cfg.mults, degrees)
    tail = np.zeros((k, 1), dtype=np.int64)
    tail[-1, 0] = 1
    return np.hstack([body, tail])


def ehz_parity_check(cfg: EvalConfig, k: int) -> np.ndarray:
    F = cfg.field
    n = cfg.n
    body = _vandermonde(F, cfg.points, _dual_mults(cfg), range(n - k + 1))
    tail = np.zeros((n - k + 1, 1), dtype=np.int64)
    tail[n - k - 1, 0] = F.neg(1)
    tail[n - k, 0] = F.neg(int(F.sum(cfg.points)))
    return np.hstack([body, tail])


def ehz(cfg: EvalConfig, k: int) -> CodeDescriptor:
    """Extended Han-Zhang code ``C_k(S, v, inf)`` of length ``n + 1``.

    Codewords are ``(v_1 f(a_1), ..., v_n f(a_n), f_k)`` for ``f`` in ``V_k``,
    the polynomials of degree at most ``k`` with no ``x^(k-1)`` term.
    """
    n = cfg.n
    if not (3 <= k <= n - 2 and n - 2 <= cfg.field.q - 2):
        raise BadDimension(f"EHZ code needs 3 <= k <= n-2 <= q-2, got k={k}, n={n}, q={cfg.field.q}")
    F = cfg.field
    G = FqMatrix(F, ehz_generator(cfg, k))
    H = FqMatrix(F, ehz_parity_check(cfg, k))
    return CodeDescriptor("EHZ", G, H, cfg, {"k": k})


def roth_lempel(field: FieldSpec, S: Sequence, k: int, delta) -> CodeDescriptor:
    """Roth-Lempel code ``RL_{k,delta}(S)`` of length ``n + 2``."""
    a = field.vector(S)
    n = a.size
    if len(set(a.tolist())) != n:
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    if not 3 <= k <= n <= field.q:
        raise BadDimension(f"Roth-Lempel code needs 3 <= k <= n <= q, got k={k}, n={n}")
    dl = int(field.vector([delta])[0])
    body = _vandermonde(field, a, np.ones(n, dtype=np.int64), range(k))
    tail = np.zeros((k, 2), dtype=np.int64)
    tail[k - 1, 0] = 1
    tail[k - 2, 1] = 1
    tail[k - 1, 1] = dl
    G = FqMatrix(field, np.hstack([body, tail]))
    code = generic_code(G, "RothLempel", {"delta": dl, "k": k})
    code.config = EvalConfig.create(field, a)
    return code


# --- encoding ------------------------------------------------------------------------

def encode(code: CodeDescriptor, message: Sequence) -> np.ndarray:
    msg = code.field.vector(message) if not isinstance(message, np.ndarray) else message
    if msg.shape != (code.K,):
        raise DimensionMismatch(f"message of length {msg.size}, expected {code.K}")
    return mat_mul_arrays(code.field, msg[None, :], code.G.data)[0]


def encode_ehz(code: CodeDescriptor, f: Polynomial) -> np.ndarray:
    """Codeword ``(v_1 f(a_1), ..., v_n f(a_n), f_k)``."""
    if code.kind != "EHZ":
        raise WrongKind(f"expected an EHZ code, got {code.kind}")
    k = code.K
    if not f.in_Vk(k):
        raise NotInVk(f"{f} is not in V_{k}")
    cfg = code.config
    F = code.field
    body = F.mul(cfg.mults, f(cfg.points))
    return np.append(body, f.coeff(k)).astype(np.int64)


def syndrome(code: CodeDescriptor, y: Sequence) -> np.ndarray:
    """``H y^T``."""
    vec = code.field.vector(y) if not isinstance(y, np.ndarray) else np.asarray(y, dtype=np.int64)
    if vec.shape != (code.N,):
        raise DimensionMismatch(f"word of length {vec.size}, expected {code.N}")
    return mat_mul_arrays(code.field, code.H.data, vec[:, None])[:, 0]


# --- exhaustive analytics ---------------------------------------------------------------

def _messages(q: int, K: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, K), dtype=np.int64)
    for j in range(K - 1, -1, -1):
        out[:, j] = idx % q
        idx //= q
    return out


def iter_codewords(code: CodeDescriptor, guard: int = DEFAULT_GUARD, chunk: int = 1 << 15):
    """Yield blocks of all ``q^K`` codewords in message order."""
    q, K = code.field.q, code.K
    total = q**K
    if total > guard:
        raise GuardExceeded(f"{q}^{K} codewords exceeds guard {guard}")
    for s in range(0, total, chunk):
        msgs = _messages(q, K, s, min(total, s + chunk))
        yield mat_mul_arrays(code.field, msgs, code.G.data)


def weight_enumerator(code: CodeDescriptor, guard: int = DEFAULT_GUARD) -> list[int]:
    counts = np.zeros(code.N + 1, dtype=np.int64)
    for block in iter_codewords(code, guard):
        counts += np.bincount((block != 0).sum(axis=1), minlength=code.N + 1)
    return counts.tolist()


def _dependency_cost(N: int, r: int) -> int:
    return sum(math.comb(N, w) for w in range(1, min(N, r) + 1))


def _min_distance_by_columns(code: CodeDescriptor, chunk: int = 20000) -> int:
    # d is the least number of linearly dependent columns of H
    H = code.H.data
    N, r = code.N, code.H.rows
    for w in range(1, r + 1):
        combos = itertools.combinations(range(N), w)
        while True:
            block = list(itertools.islice(combos, chunk))
            if not block:
                break
            ok = column_subsets_full_rank(code.field, H, np.array(block, dtype=np.int64))
            if not ok.all():
                return w
    return r + 1


def min_distance_bruteforce(code: CodeDescriptor, guard: int = DEFAULT_GUARD) -> int:
    """Exact minimum distance by exhaustive search.

    Enumerates the ``q^K`` codewords when that fits the guard; otherwise
    searches for the smallest dependent set of parity-check columns, whose
    cost is bounded by ``sum_{w <= N-K} C(N, w)`` rank tests.
    """
    if code.K == 0:
        raise BadDimension("the zero code has no minimum distance")
    if code.field.q**code.K <= guard:
        best = code.N
        for block in iter_codewords(code, guard):
            wts = (block != 0).sum(axis=1)
            wts = wts[wts > 0]
            if wts.size:
                best = min(best, int(wts.min()))
        method = "codewords"
    elif _dependency_cost(code.N, code.H.rows) <= guard:
        best = _min_distance_by_columns(code)
        method = "columns"
    else:
        raise GuardExceeded(
            f"neither {code.field.q}^{code.K} codewords nor the column search fits guard {guard}")
    code.d, code.d_method = best, method
    return best


def is_mds_minors(code: CodeDescriptor, guard: int = DEFAULT_GUARD) -> bool:
    """True iff every ``K``-column minor of ``G`` is nonzero."""
    if code.K == 0:
        return True
    return first_singular_minor(code.G, guard=guard) is None


def dual(code: CodeDescriptor) -> CodeDescriptor:
    F = code.field
    Gd = FqMatrix(F, _null_space_array(F, code.G.data).reshape(-1, code.N))
    return CodeDescriptor("Generic", Gd, code.G)


def schur_product(c1: CodeDescriptor, c2: CodeDescriptor) -> CodeDescriptor:
    """Span of all coordinatewise products of generator rows."""
    if c1.field != c2.field:
        raise DimensionMismatch("codes over different fields")
    if c1.N != c2.N:
        raise DimensionMismatch(f"lengths {c1.N} and {c2.N} differ")
    F = c1.field
    prods = F.mul(c1.G.data[:, None, :], c2.G.data[None, :, :]).reshape(-1, c1.N)
    R, r, _ = _rref_array(F, prods)
    return generic_code(FqMatrix(F, R[:r]))


def schur_square_dim(code: CodeDescriptor) -> int:
    F = code.field
    prods = F.mul(code.G.data[:, None, :], code.G.data[None, :, :]).reshape(-1, code.N)
    return _rref_array(F, prods)[1]


# --- subset predicates -----------------------------------------------------------------

def _subset_sum_hits(field: FieldSpec, S: Sequence, k: int, target: int,
                     guard: int, chunk: int = 1 << 15) -> tuple[int, ...] | None:
    a = field.vector(S)
    if not 0 <= k <= a.size:
        raise BadDimension(f"subset size {k} out of range for {a.size} points")
    total = math.comb(a.size, k)
    if total > guard:
        raise GuardExceeded(f"C({a.size},{k}) = {total} subsets exceeds guard {guard}")
    combos = itertools.combinations(range(a.size), k)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return None
        idx = np.array(block, dtype=np.int64).reshape(len(block), k)
        sums = field.sum(a[idx], axis=1) if k else np.zeros(len(block), dtype=np.int64)
        hit = np.flatnonzero(np.asarray(sums) == target)
        if hit.size:
            return tuple(int(x) for x in a[idx[hit[0]]])


def is_zero_sum_free(field: FieldSpec, S: Sequence, k: int,
                     guard: int = DEFAULT_GUARD) -> tuple[bool, tuple[int, ...] | None]:
    """No ``k``-subset of ``S`` sums to zero; returns ``(verdict, witness)``."""
    w = _subset_sum_hits(field, S, k, 0, guard)
    return w is None, w


def is_nk_delta_set(field: FieldSpec, S: Sequence, k: int, delta,
                    guard: int = DEFAULT_GUARD) -> tuple[bool, tuple[int, ...] | None]:
    """No ``k``-subset of ``S`` sums to ``delta``; returns ``(verdict, witness)``."""
    dl = int(field.vector([delta])[0])
    w = _subset_sum_hits(field, S, k, dl, guard)
    return w is None, w


def classify_ehz(code: CodeDescriptor, guard: int = DEFAULT_GUARD) -> tuple[str, tuple[int, ...] | None]:
    """``("MDS", None)`` or ``("NMDS", witness)`` for an EHZ code."""
    if code.kind != "EHZ":
        raise WrongKind(f"expected an EHZ code, got {code.kind}")
    free, witness = is_zero_sum_free(code.field, code.config.S, code.K, guard)
    return ("MDS", None) if free else ("NMDS", witness)


def elementary_symmetric(field: FieldSpec, T: Sequence) -> list[int]:
    """``[sigma_0, ..., sigma_|T|]``, the coefficients of ``prod (x + t)`` from the top."""
    sig = [1]
    for t in field.vector(T).tolist():
        nxt = sig + [0]
        for i in range(len(sig), 0, -1):
            nxt[i] = field.add(sig[i] if i < len(sig) else 0, field.mul(t, sig[i - 1]))
        sig = [int(x) for x in nxt]
    return sig


def sigma(field: FieldSpec, T: Sequence, i: int) -> int:
    """``sigma_i(T)``, zero outside ``0 <= i <= |T|``."""
    s = elementary_symmetric(field, T)
    return s[i] if 0 <= i < len(s) else 0


def sigma12_batched(field: FieldSpec, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``sigma_1`` and ``sigma_2`` for each row of a ``(B, t)`` array of subsets."""
    s1 = np.zeros(values.shape[0], dtype=np.int64)
    s2 = np.zeros(values.shape[0], dtype=np.int64)
    for j in range(values.shape[1]):
        t = values[:, j]
        s2 = field.add(s2, field.mul(s1, t))
        s1 = field.add(s1, t)
    return s1, s2


def as_elements(field: FieldSpec, values: Iterable[int]) -> list[FieldElement]:
    return [FieldElement(int(x), field) for x in values]
