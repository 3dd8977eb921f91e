"""
Covering radius and deep holes of extended Han-Zhang codes.

A deep hole is a word at maximal distance from the code.  For an EHZ code
``C`` with generator ``G`` a word ``w`` is a deep hole exactly when ``[G; w]``
generates an MDS code, which gives a cheap minor-based test.  Two closed-form
criteria cover the words built from ``g(x) = g_{k+1} x^{k+1} + g_{k-1} x^{k-1} + f(x)``
with ``f`` in ``V_k``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from . import codes as cl
from .codes import CodeDescriptor, Polynomial
from .errors import BadCoefficients, DimensionMismatch, GuardExceeded, WrongKind
from .fqmat import FqMatrix, first_singular_minor, rank
from .gf import FieldSpec


@dataclass(frozen=True)
class DeepHoleQuery:
    """Polynomial data describing the candidate ``(v, v_last) * (g(a_1), ..., g(a_n), u_last)``."""

    code: CodeDescriptor
    g_kp1: int
    g_km1: int
    f: Polynomial
    u_last: int
    v_last: int = 1

    def __post_init__(self):
        if self.code.kind != "EHZ":
            raise WrongKind(f"deep-hole queries need an EHZ code, got {self.code.kind}")
        if not self.f.in_Vk(self.code.K):
            raise cl.NotInVk(f"{self.f} is not in V_{self.code.K}")

    @property
    def k(self) -> int:
        return self.code.K

    @property
    def f_k(self) -> int:
        return self.f.coeff(self.k)

    @property
    def product(self) -> int:
        return int(self.code.field.mul(self.u_last, self.v_last))

    def g(self) -> Polynomial:
        k = self.k
        c = list(self.f.coeffs) + [0] * (k + 2 - len(self.f.coeffs))
        c[k + 1] = self.g_kp1
        c[k - 1] = self.g_km1
        return Polynomial(self.code.field, c)


@dataclass
class DeepHoleReport:
    vector: np.ndarray
    verdict: bool
    method: str
    certificate: dict[str, Any] = dc_field(default_factory=dict)


@dataclass
class CoveringRadiusReport:
    rho: int
    method: str
    worst_coset_witness: np.ndarray | None = None


# --- covering radius ----------------------------------------------------------------------

def _encode(digits: np.ndarray, q: int) -> np.ndarray:
    out = np.zeros(digits.shape[0], dtype=np.int64)
    for j in range(digits.shape[1]):
        out = out * q + digits[:, j]
    return out


def _decode(idx: np.ndarray, q: int, r: int) -> np.ndarray:
    out = np.empty((idx.size, r), dtype=np.int64)
    x = idx.copy()
    for j in range(r - 1, -1, -1):
        out[:, j] = x % q
        x //= q
    return out


def coset_leader_weights(code: CodeDescriptor, guard: int = cl.DEFAULT_GUARD):
    """Breadth-first search over syndromes.

    Returns ``(dist, parent, column, value)`` arrays indexed by the packed
    syndrome; ``dist`` is the weight of a minimum-weight coset leader.
    """
    F = code.field
    q, r = F.q, code.H.rows
    total = q**r
    if total > guard:
        raise GuardExceeded(f"{q}^{r} syndromes exceeds guard {guard}")
    H = code.H.data
    dist = np.full(total, -1, dtype=np.int64)
    parent = np.full(total, -1, dtype=np.int64)
    column = np.full(total, -1, dtype=np.int64)
    value = np.zeros(total, dtype=np.int64)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    scaled = [(j, c, F.mul(H[:, j], c)) for j in range(code.N) for c in range(1, q)]
    w = 0
    while frontier.size:
        w += 1
        digits = _decode(frontier, q, r)
        nxt = []
        for j, c, col in scaled:
            cand = _encode(F.add(digits, col[None, :]), q)
            fresh = dist[cand] < 0
            if not fresh.any():
                continue
            cand, src = cand[fresh], frontier[fresh]
            cand, first = np.unique(cand, return_index=True)
            src = src[first]
            dist[cand] = w
            parent[cand] = src
            column[cand] = j
            value[cand] = c
            nxt.append(cand)
        frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
    return dist, parent, column, value


def _leader(code: CodeDescriptor, s: int, parent, column, value) -> np.ndarray:
    F = code.field
    e = np.zeros(code.N, dtype=np.int64)
    while s != 0:
        j = int(column[s])
        e[j] = F.add(int(e[j]), int(value[s]))
        s = int(parent[s])
    return e


def covering_radius(code: CodeDescriptor, method: str = "Exhaustive",
                    guard: int = cl.DEFAULT_GUARD) -> CoveringRadiusReport:
    """Covering radius by syndrome search, or ``n - k + 1`` for EHZ codes."""
    if method == "TheoremValue":
        if code.kind != "EHZ":
            raise WrongKind("the closed-form covering radius applies to EHZ codes only")
        return CoveringRadiusReport(code.config.n - code.K + 1, "TheoremValue")
    if method != "Exhaustive":
        raise ValueError(f"unknown method {method!r}")
    if code.H.rows == 0:
        return CoveringRadiusReport(0, "Exhaustive", np.zeros(code.N, dtype=np.int64))
    dist, parent, column, value = coset_leader_weights(code, guard)
    if np.any(dist < 0):
        raise AssertionError("parity-check matrix does not reach every syndrome")
    worst = int(np.argmax(dist))
    return CoveringRadiusReport(int(dist[worst]), "Exhaustive", _leader(code, worst, parent, column, value))


# --- deep-hole predicates -------------------------------------------------------------------

def is_deep_hole(code: CodeDescriptor, w, guard: int = cl.DEFAULT_GUARD) -> DeepHoleReport:
    """Deep-hole test by stacking ``w`` under ``G`` and checking every ``(K+1)``-minor.

    Exact for codes with covering radius ``N - K`` and minimum distance at
    least ``N - K``, which holds for every EHZ code.
    """
    F = code.field
    vec = F.vector(w) if not isinstance(w, np.ndarray) else np.asarray(w, dtype=np.int64)
    if vec.shape != (code.N,):
        raise DimensionMismatch(f"word of length {vec.size}, expected {code.N}")
    M = FqMatrix(F, np.vstack([code.G.data, vec]))
    if rank(M) <= code.K:
        return DeepHoleReport(vec, False, "StackMds", {"in_code": True})
    bad = first_singular_minor(M, guard=guard)
    if bad is None:
        return DeepHoleReport(vec, True, "StackMds", {})
    return DeepHoleReport(vec, False, "StackMds", {"singular_minor": bad})


def evaluate_deep_hole_vector(query: DeepHoleQuery) -> np.ndarray:
    """``(v_1 g(a_1), ..., v_n g(a_n), v_last u_last)``."""
    cfg = query.code.config
    F = cfg.field
    body = F.mul(cfg.mults, query.g()(cfg.points))
    return np.append(body, query.product).astype(np.int64)


def class1_is_deep_hole(query: DeepHoleQuery, guard: int = cl.DEFAULT_GUARD) -> DeepHoleReport:
    """Closed-form test when ``g_{k+1} = 0`` and ``g_{k-1} != 0``."""
    if query.g_kp1 != 0 or query.g_km1 == 0:
        raise BadCoefficients("class 1 needs g_{k+1} = 0 and g_{k-1} != 0")
    F = query.code.field
    vec = evaluate_deep_hole_vector(query)
    p, fk = query.product, query.f_k
    if p == fk:
        return DeepHoleReport(vec, True, "Class1", {"case": "uv=f_k"})
    delta = int(F.div(query.g_km1, F.sub(p, fk)))
    ok, witness = cl.is_nk_delta_set(F, query.code.config.S, query.k, delta, guard)
    cert = {"case": "delta-set", "delta": delta}
    if witness is not None:
        cert["witness"] = witness
    return DeepHoleReport(vec, ok, "Class1", cert)


def _subset_values(field: FieldSpec, S: np.ndarray, t: int, guard: int):
    total = math.comb(S.size, t)
    if total > guard:
        raise GuardExceeded(f"C({S.size},{t}) = {total} subsets exceeds guard {guard}")
    idx = np.array(list(itertools.combinations(range(S.size), t)), dtype=np.int64).reshape(total, t)
    return cl.sigma12_batched(field, S[idx])


def class2_forbidden_set(code: CodeDescriptor, g_kp1, f_k, product,
                         guard: int = cl.DEFAULT_GUARD) -> set[int]:
    """Values of ``g_{k-1}`` that stop the candidate from being a deep hole."""
    if code.kind != "EHZ":
        raise WrongKind(f"expected an EHZ code, got {code.kind}")
    F = code.field
    g, fk, p = (int(x) for x in F.vector([g_kp1, f_k, product]))
    S = code.config.points
    k = code.K
    s1, s2 = _subset_values(F, S, k, guard)
    shift = F.sub(p, fk)
    L1 = F.add(F.mul(g, F.sub(s2, F.mul(s1, s1))), F.mul(shift, s1))
    _, t2 = _subset_values(F, S, k + 1, guard)
    L2 = F.mul(g, t2)
    return set(np.unique(np.concatenate([np.atleast_1d(L1), np.atleast_1d(L2)])).tolist())


def class2_is_deep_hole(query: DeepHoleQuery, guard: int = cl.DEFAULT_GUARD) -> DeepHoleReport:
    """Closed-form test through the forbidden set; also valid for ``g_{k+1} = 0``."""
    vec = evaluate_deep_hole_vector(query)
    forbidden = class2_forbidden_set(query.code, query.g_kp1, query.f_k, query.product, guard)
    verdict = query.g_km1 not in forbidden
    return DeepHoleReport(vec, verdict, "Class2", {"forbidden": sorted(forbidden)})


def deep_hole_report(query: DeepHoleQuery, guard: int = cl.DEFAULT_GUARD) -> list[DeepHoleReport]:
    """Run the minor test and every applicable closed-form test."""
    vec = evaluate_deep_hole_vector(query)
    out = [is_deep_hole(query.code, vec, guard)]
    if query.g_kp1 == 0 and query.g_km1 != 0:
        out.append(class1_is_deep_hole(query, guard))
    out.append(class2_is_deep_hole(query, guard))
    return out
