"""
Longer non-GRS MDS codes from deep holes, and a desk-scale equivalence checker.

Appending a deep hole ``w`` of an MDS EHZ code as a new row of the generator
matrix, together with the column ``(0, ..., 0, 1)^T``, yields an
``[n+2, k+1, n-k+2]`` MDS code.  :func:`algorithm2_enumerate` walks the
coefficient space and emits certified children; :func:`monomial_equivalent`
decides whether two small codes differ only by a permutation and rescaling of
coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from . import codes as cl
from . import deephole as dh
from .codes import CodeDescriptor, Polynomial
from .errors import GuardExceeded, NotDeepHole, NotMds, ShapeMismatch, WrongKind
from .fqmat import FqMatrix, _rref_array, same_row_space
from .gf import FieldSpec

BRANCHES = ("class1-eq", "class1-set", "class2")


@dataclass
class Equivalence:
    """Outcome of :func:`monomial_equivalent`.

    ``verdict`` is ``"Equivalent"``, ``"NotEquivalent"`` or ``"Unknown"``.
    For equivalent codes column ``i`` of the first code, scaled by
    ``scaling[i]``, is column ``permutation[i]`` of a generator of the second.
    """

    verdict: str
    permutation: tuple[int, ...] | None = None
    scaling: tuple[int, ...] | None = None
    witness: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def equivalent(self) -> bool:
        return self.verdict == "Equivalent"


@dataclass
class ExtensionCertificate:
    parent: CodeDescriptor
    deep_hole_row: np.ndarray
    child: CodeDescriptor
    branch: str
    query: dict[str, int]
    mds_proof: bool
    nongrs_proof: dict[str, Any]
    rl_equivalence: dict[str, Any] | None = None


# --- extension ---------------------------------------------------------------------------

def extension_matrix(code: CodeDescriptor, row: np.ndarray) -> FqMatrix:
    """``[[G; row], (0, ..., 0, 1)^T]``."""
    G = np.vstack([code.G.data, row])
    tail = np.zeros((G.shape[0], 1), dtype=np.int64)
    tail[-1, 0] = 1
    return FqMatrix(code.field, np.hstack([G, tail]))


def branch_of(query: dh.DeepHoleQuery) -> str:
    if query.g_kp1 != 0:
        return "class2"
    if query.g_km1 == 0:
        raise NotDeepHole("g_{k+1} = g_{k-1} = 0 puts g in V_k, which never gives a deep hole")
    return "class1-eq" if query.product == query.f_k else "class1-set"


def _require_mds_parent(code: CodeDescriptor) -> None:
    if code.kind != "EHZ":
        raise WrongKind(f"expected an EHZ code, got {code.kind}")
    verdict, witness = cl.classify_ehz(code)
    if verdict != "MDS":
        raise NotMds(f"parent code is NMDS (zero-sum subset {witness}); no MDS extension exists")


def _child(code: CodeDescriptor, row: np.ndarray, branch: str, qd: dict) -> CodeDescriptor:
    G = extension_matrix(code, row)
    extras = {"branch": branch, "query": qd, "parent_k": code.K}
    return cl.generic_code(G, "Extension", extras)


def nongrs_certificate(code: CodeDescriptor) -> dict[str, Any]:
    """``NonGrs`` when the Schur square is larger than any GRS code allows."""
    K, N = code.K, code.N
    if K <= 1 or 2 * K - 1 > N:
        return {"verdict": "Inconclusive", "reason": "criterion vacuous for these parameters"}
    dim = cl.schur_square_dim(code)
    if dim > 2 * K - 1:
        return {"verdict": "NonGrs", "schur_dim": dim}
    return {"verdict": "Inconclusive", "schur_dim": dim}


def _query_dict(q: dh.DeepHoleQuery) -> dict[str, Any]:
    return {"g_kp1": q.g_kp1, "g_km1": q.g_km1, "f": list(q.f.coeffs),
            "u_last": q.u_last, "v_last": q.v_last}


def extend_with_deep_hole(code: CodeDescriptor, query: dh.DeepHoleQuery,
                          check_rl: bool = False, guard: int = cl.DEFAULT_GUARD) -> ExtensionCertificate:
    """Append the deep hole described by ``query`` and certify the child code."""
    _require_mds_parent(code)
    branch = branch_of(query)
    report = (dh.class1_is_deep_hole(query, guard) if branch.startswith("class1")
              else dh.class2_is_deep_hole(query, guard))
    if not report.verdict:
        raise NotDeepHole(f"query fails the {report.method} criterion")
    row = report.vector
    child = _child(code, row, branch, _query_dict(query))
    mds = cl.is_mds_minors(child, guard)
    if not mds:
        raise AssertionError("extension of a deep hole is not MDS")
    nongrs = {"asserted": "deep-hole extension of a non-GRS MDS code", **nongrs_certificate(child)}
    rl = None
    if check_rl and branch == "class1-eq":
        target = cl.roth_lempel(code.field, code.config.S, code.K + 1, 0)
        eq = monomial_equivalent(child, target)
        rl = {"delta": 0, "verdict": eq.verdict}
    return ExtensionCertificate(code, row, child, branch, _query_dict(query), mds, nongrs, rl)


def _f_candidates(field: FieldSpec, k: int, full_vk: bool) -> Iterator[Polynomial]:
    q = field.q
    if not full_vk:
        for fk in range(q):
            c = [0] * (k + 1)
            c[k] = fk
            yield Polynomial(field, c)
        return
    for low in itertools.product(range(q), repeat=k - 1):
        for fk in range(q):
            yield Polynomial(field, list(low) + [0, fk])


def algorithm2_enumerate(code: CodeDescriptor, g_kp1_values: Iterable[int] | None = None,
                         g_km1_values: Iterable[int] | None = None,
                         f_values: Iterable[Polynomial] | None = None,
                         products: Iterable[int] | None = None,
                         full_vk: bool = False, max_outputs: int | None = None,
                         only_branch: str | None = None,
                         guard: int = cl.DEFAULT_GUARD) -> Iterator[ExtensionCertificate]:
    """Stream certified ``[n+2, k+1, n-k+2]`` children.

    The criteria depend on ``(u_last, v_last)`` only through their product and
    on ``f`` only through ``f_k``, so by default one representative per
    product (``u_last = product, v_last = 1``) and one ``f = f_k x^k`` per
    ``f_k`` are visited.  Pass ``f_values`` to pin specific polynomials or
    ``full_vk=True`` to walk all of ``V_k``.
    """
    _require_mds_parent(code)
    F = code.field
    q, k = F.q, code.K
    gk1 = list(range(q)) if g_kp1_values is None else [int(x) for x in g_kp1_values]
    gkm = list(range(q)) if g_km1_values is None else [int(x) for x in g_km1_values]
    fs = list(_f_candidates(F, k, full_vk)) if f_values is None else list(f_values)
    prods = list(range(q)) if products is None else [int(x) for x in products]
    S = code.config.S
    forbidden: dict[tuple[int, int, int], set[int]] = {}
    delta_ok: dict[int, bool] = {}
    emitted = 0
    for a, b in itertools.product(gk1, gkm):
        for f in fs:
            fk = f.coeff(k)
            for p in prods:
                if a == 0 and b != 0 and p == fk:
                    branch = "class1-eq"
                elif a == 0 and b != 0:
                    branch = "class1-set"
                    delta = int(F.div(b, F.sub(p, fk)))
                    if delta not in delta_ok:
                        delta_ok[delta] = cl.is_nk_delta_set(F, S, k, delta, guard)[0]
                    if not delta_ok[delta]:
                        continue
                elif a != 0:
                    branch = "class2"
                    key = (a, fk, p)
                    if key not in forbidden:
                        forbidden[key] = dh.class2_forbidden_set(code, a, fk, p, guard)
                    if b in forbidden[key]:
                        continue
                else:
                    continue
                if only_branch is not None and branch != only_branch:
                    continue
                query = dh.DeepHoleQuery(code, a, b, f, p, 1)
                row = dh.evaluate_deep_hole_vector(query)
                child = _child(code, row, branch, _query_dict(query))
                if not cl.is_mds_minors(child, guard):
                    raise AssertionError(f"branch {branch} emitted a non-MDS child")
                nongrs = {"asserted": "deep-hole extension of a non-GRS MDS code",
                          **nongrs_certificate(child)}
                yield ExtensionCertificate(code, row, child, branch, _query_dict(query), True, nongrs)
                emitted += 1
                if max_outputs is not None and emitted >= max_outputs:
                    return


# --- monomial equivalence ------------------------------------------------------------------

class _RatioUnionFind:
    """Union-find over unknowns with multiplicative offsets: ``val(x) = w[x] * val(root(x))``."""

    def __init__(self, field: FieldSpec):
        self.F = field
        self.parent: dict[Any, Any] = {}
        self.w: dict[Any, int] = {}

    def copy(self) -> "_RatioUnionFind":
        out = _RatioUnionFind(self.F)
        out.parent = dict(self.parent)
        out.w = dict(self.w)
        return out

    def find(self, x):
        if x not in self.parent:
            self.parent[x], self.w[x] = x, 1
            return x, 1
        acc = 1
        node = x
        while self.parent[node] != node:
            acc = self.F.mul(acc, self.w[node])
            node = self.parent[node]
        return node, acc

    def relate(self, a, b, ratio: int) -> bool:
        """Impose ``val(a) / val(b) = ratio``; False on contradiction."""
        F = self.F
        ra, wa = self.find(a)
        rb, wb = self.find(b)
        if ra == rb:
            return F.mul(wa, F.inv(wb)) == ratio
        # val(ra) = val(rb) * ratio * wb / wa
        self.parent[ra] = rb
        self.w[ra] = F.mul(F.mul(ratio, wb), F.inv(wa))
        return True

    def value(self, x) -> int:
        _, wx = self.find(x)
        return wx


def _support_key(col: np.ndarray) -> tuple[int, ...]:
    return tuple(np.flatnonzero(col).tolist())


def monomial_equivalent(c1: CodeDescriptor, c2: CodeDescriptor, budget: int = 10**6,
                        guard: int = cl.DEFAULT_GUARD) -> Equivalence:
    """Decide monomial equivalence of two small codes.

    Weight enumerators are compared first.  Then, for every ordered
    information set ``J`` of the second code, its systematic generator is
    matched column by column against the reduced generator of the first code;
    a match must preserve column supports and admit consistent row and column
    scale factors.  ``budget`` caps the number of search nodes.
    """
    F = c1.field
    if c1.field != c2.field or c1.N != c2.N or c1.K != c2.K:
        raise ShapeMismatch(f"cannot compare [{c1.N},{c1.K}] with [{c2.N},{c2.K}] over "
                            f"{c1.field!r} / {c2.field!r}")
    N, K = c1.N, c1.K
    try:
        w1, w2 = cl.weight_enumerator(c1, guard), cl.weight_enumerator(c2, guard)
        if w1 != w2:
            return Equivalence("NotEquivalent", witness={"invariant": "weight_enumerator",
                                                          "first": w1, "second": w2})
    except GuardExceeded:
        pass
    R1, _, piv1 = _rref_array(F, c1.G.data)
    R1 = R1[:K]
    G2 = c2.G.data
    keys1 = [_support_key(R1[:, j]) for j in range(N)]
    sorted1 = sorted(keys1)
    free1 = [j for j in range(N) if j not in piv1]
    nodes = 0

    for J in itertools.permutations(range(N), K):
        nodes += 1
        if nodes > budget:
            return Equivalence("Unknown", witness={"budget": budget})
        sub = G2[:, list(J)]
        R, r, _ = _rref_array(F, np.hstack([sub, G2]), ncols=K)
        if r < K:
            continue
        R2 = R[:K, K:]
        keys2 = [_support_key(R2[:, c]) for c in range(N)]
        if sorted(keys2) != sorted1:
            continue
        uf = _RatioUnionFind(F)
        ok = True
        for t in range(K):
            # row scale lambda_t against column unknown nu_{pivot}
            if not uf.relate(("r", t), ("c", piv1[t]), 1):
                ok = False
                break
        if not ok:
            continue
        used = set(J)
        assign = {piv1[t]: J[t] for t in range(K)}

        def extend(idx: int, uf: _RatioUnionFind) -> _RatioUnionFind | None:
            nonlocal nodes
            if idx == len(free1):
                return uf
            j = free1[idx]
            for c in range(N):
                if c in used or keys2[c] != keys1[j]:
                    continue
                nodes += 1
                if nodes > budget:
                    raise GuardExceeded("equivalence search budget exhausted")
                trial = uf.copy()
                good = True
                for t in keys1[j]:
                    ratio = int(F.div(int(R2[t, c]), int(R1[t, j])))
                    if not trial.relate(("r", t), ("c", j), ratio):
                        good = False
                        break
                if not good:
                    continue
                used.add(c)
                assign[j] = c
                res = extend(idx + 1, trial)
                if res is not None:
                    return res
                used.discard(c)
                del assign[j]
            return None

        try:
            res = extend(0, uf)
        except GuardExceeded:
            return Equivalence("Unknown", witness={"budget": budget})
        if res is None:
            continue
        perm = tuple(assign[i] for i in range(N))
        # column i of R1 times mu_i = 1 / nu_i lands in column perm[i]
        scaling = tuple(int(F.inv(res.value(("c", i)))) for i in range(N))
        if verify_monomial(c1, c2, perm, scaling):
            return Equivalence("Equivalent", perm, scaling)
    return Equivalence("NotEquivalent", witness={"invariant": "exhaustive_search", "nodes": nodes})


def apply_monomial(G: FqMatrix, perm: Sequence[int], scaling: Sequence[int]) -> FqMatrix:
    F = G.field
    out = np.zeros_like(G.data)
    for i, (p, s) in enumerate(zip(perm, scaling)):
        out[:, p] = F.mul(G.data[:, i], int(s))
    return FqMatrix(F, out)


def verify_monomial(c1: CodeDescriptor, c2: CodeDescriptor, perm, scaling) -> bool:
    """Replay check: the transformed generator of ``c1`` spans ``c2``."""
    if sorted(perm) != list(range(c1.N)) or any(s == 0 for s in scaling):
        return False
    return same_row_space(apply_monomial(c1.G, perm, scaling), c2.G)


def rl_equivalence_scan(code: CodeDescriptor, S: Sequence, k: int,
                        deltas: Iterable[int] | None = None, budget: int = 10**6) -> dict[int, str]:
    """Verdict of :func:`monomial_equivalent` against ``RL_{k, delta}(S)`` for each delta."""
    F = code.field
    out = {}
    for d in (range(F.q) if deltas is None else deltas):
        rl = cl.roth_lempel(F, S, k, d)
        out[int(d)] = monomial_equivalent(code, rl, budget).verdict
    return out
