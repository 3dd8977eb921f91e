"""
Deliberately naive reference computations.

Everything here enumerates codewords or ambient vectors directly so that it
shares no logic with the syndrome, minor or ECP fast paths it is used to check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .codes import CodeDescriptor, iter_codewords
from .errors import DimensionMismatch, GuardExceeded


@dataclass(frozen=True)
class OracleBudget:
    max_codewords: int = 10**7
    max_vectors: int = 10**6
    max_subsets: int = 10**6

    def __post_init__(self):
        for name in ("max_codewords", "max_vectors", "max_subsets"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


class Nearest(NamedTuple):
    codeword: np.ndarray
    distance: int
    unique: bool


def _word(code: CodeDescriptor, y) -> np.ndarray:
    vec = code.field.vector(y) if not isinstance(y, np.ndarray) else np.asarray(y, dtype=np.int64)
    if vec.shape != (code.N,):
        raise DimensionMismatch(f"word of length {vec.size}, expected {code.N}")
    return vec


def _codeword_table(code: CodeDescriptor, budget: OracleBudget) -> np.ndarray:
    total = code.field.q ** code.K
    if total > budget.max_codewords:
        raise GuardExceeded(f"q^K = {total} codewords exceeds budget {budget.max_codewords}")
    return np.vstack(list(iter_codewords(code, guard=budget.max_codewords)))


def nearest_codeword(code: CodeDescriptor, y, budget: OracleBudget | None = None) -> Nearest:
    """Closest codeword by full enumeration; ``unique`` is False on ties."""
    budget = budget or OracleBudget()
    y = _word(code, y)
    best_d, best_c, count = code.N + 1, None, 0
    for block in iter_codewords(code, guard=budget.max_codewords, chunk=1 << 14):
        d = np.count_nonzero(block != y[None, :], axis=1)
        m = int(d.min())
        if m < best_d:
            best_d, count = m, int(np.count_nonzero(d == m))
            best_c = block[int(np.argmin(d))].copy()
        elif m == best_d:
            count += int(np.count_nonzero(d == m))
    return Nearest(best_c, best_d, count == 1)


def error_distance(code: CodeDescriptor, y, budget: OracleBudget | None = None) -> int:
    return nearest_codeword(code, y, budget).distance


def _all_vectors(q: int, n: int, chunk: int) -> Iterator[np.ndarray]:
    it = itertools.product(range(q), repeat=n)
    while True:
        block = np.array(list(itertools.islice(it, chunk)), dtype=np.int64)
        if block.size == 0:
            return
        yield block.reshape(-1, n)


def distances_to_code(code: CodeDescriptor, budget: OracleBudget | None = None,
                      chunk: int = 4096) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(vectors, distances)`` blocks over all of ``F_q^N`` in odometer order."""
    budget = budget or OracleBudget()
    q, n = code.field.q, code.N
    if q**n > budget.max_vectors:
        raise GuardExceeded(f"q^N = {q**n} vectors exceeds budget {budget.max_vectors}")
    cw = _codeword_table(code, budget)
    for block in _all_vectors(q, n, chunk):
        d = np.full(block.shape[0], n, dtype=np.int64)
        for s in range(0, cw.shape[0], 512):
            part = np.count_nonzero(block[:, None, :] != cw[None, s:s + 512, :], axis=2)
            np.minimum(d, part.min(axis=1), out=d)
        yield block, d


def covering_radius_bruteforce(code: CodeDescriptor, budget: OracleBudget | None = None) -> int:
    return max(int(d.max()) for _, d in distances_to_code(code, budget))


def all_deep_holes(code: CodeDescriptor, budget: OracleBudget | None = None) -> Iterator[np.ndarray]:
    """Every vector at maximal distance from the code, in odometer order."""
    rho = covering_radius_bruteforce(code, budget)
    for block, d in distances_to_code(code, budget):
        yield from block[d == rho]
