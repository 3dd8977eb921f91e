"""
Dense exact linear algebra over GF(q).

Matrices hold packed field values in an immutable ``int64`` numpy array.
Elimination is deterministic: columns are scanned left to right and the
topmost nonzero entry at or below the current row becomes the pivot, so
ranks, null-space bases and solver output are reproducible run to run.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, GuardExceeded, NotSquare
from .gf import FieldElement, FieldSpec


class FqMatrix:
    """An immutable ``rows x cols`` matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64, copy=True)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries must be packed elements of GF({field.q})")
        arr.flags.writeable = False
        self.field = field
        self.data = arr

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable], cols: int | None = None) -> "FqMatrix":
        """Build from nested rows of ints, FieldElements or element strings."""
        vecs = [field.vector(r) for r in rows]
        if not vecs:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(field, np.vstack(vecs))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FqMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FqMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> "FqMatrix":
        return transpose(self)

    def __getitem__(self, key):
        out = self.data[key]
        if isinstance(out, np.ndarray):
            return out.copy()
        return FieldElement(int(out), self.field)

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        return matmul(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FqMatrix) and self.field == other.field
                and self.shape == other.shape and bool(np.array_equal(self.data, other.data)))

    def __hash__(self) -> int:
        return hash((self.field.key, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FqMatrix({self.field!r}, {self.data.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()


# --- structural operations ----------------------------------------------------

def _check_same_field(*ms: FqMatrix) -> FieldSpec:
    field = ms[0].field
    for m in ms[1:]:
        if m.field != field:
            raise DimensionMismatch("matrices over different fields")
    return field


def transpose(M: FqMatrix) -> FqMatrix:
    return FqMatrix(M.field, M.data.T)


def hstack(*ms: FqMatrix) -> FqMatrix:
    field = _check_same_field(*ms)
    if len({m.rows for m in ms}) != 1:
        raise DimensionMismatch("hstack needs equal row counts")
    return FqMatrix(field, np.hstack([m.data for m in ms]))


def vstack(*ms: FqMatrix) -> FqMatrix:
    field = _check_same_field(*ms)
    if len({m.cols for m in ms}) != 1:
        raise DimensionMismatch("vstack needs equal column counts")
    return FqMatrix(field, np.vstack([m.data for m in ms]))


def diag(field: FieldSpec, v: Sequence) -> FqMatrix:
    vec = field.vector(v)
    return FqMatrix(field, np.diag(vec))


def mat_mul_arrays(field: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Packed-array matrix product (no shape checks)."""
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if field.m == 1 and field.p < 2**26:
        # chunk the inner dimension so int64 sums cannot overflow
        step = max(1, (2**62) // (field.p * field.p))
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for s in range(0, A.shape[1], step):
            out = (out + (A[:, s:s + step] @ B[s:s + step, :])) % field.p
        return out
    prod = field.mul(A[:, :, None], B[None, :, :])
    return field.sum(prod, axis=1)


def matmul(A: FqMatrix, B: FqMatrix) -> FqMatrix:
    field = _check_same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return FqMatrix(field, mat_mul_arrays(field, A.data, B.data))


def vec_mat(field: FieldSpec, x: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Row vector (or stack of row vectors) times a packed matrix."""
    x2 = np.atleast_2d(np.asarray(x, dtype=np.int64))
    out = mat_mul_arrays(field, x2, M)
    return out[0] if np.ndim(x) == 1 else out


def mat_vec(field: FieldSpec, M: np.ndarray, x: np.ndarray) -> np.ndarray:
    return mat_mul_arrays(field, M, np.asarray(x, dtype=np.int64)[:, None])[:, 0]


# --- elimination ----------------------------------------------------------------

def _rref_array(field: FieldSpec, A: np.ndarray, ncols: int | None = None):
    R = np.array(A, dtype=np.int64, copy=True)
    rows, cols = R.shape
    limit = cols if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = field.mul(R[r], field.inv(lead))
        col = R[:, c].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            R[idx] = field.sub(R[idx], field.mul(col[idx, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rref(M: FqMatrix) -> tuple[FqMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    R, rank_, pivots = _rref_array(M.field, M.data)
    return FqMatrix(M.field, R), rank_, pivots


def rank(M: FqMatrix) -> int:
    return _rref_array(M.field, M.data)[1]


def _null_space_array(field: FieldSpec, A: np.ndarray) -> np.ndarray:
    cols = A.shape[1]
    R, r, pivots = _rref_array(field, A)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = field.neg(int(R[row, f]))
    return basis


def null_space(M: FqMatrix) -> FqMatrix:
    """Basis of the right kernel ``{x : M x^T = 0}``, one vector per row.

    Rows are ordered by the free columns of the RREF, and each basis vector has
    a 1 in its own free column and 0 in the other free columns.
    """
    return FqMatrix(M.field, _null_space_array(M.field, M.data))


@dataclass(frozen=True)
class Unique:
    x: np.ndarray


@dataclass(frozen=True)
class Affine:
    x0: np.ndarray
    basis: FqMatrix


@dataclass(frozen=True)
class Inconsistent:
    pass


def solve(A: FqMatrix, b) -> Unique | Affine | Inconsistent:
    """Solve ``A x^T = b^T`` exactly and classify the solution set."""
    field = A.field
    bvec = field.vector(b) if not isinstance(b, np.ndarray) else np.asarray(b, dtype=np.int64)
    if bvec.shape != (A.rows,):
        raise DimensionMismatch(f"right-hand side has length {bvec.size}, expected {A.rows}")
    aug = np.hstack([A.data, bvec[:, None]])
    R, r, pivots = _rref_array(field, aug, ncols=A.cols)
    # a nonzero entry in the rhs below the pivot rows means no solution
    if r < A.rows and np.any(R[r:, A.cols] != 0):
        return Inconsistent()
    x0 = np.zeros(A.cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x0[pc] = R[row, A.cols]
    if r == A.cols:
        return Unique(x0)
    return Affine(x0, null_space(A))


# --- determinants and minors ------------------------------------------------------

def _batched_eliminate(field: FieldSpec, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Gaussian elimination on a stack of ``r x k`` matrices with ``r >= k``.

    Returns ``(full_column_rank, det)`` arrays of length ``B``; ``det`` is only
    meaningful for square stacks.
    """
    X = np.array(X, dtype=np.int64, copy=True)
    B, r, k = X.shape
    ok = np.ones(B, dtype=bool)
    det = np.ones(B, dtype=np.int64)
    swaps = np.zeros(B, dtype=np.int64)
    ar = np.arange(B)
    for c in range(k):
        sub = X[:, c:, c] != 0
        has = sub.any(axis=1)
        ok &= has
        piv = c + np.argmax(sub, axis=1)
        swaps += (piv != c) & has
        row_c = X[ar, c].copy()
        X[ar, c] = X[ar, piv]
        X[ar, piv] = row_c
        pv = X[ar, c, c]
        pv = np.where(pv == 0, 1, pv)
        det = field.mul(det, np.where(has, pv, 0))
        inv_pv = field.inv(pv)
        X[:, c] = field.mul(X[:, c], inv_pv[:, None])
        if c + 1 < r:
            factors = X[:, c + 1:, c]
            X[:, c + 1:] = field.sub(X[:, c + 1:], field.mul(factors[:, :, None], X[:, c][:, None, :]))
    det = np.where(swaps % 2 == 1, field.neg(det), det)
    return ok, np.where(ok, det, 0)


def column_subsets_full_rank(field: FieldSpec, M: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    """For each row of ``subsets`` (column indices), test full column rank."""
    X = np.transpose(M[:, subsets], (1, 0, 2))
    return _batched_eliminate(field, X)[0]


def det(M: FqMatrix) -> FieldElement:
    if M.rows != M.cols:
        raise NotSquare(f"determinant of a {M.shape} matrix")
    if M.rows == 0:
        return M.field.one
    _, d = _batched_eliminate(M.field, M.data[None])
    return FieldElement(int(d[0]), M.field)


def minor_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(n), k)


def first_singular_minor(M: FqMatrix, size: int | None = None, guard: int = 10**7,
                         chunk: int = 20000) -> tuple[int, ...] | None:
    """Return the first column subset (lexicographic) whose square minor vanishes.

    ``size`` defaults to the row count; ``None`` is returned when every
    ``size``-column minor is nonzero.
    """
    k = M.rows if size is None else size
    if k > M.cols:
        return tuple(range(M.cols))
    total = math.comb(M.cols, k)
    if total > guard:
        raise GuardExceeded(f"C({M.cols},{k}) = {total} minors exceeds guard {guard}")
    if k == 0:
        return None
    combos = minor_subsets(M.cols, k)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return None
        idx = np.array(block, dtype=np.int64)
        X = np.transpose(M.data[:, idx], (1, 0, 2))
        ok, _ = _batched_eliminate(M.field, X)
        bad = np.flatnonzero(~ok)
        if bad.size:
            return tuple(int(i) for i in idx[bad[0]])


# --- row spaces --------------------------------------------------------------------

def canonical_basis(M: FqMatrix) -> FqMatrix:
    R, r, _ = rref(M)
    return FqMatrix(M.field, R.data[:r])


def same_row_space(M1: FqMatrix, M2: FqMatrix) -> bool:
    _check_same_field(M1, M2)
    if M1.cols != M2.cols:
        raise DimensionMismatch("row spaces of different lengths")
    return canonical_basis(M1) == canonical_basis(M2)


def row_space_contains(big: FqMatrix, small: FqMatrix) -> bool:
    """True iff every row of ``small`` lies in the row space of ``big``."""
    _check_same_field(big, small)
    if big.cols != small.cols:
        raise DimensionMismatch("row spaces of different lengths")
    return rank(vstack(big, small)) == rank(big)


def in_row_space(M: FqMatrix, v) -> bool:
    vec = np.asarray(v, dtype=np.int64)[None, :]
    return row_space_contains(M, FqMatrix(M.field, vec))
