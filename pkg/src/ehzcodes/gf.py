"""
Exact arithmetic in the finite field GF(q), q = p^m.

Elements are stored as packed integers in ``[0, q)``: the polynomial
``c_0 + c_1 X + ... + c_{m-1} X^{m-1}`` (coefficients in GF(p)) is encoded as
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.  For prime fields this is simply the
residue mod p.  The packed order is the canonical total order used for every
enumeration in the package.

All arithmetic entry points of :class:`FieldSpec` accept either Python ints or
numpy integer arrays, so matrices and vectors can be processed without a
Python-level loop.  :class:`FieldElement` wraps a single value for callers who
prefer operator syntax.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NoGenerator,
    NotIrreducible,
    NotMonic,
    NotPrime,
    ParseError,
)

MAX_ORDER = 2**32
# log/exp tables are built lazily for fields up to this size
TABLE_LIMIT = 2**16
# int64 products of two residues stay exact below this prime
_INT64_SAFE_P = 3037000499

ArrayLike = Union[int, np.ndarray]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense coefficient-list polynomials over GF(p) (used for the modulus) ---

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, coef in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * coef) % p
        _poly_trim(a)
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            divisor = [(low // p**j) % p for j in range(d)] + [1]
            if not _poly_rem(modulus, divisor, p):
                return False
    return True


class FieldSpec:
    """The finite field GF(p^m) with a fixed defining modulus.

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree, ``m >= 1``.
    modulus : sequence of int, optional
        Coefficients ``[c_0, ..., c_m]`` of a monic irreducible polynomial of
        degree m over GF(p).  Required when ``m > 1``; for prime fields it may
        be omitted or given as the placeholder ``[0, 1]`` (the polynomial X).
    generator : int or str, optional
        Designated primitive element used for ``w^e`` notation.  When omitted
        and ``m > 1``, the class of X is used if it is primitive.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None,
                 generator: int | str | None = None):
        p, m = int(p), int(m)
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_ORDER:
            raise FieldTooLarge(f"q = {p}^{m} exceeds 2^32")
        self.p = p
        self.m = m
        self.q = p**m

        if m == 1:
            if modulus is not None and [int(c) % p for c in modulus] != [0, 1]:
                raise ValueError("prime fields take no modulus (or the placeholder [0, 1])")
            self.modulus = (0, 1)
        else:
            if modulus is None:
                raise NotIrreducible(f"GF({p}^{m}) needs a modulus polynomial")
            coeffs = [int(c) for c in modulus]
            if len(coeffs) != m + 1:
                raise NotMonic(f"modulus must have {m + 1} coefficients, got {len(coeffs)}")
            if any(not 0 <= c < p for c in coeffs):
                raise ValueError(f"modulus coefficients must lie in [0, {p})")
            if coeffs[-1] != 1:
                raise NotMonic("modulus must be monic")
            if not _is_irreducible(coeffs, p):
                raise NotIrreducible(f"modulus {coeffs} is reducible over GF({p})")
            self.modulus = tuple(coeffs)

        self.generator: int | None = None
        if generator is not None:
            g = generator if isinstance(generator, int) else _parse_value(str(generator), self)
            if self.order(g) != self.q - 1:
                raise ValueError(f"designated generator {g} is not primitive")
            self.generator = int(g)
        elif m > 1 and self.order(p) == self.q - 1:
            self.generator = p  # the class of X

    # -- identity -----------------------------------------------------------
    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, str):
            return parse(value, self)
        v = int(value)
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not a packed element of GF({self.q})")
        return FieldElement(v, self)

    def check(self, *elements: "FieldElement") -> None:
        for e in elements:
            if e.field != self:
                raise FieldMismatch(f"element of {e.field!r} used with {self!r}")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    # -- packed-coefficient helpers ------------------------------------------
    def digits(self, a: int) -> list[int]:
        return [(int(a) // self.p**j) % self.p for j in range(self.m)]

    def from_digits(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise ParseError(f"at most {self.m} coefficients allowed")
        return sum((int(c) % self.p) * self.p**j for j, c in enumerate(coeffs))

    # -- scalar polynomial multiplication (table-free path) -------------------
    def _mul_scalar(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.m & 1:
                    a ^= _packed_modulus_p2(self.modulus)
            return r
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_rem(prod, list(self.modulus), self.p)
        return self.from_digits(rem)

    def _pow_scalar(self, a: int, e: int) -> int:
        if e < 0:
            a = self._inv_scalar(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self._mul_scalar(result, a)
            a = self._mul_scalar(a, a)
            e >>= 1
        return result

    def _inv_scalar(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self._pow_scalar(a, self.q - 2)

    def order(self, a: int) -> int:
        """Multiplicative order of the packed element ``a``."""
        a = int(a)
        if a == 0:
            return 0
        n = self.q - 1
        for r in _prime_factors(self.q - 1):
            while n % r == 0 and self._pow_scalar(a, n // r) == 1:
                n //= r
        return n

    @cached_property
    def primitive(self) -> int:
        """Designated generator if any, else the smallest primitive element."""
        if self.generator is not None:
            return self.generator
        if self.q == 2:
            return 1
        for c in range(2, self.q):
            if self.order(c) == self.q - 1:
                return c
        raise AssertionError("no primitive element found")  # pragma: no cover

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.q > TABLE_LIMIT:
            return None
        exp = np.zeros(2 * (self.q - 1), dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        g = self.primitive
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_scalar(x, g)
        exp[self.q - 1:] = exp[: self.q - 1]
        return exp, log

    # -- vectorised arithmetic on packed values ------------------------------
    def add(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        pw = 1
        for _ in range(self.m):
            out = out + ((a // pw + b // pw) % p) * pw
            pw *= p
        return out

    def neg(self, a: ArrayLike) -> ArrayLike:
        p = self.p
        if self.m == 1:
            return (-a) % p
        if p == 2:
            return a
        out = 0
        pw = 1
        for _ in range(self.m):
            out = out + ((-(a // pw)) % p) * pw
            pw *= p
        return out

    def sub(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        return self.add(a, self.neg(b))

    def mul(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            return self._mul_array(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return self._mul_scalar(int(a), int(b))

    def _mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1 and self.p < _INT64_SAFE_P:
            return (a * b) % self.p
        tables = self._tables
        if tables is None:
            f = np.frompyfunc(lambda x, y: self._mul_scalar(int(x), int(y)), 2, 1)
            return f(a, b).astype(np.int64)
        exp, log = tables
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a: ArrayLike) -> ArrayLike:
        if not isinstance(a, np.ndarray):
            return self._inv_scalar(int(a))
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("0 has no multiplicative inverse")
        tables = self._tables
        if tables is None:
            f = np.frompyfunc(lambda x: self._inv_scalar(int(x)), 1, 1)
            return f(a).astype(np.int64)
        exp, log = tables
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        return self.mul(a, self.inv(b))

    def pow(self, a: ArrayLike, e: ArrayLike) -> ArrayLike:
        """Power with the convention ``0**0 == 1``; negative exponents invert."""
        if not isinstance(a, np.ndarray) and not isinstance(e, np.ndarray):
            a, e = int(a), int(e)
            if a == 0:
                if e < 0:
                    raise DivisionByZero("0 has no multiplicative inverse")
                return 1 if e == 0 else 0
            return self._pow_scalar(a, e)
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        a, e = np.broadcast_arrays(a, e)
        if np.any((a == 0) & (e < 0)):
            raise DivisionByZero("0 has no multiplicative inverse")
        tables = self._tables
        if tables is None:
            f = np.frompyfunc(lambda x, y: self.pow(int(x), int(y)), 2, 1)
            return f(a, e).astype(np.int64)
        exp, log = tables
        out = exp[(log[a] * e) % (self.q - 1)]
        return np.where(a == 0, np.where(e == 0, 1, 0), out)

    def sum(self, a: np.ndarray, axis: int = -1) -> ArrayLike:
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            if self.p < 2**31:
                return np.sum(a % self.p, axis=axis) % self.p
        elif self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        a = np.moveaxis(a, axis, 0)
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            out = self.add(out, row)
        return out if out.ndim else int(out)

    def log(self, a: int) -> int:
        """Discrete logarithm base :attr:`primitive`."""
        a = int(a)
        if a == 0:
            raise DivisionByZero("log of 0 is undefined")
        tables = self._tables
        if tables is not None:
            return int(tables[1][a])
        g, x = self.primitive, 1
        for e in range(self.q - 1):
            if x == a:
                return e
            x = self._mul_scalar(x, g)
        raise AssertionError("element outside the multiplicative group")  # pragma: no cover

    # -- conversion ------------------------------------------------------------
    def vector(self, values: Iterable) -> np.ndarray:
        """Coerce ints, FieldElements or element strings into a packed array."""
        out = []
        for v in values:
            if isinstance(v, FieldElement):
                self.check(v)
                out.append(v.value)
            elif isinstance(v, str):
                out.append(parse(v, self).value)
            else:
                iv = int(v)
                if not 0 <= iv < self.q:
                    raise ValueError(f"{iv} is not a packed element of GF({self.q})")
                out.append(iv)
        return np.array(out, dtype=np.int64)

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


def _packed_modulus_p2(modulus: tuple) -> int:
    return sum(c << j for j, c in enumerate(modulus))


@dataclass(frozen=True)
class FieldElement:
    """A single element of a :class:`FieldSpec`, with operator overloads."""

    value: int
    field: FieldSpec

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field.check(other)
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field(int(other) % self.field.q if self.field.m == 1 else int(other)).value
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field.add(self.value, o), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field.sub(self.value, o), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field.sub(o, self.value), self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field.mul(self.value, o), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field.div(self.value, o), self.field)

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def __pow__(self, e: int):
        return FieldElement(self.field.pow(self.value, int(e)), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.key))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({format(self)})"

    def __format__(self, spec: str) -> str:
        return format_element(self, spec or "int")


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None,
               generator: int | str | None = None) -> FieldSpec:
    """Validate and build GF(p^m)."""
    return FieldSpec(p, m, modulus, generator)


# --- the per-element API -----------------------------------------------------

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    a.field.check(b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    a.field.check(b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a.field.check(b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a ** e


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(v, spec) for v in range(spec.q)]


# --- text I/O -----------------------------------------------------------------

_POWER_RE = re.compile(r"^w(?:\^(-?\d+))?$")
_POLY_RE = re.compile(r"^poly:\[([^\]]*)\]$")


def _parse_value(text: str, spec: FieldSpec) -> int:
    t = text.strip().replace(" ", "")
    if re.fullmatch(r"\d+", t):
        v = int(t)
        if v >= spec.q:
            raise ParseError(f"{v} is out of range for GF({spec.q})")
        return v
    m = _POWER_RE.match(t)
    if m:
        if spec.generator is None:
            raise NoGenerator(f"{spec!r} has no designated generator for {text!r}")
        e = int(m.group(1)) if m.group(1) is not None else 1
        return spec.pow(spec.generator, e)
    m = _POLY_RE.match(t)
    if m:
        body = m.group(1)
        try:
            coeffs = [int(c) for c in body.split(",")] if body else []
        except ValueError as exc:
            raise ParseError(f"bad coefficient list in {text!r}") from exc
        if any(not 0 <= c < spec.p for c in coeffs):
            raise ParseError(f"coefficients of {text!r} must lie in [0, {spec.p})")
        return spec.from_digits(coeffs)
    raise ParseError(f"cannot parse field element {text!r}")


def parse(text: str, spec: FieldSpec) -> FieldElement:
    """Parse ``INT``, ``w^e`` (or ``w``) and ``poly:[c0,...]`` notation."""
    return FieldElement(_parse_value(text, spec), spec)


def format_value(value: int, spec: FieldSpec, mode: str = "int") -> str:
    value = int(value)
    if mode == "int":
        return str(value)
    if mode == "power":
        if spec.generator is None:
            raise NoGenerator(f"{spec!r} has no designated generator")
        if value in (0, 1):
            return str(value)
        return f"w^{spec.log(value)}"
    if mode == "poly":
        return "poly:[" + ",".join(str(c) for c in spec.digits(value)) + "]"
    raise ValueError(f"unknown format mode {mode!r}")


def format_element(a: FieldElement, mode: str = "int") -> str:
    return format_value(a.value, a.field, mode)
