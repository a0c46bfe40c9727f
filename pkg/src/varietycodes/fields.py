"""Table-driven arithmetic in GF(p^r).

Elements are stored as integers in ``[0, q)``: the base-``p`` digits of the
integer are the coefficients of the element written as a polynomial in the
distinguished primitive element ``g`` (digit ``i`` multiplies ``g**i``).  The
prime subfield therefore consists of the integers ``0 .. p-1``.

All arithmetic methods of :class:`FieldContext` accept either Python ints or
integer numpy arrays and broadcast like numpy ufuncs.  :class:`FieldElement`
wraps a single value together with its context for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence, Union

import numpy as np

from ._primitive_polys import PRIMITIVE_POLYNOMIALS

MAX_FIELD_SIZE = 1 << 20

ArrayLike = Union[int, np.ndarray]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _least_primitive_polynomial(p: int, r: int) -> tuple[int, ...]:
    for v in range(1, p**r):
        coeffs = tuple((v // p**i) % p for i in range(r)) + (1,)
        if coeffs[0] == 0:
            continue
        try:
            _exp_table(p, r, coeffs)
        except ValueError:
            continue
        return coeffs
    raise ValueError(f"no primitive polynomial of degree {r} over GF({p})")


def _exp_table(p: int, r: int, modulus: Sequence[int]) -> np.ndarray:
    """Successive powers of the root of ``modulus``; raises unless it is primitive."""
    q = p**r
    exp = np.empty(q - 1, dtype=np.int64)
    x = 1
    for k in range(q - 1):
        if x == 1 and k > 0:
            raise ValueError("modulus is not primitive")
        exp[k] = x
        x = _mul_by_root(p, r, modulus, x)
    if x != 1:
        raise ValueError("modulus is not primitive")
    return exp


def _mul_by_root(p: int, r: int, modulus: Sequence[int], x: int) -> int:
    if p == 2:
        x <<= 1
        if x >> r:
            x ^= sum(int(c) << i for i, c in enumerate(modulus))
        return x
    digits = [(x // p**i) % p for i in range(r)]
    lead = digits[-1]
    digits = [0] + digits[:-1]
    digits = [(d - lead * int(c)) % p for d, c in zip(digits, modulus[:r])]
    return sum(d * p**i for i, d in enumerate(digits))


class FieldContext:
    """GF(p^r) with frozen log/exp tables.

    ``g`` (the integer ``p`` when ``r > 1``, otherwise the root of the linear
    modulus) has multiplicative order ``q - 1``.  The log of zero is stored as
    ``-1`` and never used in arithmetic.
    """

    def __init__(self, p: int, r: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if r < 1:
            raise ValueError("extension degree must be positive")
        if p**r > MAX_FIELD_SIZE:
            raise ValueError(f"GF({p}^{r}) exceeds the table limit of {MAX_FIELD_SIZE} elements")
        if modulus is None:
            modulus = PRIMITIVE_POLYNOMIALS.get((p, r)) or _least_primitive_polynomial(p, r)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        self.p = p
        self.r = r
        self.q = p**r
        self.order = self.q - 1
        self.modulus = modulus
        self.exp = _exp_table(p, r, modulus)
        self.exp.flags.writeable = False
        log = np.full(self.q, -1, dtype=np.int64)
        log[self.exp] = np.arange(self.order, dtype=np.int64)
        log.flags.writeable = False
        self.log = log
        self.g = int(self.exp[1 % self.order]) if self.order > 1 else 1

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, r={self.r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    # -- digit helpers -----------------------------------------------------

    @cached_property
    def _digits(self) -> np.ndarray:
        vals = np.arange(self.q, dtype=np.int64)
        return np.stack([(vals // self.p**i) % self.p for i in range(self.r)], axis=1)

    @cached_property
    def _weights(self) -> np.ndarray:
        return np.array([self.p**i for i in range(self.r)], dtype=np.int64)

    def digits(self, x: ArrayLike) -> np.ndarray:
        """Coefficient vector(s) over GF(p), constant term first."""
        return self._digits[np.asarray(x, dtype=np.int64)]

    def from_digits(self, d: np.ndarray) -> ArrayLike:
        out = (np.asarray(d, dtype=np.int64) % self.p) @ self._weights
        return int(out) if np.ndim(out) == 0 else out

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _ret(out: np.ndarray, scalar: bool) -> ArrayLike:
        return int(out) if scalar else out

    def add(self, x: ArrayLike, y: ArrayLike) -> ArrayLike:
        scalar = np.ndim(x) == 0 and np.ndim(y) == 0
        if self.p == 2:
            return self._ret(np.bitwise_xor(x, y), scalar)
        if self.r == 1:
            return self._ret(np.mod(np.add(x, y), self.p), scalar)
        d = (self._digits[np.asarray(x, dtype=np.int64)] + self._digits[np.asarray(y, dtype=np.int64)]) % self.p
        return self._ret(d @ self._weights, scalar)

    def neg(self, x: ArrayLike) -> ArrayLike:
        scalar = np.ndim(x) == 0
        if self.p == 2:
            return self._ret(np.asarray(x, dtype=np.int64), scalar)
        if self.r == 1:
            return self._ret(np.mod(-np.asarray(x, dtype=np.int64), self.p), scalar)
        d = (-self._digits[np.asarray(x, dtype=np.int64)]) % self.p
        return self._ret(d @ self._weights, scalar)

    def sub(self, x: ArrayLike, y: ArrayLike) -> ArrayLike:
        return self.add(x, self.neg(y))

    def mul(self, x: ArrayLike, y: ArrayLike) -> ArrayLike:
        scalar = np.ndim(x) == 0 and np.ndim(y) == 0
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.r == 1:
            return self._ret(np.mod(x * y, self.p), scalar)
        e = self.exp[(self.log[x] + self.log[y]) % self.order]
        return self._ret(np.where((x == 0) | (y == 0), 0, e), scalar)

    def inv(self, x: ArrayLike) -> ArrayLike:
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._ret(self.exp[(-self.log[x]) % self.order], scalar)

    def div(self, x: ArrayLike, y: ArrayLike) -> ArrayLike:
        return self.mul(x, self.inv(y))

    def pow(self, x: ArrayLike, k: int) -> ArrayLike:
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=np.int64)
        if k < 0 and np.any(x == 0):
            raise ZeroDivisionError("negative power of zero")
        e = self.exp[(self.log[x] * (k % self.order)) % self.order]
        if k == 0:
            return self._ret(np.ones_like(x), scalar)
        return self._ret(np.where(x == 0, 0, e), scalar)

    def power_of_g(self, k: ArrayLike) -> ArrayLike:
        scalar = np.ndim(k) == 0
        return self._ret(self.exp[np.mod(k, self.order)], scalar)

    def frobenius(self, x: ArrayLike, k: int = 1) -> ArrayLike:
        """``x ** (p ** k)``."""
        return self.pow(x, pow(self.p, k, self.order) if self.order > 1 else 1)

    # -- subfields -----------------------------------------------------------

    def _check_divides(self, t: int) -> None:
        if t < 1 or self.r % t:
            raise ValueError(f"{t} does not divide the extension degree {self.r}")

    def trace(self, x: ArrayLike, s: int) -> ArrayLike:
        """Relative trace to GF(p^s): ``x + x^(p^s) + ... + x^(p^(s(r/s - 1)))``."""
        self._check_divides(s)
        acc = x
        for j in range(1, self.r // s):
            acc = self.add(acc, self.frobenius(x, s * j))
        return acc

    def in_subfield(self, x: ArrayLike, t: int) -> ArrayLike:
        self._check_divides(t)
        out = np.asarray(self.frobenius(x, t)) == np.asarray(x)
        return bool(out) if np.ndim(out) == 0 else out

    def subfield_primitive(self, t: int) -> int:
        self._check_divides(t)
        return int(self.exp[(self.order // (self.p**t - 1)) % self.order])

    def root_of_unity(self, n: int) -> int:
        if n < 1 or self.order % n:
            raise ValueError(f"{n} does not divide {self.order}")
        return int(self.exp[(self.order // n) % self.order])

    def multiplicative_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        lg = int(self.log[x])
        from math import gcd

        return self.order // gcd(lg, self.order)

    def minimal_polynomial(self, x: int) -> tuple[int, ...]:
        """Minimal polynomial of ``x`` over GF(p), constant term first."""
        conj = [int(x)]
        while True:
            nxt = int(self.frobenius(conj[-1], 1))
            if nxt == conj[0]:
                break
            conj.append(nxt)
        poly = [1]
        for c in conj:
            # poly * (X - c)
            shifted = [0] + poly
            scaled = [int(self.mul(c, a)) for a in poly] + [0]
            poly = [int(self.sub(a, b)) for a, b in zip(shifted, scaled)]
        if any(a >= self.p for a in poly):
            raise AssertionError("minimal polynomial left the prime field")
        return tuple(poly)

    def subfield(self, t: int) -> "SubfieldEmbedding":
        return _subfield(self, t)

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element of GF({self.q})")
        return FieldElement(self, int(value))

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


@lru_cache(maxsize=None)
def build_field(p: int, r: int) -> FieldContext:
    """Deterministic GF(p^r) built from the frozen primitive polynomial table."""
    return FieldContext(p, r)


class SubfieldEmbedding:
    """GF(p^t) inside a larger field, with its own standalone context.

    The small context is built on the minimal polynomial of
    ``beta = g^((q-1)/(p^t-1))``, so ``beta^k <-> h^k`` (``h`` the small
    field's generator) is a field isomorphism and not just a bijection.
    """

    def __init__(self, big: FieldContext, t: int):
        big._check_divides(t)
        self.big = big
        self.t = t
        self.beta = big.subfield_primitive(t)
        if t == big.r:
            self.small = big
        else:
            self.small = FieldContext(big.p, t, big.minimal_polynomial(self.beta))
        step = big.order // self.small.order
        to_big = np.zeros(self.small.q, dtype=np.int64)
        to_big[self.small.exp] = big.exp[(np.arange(self.small.order) * step) % big.order]
        to_small = np.full(big.q, -1, dtype=np.int64)
        to_small[to_big] = np.arange(self.small.q, dtype=np.int64)
        to_big.flags.writeable = False
        to_small.flags.writeable = False
        self._to_big = to_big
        self._to_small = to_small

    def to_small(self, x: ArrayLike) -> ArrayLike:
        out = self._to_small[np.asarray(x, dtype=np.int64)]
        if np.any(out < 0):
            raise ValueError("value does not lie in the subfield")
        return int(out) if np.ndim(out) == 0 else out

    def to_big(self, x: ArrayLike) -> ArrayLike:
        out = self._to_big[np.asarray(x, dtype=np.int64)]
        return int(out) if np.ndim(out) == 0 else out


@lru_cache(maxsize=None)
def _subfield(big: FieldContext, t: int) -> SubfieldEmbedding:
    return SubfieldEmbedding(big, t)


@dataclass(frozen=True)
class FieldElement:
    field: FieldContext
    value: int

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            # integers act through the prime subfield
            return int(other) % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def trace(self, s: int) -> "FieldElement":
        return self._wrap(self.field.trace(self.value, s))

    def in_subfield(self, t: int) -> bool:
        return bool(self.field.in_subfield(self.value, t))

    def __repr__(self) -> str:
        if self.value == 0:
            return "0"
        return f"g^{int(self.field.log[self.value])}"
