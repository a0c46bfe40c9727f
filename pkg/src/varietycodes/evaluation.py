"""Affine variety codes, their subfield-subcodes and duals as explicit matrices.

Points of the variety are tuples of roots of unity, handled through their
discrete logs: coordinate ``i`` of the point with mixed-radix index
``(e_1, ..., e_m)`` is ``w_i ** e_i`` with ``w_i`` a primitive ``N_i``-th root
of unity, so a monomial ``X^u`` evaluates to ``g ** sum(u_i * e_i * (q-1)/N_i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, TextIO

import numpy as np

from . import linalg
from .catalog import CodeSpec
from .fields import FieldContext, SubfieldEmbedding, build_field
from .lattice import (CyclotomicSet, ExponentSet, Vector, all_minimal_sets, orbits_inside,
                      orbits_meeting, scale, u_perp)


@dataclass(frozen=True)
class PointSet:
    field: FieldContext
    shape: tuple[int, ...]
    logs: np.ndarray = field(repr=False)  # (n, m) discrete logs of the coordinates

    @classmethod
    def build(cls, F: FieldContext, shape: Iterable[int]) -> "PointSet":
        shape = tuple(shape)
        for n in shape:
            if F.order % n:
                raise ValueError(f"{n} does not divide {F.order}")
        steps = np.array([F.order // n for n in shape], dtype=np.int64)
        idx = np.array(list(itertools.product(*(range(n) for n in shape))), dtype=np.int64)
        idx = idx.reshape(-1, len(shape))
        logs = (idx * steps) % max(F.order, 1)
        logs.flags.writeable = False
        return cls(F, shape, logs)

    def __len__(self) -> int:
        return self.logs.shape[0]

    def points(self) -> np.ndarray:
        """Coordinates as field elements, shape ``(n, m)``."""
        return self.field.power_of_g(self.logs)

    def monomial(self, u: Vector) -> np.ndarray:
        return self.field.power_of_g(self.logs @ np.asarray(u, dtype=np.int64))


def point_set(spec: CodeSpec) -> PointSet:
    return PointSet.build(build_field(spec.p, spec.r), spec.N)


class TracePolynomial:
    """Canonical representative in ``F[X]/(X_i^N_i - 1)``: exponents live in the box."""

    def __init__(self, field: FieldContext, shape: Iterable[int],
                 terms: Mapping[Vector, int] | None = None):
        self.field = field
        self.shape = tuple(shape)
        self.terms: dict[Vector, int] = {}
        for u, c in (terms or {}).items():
            self._accumulate(tuple(int(a) % n for a, n in zip(u, self.shape)), int(c))

    def _accumulate(self, u: Vector, c: int) -> None:
        total = self.field.add(self.terms.get(u, 0), c)
        if total:
            self.terms[u] = total
        else:
            self.terms.pop(u, None)

    @classmethod
    def monomial(cls, field: FieldContext, shape, u: Vector, coeff: int = 1) -> "TracePolynomial":
        return cls(field, shape, {tuple(u): coeff})

    def __add__(self, other: "TracePolynomial") -> "TracePolynomial":
        out = TracePolynomial(self.field, self.shape, self.terms)
        for u, c in other.terms.items():
            out._accumulate(u, c)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def frobenius(self, k: int) -> "TracePolynomial":
        """``f ** (p ** k)``; additive in characteristic ``p``."""
        factor = self.field.p**k
        out = TracePolynomial(self.field, self.shape)
        for u, c in self.terms.items():
            out._accumulate(scale(u, factor, self.shape), self.field.frobenius(c, k))
        return out

    @property
    def support(self) -> set[Vector]:
        return set(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{self.field.element(c)!r}*X^{u}" for u, c in sorted(self.terms.items()))


def evaluate(f: TracePolynomial, pts: PointSet) -> np.ndarray:
    F = pts.field
    out = np.zeros(len(pts), dtype=np.int64)
    for u, c in sorted(f.terms.items()):
        out = F.add(out, F.mul(c, pts.monomial(u)))
    return out


def apply_T(f: TracePolynomial, s: int) -> TracePolynomial:
    """``f + f^(p^s) + ... + f^(p^(s(r/s - 1)))``."""
    r = f.field.r
    if s < 1 or r % s:
        raise ValueError(f"{s} does not divide {r}")
    out = TracePolynomial(f.field, f.shape)
    for j in range(r // s):
        out = out + f.frobenius(s * j)
    return out


def trace_monomial(F: FieldContext, orbit: CyclotomicSet, l: int, s: int) -> TracePolynomial:
    """``T_a(beta^l X^a)`` with ``a`` the orbit representative and ``beta``
    a primitive element of GF(p^(s * i_a))."""
    size = orbit.size
    if not 0 <= l < size:
        raise ValueError(f"l = {l} outside [0, {size})")
    if F.r % (s * size):
        raise ValueError(f"orbit size {size} times s = {s} does not divide r = {F.r}")
    beta = F.subfield_primitive(s * size)
    coeff = F.pow(beta, l)
    f = TracePolynomial(F, orbit.shape)
    a = orbit.representative
    for j in range(size):
        f._accumulate(scale(a, F.p ** (s * j), orbit.shape), F.frobenius(coeff, s * j))
    return f


@dataclass(frozen=True)
class LinearCode:
    """Row-reduced generator matrix over ``field``."""

    field: FieldContext
    generator: np.ndarray = field(repr=False)
    length: int

    @classmethod
    def from_rows(cls, F: FieldContext, rows, length: int) -> "LinearCode":
        G = np.asarray(rows, dtype=np.int64).reshape(-1, length)
        G = linalg.independent_rows(F, G) if G.shape[0] else G
        G = np.ascontiguousarray(G)
        G.flags.writeable = False
        return cls(F, G, length)

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def parity_check(self) -> np.ndarray:
        H = linalg.kernel(self.field, self.generator, self.length)
        H.flags.writeable = False
        return H

    def dual(self) -> "LinearCode":
        return LinearCode.from_rows(self.field, self.parity_check, self.length)

    def contains(self, v) -> bool:
        return linalg.in_row_space(self.field, v, self.generator)

    def same_as(self, other: "LinearCode") -> bool:
        return (self.field == other.field and self.length == other.length
                and linalg.same_row_space(self.field, self.generator, other.generator))

    def __repr__(self) -> str:
        return f"LinearCode([{self.length}, {self.dimension}] over GF({self.q}))"


def code_CU(spec: CodeSpec) -> LinearCode:
    pts = point_set(spec)
    rows = [pts.monomial(u) for u in spec.U]
    return LinearCode.from_rows(pts.field, np.array(rows).reshape(-1, len(pts)), len(pts))


def subfield_of(spec: CodeSpec) -> SubfieldEmbedding:
    return build_field(spec.p, spec.r).subfield(spec.s)


def minimal_sets(spec: CodeSpec) -> list[CyclotomicSet]:
    return all_minimal_sets(spec.N, spec.p, spec.s)


def orbit_rows(spec: CodeSpec, orbit: CyclotomicSet) -> np.ndarray:
    """Evaluations of ``T_a(beta^l X^a)``, ``l < i_a``, as words over GF(p^s)."""
    pts = point_set(spec)
    emb = subfield_of(spec)
    rows = [emb.to_small(evaluate(trace_monomial(pts.field, orbit, l, spec.s), pts))
            for l in range(orbit.size)]
    return np.array(rows, dtype=np.int64).reshape(-1, len(pts))


def _trace_rows(spec: CodeSpec, orbits: list[CyclotomicSet]) -> LinearCode:
    blocks = [orbit_rows(spec, o) for o in sorted(orbits, key=lambda o: o.representative)]
    return code_from_blocks(spec, blocks)


def code_from_blocks(spec: CodeSpec, blocks: list[np.ndarray]) -> LinearCode:
    G = np.vstack(blocks) if blocks else np.zeros((0, spec.n), dtype=np.int64)
    return LinearCode.from_rows(subfield_of(spec).small, G, spec.n)


def code_CUs(spec: CodeSpec) -> LinearCode:
    """Subfield-subcode over GF(p^s) from the orbits lying entirely in ``U``."""
    return _trace_rows(spec, orbits_inside(spec.U, minimal_sets(spec)))


def dual_code_CUs(spec: CodeSpec) -> LinearCode:
    """Dual of the subfield-subcode, from the orbits meeting ``U^perp``."""
    return _trace_rows(spec, orbits_meeting(u_perp(spec.U), minimal_sets(spec)))


def subfield_subcode_oracle(spec: CodeSpec) -> LinearCode:
    """``C_U`` intersected with GF(p^s)^n by plain GF(p)-linear algebra.

    A codeword ``sum_i lambda_i G_i`` lies in the subfield iff
    ``c^(p^s) - c = 0`` coordinatewise; that map is GF(p)-linear, so expanding
    every ``lambda_i`` over the GF(p)-basis ``1, g, ..., g^(r-1)`` gives a
    homogeneous system over GF(p).
    """
    big = code_CU(spec)
    F = big.field
    emb = subfield_of(spec)
    n, k, r = big.length, big.dimension, F.r
    if k == 0:
        return LinearCode.from_rows(emb.small, np.zeros((0, n), dtype=np.int64), n)
    basis = F.power_of_g(np.arange(r))
    # spans[i, t] = g^t * G_i
    spans = F.mul(basis[None, :, None], big.generator[:, None, :])
    image = F.sub(F.frobenius(spans, spec.s), spans)
    A = F.digits(image).transpose(2, 3, 0, 1).reshape(n * r, k * r)
    Fp = build_field(spec.p, 1)
    sol = linalg.kernel(Fp, A, k * r)
    words = []
    for x in sol:
        coeffs = x.reshape(k, r)
        word = np.zeros(n, dtype=np.int64)
        for i, t in zip(*np.nonzero(coeffs)):
            word = F.add(word, F.mul(int(coeffs[i, t]), spans[i, t]))
        words.append(emb.to_small(word))
    G = np.array(words, dtype=np.int64).reshape(-1, n)
    return LinearCode.from_rows(emb.small, G, n)


def subcode_diagnostic(spec: CodeSpec) -> dict[str, int | bool]:
    """Compare the trace-basis construction with the direct intersection."""
    fast = code_CUs(spec)
    slow = subfield_subcode_oracle(spec)
    return {
        "trace_dimension": fast.dimension,
        "intersection_dimension": slow.dimension,
        "agree": fast.same_as(slow),
    }


# -- plain-text matrix export -----------------------------------------------


def format_entry(F: FieldContext, x: int) -> str:
    """Base-p numeral of the element, ``r`` digits, leading coefficient first."""
    digits = F.digits(int(x))[::-1]
    return "".join(str(int(d)) if d < 10 else f"[{int(d)}]" for d in digits)


def write_matrix(code: LinearCode, out: TextIO) -> None:
    F = code.field
    for row in code.generator:
        out.write(" ".join(format_entry(F, x) for x in row) + "\n")


def parse_entry(F: FieldContext, token: str) -> int:
    digits: list[int] = []
    i = 0
    while i < len(token):
        if token[i] == "[":
            j = token.index("]", i)
            digits.append(int(token[i + 1 : j]))
            i = j + 1
        else:
            digits.append(int(token[i]))
            i += 1
    if len(digits) != F.r or any(d >= F.p for d in digits):
        raise ValueError(f"{token!r} is not an element of GF({F.q})")
    return int(F.from_digits(np.array(digits[::-1])))


def read_matrix(F: FieldContext, text: str) -> np.ndarray:
    rows = [[parse_entry(F, tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
    return np.array(rows, dtype=np.int64)
