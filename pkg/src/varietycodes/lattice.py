"""Exponent combinatorics on the box Z_N1 x ... x Z_Nm.

Exponent vectors are plain tuples of ints.  Sets of them are kept as sorted,
deduplicated tuples so iteration order and hashing are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Shape = tuple[int, ...]


class NotOrbitClosed(ValueError):
    """Raised when an exponent set is not a union of minimal cyclotomic sets."""

    def __init__(self, witness: Vector, image: Vector):
        super().__init__(f"{witness} is in U but its image {image} is not")
        self.witness = witness
        self.image = image


@dataclass(frozen=True)
class ExponentSet:
    shape: Shape
    members: tuple[Vector, ...]

    @classmethod
    def of(cls, shape: Sequence[int], members: Iterable[Sequence[int]]) -> "ExponentSet":
        shape = tuple(int(n) for n in shape)
        vecs = set()
        for u in members:
            u = tuple(int(c) for c in u)
            check_vector(shape, u)
            vecs.add(u)
        return cls(shape, tuple(sorted(vecs)))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, u: object) -> bool:
        return u in self._set

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_cached_set", s)
        return s


@dataclass(frozen=True)
class CyclotomicSet:
    """A single orbit under coordinatewise multiplication by ``p**s``."""

    shape: Shape
    representative: Vector
    elements: tuple[Vector, ...]  # sorted

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, u: object) -> bool:
        return u in self.elements

    def __iter__(self):
        return iter(self.elements)


def check_vector(shape: Shape, u: Vector) -> None:
    if len(u) != len(shape):
        raise ValueError(f"{u} has {len(u)} coordinates, expected {len(shape)}")
    for c, n in zip(u, shape):
        if not 0 <= c < n:
            raise ValueError(f"{u} does not lie in the box {shape}")


def hypercube(shape: Sequence[int]) -> list[Vector]:
    return list(itertools.product(*(range(n) for n in shape)))


def hat(u: Vector, shape: Shape) -> Vector:
    return tuple((n - c) % n for c, n in zip(u, shape))


def scale(u: Vector, factor: int, shape: Shape) -> Vector:
    return tuple((c * factor) % n for c, n in zip(u, shape))


def u_perp(U: ExponentSet) -> ExponentSet:
    hats = {hat(u, U.shape) for u in U}
    return ExponentSet(U.shape, tuple(v for v in hypercube(U.shape) if v not in hats))


def minimal_cyclotomic_set(a: Vector, shape: Shape, p: int, s: int) -> CyclotomicSet:
    a = tuple(int(c) for c in a)
    check_vector(shape, a)
    factor = p**s
    orbit = [a]
    nxt = scale(a, factor, shape)
    while nxt != a:
        orbit.append(nxt)
        nxt = scale(nxt, factor, shape)
    elements = tuple(sorted(orbit))
    return CyclotomicSet(shape, elements[0], elements)


def all_minimal_sets(shape: Sequence[int], p: int, s: int) -> list[CyclotomicSet]:
    shape = tuple(shape)
    seen: set[Vector] = set()
    out = []
    for u in hypercube(shape):
        if u in seen:
            continue
        orbit = minimal_cyclotomic_set(u, shape, p, s)
        seen.update(orbit.elements)
        out.append(orbit)
    # hypercube() is lexicographic, so each orbit was found through its minimum
    return out


def complement_set(orbit: CyclotomicSet) -> CyclotomicSet:
    elements = tuple(sorted(hat(u, orbit.shape) for u in orbit))
    return CyclotomicSet(orbit.shape, elements[0], elements)


def check_orbit_closed(U: ExponentSet, p: int, s: int) -> None:
    factor = p**s
    for u in U:
        image = scale(u, factor, U.shape)
        if image not in U:
            raise NotOrbitClosed(u, image)


def decompose_as_orbits(U: ExponentSet, p: int, s: int) -> list[CyclotomicSet]:
    """Split ``U`` into its minimal cyclotomic sets, sorted by representative.

    Raises :class:`NotOrbitClosed` with the first offending member otherwise.
    """
    check_orbit_closed(U, p, s)
    seen: set[Vector] = set()
    out = []
    for u in U:
        if u in seen:
            continue
        orbit = minimal_cyclotomic_set(u, U.shape, p, s)
        seen.update(orbit.elements)
        out.append(orbit)
    return sorted(out, key=lambda o: o.representative)


def orbits_inside(U: ExponentSet, orbits: Iterable[CyclotomicSet]) -> list[CyclotomicSet]:
    return [o for o in orbits if all(u in U for u in o)]


def orbits_meeting(V: ExponentSet, orbits: Iterable[CyclotomicSet]) -> list[CyclotomicSet]:
    return [o for o in orbits if any(u in V for u in o)]
