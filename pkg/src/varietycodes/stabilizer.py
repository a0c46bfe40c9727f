"""Self-orthogonality, CSS parameters and the Feng-Ma GV sufficient condition."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .catalog import CodeSpec
from .distance import DistanceResult
from .evaluation import LinearCode, minimal_sets
from .lattice import (CyclotomicSet, ExponentSet, all_minimal_sets, complement_set, hat,
                      orbits_inside)


class NotSelfOrthogonal(ValueError):
    def __init__(self, orbit: CyclotomicSet, complement: CyclotomicSet):
        super().__init__(
            f"orbit of {orbit.representative} and its complement "
            f"(orbit of {complement.representative}) both lie in U"
        )
        self.orbit = orbit
        self.complement = complement


class GV(enum.Enum):
    GUARANTEED = "GuaranteedByGV"
    EXCEEDS = "ExceedsGV"
    UNSUPPORTED = "Unsupported"


def check_self_orthogonal_CU(U: ExponentSet) -> bool:
    return all(hat(u, U.shape) not in U for u in U)


def self_orthogonality_witness(U: ExponentSet, p: int, s: int) -> tuple[CyclotomicSet, CyclotomicSet] | None:
    """First orbit inside ``U`` whose complement also lies inside ``U``."""
    for orbit in orbits_inside(U, all_minimal_sets(U.shape, p, s)):
        comp = complement_set(orbit)
        if all(u in U for u in comp):
            return orbit, comp
    return None


def check_self_orthogonal_CUs(U: ExponentSet, p: int, s: int) -> bool:
    return self_orthogonality_witness(U, p, s) is None


def gram_orthogonality_oracle(code: LinearCode) -> bool:
    if code.dimension == 0:
        return True
    return not np.any(linalg.gram(code.field, code.generator))


@dataclass(frozen=True)
class GVEvaluation:
    verdict: GV
    branch: str
    lhs: int | None = None
    rhs: int | None = None
    reason: str = ""


def gv_evaluate(n: int, k: int, d: int, q: int) -> GVEvaluation:
    """Evaluate the applicable Feng-Ma inequality in exact integers.

    For ``k >= 2`` with ``n = k (mod 2)`` the condition is
    ``sum_{i<d} (q^2-1)^(i-1) C(n,i) < (q^(n-k+2)-1)/(q^2-1)``; ``lhs`` and
    ``rhs`` are those two sides (the right one is always an integer here).
    For odd ``n`` and ``k = 1`` it is
    ``q^n + 1 > sum_{i<d} C(n,i) [q (q^2-1)^(i-1) + (-1)^(i+1) (q+1)^(i-1)]``
    and ``lhs = q^n + 1``, ``rhs`` the sum.
    """
    if n <= 2 or d < 2 or q < 2 or k < 0 or k > n:
        raise ValueError(f"GV condition needs n > 2, d >= 2, 0 <= k <= n (got n={n}, k={k}, d={d})")
    if k >= 2 and (n - k) % 2 == 0:
        lhs = sum((q * q - 1) ** (i - 1) * comb(n, i) for i in range(1, d))
        numerator = q ** (n - k + 2) - 1
        rhs, rem = divmod(numerator, q * q - 1)
        assert rem == 0
        verdict = GV.GUARANTEED if lhs < rhs else GV.EXCEEDS
        return GVEvaluation(verdict, "k>=2", lhs, rhs)
    if k == 1 and n % 2 == 1:
        lhs = q**n + 1
        rhs = sum(
            comb(n, i) * (q * (q * q - 1) ** (i - 1) + (-1) ** (i + 1) * (q + 1) ** (i - 1))
            for i in range(1, d)
        )
        verdict = GV.GUARANTEED if lhs > rhs else GV.EXCEEDS
        return GVEvaluation(verdict, "k=1", lhs, rhs)
    if k == 0 and n % 2 == 0:
        reason = "no explicit formula is available for even n and k = 0"
    elif k >= 2:
        reason = "n and k have different parity"
    else:
        reason = f"no condition covers n = {n}, k = {k}"
    return GVEvaluation(GV.UNSUPPORTED, "none", reason=reason)


def gv_sufficient(n: int, k: int, d: int, q: int) -> GV:
    return gv_evaluate(n, k, d, q).verdict


@dataclass(frozen=True)
class StabilizerReport:
    n: int
    k: int
    q: int
    classical_dimension: int
    self_orthogonal: bool
    orbits: tuple[CyclotomicSet, ...]
    d_claim: int | None = None
    distance: DistanceResult | None = None
    gv: GVEvaluation | None = None

    @property
    def pure_to(self) -> int | None:
        # purity is carried as a claim equal to the distance bound
        return self.d_claim

    def parameters(self) -> str:
        d = "?" if self.d_claim is None else str(self.d_claim)
        return f"[[{self.n},{self.k},{d}]]_{self.q}"


def css_parameters(spec: CodeSpec, d_claim: int | None = None,
                   distance: DistanceResult | None = None) -> StabilizerReport:
    """Quantum parameters of the CSS code built from the subfield-subcode.

    ``k = n - 2 * sum(i_a)`` over the minimal sets inside ``U``.  An empty
    ``U`` is accepted with a warning and reported as ``[[n, n, 1]]``.
    """
    witness = self_orthogonality_witness(spec.U, spec.p, spec.s)
    if witness is not None:
        raise NotSelfOrthogonal(*witness)
    if spec.s == spec.r:
        # p^r = 1 mod N_i, so every orbit is a singleton
        assert all(pow(spec.p, spec.r, n) == 1 % n for n in spec.N)
    inside = tuple(orbits_inside(spec.U, minimal_sets(spec)))
    dim = sum(o.size for o in inside)
    n = spec.n
    k = n - 2 * dim
    assert k >= 0
    if dim == 0:
        warnings.warn("empty classical code: degenerate [[n, n, 1]] report", stacklevel=2)
        d_claim = 1
    gv = None
    if d_claim is not None and d_claim >= 2 and n > 2:
        gv = gv_evaluate(n, k, d_claim, spec.q)
    return StabilizerReport(n, k, spec.q, dim, True, inside, d_claim, distance, gv)
