"""Report builders behind the command line.

Every function returns a plain ``dict`` (JSON-serialisable) and an exit status;
rendering is left to :mod:`varietycodes.cli`.  Exit status contract: 0 when
everything checked out or was bounded, 1 when a claim was refuted or a
recomputed parameter disagrees with the expected one, 2 for usage or spec
errors (raised, not returned).
"""

from __future__ import annotations

import itertools
import re
import time
from dataclasses import dataclass
from typing import Any, Iterable

from .catalog import CatalogEntry, CodeSpec, Expected, SpecError
from .distance import (DEFAULT_ENUM_CAP, DistanceResult, Status, min_dependent_columns,
                       min_weight_exhaustive, verify_distance_claim)
from .evaluation import LinearCode, code_from_blocks, dual_code_CUs, minimal_sets, orbit_rows
from .lattice import CyclotomicSet, NotOrbitClosed, complement_set, decompose_as_orbits
from .stabilizer import GV, gv_evaluate, self_orthogonality_witness

SEARCH_ORBIT_CAP = 24
SEARCH_ENUM_CAP = 1 << 16
SEARCH_WMAX = 4
TABLE_BUDGET = 60.0


@dataclass
class Report:
    doc: dict[str, Any]
    status: int = 0


def _orbit_doc(o: CyclotomicSet) -> dict[str, Any]:
    return {"representative": list(o.representative), "size": o.size}


def _distance_doc(res: DistanceResult) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "status": res.status.value,
        "distance": res.distance,
        "summary": res.describe(),
        "method": res.method,
        "work": res.work,
    }
    if res.claimed is not None:
        doc["claimed"] = res.claimed
    if res.witness is not None:
        doc["witness_support"] = [i for i, x in enumerate(res.witness) if x]
    return doc


def _gv_doc(n: int, k: int, d: int, q: int) -> dict[str, Any]:
    ev = gv_evaluate(n, k, d, q)
    doc: dict[str, Any] = {"verdict": ev.verdict.value, "branch": ev.branch}
    if ev.verdict is GV.UNSUPPORTED:
        doc["reason"] = ev.reason
    else:
        doc["lhs"] = ev.lhs
        doc["rhs"] = ev.rhs
    return doc


def _closure_doc(spec: CodeSpec) -> dict[str, Any]:
    try:
        decompose_as_orbits(spec.U, spec.p, spec.s)
    except NotOrbitClosed as exc:
        return {"orbit_closed": False, "witness": list(exc.witness), "image": list(exc.image)}
    return {"orbit_closed": True}


def describe(spec: CodeSpec, expected: Expected | None = None) -> Report:
    """Orbit structure, classical dimension, self-orthogonality and k; no distance work."""
    doc: dict[str, Any] = {
        "label": spec.label,
        "p": spec.p, "r": spec.r, "s": spec.s, "N": list(spec.N),
        "n": spec.n, "q": spec.q,
        "U_size": len(spec.U),
    }
    doc.update(_closure_doc(spec))
    orbits = [o for o in minimal_sets(spec) if all(u in spec.U for u in o)]
    doc["orbits"] = [_orbit_doc(o) for o in orbits]
    doc["classical_dimension"] = sum(o.size for o in orbits)
    witness = self_orthogonality_witness(spec.U, spec.p, spec.s)
    doc["self_orthogonal"] = witness is None
    if witness is not None:
        doc["self_orthogonality_witness"] = {
            "orbit": _orbit_doc(witness[0]), "complement": _orbit_doc(witness[1]),
        }
        return Report(doc, 1)
    k = spec.n - 2 * doc["classical_dimension"]
    doc["k"] = k
    status = 0
    if expected is not None:
        doc["expected"] = vars(expected).copy()
        doc["nk_match"] = (spec.n, k) == (expected.n, expected.k)
        status = 0 if doc["nk_match"] else 1
        if spec.n > 2 and expected.d >= 2:
            doc["gv"] = _gv_doc(spec.n, k, expected.d, spec.q)
    return Report(doc, status)


def verify(spec: CodeSpec, expected: Expected | None, w_max: int | None = None,
           enum_cap: int = DEFAULT_ENUM_CAP, jobs: int = 1,
           budget: float | None = None) -> Report:
    """Recompute (n, k) and certify the distance claim up to the given effort."""
    rep = describe(spec, expected)
    doc = rep.doc
    if not doc["self_orthogonal"]:
        return rep
    claim = expected.d if expected is not None else w_max
    if claim is None:
        raise SpecError("no distance claim: give an expected block or --wmax")
    if w_max is not None and w_max < 1:
        doc["distance"] = None
        return rep
    dual = dual_code_CUs(spec)
    if dual.dimension == 0:
        raise SpecError("the dual code is zero; there is no distance to certify")
    res = verify_distance_claim(dual, claim, enum_cap=enum_cap, w_max=w_max, jobs=jobs,
                                budget=budget)
    doc["distance"] = _distance_doc(res)
    status = rep.status
    if res.status is Status.REFUTED:
        status = 1
    return Report(doc, status)


# -- catalog table ----------------------------------------------------------------

_FILTER_TERM = re.compile(r"^\s*(\w+)\s*(=|==|!=|<=|>=|<|>)\s*(\S+)\s*$")


def parse_filter(expr: str | None):
    """``key OP value`` terms joined by commas; keys p, r, s, n, k, d, q, m,
    label, flag.  ``flag=GV`` selects rows carrying that mark."""
    if not expr:
        return lambda entry: True
    tests = []
    for term in expr.split(","):
        m = _FILTER_TERM.match(term)
        if not m:
            raise SpecError(f"cannot parse filter term {term!r}")
        key, op, val = m.groups()
        if key not in {"p", "r", "s", "n", "k", "d", "q", "m", "label", "flag"}:
            raise SpecError(f"unknown filter key {key!r}")
        if key in ("label", "flag") and op not in ("=", "==", "!="):
            raise SpecError(f"filter key {key!r} only supports = and !=")
        tests.append((key, op, val))

    def value_of(entry: CatalogEntry, key: str):
        if key in ("p", "r", "s", "m"):
            return getattr(entry.spec, key)
        if key in ("n", "k", "d", "q"):
            return getattr(entry.expected, key)
        return entry.label

    def accept(entry: CatalogEntry) -> bool:
        for key, op, val in tests:
            if key == "flag":
                ok = val.upper() in entry.flags
                ok = ok if op != "!=" else not ok
            elif key == "label":
                ok = entry.label.upper() == val.upper().replace("_", "")
                ok = ok if op != "!=" else not ok
            else:
                try:
                    x, y = value_of(entry, key), int(val)
                except ValueError:
                    raise SpecError(f"filter value {val!r} is not an integer") from None
                ok = {"=": x == y, "==": x == y, "!=": x != y, "<": x < y,
                      "<=": x <= y, ">": x > y, ">=": x >= y}[op]
            if not ok:
                return False
        return True

    return accept


def table(entries: Iterable[CatalogEntry], w_max: int | None = None,
          enum_cap: int = DEFAULT_ENUM_CAP, jobs: int = 1,
          budget: float = TABLE_BUDGET) -> Report:
    """Catalog rows with recomputed (n, k, q), GV verdicts and distance status.

    ``w_max = 0`` skips distance work; ``None`` uses each row's expected d.
    """
    rows = []
    status = 0
    start = time.monotonic()
    for entry in entries:
        spec, exp = entry.spec, entry.expected
        orbits = [o for o in minimal_sets(spec) if all(u in spec.U for u in o)]
        dim = sum(o.size for o in orbits)
        k = spec.n - 2 * dim
        row: dict[str, Any] = {
            "label": entry.label,
            "expected": vars(exp).copy(),
            "n": spec.n, "k": k, "q": spec.q,
            "flags": sorted(entry.flags),
        }
        row["nkq_match"] = (spec.n, k, spec.q) == (exp.n, exp.k, exp.q)
        so = self_orthogonality_witness(spec.U, spec.p, spec.s) is None
        row["self_orthogonal"] = so
        gv = gv_evaluate(spec.n, k, exp.d, spec.q)
        row["gv"] = gv.verdict.value
        row["gv_branch"] = gv.branch
        row["gv_match"] = (gv.verdict is GV.EXCEEDS) == ("GV" in entry.flags)
        row["distance"] = None
        if so and w_max != 0:
            limit = exp.d if w_max is None else min(w_max, exp.d)
            res = verify_distance_claim(dual_code_CUs(spec), exp.d, enum_cap=enum_cap,
                                        w_max=limit, jobs=jobs, budget=budget)
            row["distance"] = _distance_doc(res)
            if res.status is Status.REFUTED:
                status = 1
        if not (row["nkq_match"] and so and row["gv_match"]):
            status = 1
        rows.append(row)
    doc = {"rows": rows, "seconds": round(time.monotonic() - start, 3)}
    return Report(doc, status)


# -- search -----------------------------------------------------------------------


def distance_bound(dual: LinearCode, w_max: int, enum_cap: int) -> tuple[int, bool]:
    """Lower bound on the distance of ``dual``, and whether it is exact."""
    if dual.dimension == dual.length:
        return 1, True
    if dual.q**dual.dimension <= enum_cap:
        return min_weight_exhaustive(dual, enum_cap).distance, True
    res = min_dependent_columns(dual.field, dual.parity_check, max(w_max, 1))
    if res.is_exact:
        return res.distance, True
    return res.distance + 1, False


def search(p: int, r: int, s: int, N: Iterable[int], k_min: int = 0, d_min: int = 0,
           w_max: int = SEARCH_WMAX, enum_cap: int = SEARCH_ENUM_CAP,
           orbit_cap: int = SEARCH_ORBIT_CAP) -> Report:
    """All self-orthogonal unions of minimal orbits meeting the constraints.

    Orbits equal to their own complement can never be used; every other orbit
    comes paired with its complement and at most one of the two is chosen.
    """
    empty = CodeSpec.build(p, r, s, N, [])
    orbits = minimal_sets(empty)
    if len(orbits) > orbit_cap:
        raise SpecError(f"{len(orbits)} minimal orbits exceed the search cap {orbit_cap}")
    pairs: list[tuple[CyclotomicSet, CyclotomicSet]] = []
    seen: set = set()
    for o in orbits:
        comp = complement_set(o)
        if comp.representative == o.representative or o.representative in seen:
            continue
        seen.update({o.representative, comp.representative})
        pairs.append((o, comp))
    n = empty.n
    rows = {o.representative: orbit_rows(empty, o) for o in orbits}
    found = []
    for choice in itertools.product((None, 0, 1), repeat=len(pairs)):
        chosen = [pair[c] for pair, c in zip(pairs, choice) if c is not None]
        k = n - 2 * sum(o.size for o in chosen)
        if k < k_min:
            continue
        members = sorted(u for o in chosen for u in o)
        # the dual is spanned by every orbit except the complements of the chosen ones
        excluded = {complement_set(o).representative for o in chosen}
        dual = code_from_blocks(empty, [rows[o.representative] for o in orbits
                                        if o.representative not in excluded])
        bound, exact = distance_bound(dual, w_max, enum_cap)
        if bound < d_min:
            continue
        found.append({
            "U": [list(u) for u in members],
            "orbits": [list(o.representative) for o in sorted(chosen, key=lambda o: o.representative)],
            "k": k, "d_bound": bound, "d_exact": exact,
        })
    found.sort(key=lambda c: (-c["d_bound"], -c["k"], c["orbits"]))
    doc = {"p": p, "r": r, "s": s, "N": list(empty.N), "n": n, "q": empty.q,
           "orbit_pairs": len(pairs), "candidates": found}
    return Report(doc, 0)


def gv(n: int, k: int, d: int, q: int) -> Report:
    try:
        doc = {"n": n, "k": k, "d": d, "q": q, **_gv_doc(n, k, d, q)}
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    return Report(doc, 0)
