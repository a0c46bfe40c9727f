import io

import numpy as np
import pytest

from instances import random_instances
from varietycodes import linalg
from varietycodes.catalog import CodeSpec, lookup
from varietycodes.evaluation import (LinearCode, PointSet, TracePolynomial, apply_T, code_CU, code_CUs,
                                     dual_code_CUs, evaluate, format_entry, minimal_sets, parse_entry,
                                     point_set, read_matrix, subcode_diagnostic, subfield_of,
                                     subfield_subcode_oracle, trace_monomial, write_matrix)
from varietycodes.fields import build_field
from varietycodes.lattice import ExponentSet, hypercube, u_perp


def full_spec(p, r, s, N):
    return CodeSpec.build(p, r, s, N, hypercube(N))


def test_point_ordering_is_mixed_radix():
    F = build_field(2, 6)
    pts = PointSet.build(F, (7, 3))
    assert len(pts) == 21
    assert pts.logs[:4].tolist() == [[0, 0], [0, 21], [0, 42], [9, 0]]
    w = F.root_of_unity(7)
    assert pts.points()[3, 0] == w


@pytest.mark.parametrize("p,r,N", [(2, 4, (3, 5)), (2, 6, (7, 3)), (3, 2, (8,)), (2, 3, (7, 7))])
def test_evaluation_map_is_injective(p, r, N):
    """The n monomials of the box evaluate to n independent vectors."""
    assert code_CU(full_spec(p, r, r, N)).dimension == len(hypercube(N))


@pytest.mark.parametrize("label", ["E1", "E2", "U14", "U5", "U31", "U20"])
def test_dual_exponent_set_gives_dual_code(label):
    spec = lookup(label).spec
    C = code_CU(spec)
    D = code_CU(CodeSpec(spec.p, spec.r, spec.s, spec.N, u_perp(spec.U)))
    assert C.dimension + D.dimension == spec.n
    assert not np.any(linalg.matmul(C.field, C.generator, D.generator.T))


def test_e2_dimensions():
    spec = lookup("E2").spec
    assert code_CU(spec).dimension == 5
    assert code_CUs(spec).dimension == 5
    assert dual_code_CUs(spec).dimension == 44


def test_u14_worked_example():
    spec = lookup("U14").spec
    C = code_CUs(spec)
    assert C.dimension == 4
    assert C.field.q == 4
    assert set(C.generator.ravel().tolist()) <= set(range(4))


@pytest.mark.parametrize("spec", random_instances(12, seed=7), ids=lambda s: s.label)
def test_trace_commutes_with_evaluation(spec):
    pts = point_set(spec)
    F = pts.field
    rng = np.random.default_rng(len(spec.U))
    cube = hypercube(spec.N)
    terms = {cube[i]: int(rng.integers(1, F.q)) for i in rng.choice(len(cube), size=min(5, len(cube)), replace=False)}
    f = TracePolynomial(F, spec.N, terms)
    assert np.array_equal(evaluate(apply_T(f, spec.s), pts), F.trace(evaluate(f, pts), spec.s))


def test_trace_monomial_values_lie_in_subfield():
    spec = lookup("U15").spec
    pts = point_set(spec)
    F = pts.field
    for orbit in minimal_sets(spec):
        assert F.r % (spec.s * orbit.size) == 0
        for l in range(orbit.size):
            vals = evaluate(trace_monomial(F, orbit, l, spec.s), pts)
            assert np.all(F.in_subfield(vals, spec.s))


def test_trace_monomial_rejects_bad_l():
    spec = lookup("U15").spec
    orbit = minimal_sets(spec)[1]
    with pytest.raises(ValueError):
        trace_monomial(build_field(2, 6), orbit, orbit.size, 2)


@pytest.mark.parametrize("label", ["E1", "U14", "U15", "U31", "U5", "U20", "U37"])
def test_trace_basis_matches_intersection(label):
    diag = subcode_diagnostic(lookup(label).spec)
    assert diag["agree"]
    assert diag["trace_dimension"] == diag["intersection_dimension"]


@pytest.mark.parametrize("label", ["E1", "U14", "U31", "U5", "U23"])
def test_delsarte_dual(label):
    spec = lookup(label).spec
    C = code_CUs(spec)
    assert dual_code_CUs(spec).same_as(C.dual())


def test_non_closed_u_uses_whole_orbits_only():
    spec = CodeSpec.build(2, 11, 1, (23,), [1, 2, 4, 0])
    assert code_CUs(spec).dimension == 1
    assert subfield_subcode_oracle(spec).dimension == 1


def test_full_box_gives_everything_and_empty_nothing():
    spec = full_spec(2, 4, 2, (3, 5))
    assert code_CUs(spec).dimension == 15
    empty = CodeSpec.build(2, 4, 2, (3, 5), [])
    assert code_CUs(empty).dimension == 0
    assert dual_code_CUs(empty).dimension == 15


def test_linear_code_helpers():
    F = build_field(3, 1)
    C = LinearCode.from_rows(F, [[1, 1, 0], [2, 2, 0], [0, 1, 1]], 3)
    assert C.dimension == 2
    assert C.contains([1, 2, 1])
    assert not C.contains([1, 0, 0])
    assert C.dual().dimension == 1
    assert C.dual().dual().same_as(C)


def test_matrix_export_roundtrip():
    for label in ("U14", "E2", "U31"):
        C = code_CUs(lookup(label).spec)
        buf = io.StringIO()
        write_matrix(C, buf)
        assert np.array_equal(read_matrix(C.field, buf.getvalue()), C.generator)


def test_entry_format():
    F = build_field(2, 3)
    assert format_entry(F, 0b110) == "110"
    assert parse_entry(F, "011") == 3
    G = build_field(11, 2)
    assert format_entry(G, 10 * 11 + 3) == "[10]3"
    assert parse_entry(G, "[10]3") == 113
    with pytest.raises(ValueError):
        parse_entry(F, "12")


def test_subfield_matches_spec():
    spec = lookup("U14").spec
    assert subfield_of(spec).small.q == 4
    assert ExponentSet.of(spec.N, spec.U) == spec.U
