import warnings
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instances import random_instances
from varietycodes.catalog import CodeSpec, lookup
from varietycodes.evaluation import code_CU, code_CUs
from varietycodes.lattice import ExponentSet, hypercube
from varietycodes.stabilizer import (GV, NotSelfOrthogonal, check_self_orthogonal_CU,
                                     check_self_orthogonal_CUs, css_parameters,
                                     gram_orthogonality_oracle, gv_evaluate, gv_sufficient)


def test_css_parameters_u14():
    rep = css_parameters(lookup("U14").spec, d_claim=3)
    assert rep.parameters() == "[[21,13,3]]_4"
    assert rep.classical_dimension == 4
    assert [o.representative for o in rep.orbits] == [(0, 2), (3, 1)]
    assert rep.pure_to == 3
    assert rep.gv.verdict is GV.GUARANTEED


def test_css_parameters_e2_full_field():
    rep = css_parameters(lookup("E2").spec)
    assert (rep.n, rep.k, rep.q) == (49, 39, 8)


def test_zero_exponent_is_not_self_orthogonal():
    spec = CodeSpec.build(2, 2, 2, (3,), [0])
    assert not check_self_orthogonal_CUs(spec.U, 2, 2)
    with pytest.raises(NotSelfOrthogonal) as info:
        css_parameters(spec)
    assert info.value.orbit.representative == (0,)


def test_empty_u_warns():
    spec = CodeSpec.build(2, 2, 2, (3,), [])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = css_parameters(spec)
    assert caught and rep.parameters() == "[[3,3,1]]_4"


@pytest.mark.parametrize("spec", random_instances(30, seed=11), ids=lambda s: s.label)
def test_self_orthogonality_criterion_matches_gram(spec):
    assert check_self_orthogonal_CUs(spec.U, spec.p, spec.s) == gram_orthogonality_oracle(code_CUs(spec))


@pytest.mark.parametrize("spec", random_instances(15, seed=12, closed=False), ids=lambda s: s.label)
def test_self_orthogonality_of_c_u(spec):
    if spec.s != spec.r:
        spec = CodeSpec(spec.p, spec.r, spec.r, spec.N, spec.U)
    assert check_self_orthogonal_CU(spec.U) == gram_orthogonality_oracle(code_CU(spec))


@pytest.mark.parametrize("n,k,d,q,verdict,lhs,rhs", [
    (200, 184, 4, 3, GV.EXCEEDS, 84_217_000, 48_427_561),
    (23, 1, 7, 2, GV.EXCEEDS, 8_388_609, 32_994_558),
    (63, 55, 4, 8, GV.EXCEEDS, 157_736_061, 17_043_521),
    (11, 1, 5, 3, GV.EXCEEDS, 177_148, 521_224),
    (147, 127, 3, 2, GV.GUARANTEED, 32_340, 1_398_101),
])
def test_gv_values(n, k, d, q, verdict, lhs, rhs):
    ev = gv_evaluate(n, k, d, q)
    assert (ev.verdict, ev.lhs, ev.rhs) == (verdict, lhs, rhs)


def test_gv_unsupported_and_errors():
    assert gv_sufficient(10, 0, 3, 2) is GV.UNSUPPORTED
    assert gv_sufficient(10, 3, 3, 2) is GV.UNSUPPORTED
    assert "parity" in gv_evaluate(10, 3, 3, 2).reason
    with pytest.raises(ValueError):
        gv_evaluate(2, 0, 2, 2)
    with pytest.raises(ValueError):
        gv_evaluate(10, 2, 1, 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 60), st.integers(2, 8), st.sampled_from([2, 3, 4, 5, 7, 8]), st.data())
def test_gv_monotone_in_d(n, d, q, data):
    k = data.draw(st.integers(0, n))
    ev1 = gv_evaluate(n, k, d, q)
    ev2 = gv_evaluate(n, k, d + 1, q)
    if ev1.verdict is GV.UNSUPPORTED:
        assert ev2.verdict is GV.UNSUPPORTED
        return
    # a larger distance is never easier to guarantee
    if ev1.verdict is GV.EXCEEDS:
        assert ev2.verdict is GV.EXCEEDS
    if ev1.branch == "k>=2":
        expect = sum((q * q - 1) ** (i - 1) * comb(n, i) for i in range(1, d))
        assert ev1.lhs == expect
        assert ev1.rhs * (q * q - 1) == q ** (n - k + 2) - 1


@pytest.mark.parametrize("p,r,N", [(2, 2, (3,)), (2, 4, (5,)), (2, 2, (3, 3)), (3, 2, (4,)), (2, 3, (7,))])
def test_full_field_predicates_agree_exhaustively(p, r, N):
    """With s = r every orbit is a singleton, so both criteria coincide on every subset."""
    cube = hypercube(N)
    for size in range(len(cube) + 1):
        for members in combinations(cube, size):
            U = ExponentSet.of(N, members)
            assert check_self_orthogonal_CUs(U, p, r) == check_self_orthogonal_CU(U)
