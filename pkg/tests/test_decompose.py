"""Decomposition engine: routing, traces, bounds, Hilbert reduction."""

import pytest

from conekit import cones, gen, oracle
from conekit.cones import SimplicialCone
from conekit.decompose import (
    BaseStep,
    CoverStep,
    Decomposition,
    ProjectStep,
    ReductionTrace,
    StripStep,
    base_case_solve,
    decompose,
    icr_upper_bound,
    reduce_to_hilbert,
    replay,
)
from conekit.errors import CertificateError, MembershipError, PreconditionError
from conekit.special import make_skew_cone

CONE_12 = SimplicialCone(((1, 0), (1, 2)))
CONE_DET5 = SimplicialCone(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 2, 3, 5)))


def test_decompose_zero():
    dec = decompose(CONE_12, (0, 0))
    assert dec.terms == ()
    assert dec.term_count() == 0
    assert dec.all_hilbert


def test_decompose_dim2_example():
    dec = decompose(CONE_12, (3, 2))
    assert dec.term_count() == 2
    assert dec.vector_sum() == (3, 2)
    assert dec.all_hilbert
    assert dec.trace.steps == (BaseStep(dim=2, method="search"),)


def test_decompose_parallelepiped_multiple():
    dec = decompose(CONE_DET5, (2, 4, 6, 8))
    assert dec.terms == ((2, (1, 2, 3, 4)),)
    assert dec.all_hilbert
    assert isinstance(dec.trace.steps[0], CoverStep)


def test_decompose_rejects_outside():
    with pytest.raises(MembershipError):
        decompose(CONE_12, (0, 1))
    with pytest.raises(MembershipError):
        decompose(CONE_DET5, (0, 0, 0, 1))


def test_decompose_unimodular_route():
    cone = SimplicialCone(((1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)))
    assert cones.multiplicity(cone) == 1
    dec = decompose(cone, (4, 3, 2, 1))
    assert dec.trace.steps == (BaseStep(dim=4, method="unimodular"),)
    assert dec.terms == tuple((1, g) for g in cone.generators)


def test_decompose_strip_route():
    cone, _ = make_skew_cone(4, (0, 1, 2, 4))
    z = (3, 1, 2, 4)  # one generator with integral dual contributes 3 - 0 = 3
    dec = decompose(cone, z)
    first = dec.trace.steps[0]
    assert isinstance(first, StripStep)
    assert first.index == 0
    assert dec.vector_sum() == z
    assert dec.term_count() <= 4


def test_decompose_project_route():
    cone, _ = make_skew_cone(4, (1, 1, 2, 4))
    z = tuple(sum(col) for col in zip(*cone.generators))
    dec = decompose(cone, z)
    first = dec.trace.steps[0]
    assert isinstance(first, ProjectStep)
    assert {first.axis, first.partner} == {0, 1}
    assert first.sigma >= 0
    assert dec.vector_sum() == z
    assert dec.term_count() <= 4


def test_decompose_fallback_route():
    # Multiplicity 7 in dimension 4 with four distinct non-trivial cosets:
    # no strip, no project, no multiplicity-5 cover, so bounded search.
    cone, _ = make_skew_cone(4, (1, 2, 3, 7))
    z = tuple(sum(col) for col in zip(*cone.generators))
    dec = decompose(cone, z)
    assert dec.trace.steps == (BaseStep(dim=4, method="search"),)
    assert dec.term_count() <= 2 * 4 - 2
    assert dec.vector_sum() == z


def test_base_case_solve():
    dec = base_case_solve(CONE_12, (3, 2))
    assert dec.term_count() == 2
    with pytest.raises(PreconditionError):
        base_case_solve(CONE_DET5, (1, 2, 3, 5))


def test_replay_roundtrip():
    z = (2, 3, 4, 5)
    dec = decompose(CONE_DET5, z)
    again = replay(CONE_DET5, z, dec.trace)
    assert again == dec


def test_replay_detects_tampered_trace():
    z = (2, 3, 4, 5)
    dec = decompose(CONE_DET5, z)
    wrong = ReductionTrace(dec.trace.steps + (StripStep(index=0, coeff=1),))
    with pytest.raises(CertificateError):
        replay(CONE_DET5, z, wrong)


def test_reduce_to_hilbert():
    dec = Decomposition(
        target=(2, 2),
        terms=((1, (2, 2)),),
        all_hilbert=False,
        trace=ReductionTrace(()),
    )
    reduced = reduce_to_hilbert(CONE_12, dec)
    assert reduced.all_hilbert
    assert reduced.vector_sum() == (2, 2)
    assert reduced.terms == ((2, (1, 1)),)


def test_icr_upper_bound_methods():
    assert icr_upper_bound(CONE_12).value == 2
    assert icr_upper_bound(CONE_12).method == "dim-le-3"

    cone, _ = make_skew_cone(7, (1, 1, 1, 1, 1, 1, 4))
    bound = icr_upper_bound(cone)
    assert (bound.value, bound.method) == (7, "small-multiplicity")

    cone, _ = make_skew_cone(5, (1, 1, 1, 1, 9))
    bound = icr_upper_bound(cone)
    assert (bound.value, bound.method) == (5, "few-cosets")

    cone, _ = make_skew_cone(6, (1, 2, 3, 4, 0, 6))
    bound = icr_upper_bound(cone)
    assert (bound.value, bound.method) == (9, "pigeonhole")

    cone, _ = make_skew_cone(5, (1, 7, 13, 29, 40))
    bound = icr_upper_bound(cone)
    assert (bound.value, bound.method) == (8, "general")


def test_decomposition_valid_on_random_sample():
    for dim in (3, 4, 5):
        for det in (2, 3, 5, 7):
            cone = gen.random_cone(dim, det, gen.seeded_rng(3, dim, det, 0))
            hb = set(cones.hilbert_basis(cone).elements)
            for z in oracle.dilated_sample(cone, 2):
                dec = decompose(cone, z)
                assert dec.vector_sum() == tuple(z)
                assert all(c >= 1 for c, _ in dec.terms)
                if not dec.all_hilbert:
                    dec = reduce_to_hilbert(cone, dec)
                assert all(v in hb for _, v in dec.terms)
                assert dec.vector_sum() == tuple(z)
                assert dec.term_count() <= dim
