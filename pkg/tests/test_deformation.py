from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enhadhm.constructions import (VandermondeParams, random_representations, sample_stable,
                                   vandermonde_rep)
from enhadhm.deformation import (StabilityRequired, build_CX, build_CXdoubleprime, build_rho,
                                 check_d1dual_injective, check_H0rho_injective, check_les_consistency,
                                 check_perfect_obstruction, check_rho1_surjective_on_cocycles, cohomology,
                                 cone_matches, cx_degree_dims, expected_dimension)
from enhadhm.exactmat import RatMatrix
from enhadhm.quiver import DimVector, EnhancedRep, relation_residuals
from enhadhm.stability import wall_witness_minus, wall_witness_plus

DIMS = [(1, 2, 1), (1, 2, 2), (2, 3, 1), (2, 3, 2), (1, 3, 3), (3, 4, 2)]

RELATION_OF = {"c1": "R1", "c2": "R2", "c3": "R3", "c4": "R4", "c5": "R5"}
FIELD_OF = {"a": "A", "b": "B", "i": "I", "j": "J", "ap": "Aprime", "bp": "Bprime", "f": "F"}


def _rand(rng, rows, cols):
    return RatMatrix(rows, cols, [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])


def _vector(C, degree, blocks):
    v = [0] * C.dim(degree)
    for label, idx in C.offsets(degree).items():
        for k, x in zip(idx, blocks[label].vec()):
            v[k] = x
    return v


def _blocks(C, degree, v):
    out = {}
    for label, rows, cols in C.summands[degree]:
        idx = C.offsets(degree)[label]
        out[label] = RatMatrix.unvec([v[k] for k in idx], rows, cols)
    return out


def _random_rep(seed, d):
    return random_representations(DimVector(*d), seed, 1)[0]


# -- the differentials against independent formulas ---------------------------

@given(st.integers(0, 10_000), st.sampled_from(DIMS))
def test_d1_is_linearized_relations(seed, d):
    """Relations are quadratic, so (R(X+t) - R(X-t)) / 2 is exactly their derivative."""
    X = _random_rep(seed, d)
    C = build_CX(X, simplified=False)
    rng = random.Random(seed)
    t = {label: _rand(rng, rows, cols) for label, rows, cols in C.summands[1]}
    plus = X.replace(**{FIELD_OF[k]: getattr(X, FIELD_OF[k]) + m for k, m in t.items()})
    minus = X.replace(**{FIELD_OF[k]: getattr(X, FIELD_OF[k]) - m for k, m in t.items()})
    rp, rm = relation_residuals(plus), relation_residuals(minus)
    got = _blocks(C, 2, C.differential(1).apply(_vector(C, 1, t)))
    for label, rel in RELATION_OF.items():
        assert got[label] * 2 == getattr(rp, rel) - getattr(rm, rel)


@given(st.integers(0, 10_000), st.sampled_from(DIMS))
def test_d0_is_infinitesimal_gauge_action(seed, d):
    X = _random_rep(seed, d)
    C = build_CX(X, simplified=False)
    rng = random.Random(seed)
    h, hp = _rand(rng, X.c, X.c), _rand(rng, X.cprime, X.cprime)
    got = _blocks(C, 1, C.differential(0).apply(_vector(C, 0, {"h": h, "hp": hp})))
    assert got["a"] == h @ X.A - X.A @ h
    assert got["b"] == h @ X.B - X.B @ h
    assert got["i"] == h @ X.I
    assert got["j"] == -(X.J @ h)
    assert got["ap"] == hp @ X.Aprime - X.Aprime @ hp
    assert got["bp"] == hp @ X.Bprime - X.Bprime @ hp
    assert got["f"] == h @ X.F - X.F @ hp


@given(st.integers(0, 10_000), st.sampled_from(DIMS))
def test_d2_formula(seed, d):
    X = _random_rep(seed, d)
    C = build_CX(X, simplified=False)
    rng = random.Random(seed)
    c = {label: _rand(rng, rows, cols) for label, rows, cols in C.summands[2]}
    got = _blocks(C, 3, C.differential(2).apply(_vector(C, 2, c)))["e"]
    A, B, I, Ap, Bp, F = X.A, X.B, X.I, X.Aprime, X.Bprime, X.F
    want = (c["c1"] @ F + B @ c["c2"] - c["c2"] @ Bp + c["c3"] @ Ap - A @ c["c3"]
            - I @ c["c4"] - F @ c["c5"])
    assert got == want


@given(st.integers(0, 10_000), st.sampled_from(DIMS))
def test_complex_and_chain_map(seed, d):
    X = _random_rep(seed, d)
    assert not build_CX(X).square_zero_failures()
    assert build_rho(X).is_chain_map()
    assert cone_matches(X)


# -- degree dimensions and expected dimension ------------------------------------

def test_degree_dims_examples():
    assert cx_degree_dims(DimVector(1, 2, 2)) == (8, 24, 18, 4)
    assert cx_degree_dims(DimVector(1, 2, 1)) == (5, 16, 9, 2)
    assert cx_degree_dims(DimVector(1, 2, 1), simplified=False) == (5, 16, 10, 2)
    X = wall_witness_plus(DimVector(1, 2, 2))
    assert build_CX(X).degree_dims == (8, 24, 18, 4)


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("c", range(1, 6))
def test_expected_dimension_from_euler(r, c):
    for cp in range(1, c + 1):
        dims = DimVector(r, c, cp)
        degs = cx_degree_dims(dims)
        assert -sum((-1) ** i * n for i, n in enumerate(degs)) == expected_dimension(dims)


def test_expected_dimension_needs_cprime():
    with pytest.raises(ValueError):
        expected_dimension(DimVector(1, 2, 0))


# -- cohomology values -------------------------------------------------------------

@pytest.mark.parametrize("r,c,h", [(1, 2, (0, 4, 0, 0)), (1, 3, (0, 6, 0, 0)), (2, 3, (0, 11, 0, 0)),
                                   (2, 2, (0, 7, 0, 0))])
def test_vandermonde_cohomology(r, c, h):
    X = vandermonde_rep(VandermondeParams(r, c, tuple(range(1, c + 1))))
    assert cohomology(build_CX(X)).h == h
    # the unreduced complex carries one extra obstruction class from c5
    full = cohomology(build_CX(X, simplified=False)).h
    assert full == (h[0], h[1], h[2] + 1, h[3])


@pytest.mark.parametrize("d,h", [((1, 2, 1), (0, 4, 0, 0)), ((2, 3, 2), (0, 10, 2, 0)), ((1, 3, 2), (0, 6, 2, 0))])
def test_wall_plus_cohomology(d, h):
    assert cohomology(build_CX(wall_witness_plus(DimVector(*d)))).h == h


def test_perfect_obstruction_requires_stability():
    with pytest.raises(StabilityRequired, match="theorem requires stability"):
        check_perfect_obstruction(wall_witness_minus(DimVector(1, 2, 1)))


@pytest.mark.parametrize("d", [(1, 2, 1), (2, 3, 2), (1, 3, 3), (2, 4, 1)])
def test_stable_points_are_perfect(d):
    for X in sample_stable(DimVector(*d), seed=3, attempts=8, count=4):
        rep = check_perfect_obstruction(X)
        assert rep.perfect
        assert check_H0rho_injective(X)
        assert check_d1dual_injective(X)


@pytest.mark.parametrize("r,c", [(1, 1), (1, 3), (2, 2), (3, 3)])
def test_vandermonde_probes(r, c):
    X = vandermonde_rep(VandermondeParams(r, c, tuple(range(1, c + 1))))
    assert check_rho1_surjective_on_cocycles(X)
    assert check_les_consistency(X, deep=True).passed


def test_rho1_probe_only_for_cprime_one():
    with pytest.raises(ValueError):
        check_rho1_surjective_on_cocycles(wall_witness_plus(DimVector(1, 2, 2)))


def test_simplified_doubleprime_is_zero_map():
    C = build_CXdoubleprime(vandermonde_rep(VandermondeParams(1, 2, (1, 2))))
    assert C.degree_dims == (1, 2) and C.differential(0).is_zero()


@given(st.integers(0, 10_000), st.sampled_from(DIMS))
def test_les_alternating_sum(seed, d):
    X = _random_rep(seed, d)
    assert check_les_consistency(X).alternating_sum == 0


@pytest.mark.parametrize("d", [(1, 2, 2), (2, 3, 2), (1, 3, 1)])
def test_les_deep(d):
    for X in random_representations(DimVector(*d), 11, 2):
        assert check_les_consistency(X, deep=True).passed


def test_zero_rep_cohomology_is_consistent():
    X = EnhancedRep.zero(DimVector(1, 2, 2))
    rep = cohomology(build_CX(X))
    assert sum((-1) ** i * x for i, x in enumerate(rep.h)) == rep.euler
