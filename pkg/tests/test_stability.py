from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enhadhm.constructions import random_representations
from enhadhm.exactmat import RatMatrix, Subspace
from enhadhm.quiver import ADHMRep, DimVector, EnhancedRep, NotARepresentation
from enhadhm.stability import (ChamberError, ChamberLocation, chamber_of, chamber_verdict, destabilizing_witness,
                               is_adhm_stable, is_delta_stable, is_stable_in_chamber, krylov_closure, lower_shift,
                               make_param, slope_value, subrep_closure, verify_wall_witness,
                               wall_witness_minus, wall_witness_plus)
from enhadhm.suite import random_delta_param


def test_chamber_classification():
    dims = DimVector(1, 2, 1)
    assert chamber_of(make_param(-2, 1, dims)) is ChamberLocation.DELTA
    assert chamber_of(make_param(-1, 0, dims)) is ChamberLocation.RHO_MINUS
    assert chamber_of(make_param(-1, 1, dims)) is ChamberLocation.RHO_PLUS
    assert chamber_of(make_param(1, 1, dims)) is ChamberLocation.OUTSIDE


def test_theta_inf_balances():
    dims = DimVector(2, 3, 1)
    p = make_param(-3, 1, dims)
    assert p.theta * 3 + p.theta_prime * 1 + p.theta_inf * 2 == 0


def test_outside_chamber_rejected():
    X = wall_witness_plus(DimVector(1, 2, 1))
    with pytest.raises(ChamberError, match="chamber Delta"):
        is_stable_in_chamber(X, make_param(-1, 1, X.dims))


def test_non_representation_rejected():
    X = EnhancedRep.zero(DimVector(1, 1, 1)).replace(J=RatMatrix(1, 1, [[1]]), F=RatMatrix(1, 1, [[1]]))
    with pytest.raises(NotARepresentation):
        is_stable_in_chamber(X, make_param(-2, 1, X.dims))


def test_krylov_shift():
    S = krylov_closure(lower_shift(3), lower_shift(3), Subspace.coordinate(3, [0]))
    assert S.is_full()
    S = krylov_closure(lower_shift(3), lower_shift(3), Subspace.coordinate(3, [1]))
    assert S == Subspace.coordinate(3, [1, 2])


def test_adhm_stability_examples():
    A = lower_shift(2)
    assert is_adhm_stable(ADHMRep(1, 2, A, A, RatMatrix.column([1, 0]), RatMatrix.zeros(1, 2)))
    assert not is_adhm_stable(ADHMRep(1, 2, A, A, RatMatrix.column([0, 1]), RatMatrix.zeros(1, 2)))
    assert not is_adhm_stable(ADHMRep(1, 2, A, A, RatMatrix.zeros(2, 1), RatMatrix.zeros(1, 2)))


def test_verdict_reasons():
    X = wall_witness_minus(DimVector(1, 2, 1))
    v = chamber_verdict(X)
    assert not v.stable and v.rank_F == 0 and v.closure_dim == 2
    assert v.reasons()


def test_wall_witness_plus_is_delta_stable():
    X = wall_witness_plus(DimVector(2, 3, 2))
    assert is_delta_stable(X)


@pytest.mark.parametrize("which", ["minus", "plus"])
@pytest.mark.parametrize("d", [(1, 1, 1), (1, 2, 1), (2, 3, 2), (1, 4, 4), (2, 4, 3)])
def test_walls_strictly_semistable(which, d):
    rep = verify_wall_witness(which, DimVector(*d))
    assert rep.passed and rep.slope == 0
    assert rep.to_dict()["destabilizer"]["slope"] == "0"


def test_wall_plus_destabilizer_shape():
    rep = verify_wall_witness("plus", DimVector(1, 4, 2))
    assert rep.destabilizer.S == Subspace.coordinate(4, [2, 3])


def test_subrep_closure_needs_w():
    # J != 0 on the closure forbids a W-free subrepresentation
    dims = DimVector(1, 1, 1)
    X = EnhancedRep.zero(dims).replace(J=RatMatrix(1, 1, [[1]]))
    assert subrep_closure(X, False, Subspace.full(1), Subspace.zero(1)) is None


@given(st.integers(0, 5000), st.sampled_from([(1, 2, 1), (1, 3, 2), (2, 3, 1), (2, 3, 3)]))
def test_chamber_constancy_and_witness(seed, d):
    dims = DimVector(*d)
    X = random_representations(dims, seed, 1)[0]
    rng = random.Random(seed)
    verdicts = set()
    for _ in range(4):
        p = random_delta_param(rng, dims)
        v = is_stable_in_chamber(X, p)
        verdicts.add(v)
        w = destabilizing_witness(X, p)
        if v:
            assert w is None
        else:
            assert w is not None and w.is_subrepresentation_of(X)
            assert not w.is_zero() and not w.is_full()
            assert slope_value(w, p) >= 0
    assert len(verdicts) == 1


@given(st.integers(1, 50), st.integers(1, 50), st.integers(1, 50))
def test_random_delta_param_in_chamber(a, b, c):
    dims = DimVector(1, 2, 1)
    p = make_param(-Fraction(a, b) - Fraction(c, 7), Fraction(a, b), dims)
    assert chamber_of(p) is ChamberLocation.DELTA
