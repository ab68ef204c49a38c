"""Stability parameters, the chamber Delta, closures and wall witnesses."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactmat import RatMatrix, Subspace, format_rational, preimage, sum_spaces
from .quiver import ADHMRep, DimVector, EnhancedRep, NotARepresentation, relation_residuals


class ChamberError(ValueError):
    pass


@dataclass(frozen=True)
class StabilityParam:
    """Theta = (theta, theta', theta_inf); theta_inf is derived from the others."""

    theta: Fraction
    theta_prime: Fraction
    theta_inf: Fraction
    dims: DimVector

    def __post_init__(self):
        r, c, cp = self.dims.astuple()
        if c * self.theta + cp * self.theta_prime + r * self.theta_inf != 0:
            raise ValueError("stability parameter violates c*theta + c'*theta' + r*theta_inf = 0")


def make_param(theta, theta_prime, dims: DimVector) -> StabilityParam:
    theta, theta_prime = Fraction(theta), Fraction(theta_prime)
    theta_inf = -(dims.c * theta + dims.cprime * theta_prime) / dims.r
    return StabilityParam(theta, theta_prime, theta_inf, dims)


class ChamberLocation(enum.Enum):
    DELTA = "Delta"
    RHO_MINUS = "RhoMinus"
    RHO_PLUS = "RhoPlus"
    OUTSIDE = "Outside"


def chamber_of(p: StabilityParam) -> ChamberLocation:
    t, tp = p.theta, p.theta_prime
    if tp > 0 and t + tp < 0:
        return ChamberLocation.DELTA
    if tp == 0 and t < 0:
        return ChamberLocation.RHO_MINUS
    if tp > 0 and t == -tp:
        return ChamberLocation.RHO_PLUS
    return ChamberLocation.OUTSIDE


# ---------------------------------------------------------------------------
# closures


def closure_basis(ops, basis):
    """Column basis of the smallest ``ops``-invariant space containing the columns of ``basis``.

    Works for any matrix type offering ``@``, ``hstack``, ``column_basis`` and
    ``cols``; the finite-field oracle reuses it.  Each round applies the
    operators in the given order; the result does not depend on that order.
    """
    current = basis.column_basis()
    while True:
        grown = current.hstack(*(op @ current for op in ops)).column_basis()
        if grown.cols == current.cols:
            return current
        current = grown


def krylov_closure(A: RatMatrix, B: RatMatrix, seed: Subspace) -> Subspace:
    if A.shape != B.shape or not A.is_square() or A.rows != seed.ambient_dim:
        raise ValueError("A, B must be square of the seed's ambient dimension")
    return Subspace.span(closure_basis((A, B), seed.basis))


def is_adhm_stable(X: ADHMRep) -> bool:
    """No proper (A, B)-invariant subspace contains im(I)."""
    return krylov_closure(X.A, X.B, Subspace.span(X.I)).is_full()


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    rank_F: int
    cprime: int
    closure_dim: int
    c: int

    @property
    def F_injective(self) -> bool:
        return self.rank_F == self.cprime

    @property
    def adhm_stable(self) -> bool:
        return self.closure_dim == self.c

    def reasons(self) -> list[str]:
        out = []
        if not self.F_injective:
            out.append(f"F not injective (rank {self.rank_F} < c' = {self.cprime})")
        if not self.adhm_stable:
            out.append(f"closure of im(I) under A, B has dimension {self.closure_dim} < c = {self.c}")
        return out

    def to_dict(self) -> dict:
        return {"stable": self.stable, "rank_F": self.rank_F, "cprime": self.cprime,
                "closure_dim": self.closure_dim, "c": self.c, "reasons": self.reasons()}


def chamber_verdict(X: EnhancedRep) -> StabilityVerdict:
    """Injectivity of F and ADHM stability of (A, B, I, J), with the numbers behind them."""
    rank_F = X.F.rank()
    closure = krylov_closure(X.A, X.B, Subspace.span(X.I))
    stable = rank_F == X.cprime and closure.is_full()
    return StabilityVerdict(stable, rank_F, X.cprime, closure.dim, X.c)


def is_delta_stable(X: EnhancedRep) -> bool:
    """Stability for any parameter in Delta (the verdict is the same throughout the chamber)."""
    return chamber_verdict(X).stable


def is_stable_in_chamber(X: EnhancedRep, p: StabilityParam) -> bool:
    if chamber_of(p) is not ChamberLocation.DELTA:
        raise ChamberError("criterion only valid in chamber Delta")
    if p.dims != X.dims:
        raise ValueError("parameter and representation have different dimension vectors")
    if X.cprime < 1:
        raise ValueError("stability in Delta needs c' >= 1")
    if not relation_residuals(X).is_zero():
        raise NotARepresentation("not a representation")
    return is_delta_stable(X)


# ---------------------------------------------------------------------------
# subrepresentations


@dataclass(frozen=True)
class SubrepWitness:
    includes_W: bool
    S: Subspace
    Sprime: Subspace

    def numerical_type(self, r: int) -> tuple[int, int, int]:
        return (r if self.includes_W else 0, self.S.dim, self.Sprime.dim)

    def is_subrepresentation_of(self, X: EnhancedRep) -> bool:
        S, Sp = self.S, self.Sprime
        if S.ambient_dim != X.c or Sp.ambient_dim != X.cprime:
            return False
        ok = (S.image(X.A) <= S and S.image(X.B) <= S and Sp.image(X.Aprime) <= Sp
              and Sp.image(X.Bprime) <= Sp and Sp.image(X.F) <= S)
        if self.includes_W:
            return ok and Subspace.span(X.I) <= S
        return ok and (X.J @ S.basis).is_zero()

    def is_zero(self) -> bool:
        return not self.includes_W and self.S.is_zero() and self.Sprime.is_zero()

    def is_full(self) -> bool:
        return self.includes_W and self.S.is_full() and self.Sprime.is_full()

    def to_dict(self, p: "StabilityParam | None" = None) -> dict:
        out = {"includes_W": self.includes_W, "dimS": self.S.dim, "dimSprime": self.Sprime.dim}
        if p is not None:
            out["slope"] = format_rational(slope_value(self, p))
        return out


def subrep_closure(X: EnhancedRep, includes_W: bool, seedV: Subspace, seedVprime: Subspace) -> SubrepWitness | None:
    """Smallest subrepresentation containing the seeds, or None if it would need W but may not."""
    if seedV.ambient_dim != X.c or seedVprime.ambient_dim != X.cprime:
        raise ValueError("seeds live in the wrong ambient spaces")
    Sprime = krylov_closure(X.Aprime, X.Bprime, seedVprime)
    generators = sum_spaces(seedV, Sprime.image(X.F))
    if includes_W:
        generators = sum_spaces(generators, Subspace.span(X.I))
    S = krylov_closure(X.A, X.B, generators)
    if not includes_W and not (X.J @ S.basis).is_zero():
        return None
    return SubrepWitness(includes_W, S, Sprime)


def slope_value(w: SubrepWitness, p: StabilityParam) -> Fraction:
    value = p.theta * w.S.dim + p.theta_prime * w.Sprime.dim
    if w.includes_W:
        value += p.theta_inf * p.dims.r
    return value


def destabilizing_witness(X: EnhancedRep, p: StabilityParam) -> SubrepWitness | None:
    """A subrepresentation whose slope is >= 0 at ``p``, built as in the chamber argument.

    Tries (0, 0, ker F) and (W, S, F^-1(S)) with S the closure of im(I).
    Returns None if neither destabilizes.
    """
    c = X.c
    kerF = X.F.kernel()
    if not kerF.is_zero():
        w = subrep_closure(X, False, Subspace.zero(c), kerF)
        if w is not None and slope_value(w, p) >= 0:
            return w
    S = krylov_closure(X.A, X.B, Subspace.span(X.I))
    if not S.is_full():
        w = subrep_closure(X, True, S, preimage(X.F, S))
        if w is not None and not w.is_full() and slope_value(w, p) >= 0:
            return w
    return None


# ---------------------------------------------------------------------------
# wall witnesses


def lower_shift(n: int) -> RatMatrix:
    """e_i -> e_{i+1}, e_n -> 0."""
    return RatMatrix(n, n, [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)])


def _first_unit(rows: int, cols: int) -> RatMatrix:
    if rows == 0 or cols == 0:
        return RatMatrix.zeros(rows, cols)
    return RatMatrix.unit(rows, cols, 0, 0)


def wall_witness_minus(dims: DimVector) -> EnhancedRep:
    r, c, cp = dims.astuple()
    if cp < 1:
        raise ValueError("wall witnesses need c' >= 1")
    Abar = lower_shift(c)
    zero = RatMatrix.zeros
    return EnhancedRep(dims, A=Abar, B=Abar, I=_first_unit(c, r), J=zero(r, c),
                       Aprime=zero(cp, cp), Bprime=zero(cp, cp), F=zero(c, cp))


def wall_witness_plus(dims: DimVector) -> EnhancedRep:
    r, c, cp = dims.astuple()
    if not 1 <= cp <= c:
        raise ValueError(f"wall witness X+ needs 1 <= c' <= c, got c'={cp}, c={c}")
    Abar = lower_shift(c)
    Aprime = lower_shift(cp)
    Fbar = RatMatrix.zeros(c - cp, cp).vstack(RatMatrix.identity(cp))
    return EnhancedRep(dims, A=Abar, B=Abar, I=_first_unit(c, r), J=RatMatrix.zeros(r, c),
                       Aprime=Aprime, Bprime=Aprime, F=Fbar)


# representative parameters on the two walls
def theta_minus(dims: DimVector) -> StabilityParam:
    return make_param(-1, 0, dims)


def theta_plus(dims: DimVector) -> StabilityParam:
    return make_param(-1, 1, dims)


@dataclass
class WallReport:
    which: str
    dims: DimVector
    residuals_zero: bool
    closure_dim: int
    F_injective: bool | None
    destabilizer: SubrepWitness | None
    param: StabilityParam
    slope: Fraction | None
    destabilizer_is_subrep: bool
    destabilizer_proper_nonzero: bool

    @property
    def semistable(self) -> bool:
        ok = self.residuals_zero and self.closure_dim == self.dims.c
        if self.which == "plus":
            ok = ok and bool(self.F_injective)
        return ok

    @property
    def strict(self) -> bool:
        return (self.destabilizer is not None and self.destabilizer_is_subrep
                and self.destabilizer_proper_nonzero and self.slope == 0)

    @property
    def passed(self) -> bool:
        return self.semistable and self.strict

    @property
    def verdict(self) -> str:
        if self.passed:
            return "strictly-semistable"
        if self.semistable:
            return "semistable-no-destabilizer"
        return "failed"

    def to_dict(self) -> dict:
        evidence = {"residuals_zero": self.residuals_zero,
                    "closure_of_im_I_dim": self.closure_dim, "c": self.dims.c}
        if self.which == "plus":
            evidence["F_injective"] = self.F_injective
        destab = None
        if self.destabilizer is not None:
            destab = {"includes_W": self.destabilizer.includes_W,
                      "dimS": self.destabilizer.S.dim,
                      "dimSprime": self.destabilizer.Sprime.dim,
                      "S_basis": [[format_rational(x) for x in v] for v in self.destabilizer.S.vectors()],
                      "slope": format_rational(self.slope) if self.slope is not None else None}
        return {"which": self.which, "dims": self.dims.to_dict(),
                "theta": [format_rational(self.param.theta), format_rational(self.param.theta_prime),
                          format_rational(self.param.theta_inf)],
                "semistable_evidence": evidence, "destabilizer": destab, "verdict": self.verdict}


def verify_wall_witness(which: str, dims: DimVector) -> WallReport:
    """Certify that X- (on rho-) or X+ (on rho+) is strictly semistable."""
    if which == "minus":
        X, p = wall_witness_minus(dims), theta_minus(dims)
    elif which == "plus":
        X, p = wall_witness_plus(dims), theta_plus(dims)
    else:
        raise ValueError("which must be 'minus' or 'plus'")
    closure = krylov_closure(X.A, X.B, Subspace.span(X.I))
    F_inj = X.F.rank() == X.cprime if which == "plus" else None
    # (0, closure of F(V'), V'): for X- this is (0, 0, V')
    w = subrep_closure(X, False, Subspace.zero(X.c), Subspace.full(X.cprime))
    slope = slope_value(w, p) if w is not None else None
    return WallReport(
        which=which, dims=dims, residuals_zero=relation_residuals(X).is_zero(),
        closure_dim=closure.dim, F_injective=F_inj, destabilizer=w, param=p, slope=slope,
        destabilizer_is_subrep=w is not None and w.is_subrepresentation_of(X),
        destabilizer_proper_nonzero=w is not None and not w.is_zero() and not w.is_full(),
    )
