"""Explicit families: quotient to ADHM data, block-triangular lifts, Vandermonde
representations, and seed-deterministic samplers built from them."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Sequence

from . import __version__
from .deformation import CohomologyReport, build_CX, cohomology
from .exactmat import InputError, RatMatrix, Subspace, left_action, right_action, solve_affine
from .quiver import (ADHMRep, DimVector, EnhancedRep, NotARepresentation, gauge_act,
                     relation_residuals)
from .stability import is_adhm_stable, is_delta_stable, wall_witness_plus

GENERATOR_VERSION = f"enhadhm-sampler/{__version__}"


class QuotientError(ValueError):
    pass


class VandermondeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# quotient V'' = V / im F


def complement_indices(F: RatMatrix) -> list[int]:
    """Greedy choice of coordinate vectors completing the columns of F to a basis."""
    chosen: list[int] = []
    current = F
    rank = F.rank()
    for i in range(F.rows):
        trial = current.hstack(RatMatrix.unit(F.rows, 1, i, 0))
        if trial.rank() > rank:
            chosen.append(i)
            current, rank = trial, rank + 1
    return chosen


def quotient_adhm(X: EnhancedRep) -> ADHMRep:
    """The ADHM datum induced on V'' = V / im(F)."""
    if not relation_residuals(X).is_zero():
        raise NotARepresentation("not a representation")
    if X.F.rank() != X.cprime:
        raise QuotientError("quotient undefined: F is not injective")
    c, cp, r = X.c, X.cprime, X.r
    comp = complement_indices(X.F)
    E = RatMatrix.from_columns([[1 if k == i else 0 for k in range(c)] for i in comp], c) \
        if comp else RatMatrix.zeros(c, 0)
    Qinv = X.F.hstack(E).inverse()
    lower = list(range(cp, c))
    # coordinates along the complement of (A e, B e, I w) for e in the complement
    A2 = (Qinv @ X.A @ E).submatrix(lower, range(len(comp)))
    B2 = (Qinv @ X.B @ E).submatrix(lower, range(len(comp)))
    I2 = (Qinv @ X.I).submatrix(lower, range(r))
    J2 = X.J @ E
    return ADHMRep(r, c - cp, A2, B2, I2, J2)


# ---------------------------------------------------------------------------
# lifts


@dataclass(frozen=True)
class LiftAnsatz:
    """Block data: A = (A' At; 0 A''), B = (B' Bt; 0 B''), I = (It; I''), J = (0 J''), F = (1; 0)."""

    base: ADHMRep
    Aprime: RatMatrix
    Bprime: RatMatrix
    Atilde: RatMatrix
    Btilde: RatMatrix
    Itilde: RatMatrix

    def __post_init__(self):
        cp, n, r = self.Aprime.rows, self.base.c, self.base.r
        shapes = {"Aprime": (cp, cp), "Bprime": (cp, cp), "Atilde": (cp, n), "Btilde": (cp, n), "Itilde": (cp, r)}
        for name, shape in shapes.items():
            if getattr(self, name).shape != shape:
                raise ValueError(f"{name} has shape {getattr(self, name).shape}, expected {shape}")
        if not self.Aprime.commutator(self.Bprime).is_zero():
            raise ValueError("A' and B' do not commute")

    @property
    def cprime(self) -> int:
        return self.Aprime.rows

    def system_residual(self) -> RatMatrix:
        """A'Bt + At B'' - B'At - Bt A'' + It J''."""
        b = self.base
        return (self.Aprime @ self.Btilde + self.Atilde @ b.B - self.Bprime @ self.Atilde
                - self.Btilde @ b.A + self.Itilde @ b.J)


def assemble_lift(ansatz: LiftAnsatz) -> EnhancedRep:
    b = ansatz.base
    cp, n, r = ansatz.cprime, b.c, b.r
    Z = RatMatrix.zeros
    A = RatMatrix.block([[ansatz.Aprime, ansatz.Atilde], [Z(n, cp), b.A]])
    B = RatMatrix.block([[ansatz.Bprime, ansatz.Btilde], [Z(n, cp), b.B]])
    I = ansatz.Itilde.vstack(b.I)
    J = Z(r, cp).hstack(b.J)
    F = RatMatrix.identity(cp).vstack(Z(n, cp))
    return EnhancedRep(DimVector(r, cp + n, cp), A, B, I, J, ansatz.Aprime, ansatz.Bprime, F)


def lift_system(base: ADHMRep, Aprime: RatMatrix, Bprime: RatMatrix) -> RatMatrix:
    """Matrix of (At, Bt, It) -> A'Bt + At B'' - B'At - Bt A'' + It J''.

    Unknowns are vec(At), vec(Bt), vec(It) stacked (column-major each).
    """
    cp, n = Aprime.rows, base.c
    blk_A = right_action(base.B, cp) - left_action(Bprime, n)
    blk_B = left_action(Aprime, n) - right_action(base.A, cp)
    blk_I = right_action(base.J, cp)
    return blk_A.hstack(blk_B, blk_I)


@dataclass(frozen=True)
class LiftSolution:
    particular: LiftAnsatz
    kernel: Subspace
    unknowns: int
    equations: int

    @property
    def dimension(self) -> int:
        return self.kernel.dim

    def ansatz(self, vector: Sequence) -> LiftAnsatz:
        """The ansatz particular + vector, with ``vector`` in the unknown coordinates."""
        p = self.particular
        cp, n, r = p.cprime, p.base.c, p.base.r
        v = [Fraction(x) for x in vector]
        if len(v) != self.unknowns:
            raise ValueError("wrong number of coordinates")
        At = p.Atilde + RatMatrix.unvec(v[:cp * n], cp, n)
        Bt = p.Btilde + RatMatrix.unvec(v[cp * n:2 * cp * n], cp, n)
        It = p.Itilde + RatMatrix.unvec(v[2 * cp * n:], cp, r)
        return LiftAnsatz(p.base, p.Aprime, p.Bprime, At, Bt, It)

    def sample(self, rng: random.Random, bound: int = 2) -> LiftAnsatz:
        """Particular solution plus a random integer combination of kernel vectors."""
        v = [Fraction(0)] * self.unknowns
        for k in self.kernel.vectors():
            coeff = rng.randint(-bound, bound)
            if coeff:
                v = [x + coeff * y for x, y in zip(v, k)]
        return self.ansatz(v)


def lift_solve(base: ADHMRep, Aprime: RatMatrix, Bprime: RatMatrix) -> LiftSolution:
    """Solve the linear system for (At, Bt, It) over a fixed base and commuting (A', B')."""
    if not Aprime.commutator(Bprime).is_zero():
        raise ValueError("A' and B' do not commute")
    if not base.adhm_residual().is_zero():
        raise NotARepresentation("base is not an ADHM datum")
    L = lift_system(base, Aprime, Bprime)
    solved = solve_affine(L, [0] * L.rows)
    assert solved is not None  # homogeneous system
    x0, K = solved
    cp, n, r = Aprime.rows, base.c, base.r
    zero = LiftAnsatz(base, Aprime, Bprime, RatMatrix.zeros(cp, n), RatMatrix.zeros(cp, n), RatMatrix.zeros(cp, r))
    sol = LiftSolution(zero, K, L.cols, L.rows)
    return LiftSolution(sol.ansatz(x0), K, L.cols, L.rows)


# ---------------------------------------------------------------------------
# Vandermonde family


@dataclass(frozen=True)
class VandermondeParams:
    r: int
    c: int
    lambdas: tuple[Fraction, ...]

    def __post_init__(self):
        lam = tuple(Fraction(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", lam)
        if self.r < 1 or self.c < 1 or len(lam) != self.c:
            raise VandermondeError("Vandermonde hypothesis violated: need r, c >= 1 and c eigenvalues")
        if any(x == 0 for x in lam) or len(set(lam)) != len(lam):
            raise VandermondeError("Vandermonde hypothesis violated: eigenvalues must be distinct and nonzero")


def vandermonde_rep(p: VandermondeParams) -> EnhancedRep:
    r, c = p.r, p.c
    D = RatMatrix.diagonal(p.lambdas)
    I = RatMatrix(c, r, [[1] + [0] * (r - 1) for _ in range(c)])
    F = RatMatrix.column([1] + [0] * (c - 1))
    lam1 = RatMatrix(1, 1, [[p.lambdas[0]]])
    return EnhancedRep(DimVector(r, c, 1), A=D, B=D, I=I, J=RatMatrix.zeros(r, c), Aprime=lam1, Bprime=lam1, F=F)


# ---------------------------------------------------------------------------
# random generators (small integer entries)


def _rand_matrix(rng: random.Random, rows: int, cols: int, bound: int = 5, density: float = 1.0) -> RatMatrix:
    return RatMatrix(rows, cols, [[rng.randint(-bound, bound) if rng.random() < density else 0
                                   for _ in range(cols)] for _ in range(rows)])


def random_unimodular(rng: random.Random, n: int) -> RatMatrix:
    """Product of unit lower and unit upper triangular matrices with entries in {-1, 0, 1}."""
    L = RatMatrix(n, n, [[1 if i == j else (rng.randint(-1, 1) if i > j else 0) for j in range(n)] for i in range(n)])
    U = RatMatrix(n, n, [[1 if i == j else (rng.randint(-1, 1) if i < j else 0) for j in range(n)] for i in range(n)])
    return L @ U


def random_commuting_pair(rng: random.Random, n: int) -> tuple[RatMatrix, RatMatrix]:
    """Two commuting n x n matrices: zero, scalars, diagonal, or polynomials in one matrix."""
    kind = rng.choice(["poly", "poly", "diagonal", "scalar", "nilpotent", "zero"])
    if kind == "zero" or n == 0:
        return RatMatrix.zeros(n, n), RatMatrix.zeros(n, n)
    if kind == "scalar":
        return RatMatrix.scalar(n, rng.randint(-3, 3)), RatMatrix.scalar(n, rng.randint(-3, 3))
    if kind == "diagonal":
        return (RatMatrix.diagonal([rng.randint(-4, 4) for _ in range(n)]),
                RatMatrix.diagonal([rng.randint(-4, 4) for _ in range(n)]))
    if kind == "nilpotent":
        N = RatMatrix(n, n, [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)])
        M = N
    else:
        M = _rand_matrix(rng, n, n, bound=2)

    def poly(coeffs):
        out, power = RatMatrix.zeros(n, n), RatMatrix.identity(n)
        for a in coeffs:
            out = out + power * a
            power = power @ M
        return out

    deg = min(n, 3)
    return poly([rng.randint(-2, 2) for _ in range(deg)]), poly([rng.randint(-2, 2) for _ in range(deg)])


def random_adhm(rng: random.Random, r: int, n: int, stable: bool = True, tries: int = 50) -> ADHMRep | None:
    """ADHM datum with commuting (A, B) and IJ = 0, optionally required to be stable."""
    for _ in range(tries):
        A, B = random_commuting_pair(rng, n)
        I = _rand_matrix(rng, n, r, bound=3, density=rng.choice([0.5, 1.0]))
        J = RatMatrix.zeros(r, n)
        if n and rng.random() < 0.4:
            K = I.kernel()
            if K.dim:
                J = K.basis @ _rand_matrix(rng, K.dim, n, bound=2)
        X = ADHMRep(r, n, A, B, I, J)
        if not stable or is_adhm_stable(X):
            return X
    return None


def random_lift(rng: random.Random, dims: DimVector, stable_base: bool = True, gauge: bool = True) -> EnhancedRep | None:
    """A representation assembled from a random lift, then moved by a random gauge transformation."""
    r, c, cp = dims.astuple()
    if cp < 1 or cp > c:
        return None
    base = random_adhm(rng, r, c - cp, stable=stable_base)
    if base is None:
        return None
    Ap, Bp = random_commuting_pair(rng, cp)
    sol = lift_solve(base, Ap, Bp)
    X = assemble_lift(sol.sample(rng))
    if gauge:
        X = gauge_act(X, random_unimodular(rng, c), random_unimodular(rng, cp))
    return X


def random_representations(dims: DimVector, seed: int, count: int) -> list[EnhancedRep]:
    """Relation-satisfying representations (stable or not), deterministic in ``seed``."""
    rng = random.Random(seed)
    out = []
    guard = 0
    while len(out) < count and guard < 20 * count + 20:
        guard += 1
        X = random_lift(rng, dims, stable_base=rng.random() < 0.7)
        if X is not None:
            out.append(X)
    return out


def sample_stable(dims: DimVector, seed: int, attempts: int, count: int | None = None) -> list[EnhancedRep]:
    """Delta-stable representations of the given type, each verified before it is returned."""
    r, c, cp = dims.astuple()
    if cp < 1:
        raise ValueError("sampling needs c' >= 1")
    rng = random.Random(seed)
    out: list[EnhancedRep] = []

    def keep(X: EnhancedRep | None) -> bool:
        if X is not None and relation_residuals(X).is_zero() and is_delta_stable(X):
            out.append(X)
        return count is not None and len(out) >= count

    if cp == 1 and keep(vandermonde_rep(VandermondeParams(r, c, tuple(range(1, c + 1))))):
        return out
    if cp <= c and keep(wall_witness_plus(dims)):
        return out
    for _ in range(attempts):
        if keep(random_lift(rng, dims)):
            break
    return out


def search_obstructed(dims: DimVector, seed: int, attempts: int) -> tuple[EnhancedRep, CohomologyReport] | None:
    """Random search for a Delta-stable X with h2(C(X)) > 0."""
    rng = random.Random(seed)
    for _ in range(attempts):
        X = random_lift(rng, dims)
        if X is None or not is_delta_stable(X):
            continue
        rep = cohomology(build_CX(X))
        if rep.h[2] > 0:
            return X, rep
    return None


def search_h1_jump(dims: DimVector, seed: int, attempts: int
                   ) -> tuple[tuple[EnhancedRep, CohomologyReport], tuple[EnhancedRep, CohomologyReport]] | None:
    """Two Delta-stable representations of the same type with different h1.

    A jump of the tangent dimension along the moduli space is a direct witness
    of singular points, which h2 > 0 alone is not once c' >= 2.
    """
    rng = random.Random(seed)
    seen: dict[int, tuple[EnhancedRep, CohomologyReport]] = {}
    for _ in range(attempts):
        X = random_lift(rng, dims)
        if X is None or not is_delta_stable(X):
            continue
        rep = cohomology(build_CX(X))
        seen.setdefault(rep.h[1], (X, rep))
        if len(seen) > 1:
            lo, hi = sorted(seen)[:2]
            return seen[lo], seen[hi]
    return None


# ---------------------------------------------------------------------------
# JSON-lines corpora


def write_corpus(path: str | Path, reps: Sequence[EnhancedRep], dims: DimVector, seed: int) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        header = {"kind": "header", "dims": dims.to_dict(), "seed": seed,
                  "generator_version": GENERATOR_VERSION, "count": len(reps)}
        fh.write(json.dumps(header) + "\n")
        for X in reps:
            fh.write(X.to_json() + "\n")


def read_corpus(path: str | Path) -> tuple[dict, list[EnhancedRep]]:
    lines = [ln for ln in Path(path).read_text(encoding="utf-8").splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty corpus file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid corpus header: {exc}") from exc
    if not isinstance(header, dict) or header.get("kind") != "header":
        raise InputError("corpus must start with a header line")
    return header, [EnhancedRep.from_json(ln) for ln in lines[1:]]


def iter_corpus(path: str | Path) -> Iterator[EnhancedRep]:
    yield from read_corpus(path)[1]
