"""The acceptance battery: one function per numbered check, each returning a CheckResult."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import (VandermondeParams, assemble_lift, lift_solve, quotient_adhm, random_adhm,
                            random_commuting_pair, random_lift, random_representations, sample_stable,
                            vandermonde_rep)
from .deformation import (build_CX, build_rho, check_les_consistency, check_perfect_obstruction,
                          check_rho1_surjective_on_cocycles, cohomology, cx_degree_dims, expected_dimension)
from .exactmat import Subspace
from .oracle import FpMatrix, krylov_is_stable, oracle_is_stable
from .quiver import DimVector, relation_residuals
from .stability import (destabilizing_witness, is_adhm_stable, is_delta_stable, is_stable_in_chamber,
                        make_param, slope_value, verify_wall_witness, wall_witness_plus)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class CheckResult:
    criterion: int
    name: str
    status: str
    details: dict = field(default_factory=dict)
    timing_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {"criterion": self.criterion, "name": self.name, "status": self.status,
                "details": self.details, "timing_ms": self.timing_ms}


@dataclass
class SuiteConfig:
    seed: int = 0
    max_r: int = 4
    max_c: int = 6
    deep: bool = False
    max_attempts: int = 1000


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _dims_grid(max_r: int, max_c: int, min_cp: int = 1):
    return [DimVector(r, c, cp) for r in range(1, max_r + 1) for c in range(1, max_c + 1)
            for cp in range(min_cp, c + 1)]


def _sampled_stable(cfg: SuiteConfig) -> list:
    """A small, seed-deterministic pool of verified Delta-stable representations."""
    pool = []
    for i, dims in enumerate(_dims_grid(min(cfg.max_r, 2), min(cfg.max_c, 4))):
        pool.extend(sample_stable(dims, cfg.seed + i, attempts=6, count=3))
    return pool


def check_complex_axioms(cfg: SuiteConfig) -> CheckResult:
    rng = random.Random(cfg.seed)
    grid = _dims_grid(min(cfg.max_r, 3), min(cfg.max_c, 5))
    # always include the largest admissible type
    grid.sort(key=lambda d: d.astuple())
    reps = []
    tries = 0
    while len(reps) < 100 and tries < 1000:
        dims = grid[-1] if tries == 0 else rng.choice(grid)
        tries += 1
        reps.extend(random_representations(dims, rng.randrange(1 << 30), 1))
    failures = []
    for X in reps:
        if not relation_residuals(X).is_zero():
            failures.append({"dims": X.dims.astuple(), "reason": "nonzero residual"})
            continue
        C = build_CX(X, verify=False)
        if C.square_zero_failures():
            failures.append({"dims": X.dims.astuple(), "reason": f"d^2 != 0 at {C.square_zero_failures()}"})
        if not build_rho(X, verify=False).is_chain_map():
            failures.append({"dims": X.dims.astuple(), "reason": "rho is not a chain map"})
    ok = len(reps) == 100 and not failures
    return CheckResult(1, "complex axioms", _status(ok),
                       {"representations": len(reps), "failures": failures[:5]})


def check_expected_dimension(cfg: SuiteConfig) -> CheckResult:
    bad = []
    grid = _dims_grid(min(cfg.max_r, 4), min(cfg.max_c, 5))
    for dims in grid:
        r, c, cp = dims.astuple()
        target = r * (2 * c - cp) if cp > 1 else 2 * r * c - r + 1
        degs = cx_degree_dims(dims)
        from_formula = -sum((-1) ** i * n for i, n in enumerate(degs))
        built = build_CX(wall_witness_plus(dims), verify=False)
        from_complex = -built.euler()
        if not (from_formula == from_complex == target == expected_dimension(dims)):
            bad.append({"dims": dims.astuple(), "target": target, "formula": from_formula, "built": from_complex})
    return CheckResult(2, "expected dimension", _status(not bad), {"types": len(grid), "mismatches": bad})


def check_perfect_obstruction_theory(cfg: SuiteConfig, pool: list) -> CheckResult:
    bad = []
    for X in pool:
        rep = check_perfect_obstruction(X)
        if not rep.perfect:
            bad.append({"dims": X.dims.astuple(), "h": list(rep.h)})
    ok = bool(pool) and not bad
    return CheckResult(3, "perfect obstruction theory", _status(ok), {"sampled": len(pool), "failures": bad})


def _vandermonde_grid(cfg: SuiteConfig):
    for r in range(1, min(cfg.max_r, 3) + 1):
        for c in range(1, min(cfg.max_c, 6) + 1):
            yield r, c, vandermonde_rep(VandermondeParams(r, c, tuple(range(1, c + 1))))


def check_vandermonde(cfg: SuiteConfig) -> CheckResult:
    rows, bad = [], []
    for r, c, X in _vandermonde_grid(cfg):
        h = cohomology(build_CX(X)).h
        target = (0, 2 * r * c - r + 1, 0, 0)
        ok = is_delta_stable(X) and tuple(h) == target
        rows.append({"r": r, "c": c, "h": list(h)})
        if not ok:
            bad.append({"r": r, "c": c, "h": list(h), "expected": list(target)})
    return CheckResult(4, "unobstructed Vandermonde family", _status(not bad), {"instances": rows, "failures": bad})


def check_rho1_surjective(cfg: SuiteConfig) -> CheckResult:
    bad = [{"r": r, "c": c} for r, c, X in _vandermonde_grid(cfg) if not check_rho1_surjective_on_cocycles(X)]
    return CheckResult(5, "rho1 surjective on cocycles", _status(not bad), {"failures": bad})


def check_walls(cfg: SuiteConfig) -> CheckResult:
    bad, count = [], 0
    for dims in _dims_grid(min(cfg.max_r, 2), min(cfg.max_c, 4)):
        r, c, cp = dims.astuple()
        for which in ("minus", "plus"):
            count += 1
            rep = verify_wall_witness(which, dims)
            want = Subspace.zero(c) if which == "minus" else Subspace.coordinate(c, range(c - cp, c))
            shape_ok = (rep.destabilizer is not None and not rep.destabilizer.includes_W
                        and rep.destabilizer.S == want and rep.destabilizer.Sprime.is_full())
            if not (rep.passed and shape_ok):
                bad.append({"which": which, "dims": dims.astuple(), "verdict": rep.verdict})
    return CheckResult(6, "wall witnesses", _status(not bad), {"witnesses": count, "failures": bad})


def check_quotient(cfg: SuiteConfig, pool: list) -> CheckResult:
    bad = []
    for X in pool:
        Q = quotient_adhm(X)
        if not (Q.adhm_residual().is_zero() and is_adhm_stable(Q)):
            bad.append({"dims": X.dims.astuple(), "reason": "quotient not a stable ADHM datum"})
    rng = random.Random(cfg.seed + 7)
    lifts = 0
    for dims in _dims_grid(min(cfg.max_r, 2), min(cfg.max_c, 4)):
        base = random_adhm(rng, dims.r, dims.c - dims.cprime, stable=True)
        if base is None:
            continue
        Ap, Bp = random_commuting_pair(rng, dims.cprime)
        Y = assemble_lift(lift_solve(base, Ap, Bp).sample(rng))
        lifts += 1
        if quotient_adhm(Y) != base:
            bad.append({"dims": dims.astuple(), "reason": "quotient of lift differs from base"})
    ok = bool(pool) and not bad
    return CheckResult(7, "quotient fibration", _status(ok),
                       {"sampled": len(pool), "lifts": lifts, "failures": bad})


def check_lifting(cfg: SuiteConfig) -> CheckResult:
    rng = random.Random(cfg.seed + 8)
    grid = _dims_grid(min(cfg.max_r, 2), min(cfg.max_c, 4))
    grid = [d for d in grid if d.cprime <= 2]
    solved, bad = 0, []
    while solved < 50:
        dims = rng.choice(grid)
        base = random_adhm(rng, dims.r, dims.c - dims.cprime, stable=rng.random() < 0.7)
        if base is None:
            continue
        Ap, Bp = random_commuting_pair(rng, dims.cprime)
        Y = assemble_lift(lift_solve(base, Ap, Bp).sample(rng))
        solved += 1
        if not relation_residuals(Y).is_zero():
            bad.append({"dims": dims.astuple()})
    found = {}
    for dims in (DimVector(1, 3, 1), DimVector(1, 3, 2)):
        srng = random.Random(cfg.seed + 80 + dims.cprime)
        hit = None
        for attempt in range(cfg.max_attempts):
            X = random_lift(srng, dims, gauge=False)
            if X is not None and is_delta_stable(X):
                hit = attempt + 1
                break
        found[str(dims.astuple())] = hit
    if bad:
        status = FAIL
    elif all(v is not None for v in found.values()):
        status = PASS
    else:
        status = INCONCLUSIVE
    return CheckResult(8, "lifting system", status,
                       {"solutions": solved, "residual_failures": bad, "stable_lift_found_after": found})


def check_les(cfg: SuiteConfig, pool: list) -> CheckResult:
    bad = []
    for X in pool:
        rep = check_les_consistency(X, deep=cfg.deep)
        if not rep.passed:
            bad.append({"dims": X.dims.astuple(), "alternating_sum": rep.alternating_sum})
    ok = bool(pool) and not bad
    return CheckResult(9, "long exact sequence", _status(ok),
                       {"sampled": len(pool), "deep": cfg.deep, "failures": bad})


def _random_fp(rng: random.Random, p: int, rows: int, cols: int, density: float) -> FpMatrix:
    return FpMatrix.from_rows(p, [[rng.randrange(p) if rng.random() < density else 0 for _ in range(cols)]
                                  for _ in range(rows)], cols)


def check_oracle(cfg: SuiteConfig) -> CheckResult:
    rng = random.Random(cfg.seed + 10)
    bad, stable = [], 0
    for k in range(200):
        p = (2, 3)[k % 2]
        n, r = rng.randint(1, 3), rng.randint(1, 2)
        dens = rng.choice([0.3, 0.6])
        A, B, I = _random_fp(rng, p, n, n, dens), _random_fp(rng, p, n, n, dens), _random_fp(rng, p, n, r, dens)
        got, want = krylov_is_stable(A, B, I), oracle_is_stable(A, B, I)
        stable += want
        if got != want:
            bad.append({"p": p, "A": A.entries, "B": B.entries, "I": I.entries})
    return CheckResult(10, "oracle equivalence", _status(not bad),
                       {"instances": 200, "stable": stable, "disagreements": bad[:5]})


def random_delta_param(rng: random.Random, dims: DimVector):
    theta_prime = Fraction(rng.randint(1, 20), rng.randint(1, 7))
    theta = -theta_prime - Fraction(rng.randint(1, 20), rng.randint(1, 7))
    return make_param(theta, theta_prime, dims)


def check_chamber_constancy(cfg: SuiteConfig) -> CheckResult:
    rng = random.Random(cfg.seed + 11)
    grid = _dims_grid(min(cfg.max_r, 2), min(cfg.max_c, 4))
    reps = []
    while len(reps) < 20:
        reps.extend(random_representations(rng.choice(grid), rng.randrange(1 << 30), 1))
    bad, stable = [], 0
    for X in reps:
        verdicts = set()
        for _ in range(10):
            p = random_delta_param(rng, X.dims)
            v = is_stable_in_chamber(X, p)
            verdicts.add(v)
            w = destabilizing_witness(X, p)
            consistent = (w is None) if v else (w is not None and w.is_subrepresentation_of(X)
                                                and slope_value(w, p) >= 0)
            if not consistent:
                bad.append({"dims": X.dims.astuple(), "reason": "witness disagrees with verdict"})
        if len(verdicts) != 1:
            bad.append({"dims": X.dims.astuple(), "reason": "verdict varies inside the chamber"})
        stable += verdicts == {True}
    return CheckResult(11, "chamber constancy", _status(not bad),
                       {"representations": len(reps), "stable": stable, "failures": bad[:5]})


def run_suite(cfg: SuiteConfig | None = None, only: set[int] | None = None) -> list[CheckResult]:
    cfg = cfg or SuiteConfig()
    pool: list | None = None

    def need_pool():
        nonlocal pool
        if pool is None:
            pool = _sampled_stable(cfg)
        return pool

    plan = {
        1: lambda: check_complex_axioms(cfg),
        2: lambda: check_expected_dimension(cfg),
        3: lambda: check_perfect_obstruction_theory(cfg, need_pool()),
        4: lambda: check_vandermonde(cfg),
        5: lambda: check_rho1_surjective(cfg),
        6: lambda: check_walls(cfg),
        7: lambda: check_quotient(cfg, need_pool()),
        8: lambda: check_lifting(cfg),
        9: lambda: check_les(cfg, need_pool()),
        10: lambda: check_oracle(cfg),
        11: lambda: check_chamber_constancy(cfg),
    }
    results = []
    for k, fn in plan.items():
        if only is not None and k not in only:
            continue
        t0 = time.perf_counter()
        res = fn()
        res.timing_ms = int((time.perf_counter() - t0) * 1000)
        results.append(res)
    return results


def overall_status(results: list[CheckResult]) -> str:
    if any(r.status == FAIL for r in results):
        return FAIL
    if any(r.status == INCONCLUSIVE for r in results):
        return "partial"
    return PASS
