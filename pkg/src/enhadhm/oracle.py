"""Brute-force checks over tiny finite fields.

Subspaces of F_p^n are enumerated exhaustively and stored as explicit sets of
vectors, so invariance and containment are plain membership tests with no
elimination involved.  This is what the closure-based stability decision is
validated against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .exactmat import RatMatrix
from .stability import closure_basis

MAX_DIM = 4
MODULI = (2, 3)


class OracleBudgetExceeded(ValueError):
    pass


def _check_budget(n: int, p: int) -> None:
    if n > MAX_DIM or p not in MODULI:
        raise OracleBudgetExceeded(f"oracle budget exceeded (n={n}, p={p}; allowed n <= {MAX_DIM}, p in {MODULI})")


@dataclass(frozen=True)
class FpMatrix:
    modulus: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        p = self.modulus
        object.__setattr__(self, "entries", tuple(tuple(x % p for x in row) for row in self.entries))
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match shape")

    @classmethod
    def from_rows(cls, p: int, rows, cols: int | None = None) -> "FpMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(p, len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def from_rational(cls, M: RatMatrix, p: int) -> "FpMatrix":
        def red(x):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return x.numerator * pow(x.denominator, -1, p)
        return cls(p, M.rows, M.cols, tuple(tuple(red(x) for x in M.row(i)) for i in range(M.rows)))

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        p = self.modulus
        data = tuple(tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols)) % p
                           for j in range(other.cols)) for i in range(self.rows))
        return FpMatrix(p, self.rows, other.cols, data)

    def apply(self, v: tuple[int, ...]) -> tuple[int, ...]:
        p = self.modulus
        return tuple(sum(a * x for a, x in zip(row, v)) % p for row in self.entries)

    def hstack(self, *others: "FpMatrix") -> "FpMatrix":
        mats = (self,) + others
        data = tuple(tuple(x for m in mats for x in m.entries[i]) for i in range(self.rows))
        return FpMatrix(self.modulus, self.rows, sum(m.cols for m in mats), data)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.modulus, self.cols, self.rows,
                        tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)]

    def column_basis(self) -> "FpMatrix":
        rows = _rref_mod_p([list(c) for c in self.columns()], self.rows, self.modulus)
        return FpMatrix(self.modulus, self.rows, len(rows),
                        tuple(tuple(r[i] for r in rows) for i in range(self.rows)))

    def rank(self) -> int:
        return self.column_basis().cols


def _rref_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    rows = [[x % p for x in r] for r in rows]
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        inv = pow(rows[top][col], -1, p)
        rows[top] = [x * inv % p for x in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[top])]
        top += 1
    return rows[:top]


@dataclass(frozen=True)
class FpSubspace:
    modulus: int
    n: int
    basis: tuple[tuple[int, ...], ...]
    vectors: frozenset

    @property
    def dim(self) -> int:
        return len(self.basis)


def _span_set(basis, n: int, p: int) -> frozenset:
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        out.add(tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(n)))
    return frozenset(out)


def all_subspaces(n: int, p: int) -> list[FpSubspace]:
    """Every subspace of F_p^n, one per reduced echelon basis."""
    _check_budget(n, p)
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            # free slots: row t, column j > pivots[t] that is not a pivot column
            slots = [(t, j) for t in range(k) for j in range(pivots[t] + 1, n) if j not in pivots]
            for values in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for t, col in enumerate(pivots):
                    rows[t][col] = 1
                for (t, j), v in zip(slots, values):
                    rows[t][j] = v
                basis = tuple(tuple(r) for r in rows)
                out.append(FpSubspace(p, n, basis, _span_set(basis, n, p)))
    return out


def enumerate_invariant_subspaces(A: FpMatrix, B: FpMatrix, contains: FpMatrix) -> list[FpSubspace]:
    """All subspaces invariant under A and B containing the columns of ``contains``."""
    p, n = A.modulus, A.rows
    if A.cols != n or (B.rows, B.cols) != (n, n) or contains.rows != n:
        raise ValueError("incompatible sizes")
    required = contains.columns()
    out = []
    for U in all_subspaces(n, p):
        if not all(v in U.vectors for v in required):
            continue
        if all(A.apply(b) in U.vectors and B.apply(b) in U.vectors for b in U.basis):
            out.append(U)
    return out


def oracle_is_stable(A: FpMatrix, B: FpMatrix, I: FpMatrix) -> bool:
    """Only the full space is (A, B)-invariant and contains im(I)."""
    n = A.rows
    found = enumerate_invariant_subspaces(A, B, I)
    return all(U.dim == n for U in found)


def krylov_is_stable(A: FpMatrix, B: FpMatrix, I: FpMatrix) -> bool:
    """The closure-based decision, run over F_p."""
    return closure_basis((A, B), I).cols == A.rows


def gaussian_binomial_total(n: int, p: int) -> int:
    """Number of subspaces of F_p^n, from the q-binomial coefficients."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total

