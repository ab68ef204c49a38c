"""Exact dense linear algebra over the rationals.

Matrices hold :class:`fractions.Fraction` entries and are immutable.  All
elimination is done on integer-scaled rows (each row multiplied by the lcm
of its denominators) with content reduction after every row operation, which
keeps Python's big integers small without ever leaving exact arithmetic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence


class InputError(ValueError):
    """Malformed external input.  ``code`` is a stable machine-readable tag."""

    code = "input-error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class MalformedRational(InputError):
    code = "malformed-rational"


class ShapeMismatch(InputError):
    code = "shape-mismatch"


class MissingField(InputError):
    code = "missing-field"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (ints are accepted as well)."""
    if isinstance(text, bool):
        raise MalformedRational(f"malformed rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise MalformedRational(f"malformed rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None or (m.group(2) is not None and int(m.group(2)) == 0):
        raise MalformedRational(f"malformed rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    return Fraction(int(m.group(1)), den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


# ---------------------------------------------------------------------------
# elimination core


def _integral_row(row: Sequence[Fraction]) -> list[int]:
    den = reduce(lcm, (x.denominator for x in row), 1)
    return [x.numerator * (den // x.denominator) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _echelon(rows: list[list[int]], ncols: int, reduced: bool) -> tuple[list[list[int]], list[int]]:
    """Row-echelon form of integer rows; returns (nonzero rows, pivot columns).

    The pivot in each column is the candidate entry of smallest bit length.
    With ``reduced`` every pivot column is cleared above the pivot too, so
    the result is a scalar multiple (row by row) of the RREF.
    """
    rows = [r for r in rows if any(r)]
    m = len(rows)
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == m:
            break
        best = -1
        best_len = 0
        for i in range(top, m):
            v = rows[i][col]
            if v:
                bl = abs(v).bit_length()
                if best < 0 or bl < best_len:
                    best, best_len = i, bl
                    if bl == 1:
                        break
        if best < 0:
            continue
        rows[top], rows[best] = rows[best], rows[top]
        prow = rows[top]
        a = prow[col]
        start = 0 if reduced else top + 1
        for i in range(start, m):
            if i == top:
                continue
            row = rows[i]
            b = row[col]
            if not b:
                continue
            g = gcd(a, b)
            pa, pb = a // g, b // g
            rows[i] = _primitive([pa * x - pb * y for x, y in zip(row, prow)])
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def _rref_fraction_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    int_rows = [_integral_row(r) for r in rows]
    red, pivots = _echelon(int_rows, ncols, reduced=True)
    out = []
    for row, p in zip(red, pivots):
        piv = row[p]
        out.append([Fraction(x, piv) for x in row])
    return out, pivots


# ---------------------------------------------------------------------------
# matrices


class RatMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable] = ()):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in data)
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"entries do not match declared shape {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> "RatMatrix":
        # trusted constructor: data is already a tuple of Fraction tuples
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "_data", data)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        z = Fraction(0)
        return cls._raw(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        z, o = Fraction(0), Fraction(1)
        return cls._raw(n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, n: int, value) -> "RatMatrix":
        return cls.identity(n) * value

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        z = Fraction(0)
        vals = [_as_fraction(v) for v in values]
        return cls._raw(n, n, tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "RatMatrix":
        return cls(len(values), 1, [[v] for v in values])

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "RatMatrix":
        data = [[0] * cols for _ in range(rows)]
        data[i][j] = 1
        return cls(rows, cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        columns = [tuple(_as_fraction(x) for x in col) for col in columns]
        if any(len(col) != rows for col in columns):
            raise ValueError("column length mismatch")
        return cls._raw(rows, len(columns), tuple(tuple(col[i] for col in columns) for i in range(rows)))

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat tuple of entries."""
        return tuple(x for row in self._data for x in row)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(x for row in self._data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.rows, self.cols, self._data)))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix._raw(self.rows, self.cols,
                              tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix._raw(self.rows, self.cols,
                              tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix._raw(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self._data))

    def __mul__(self, scalar) -> "RatMatrix":
        if isinstance(scalar, RatMatrix):
            raise TypeError("use @ for matrix products")
        s = _as_fraction(scalar)
        return RatMatrix._raw(self.rows, self.cols, tuple(tuple(x * s for x in r) for r in self._data))

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n = other.cols
        zero = Fraction(0)
        odata = other._data
        out = []
        for row in self._data:
            acc = [zero] * n
            for k, a in enumerate(row):
                if a:
                    orow = odata[k]
                    for j in range(n):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return RatMatrix._raw(self.rows, n, tuple(out))

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        vector = [_as_fraction(v) for v in vector]
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * v for a, v in zip(row, vector) if a and v), Fraction(0)) for row in self._data)

    @property
    def T(self) -> "RatMatrix":
        return self.transpose()

    def transpose(self) -> "RatMatrix":
        return RatMatrix._raw(self.cols, self.rows, tuple(zip(*self._data)) if self.rows else
                              tuple(() for _ in range(self.cols)))

    def hstack(self, *others: "RatMatrix") -> "RatMatrix":
        mats = (self,) + others
        if any(m.rows != self.rows for m in mats):
            raise ValueError("hstack row mismatch")
        cols = sum(m.cols for m in mats)
        data = tuple(tuple(x for m in mats for x in m._data[i]) for i in range(self.rows))
        return RatMatrix._raw(self.rows, cols, data)

    def vstack(self, *others: "RatMatrix") -> "RatMatrix":
        mats = (self,) + others
        if any(m.cols != self.cols for m in mats):
            raise ValueError("vstack column mismatch")
        return RatMatrix._raw(sum(m.rows for m in mats), self.cols, tuple(r for m in mats for r in m._data))

    @staticmethod
    def block(blocks: Sequence[Sequence["RatMatrix"]]) -> "RatMatrix":
        """Assemble a block matrix from a grid of blocks."""
        bands = [band[0].hstack(*band[1:]) for band in blocks]
        return bands[0].vstack(*bands[1:])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix._raw(len(rows), len(cols), tuple(tuple(self._data[i][j] for j in cols) for i in rows))

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        zero_row = (Fraction(0),) * (self.cols * other.cols)
        out = []
        for arow in self._data:
            for brow in other._data:
                if not any(arow):
                    out.append(zero_row)
                    continue
                out.append(tuple(a * b for a in arow for b in brow))
        return RatMatrix._raw(self.rows * other.rows, self.cols * other.cols, tuple(out))

    # -- vectorization (column-major) ----------------------------------------

    def vec(self) -> tuple[Fraction, ...]:
        return tuple(self._data[i][j] for j in range(self.cols) for i in range(self.rows))

    @classmethod
    def unvec(cls, values: Sequence, rows: int, cols: int) -> "RatMatrix":
        if len(values) != rows * cols:
            raise ValueError("vector length does not match shape")
        vals = [_as_fraction(v) for v in values]
        return cls._raw(rows, cols, tuple(tuple(vals[j * rows + i] for j in range(cols)) for i in range(rows)))

    # -- linear algebra ----------------------------------------------------

    def rref(self) -> tuple["RatMatrix", list[int]]:
        """Reduced row-echelon form (nonzero rows only) and pivot columns."""
        red, pivots = _rref_fraction_rows(self.to_lists(), self.cols)
        return RatMatrix(len(red), self.cols, red), pivots

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        rows = [_integral_row(r) for r in self._data]
        _, pivots = _echelon(rows, self.cols, reduced=False)
        return len(pivots)

    def kernel(self) -> "Subspace":
        return Subspace._from_canonical_rows(self.cols, _kernel_rows(self.to_lists(), self.cols))

    def column_space(self) -> "Subspace":
        return Subspace.span(self)

    def column_basis(self) -> "RatMatrix":
        """A basis of the column space as columns (canonical form)."""
        return Subspace.span(self).basis

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def inverse(self) -> "RatMatrix":
        if not self.is_square():
            raise ValueError("only square matrices are invertible")
        n = self.rows
        aug = self.hstack(RatMatrix.identity(n))
        red, pivots = _rref_fraction_rows(aug.to_lists(), 2 * n)
        if pivots[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix(n, n, [row[n:] for row in red[:n]])

    def commutator(self, other: "RatMatrix") -> "RatMatrix":
        return self @ other - other @ self

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[format_rational(x) for x in row] for row in self._data]}

    @classmethod
    def from_dict(cls, obj, name: str = "matrix") -> "RatMatrix":
        if not isinstance(obj, dict):
            raise ShapeMismatch(f"{name}: expected a matrix object")
        for key in ("rows", "cols", "entries"):
            if key not in obj:
                raise MissingField(f"{name}: missing field {key!r}")
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
            raise ShapeMismatch(f"{name}: rows/cols must be non-negative integers")
        if not isinstance(entries, list) or len(entries) != rows or any(
                not isinstance(r, list) or len(r) != cols for r in entries):
            raise ShapeMismatch(f"{name}: entries do not form a {rows}x{cols} array")
        return cls(rows, cols, [[parse_rational(x) for x in r] for r in entries])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "RatMatrix":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(obj)


def _kernel_rows(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Kernel basis vectors, already in reduced echelon form."""
    red, pivots = _rref_fraction_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    # rows of the form (.. 1 at f ..) with entries only on pivot columns < f
    # are not echelon in general; canonicalize
    red_basis, _ = _rref_fraction_rows(basis, ncols)
    return red_basis


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n stored by a canonical basis.

    ``basis`` has the basis vectors as columns, arranged so that its transpose
    is in reduced row-echelon form; equal spaces therefore have equal bases.
    """

    ambient_dim: int
    basis: RatMatrix

    @classmethod
    def _from_canonical_rows(cls, n: int, rows: list[list[Fraction]]) -> "Subspace":
        return cls(n, RatMatrix(len(rows), n, rows).transpose() if rows else RatMatrix.zeros(n, 0))

    @classmethod
    def span(cls, generators: RatMatrix) -> "Subspace":
        """Span of the columns of ``generators``."""
        n = generators.rows
        red, _ = _rref_fraction_rows(generators.transpose().to_lists(), n)
        return cls._from_canonical_rows(n, red)

    @classmethod
    def span_vectors(cls, vectors: Iterable[Sequence], n: int) -> "Subspace":
        vectors = [list(map(_as_fraction, v)) for v in vectors]
        if not vectors:
            return cls.zero(n)
        return cls._from_canonical_rows(n, _rref_fraction_rows(vectors, n)[0])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, RatMatrix.zeros(n, 0))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, RatMatrix.identity(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span_vectors(([1 if k == i else 0 for k in range(n)] for i in indices), n)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return self.basis.columns()

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, vector: Sequence) -> bool:
        vector = [_as_fraction(v) for v in vector]
        if len(vector) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        return sum_spaces(self, Subspace.span_vectors([vector], self.ambient_dim)).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return sum_spaces(self, other).dim == other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_spaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect_spaces(self, other)

    def image(self, M: RatMatrix) -> "Subspace":
        if M.cols != self.ambient_dim:
            raise ValueError("map does not act on this space")
        return Subspace.span(M @ self.basis)

    def annihilator(self) -> RatMatrix:
        """Rows spanning the linear forms vanishing on this subspace."""
        ann = self.basis.transpose().kernel()
        return ann.basis.transpose()

    def __repr__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def _check_ambient(U: Subspace, V: Subspace):
    if U.ambient_dim != V.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {U.ambient_dim} vs {V.ambient_dim}")


# ---------------------------------------------------------------------------
# module-level operations


def rank(M: RatMatrix) -> int:
    return M.rank()


def kernel(M: RatMatrix) -> Subspace:
    return M.kernel()


def solve_affine(M: RatMatrix, b: Sequence) -> tuple[tuple[Fraction, ...], Subspace] | None:
    """Solve ``M x = b``.

    Returns ``None`` when ``b`` is not in the image of ``M``; otherwise a
    particular solution together with ``ker M``.
    """
    b = [_as_fraction(x) for x in b]
    if len(b) != M.rows:
        raise ValueError("right-hand side has wrong length")
    n = M.cols
    aug = [list(row) + [bi] for row, bi in zip(M.to_lists(), b)]
    red, pivots = _rref_fraction_rows(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x), M.kernel()


def left_action(M: RatMatrix, n: int) -> RatMatrix:
    """Matrix of ``X -> M X`` on (M.cols x n) matrices, column-major vec."""
    return RatMatrix.identity(n).kron(M)


def right_action(M: RatMatrix, m: int) -> RatMatrix:
    """Matrix of ``X -> X M`` on (m x M.rows) matrices, column-major vec."""
    return M.transpose().kron(RatMatrix.identity(m))


def sum_spaces(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    return Subspace.span(U.basis.hstack(V.basis))


def intersect_spaces(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    n = U.ambient_dim
    # x in U and V  <=>  x is killed by the annihilators of both
    ann = U.annihilator().vstack(V.annihilator())
    if ann.rows == 0:
        return Subspace.full(n)
    return ann.kernel()


def preimage(M: RatMatrix, U: Subspace) -> Subspace:
    """``{x : M x in U}``."""
    if M.rows != U.ambient_dim:
        raise ValueError("map target does not match subspace ambient dimension")
    ann = U.annihilator()
    if ann.rows == 0:
        return Subspace.full(M.cols)
    return (ann @ M).kernel()
