"""Representations of the enhanced ADHM quiver and of the ordinary ADHM quiver.

Vector spaces carry fixed standard bases, W = Q^r, V = Q^c, V' = Q^c', so a
representation is just the tuple of matrices (A, B, I, J, A', B', F).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from .exactmat import InputError, MissingField, RatMatrix, ShapeMismatch


class NotARepresentation(ValueError):
    """The matrices do not satisfy the quiver relations."""


class GaugeError(ValueError):
    pass


@dataclass(frozen=True)
class DimVector:
    r: int
    c: int
    cprime: int

    def __post_init__(self):
        for name in ("r", "c", "cprime"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an integer")
        if self.r < 1 or self.c < 1 or self.cprime < 0:
            raise ValueError(f"invalid dimension vector {self.astuple()}: need r >= 1, c >= 1, c' >= 0")

    def astuple(self) -> tuple[int, int, int]:
        return (self.r, self.c, self.cprime)

    def to_dict(self) -> dict:
        return {"r": self.r, "c": self.c, "cprime": self.cprime}


@dataclass(frozen=True)
class ADHMRep:
    """Ordinary ADHM datum (A, B, I, J) of type (r, c)."""

    r: int
    c: int
    A: RatMatrix
    B: RatMatrix
    I: RatMatrix
    J: RatMatrix

    def __post_init__(self):
        r, c = self.r, self.c
        expected = {"A": (c, c), "B": (c, c), "I": (c, r), "J": (r, c)}
        for name, shape in expected.items():
            got = getattr(self, name).shape
            if got != shape:
                raise ShapeMismatch(f"shape mismatch: {name} is {got[0]}x{got[1]}, expected {shape[0]}x{shape[1]}")

    def adhm_residual(self) -> RatMatrix:
        return self.A.commutator(self.B) + self.I @ self.J

    def to_dict(self) -> dict:
        out = {"dims": {"r": self.r, "c": self.c}}
        for name in ("A", "B", "I", "J"):
            out[name] = getattr(self, name).to_dict()
        return out

    @classmethod
    def from_dict(cls, obj) -> "ADHMRep":
        if not isinstance(obj, dict):
            raise InputError("expected a JSON object")
        dims = _field(obj, "dims")
        r, c = _count(dims, "r", 1), _count(dims, "c", 0)
        mats = {name: RatMatrix.from_dict(_field(obj, name), name) for name in ("A", "B", "I", "J")}
        return cls(r, c, **mats)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ADHMRep":
        return cls.from_dict(_loads(text))


@dataclass(frozen=True)
class RelationResidual:
    R1: RatMatrix
    R2: RatMatrix
    R3: RatMatrix
    R4: RatMatrix
    R5: RatMatrix

    def is_zero(self) -> bool:
        return all(getattr(self, f.name).is_zero() for f in fields(self))

    def failing(self) -> list[str]:
        return [f.name for f in fields(self) if not getattr(self, f.name).is_zero()]

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name).to_dict() for f in fields(self)}


_MATRIX_FIELDS = ("A", "B", "I", "J", "Aprime", "Bprime", "F")


@dataclass(frozen=True)
class EnhancedRep:
    """X = (W, V, V', A, B, I, J, A', B', F) in coordinates."""

    dims: DimVector
    A: RatMatrix
    B: RatMatrix
    I: RatMatrix
    J: RatMatrix
    Aprime: RatMatrix
    Bprime: RatMatrix
    F: RatMatrix

    def __post_init__(self):
        for name, shape in self.expected_shapes(self.dims).items():
            got = getattr(self, name).shape
            if got != shape:
                raise ShapeMismatch(f"shape mismatch: {name} is {got[0]}x{got[1]}, expected {shape[0]}x{shape[1]}")

    @staticmethod
    def expected_shapes(dims: DimVector) -> dict[str, tuple[int, int]]:
        r, c, cp = dims.astuple()
        return {"A": (c, c), "B": (c, c), "I": (c, r), "J": (r, c),
                "Aprime": (cp, cp), "Bprime": (cp, cp), "F": (c, cp)}

    @classmethod
    def zero(cls, dims: DimVector) -> "EnhancedRep":
        return cls(dims, **{name: RatMatrix.zeros(*shape) for name, shape in cls.expected_shapes(dims).items()})

    @classmethod
    def from_adhm(cls, base: ADHMRep) -> "EnhancedRep":
        """Embed an ADHM datum as the degenerate c' = 0 representation."""
        dims = DimVector(base.r, base.c, 0)
        return cls(dims, base.A, base.B, base.I, base.J,
                   RatMatrix.zeros(0, 0), RatMatrix.zeros(0, 0), RatMatrix.zeros(base.c, 0))

    @property
    def r(self) -> int:
        return self.dims.r

    @property
    def c(self) -> int:
        return self.dims.c

    @property
    def cprime(self) -> int:
        return self.dims.cprime

    def adhm_part(self) -> ADHMRep:
        return ADHMRep(self.r, self.c, self.A, self.B, self.I, self.J)

    def replace(self, **changes) -> "EnhancedRep":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return EnhancedRep(**values)

    def to_dict(self) -> dict:
        out = {"dims": self.dims.to_dict()}
        for name in _MATRIX_FIELDS:
            out[name] = getattr(self, name).to_dict()
        return out

    @classmethod
    def from_dict(cls, obj) -> "EnhancedRep":
        if not isinstance(obj, dict):
            raise InputError("expected a JSON object")
        d = _field(obj, "dims")
        try:
            dims = DimVector(_count(d, "r", 1), _count(d, "c", 1), _count(d, "cprime", 0))
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise ShapeMismatch(f"shape mismatch: {exc}") from exc
        mats = {name: RatMatrix.from_dict(_field(obj, name), name) for name in _MATRIX_FIELDS}
        return cls(dims, **mats)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "EnhancedRep":
        return cls.from_dict(_loads(text))


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def _field(obj: dict, name: str):
    if not isinstance(obj, dict) or name not in obj:
        raise MissingField(f"missing field {name!r}")
    return obj[name]


def _count(obj: dict, name: str, minimum: int) -> int:
    value = _field(obj, name)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ShapeMismatch(f"shape mismatch: dims.{name} must be an integer >= {minimum}, got {value!r}")
    return value


def relation_residuals(X: EnhancedRep) -> RelationResidual:
    """The five left-hand sides [A,B]+IJ, AF-FA', BF-FB', JF, [A',B']."""
    return RelationResidual(
        R1=X.A.commutator(X.B) + X.I @ X.J,
        R2=X.A @ X.F - X.F @ X.Aprime,
        R3=X.B @ X.F - X.F @ X.Bprime,
        R4=X.J @ X.F,
        R5=X.Aprime.commutator(X.Bprime),
    )


def satisfies_relations(X: EnhancedRep) -> bool:
    return relation_residuals(X).is_zero()


def require_relations(X: EnhancedRep) -> None:
    res = relation_residuals(X)
    if not res.is_zero():
        raise NotARepresentation(f"not a representation: relations {', '.join(res.failing())} fail")


def gauge_act(X: EnhancedRep, h: RatMatrix, hprime: RatMatrix) -> EnhancedRep:
    """Action of (h, h') in GL_c x GL_c'."""
    if h.shape != (X.c, X.c) or hprime.shape != (X.cprime, X.cprime):
        raise GaugeError("not a gauge transformation: wrong sizes")
    try:
        hinv = h.inverse()
        hpinv = hprime.inverse()
    except ZeroDivisionError:
        raise GaugeError("not a gauge transformation") from None
    return EnhancedRep(
        X.dims,
        A=h @ X.A @ hinv,
        B=h @ X.B @ hinv,
        I=h @ X.I,
        J=X.J @ hinv,
        Aprime=hprime @ X.Aprime @ hpinv,
        Bprime=hprime @ X.Bprime @ hpinv,
        F=h @ X.F @ hpinv,
    )
