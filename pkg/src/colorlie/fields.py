"""Exact scalar arithmetic: rationals and prime fields.

Scalars are either :class:`fractions.Fraction` (characteristic 0) or
:class:`Fp` residues (characteristic p).  All arithmetic is exact; no
floating point value is ever produced or accepted.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class FieldError(ValueError):
    """Scalar does not belong to the field, or cannot be parsed."""


_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/(\d+))?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Fp:
    """Residue class modulo a prime, with full field arithmetic."""

    residue: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", self.residue % self.p)

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        raise FieldError(f"cannot coerce {other!r} into F_{self.p}")

    def __add__(self, other):
        other = self._coerce(other)
        return Fp(self.residue + other.residue, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Fp(self.residue - other.residue, self.p)

    def __neg__(self):
        return Fp(-self.residue, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        return Fp(self.residue * other.residue, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.residue == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.residue * pow(other.residue, -1, self.p), self.p)

    def __pow__(self, n: int):
        if n < 0:
            if self.residue == 0:
                raise ZeroDivisionError(f"inverting zero in F_{self.p}")
            return Fp(pow(self.residue, n, self.p), self.p)
        return Fp(pow(self.residue, n, self.p), self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, Fp):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self) -> bool:
        return self.residue != 0

    def __repr__(self) -> str:
        return f"{self.residue} (mod {self.p})"


Scalar = Union[Fraction, Fp]

_ZEROS: dict[int, Scalar] = {}
_ONES: dict[int, Scalar] = {}


def _zero_of(char: int) -> Scalar:
    # singletons make `x is field.zero` usable as a fast path
    out = _ZEROS.get(char)
    if out is None:
        out = _ZEROS[char] = Fraction(0) if char == 0 else Fp(0, char)
    return out


def _one_of(char: int) -> Scalar:
    out = _ONES.get(char)
    if out is None:
        out = _ONES[char] = Fraction(1) if char == 0 else Fp(1, char)
    return out


@dataclass(frozen=True)
class Field:
    """Field descriptor: characteristic 0 (rationals) or a prime p."""

    char: int = 0

    def __post_init__(self) -> None:
        if self.char != 0 and not _is_prime(self.char):
            raise FieldError(f"characteristic must be 0 or a prime, got {self.char}")

    @property
    def zero(self) -> Scalar:
        return _zero_of(self.char)

    @property
    def one(self) -> Scalar:
        return _one_of(self.char)

    def of(self, value) -> Scalar:
        """Coerce an int, Fraction, scalar string or field element."""
        if isinstance(value, str):
            return self.parse(value)
        if self.char == 0:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise FieldError(f"not a rational scalar: {value!r}")
        if isinstance(value, Fp):
            if value.p != self.char:
                raise FieldError(f"residue mod {value.p} used in F_{self.char}")
            return value
        if isinstance(value, int):
            return Fp(value, self.char)
        if isinstance(value, Fraction):
            num = Fp(value.numerator, self.char)
            den = Fp(value.denominator, self.char)
            if not den:
                raise FieldError(f"{value} has no image in F_{self.char}")
            return num / den
        raise FieldError(f"not a scalar over F_{self.char}: {value!r}")

    def contains(self, value) -> bool:
        if self.char == 0:
            return isinstance(value, Fraction)
        return isinstance(value, Fp) and value.p == self.char

    def parse(self, text: str) -> Scalar:
        """Parse exact "p/q" or integer notation.  Rejects anything else."""
        m = _SCALAR_RE.match(text.strip())
        if m is None:
            raise FieldError(f"malformed scalar {text!r}")
        if m.group(1) is not None and int(m.group(1)) == 0:
            raise FieldError(f"malformed scalar {text!r}: zero denominator")
        frac = Fraction(text.strip())
        return self.of(frac)

    def format(self, value: Scalar) -> str:
        """Canonical string form; inverse of :meth:`parse`."""
        if self.char == 0:
            if not isinstance(value, Fraction):
                raise FieldError(f"not a rational scalar: {value!r}")
            return str(value)
        if not (isinstance(value, Fp) and value.p == self.char):
            raise FieldError(f"not an F_{self.char} scalar: {value!r}")
        return str(value.residue)

    def describe(self) -> str:
        return "Q" if self.char == 0 else f"Fp:{self.char}"

    @staticmethod
    def from_description(text: str) -> "Field":
        text = text.strip()
        if text == "Q":
            return Field(0)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise FieldError(f"bad field descriptor {text!r}") from None
            return Field(p)
        raise FieldError(f"bad field descriptor {text!r}")


QQ = Field(0)
