"""Coefficient rings: the integers and the integers modulo m."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .errors import NotInvertibleError, ParseError, RingMismatchError

__all__ = ["Ring", "RingElem", "Z", "Zmod", "parse_ring"]


@dataclass(frozen=True)
class Ring:
    """Z when ``modulus`` is None, otherwise Z/mZ (m >= 1; m = 1 is the zero ring)."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def size(self) -> Optional[int]:
        return self.modulus

    def __str__(self):
        return "Z" if self.modulus is None else f"Z/{self.modulus}"

    # -- raw integer helpers; the hot paths in an_ring use these directly

    def red(self, v: int) -> int:
        return v if self.modulus is None else v % self.modulus

    def is_unit_int(self, v: int) -> bool:
        if self.modulus is None:
            return v in (1, -1)
        return math.gcd(v % self.modulus, self.modulus) == 1

    def inv_int(self, v: int) -> int:
        if self.modulus is None:
            if v in (1, -1):
                return v
            raise NotInvertibleError(v, self)
        if self.modulus == 1:
            return 0
        v %= self.modulus
        try:
            return pow(v, -1, self.modulus)
        except ValueError:
            raise NotInvertibleError(v, self) from None

    # -- element-level API

    def __call__(self, v) -> "RingElem":
        if isinstance(v, RingElem):
            if v.ring != self:
                raise RingMismatchError(f"{v!r} is not an element of {self}")
            return v
        return RingElem(self, self.red(int(v)))

    def zero(self) -> "RingElem":
        return RingElem(self, 0)

    def one(self) -> "RingElem":
        return RingElem(self, self.red(1))

    def enumerate(self, bound: int = 0) -> list["RingElem"]:
        """All elements of a finite ring, or the window -bound..bound of Z."""
        if self.modulus is not None:
            return [RingElem(self, v) for v in range(self.modulus)]
        return [RingElem(self, v) for v in range(-bound, bound + 1)]

    def enumerate_ints(self, bound: int = 0) -> list[int]:
        return [e.value for e in self.enumerate(bound)]


Z = Ring()


def Zmod(m: int) -> Ring:
    return Ring(m)


@dataclass(frozen=True)
class RingElem:
    ring: Ring
    value: int

    def _check(self, other) -> "RingElem":
        if isinstance(other, int):
            return self.ring(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring.red(self.value + other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring.red(self.value - other.value))

    def __rsub__(self, other):
        return self.ring(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring.red(self.value * other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.red(-self.value))

    def inv(self) -> "RingElem":
        return RingElem(self.ring, self.ring.inv_int(self.value))

    def is_unit(self) -> bool:
        if self.ring.modulus == 1:
            return True
        return self.ring.is_unit_int(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} in {self.ring}"


# module-level spellings matching the operation names
def add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def sub(a: RingElem, b: RingElem) -> RingElem:
    return a - b


def mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def neg(a: RingElem) -> RingElem:
    return -a


def inv(a: RingElem) -> RingElem:
    return a.inv()


def is_unit(a: RingElem) -> bool:
    return a.is_unit()


_RING_RE = re.compile(r"Z(?:/(\d+))?")


def parse_ring(text: str) -> Ring:
    """Parse ``"Z"`` or ``"Z/<m>"``."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s.startswith("Z"):
        raise ParseError("expected 'Z'", text, offset)
    m = _RING_RE.match(s)
    end = m.end()
    if end != len(s):
        pos = offset + end
        if s[end:end + 1] == "/":
            pos += 1
            raise ParseError("expected a positive integer modulus", text, pos)
        raise ParseError("unexpected character", text, pos)
    if m.group(1) is None:
        return Z
    mod = int(m.group(1))
    if mod < 1:
        raise ParseError("modulus must be positive", text, offset + 2)
    return Ring(mod)
