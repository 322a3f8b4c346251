"""Exact half-integers.

Spin^c classes and Maslov gradings live in (1/2)Z.  To keep every
comparison exact, a value is stored as *twice* itself in an ordinary
Python integer, so 3/2 is ``HalfInt(3, 2)`` with ``twice == 3``.
"""

from __future__ import annotations

import re
from functools import total_ordering

_FRACTION_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


@total_ordering
class HalfInt:
    """An element of (1/2)Z with exact arithmetic.

    >>> HalfInt(3, 2) + HalfInt(1)
    HalfInt(5, 2)
    >>> str(HalfInt(-1, 2))
    '-1/2'
    """

    __slots__ = ("twice",)

    def __init__(self, numerator: int, denominator: int = 1) -> None:
        if denominator == 1:
            self.twice = 2 * numerator
        elif denominator == 2:
            self.twice = numerator
        else:
            raise ValueError(f"denominator must be 1 or 2, got {denominator}")

    @classmethod
    def from_twice(cls, twice: int) -> HalfInt:
        return cls(twice, 2)

    @classmethod
    def parse(cls, text: str) -> HalfInt:
        """Parse ``'2'``, ``'-1/2'``, ``'3/2'`` into a HalfInt."""
        m = _FRACTION_RE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse half-integer: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        return cls(num, den)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def floor(self) -> int:
        return self.twice // 2

    def _twice_of(self, other: HalfInt | int) -> int:
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, int):
            return 2 * other
        return NotImplemented

    def __add__(self, other: HalfInt | int) -> HalfInt:
        t = self._twice_of(other)
        if t is NotImplemented:
            return NotImplemented
        return HalfInt(self.twice + t, 2)

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        t = self._twice_of(other)
        if t is NotImplemented:
            return NotImplemented
        return HalfInt(self.twice - t, 2)

    def __rsub__(self, other: HalfInt | int) -> HalfInt:
        t = self._twice_of(other)
        if t is NotImplemented:
            return NotImplemented
        return HalfInt(t - self.twice, 2)

    def __mul__(self, other: int) -> HalfInt:
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.twice * other, 2)

    __rmul__ = __mul__

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice, 2)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.twice), 2)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, int):
            return self.twice == 2 * other
        return NotImplemented

    def __lt__(self, other: HalfInt | int) -> bool:
        t = self._twice_of(other)
        if t is NotImplemented:
            return NotImplemented
        return self.twice < t

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        if self.twice % 2 == 0:
            return f"HalfInt({self.twice // 2})"
        return f"HalfInt({self.twice}, 2)"

    def as_json(self) -> dict:
        """Lossless JSON form: fraction string plus the doubled integer."""
        return {"str": str(self), "twice": self.twice}
