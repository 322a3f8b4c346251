"""Integer-coefficient Laurent polynomials with half-integer exponents.

Exponents are stored doubled (see :mod:`hflkit.halfint`), so t^(1/2) is
representable exactly.  Coefficient maps never contain zeros; the zero
polynomial has empty support.

Text grammar (spaces ignored): a signed sum of terms ``[coeff][t[^exp]]``
where ``coeff`` is an integer (defaults to 1) and ``exp`` is an integer or
a half like ``3/2`` (defaults to 1).  Example: ``t^-2 - t^-1 + 1 - t + t^2``.
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping

from .halfint import HalfInt

_TERM_RE = re.compile(r"^(-?)(\d*)(t(?:\^(-?\d+(?:/2)?))?)?$")


class LaurentPoly:
    """Exact Laurent polynomial over the integers.

    >>> p = LaurentPoly.parse("t^-1 - 1 + t")
    >>> print(p * p)
    t^-2 - 2t^-1 + 3 - 2t + t^2
    >>> print(p.substitute(-1))
    t^-1 - 1 + t
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[HalfInt, int] | None = None) -> None:
        data: dict[int, int] = {}
        if coeffs:
            for exp, c in coeffs.items():
                if not isinstance(exp, HalfInt):
                    exp = HalfInt(exp)
                if c:
                    data[exp.twice] = data.get(exp.twice, 0) + c
        self._coeffs = {t: c for t, c in data.items() if c}

    @classmethod
    def _from_twice(cls, data: Mapping[int, int]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._coeffs = {t: c for t, c in data.items() if c}
        return p

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._from_twice({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls._from_twice({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exponent: HalfInt | int) -> LaurentPoly:
        if not isinstance(exponent, HalfInt):
            exponent = HalfInt(exponent)
        return cls._from_twice({exponent.twice: coeff} if coeff else {})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the documented text grammar, e.g. ``"t^-2 - t^-1 + 1"``."""
        s = text.replace(" ", "").replace("\t", "")
        if not s:
            raise ValueError("empty polynomial text")
        # Guard exponent minus signs before splitting the sum on '-'.
        s = s.replace("^-", "^!").replace("-", "+-").replace("^!", "^-")
        coeffs: dict[int, int] = {}
        for token in s.split("+"):
            if not token:
                continue
            m = _TERM_RE.match(token)
            if m is None or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial term: {token!r}")
            sign = -1 if m.group(1) else 1
            coeff = sign * (int(m.group(2)) if m.group(2) else 1)
            if m.group(3):
                exp = HalfInt.parse(m.group(4)) if m.group(4) else HalfInt(1)
            else:
                exp = HalfInt(0)
            coeffs[exp.twice] = coeffs.get(exp.twice, 0) + coeff
        return cls._from_twice(coeffs)

    def terms(self) -> Iterator[tuple[HalfInt, int]]:
        """Yield (exponent, coefficient) pairs, exponents ascending."""
        for t in sorted(self._coeffs):
            yield HalfInt.from_twice(t), self._coeffs[t]

    def coefficient(self, exponent: HalfInt | int) -> int:
        if not isinstance(exponent, HalfInt):
            exponent = HalfInt(exponent)
        return self._coeffs.get(exponent.twice, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_twice({t: -c for t, c in self._coeffs.items()})

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for t, c in other._coeffs.items():
            out[t] = out.get(t, 0) + c
        return LaurentPoly._from_twice(out)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly._from_twice(
                {t: c * other for t, c in self._coeffs.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for t1, c1 in self._coeffs.items():
            for t2, c2 in other._coeffs.items():
                t = t1 + t2
                out[t] = out.get(t, 0) + c1 * c2
        return LaurentPoly._from_twice(out)

    __rmul__ = __mul__

    def substitute(self, n: int) -> LaurentPoly:
        """Return p(t^n): exponent e maps to n*e, coefficients re-accumulated.

        n = 0 collapses every exponent to 0 and returns the constant p(1).
        """
        out: dict[int, int] = {}
        for t, c in self._coeffs.items():
            nt = n * t
            out[nt] = out.get(nt, 0) + c
        return LaurentPoly._from_twice(out)

    def evaluate(self, x: int) -> int:
        """Evaluate at x in {1, -1}.

        Other points are not exact for negative exponents; x = -1 further
        requires every exponent to be an integer.
        """
        if x == 1:
            return sum(self._coeffs.values())
        if x == -1:
            total = 0
            for t, c in self._coeffs.items():
                if t % 2:
                    raise ValueError("evaluation at -1 needs integer exponents")
                total += c if (t // 2) % 2 == 0 else -c
            return total
        raise ValueError(f"exact evaluation only at t = 1 or t = -1, got {x}")

    def equal_up_to_unit(self, other: LaurentPoly) -> bool:
        """True iff self = ±t^k * other for some half-integer k."""
        if not self._coeffs and not other._coeffs:
            return True
        if not self._coeffs or not other._coeffs:
            return False
        mine = sorted(self._coeffs)
        theirs = sorted(other._coeffs)
        if len(mine) != len(theirs):
            return False
        shift = mine[0] - theirs[0]
        if any(a - b != shift for a, b in zip(mine, theirs)):
            return False
        same = all(self._coeffs[a] == other._coeffs[a - shift] for a in mine)
        flipped = all(self._coeffs[a] == -other._coeffs[a - shift] for a in mine)
        return same or flipped

    def is_symmetric(self) -> bool:
        """True iff p(t) = p(t^-1)."""
        return self == self.substitute(-1)

    def symmetrized(self) -> LaurentPoly:
        """Center the support at 0 and normalize the top coefficient positive.

        Raises ValueError when no half-integer power shift makes the
        polynomial symmetric (cannot happen for products of symmetric
        factors, which is the intended use).
        """
        if not self._coeffs:
            return self
        lo, hi = min(self._coeffs), max(self._coeffs)
        if (lo + hi) % 2:
            raise ValueError("support cannot be centered by a half-integer shift")
        mid = (lo + hi) // 2
        centered = LaurentPoly._from_twice(
            {t - mid: c for t, c in self._coeffs.items()}
        )
        if not centered.is_symmetric():
            raise ValueError("polynomial is not symmetric under t -> 1/t")
        if centered._coeffs[max(centered._coeffs)] < 0:
            centered = -centered
        return centered

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp, c in self.terms():
            if exp.twice == 0:
                body = str(abs(c))
            else:
                power = "" if exp == 1 else f"^{exp}"
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}t{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly.parse({str(self)!r})"
