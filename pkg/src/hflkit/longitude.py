"""Longitude Floer chain complexes of (2,2n+1) torus knots.

Generators in a fixed Spin^c class s (a strict half-integer) are pairs
x(i,j) and y(i,j) with j - i = s + n + 1/2, 1 <= j <= 2n+1 and i >= 1,
graded by

    maslov(x(i,j)) = j - n - 3/2 = -maslov(y(i,j)),
    spinc(x(i,j))  = spinc(y(i,j)) = j - i - n - 1/2.

The differential cancels x(i,j) against x(i-1,j-1) for odd j, and
y(i,j) against y(i+1,j+1) for odd j, whenever the partner exists; all
other columns are zero.  Each arrow is oriented so the Maslov grading
drops by 1 (for the y family that is the j -> j+1 direction) and carries
coefficient +1: every generator hits at most one other generator, so the
isomorphism type of the homology depends on neither choice.  The same
two rules are applied uniformly in every class, which reproduces the
closed-form answer below in all of them.

Closed form: for |s| <= n - 1/2 the homology is one Z in Maslov grading
-n + 1/2 and one Z in grading eps(s)*s with eps(s) = (-1)^(n - 1/2 - s);
classes with |s| > n - 1/2 are trivial (the complex itself is empty).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    Generator,
    GradedComplex,
    GroupSummand,
    HomologyTable,
    homology,
)
from .halfint import HalfInt
from .matrices import IntMatrix


@dataclass(frozen=True)
class LongitudeGenerator:
    """A generator x(i,j) or y(i,j); i is the winding index, j the state index."""

    kind: str  # "x" or "y"
    i: int
    j: int
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("x", "y"):
            raise ValueError(f"kind must be 'x' or 'y', got {self.kind!r}")
        if self.i < 1:
            raise ValueError(f"winding index must be >= 1, got {self.i}")
        if not 1 <= self.j <= 2 * self.n + 1:
            raise ValueError(
                f"state index must be in [1, {2 * self.n + 1}], got {self.j}"
            )

    @property
    def spinc(self) -> HalfInt:
        return HalfInt.from_twice(2 * (self.j - self.i - self.n) - 1)

    @property
    def maslov(self) -> HalfInt:
        base = 2 * (self.j - self.n) - 3
        return HalfInt.from_twice(base if self.kind == "x" else -base)

    @property
    def label(self) -> str:
        return f"{self.kind}({self.i},{self.j})"


def spinc_classes(n: int) -> list[HalfInt]:
    """All half-integer classes with |s| <= n - 1/2, ascending."""
    return [HalfInt.from_twice(t) for t in range(-(2 * n - 1), 2 * n, 2)]


def build_hfl_complex(n: int, s: HalfInt) -> GradedComplex:
    """Longitude Floer complex of T(2,2n+1) in the Spin^c class s.

    s must be a strict half-integer; classes with |s| > n - 1/2 give the
    empty complex.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if s.is_integer:
        raise ValueError(f"Spin^c classes are strict half-integers, got {s}")
    if abs(s).twice > 2 * n - 1:
        return GradedComplex((), IntMatrix.zeros(0, 0))

    delta = (s.twice + 2 * n + 1) // 2  # j - i, an integer in [1, 2n]
    gens: list[LongitudeGenerator] = []
    for kind in ("x", "y"):
        for j in range(delta + 1, 2 * n + 2):
            gens.append(LongitudeGenerator(kind, j - delta, j, n))

    index = {(g.kind, g.j): pos for pos, g in enumerate(gens)}
    size = len(gens)
    entries = [[0] * size for _ in range(size)]
    for pos, g in enumerate(gens):
        if g.j % 2 == 0:
            continue
        if g.kind == "x" and g.i >= 2:
            entries[index[("x", g.j - 1)]][pos] = 1
        elif g.kind == "y" and g.j + 1 <= 2 * n + 1:
            entries[index[("y", g.j + 1)]][pos] = 1

    generators = [Generator(g.label, g.spinc, g.maslov) for g in gens]
    return GradedComplex(generators, IntMatrix(entries, cols=size))


def hfl_compute(n: int) -> HomologyTable:
    """Homology of the longitude complexes, over all nontrivial classes."""
    table = HomologyTable()
    for s in spinc_classes(n):
        table = table.merged(homology(build_hfl_complex(n, s)))
    return table


def epsilon(n: int, s: HalfInt) -> int:
    """The sign (-1)^(n - 1/2 - s); the exponent is an integer."""
    return -1 if (HalfInt(n) - HalfInt(1, 2) - s).floor() % 2 else 1


def hfl_closed_form(n: int) -> HomologyTable:
    """The closed-form answer: Z at maslov -n+1/2 and Z at eps(s)*s, per class."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    entries: dict[tuple[HalfInt, HalfInt], GroupSummand] = {}
    bottom = HalfInt.from_twice(-2 * n + 1)
    for s in spinc_classes(n):
        other = s * epsilon(n, s)
        if other == bottom:
            entries[(s, bottom)] = GroupSummand(2, ())
        else:
            entries[(s, bottom)] = GroupSummand(1, ())
            entries[(s, other)] = GroupSummand(1, ())
    return HomologyTable(entries)


def _relative_profile(table: HomologyTable, s: HalfInt) -> tuple:
    """Maslov offsets from the class minimum, with ranks and torsion."""
    rows = [
        (m.twice, e.free_rank, e.torsion)
        for (spinc, m), e in table.items()
        if spinc == s
    ]
    if not rows:
        return ()
    base = min(t for t, _, _ in rows)
    return tuple(sorted((t - base, rank, tors) for t, rank, tors in rows))


def verify_symmetry(n: int) -> bool:
    """Check that class s and class -s agree as relatively graded groups."""
    table = hfl_compute(n)
    for s in spinc_classes(n):
        if _relative_profile(table, s) != _relative_profile(table, -s):
            return False
    return True


def verify_genus_and_fibered(n: int) -> bool:
    """Genus detection for T(2,2n+1), which is fibered of genus n.

    The classes +-(n - 1/2) must carry Z + Z (total rank 2, no torsion)
    and the complexes in the classes +-(n + 1/2) and +-(n + 3/2), the
    nearest ones above the genus bound, must be empty.
    """
    table = hfl_compute(n)
    for sign in (1, -1):
        edge = HalfInt.from_twice(sign * (2 * n - 1))
        at_edge = table.restrict(edge)
        if at_edge.total_free_rank() != 2 or at_edge.has_torsion():
            return False
        for above_twice in (2 * n + 1, 2 * n + 3):
            cx = build_hfl_complex(n, HalfInt.from_twice(sign * above_twice))
            if len(cx) != 0:
                return False
    return True
