"""Planar diagrams, regions, and Kauffman states.

A diagram is a PD code: one 4-tuple of arc labels per crossing, arcs
numbered 1..2c along the knot (every crossing passage starts a new arc),
tuple entries listed counterclockwise around the crossing.  One arc is
marked with a basepoint.

Text form: ``X(a,b,c,d)`` entries separated by commas, plus ``mark=<arc>``,
e.g. ``X(1,5,2,4),X(5,3,6,2),X(3,1,4,6),mark=1``.

Conventions fixed here:

* Faces come from the rotation system: a dart is (crossing, slot); from a
  dart we cross its arc to the far end (crossing w, slot s) and continue
  counterclockwise out of slot s+1, recording the corner (w, s).
* Quadrant q at a crossing is the corner between tuple slots q and q+1
  (mod 4).
* Regions are listed in a canonical order (sorted by their smallest
  corner), so enumeration output is deterministic for a given PD code.

A Kauffman state marks one quadrant per region, skipping the two regions
next to the basepoint, with every crossing marked exactly once.  For the
standard (2,2n+1) torus diagram the states are indexed by the crossing
at which the large right-hand region D_R is marked, and state i carries
Spin^c grading i-n-1 and Maslov grading i-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .complexes import Generator, GradedComplex, euler_characteristic
from .halfint import HalfInt
from .laurent import LaurentPoly
from .matrices import IntMatrix

_PD_ENTRY_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_PD_MARK_RE = re.compile(r"mark\s*=\s*(\d+)")


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    marked_arc: int

    def __init__(self, crossings: Iterable[Iterable[int]], marked_arc: int):
        cr = tuple(tuple(int(a) for a in entry) for entry in crossings)
        if any(len(entry) != 4 for entry in cr):
            raise ValueError("each crossing needs exactly 4 arc labels")
        object.__setattr__(self, "crossings", cr)
        object.__setattr__(self, "marked_arc", int(marked_arc))
        self._check()

    def _check(self) -> None:
        c = len(self.crossings)
        counts: dict[int, int] = {}
        for entry in self.crossings:
            for a in entry:
                counts[a] = counts.get(a, 0) + 1
        expected = set(range(1, 2 * c + 1))
        if set(counts) != expected or any(v != 2 for v in counts.values()):
            raise ValueError("arcs must be labelled 1..2c, each appearing twice")
        if self.marked_arc not in expected:
            raise ValueError(f"marked arc {self.marked_arc} not in the diagram")
        # Connectivity of the underlying 4-valent graph.
        adjacency: dict[int, set[int]] = {i: set() for i in range(c)}
        arc_sites: dict[int, list[int]] = {}
        for i, entry in enumerate(self.crossings):
            for a in entry:
                arc_sites.setdefault(a, []).append(i)
        for sites in arc_sites.values():
            adjacency[sites[0]].add(sites[1])
            adjacency[sites[1]].add(sites[0])
        seen = {0}
        stack = [0]
        while stack:
            for nbr in adjacency[stack.pop()]:
                if nbr not in seen:
                    seen.add(nbr)
                    stack.append(nbr)
        if len(seen) != c:
            raise ValueError("diagram is not connected")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @classmethod
    def from_text(cls, text: str) -> PlanarDiagram:
        entries = [tuple(int(g) for g in m.groups()) for m in _PD_ENTRY_RE.finditer(text)]
        mark = _PD_MARK_RE.search(text)
        if not entries:
            raise ValueError("no X(a,b,c,d) entries found")
        if mark is None:
            raise ValueError("missing mark=<arc>")
        leftover = _PD_MARK_RE.sub("", _PD_ENTRY_RE.sub("", text))
        if leftover.strip(" ,\t\n"):
            raise ValueError(f"unparsed PD text: {leftover.strip()!r}")
        return cls(entries, int(mark.group(1)))

    def to_text(self) -> str:
        body = ",".join(f"X({a},{b},{c},{d})" for a, b, c, d in self.crossings)
        return f"{body},mark={self.marked_arc}"


@dataclass(frozen=True)
class Region:
    """A face of the diagram with its incident corners and boundary arcs."""

    index: int
    corners: tuple[tuple[int, int], ...]  # (crossing, quadrant)
    arcs: tuple[int, ...]

    def touches_arc(self, arc: int) -> bool:
        return arc in self.arcs


def regions(diagram: PlanarDiagram) -> list[Region]:
    """Faces of the underlying 4-valent planar graph, in canonical order.

    Rejects PD codes whose rotation system is not planar (wrong face
    count) -- those do not describe a knot projection in the plane.
    """
    c = diagram.n_crossings
    arc_darts: dict[int, list[tuple[int, int]]] = {}
    for i, entry in enumerate(diagram.crossings):
        for slot, arc in enumerate(entry):
            arc_darts.setdefault(arc, []).append((i, slot))

    def mate(dart: tuple[int, int]) -> tuple[int, int]:
        d1, d2 = arc_darts[diagram.crossings[dart[0]][dart[1]]]
        return d2 if dart == d1 else d1

    seen: set[tuple[int, int]] = set()
    faces: list[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]] = []
    for i in range(c):
        for slot in range(4):
            start = (i, slot)
            if start in seen:
                continue
            corners: list[tuple[int, int]] = []
            arcs: list[int] = []
            dart = start
            while True:
                seen.add(dart)
                arcs.append(diagram.crossings[dart[0]][dart[1]])
                w, s = mate(dart)
                corners.append((w, s))
                dart = (w, (s + 1) % 4)
                if dart == start:
                    break
            faces.append((tuple(corners), tuple(arcs)))

    if len(faces) != c + 2:
        raise ValueError(
            f"PD code is not planar: {len(faces)} faces for {c} crossings"
        )
    faces.sort(key=lambda f: min(f[0]))
    return [
        Region(index=i, corners=corners, arcs=arcs)
        for i, (corners, arcs) in enumerate(faces)
    ]


@dataclass(frozen=True)
class KauffmanState:
    """One marked quadrant per region away from the basepoint."""

    marks: tuple[tuple[int, int, int], ...]  # (region index, crossing, quadrant)

    @property
    def assignment(self) -> dict[int, tuple[int, int]]:
        return {r: (c, q) for r, c, q in self.marks}

    def crossing_marked_in(self, region_index: int) -> int:
        return self.assignment[region_index][0]


def enumerate_states(diagram: PlanarDiagram) -> list[KauffmanState]:
    """All Kauffman states of the diagram, in a deterministic order.

    Exhaustive backtracking over the region/crossing incidence structure.
    Returns [] when the region count makes states impossible.
    """
    regs = regions(diagram)
    fillable = [r for r in regs if not r.touches_arc(diagram.marked_arc)]
    if len(fillable) != diagram.n_crossings:
        return []

    options = {
        r.index: sorted(set(r.corners)) for r in fillable
    }
    order = sorted(options, key=lambda idx: (len(options[idx]), idx))
    used: set[int] = set()
    chosen: dict[int, tuple[int, int]] = {}
    found: list[KauffmanState] = []

    def backtrack(pos: int) -> None:
        if pos == len(order):
            marks = tuple(
                (idx, chosen[idx][0], chosen[idx][1]) for idx in sorted(chosen)
            )
            found.append(KauffmanState(marks))
            return
        idx = order[pos]
        for crossing, quadrant in options[idx]:
            if crossing in used:
                continue
            used.add(crossing)
            chosen[idx] = (crossing, quadrant)
            backtrack(pos + 1)
            used.remove(crossing)
            del chosen[idx]

    backtrack(0)
    found.sort(key=lambda st: st.marks)
    return found


def build_torus_diagram(n: int) -> PlanarDiagram:
    """Standard alternating diagram of the (2,2n+1) torus knot.

    Crossings are numbered top to bottom along the twist column.  Walking
    the knot, passage j (1-based) meets crossing ((j-1) mod m)+1 and goes
    under exactly when j is odd; arc j enters passage j and arc j+1
    leaves it.  Arc 1 is the left closure arc, which borders the left
    region D_L and the unbounded region, and carries the basepoint.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = 2 * n + 1
    two_m = 2 * m

    def wrap(x: int) -> int:
        return (x - 1) % two_m + 1

    crossings = []
    for c in range(1, m + 1):
        j_under = c if c % 2 else c + m
        j_over = c + m if c % 2 else c
        crossings.append(
            (j_under, wrap(j_over + 1), wrap(j_under + 1), j_over)
        )
    return PlanarDiagram(crossings, marked_arc=1)


def _right_region(diagram: PlanarDiagram, regs: list[Region]) -> Region:
    """The region D_R: largest region not next to the basepoint."""
    candidates = [r for r in regs if not r.touches_arc(diagram.marked_arc)]
    return max(candidates, key=lambda r: len(r.corners))


def torus_state_gradings(n: int) -> list[tuple[int, HalfInt, HalfInt]]:
    """Gradings of the torus states: state i has s = i-n-1 and m = i-1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [
        (i, HalfInt(i - n - 1), HalfInt(i - 1)) for i in range(1, 2 * n + 2)
    ]


def torus_states_with_gradings(
    n: int,
) -> list[tuple[KauffmanState, HalfInt, HalfInt]]:
    """Enumerated states of the (2,2n+1) diagram paired with their gradings.

    State i is the one whose D_R mark sits at crossing i; with crossings
    numbered down the twist column this makes the Spin^c grading increase
    with the state index.
    """
    diagram = build_torus_diagram(n)
    regs = regions(diagram)
    states = enumerate_states(diagram)
    d_r = _right_region(diagram, regs)
    states.sort(key=lambda st: st.crossing_marked_in(d_r.index))
    gradings = torus_state_gradings(n)
    if len(states) != len(gradings):
        raise RuntimeError(
            f"expected {len(gradings)} states for n={n}, found {len(states)}"
        )
    return [
        (state, spinc, maslov)
        for state, (_, spinc, maslov) in zip(states, gradings)
    ]


def torus_state_complex(n: int) -> GradedComplex:
    """The states of the (2,2n+1) diagram as a complex with zero differential."""
    gens = [
        Generator(label=f"z{i}", spinc=spinc, maslov=maslov)
        for i, spinc, maslov in torus_state_gradings(n)
    ]
    return GradedComplex(gens, IntMatrix.zeros(len(gens), len(gens)))


def alexander_from_states(n: int) -> LaurentPoly:
    """Alexander polynomial of T(2,2n+1) as the state-sum Euler characteristic."""
    return euler_characteristic(torus_state_complex(n))
