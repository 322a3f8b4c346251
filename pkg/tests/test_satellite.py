import random

import pytest

from hflkit import (
    HalfInt,
    LaurentPoly,
    SatelliteSpec,
    alexander_from_states,
    hfl_compute,
    satellite_alexander,
    torus_alexander,
    whitehead_closed_form,
    whitehead_hfk_one,
)
from hflkit.satellite import WHITEHEAD_SPINC

H = HalfInt
TREFOIL = LaurentPoly.parse("t^-1 - 1 + t")
ONE = LaurentPoly.one()


def random_symmetric_alexander(rng: random.Random, degree: int) -> LaurentPoly:
    """Symmetric with p(1) = 1, like a genuine Alexander polynomial."""
    coeffs = {}
    total = 0
    for k in range(1, degree + 1):
        c = rng.randint(-4, 4)
        if c:
            coeffs[H(k)] = c
            coeffs[H(-k)] = c
            total += 2 * c
    coeffs[H(0)] = 1 - total
    return LaurentPoly(coeffs)


def test_whitehead_alexander_is_trivial():
    spec = SatelliteSpec(TREFOIL, ONE, winding=0)
    assert satellite_alexander(spec) == ONE


def test_squared_companion():
    spec = SatelliteSpec(TREFOIL, TREFOIL, winding=1)
    assert satellite_alexander(spec) == TREFOIL * TREFOIL


def test_identity_pattern():
    spec = SatelliteSpec(TREFOIL, ONE, winding=1)
    assert satellite_alexander(spec) == TREFOIL


def test_asymmetric_inputs_rejected():
    with pytest.raises(ValueError):
        SatelliteSpec(LaurentPoly.parse("1 + 2t"), ONE, winding=1)
    with pytest.raises(ValueError):
        SatelliteSpec(ONE, LaurentPoly.parse("1 + 2t"), winding=1)


def test_shifted_symmetric_input_recentered():
    # 1 - t + t^2 is the trefoil polynomial times a unit; the output is
    # returned in the centered representative.
    spec = SatelliteSpec(LaurentPoly.parse("1 - t + t^2"), ONE, winding=1)
    assert satellite_alexander(spec) == TREFOIL


def test_uncenterable_product_reports_error():
    # t - 1 is symmetric only up to a unit and its centered form is
    # antisymmetric (it is not a knot polynomial: p(1) = 0), so the
    # symmetrization convention refuses to guess.
    spec = SatelliteSpec(LaurentPoly.parse("t - 1"), ONE, winding=1)
    with pytest.raises(ValueError):
        satellite_alexander(spec)


def test_output_symmetric_and_unimodular_at_one():
    rng = random.Random(5)
    for _ in range(25):
        companion = random_symmetric_alexander(rng, rng.randint(1, 4))
        pattern = random_symmetric_alexander(rng, rng.randint(0, 2))
        winding = rng.randint(-3, 3)
        out = satellite_alexander(SatelliteSpec(companion, pattern, winding))
        assert out.is_symmetric()
        assert out.evaluate(1) in (1, -1)


def test_winding_zero_with_unit_pattern_is_always_trivial():
    rng = random.Random(9)
    for _ in range(10):
        companion = random_symmetric_alexander(rng, rng.randint(1, 5))
        out = satellite_alexander(SatelliteSpec(companion, ONE, winding=0))
        assert out.equal_up_to_unit(ONE)
        assert out == ONE


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, "t^-1 - 1 + t"),
        (2, "t^-2 - t^-1 + 1 - t + t^2"),
    ],
)
def test_torus_alexander_small(n, expected):
    assert torus_alexander(n) == LaurentPoly.parse(expected)


def test_torus_alexander_matches_state_sum():
    for n in range(1, 8):
        p = torus_alexander(n)
        assert p == alexander_from_states(n)
        assert p.evaluate(1) == 1


def test_torus_alexander_rejects_bad_n():
    with pytest.raises(ValueError):
        torus_alexander(0)


@pytest.mark.parametrize(
    "n,ranks",
    [
        (1, {1: 2, 0: 2}),
        (2, {2: 2, 0: 2, -1: 4}),
        (3, {3: 2, 1: 2, -1: 2, -2: 6}),
    ],
)
def test_whitehead_tables(n, ranks):
    table = whitehead_hfk_one(n)
    assert {m.twice // 2: e.free_rank for (_, m), e in table.items()} == ranks
    assert all(m.is_integer for (_, m), _ in table.items())
    assert all(s == WHITEHEAD_SPINC for (s, _), _ in table.items())


def test_whitehead_matches_closed_form():
    for n in range(1, 7):
        assert whitehead_hfk_one(n) == whitehead_closed_form(n)


def test_whitehead_rank_preserved():
    for n in range(1, 7):
        assert whitehead_hfk_one(n).total_free_rank() == (
            hfl_compute(n).total_free_rank()
        )
        assert whitehead_hfk_one(n).total_free_rank() == 4 * n


def test_whitehead_genus_one_reflection():
    # Nontrivial with at least two distinct Maslov gradings.
    for n in range(1, 5):
        table = whitehead_hfk_one(n)
        assert table
        assert len({m for (_, m), _ in table.items()}) >= 2
