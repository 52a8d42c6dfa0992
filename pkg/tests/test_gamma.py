"""Dilogarithm symbols, the five-term element, and weight-two residues."""

import random
from fractions import Fraction as Q

import pytest

from tamesym import (INF, AtomRegistry, DegenerateArgument, NotDistinct,
                     Wedge, cross_ratio, delta, five_term, gamma_add,
                     gamma_scale, gamma_str, gamma_term, parse_gamma,
                     parse_place, tame_symbol, tot_gamma, ts_gamma, wedge_str,
                     wedge_scale, weil_sum)
from tamesym.gamma import b2_normalize

ONE = Wedge.scalar("Q", Q(1))


def term(x):
    return gamma_term(1, Q(x), ONE)


def test_b2_normalize_known_values():
    assert b2_normalize(Q(3)) == (-1, Q(-2))
    assert b2_normalize(Q(5)) == (-1, Q(-4))
    assert b2_normalize(Q(-2)) == (1, Q(-2))


def test_b2_torsion_orbit_collapses():
    """The orbit {2, 1/2, -1} is fixed by the six-fold symmetry up to
    sign, so those symbols are torsion and normalize away."""
    for x in (Q(2), Q(1, 2), Q(-1)):
        assert b2_normalize(x) is None
        assert term(x).is_zero


def test_b2_degenerate_arguments_raise():
    with pytest.raises(DegenerateArgument):
        b2_normalize(Q(0))
    with pytest.raises(DegenerateArgument):
        gamma_term(1, Q(1), ONE)


def test_two_term_relations_hold_after_normalization():
    rng = random.Random(41)
    count = 0
    for _ in range(200):
        x = Q(rng.randint(-30, 30), rng.randint(1, 9))
        if x in (0, 1) or b2_normalize(x) is None:
            continue
        count += 1
        assert gamma_add(term(x), term(1 / x)).is_zero
        assert gamma_add(term(x), term(1 - x)).is_zero
    assert count > 100


def test_gamma_str_forms():
    g = gamma_term(-1, Q(-4), ONE)
    assert gamma_str(g) == "-{-4}_2"
    assert gamma_str(gamma_scale(g, 3)) == "-3*{-4}_2"
    assert gamma_str(gamma_add(g, gamma_scale(g, -1))) == "0"
    reg = AtomRegistry()
    g2 = parse_gamma("-{(3*t-3)/(t-3)}_2 (x) w[t-3]", reg)
    assert gamma_str(g2) == "-{(3*t-3)/(t-3)}_2 ⊗ w[t-3]"


def test_cross_ratio_values():
    assert cross_ratio(Q(0), Q(1), Q(2), Q(3)) == Q(4, 3)
    rng = random.Random(42)
    for _ in range(30):
        x = Q(rng.randint(2, 40), rng.randint(1, 7))
        assert cross_ratio(Q(0), INF, Q(1), x) == 1 / x


def test_cross_ratio_mobius_invariance():
    """The cross ratio only depends on the four points up to a shared
    fractional-linear change of coordinate."""
    rng = random.Random(43)

    def moebius(p, a, b, c, d):
        if p is INF:
            return INF if c == 0 else Q(a, c)
        den = c * p + d
        return INF if den == 0 else (a * p + b) / den

    for _ in range(40):
        pts = rng.sample(range(-8, 9), 4)
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c == 0:
            continue
        moved = [moebius(Q(p), a, b, c, d) for p in pts]
        if len({str(m) for m in moved}) < 4:
            continue
        assert cross_ratio(*(Q(p) for p in pts)) == cross_ratio(*moved)


def test_five_term_frozen_example():
    g = five_term(Q(0), Q(1), Q(3), Q(7), INF)
    assert gamma_str(g) == "-{-6}_2 - {-7/2}_2 + {-4/3}_2"
    reg = AtomRegistry()
    assert delta(g, reg).is_zero


def test_five_term_in_delta_kernel_randomized():
    rng = random.Random(44)
    reg = AtomRegistry()
    pool = sorted({Q(n, d) for n in range(-9, 10) for d in (1, 2, 3)})
    for _ in range(50):
        pts = rng.sample(pool, 5)
        if rng.random() < 0.3:
            pts[rng.randrange(5)] = INF
        assert delta(five_term(*pts), reg).is_zero


def test_five_term_requires_distinct_points():
    with pytest.raises(NotDistinct):
        five_term(Q(0), Q(1), Q(3), Q(3), INF)


def test_delta_frozen_value():
    reg = AtomRegistry()
    g = parse_gamma("{(3*t-3)/(t-3)}_2 (x) w[t-3]", reg)
    assert wedge_str(delta(g, reg)) == \
        "-w[2, 3, t-3] + w[2, t-3, t-1] - w[3, t-3, t] + w[t-3, t-1, t]"
    assert wedge_str(delta(gamma_scale(g, -2), reg)) == \
        "2*w[2, 3, t-3] - 2*w[2, t-3, t-1] + 2*w[3, t-3, t] - 2*w[t-3, t-1, t]"


def test_ts_gamma_frozen_values():
    reg = AtomRegistry()
    g = parse_gamma("{(3*t-3)/(t-3)}_2 (x) w[t-3]", reg)
    assert gamma_str(ts_gamma(g, parse_place("t=inf"), reg)) == "-{-2}_2"
    assert ts_gamma(g, parse_place("t=2"), reg).is_zero
    # argument not a unit at t=3, so the term dies there
    assert ts_gamma(g, parse_place("t=3"), reg).is_zero


def test_ts_gamma_on_scalar_tail_is_zero():
    reg = AtomRegistry()
    g = gamma_term(1, Q(-4), ONE)
    assert ts_gamma(g, parse_place("t=2"), reg).is_zero


def test_residue_anticommutes_with_delta():
    """Taking the symbol after delta equals minus delta after the
    weight-two residue, place by place."""
    reg = AtomRegistry()
    g = parse_gamma("{(3*t-3)/(t-3)}_2 (x) w[t-3]", reg)
    for spelling in ("t=inf", "t=0", "t=1", "t=2", "t=5"):
        v = parse_place(spelling)
        lhs = delta(ts_gamma(g, v, reg), reg)
        rhs = wedge_scale(tame_symbol(delta(g, reg), v, reg), -1)
        assert lhs == rhs, spelling


def test_total_residue_anticommutes_with_delta():
    reg = AtomRegistry()
    g = parse_gamma("{(3*t-3)/(t-3)}_2 (x) w[t-3] + 2*{-5}_2 @ w[t-1]", reg)
    lhs = delta(tot_gamma(g, reg), reg)
    rhs = wedge_scale(weil_sum(delta(g, reg), reg), -1)
    assert lhs == rhs
