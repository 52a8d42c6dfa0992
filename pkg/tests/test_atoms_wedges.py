"""Multiplicative classes of functions and their wedge algebra."""

import random
from fractions import Fraction as Q

import pytest

from tamesym import (AtomRegistry, DegenerateArgument, DegreeMismatch,
                     MixedFields, RatFunc, UniPoly, Wedge, constant_class,
                     mult_vec, one_minus, wedge_add, wedge_concat, wedge_equal,
                     wedge_of, wedge_scale, wedge_str, wedge_sub)
from tamesym.errors import OneMinusOfOne
from tamesym.wedges import retag, wedge_monomial

P = UniPoly.make


def rf(num, den=(1,)):
    return RatFunc.make(P(num), P(den))


def test_atoms_are_interned():
    reg = AtomRegistry()
    assert reg.prime(7) is reg.prime(7)
    assert reg.uni(P([-3, 1])) is reg.uni(P([-3, 1]))
    with pytest.raises(ValueError):
        reg.uni(P([1, 2]))  # not monic


def test_mult_vec_factors_exactly():
    reg = AtomRegistry()
    v = mult_vec(rf([6, -5, 1]), reg)  # (t-2)(t-3)
    d = v.as_dict()
    assert d[reg.uni(P([-2, 1]))] == 1
    assert d[reg.uni(P([-3, 1]))] == 1
    assert len(d) == 2


def test_mult_vec_is_a_homomorphism():
    rng = random.Random(21)
    reg = AtomRegistry()
    for _ in range(40):
        roots = rng.sample(range(-6, 7), 2)
        c = Q(rng.choice([-3, -2, 2, 3, 5]), rng.choice([1, 2, 3]))
        f = rf([-roots[0], 1]) * rf([c])
        g = rf([-roots[1], 1])
        assert mult_vec(f * g, reg) == mult_vec(f, reg) + mult_vec(g, reg)
        assert mult_vec(f / g, reg) == mult_vec(f, reg) - mult_vec(g, reg)


def test_constant_class_prime_exponents():
    reg = AtomRegistry()
    d = constant_class(Q(-12, 5), reg, "Q")
    assert d[reg.prime(2)] == 2
    assert d[reg.prime(3)] == 1
    assert d[reg.prime(5)] == -1
    # sign and the class of 1 both vanish in the multiplicative group mod
    # torsion
    assert constant_class(Q(1), reg, "Q") == {}
    assert constant_class(Q(-1), reg, "Q") == {}
    assert mult_vec(Q(-1), reg, "Q").is_zero


def test_one_minus():
    reg = AtomRegistry()
    v = one_minus(rf([0, 1]), reg)  # 1 - t
    assert v == mult_vec(rf([1, -1]), reg)
    with pytest.raises(OneMinusOfOne):
        one_minus(rf([1]), reg)


def test_wedge_alternation_and_swap():
    reg = AtomRegistry()
    a = mult_vec(rf([0, 1]), reg)
    b = mult_vec(rf([-1, 1]), reg)
    assert wedge_of([a, a]).is_zero
    assert wedge_equal(wedge_of([a, b]), wedge_scale(wedge_of([b, a]), -1))


def test_wedge_bilinearity():
    rng = random.Random(22)
    reg = AtomRegistry()
    for _ in range(30):
        r1, r2, r3 = rng.sample(range(-6, 7), 3)
        f = rf([-r1, 1])
        g = rf([-r2, 1])
        h = rf([-r3, 1])
        lhs = wedge_of([mult_vec(f * g, reg), mult_vec(h, reg)])
        rhs = wedge_add(wedge_of([mult_vec(f, reg), mult_vec(h, reg)]),
                        wedge_of([mult_vec(g, reg), mult_vec(h, reg)]))
        assert wedge_equal(lhs, rhs)


def test_wedge_group_laws():
    rng = random.Random(23)
    reg = AtomRegistry()

    def rand_wedge():
        r1, r2 = rng.sample(range(-6, 7), 2)
        w = wedge_of([mult_vec(rf([-r1, 1]), reg),
                      mult_vec(rf([-r2, 1]), reg)])
        return wedge_scale(w, rng.choice([-2, -1, 1, 3]))

    for _ in range(25):
        a, b = rand_wedge(), rand_wedge()
        assert wedge_equal(wedge_add(a, b), wedge_add(b, a))
        assert wedge_sub(wedge_add(a, b), b) == a
        assert wedge_add(a, Wedge.zero("Qt", 2)) == a


def test_degree_zero_wedges_are_scalars():
    w = Wedge.scalar("Q", Q(3, 2))
    assert w.degree == 0
    assert w.scalar_value() == Q(3, 2)
    assert wedge_str(w) == "3/2"
    assert wedge_str(Wedge.zero("Q", 0)) == "0"


def test_wedge_strings_are_canonical():
    reg = AtomRegistry()
    t = mult_vec(rf([0, 1]), reg)
    tm1 = mult_vec(rf([-1, 1]), reg)
    tm3 = mult_vec(rf([-3, 1]), reg)
    # linear atoms sort by descending root, primes come first
    assert wedge_str(wedge_of([t, tm1, tm3])) == "-w[t-3, t-1, t]"
    five = mult_vec(Q(5), reg, "Qt")
    assert wedge_str(wedge_of([five, t])) == "w[5, t]"
    both = wedge_add(wedge_of([t, tm1]), wedge_scale(wedge_of([t, tm3]), 2))
    assert wedge_str(both) == "-2*w[t-3, t] - w[t-1, t]"


def test_wedge_str_of_surface_class():
    reg = AtomRegistry()
    from tamesym import BiFrac, BiPoly
    x = BiFrac.make(BiPoly.var_x(), BiPoly.const(1))
    y = BiFrac.make(BiPoly.var_y(), BiPoly.const(1))
    one = BiFrac.make(BiPoly.const(1), BiPoly.const(1))
    two = one + one
    w = wedge_of([mult_vec(Q(5), reg, "Qxy"),
                  mult_vec(y - two, reg, "Qxy"),
                  mult_vec(x - one, reg, "Qxy"),
                  mult_vec(x - y, reg, "Qxy")])
    assert wedge_str(w) == "w[5, y-2, x-1, x-y]"


def test_mixed_fields_and_degrees_are_rejected():
    reg = AtomRegistry()
    a = mult_vec(rf([0, 1]), reg)
    b = mult_vec(Q(5), reg, "Q")
    with pytest.raises(MixedFields):
        wedge_of([a, b])
    w1 = wedge_of([a, mult_vec(rf([-1, 1]), reg)])
    w2 = wedge_of([a])
    with pytest.raises(DegreeMismatch):
        wedge_add(w1, w2)


def test_concat_and_retag():
    reg = AtomRegistry()
    a = mult_vec(rf([0, 1]), reg)
    b = mult_vec(rf([-1, 1]), reg)
    ab = wedge_concat(wedge_of([a]), wedge_of([b]))
    assert ab == wedge_of([a, b])
    moved = retag(wedge_of([mult_vec(Q(5), reg, "Qt")]), "Q")
    assert moved.field == "Q"
    assert wedge_str(moved) == "w[5]"


def test_wedge_monomial_drops_repeated_atoms():
    reg = AtomRegistry()
    atom = reg.uni(P([-1, 1]))
    assert wedge_monomial("Qt", [atom, atom]).is_zero
    w = wedge_monomial("Qt", [reg.prime(2), atom], Q(-1, 2))
    assert wedge_str(w) == "-1/2*w[2, t-1]"


def test_degenerate_wedge_entry_is_an_error_not_a_zero():
    """Constructing a class of the zero function must raise; silently
    dropping it would hide genuine arithmetic mistakes."""
    reg = AtomRegistry()
    with pytest.raises((DegenerateArgument, ZeroDivisionError, ValueError)):
        mult_vec(rf([0, 1]) - rf([0, 1]), reg)
