from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hypocycloids.poly import (
    BiPoly,
    Interval,
    PolyError,
    SturmChain,
    UniPoly,
    bareiss_resultant,
    discriminant,
    euclid_resultant,
    gcd,
    isolate_real_roots,
    parse_bipoly,
    real_roots,
    refine_root,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)
from hypocycloids.curve import build_param, CurveSpec

from oracles import real_root_count, sylvester_resultant, to_sympy, uni_from_sympy

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_int = st.integers(-6, 6)


def unipolys(max_deg=5, coeff=small_q, var="t"):
    return st.lists(coeff, min_size=1, max_size=max_deg + 1).map(lambda cs: UniPoly(cs, var))


def nonconst(max_deg=5, coeff=small_q):
    return unipolys(max_deg, coeff).filter(lambda p: p.degree >= 1)


t = UniPoly.gen("t")
x, y = BiPoly.gens()


# examples


def test_resultant_linear_quadratic():
    assert resultant(t - 2, t * t - 1) == 3


def test_resultant_degenerate():
    with pytest.raises(PolyError):
        resultant(UniPoly([3], "t"), UniPoly([2], "t"))
    with pytest.raises(PolyError):
        resultant(x + 1, x * x, "y")


def test_deltoid_by_resultant():
    # x and t as the two variables, y frozen at generic rationals
    p = build_param(CurveSpec(2, 1))
    vars_ = ("x", "t")
    lift = lambda u: BiPoly({(0, i): c for i, c in enumerate(u.coeffs)}, vars_)
    A = lift(p.den) * BiPoly.gen(0, vars_) - lift(p.xnum)
    golden = parse_bipoly("3(x^2+y^2)^2+24 x (x^2+y^2)+6 (x^2+y^2)-32 x^3-1")
    for yv in [F(1, 3), F(-2, 5), F(3, 7)]:
        R = resultant(A, lift(p.den) * yv - lift(p.ynum), "t")
        g = golden.specialize("y", yv)
        assert squarefree_part(R).monic() == g.monic()


def test_discriminant_examples():
    assert discriminant(y * y - x, "y") == UniPoly([0, 4])
    assert discriminant(y * y - x ** 3, "y") == UniPoly([0, 0, 0, 4])
    with pytest.raises(PolyError):
        discriminant(y - x, "y")


def test_deltoid_quotient_discriminant():
    D = parse_bipoly("3(x^2+y)^2+24 x (x^2+y)+6 (x^2+y)-32 x^3-1")
    disc = discriminant(D, "y")
    assert disc.degree == 3
    # three real roots with multiplicity, all at one point
    assert squarefree_decomposition(disc) == [(UniPoly([F(1, 2), 1]), 3)]
    # with the axis y = 0 added there are three distinct vertical lines
    sf = squarefree_part(discriminant(D * parse_bipoly("y"), "y"))
    ivs = isolate_real_roots(sf)
    assert len(ivs) == 3 == sturm_count(sf)
    approx = sorted(complex(r).real for r in sympy.Poly(to_sympy(sf), sympy.Symbol("x")).nroots()
                    if abs(complex(r).imag) < 1e-9)
    assert len(approx) == 3
    for iv, r in zip(ivs, approx):
        assert float(iv.lower) - 1e-9 <= r <= float(iv.upper) + 1e-9
    assert [float(refine_root(sf, iv, F(1, 10 ** 9))) for iv in ivs] == pytest.approx([-0.5, -1 / 3, 1.0])


def test_sturm_examples():
    assert sturm_count(UniPoly([-2, 0, 1]), 0, 2) == 1
    assert sturm_count(UniPoly([1, 0, 1])) == 0


def test_isolation_examples():
    ivs = isolate_real_roots(UniPoly([0, -3, 0, 1]))
    assert len(ivs) == 3
    for iv, r in zip(ivs, [-3 ** 0.5, 0.0, 3 ** 0.5]):
        assert iv.contains(F(r).limit_denominator(10 ** 12)) or float(iv.lower) <= r <= float(iv.upper)
    assert ivs[1] == Interval(F(0), F(0))
    assert isolate_real_roots(UniPoly([5])) == []


def test_gcd_and_squarefree_examples():
    assert gcd(UniPoly([-1, 0, 1]), UniPoly([-1, 1])) == UniPoly([-1, 1])
    assert squarefree_part(UniPoly([-1, 1]) ** 2 * UniPoly([2, 1])).monic() == (UniPoly([-1, 1]) * UniPoly([2, 1]))


def test_deltoid_cusp_gcd():
    p = build_param(CurveSpec(2, 1))
    vx = p.xnum.deriv() * p.den - p.xnum * p.den.deriv()
    vy = p.ynum.deriv() * p.den - p.ynum * p.den.deriv()
    g = gcd(vx, vy)
    circle = UniPoly([1, 0, 1], "t")
    while (g % circle).is_zero():
        g = g // circle
    assert g.monic() == UniPoly([0, -3, 0, 1], "t")


# invariants


@given(nonconst(), nonconst())
def test_resultant_matches_sylvester_oracle(f, g):
    assert resultant(f, g) == sylvester_resultant(f, g)


@given(nonconst(4), nonconst(4))
def test_euclid_and_bareiss_agree(f, g):
    assert euclid_resultant(f.coeffs, g.coeffs, f.degree, g.degree) == bareiss_resultant(
        f.coeffs, g.coeffs, f.degree, g.degree
    )


@given(nonconst(4), nonconst(3), nonconst(3))
def test_resultant_vanishes_on_common_factor(f, g, h):
    assert resultant(f, f * g) == 0
    assert (resultant(g, h) == 0) == (gcd(g, h).degree >= 1)


@given(nonconst(4), nonconst(3), nonconst(3))
def test_resultant_multiplicative(f, g, h):
    assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


@given(st.lists(small_int, min_size=2, max_size=9).filter(lambda cs: any(cs[1:])))
@settings(max_examples=60)
def test_sturm_matches_sign_bisection(cs):
    f = UniPoly(cs)
    if f.degree < 1:
        return
    assert sturm_count(f) == real_root_count(f)


@given(st.lists(small_int, min_size=2, max_size=9))
def test_isolation_is_sorted_disjoint_and_complete(cs):
    f = UniPoly(cs)
    if f.is_zero():
        return
    ch = SturmChain(f)
    ivs = isolate_real_roots(f, ch)
    assert len(ivs) == (ch.count() if ch.poly.degree > 0 else 0)
    for a, b in zip(ivs, ivs[1:]):
        assert a.upper < b.lower
    for iv in ivs:
        if iv.lower == iv.upper:
            assert f(iv.lower) == 0
        else:
            assert ch.sign(iv.lower) * ch.sign(iv.upper) < 0
            r = refine_root(ch, iv, F(1, 2 ** 30))
            assert r.width <= F(1, 2 ** 30)


@given(small_q, small_q)
def test_exact_scalars(a, b):
    pa = UniPoly([a, b])
    assert (pa + UniPoly([b]) - UniPoly([b])) == pa
    assert (a + b) - b == a


@given(st.lists(nonconst(3, small_int), min_size=1, max_size=3), st.lists(st.integers(1, 3), min_size=3, max_size=3))
def test_squarefree_decomposition_reassembles(factors, mults):
    f = UniPoly([1], "t")
    for p, m in zip(factors, mults):
        f = f * p ** m
    prod = UniPoly([1], "t")
    for q, m in squarefree_decomposition(f):
        prod = prod * q ** m
    assert prod.monic() == f.monic()
    assert squarefree_part(f).degree == sympy.degree(sympy.sqf_part(to_sympy(f)), sympy.Symbol("t"))


@given(nonconst(4), nonconst(4))
def test_gcd_matches_sympy(f, g):
    want = uni_from_sympy(sympy.gcd(to_sympy(f), to_sympy(g)))
    assert gcd(f, g) == want.monic()


bipolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), small_q, max_size=8
).map(lambda d: BiPoly(d))


@given(bipolys)
def test_bipoly_json_and_parse_roundtrip(f):
    assert BiPoly.from_json(f.to_json()) == f
    assert parse_bipoly(str(f)) == f


@given(unipolys())
def test_unipoly_json_roundtrip(f):
    assert UniPoly.from_json(f.to_json()) == f


def test_parse_errors():
    with pytest.raises(PolyError):
        parse_bipoly("x + z")
    with pytest.raises(PolyError):
        parse_bipoly("x $ y")


def test_isolation_numeric_agreement():
    f = UniPoly([-1, 0, 0, 0, 1]) * UniPoly([-2, 0, 1])
    assert real_roots(f) == pytest.approx([-2 ** 0.5, -1, 1, 2 ** 0.5])
