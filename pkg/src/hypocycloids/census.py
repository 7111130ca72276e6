"""Singularity census of a hypocycloid computed in parameter space.

Cusps are the common critical parameters of x(t) and y(t).  Nodes are pairs
t != s with equal image; one parameter is eliminated from the divided
differences, the cusp and circular-point factors are divided out, and what is
left has one simple root per node branch.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import mpmath

from .curve import CurveSpec, RationalParam, build_param, implicitize
from .poly import (
    BiPoly,
    SturmChain,
    UniPoly,
    gcd,
    resultant,
    root_multiplicity,
    squarefree_part,
)

CIRCLE = UniPoly([1, 0, 1], "t")


class CensusError(RuntimeError):
    pass


@dataclass(frozen=True)
class CuspData:
    poly: UniPoly  # affine critical parameters, square-free
    real_affine: int
    at_infinity: bool

    @property
    def count(self) -> int:
        return self.real_affine + int(self.at_infinity)


@dataclass(frozen=True)
class NodeData:
    poly: UniPoly  # one simple root per branch parameter
    total: int
    real: int
    acnodes: int


@dataclass(frozen=True)
class InfinityType:
    p: int
    q: int

    @property
    def smooth(self) -> bool:
        return self.q == 1


@dataclass(frozen=True)
class SingularityCensus:
    degree: int
    cusps: int
    nodes_real: int
    nodes_nonreal: int
    infinity_type: InfinityType
    alpha: int

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "cusps": self.cusps,
            "nodesReal": self.nodes_real,
            "nodesNonreal": self.nodes_nonreal,
            "infinity": [self.infinity_type.p, self.infinity_type.q],
            "alpha": self.alpha,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SingularityCensus":
        p, q = data["infinity"]
        return cls(data["degree"], data["cusps"], data["nodesReal"], data["nodesNonreal"],
                   InfinityType(p, q), data["alpha"])


def _velocity_numerators(param: RationalParam) -> tuple[UniPoly, UniPoly]:
    d, dd = param.den, param.den.deriv()
    vx = param.xnum.deriv() * d - param.xnum * dd
    vy = param.ynum.deriv() * d - param.ynum * dd
    return vx, vy


def _strip(p: UniPoly, factor: UniPoly) -> UniPoly:
    g = gcd(p, factor)
    while g.degree > 0:
        p = p.exact_div(g)
        g = gcd(p, g)
    return p


def _affine_cusps(param: RationalParam) -> UniPoly:
    vx, vy = _velocity_numerators(param)
    g = _strip(gcd(vx, vy), CIRCLE)
    return squarefree_part(g)


def cusp_parameters(param: RationalParam) -> CuspData:
    poly = _affine_cusps(param)
    real = SturmChain(poly).count() if poly.degree > 0 else 0
    inf_poly = _affine_cusps(param.at_infinity())
    at_inf = inf_poly.degree >= 0 and inf_poly.coeff(0) == 0
    return CuspData(poly.primitive(), real, at_inf)


def divided_difference(num: UniPoly, den: UniPoly) -> BiPoly:
    """(num(t) den(s) - num(s) den(t)) / (t - s) as a polynomial in (t, s)."""
    terms: dict[tuple[int, int], Fraction] = {}
    for i, a in enumerate(num.coeffs):
        for j, b in enumerate(den.coeffs):
            if a and b:
                terms[(i, j)] = terms.get((i, j), 0) + a * b
                terms[(j, i)] = terms.get((j, i), 0) - a * b
    H = BiPoly(terms, ("t", "s"))
    cs = H.coeffs_in(0)
    n = len(cs) - 1
    s = UniPoly([0, 1], "s")
    q: list[UniPoly] = [UniPoly([], "s")] * n
    carry = cs[n]
    for i in range(n - 1, -1, -1):
        q[i] = carry
        carry = cs[i] + carry * s
    if not carry.is_zero():
        raise CensusError("divided difference is not exact")
    return BiPoly.from_coeffs(q, 0, ("t", "s"))


def node_resultant(param: RationalParam) -> UniPoly:
    A = divided_difference(param.xnum, param.den)
    B = divided_difference(param.ynum, param.den)
    return resultant(A, B, "s")


def _count_acnodes(node_poly: UniPoly, param: RationalParam) -> int:
    """Complex-conjugate parameter pairs whose image is a real point."""
    if node_poly.degree <= 0:
        return 0
    mpmath.mp.dps = 60
    cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(node_poly.coeffs)]
    roots = mpmath.polyroots(cs, maxsteps=400, extraprec=400)
    found = 0
    for r in roots:
        if abs(mpmath.im(r)) < mpmath.mpf(10) ** -30:
            continue
        d = param.den(r)
        x, y = param.xnum(r) / d, param.ynum(r) / d
        if abs(mpmath.im(x)) < 1e-25 and abs(mpmath.im(y)) < 1e-25:
            found += 1
    return found // 2


def node_parameters(param: RationalParam) -> NodeData:
    R = node_resultant(param)
    cusps = _affine_cusps(param)
    rest = _strip(R, CIRCLE)
    if cusps.degree > 0:
        rest = _strip(rest, cusps)
    poly = squarefree_part(rest).primitive() if rest.degree > 0 else UniPoly([1], "t")
    if poly.degree % 2:
        raise CensusError(f"node parameter polynomial has odd degree {poly.degree}")
    if poly != poly.reflect().primitive() and poly != (-poly.reflect()).primitive():
        raise CensusError("node parameters are not symmetric under t -> -t")
    real = SturmChain(poly).count() if poly.degree > 0 else 0
    acn = _count_acnodes(poly, param)
    return NodeData(poly, poly.degree // 2, real // 2, acn)


def infinity_type(spec: CurveSpec | RationalParam) -> InfinityType:
    """Orders of the branch at a circular point: line-at-infinity contact and the other coordinate."""
    param = spec if isinstance(spec, RationalParam) else build_param(spec)
    p = root_multiplicity(param.den, CIRCLE)
    q = root_multiplicity(param.xnum * param.xnum + param.ynum * param.ynum, CIRCLE)
    return InfinityType(p, q)


def implicit_degree(param: RationalParam) -> int:
    return implicitize(param).degree


def genus_check(spec: CurveSpec) -> int:
    k, l, N = spec.k, spec.l, spec.N
    return (2 * k - 1) * (2 * k - 2) // 2 - (k - 2) * N - N - (k - l - 1) * (k - 1)


def genus_defect(degree: int, nodes: int, cusps: int, inf: InfinityType) -> int:
    """Virtual genus minus the delta invariants; zero for a rational curve.

    Each of the two circular points carries a branch u^p = v^q with delta (p-1)(q-1)/2.
    """
    return (degree - 1) * (degree - 2) // 2 - nodes - cusps - (inf.p - 1) * (inf.q - 1)


@dataclass(frozen=True)
class CensusConfig:
    max_k: int = 6


def predicted(spec: CurveSpec) -> SingularityCensus:
    k, l, N = spec.k, spec.l, spec.N
    return SingularityCensus(2 * k, N, N * (l - 1), N * (k - l - 1), InfinityType(k, k - l), 0)


def full_census(spec: CurveSpec, config: CensusConfig = CensusConfig()) -> SingularityCensus:
    if spec.k > config.max_k:
        raise CensusError(f"k = {spec.k} exceeds the elimination bound {config.max_k}; raise max_k")
    param = build_param(spec)
    cusps = cusp_parameters(param)
    nodes = node_parameters(param)
    if nodes.acnodes:
        raise CensusError(f"{nodes.acnodes} nodes have conjugate parameters and a real image")
    inf = infinity_type(param)
    if math.gcd(inf.p, inf.q) != 1:
        raise CensusError(f"infinity type {inf} is not a coprime pair")
    degree = implicit_degree(param)
    census = SingularityCensus(
        degree=degree,
        cusps=cusps.count,
        nodes_real=nodes.real,
        nodes_nonreal=nodes.total - nodes.real,
        infinity_type=inf,
        alpha=genus_defect(degree, nodes.total, cusps.count, inf),
    )
    expect = predicted(spec)
    if census != expect:
        raise CensusError(f"census {asdict(census)} disagrees with {asdict(expect)}")
    return census
