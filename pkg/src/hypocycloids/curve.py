"""Hypocycloid parametrizations, implicit equations and symmetry quotients."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from .chebyshev import P_poly, Q_poly
from .poly import BiPoly, PolyError, UniPoly, newton_interpolate, resultant_uni

Variant = Literal["plain", "tilde"]


class CurveError(ValueError):
    """Domain error: bad (k, l) or a failed symmetry precondition."""


@dataclass(frozen=True)
class CurveSpec:
    k: int
    l: int
    variant: Variant = "plain"

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.l, int)):
            raise CurveError("k and l must be integers")
        if not (self.k > self.l >= 1):
            raise CurveError(f"need k > l >= 1, got ({self.k}, {self.l})")
        if math.gcd(self.k, self.l) != 1:
            raise CurveError(f"k and l must be coprime, got ({self.k}, {self.l})")
        if self.variant not in ("plain", "tilde"):
            raise CurveError(f"unknown variant {self.variant!r}")

    @property
    def N(self) -> int:
        return self.k + self.l

    @property
    def tilde(self) -> bool:
        return self.variant == "tilde"

    @property
    def rho(self) -> Fraction:
        return Fraction(self.l, self.N)

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "variant": self.variant}

    @classmethod
    def from_json(cls, data: dict) -> "CurveSpec":
        return cls(data["k"], data["l"], data.get("variant", "plain"))


@dataclass(frozen=True)
class RationalParam:
    """x = xnum/den, y = ynum/den in the parameter t."""

    spec: CurveSpec
    xnum: UniPoly
    ynum: UniPoly
    den: UniPoly

    @property
    def scale(self) -> int:
        return self.spec.N

    def __call__(self, t):
        d = self.den(t)
        return self.xnum(t) / d, self.ynum(t) / d

    def at_infinity(self) -> "RationalParam":
        """Same curve in the parameter 1/t (every entry padded to degree 2k)."""
        n = 2 * self.spec.k

        def rev(p: UniPoly) -> UniPoly:
            cs = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
            return UniPoly(cs[::-1], p.var)

        return RationalParam(self.spec, rev(self.xnum), rev(self.ynum), rev(self.den))

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "xnum": self.xnum.to_json(),
            "ynum": self.ynum.to_json(),
            "den": self.den.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalParam":
        u = UniPoly.from_json
        return cls(CurveSpec.from_json(data["spec"]), u(data["xnum"]), u(data["ynum"]), u(data["den"]))


@dataclass(frozen=True)
class ProjectiveParam:
    """[X : Y : Z] as homogeneous forms of degree 2k in (t, s)."""

    spec: CurveSpec
    X: BiPoly
    Y: BiPoly
    Z: BiPoly

    def __call__(self, t, s):
        return self.X(t, s), self.Y(t, s), self.Z(t, s)

    @property
    def degrees(self) -> tuple[int, int, int]:
        return self.X.degree(), self.Y.degree(), self.Z.degree()


@dataclass(frozen=True)
class ImplicitCurve:
    f: BiPoly
    provenance: tuple[str, ...] = field(default_factory=tuple)

    @property
    def degree(self) -> int:
        return self.f.degree()

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "provenance": list(self.provenance)}

    @classmethod
    def from_json(cls, data: dict) -> "ImplicitCurve":
        return cls(BiPoly.from_json(data["f"]), tuple(data.get("provenance", ())))


def _cos_sin_power_sum(cs: Iterable[Fraction], power: int, var: str = "t") -> UniPoly:
    """sum c_i (1-t^2)^i (1+t^2)^(power-i), i.e. (1+t^2)^power * P(c)."""
    a = UniPoly([1, 0, -1], var)
    b = UniPoly([1, 0, 1], var)
    out = UniPoly([], var)
    for i, c in enumerate(cs):
        if c:
            out = out + (a**i) * (b ** (power - i)) * c
    return out


def build_param(spec: CurveSpec) -> RationalParam:
    k, l, N = spec.k, spec.l, spec.N
    P = P_poly(k, l, spec.tilde)
    Q = Q_poly(k, l, spec.tilde)
    xnum = _cos_sin_power_sum(P.coeffs, k)
    ynum = UniPoly([0, 2], "t") * _cos_sin_power_sum(Q.coeffs, k - 1)
    den = UniPoly([1, 0, 1], "t") ** k * N
    return RationalParam(spec, xnum, ynum, den)


def _homogenize(p: UniPoly, degree: int, vars=("t", "s")) -> BiPoly:
    return BiPoly({(i, degree - i): c for i, c in enumerate(p.coeffs)}, vars)


def projectivize(param: RationalParam) -> ProjectiveParam:
    n = 2 * param.spec.k
    X = _homogenize(param.xnum, n)
    Y = _homogenize(param.ynum, n)
    Z = _homogenize(param.den, n)
    # a common factor of the three forms would show up in the affine chart or at t = infinity
    g = _uni_gcd3(param.xnum, param.ynum, param.den)
    tops = (param.xnum.coeff(n), param.ynum.coeff(n), param.den.coeff(n))
    if g.degree > 0 or not any(tops):
        raise PolyError("projective parametrization has a common factor")
    return ProjectiveParam(param.spec, X, Y, Z)


def _uni_gcd3(a: UniPoly, b: UniPoly, c: UniPoly) -> UniPoly:
    from .poly import gcd

    return gcd(gcd(a, b), c)


def _grid_interpolate(values: list[list[Fraction]], xs, ys, vars=("x", "y")) -> BiPoly:
    # values[i][j] at (xs[i], ys[j]); interpolate in y, then each y-coefficient in x
    rows = [newton_interpolate(ys, row, vars[1]) for row in values]
    width = max((r.degree for r in rows), default=-1) + 1
    terms = {}
    for j in range(width):
        col = newton_interpolate(xs, [r.coeff(j) for r in rows], vars[0])
        for i, c in enumerate(col.coeffs):
            if c:
                terms[(i, j)] = c
    return BiPoly(terms, vars)


def vanishes_on(f: BiPoly, param: RationalParam) -> bool:
    """Exact check that f(x(t), y(t)) is the zero rational function."""
    deg = f.degree()
    # homogenize: f(xn/den, yn/den) * den^deg
    powers_x = [UniPoly([1], "t")]
    powers_y = [UniPoly([1], "t")]
    powers_d = [UniPoly([1], "t")]
    for _ in range(deg):
        powers_x.append(powers_x[-1] * param.xnum)
        powers_y.append(powers_y[-1] * param.ynum)
        powers_d.append(powers_d[-1] * param.den)
    acc = UniPoly([], "t")
    for (a, b), c in f.terms.items():
        acc = acc + powers_x[a] * powers_y[b] * powers_d[deg - a - b] * c
    return acc.is_zero()


def implicitize(param: RationalParam) -> ImplicitCurve:
    """Eliminate t from den*x - xnum = den*y - ynum = 0."""
    k = param.spec.k
    n = 2 * k
    xn, yn, den = param.xnum, param.ynum, param.den
    grid = [Fraction(i) for i in range(n + 1)]
    values = []
    for X in grid:
        a = den * X - xn
        row = []
        for Y in grid:
            b = den * Y - yn
            row.append(resultant_uni(a, b, n, n))
        values.append(row)
    f = _grid_interpolate(values, grid, grid)
    if f.is_zero():
        raise PolyError("implicitization produced the zero polynomial")
    f = f.canonical()
    if f.degree() != n:
        raise PolyError(f"extraneous factor: implicit degree {f.degree()} != {n}")
    if not vanishes_on(f, param):
        raise PolyError("implicit equation does not vanish on the parametrization")
    return ImplicitCurve(f, (f"C{param.spec.k},{param.spec.l}", param.spec.variant))


def hypocycloid(k: int, l: int, variant: Variant = "plain") -> ImplicitCurve:
    return implicitize(build_param(CurveSpec(k, l, variant)))


def quotient_y(curve: ImplicitCurve | BiPoly) -> ImplicitCurve:
    f, prov = _unwrap(curve)
    if not f.is_even_in(1):
        raise CurveError(f"not symmetric under {f.vars[1]} -> -{f.vars[1]}")
    return ImplicitCurve(f.halve_exponent(1).canonical(), prov + ("y^2->y",))


def quotient_x(curve: ImplicitCurve | BiPoly) -> ImplicitCurve:
    f, prov = _unwrap(curve)
    if not f.is_even_in(0):
        raise CurveError(f"not symmetric under {f.vars[0]} -> -{f.vars[0]}")
    return ImplicitCurve(f.halve_exponent(0).canonical(), prov + ("x^2->x",))


def axis_swap(curve: ImplicitCurve | BiPoly) -> ImplicitCurve:
    f, prov = _unwrap(curve)
    return ImplicitCurve(f.swap().canonical(), prov + ("swap",))


def _unwrap(curve) -> tuple[BiPoly, tuple[str, ...]]:
    if isinstance(curve, ImplicitCurve):
        return curve.f, curve.provenance
    return curve, ()


def eval_real(spec: CurveSpec, theta: float) -> tuple[float, float]:
    k, l, N = spec.k, spec.l, spec.N
    if spec.tilde:
        return (l * math.cos(k * theta) - k * math.cos(l * theta)) / N, (
            l * math.sin(k * theta) + k * math.sin(l * theta)
        ) / N
    return (l * math.cos(k * theta) + k * math.cos(l * theta)) / N, (
        l * math.sin(k * theta) - k * math.sin(l * theta)
    ) / N


def circle_meeting(spec: CurveSpec | RationalParam) -> UniPoly:
    """Numerator of x(t)^2 + y(t)^2 - 1."""
    param = spec if isinstance(spec, RationalParam) else build_param(spec)
    return param.xnum * param.xnum + param.ynum * param.ynum - param.den * param.den


def rotate_point(x: float, y: float, angle: float) -> tuple[float, float]:
    c, s = math.cos(angle), math.sin(angle)
    return c * x - s * y, s * x + c * y


def svg_path(spec: CurveSpec, samples: int = 1024) -> str:
    pts = [eval_real(spec, 2 * math.pi * i / samples) for i in range(samples)]
    # svg y grows downward
    body = " ".join(f"{x:.6f},{-y:.6f}" for x, y in pts)
    return f"M {body} Z"


def plot_svg(spec: CurveSpec, samples: int = 1024, size: int = 512) -> str:
    d = svg_path(spec, samples)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="-1.2 -1.2 2.4 2.4">\n'
        f'  <circle cx="0" cy="0" r="1" fill="none" stroke="#bbb" stroke-width="0.004"/>\n'
        f'  <path d="{d}" fill="none" stroke="black" stroke-width="0.01"/>\n'
        f"</svg>\n"
    )


def symmetric_reduce(f: BiPoly) -> BiPoly:
    """g with f(x, y) = g(x + y, x*y); requires f symmetric in its two variables."""
    if f.swap() != f:
        raise CurveError("not symmetric under exchanging the two variables")
    X, Y = BiPoly.gens(f.vars)
    s, q = X + Y, X * Y
    out: dict[tuple[int, int], Fraction] = {}
    rest = f
    while not rest.is_zero():
        # lex-leading monomial x^a y^b has a >= b and is the leading term of s^(a-b) q^b
        a, b = max(rest.terms)
        c = rest.terms[(a, b)]
        out[(a - b, b)] = out.get((a - b, b), 0) + c
        rest = rest - (s ** (a - b)) * (q**b) * c
    return BiPoly(out, f.vars)


def quotient_swap(curve: ImplicitCurve | BiPoly) -> ImplicitCurve:
    """Quotient by (x, y) -> (y, x) in the coordinates u = x + y, v = 4xy.

    The diagonal maps to v = u^2 and the two axes to v = 0.
    """
    f, prov = _unwrap(curve)
    g = symmetric_reduce(f)
    g = BiPoly({(a, b): c / Fraction(4) ** b for (a, b), c in g.terms.items()}, f.vars)
    return ImplicitCurve(g.canonical(), prov + ("sym",))
