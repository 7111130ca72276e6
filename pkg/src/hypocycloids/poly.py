"""Exact polynomial arithmetic over the rationals.

Scalars are :class:`fractions.Fraction`.  ``UniPoly`` is dense, ``BiPoly`` is
sparse in two named variables.  Elimination goes through formal-degree
Sylvester matrices evaluated at integer points, so a leading coefficient that
vanishes at one specialization never changes the shape of the matrix.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]
RatScalar = Fraction


class PolyError(ValueError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def _strip(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# univariate


class UniPoly:
    """Dense univariate polynomial, coefficients stored low degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        self.coeffs: tuple[Fraction, ...] = tuple(_strip([_frac(c) for c in coeffs]))
        self.var = var

    # construction
    @classmethod
    def const(cls, c, var: str = "x") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def monomial(cls, n: int, c=1, var: str = "x") -> "UniPoly":
        return cls([0] * n + [c], var)

    @classmethod
    def gen(cls, var: str = "x") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "x") -> "UniPoly":
        out = cls([1], var)
        for r in roots:
            out = out * cls([-_frac(r), 1], var)
        return out

    # basic data
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var)

    # ring operations
    def __add__(self, other) -> "UniPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = _frac(other)
            return UniPoly([c * a for a in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise PolyError("negative power")
        out, base = UniPoly([1], self.var), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([], self.var), self
        q = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        m = len(other.coeffs) - 1
        for i in range(dq, -1, -1):
            c = rem[i + m] * inv
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return UniPoly(q, self.var), UniPoly(rem[:m], self.var)

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise PolyError("division is not exact")
        return q

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, int) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else _coerce_like(c, x))
        return acc

    def deriv(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        out = UniPoly([], inner.var)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def shift(self, a) -> "UniPoly":
        return self.compose(UniPoly([a, 1], self.var))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def content(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        num = reduce(math.gcd, (c.numerator for c in self.coeffs), 0)
        return Fraction(num, den)

    def primitive(self) -> "UniPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return self * (1 / c)

    def int_coeffs(self) -> list[int]:
        p = self.primitive()
        return [int(c) for c in p.coeffs]

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def reflect(self) -> "UniPoly":
        """p(-x)."""
        return UniPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.var)

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    # io
    def to_json(self) -> dict:
        return {"vars": [self.var], "terms": [[i, _fmt_scalar(c)] for i, c in enumerate(self.coeffs) if c]}

    @classmethod
    def from_json(cls, data: dict) -> "UniPoly":
        (var,) = data["vars"]
        terms = data["terms"]
        n = max((t[0] for t in terms), default=-1) + 1
        cs = [Fraction(0)] * n
        for e, c in terms:
            cs[e] += Fraction(c)
        return cls(cs, var)

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return _format_terms([((i,), c) for i, c in enumerate(self.coeffs)], (self.var,))


def _coerce_like(c: Fraction, x):
    if isinstance(x, (float, complex)):
        return float(c)
    try:
        import mpmath

        if isinstance(x, (mpmath.mpf, mpmath.mpc)):
            return mpmath.mpf(c.numerator) / c.denominator
    except ImportError:  # pragma: no cover
        pass
    try:
        return type(x)(float(c))
    except TypeError:
        return float(c)


def _format_terms(terms, names) -> str:
    parts = []
    for exps, c in sorted(terms, key=lambda t: (-sum(t[0]), tuple(-e for e in reversed(t[0])))):
        if not c:
            continue
        mono = "*".join(
            (n if e == 1 else f"{n}^{e}") for n, e in zip(names, exps) if e
        )
        mag = abs(c)
        s = "-" if c < 0 else "+"
        if mono:
            body = mono if mag == 1 else f"{_fmt_scalar(mag)}*{mono}"
        else:
            body = _fmt_scalar(mag)
        parts.append((s, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


# ---------------------------------------------------------------------------
# integer kernels


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (piv * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def sylvester(f: Sequence, g: Sequence, df: int | None = None, dg: int | None = None) -> list[list]:
    """Sylvester matrix of coefficient lists (low degree first) with formal degrees."""
    df = len(f) - 1 if df is None else df
    dg = len(g) - 1 if dg is None else dg
    fc = [f[i] if i < len(f) else 0 for i in range(df + 1)][::-1]
    gc = [g[i] if i < len(g) else 0 for i in range(dg + 1)][::-1]
    n = df + dg
    rows = []
    for i in range(dg):
        rows.append([0] * i + fc + [0] * (n - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gc + [0] * (n - dg - 1 - i))
    return rows


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def euclid_resultant(f: Sequence, g: Sequence, df: int | None = None, dg: int | None = None) -> Fraction:
    """Sylvester resultant with formal degrees, by the remainder sequence over Q."""
    a = _trim([_frac(c) for c in f])
    b = _trim([_frac(c) for c in g])
    m = len(a) - 1 if df is None else df
    n = len(b) - 1 if dg is None else dg
    ma, nb = len(a) - 1, len(b) - 1
    if ma < 0:
        return (b[0] if b else Fraction(0)) ** m if n == 0 else Fraction(0)
    if nb < 0:
        return a[0] ** n if m == 0 else Fraction(0)
    if ma < m and nb < n:
        return Fraction(0)
    scale = Fraction(1)
    # a formal degree above the actual one contributes a power of the other leading coefficient
    if ma < m:
        scale = (-1) ** ((m - ma) * n) * b[-1] ** (m - ma)
    elif nb < n:
        scale = a[-1] ** (n - nb)
    acc = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return scale * acc * b[0] ** da
        # r = a mod b
        r = a[:]
        lb = b[-1]
        for k in range(da - db, -1, -1):
            q = r[k + db] / lb
            if q:
                for j in range(db + 1):
                    r[k + j] -= q * b[j]
        r = _trim(r[:db])
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        if (da * db) % 2:
            acc = -acc
        acc *= lb ** (da - dr)
        a, b = b, r


def _scalar_resultant(f: Sequence[Fraction], g: Sequence[Fraction], df: int, dg: int) -> Fraction:
    if df == 0 and dg == 0:
        return Fraction(1)
    if df < 0 or dg < 0:
        return Fraction(0)
    return euclid_resultant(f, g, df, dg)


def bareiss_resultant(f: Sequence[Fraction], g: Sequence[Fraction], df: int, dg: int) -> Fraction:
    """Sylvester determinant by fraction-free elimination after clearing denominators."""
    if df == 0 and dg == 0:
        return Fraction(1)
    if df < 0 or dg < 0:
        return Fraction(0)
    fl = [_frac(c) for c in f]
    gl = [_frac(c) for c in g]
    sf = reduce(_lcm, (c.denominator for c in fl), 1)
    sg = reduce(_lcm, (c.denominator for c in gl), 1)
    fi = [int(c * sf) for c in fl]
    gi = [int(c * sg) for c in gl]
    d = bareiss_det(sylvester(fi, gi, df, dg))
    return Fraction(d, sf**dg * sg**df)


def newton_interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction], var: str = "x") -> UniPoly:
    n = len(xs)
    coef = [_frac(y) for y in ys]
    xs = [_frac(x) for x in xs]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = UniPoly([coef[-1]], var) if n else UniPoly([], var)
    for i in range(n - 2, -1, -1):
        out = out * UniPoly([-xs[i], 1], var) + coef[i]
    return out


# ---------------------------------------------------------------------------
# gcd, square-free, Sturm


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd (zero if both are zero)."""
    a, b = f.primitive(), g.primitive()
    while b:
        _, r = divmod(a, b)
        a, b = b, r.primitive()
    return a.monic()


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.degree <= 0:
        return f.monic()
    return f.exact_div(gcd(f, f.deriv())).monic()


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: f = c * prod a_i^i for monic square-free, pairwise coprime a_i."""
    out: list[tuple[UniPoly, int]] = []
    if f.degree <= 0:
        return out
    fp = f.deriv()
    a0 = gcd(f, fp)
    b = f.exact_div(a0)
    c = fp.exact_div(a0)
    d = c - b.deriv()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.deriv()
        i += 1
    return out


def root_multiplicity(f: UniPoly, g: UniPoly) -> int:
    """Largest m with g^m | f (g non-constant)."""
    m = 0
    while True:
        q, r = divmod(f, g)
        if r or f.is_zero():
            return m
        f, m = q, m + 1


def _prim(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    if g == 0:
        return a
    return [x // g for x in a]


def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    """Sturm chain with integer coefficients, positive rescalings only."""
    f0 = f.primitive()
    if f0.degree <= 0:
        return [f0]
    seq = [[int(c) for c in f0.coeffs], [int(c) for c in f0.deriv().primitive().coeffs]]
    while len(seq[-1]) > 1:
        a, b = seq[-2], seq[-1]
        lb = b[-1]
        steps = len(a) - len(b) + 1
        r = list(a)
        db = len(b) - 1
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            r = [x * lb for x in r]
            if c:
                for j, bj in enumerate(b):
                    r[i - db + j] -= c * bj
            r.pop()
        r = _strip(r)
        # r = lb^steps * (a mod b); want a positive multiple of -(a mod b)
        if lb < 0 and steps % 2 == 1:
            r = r
        else:
            r = [-x for x in r]
        if not r:
            break
        seq.append(_prim(r))
    return [UniPoly(s, f.var) for s in seq]


def _sign_at_fast(cs: Sequence[int], p: int, q: int) -> int:
    n = len(cs) - 1
    qpow = 1
    # Horner in p, lower terms pick up growing powers of q
    acc = int(cs[n])
    for i in range(n - 1, -1, -1):
        qpow *= q
        acc = acc * p + int(cs[i]) * qpow
    return (acc > 0) - (acc < 0)


def _variations(seq_int: list[list[int]], x: Fraction | None, at_inf: int = 0) -> int:
    signs = []
    for cs in seq_int:
        if x is None:
            lc = cs[-1]
            deg = len(cs) - 1
            s = (lc > 0) - (lc < 0)
            if at_inf < 0 and deg % 2 == 1:
                s = -s
        else:
            s = _sign_at_fast(cs, x.numerator, x.denominator)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class SturmChain:
    """Precomputed Sturm chain for repeated root counting."""

    def __init__(self, f: UniPoly):
        sf = squarefree_part(f) if f.degree > 0 else f
        self.poly = sf.primitive()
        self.seq_int = [[int(c) for c in p.coeffs] for p in sturm_sequence(self.poly)]

    def count(self, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
        """Distinct real roots in (lo, hi]; None means infinite."""
        if self.poly.degree <= 0:
            return 0
        va = _variations(self.seq_int, None if lo is None else _frac(lo), -1)
        vb = _variations(self.seq_int, None if hi is None else _frac(hi), +1)
        return va - vb

    def sign(self, x: Fraction) -> int:
        x = _frac(x)
        return _sign_at_fast(self.seq_int[0], x.numerator, x.denominator)


def sturm_count(f: UniPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of f in (lo, hi]."""
    return SturmChain(f).count(lo, hi)


@dataclass(frozen=True)
class Interval:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise PolyError("interval with lower > upper")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def mid(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def contains(self, x) -> bool:
        return self.lower <= x <= self.upper


def cauchy_bound(f: UniPoly) -> Fraction:
    lc = abs(f.lc)
    m = max((abs(c) for c in f.coeffs[:-1]), default=Fraction(0))
    b = 1 + m / lc
    # round up to a power of two to keep endpoints short
    p = 1
    while p < b:
        p *= 2
    return Fraction(p)


def _shrink_off_root(ch: "SturmChain", lo: Fraction, hi: Fraction) -> Interval:
    """Isolating interval for the single root in (lo, hi] whose ends are not roots."""
    while True:
        if ch.sign(hi) == 0:
            return Interval(hi, hi)
        if ch.sign(lo) != 0:
            return Interval(lo, hi)
        mid = (lo + hi) / 2
        if ch.count(mid, hi) == 1:
            lo = mid
        else:
            hi = mid


def isolate_real_roots(f: UniPoly, chain: SturmChain | None = None) -> list[Interval]:
    """Disjoint rational intervals, one per distinct real root, sorted increasingly.

    An interval is either degenerate (exact rational root) or has endpoints
    where the square-free part takes opposite nonzero signs.
    """
    if f.is_zero():
        raise PolyError("zero polynomial has no isolated roots")
    ch = chain or SturmChain(f)
    if ch.poly.degree <= 0:
        return []
    b = cauchy_bound(ch.poly)
    out: list[Interval] = []
    stack = [(-b, b, ch.count(-b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_shrink_off_root(ch, lo, hi))
            continue
        mid = (lo + hi) / 2
        nl = ch.count(lo, mid)
        stack.append((mid, hi, n - nl))
        stack.append((lo, mid, nl))
    out.sort(key=lambda iv: iv.lower)
    for i in range(1, len(out)):
        lo, hi = out[i].lower, out[i].upper
        while lo == out[i - 1].upper and lo < hi:
            mid = (lo + hi) / 2
            if ch.sign(mid) == 0 and ch.count(lo, mid) == 1:
                lo = hi = mid
            elif ch.count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        out[i] = Interval(lo, hi)
    return out


def refine_root(f: UniPoly | SturmChain, iv: Interval, width) -> Interval:
    """Bisect an isolating interval until its width is below ``width``."""
    ch = f if isinstance(f, SturmChain) else SturmChain(f)
    width = _frac(width) if not isinstance(width, float) else Fraction(width)
    lo, hi = iv.lower, iv.upper
    if lo == hi:
        return iv
    slo = ch.sign(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = ch.sign(mid)
        if sm == 0:
            return Interval(mid, mid)
        if slo != 0 and sm == slo:
            lo, slo = mid, sm
        elif slo == 0:
            # lo itself is outside (half-open); use counting
            if ch.count(lo, mid) == 1:
                hi = mid
            else:
                lo, slo = mid, sm
        else:
            hi = mid
    return Interval(lo, hi)


def real_roots(f: UniPoly, tol: float = 1e-12) -> list[float]:
    ch = SturmChain(f)
    return [float(refine_root(ch, iv, Fraction(tol))) for iv in isolate_real_roots(f, ch)]


def resultant_uni(f: UniPoly, g: UniPoly, df: int | None = None, dg: int | None = None) -> Fraction:
    df = f.degree if df is None else df
    dg = g.degree if dg is None else dg
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if df <= 0 and dg <= 0:
        raise PolyError("both inputs are constant in the eliminated variable")
    return _scalar_resultant(f.coeffs, g.coeffs, df, dg)


def discriminant_uni(f: UniPoly) -> Fraction:
    n = f.degree
    if n < 2:
        raise PolyError(f"discriminant needs degree at least 2, got {n}")
    r = resultant_uni(f, f.deriv(), n, n - 1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / f.lc


# ---------------------------------------------------------------------------
# bivariate


Exp = tuple[int, int]


class BiPoly:
    """Sparse polynomial in two named variables."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms: dict | Iterable = (), vars: tuple[str, str] = ("x", "y")):
        d: dict[Exp, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            c = _frac(c)
            if c:
                e = (int(e[0]), int(e[1]))
                d[e] = d.get(e, Fraction(0)) + c
                if not d[e]:
                    del d[e]
        self.terms = d
        self.vars = tuple(vars)
        if len(self.vars) != 2 or self.vars[0] == self.vars[1]:
            raise PolyError("BiPoly needs two distinct variable names")

    @classmethod
    def const(cls, c, vars=("x", "y")) -> "BiPoly":
        return cls({(0, 0): c}, vars)

    @classmethod
    def gen(cls, which: int | str, vars=("x", "y")) -> "BiPoly":
        i = vars.index(which) if isinstance(which, str) else which
        return cls({(1, 0) if i == 0 else (0, 1): 1}, vars)

    @classmethod
    def gens(cls, vars=("x", "y")) -> tuple["BiPoly", "BiPoly"]:
        return cls.gen(0, vars), cls.gen(1, vars)

    @classmethod
    def from_uni(cls, p: UniPoly, which: int, vars=("x", "y")) -> "BiPoly":
        return cls({((i, 0) if which == 0 else (0, i)): c for i, c in enumerate(p.coeffs)}, vars)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[UniPoly], var: int, vars=("x", "y")) -> "BiPoly":
        """sum coeffs[j] * vars[var]^j with coefficients in the other variable."""
        t = {}
        for j, cp in enumerate(coeffs):
            for i, c in enumerate(cp.coeffs):
                t[(j, i) if var == 0 else (i, j)] = c
        return cls(t, vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms and self.vars == other.vars
        if isinstance(other, (int, Fraction)):
            return self.terms == BiPoly.const(other, self.vars).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((frozenset(self.terms.items()), self.vars))

    def _lift(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.vars != self.vars:
                raise PolyError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return BiPoly.const(other, self.vars)

    def __add__(self, other) -> "BiPoly":
        other = self._lift(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            d[e] = d.get(e, Fraction(0)) + c
        return BiPoly(d, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            c = _frac(other)
            return BiPoly({e: c * v for e, v in self.terms.items()}, self.vars)
        other = self._lift(other)
        d: dict[Exp, Fraction] = {}
        for (a, b), c in self.terms.items():
            for (p, q), v in other.terms.items():
                k = (a + p, b + q)
                d[k] = d.get(k, Fraction(0)) + c * v
        return BiPoly(d, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        out, base = BiPoly.const(1, self.vars), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def degree(self, which: int | str | None = None) -> int:
        if not self.terms:
            return -1
        if which is None:
            return max(a + b for a, b in self.terms)
        i = self.vars.index(which) if isinstance(which, str) else which
        return max(e[i] for e in self.terms)

    total_degree = property(lambda self: self.degree(None))

    def coeffs_in(self, which: int | str) -> list[UniPoly]:
        """Coefficients of powers of ``which`` as polynomials in the other variable."""
        i = self.vars.index(which) if isinstance(which, str) else which
        other = self.vars[1 - i]
        n = self.degree(i)
        cols: list[dict[int, Fraction]] = [dict() for _ in range(n + 1)]
        for e, c in self.terms.items():
            cols[e[i]][e[1 - i]] = c
        out = []
        for col in cols:
            m = max(col, default=-1) + 1
            cs = [Fraction(0)] * m
            for k, c in col.items():
                cs[k] = c
            out.append(UniPoly(cs, other))
        return out

    def lc_in(self, which) -> UniPoly:
        return self.coeffs_in(which)[-1]

    def __call__(self, x, y):
        tot = 0
        for (a, b), c in self.terms.items():
            cc = c if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)) else _coerce_like(c, x + 0 * y)
            tot = tot + cc * x**a * y**b
        return tot

    def specialize(self, which: int | str, value) -> UniPoly:
        """Substitute an exact value for one variable."""
        i = self.vars.index(which) if isinstance(which, str) else which
        value = _frac(value)
        cs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            cs[e[1 - i]] = cs.get(e[1 - i], Fraction(0)) + c * value ** e[i]
        m = max(cs, default=-1) + 1
        return UniPoly([cs.get(k, 0) for k in range(m)], self.vars[1 - i])

    def diff(self, which: int | str) -> "BiPoly":
        i = self.vars.index(which) if isinstance(which, str) else which
        d = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = (e[0] - 1, e[1]) if i == 0 else (e[0], e[1] - 1)
                d[ne] = c * e[i]
        return BiPoly(d, self.vars)

    def substitute(self, x: "BiPoly", y: "BiPoly") -> "BiPoly":
        """f(x(.,.), y(.,.)) with both images in a common BiPoly ring."""
        vars_ = x.vars
        out = BiPoly({}, vars_)
        xp = [BiPoly.const(1, vars_)]
        yp = [BiPoly.const(1, vars_)]
        for _ in range(self.degree(0)):
            xp.append(xp[-1] * x)
        for _ in range(self.degree(1)):
            yp.append(yp[-1] * y)
        for (a, b), c in self.terms.items():
            out = out + xp[a] * yp[b] * c
        return out

    def linear_change(self, a, b, c, d, e=0, f=0, vars=None) -> "BiPoly":
        """f(a*X + b*Y + e, c*X + d*Y + f)."""
        vars = tuple(vars or self.vars)
        X, Y = BiPoly.gens(vars)
        return self.substitute(X * a + Y * b + e, X * c + Y * d + f)

    def swap(self) -> "BiPoly":
        return BiPoly({(b, a): c for (a, b), c in self.terms.items()}, self.vars)

    def rename(self, vars) -> "BiPoly":
        return BiPoly(self.terms, tuple(vars))

    def is_even_in(self, which) -> bool:
        i = self.vars.index(which) if isinstance(which, str) else which
        return all(e[i] % 2 == 0 for e in self.terms)

    def halve_exponent(self, which) -> "BiPoly":
        """Replace which^2 by which (requires evenness)."""
        i = self.vars.index(which) if isinstance(which, str) else which
        if not self.is_even_in(i):
            raise PolyError(f"not even in {self.vars[i]}")
        return BiPoly(
            {((a // 2, b) if i == 0 else (a, b // 2)): c for (a, b), c in self.terms.items()}, self.vars
        )

    def leading_term(self) -> tuple[Exp, Fraction]:
        """Graded order with y > x: total degree, then y exponent."""
        e = max(self.terms, key=lambda e: (e[0] + e[1], e[1], e[0]))
        return e, self.terms[e]

    def content(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        den = reduce(_lcm, (c.denominator for c in self.terms.values()), 1)
        num = reduce(math.gcd, (c.numerator for c in self.terms.values()), 0)
        return Fraction(num, den)

    def canonical(self) -> "BiPoly":
        """Primitive integer coefficients, positive leading term."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return self * (1 / c)

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[a, b, _fmt_scalar(c)] for (a, b), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BiPoly":
        vars_ = tuple(data["vars"])
        return cls({(int(a), int(b)): Fraction(c) for a, b, c in data["terms"]}, vars_)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        return _format_terms(list(self.terms.items()), self.vars)


# ---------------------------------------------------------------------------
# elimination


def sample_points(n: int) -> list[Fraction]:
    return [Fraction(i) for i in range(n)]


def interpolate_from(fn: Callable[[Fraction], Fraction], degree_bound: int, var: str) -> UniPoly:
    xs = sample_points(degree_bound + 1)
    return newton_interpolate(xs, [fn(x) for x in xs], var)


def resultant(f, g, eliminate: str | None = None):
    """Resultant of two polynomials.

    For ``UniPoly`` inputs the result is a scalar.  For ``BiPoly`` inputs the
    named variable is eliminated and the result is a ``UniPoly`` in the other
    one.  Formal degrees are the degrees in the eliminated variable.
    """
    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        return resultant_uni(f, g)
    if not (isinstance(f, BiPoly) and isinstance(g, BiPoly)):
        raise TypeError("resultant needs two UniPoly or two BiPoly")
    if f.vars != g.vars:
        raise PolyError("variable mismatch")
    if eliminate is None:
        eliminate = f.vars[1]
    i = f.vars.index(eliminate)
    other = f.vars[1 - i]
    df, dg = f.degree(i), g.degree(i)
    if f.is_zero() or g.is_zero():
        return UniPoly([], other)
    if df <= 0 and dg <= 0:
        raise PolyError(f"neither input involves {eliminate}")
    bound = dg * max(f.degree(1 - i), 0) + df * max(g.degree(1 - i), 0)
    fc, gc = f.coeffs_in(i), g.coeffs_in(i)

    def at(v: Fraction) -> Fraction:
        return _scalar_resultant([c(v) for c in fc], [c(v) for c in gc], df, dg)

    return interpolate_from(at, bound, other)


def discriminant(f, var: str | None = None):
    """(-1)^(n(n-1)/2) res(f, f') / lc(f) with n the degree in ``var``."""
    if isinstance(f, UniPoly):
        return discriminant_uni(f)
    if var is None:
        var = f.vars[1]
    i = f.vars.index(var)
    n = f.degree(i)
    if n < 2:
        raise PolyError(f"discriminant needs degree at least 2 in {var}, got {n}")
    r = resultant(f, f.diff(i), var)
    lc = f.lc_in(i)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return r.exact_div(lc) * sign


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]\w*)|(.))")


def parse_bipoly(text: str, vars: tuple[str, str] = ("x", "y")) -> BiPoly:
    """Parse an expression like '3(x^2+y^2)^2 - 32 x^3 - 1'; juxtaposition multiplies."""
    toks = []
    for num, name, sym in _TOKEN.findall(text.strip()):
        if num:
            toks.append(("num", Fraction(num)))
        elif name:
            if name not in vars:
                raise PolyError(f"unknown variable {name!r}")
            toks.append(("var", name))
        elif sym.strip():
            if sym not in "+-*^()":
                raise PolyError(f"unexpected character {sym!r}")
            toks.append((sym, sym))
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(kind=None):
        nonlocal pos
        if pos >= len(toks) or (kind and toks[pos][0] != kind):
            raise PolyError(f"parse error near token {pos} in {text!r}")
        pos += 1
        return toks[pos - 1]

    def expr() -> BiPoly:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()[0]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term() -> BiPoly:
        acc = factor()
        while peek() in ("*", "num", "var", "("):
            if peek() == "*":
                take()
            acc = acc * factor()
        return acc

    def factor() -> BiPoly:
        base = atom()
        if peek() == "^":
            take()
            e = take("num")[1]
            if e.denominator != 1:
                raise PolyError("exponent must be an integer")
            base = base ** int(e)
        return base

    def atom() -> BiPoly:
        kind = peek()
        if kind == "num":
            return BiPoly.const(take()[1], vars)
        if kind == "var":
            return BiPoly.gens(vars)[vars.index(take()[1])]
        if kind == "(":
            take()
            e = expr()
            take(")")
            return e
        raise PolyError(f"parse error near token {pos} in {text!r}")

    out = expr()
    if pos != len(toks):
        raise PolyError(f"trailing input in {text!r}")
    return out
