"""Braid monodromy of affine curves f(x, y) = 0 monic in y.

Two routes produce the same record:

* ``braid_monodromy`` follows the fiber roots numerically around polygonal loops;
* ``totally_real_monodromy`` reads the braids off the real picture, for curves
  whose discriminant points and nearby fibers are real.

Loops start at a rational basepoint on the real axis, run along it, pass
*below* every real discriminant point on the way and circle their target
counterclockwise.  Strands are numbered 1..d by decreasing real part at the
base fiber; a positive letter s_i is the counterclockwise half twist of the
roots in positions i and i+1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from scipy.optimize import linear_sum_assignment

from .braid import BraidWord, braid_equal, half_twist, trace_normal_form
from .poly import (
    BiPoly,
    Interval,
    SturmChain,
    UniPoly,
    discriminant,
    isolate_real_roots,
    refine_root,
    squarefree_decomposition,
)


class MonodromyError(RuntimeError):
    pass


class TrackingError(MonodromyError):
    pass


@dataclass(frozen=True)
class TrackConfig:
    tilt: float = 1e-3  # projection direction, radians
    initial_steps: int = 256
    min_step: float = 1e-14
    separation_factor: float = 4.0
    loop_fraction: float = 0.5  # loop half-size over distance to the nearest other NT point
    max_steps: int = 2_000_000


@dataclass(frozen=True)
class NTPoint:
    value: complex
    multiplicity: int
    interval: Interval | None = None  # rational isolating interval for real points
    factor: UniPoly | None = field(default=None, compare=False, repr=False)

    @property
    def is_real(self) -> bool:
        return self.interval is not None


@dataclass(frozen=True)
class FiberGeometry:
    f: BiPoly
    d: int
    disc: UniPoly
    nt: tuple[NTPoint, ...]
    basepoint: Fraction

    @property
    def real_nt(self) -> list[NTPoint]:
        return [p for p in self.nt if p.is_real]


@dataclass(frozen=True)
class MonodromyRecord:
    d: int
    basepoint: Fraction
    nt: tuple[complex, ...]
    braids: tuple[BraidWord, ...]
    method: str = "numeric"

    @property
    def exponent_sum(self) -> int:
        return sum(b.exponent_sum for b in self.braids)

    def to_json(self) -> dict:
        def enc(z: complex):
            z = complex(z)
            return z.real if z.imag == 0 else [z.real, z.imag]

        return {
            "d": self.d,
            "basepoint": str(self.basepoint),
            "nt": [enc(z) for z in self.nt],
            "braids": [b.to_json() for b in self.braids],
            "method": self.method,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonodromyRecord":
        d = data["d"]
        nt = tuple(complex(*z) if isinstance(z, list) else complex(z) for z in data["nt"])
        braids = tuple(BraidWord(d, tuple(b)) for b in data["braids"])
        return cls(d, Fraction(data["basepoint"]), nt, braids, data.get("method", "numeric"))

    def agrees_with(self, other: "MonodromyRecord") -> bool:
        if self.d != other.d or len(self.braids) != len(other.braids):
            return False
        return all(braid_equal(a, b) for a, b in zip(self.braids, other.braids))


# ---------------------------------------------------------------------------
# fibers


def monic_normalize(f: BiPoly) -> BiPoly:
    lc = f.lc_in(1)
    if lc.degree != 0:
        raise MonodromyError(
            "curve is not monic in y; apply shear(f, lam) for a small integer lam first"
        )
    return f * (1 / lc.coeff(0))


def shear(f: BiPoly, lam: int) -> BiPoly:
    """f(x, y + lam*x)."""
    X, Y = BiPoly.gens(f.vars)
    return f.substitute(X, Y + X * lam)


def _nt_points(disc: UniPoly) -> list[NTPoint]:
    pts: list[NTPoint] = []
    mpmath.mp.dps = 50
    for factor, mult in squarefree_decomposition(disc):
        chain = SturmChain(factor)
        ivs = isolate_real_roots(factor, chain)
        reals = []
        for iv in ivs:
            iv = refine_root(chain, iv, Fraction(1, 10**30))
            reals.append(iv)
            pts.append(NTPoint(complex(float(iv.mid)), mult, iv, factor))
        if len(ivs) < factor.degree:
            cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(factor.coeffs)]
            for r in mpmath.polyroots(cs, maxsteps=500, extraprec=500):
                if abs(mpmath.im(r)) > 1e-20:
                    pts.append(NTPoint(complex(r), mult, None, factor))
    pts.sort(key=lambda p: (p.value.real, p.value.imag))
    return pts


def choose_basepoint(nt: Sequence[NTPoint]) -> Fraction:
    if not nt:
        return Fraction(0)
    return Fraction(math.ceil(max(p.value.real for p in nt)) + 2)


def analyze_fibers(f: BiPoly, basepoint: Fraction | int | str | None = None) -> FiberGeometry:
    f = monic_normalize(f)
    d = f.degree(1)
    if d < 1:
        raise MonodromyError("curve has no y-dependence")
    disc = discriminant(f, f.vars[1]) if d > 1 else UniPoly([1], f.vars[0])
    if disc.is_zero():
        raise MonodromyError("discriminant vanishes identically: f is not square-free")
    nt = _nt_points(disc) if disc.degree > 0 else []
    bp = Fraction(basepoint) if basepoint is not None else choose_basepoint(nt)
    for p in nt:
        if p.is_real and p.interval.contains(bp):
            raise MonodromyError(f"basepoint {bp} is a discriminant point")
    return FiberGeometry(f, d, disc, tuple(nt), bp)


# ---------------------------------------------------------------------------
# numeric tracking


class _Fiber:
    """Fast complex evaluation of y-coefficients."""

    def __init__(self, f: BiPoly):
        cols = f.coeffs_in(1)
        self.d = len(cols) - 1
        width = max(c.degree for c in cols) + 1
        mat = np.zeros((self.d + 1, max(width, 1)), dtype=complex)
        for j, c in enumerate(cols):
            for i, a in enumerate(c.coeffs):
                mat[j, i] = float(a)
        self.mat = mat  # mat[j, i]: coefficient of x^i y^j

    def roots(self, x: complex) -> np.ndarray:
        powers = x ** np.arange(self.mat.shape[1])
        coeffs = self.mat @ powers  # low -> high in y
        return np.roots(coeffs[::-1])


def _proj(y: np.ndarray, tilt: float) -> np.ndarray:
    return (y * complex(math.cos(tilt), -math.sin(tilt))).real


def _perp(y: np.ndarray, tilt: float) -> np.ndarray:
    return (y * complex(math.cos(tilt), -math.sin(tilt))).imag


def _match(prev: np.ndarray, new: np.ndarray) -> np.ndarray:
    cost = np.abs(prev[:, None] - new[None, :])
    _, cols = linear_sum_assignment(cost)
    return new[cols]


def _min_sep(y: np.ndarray) -> float:
    if len(y) < 2:
        return math.inf
    diff = np.abs(y[:, None] - y[None, :])
    np.fill_diagonal(diff, np.inf)
    return float(diff.min())


def track_path(
    fiber: _Fiber, vertices: Sequence[complex], config: TrackConfig = TrackConfig()
) -> tuple[BraidWord, tuple[int, ...]]:
    """Follow the roots along a closed polyline; return the braid and the root permutation."""
    d = fiber.d
    tilt = config.tilt
    roots = fiber.roots(vertices[0])
    start = roots.copy()
    order = list(np.argsort(-_proj(roots, tilt)))  # order[pos] = strand id
    letters: list[int] = []
    perimeter = sum(abs(b - a) for a, b in zip(vertices, vertices[1:]))
    h0 = perimeter / config.initial_steps
    steps = 0
    for a, b in zip(vertices, vertices[1:]):
        length = abs(b - a)
        if length == 0:
            continue
        tau = 0.0
        h = min(1.0, h0 / length)
        while tau < 1.0:
            step = min(h, 1.0 - tau)
            z = a + (b - a) * (tau + step)
            new = _match(roots, fiber.roots(z))
            motion = float(np.max(np.abs(new - roots)))
            sep = min(_min_sep(new), _min_sep(roots))
            if sep < config.separation_factor * motion:
                h = step / 2
                if h * length < config.min_step:
                    raise TrackingError(f"step collapse near x = {z}; refine the loop")
                continue
            events = _crossings(roots, new, order, tilt)
            if events is None:
                h = step / 2
                if h * length < config.min_step:
                    raise TrackingError(f"unresolved crossings near x = {z}")
                continue
            letters.extend(events)
            roots = new
            tau += step
            h = min(1.0, step * 1.5)
            steps += 1
            if steps > config.max_steps:
                raise TrackingError("step budget exhausted")
    # identify final roots with the starting fiber
    cost = np.abs(start[:, None] - roots[None, :])
    _, to_start = linear_sum_assignment(cost.T)  # roots[s] sits where start[to_start[s]] was
    # position bookkeeping: strand s started at position pos0[s]
    pos0 = {int(sid): p for p, sid in enumerate(np.argsort(-_proj(start, tilt)))}
    perm = [0] * d
    for s in range(d):
        perm[pos0[s]] = pos0[int(to_start[s])]
    word = BraidWord(d, tuple(letters))
    if tuple(perm) != word.permutation():
        raise MonodromyError("tracked permutation disagrees with the braid word")
    return word, tuple(perm)


def _crossings(prev: np.ndarray, new: np.ndarray, order: list[int], tilt: float) -> list[int] | None:
    """Letters for the projection-order changes between two consecutive fibers.

    ``order`` (position -> strand id) is updated in place on success.
    """
    p0, p1 = _proj(prev, tilt), _proj(new, tilt)
    q0, q1 = _perp(prev, tilt), _perp(new, tilt)
    d = len(prev)
    events = []
    for a in range(d):
        for b in range(a + 1, d):
            s0 = p0[a] - p0[b]
            s1 = p1[a] - p1[b]
            if s0 == 0 or s1 == 0:
                return None
            if (s0 > 0) != (s1 > 0):
                lam = s0 / (s0 - s1)
                events.append((lam, a, b))
    events.sort()
    work = list(order)
    letters = []
    for lam, a, b in events:
        ia, ib = work.index(a), work.index(b)
        if abs(ia - ib) != 1:
            return None
        i = min(ia, ib)
        right = work[i]  # strand leaving position i for i+1
        other = work[i + 1]
        qr = q0[right] + lam * (q1[right] - q0[right])
        qo = q0[other] + lam * (q1[other] - q0[other])
        if qr == qo:
            return None
        letters.append((i + 1) if qr > qo else -(i + 1))
        work[i], work[i + 1] = other, right
    # consistency with the new projection order
    if [int(s) for s in np.argsort(-p1)] != work:
        return None
    order[:] = work
    return letters


# ---------------------------------------------------------------------------
# loops


def _radius(p: NTPoint, nt: Sequence[NTPoint], frac: float) -> float:
    others = [abs(q.value - p.value) for q in nt if q is not p]
    return frac * min(others) if others else 1.0


def _real_run(x0: float, x1: float, nt: Sequence[NTPoint], radii: dict[int, float], skip: NTPoint | None):
    """Waypoints along the real axis from x0 to x1, passing below real NT points."""
    pts: list[complex] = [complex(x0)]
    going_left = x1 < x0
    passed = [
        (i, p)
        for i, p in enumerate(nt)
        if p.is_real and p is not skip and min(x0, x1) < p.value.real < max(x0, x1)
    ]
    passed.sort(key=lambda ip: -ip[1].value.real if going_left else ip[1].value.real)
    for i, p in passed:
        c, r = p.value.real, radii[i]
        near, far = (c + r, c - r) if going_left else (c - r, c + r)
        pts += [complex(near), complex(near, -r), complex(far, -r), complex(far)]
    pts.append(complex(x1))
    return pts


def _square(center: complex, r: float, entry: str) -> list[complex]:
    """Counterclockwise square starting and ending at the midpoint of the entry side."""
    c = center
    ring = {
        "right": [c + r, c + r + 1j * r, c - r + 1j * r, c - r - 1j * r, c + r - 1j * r, c + r],
        "left": [c - r, c - r - 1j * r, c + r - 1j * r, c + r + 1j * r, c - r + 1j * r, c - r],
        "bottom": [c - 1j * r, c + r - 1j * r, c + r + 1j * r, c - r + 1j * r, c - r - 1j * r, c - 1j * r],
        "top": [c + 1j * r, c - r + 1j * r, c - r - 1j * r, c + r - 1j * r, c + r + 1j * r, c + 1j * r],
    }
    return ring[entry]


def loop_vertices(geom: FiberGeometry, index: int, config: TrackConfig = TrackConfig()) -> list[complex]:
    nt = geom.nt
    radii = {i: _radius(p, nt, config.loop_fraction) for i, p in enumerate(nt)}
    p = nt[index]
    r = radii[index]
    b = float(geom.basepoint)
    c = p.value
    if p.is_real:
        entry_x = c.real + r if c.real < b else c.real - r
        out = _real_run(b, entry_x, nt, radii, p)
        ring = _square(c, r, "right" if c.real < b else "left")
    else:
        out = _real_run(b, c.real, nt, radii, None)
        if c.imag > 0:
            out.append(complex(c.real, c.imag - r))
            ring = _square(c, r, "bottom")
        else:
            out.append(complex(c.real, c.imag + r))
            ring = _square(c, r, "top")
    _check_clearance(out + ring, nt, index, radii)
    path = out + ring[1:] + out[::-1][1:]
    # drop repeated vertices
    clean = [path[0]]
    for z in path[1:]:
        if abs(z - clean[-1]) > 0:
            clean.append(z)
    return clean


def _segment_distance(a: complex, b: complex, p: complex) -> float:
    ab = b - a
    if ab == 0:
        return abs(p - a)
    t = max(0.0, min(1.0, ((p - a) * ab.conjugate()).real / abs(ab) ** 2))
    return abs(a + t * ab - p)


def _check_clearance(pts: Sequence[complex], nt: Sequence[NTPoint], index: int, radii) -> None:
    for j, q in enumerate(nt):
        margin = 0.25 * radii[j]
        for a, b in zip(pts, pts[1:]):
            if _segment_distance(a, b, q.value) < max(margin, 1e-6):
                raise MonodromyError(
                    f"loop {index} passes within {margin:.2e} of the discriminant point {q.value:.6g}; "
                    "choose another basepoint"
                )


def track_loop(geom: FiberGeometry, index: int, config: TrackConfig = TrackConfig()) -> BraidWord:
    word, _ = track_path(_Fiber(geom.f), loop_vertices(geom, index, config), config)
    return BraidWord(geom.d, _free(word.letters))


def _free(letters: Sequence[int]) -> tuple[int, ...]:
    from .braid import free_reduce

    return free_reduce(letters)


def braid_monodromy(
    f: BiPoly, basepoint=None, config: TrackConfig = TrackConfig(), geom: FiberGeometry | None = None
) -> MonodromyRecord:
    geom = geom or analyze_fibers(f, basepoint)
    fiber = _Fiber(geom.f)
    braids = []
    for i in range(len(geom.nt)):
        word, _ = track_path(fiber, loop_vertices(geom, i, config), config)
        braids.append(BraidWord(geom.d, _free(word.letters)))
    return MonodromyRecord(geom.d, geom.basepoint, tuple(p.value for p in geom.nt), tuple(braids), "numeric")


# ---------------------------------------------------------------------------
# the real picture


@dataclass(frozen=True)
class RealPicture:
    """Exact sample abscissae between consecutive real NT points and their real-root counts."""

    points: tuple[NTPoint, ...]
    samples: tuple[Fraction, ...]  # len(points) + 1, samples[i] < points[i] < samples[i+1]
    real_counts: tuple[int, ...]


@dataclass(frozen=True)
class TotallyRealWitness:
    totally_real: bool
    reason: str
    picture: RealPicture | None = None
    real_sides: tuple[bool, bool] = (False, False)  # left / right unbounded interval fully real


def _separating_samples(points: Sequence[NTPoint]) -> list[Fraction]:
    ivs = [p.interval for p in points]
    out = [ivs[0].lower - 1]
    for a, b in zip(ivs, ivs[1:]):
        if not a.upper < b.lower:
            raise MonodromyError("isolating intervals overlap")
        out.append(_simple_between(a.upper, b.lower))
    out.append(ivs[-1].upper + 1)
    return out


def _simple_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A short rational strictly inside (lo, hi)."""
    den = 1
    while True:
        n = math.floor(lo * den) + 1
        if Fraction(n, den) < hi:
            return Fraction(n, den)
        den *= 2


def real_picture(geom: FiberGeometry) -> RealPicture:
    pts = geom.real_nt
    if not pts:
        samples = [Fraction(0)]
    else:
        samples = _separating_samples(pts)
    counts = []
    for s in samples:
        fib = geom.f.specialize(0, s)
        counts.append(SturmChain(fib).count())
    return RealPicture(tuple(pts), tuple(samples), tuple(counts))


def is_totally_real(f: BiPoly) -> TotallyRealWitness:
    geom = analyze_fibers(f)
    if any(not p.is_real for p in geom.nt):
        n = sum(1 for p in geom.nt if not p.is_real)
        return TotallyRealWitness(False, f"{n} non-real discriminant points")
    pic = real_picture(geom)
    d = geom.d
    inner = pic.real_counts[1:-1]
    if any(c != d for c in inner):
        bad = [i for i, c in enumerate(inner) if c != d]
        return TotallyRealWitness(False, f"non-real fiber roots between NT points {bad}", pic)
    sides = (pic.real_counts[0] == d, pic.real_counts[-1] == d)
    if not any(sides):
        return TotallyRealWitness(False, "neither unbounded side has a real fiber", pic, sides)
    return TotallyRealWitness(True, "all discriminant points and fibers between them are real", pic, sides)


@dataclass(frozen=True)
class Cluster:
    first: int  # 1-based position of the top strand
    size: int
    exponent: int  # local braid s^exponent for two strands; k(k-1) marks an ordinary k-fold point

    def local(self, d: int) -> BraidWord:
        if self.size == 2:
            return BraidWord(d, (self.first,) * self.exponent)
        full = half_twist(d, self.first, self.size)
        return full * full

    def passage(self, d: int, sign: int) -> BraidWord:
        """Half of the local braid, travelled below the point: sign -1 leftwards, +1 rightwards."""
        if self.size == 2:
            if self.exponent % 2:
                raise MonodromyError("cannot pass a point with an odd local braid on the real axis")
            m = self.exponent // 2
            return BraidWord(d, (sign * self.first,) * m)
        return half_twist(d, self.first, self.size, sign)

    @property
    def disc_contribution(self) -> int:
        return self.exponent if self.size == 2 else self.size * (self.size - 1)


def _high_precision_point(p: NTPoint, digits: int = 60) -> mpmath.mpf:
    iv = refine_root(SturmChain(p.factor), p.interval, Fraction(1, 10**digits))
    return mpmath.mpf(iv.mid.numerator) / iv.mid.denominator


def _fiber_roots_mp(f: BiPoly, x) -> list:
    cols = f.coeffs_in(1)
    cs = []
    for c in reversed(cols):
        acc = mpmath.mpf(0)
        for a in reversed(c.coeffs):
            acc = acc * x + mpmath.mpf(a.numerator) / a.denominator
        cs.append(acc)
    return mpmath.polyroots(cs, maxsteps=800, extraprec=800)


def local_clusters(geom: FiberGeometry, p: NTPoint, side: int) -> list[Cluster]:
    """Colliding strand groups at p, seen from the fiber on the given side (+1 right, -1 left)."""
    with mpmath.workdps(160):
        c = _high_precision_point(p)
        deltas = [mpmath.mpf(10) ** -12, mpmath.mpf(10) ** -16]
        fibers = []
        for dl in deltas:
            roots = _fiber_roots_mp(geom.f, c + side * dl)
            if any(abs(mpmath.im(r)) > mpmath.mpf(10) ** -100 for r in roots):
                raise MonodromyError(f"fiber next to x = {float(c):.6g} is not real on side {side}")
            fibers.append(sorted((mpmath.re(r) for r in roots), reverse=True))
        d = geom.d
        slopes = []
        for i in range(d - 1):
            g1 = fibers[0][i] - fibers[0][i + 1]
            g2 = fibers[1][i] - fibers[1][i + 1]
            slopes.append(float(mpmath.log(g2 / g1) / mpmath.log(deltas[1] / deltas[0])))
    clusters: list[Cluster] = []
    i = 0
    while i < d - 1:
        if slopes[i] < 0.25:
            i += 1
            continue
        j = i
        while j < d - 1 and slopes[j] >= 0.25:
            j += 1
        run = slopes[i:j]
        if len(run) == 1:
            e = round(2 * run[0])
            if abs(2 * run[0] - e) > 0.05:
                raise MonodromyError(f"non-integral local exponent {2 * run[0]:.3f} at x = {p.value.real:.6g}")
            clusters.append(Cluster(i + 1, 2, e))
        else:
            if any(abs(s - 1) > 0.05 for s in run):
                raise MonodromyError(
                    f"unsupported singularity with {len(run) + 1} strands at x = {p.value.real:.6g} (slopes {run})"
                )
            clusters.append(Cluster(i + 1, len(run) + 1, 0))
        i = j
    total = sum(cl.disc_contribution for cl in clusters)
    if total != p.multiplicity:
        raise MonodromyError(
            f"local braids at x = {p.value.real:.6g} account for {total} of discriminant multiplicity {p.multiplicity}"
        )
    return clusters


def totally_real_monodromy(f: BiPoly, basepoint=None, geom: FiberGeometry | None = None) -> MonodromyRecord:
    geom = geom or analyze_fibers(f, basepoint)
    w = is_totally_real(geom.f)
    if not w.totally_real:
        raise MonodromyError(f"curve is not totally real: {w.reason}")
    d = geom.d
    b = float(geom.basepoint)
    pts = list(geom.nt)
    # the base fiber itself must be real
    base_count = SturmChain(geom.f.specialize(0, geom.basepoint)).count()
    if base_count != d:
        raise MonodromyError(f"base fiber at {geom.basepoint} has only {base_count} real roots")
    facing = {}
    for idx, p in enumerate(pts):
        side = 1 if p.value.real < b else -1
        facing[idx] = local_clusters(geom, p, side)
    braids = []
    for idx, p in enumerate(pts):
        left = p.value.real < b
        between = [
            j for j, q in enumerate(pts) if (q.value.real < b and q.value.real > p.value.real) or (q.value.real > b and q.value.real < p.value.real)
        ]
        between.sort(key=lambda j: -pts[j].value.real if left else pts[j].value.real)
        H = BraidWord(d)
        for j in between:
            for cl in facing[j]:
                H = H * cl.passage(d, -1 if left else 1)
        L = BraidWord(d)
        for cl in facing[idx]:
            L = L * cl.local(d)
        braids.append(BraidWord(d, _free((H * L * H.inverse()).letters)))
    return MonodromyRecord(d, geom.basepoint, tuple(p.value for p in pts), tuple(braids), "real-picture")


def normal_forms(rec: MonodromyRecord) -> list[tuple[int, ...]]:
    return [trace_normal_form(b.letters) for b in rec.braids]


def strand_components(factors: Sequence[BiPoly], basepoint) -> list[int]:
    """For each base-fiber position (1 = top), the index of the factor through that strand."""
    prod = factors[0]
    for g in factors[1:]:
        prod = prod * g
    with mpmath.workdps(60):
        x = mpmath.mpf(Fraction(basepoint).numerator) / Fraction(basepoint).denominator
        roots = _fiber_roots_mp(prod, x)
        if any(abs(mpmath.im(r)) > mpmath.mpf(10) ** -30 for r in roots):
            raise MonodromyError(f"base fiber at {basepoint} is not real")
        out = []
        for r in sorted((mpmath.re(r) for r in roots), reverse=True):
            vals = []
            for g in factors:
                col = [c(x) for c in g.coeffs_in(1)]
                v = mpmath.polyval(col[::-1], r)
                scale = sum(abs(c) * (abs(r) + 1) ** j for j, c in enumerate(col))
                vals.append(abs(v) / scale)
            best = min(range(len(factors)), key=lambda i: vals[i])
            out.append(best)
    return out
