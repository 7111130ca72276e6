"""Chebyshev families T, U, W and the identities behind the critical-point analysis."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import Interval, SturmChain, UniPoly, isolate_real_roots

SEEDS = {
    "T": ((1,), (0, 1)),
    "U": ((1,), (0, 2)),
    "W": ((1,), (1, 2)),
}

TAGS = ("sumU-even", "shift-even", "diffU-even", "diffT-odd", "leadP", "leadQ")


class ChebyshevError(ValueError):
    pass


@lru_cache(maxsize=None)
def _cheb(kind: str, n: int) -> UniPoly:
    if kind not in SEEDS:
        raise ChebyshevError(f"unknown family {kind!r}")
    if n < 0:
        if kind == "U" and n == -1:
            return UniPoly([])
        raise ChebyshevError(f"negative index {n} for {kind}")
    s0, s1 = SEEDS[kind]
    if n == 0:
        return UniPoly(s0)
    if n == 1:
        return UniPoly(s1)
    two_x = UniPoly([0, 2])
    return two_x * _cheb(kind, n - 1) - _cheb(kind, n - 2)


def cheb(kind: str, n: int) -> UniPoly:
    """p_n with p_{n+1} = 2x p_n - p_{n-1}; U_{-1} = 0."""
    return _cheb(kind, n)


def T(n: int) -> UniPoly:
    return _cheb("T", n)


def U(n: int) -> UniPoly:
    return _cheb("U", n)


def W(n: int) -> UniPoly:
    return _cheb("W", n)


def w_trig_residual(n: int, samples: int = 16) -> float:
    """max |W_n(cos t) - sin((n+1/2)t)/sin(t/2)| over a grid in (0, pi)."""
    worst = 0.0
    p = W(n)
    for i in range(1, samples + 1):
        t = math.pi * i / (samples + 1)
        ref = math.sin((n + 0.5) * t) / math.sin(t / 2)
        worst = max(worst, abs(float(p(Fraction(math.cos(t)))) - ref))
    return worst


def cheb_zero_count(kind: str, n: int) -> tuple[int, list[Interval]]:
    """Real zeros of p_n, certified to lie in (-1, 1)."""
    if n < 1:
        raise ChebyshevError("need n >= 1")
    p = cheb(kind, n)
    ch = SturmChain(p)
    total, inside = ch.count(), ch.count(-1, 1) - (1 if ch.sign(1) == 0 else 0)
    if ch.sign(-1) == 0 or total != n or inside != n:
        raise ChebyshevError(f"{kind}_{n}: {total} real zeros, {inside} strictly inside (-1, 1)")
    return total, isolate_real_roots(p, ch)


def P_poly(k: int, l: int, tilde: bool = False) -> UniPoly:
    return l * T(k) + (-k if tilde else k) * T(l)


def Q_poly(k: int, l: int, tilde: bool = False) -> UniPoly:
    return l * U(k - 1) + (k if tilde else -k) * U(l - 1)


@dataclass(frozen=True)
class ChebIdentity:
    tag: str
    k: int
    l: int

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ChebyshevError(f"unknown identity tag {self.tag!r}")
        if not (self.k > self.l >= 1) or math.gcd(self.k, self.l) != 1:
            raise ChebyshevError(f"need coprime k > l >= 1, got ({self.k}, {self.l})")
        even = (self.k + self.l) % 2 == 0
        if self.tag.endswith("-even") and not even:
            raise ChebyshevError(f"{self.tag} needs k + l even")
        if self.tag.endswith("-odd") and even:
            raise ChebyshevError(f"{self.tag} needs k + l odd")

    def sides(self) -> tuple[UniPoly, UniPoly]:
        k, l = self.k, self.l
        x = UniPoly.gen()
        if self.tag == "sumU-even":
            return U(k - 1) + U(l - 1), 2 * T((k - l) // 2) * U((k + l) // 2 - 1)
        if self.tag == "shift-even":
            return (T(k) - T(l)) + x * (U(k - 1) + U(l - 1)), U(k) + U(l - 2)
        if self.tag == "diffU-even":
            return U(k - 1) - U(l - 1), 2 * T((k + l) // 2) * U((k - l) // 2 - 1)
        if self.tag == "diffT-odd":
            # the factor is (x - 1); with (1 - x) the identity is off by a sign
            return T(k) - T(l), (x - 1) * W((k + l - 1) // 2) * W((k - l - 1) // 2)
        if self.tag == "leadP":
            return UniPoly([P_poly(k, l).lc]), UniPoly([2 ** (k - 1) * l])
        # U_{k-1} leads with 2^{k-1}, and U_{l-1} has lower degree
        return UniPoly([Q_poly(k, l).lc]), UniPoly([2 ** (k - 1) * l])


def verify_identity(tag: str, k: int, l: int) -> bool:
    lhs, rhs = ChebIdentity(tag, k, l).sides()
    return lhs == rhs


def applicable_tags(k: int, l: int) -> list[str]:
    even = (k + l) % 2 == 0
    return [t for t in TAGS if not (t.endswith("-even") and not even) and not (t.endswith("-odd") and even)]
