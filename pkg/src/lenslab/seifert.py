"""
Genus zero Seifert fibered spaces M(0,0; b1/a1, ..., br/ar).

Only what the surgery pipeline needs: the Euler number, |H_1|, Lescop's
formula for the Casson-Walker invariant, the three-fiber L-space test, and the
Seifert model of surgery on the simple knot of winding number k in L(n, 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .exactmath import (
    DegenerateSurgeryError,
    DomainError,
    NotQHSError,
    dedekind_fast,
    sign,
)
from .lens import LensSpace


@dataclass(frozen=True)
class SeifertData:
    fibers: tuple  # ((a1, b1), (a2, b2), ...)

    def __post_init__(self):
        for a, b in self.fibers:
            if a < 1 or gcd(a, b) != 1:
                raise DomainError(f"bad fiber {b}/{a}")

    @classmethod
    def from_fractions(cls, *fracs) -> "SeifertData":
        fibers = []
        for f in fracs:
            f = Fraction(f)
            fibers.append((f.denominator, f.numerator))
        return cls(tuple(fibers))

    def reverse(self) -> "SeifertData":
        # reversing the orientation negates every fiber invariant
        return SeifertData(tuple((a, -b) for a, b in self.fibers))

    def __str__(self):
        inner = ",".join(f"{b}/{a}" for a, b in self.fibers)
        return f"M(0,0;{inner})"


def euler_number(M: SeifertData) -> Fraction:
    return sum((Fraction(b, a) for a, b in M.fibers), Fraction(0))


def h1_order(M: SeifertData) -> int:
    e = euler_number(M)
    if e == 0:
        raise NotQHSError(f"{M} has e = 0")
    val = abs(e) * prod(a for a, _ in M.fibers)
    assert val.denominator == 1
    return int(val)


def _lescop(fibers) -> Fraction:
    e = sum((Fraction(b, a) for a, b in fibers), Fraction(0))
    if e == 0:
        raise NotQHSError("e = 0")
    r = len(fibers)
    P = prod(a for a, _ in fibers)
    h1 = abs(e) * P
    inv_sq = sum((Fraction(1, a * a) for a, _ in fibers), Fraction(0))
    ded = sum((dedekind_fast(b, a) for a, b in fibers), Fraction(0))
    inner = (sign(e) * (2 - r + inv_sq) / 24 + e * abs(e) / 24 - e / 8
             - abs(e) / 2 * ded)
    return inner * P / h1


def casson_walker_seifert(M: SeifertData) -> Fraction:
    """Lescop's formula.  Fibers with a = 1 must be absorbed by the caller."""
    if any(a == 1 for a, _ in M.fibers):
        raise DomainError(f"{M} has a fiber with a = 1")
    return _lescop(M.fibers)


def is_lspace_three_fibers(p1: int, p2: int, p3: int) -> bool:
    """Is M(0,0; 1/p1, 1/p2, -1/p3) an L-space?"""
    if min(p1, p2, p3) < 2:
        raise DomainError("three-fiber criterion needs p1, p2, p3 >= 2")
    lo, hi = min(p1, p2), max(p1, p2)
    return p3 >= lo or (p3 == lo - 1 and hi <= 2 * p3 + 1)


def surgery_model(n: int, k: int, m: int):
    """Space obtained by m-surgery on the simple knot of winding number k in L(n,1).

    Returns SeifertData M(0,0; 1/(n-k), 1/k, 1/(m-k)) when |m-k| >= 2 and the
    lens space L(nk-n-k^2, k-1) when m = k-1.
    """
    if not 2 <= k <= n // 2:
        raise DomainError(f"surgery model needs 2 <= k <= n/2, got n={n}, k={k}")
    if m == k:
        raise DegenerateSurgeryError(f"m = k = {k}: the third fiber degenerates")
    if m == k + 1:
        raise DegenerateSurgeryError("m = k+1 is outside the range the pipeline uses")
    if m == k - 1:
        p = n * k - n - k * k
        if p == 0:
            raise NotQHSError(f"n={n}, k={k}, m={m} gives H_1 infinite")
        return LensSpace.make(p, k - 1)
    d = m - k
    return SeifertData(((n - k, 1), (k, 1), (abs(d), sign(d))))


def is_lspace_surgery_model(n: int, k: int, m: int) -> bool:
    if not (k - m >= 3 and n - k >= k >= 2):
        raise DomainError(f"need k-m >= 3 and n-k >= k >= 2, got ({n}, {k}, {m})")
    return m <= 0 or (m == 1 and 3 * k >= n + 1)


@dataclass(frozen=True)
class CassonWalkerCheck:
    delta: Fraction
    h1: int

    @property
    def sign_ok(self) -> bool:
        return self.delta >= 0

    @property
    def scaled(self) -> Fraction:
        return self.h1 * self.delta

    @property
    def integral_ok(self) -> bool:
        return self.scaled.denominator == 1 and self.scaled >= 0

    def passes(self, strict: bool = False) -> bool:
        return self.sign_ok and (self.integral_ok or not strict)


def casson_walker_obstruction(lambda_target, lambda_model, h1: int) -> CassonWalkerCheck:
    """Delta lambda = lambda(target) - lambda(model) for a positive framing."""
    if h1 < 1:
        raise DomainError("h1 must be a positive integer")
    return CassonWalkerCheck(Fraction(lambda_target) - Fraction(lambda_model), h1)
