"""
Exact rational arithmetic and the small number theoretic kernels used by the
rest of the package.

Rationals are plain ``fractions.Fraction`` values.  They are always reduced
with a positive denominator, which is all we need.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

ExactRational = Fraction


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class DegenerateSurgeryError(DomainError):
    pass


class NotQHSError(DomainError):
    """The manifold is not a rational homology sphere."""


class IncomparableProfilesError(DomainError):
    pass


class ProfileParseError(DomainError):
    def __init__(self, lineno, msg):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def fmt(x) -> str:
    """Render a rational as 'num/den' (integers without a denominator)."""
    return str(Fraction(x))


def sign(x) -> int:
    return (x > 0) - (x < 0)


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    if a == 0 and b == 0:
        raise DomainError("gcd_ext(0, 0) is undefined")
    old_r, r = abs(a), abs(b)
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    # undo the absolute values
    if a < 0:
        old_x = -old_x
    if b < 0:
        old_y = -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo p, in [0, p)."""
    g, x, _ = gcd_ext(a, p)
    if g != 1:
        raise DomainError(f"{a} is not a unit modulo {p}")
    return x % abs(p)


@dataclass(frozen=True)
class HJExpansion:
    terms: tuple

    def evaluate(self) -> Fraction:
        val = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            val = a - 1 / val
        return val

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def hj_expansion(p: int, q: int) -> HJExpansion:
    """Hirzebruch-Jung expansion p/q = a1 - 1/(a2 - 1/(... - 1/ar))."""
    if not p > q > 0:
        raise DomainError(f"hj_expansion needs p > q > 0, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise DomainError(f"hj_expansion needs coprime input, got ({p}, {q})")
    terms = []
    while q:
        a = -(-p // q)
        terms.append(a)
        p, q = q, a * q - p
    return HJExpansion(tuple(terms))


def sawtooth(x) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_direct(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) straight from the definition, O(|p|)."""
    if p == 0:
        raise DomainError("dedekind sum with p = 0")
    if gcd(p, q) != 1:
        raise DomainError(f"dedekind sum needs gcd(p, q) = 1, got ({q}, {p})")
    a = abs(p)
    # ((k/a)) = (2k - a)/(2a) for 0 < k < a; accumulate numerators over 4a^2
    qq = q % a
    total = 0
    for k in range(1, a):
        r = k * qq % a
        if r:
            total += (2 * k - a) * (2 * r - a)
    # ((x/p)) for p < 0 flips the sign of both factors, and the leading
    # sign(p) then flips the whole sum
    return Fraction(total, 4 * a * a) * (1 if p > 0 else -1)


def dedekind_fast(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) through the Hirzebruch-Jung expansion of p/q."""
    if p == 0:
        raise DomainError("dedekind sum with p = 0")
    if gcd(p, q) != 1:
        raise DomainError(f"dedekind sum needs gcd(p, q) = 1, got ({q}, {p})")
    if p < 0:
        return -dedekind_fast(q, -p)
    # periodicity and oddness are both absorbed by reducing q mod p
    q %= p
    if p == 1:
        return Fraction(0)
    qinv = mod_inverse(q, p)
    corr = sum(a - 3 for a in hj_expansion(p, q).terms)
    return (Fraction(q + qinv, p) + corr) / 12


dedekind = dedekind_fast


def is_quadratic_residue(a: int, p: int) -> tuple[bool, Optional[int]]:
    """Search for a unit x mod p with x^2 = a (mod p).  Brute force."""
    if p < 1:
        raise DomainError(f"modulus must be positive, got {p}")
    a %= p
    for x in range(1, p + 1):
        if gcd(x, p) == 1 and (x * x - a) % p == 0:
            return True, x
    return False, None


def integer_roots_monic_quadratic(b: int, c: int) -> list[int]:
    """All integers j with j^2 + b j + c = 0."""
    disc = b * b - 4 * c
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    roots = {(-b + r) // 2, (-b - r) // 2}
    return sorted(j for j in roots if j * j + b * j + c == 0)


def is_perfect_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x
