"""
Oriented lens spaces L(p, q): d-invariants, self-conjugate Spin^c structures,
linking forms and the Casson-Walker invariant.

L(p, q) is p/q surgery on the unknot.  A LensSpace keeps |p|, q mod |p| and a
reversal flag, so L(-n, 1) is stored as the reverse of L(n, 1).  Spin^c
structures are labelled by Z/|p| through the d-invariant recursion, and a
reversed space keeps the labels and negates the values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactmath import DomainError, dedekind_fast, is_quadratic_residue, mod_inverse


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int
    reversed: bool = False

    @classmethod
    def make(cls, p: int, q: int = 1) -> "LensSpace":
        if p == 0:
            raise DomainError("L(0, q) is not a lens space")
        if gcd(p, q) != 1:
            raise DomainError(f"L({p}, {q}) needs gcd(p, q) = 1")
        a = abs(p)
        return cls(a, q % a, p < 0)

    def __post_init__(self):
        if self.p < 1 or not 0 <= self.q < self.p or gcd(self.p, self.q) != 1:
            raise DomainError(f"non-canonical lens space data ({self.p}, {self.q})")

    def reverse(self) -> "LensSpace":
        return LensSpace(self.p, self.q, not self.reversed)

    @property
    def orientation(self) -> int:
        return -1 if self.reversed else 1

    @property
    def order(self) -> int:
        return self.p

    def is_s3(self) -> bool:
        return self.p == 1

    def __str__(self):
        s = f"L({self.p},{self.q})"
        return "-" + s if self.reversed else s


def L(p: int, q: int = 1) -> LensSpace:
    return LensSpace.make(p, q)


def _as_lens(x) -> LensSpace:
    if isinstance(x, LensSpace):
        return x
    return LensSpace.make(*x)


@lru_cache(maxsize=None)
def _d_numerators(p: int, q: int):
    """(D, nums) with d(L(p, q), i) = nums[i] / D for canonical p >= 1, 0 <= q < p."""
    if p == 1:
        return 1, (0,)
    r = p % q
    D0, inner = _d_numerators(q, r)
    den = 4 * p * q
    D = den * D0 // gcd(den, D0)
    a, b = D // den, D // D0
    nums = []
    for i in range(p):
        t = 2 * i + 1 - p - q
        nums.append((t * t - p * q) * a - inner[i % q] * b)
    return D, tuple(nums)


@lru_cache(maxsize=4096)
def d_table(p: int, q: int) -> tuple:
    """All d(L(p, q), i) for 0 <= i < p, with p >= 1 and 0 <= q < p canonical."""
    D, nums = _d_numerators(p, q)
    return tuple(Fraction(x, D) for x in nums)


def d_invariant(lens, i: int) -> Fraction:
    M = _as_lens(lens)
    val = d_table(M.p, M.q)[i % M.p]
    return -val if M.reversed else val


def d_values(lens) -> list:
    M = _as_lens(lens)
    tab = d_table(M.p, M.q)
    return [-v for v in tab] if M.reversed else list(tab)


def d_closed_form_n1(n: int, i: int) -> Fraction:
    if n < 1 or not 0 <= i < n:
        raise DomainError(f"need n >= 1 and 0 <= i < n, got ({n}, {i})")
    return Fraction((2 * i - n) ** 2, 4 * n) - Fraction(1, 4)


def conjugate_index(lens, i: int) -> int:
    M = _as_lens(lens)
    return (M.q - 1 - i) % M.p


def self_conjugate_spincs(lens) -> list:
    """Sorted list of the conjugation-fixed indices (one or two of them)."""
    M = _as_lens(lens)
    out = set()
    for twice in (M.p + M.q - 1, M.q - 1):
        if twice % 2 == 0:
            out.add((twice // 2) % M.p)
    return sorted(out)


@dataclass(frozen=True)
class LinkingForm:
    """The form q/p on Z/p; q is kept as the symmetric residue."""
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.q, self.p)

    def isomorphic(self, other: "LinkingForm") -> bool:
        if self.p != other.p:
            return False
        return linking_forms_isomorphic(self.p, self.q, other.q)[0]

    def __str__(self):
        return str(self.value)


def _sym_residue(q: int, p: int) -> int:
    r = q % p
    return r - p if 2 * r > p else r


def linking_form(lens) -> LinkingForm:
    M = _as_lens(lens)
    q = -M.q if M.reversed else M.q
    return LinkingForm(M.p, _sym_residue(q, M.p))


def linking_forms_isomorphic(p: int, q1: int, q2: int):
    """q1/p and q2/p are isomorphic iff q1 = q2 a^2 (mod p) for a unit a."""
    if p < 1:
        raise DomainError(f"modulus must be positive, got {p}")
    if gcd(q1, p) != 1 or gcd(q2, p) != 1:
        raise DomainError(f"linking form coefficients must be units mod {p}")
    return is_quadratic_residue(q1 * mod_inverse(q2, p), p)


def casson_walker_lens(lens) -> Fraction:
    M = _as_lens(lens)
    val = -dedekind_fast(M.q, M.p) / 2
    return -val if M.reversed else val


def sum_d_invariants(lens) -> Fraction:
    M = _as_lens(lens)
    D, nums = _d_numerators(M.p, M.q)
    total = Fraction(sum(nums), D)
    return -total if M.reversed else total
