"""
Homological bookkeeping for a knot K in L(n, 1) with winding number k and
slope m*mu + lambda: the order of H_1 after surgery, the framing sign, the
parity and cyclicity conditions, and the list of candidates (k, m) that could
produce L(s, 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .exactmath import DegenerateSurgeryError, DomainError, gcd_ext, sign

TAGS = ("A", "B", "C", "D", "E", "F", "parity-excluded")


def h1_after_surgery(n: int, k: int, m: int) -> int:
    val = n * abs(m) if k == 0 else abs(m * n - k * k)
    if val == 0:
        raise DegenerateSurgeryError(f"n={n}, k={k}, m={m}: surgery has infinite H_1")
    return val


def framing_sign(n: int, k: int, m: int) -> int:
    val = m if k == 0 else m * n - k * k
    if val == 0:
        raise DegenerateSurgeryError(f"n={n}, k={k}, m={m}: framing is not a rational one")
    return sign(val)


def parity_admissible(n: int, s: int, k: int, m: int) -> tuple[bool, int]:
    """Parity constraint for essential knots.  Returns (ok, clause used)."""
    if (n - s) % 2:
        raise DomainError(f"n={n} and s={s} have different parities")
    if n % 2:
        return (k - m) % 2 == 1, 1
    return k % 2 == 0 and m % 2 == 1, 2


def bezout_pair(n: int, k: int, shift: int = 0) -> tuple[int, int]:
    """(n', k') with (n/d) k' - (k/d) n' = 1, d = gcd(n, k).  `shift` picks another pair."""
    d = gcd(n, k)
    a, b = n // d, k // d
    _, x, y = gcd_ext(a, b)
    return -y + shift * a, x + shift * b


def cyclicity_data(n: int, k: int, m: int, bezout: Optional[tuple] = None) -> tuple:
    d = gcd(n, k)
    nn, kk = bezout if bezout is not None else bezout_pair(n, k)
    if (n // d) * kk - (k // d) * nn != 1:
        raise DomainError(f"({nn}, {kk}) is not a Bezout pair for ({n}, {k})")
    return (m * n - k * k) // d, k * kk - nn * m, d


def cyclicity_admissible(n: int, k: int, m: int, bezout: Optional[tuple] = None) -> bool:
    if k < 1:
        raise DomainError("cyclicity condition is for essential knots (k >= 1)")
    a, b, d = cyclicity_data(n, k, m, bezout)
    return gcd(gcd(a, b), d) == 1


def in_case_e_range(n: int, k: int) -> bool:
    return (k == 2 and n >= 5) or (k == 3 and 6 <= n <= 9) or (k == 4 and n == 8)


@dataclass
class SurgeryCandidate:
    n: int
    k: int
    m: int
    s_signed: int
    tag: str
    framing: int = 0
    parity_clause: Optional[int] = None
    cyclic: bool = True
    notes: dict = field(default_factory=dict)

    @property
    def essential(self) -> bool:
        return self.k >= 1

    @property
    def h1(self) -> int:
        return h1_after_surgery(self.n, self.k, self.m)


def _tag(k: int, m: int) -> str:
    if k == 1:
        return "C"
    if m >= k + 1:
        return "D"
    if m == k - 1:
        return "E"
    if m <= k - 3:
        return "F"
    raise AssertionError(f"m={m}, k={k} should have been excluded by parity")


def enumerate_candidates(n: int, s: int) -> list:
    """All homological candidates (k, m) for a surgery L(n,1) -> L(s,1).

    Needs n >= |s| > 0 of the same parity.  Parity and cyclicity failures are
    kept in the list with their reason.
    """
    if not n >= abs(s) > 0:
        raise DomainError(f"need n >= |s| > 0, got ({n}, {s})")
    if (n - s) % 2:
        raise DomainError(f"n={n} and s={s} have different parities")
    out = []
    if abs(s) == n:
        for m in (1, -1):
            out.append(SurgeryCandidate(n, 0, m, s, "B", framing=m))
    a = abs(s)
    for k in range(1, n // 2 + 1):
        ms = set()
        for num in (k * k + a, k * k - a):
            if num % n == 0:
                ms.add(num // n)
        for m in sorted(ms):
            ok, clause = parity_admissible(n, s, k, m)
            if not ok:
                tag = "parity-excluded"
            else:
                tag = _tag(k, m)
            c = SurgeryCandidate(n, k, m, s, tag, framing=framing_sign(n, k, m),
                                 parity_clause=clause)
            if ok:
                c.cyclic = cyclicity_admissible(n, k, m)
            out.append(c)
    return out
