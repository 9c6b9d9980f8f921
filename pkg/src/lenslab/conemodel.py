"""
Symbolic mapping cone for L-space knots.

A KnotProfile holds the integers V_xi and H_xi on a window of one orbit of
relative Spin^c structures under the meridian.  Outside the window the
profile continues as the canonical staircase: to the left H = 0 and V grows
by one per step, to the right V = 0 and H grows by one per step.

A framing g > 0 moves xi to xi + g.  The residues mod g give the Spin^c
structures of the surgery, and each one reads off a pattern in the symbols

    +  V = 0, H > 0   (vertical map only)
    -  V > 0, H = 0   (diagonal map only)
    o  V = 0, H = 0   (both maps)
    *  V > 0, H > 0   (no map)
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import DomainError, IncomparableProfilesError, ProfileParseError

PLUS, MINUS, CIRCLE, STAR = "+", "-", "o", "*"
_ALIASES = {"+": PLUS, "-": MINUS, "o": CIRCLE, "*": STAR,
            "∘": CIRCLE, "∗": STAR, "−": MINUS, "0": CIRCLE}


@dataclass(frozen=True)
class KnotProfile:
    start: int
    V: tuple
    H: tuple

    def __post_init__(self):
        V, H = self.V, self.H
        if not V or len(V) != len(H):
            raise DomainError("V and H must be non-empty and of equal length")
        if min(V) < 0 or min(H) < 0:
            raise DomainError("V and H must be non-negative")
        if H[0] != 0 or V[-1] != 0:
            raise DomainError("window must start with H = 0 and end with V = 0")
        for i in range(len(V) - 1):
            if V[i + 1] not in (V[i], V[i] - 1):
                raise DomainError(f"V is not a staircase at xi={self.start + i}")
            if H[i + 1] not in (H[i], H[i] + 1):
                raise DomainError(f"H is not a staircase at xi={self.start + i}")

    @property
    def stop(self) -> int:
        return self.start + len(self.V)

    def V_at(self, xi: int) -> int:
        if xi < self.start:
            return self.V[0] + (self.start - xi)
        if xi >= self.stop:
            return 0
        return self.V[xi - self.start]

    def H_at(self, xi: int) -> int:
        if xi < self.start:
            return 0
        if xi >= self.stop:
            return self.H[-1] + (xi - self.stop + 1)
        return self.H[xi - self.start]

    def diff_at(self, xi: int) -> int:
        return self.V_at(xi) - self.H_at(xi)


def symbol_of(V: int, H: int) -> str:
    if V == 0:
        return CIRCLE if H == 0 else PLUS
    return MINUS if H == 0 else STAR


def symbol(profile: KnotProfile, xi: int) -> str:
    return symbol_of(profile.V_at(xi), profile.H_at(xi))


@dataclass(frozen=True)
class ConePattern:
    symbols: tuple
    first: int = 0  # orbit index of symbols[0]; informational

    @classmethod
    def parse(cls, text: str) -> "ConePattern":
        out = []
        for ch in text:
            if ch.isspace() or ch in ",[]":
                continue
            if ch not in _ALIASES:
                raise DomainError(f"unknown symbol {ch!r}")
            out.append(_ALIASES[ch])
        if not out:
            raise DomainError("empty pattern")
        return cls(tuple(out))

    def __str__(self):
        return "".join(self.symbols)

    def __len__(self):
        return len(self.symbols)


def _orbit_range(profile: KnotProfile, g: int, coset: int):
    """Orbit indices j with xi = coset + j*g covering the window padded by 2|g|."""
    a = abs(g)
    lo = profile.start - 2 * a
    hi = profile.stop + 2 * a
    if g > 0:
        j0 = -((coset - lo) // g)
        j1 = (hi - coset) // g
        return range(j0 - 1, j1 + 2)
    # negative framing runs the orbit the other way
    j0 = -((hi - coset) // a)
    j1 = (coset - lo) // a
    return range(j0 - 1, j1 + 2)


def orbit(profile: KnotProfile, g: int, coset: int) -> list:
    """The xi values of one gamma-orbit in cone order."""
    if g == 0:
        raise DomainError("framing step g must be nonzero")
    return [coset + j * g for j in _orbit_range(profile, g, coset)]


def cone_pattern(profile: KnotProfile, g: int, coset: int) -> ConePattern:
    xs = orbit(profile, g, coset % abs(g))
    return ConePattern(tuple(symbol(profile, x) for x in xs), xs[0])


def check_tails(pattern: ConePattern):
    s = pattern.symbols
    if s[0] != MINUS or s[-1] != PLUS:
        raise DomainError("pattern must start with '-' and end with '+' "
                          "(positive framing, truncated at the tails)")


def is_lspace_pattern(pattern: ConePattern) -> tuple[bool, list]:
    """Check the three L-space clauses.  Returns (ok, violated clause numbers)."""
    check_tails(pattern)
    s = pattern.symbols
    minus = [i for i, c in enumerate(s) if c == MINUS]
    plus = [i for i, c in enumerate(s) if c == PLUS]
    star = [i for i, c in enumerate(s) if c == STAR]
    bad = []
    if len(star) > 1:
        bad.append(1)
    if minus and (plus or star) and max(minus) > min(plus + star):
        bad.append(2)
    if plus and (minus or star) and min(plus) < max(minus + star):
        bad.append(3)
    return not bad, bad


def _f2_rank(rows: list) -> int:
    """Rank over the two-element field of rows encoded as int bitmasks."""
    pivots = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def homology_rank(pattern: ConePattern) -> int:
    """Rank of ker + coker of the hat cone map, by linear algebra over F_2.

    A_0..A_{L-1} map to B_1..B_{L-1}: A_j hits B_j vertically and B_{j+1}
    diagonally.  With '-' first and '+' last the truncation is exact.
    """
    check_tails(pattern)
    s = pattern.symbols
    L = len(s)
    rows = []
    for j, c in enumerate(s):
        r = 0
        if c in (PLUS, CIRCLE) and j >= 1:
            r |= 1 << (j - 1)          # B_j
        if c in (MINUS, CIRCLE) and j + 1 <= L - 1:
            r |= 1 << j                # B_{j+1}
        rows.append(r)
    rk = _f2_rank(rows)
    return (L - rk) + (L - 1 - rk)


def homology_rank_intervals(pattern: ConePattern) -> int:
    """Interval count: one per '*', per [-,+] and per [+,-], [+,*], [*,-], [*,*]."""
    check_tails(pattern)
    ends = [c for c in pattern.symbols if c != CIRCLE]
    total = ends.count(STAR)
    for a, b in zip(ends, ends[1:]):
        if (a, b) == (MINUS, PLUS):
            total += 1
        elif (a, b) in ((PLUS, MINUS), (PLUS, STAR), (STAR, MINUS), (STAR, STAR)):
            total += 1
    return total


def grading_shift_N(profile: KnotProfile, g: int, coset: int) -> int:
    """max over the gamma-orbit of min(V, H)."""
    return max(min(profile.V_at(x), profile.H_at(x))
               for x in orbit(profile, g, coset % abs(g)))


def grading_shift_N_fast(profile: KnotProfile, g: int, coset: int) -> int:
    """0 without a '*', else min(V, H) at the '*' (assumes at most one)."""
    for x in orbit(profile, g, coset % abs(g)):
        if symbol(profile, x) == STAR:
            return min(profile.V_at(x), profile.H_at(x))
    return 0


def _joint_window(a: KnotProfile, b: KnotProfile) -> range:
    return range(min(a.start, b.start) - 1, max(a.stop, b.stop) + 1)


def profile_partial_order(small: KnotProfile, big: KnotProfile) -> bool:
    """small <= big: V(small) <= V(big) everywhere.  Needs equal V - H."""
    xs = _joint_window(small, big)
    if any(small.diff_at(x) != big.diff_at(x) for x in xs):
        raise IncomparableProfilesError("profiles have different V - H")
    return all(small.V_at(x) <= big.V_at(x) for x in xs)


def d_from_surgery_formula(d_model, N_model: int, N_knot: int) -> Fraction:
    return Fraction(d_model) + 2 * N_model - 2 * N_knot


# -- random generation ------------------------------------------------------

def random_profile(rng: random.Random, max_len: int = 12, start=None) -> KnotProfile:
    """Random staircase: V - H drops by exactly one at every step."""
    L = rng.randint(1, max_len)
    drops = rng.randint(0, L - 1)
    where = set(rng.sample(range(L - 1), drops))
    V, H = [drops], [0]
    for i in range(L - 1):
        if i in where:
            V.append(V[-1] - 1)
            H.append(H[-1])
        else:
            V.append(V[-1])
            H.append(H[-1] + 1)
    if start is None:
        start = rng.randint(-6, 6)
    return KnotProfile(start, tuple(V), tuple(H))


def random_smaller(rng: random.Random, big: KnotProfile) -> KnotProfile:
    """Lower V and H together by a walk D with 0 <= D <= min(V, H)."""
    V, H = big.V, big.H
    D = [0]
    for i in range(1, len(V)):
        if V[i] < V[i - 1]:
            step = rng.choice((0, -1))
        else:
            step = rng.choice((0, 1))
        D.append(max(0, min(D[-1] + step, V[i], H[i])))
    return KnotProfile(big.start, tuple(v - d for v, d in zip(V, D)),
                       tuple(h - d for h, d in zip(H, D)))


def random_pattern(rng: random.Random, max_inner: int = 10) -> ConePattern:
    inner = [rng.choice((PLUS, MINUS, CIRCLE, STAR)) for _ in range(rng.randint(0, max_inner))]
    return ConePattern(tuple([MINUS] + inner + [PLUS]))


# -- text format --------------------------------------------------------------

@dataclass
class ConeInput:
    g: int = 1
    profile: KnotProfile | None = None
    pattern: ConePattern | None = None

    def patterns(self) -> list:
        if self.pattern is not None:
            return [self.pattern]
        return [cone_pattern(self.profile, self.g, c) for c in range(abs(self.g))]


def parse_profile_text(text: str) -> ConeInput:
    """Read 'g=<int>' then lines 'xi V H' with consecutive xi.

    A 'pattern=<symbols>' line may stand in for the V/H rows.
    """
    g = None
    pattern = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, val = line.partition("=")
            key = key.strip()
            if key == "g":
                try:
                    g = int(val)
                except ValueError:
                    raise ProfileParseError(lineno, f"bad framing {val.strip()!r}") from None
                if g == 0:
                    raise ProfileParseError(lineno, "framing must be nonzero")
            elif key == "pattern":
                try:
                    pattern = ConePattern.parse(val)
                except DomainError as e:
                    raise ProfileParseError(lineno, str(e)) from None
            else:
                raise ProfileParseError(lineno, f"unknown header {key!r}")
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ProfileParseError(lineno, "expected 'xi V H'")
        try:
            xi, v, h = (int(p) for p in parts)
        except ValueError:
            raise ProfileParseError(lineno, "non-integer entry") from None
        if rows and xi != rows[-1][0] + 1:
            raise ProfileParseError(lineno, f"xi={xi} does not follow {rows[-1][0]}")
        rows.append((xi, v, h, lineno))
    if pattern is not None:
        if rows:
            raise ProfileParseError(rows[0][3], "give either a pattern or V/H rows, not both")
        return ConeInput(g or 1, None, pattern)
    if g is None:
        raise ProfileParseError(1, "missing 'g=<int>' header")
    if not rows:
        raise ProfileParseError(1, "no profile rows")
    try:
        prof = KnotProfile(rows[0][0], tuple(r[1] for r in rows), tuple(r[2] for r in rows))
    except DomainError as e:
        raise ProfileParseError(rows[0][3], str(e)) from None
    return ConeInput(g, prof, None)


def format_profile_text(profile: KnotProfile, g: int) -> str:
    lines = [f"g={g}"]
    for i, (v, h) in enumerate(zip(profile.V, profile.H)):
        lines.append(f"{profile.start + i} {v} {h}")
    return "\n".join(lines) + "\n"
