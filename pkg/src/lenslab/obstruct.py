"""
Classification pipeline for distance one surgeries L(n,1) -> L(s,1).

classify() normalizes (n, s) to n >= |s| > 0, runs every route that could
produce the surgery and attaches a certificate to each route it rules out.
Certificates carry enough data to be re-checked by verify_certificate()
from the invariant calculators alone.

Routes:
    A   n and s of different parity (quarter-shift d-invariant equation)
    B   null-homologous knots, slope +-1
    C   winding number 1
    D   slope m >= k+1
    E   slope m = k-1 (the model is a lens space)
    F   slope m <= k-3 (the model is a small Seifert space)
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional

from .exactmath import DomainError, fmt, integer_roots_monic_quadratic
from .lens import (
    L,
    casson_walker_lens,
    d_closed_form_n1,
    d_invariant,
    linking_forms_isomorphic,
    self_conjugate_spincs,
)
from .seifert import (
    casson_walker_obstruction,
    casson_walker_seifert,
    is_lspace_three_fibers,
    is_lspace_surgery_model,
    surgery_model,
)
from .surgery import (
    SurgeryCandidate,
    cyclicity_admissible,
    cyclicity_data,
    enumerate_candidates,
    framing_sign,
    in_case_e_range,
    parity_admissible,
)

PAPER_FAITHFUL = "paper-faithful"
STRICT = "strict"
MODES = (PAPER_FAITHFUL, STRICT)

QUARTER = Fraction(1, 4)


class InvariantBreach(AssertionError):
    """The pipeline contradicted a known construction."""


def default_mode() -> str:
    mode = os.environ.get("LENSLAB_MODE", PAPER_FAITHFUL)
    if mode not in MODES:
        raise DomainError(f"LENSLAB_MODE must be one of {MODES}, got {mode!r}")
    return mode


# Results used as black boxes.  Each entry names the source and the pairs it
# allows; anything it does not allow gets a CitedResult certificate.
CITED = {
    "moore-vazquez": {
        "statement": "odd n: L(n,1) -> L(-n,1) along a null-homologous knot only for n in {1, 5}",
        "allowed_n": frozenset({1, 5}),
    },
    "lmv-L(3,1)": {
        "statement": "even s': L(3,1) -> L(s',1) by a distance one surgery only for s' in {-6, -2, 2, 4}",
        "allowed_s": frozenset({-6, -2, 2, 4}),
    },
}


def _lmv_allows(n: int, s: int) -> bool:
    """Different parity pairs touching L(3,1), read through the symmetries."""
    allowed = CITED["lmv-L(3,1)"]["allowed_s"]
    if n == 3:
        return s in allowed
    assert abs(s) == 3 and n % 2 == 0
    # dual surgery, plus a mirror when s < 0
    return (n if s > 0 else -n) in allowed


# -- data types ------------------------------------------------------------

@dataclass
class Certificate:
    kind: str
    witness: dict

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witness": _render(self.witness)}

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(d["kind"], dict(d["witness"]))


@dataclass
class CandidateResult:
    tag: str
    k: Optional[int]
    m: Optional[int]
    s_signed: int
    survives: bool
    passing: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "k": self.k,
            "m": self.m,
            "s_signed": self.s_signed,
            "survives": self.survives,
            "passing": _render(self.passing),
            "certificates": [c.to_dict() for c in self.certificates],
        }


@dataclass
class Verdict:
    n: int
    s: int
    verdict: str  # Realized | Obstructed | Unresolved
    mode: str
    candidates: list
    certificates: list = field(default_factory=list)
    construction: Optional[dict] = None
    query: Optional[tuple] = None

    @property
    def obstructed(self) -> bool:
        return self.verdict == "Obstructed"

    def all_certificates(self) -> list:
        out = list(self.certificates)
        for c in self.candidates:
            out.extend(c.certificates)
        return out

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "s": self.s,
            "verdict": self.verdict,
            "mode": self.mode,
            "candidates": [c.to_dict() for c in self.candidates],
            "certificates": [c.to_dict() for c in self.certificates],
            "construction": self.construction,
        }
        if self.query is not None and tuple(self.query) != (self.n, self.s):
            d["query"] = list(self.query)
        return d


def _render(x):
    if isinstance(x, Fraction):
        return fmt(x)
    if isinstance(x, dict):
        return {k: _render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    return x


def _q(x) -> Fraction:
    return Fraction(x)


# -- realized pairs ---------------------------------------------------------

_SPECIAL = {
    (3, -2): ("n -> n-1 read through L(-2,1) = L(2,1)", "1d"),
    (5, -5): ("chirally cosmetic band on T(2,5)", "1c"),
    (6, -2): ("n -> n-4 read through L(-2,1) = L(2,1)", "1b"),
    (6, -3): ("band from T(2,6) to T(2,-3)", "1f"),
}


def realized_constructions(n: int, s: int) -> Optional[dict]:
    if not n >= abs(s) > 0:
        raise DomainError(f"need n >= |s| > 0, got ({n}, {s})")
    if s == n:
        name, fig = "s = n", "1a"
    elif s == n - 1:
        name, fig = "s = n-1", "1d"
    elif s == n - 4:
        name, fig = "s = n-4", "1b"
    elif s in (1, -1):
        name, fig = "s = +-1 (band to the unknot)", "1e"
    elif (n, s) in _SPECIAL:
        name, fig = _SPECIAL[(n, s)]
    else:
        return None
    return {"name": name, "figure": fig}


# -- case A: different parity ---------------------------------------------

def _quarter_solutions(src: int, tgt: int):
    """Self-conjugate i of L(tgt,1) with d(L(tgt,1), i) - d(L(src,1), 0) = +-1/4."""
    d0 = d_closed_form_n1(src, 0)
    T = L(tgt, 1)
    table = {}
    for i in self_conjugate_spincs(T):
        d = d_closed_form_n1(abs(tgt), i) * (1 if tgt > 0 else -1)
        table[i] = d
    sols = [i for i, d in table.items() if abs(d - d0) == QUARTER]
    return d0, table, sols


def case_a(n: int, s: int) -> CandidateResult:
    if not n >= abs(s) > 0:
        raise DomainError(f"need n >= |s| > 0, got ({n}, {s})")
    if (n - s) % 2 == 0:
        raise DomainError(f"case A needs different parity, got ({n}, {s})")
    res = CandidateResult("A", None, None, s, True)
    if abs(s) == 1:
        res.passing = {"route": "s = +-1"}
        return res
    if n == 3 or abs(s) == 3:
        if _lmv_allows(n, s):
            res.passing = {"route": "cited", "source": "lmv-L(3,1)"}
        else:
            res.survives = False
            res.certificates.append(_cited("lmv-L(3,1)", n, s))
        return res
    # odd side has order >= 5; read the pair so the odd lens space is the source
    if n % 2:
        src, tgt, how = n, s, "direct"
    elif s > 0:
        src, tgt, how = s, n, "dual"
    else:
        src, tgt, how = -s, -n, "dual+mirror"
    d0, table, sols = _quarter_solutions(src, tgt)
    if sols:
        res.passing = {"route": how, "source_n": src, "target_s": tgt, "i": sols[0]}
    else:
        res.survives = False
        res.certificates.append(Certificate("SpinQuarterUnsolvable", {
            "n": n, "s": s, "source_n": src, "target_s": tgt, "route": how,
            "d_source": d0, "d_target": {str(i): v for i, v in table.items()},
        }))
    return res


def _cited(source: str, n: int, s: int) -> Certificate:
    return Certificate("CitedResult", {"source": source, "statement": CITED[source]["statement"],
                                       "n": n, "s": s})


# -- case B: null-homologous ------------------------------------------------

def _niwu_value(n: int, subcase: str) -> Fraction:
    """The max-V value forced by the Ni-Wu formula in each subcase (n even).

    Case 1 is +1 surgery L(n,1) -> L(-n,1), case 2 is +1 surgery on the
    mirror, L(-n,1) -> L(n,1).  Subcase a keeps self-conjugate labels, b swaps.
    """
    h = n // 2
    Y_pos, Y_neg = L(n, 1), L(-n, 1)
    if subcase == "1a":
        src, t, tgt, ti = Y_pos, h, Y_neg, h
    elif subcase == "1b":
        src, t, tgt, ti = Y_pos, 0, Y_neg, h
    elif subcase == "2a":
        src, t, tgt, ti = Y_neg, 0, Y_pos, 0
    elif subcase == "2b":
        src, t, tgt, ti = Y_neg, 0, Y_pos, h
    else:
        raise DomainError(f"unknown subcase {subcase!r}")
    # d(target) = d(source) + d(L(1,1), 0) - 2 max V
    return (d_invariant(src, t) + d_invariant(L(1, 1), 0) - d_invariant(tgt, ti)) / 2


def _niwu_ok(subcase: str, v: Fraction) -> bool:
    if v < 0 or v.denominator != 1:
        return False
    if subcase == "1b":
        # slope 1 forces genus 0 or 1, and then V_0 is 0 or 1
        return v in (0, 1)
    return True


def case_b_null(n: int, s: int) -> list:
    if abs(s) != n or n < 1:
        raise DomainError(f"null-homologous route needs |s| = n, got ({n}, {s})")
    out = []
    for m in (1, -1):
        r = CandidateResult("B", 0, m, s, True)
        out.append(r)
        if s == n:
            r.passing = {"route": "unknot", "note": "+-1 surgery on a trivial knot"}
            continue
        if n % 2:
            if n in CITED["moore-vazquez"]["allowed_n"]:
                r.passing = {"route": "cited", "source": "moore-vazquez"}
            else:
                r.survives = False
                r.certificates.append(_cited("moore-vazquez", n, s))
            continue
        case = "1" if m == 1 else "2"
        good = []
        for sub in ("a", "b"):
            label = case + sub
            v = _niwu_value(n, label)
            if _niwu_ok(label, v):
                good.append((label, v))
            else:
                r.certificates.append(Certificate("NiWuInfeasible", {
                    "n": n, "subcase": label, "value": v}))
        if good:
            r.passing = {"subcase": good[0][0], "max_V": good[0][1]}
            r.certificates = []
        else:
            r.survives = False
    return out


# -- cases C and D ------------------------------------------------------------

def _magnitude(n, k, m, s) -> Certificate:
    return Certificate("MagnitudeExceeds", {"n": n, "k": k, "m": m, "s": s,
                                            "h1": abs(m * n - k * k)})


def case_c(n: int, m: int, s: int) -> CandidateResult:
    r = CandidateResult("C", 1, m, s, True)
    if abs(m * n - 1) > n:
        r.survives = False
        r.certificates.append(_magnitude(n, 1, m, s))
    else:
        r.passing = {"h1": abs(m * n - 1)}
    return r


def case_d(n: int, k: int, m: int, s: int) -> CandidateResult:
    assert m >= k + 1
    r = CandidateResult("D", k, m, s, False)
    r.certificates.append(_magnitude(n, k, m, s))
    return r


# -- case E: m = k-1 ------------------------------------------------------------

_EQUATIONS = {
    "12-2n": lambda n: 12 - 2 * n,
    "4": lambda n: 4,
    "2n-4": lambda n: 2 * n - 4,
}


def _equation_label(n: int, c) -> str:
    for label, f in _EQUATIONS.items():
        if c == f(n):
            return "j^2-(n-4)j+" + label
    return f"j^2-(n-4)j+({fmt(c)})"


def refinement_quadratic(p: int, d_shift, N1) -> tuple:
    """Coefficients (b, c) of j^2 + b j + c = 0 from
    -d(L(p,1), j) = d_shift - 2 N1, with d(L(p,1), j) = -1/4 + (2j-p)^2/(4p).
    """
    R = 4 * p * (2 * Fraction(N1) - Fraction(d_shift) + QUARTER)
    c = (p * p - R) / 4
    return -p, c


def _cw_certs(res: CandidateResult, chk, base: dict, strict: bool):
    if not chk.sign_ok:
        res.certificates.append(Certificate("CassonWalkerNegative", dict(base, delta=chk.delta)))
    if strict and not chk.integral_ok:
        res.certificates.append(Certificate("CassonWalkerNonInteger",
                                            dict(base, delta=chk.delta, h1=chk.h1,
                                                 h1_delta=chk.scaled)))


def case_e(n: int, k: int, s_signed: int, strict: bool = False) -> CandidateResult:
    m = k - 1
    assert in_case_e_range(n, k), f"(n, k) = ({n}, {k}) is outside the m = k-1 range"
    p = n * k - n - k * k
    assert abs(s_signed) == p
    M = L(p, k - 1)
    Y = L(s_signed, 1)
    res = CandidateResult("E", k, m, s_signed, True)
    lamY, lamM = casson_walker_lens(Y), casson_walker_lens(M)
    cw = casson_walker_obstruction(lamY, lamM, p)
    base = {"n": n, "k": k, "m": m, "s": s_signed, "model": f"L({p},{k - 1})",
            "lambda_target": lamY, "lambda_model": lamM}

    if s_signed > 0:
        _cw_certs(res, cw, base, True if strict else False)
        res.survives = not res.certificates
        if res.survives:
            res.passing = {"delta_lambda": cw.delta}
        return res

    if strict:
        _cw_certs(res, cw, base, True)

    # linking forms only depend on homology, so they must agree
    if p > 1:
        iso, _ = linking_forms_isomorphic(p, -1, k - 1)
        if not iso:
            res.certificates.append(Certificate("LinkingFormMismatch", {
                "p": p, "q1": (-1) % p, "q2": (k - 1) % p}))
    link_ok = not any(c.kind == "LinkingFormMismatch" for c in res.certificates)

    tY = self_conjugate_spincs(Y)
    tM = self_conjugate_spincs(M)
    assert len(tY) == len(tM)
    passing = None
    for label, perm in zip("ab", permutations(tM)):
        ok = True
        N0s = []
        for t, tm in zip(tY, perm):
            dY, dM = d_invariant(Y, t), d_invariant(M, tm)
            N0 = (dM - dY) / 2
            N0s.append(N0)
            wit = {"n": n, "k": k, "s": s_signed, "matching": label, "t": t, "tM": tm,
                   "d_target": dY, "d_model": dM, "N0": N0}
            if N0 < 0:
                res.certificates.append(Certificate("N0Negative", wit))
                ok = False
            elif N0.denominator != 1:
                res.certificates.append(Certificate("N0NonInteger", wit))
                ok = False
        if not ok:
            continue
        N0 = N0s[0]
        info = {"matching": label, "N0": N0}
        if N0 >= 2:
            assert k == 2, "N0 >= 2 only arises for k = 2"
            tm = perm[0]
            shift = min((tm + 2) % p, (tm - 2) % p)
            d_shift = d_invariant(M, shift)
            roots = []
            for N1 in (N0, N0 - 1):
                b, c = refinement_quadratic(p, d_shift, N1)
                js = integer_roots_monic_quadratic(b, int(c)) if c.denominator == 1 else []
                if js:
                    roots.append({"N1": N1, "j": js})
                else:
                    res.certificates.append(Certificate("QuadraticNoIntegerRoot", {
                        "n": n, "k": k, "s": s_signed, "matching": label,
                        "equation": _equation_label(n, c), "b": b, "c": c,
                        "N0": N0, "N1": N1, "tM": tm, "shift": shift, "d_shift": d_shift}))
            if not roots:
                continue
            info["roots"] = roots
        if passing is None:
            passing = info
    if link_ok and passing is not None and not (strict and not cw.passes(True)):
        res.survives = True
        res.passing = passing
        res.certificates = []
    else:
        res.survives = False
    return res


# -- case F: m <= k-3 -----------------------------------------------------------

def case_f(n: int, k: int, m: int, s_signed: int, strict: bool = False) -> CandidateResult:
    assert k >= 2 and m <= k - 3, f"case F needs k >= 2 and m <= k-3, got k={k}, m={m}"
    res = CandidateResult("F", k, m, s_signed, True)
    if not is_lspace_surgery_model(n, k, m):
        res.survives = False
        res.certificates.append(Certificate("NotLSpaceSeifert", {
            "n": n, "k": k, "m": m, "p1": n - k, "p2": k, "p3": k - m}))
        return res
    if m <= -1:
        res.survives = False
        res.certificates.append(_magnitude(n, k, m, s_signed))
        return res
    M = surgery_model(n, k, m)
    eps = framing_sign(n, k, m)
    lamY = casson_walker_lens(L(s_signed, 1))
    lamM = casson_walker_seifert(M)
    # a negative framing is handled by reversing both sides
    chk = casson_walker_obstruction(eps * lamY, eps * lamM, abs(s_signed))
    sub = ("1" if m == 0 else "2") + ("a" if s_signed > 0 else "b")
    base = {"n": n, "k": k, "m": m, "s": s_signed, "subcase": sub, "framing": eps,
            "lambda_target": lamY, "lambda_model": lamM}
    _cw_certs(res, chk, base, strict)
    res.survives = not res.certificates
    if res.survives:
        res.passing = {"subcase": sub, "delta_lambda": chk.delta}
    return res


# -- dispatch -------------------------------------------------------------------

def _essential(c: SurgeryCandidate, strict: bool) -> CandidateResult:
    if c.tag == "parity-excluded":
        return CandidateResult(c.tag, c.k, c.m, c.s_signed, False, certificates=[
            Certificate("ParityExcluded", {"n": c.n, "s": c.s_signed, "k": c.k, "m": c.m,
                                           "clause": c.parity_clause})])
    if not c.cyclic:
        a, b, d = cyclicity_data(c.n, c.k, c.m)
        return CandidateResult(c.tag, c.k, c.m, c.s_signed, False, certificates=[
            Certificate("CyclicityFailed", {"n": c.n, "k": c.k, "m": c.m,
                                            "entries": [a, b, d]})])
    if c.tag == "C":
        return case_c(c.n, c.m, c.s_signed)
    if c.tag == "D":
        return case_d(c.n, c.k, c.m, c.s_signed)
    if c.tag == "E":
        return case_e(c.n, c.k, c.s_signed, strict)
    if c.tag == "F":
        return case_f(c.n, c.k, c.m, c.s_signed, strict)
    raise AssertionError(f"unexpected tag {c.tag}")


def normalize_pair(n: int, s: int) -> tuple[int, int]:
    """Move (n, s) to n >= |s| > 0 using the dual and mirror symmetries."""
    if n <= 0 or s == 0:
        raise DomainError(f"need n > 0 and s != 0, got ({n}, {s})")
    if abs(s) <= n:
        return n, s
    return abs(s), n if s > 0 else -n


def run_routes(n: int, s: int, mode: str = PAPER_FAITHFUL):
    """Every route for a normalized pair: (candidate results, pair-level certificates)."""
    strict = mode == STRICT
    if (n - s) % 2:
        return [case_a(n, s)], []
    results = []
    cands = enumerate_candidates(n, s)
    if abs(s) == n:
        results.extend(case_b_null(n, s))
    for c in cands:
        if c.tag == "B":
            continue
        results.append(_essential(c, strict))
    pair_certs = []
    if not results:
        pair_certs.append(Certificate("HomologyOrderMismatch", {
            "n": n, "s": s, "k_max": n // 2}))
    return results, pair_certs


def classify(n: int, s: int, mode: Optional[str] = None) -> Verdict:
    if mode is None:
        mode = default_mode()
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    query = (n, s)
    n, s = normalize_pair(n, s)
    results, pair_certs = run_routes(n, s, mode)
    alive = any(r.survives for r in results)
    built = realized_constructions(n, s)
    if built is not None:
        if not alive:
            raise InvariantBreach(f"({n}, {s}) is realized but every route was obstructed")
        kind = "Realized"
    else:
        kind = "Unresolved" if alive else "Obstructed"
    return Verdict(n, s, kind, mode, results, pair_certs, built, query)


def pairs_up_to(n_max: int):
    for n in range(1, n_max + 1):
        for s in range(n, -n - 1, -1):
            if s:
                yield n, s


def _classify_args(args):
    return classify(*args)


def table(n_max: int, mode: Optional[str] = None, jobs: int = 1) -> list:
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    if mode is None:
        mode = default_mode()
    pairs = [(n, s, mode) for n, s in pairs_up_to(n_max)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_classify_args, pairs, chunksize=64))
    return [classify(*p) for p in pairs]


def summarize(verdicts: list) -> dict:
    counts = {"Realized": 0, "Unresolved": 0, "Obstructed": 0}
    for v in verdicts:
        counts[v.verdict] += 1
    return {
        "counts": counts,
        "unresolved": [[v.n, v.s] for v in verdicts if v.verdict == "Unresolved"],
        "chiral_slice": [v.n for v in verdicts if v.s == -v.n and not v.obstructed],
    }


# -- certificate re-checking ------------------------------------------------------

def _check_e_model(w) -> tuple:
    n, k = int(w["n"]), int(w["k"])
    p = n * k - n - k * k
    return p, L(p, k - 1), L(int(w["s"]), 1)


def verify_certificate(cert: Certificate) -> bool:
    """Recompute a certificate from its witness."""
    w = cert.witness
    kind = cert.kind
    if kind == "MagnitudeExceeds":
        n, k, m = int(w["n"]), int(w["k"]), int(w["m"])
        h1 = n * abs(m) if k == 0 else abs(m * n - k * k)
        return h1 == int(w["h1"]) and h1 > n
    if kind == "ParityExcluded":
        ok, clause = parity_admissible(int(w["n"]), int(w["s"]), int(w["k"]), int(w["m"]))
        return not ok and clause == int(w["clause"])
    if kind == "CyclicityFailed":
        n, k, m = int(w["n"]), int(w["k"]), int(w["m"])
        return not cyclicity_admissible(n, k, m)
    if kind == "NotLSpaceSeifert":
        n, k, m = int(w["n"]), int(w["k"]), int(w["m"])
        fib = (int(w["p1"]), int(w["p2"]), int(w["p3"]))
        return (fib == (n - k, k, k - m) and not is_lspace_three_fibers(*fib)
                and not is_lspace_surgery_model(n, k, m))
    if kind in ("CassonWalkerNegative", "CassonWalkerNonInteger"):
        n, k, m, s = int(w["n"]), int(w["k"]), int(w["m"]), int(w["s"])
        lamY = casson_walker_lens(L(s, 1))
        if m == k - 1:
            lamM = casson_walker_lens(L(n * k - n - k * k, k - 1))
        else:
            lamM = casson_walker_seifert(surgery_model(n, k, m))
        eps = framing_sign(n, k, m)
        chk = casson_walker_obstruction(eps * lamY, eps * lamM, abs(s))
        if lamY != _q(w["lambda_target"]) or lamM != _q(w["lambda_model"]):
            return False
        if chk.delta != _q(w["delta"]):
            return False
        if kind == "CassonWalkerNegative":
            return not chk.sign_ok
        return not chk.integral_ok and chk.scaled == _q(w["h1_delta"])
    if kind in ("N0Negative", "N0NonInteger"):
        p, M, Y = _check_e_model(w)
        t, tm = int(w["t"]), int(w["tM"])
        if t not in self_conjugate_spincs(Y) or tm not in self_conjugate_spincs(M):
            return False
        N0 = (d_invariant(M, tm) - d_invariant(Y, t)) / 2
        if N0 != _q(w["N0"]):
            return False
        return N0 < 0 if kind == "N0Negative" else (N0 >= 0 and N0.denominator != 1)
    if kind == "QuadraticNoIntegerRoot":
        p, M, Y = _check_e_model(w)
        shift = int(w["shift"])
        d_shift = d_invariant(M, shift)
        if d_shift != _q(w["d_shift"]):
            return False
        b, c = refinement_quadratic(p, d_shift, _q(w["N1"]))
        if b != int(w["b"]) or c != _q(w["c"]):
            return False
        return c.denominator != 1 or not integer_roots_monic_quadratic(b, int(c))
    if kind == "LinkingFormMismatch":
        iso, _ = linking_forms_isomorphic(int(w["p"]), int(w["q1"]), int(w["q2"]))
        return not iso
    if kind == "SpinQuarterUnsolvable":
        d0, table_, sols = _quarter_solutions(int(w["source_n"]), int(w["target_s"]))
        return not sols and d0 == _q(w["d_source"])
    if kind == "NiWuInfeasible":
        v = _niwu_value(int(w["n"]), w["subcase"])
        return v == _q(w["value"]) and not _niwu_ok(w["subcase"], v)
    if kind == "CitedResult":
        src = w["source"]
        n, s = int(w["n"]), int(w["s"])
        if src == "moore-vazquez":
            return n % 2 == 1 and s == -n and n not in CITED[src]["allowed_n"]
        if src == "lmv-L(3,1)":
            return (n - s) % 2 == 1 and (n == 3 or abs(s) == 3) and not _lmv_allows(n, s)
        return False
    if kind == "HomologyOrderMismatch":
        n, s = int(w["n"]), int(w["s"])
        if (n - s) % 2 or abs(s) == n:
            return False
        for k in range(1, n // 2 + 1):
            for num in (k * k + abs(s), k * k - abs(s)):
                if num % n == 0:
                    return False
        return True
    raise DomainError(f"unknown certificate kind {kind!r}")
