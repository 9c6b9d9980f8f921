import random
from math import gcd

import pytest

from lenslab import surgery
from lenslab.exactmath import DegenerateSurgeryError, DomainError


def test_h1_examples():
    assert surgery.h1_after_surgery(9, 2, 1) == 5
    assert surgery.h1_after_surgery(7, 0, 1) == 7
    assert surgery.h1_after_surgery(8, 4, 3) == 8
    with pytest.raises(DegenerateSurgeryError):
        surgery.h1_after_surgery(4, 2, 1)
    with pytest.raises(DegenerateSurgeryError):
        surgery.h1_after_surgery(4, 0, 0)


def test_framing_sign():
    assert surgery.framing_sign(6, 2, 1) == 1
    assert surgery.framing_sign(10, 3, 0) == -1
    assert surgery.framing_sign(5, 0, -1) == -1


def test_parity_examples():
    assert surgery.parity_admissible(9, -9, 3, 2) == (True, 1)
    assert surgery.parity_admissible(6, -2, 2, 2) == (False, 2)
    assert surgery.parity_admissible(7, -7, 3, 3) == (False, 1)
    with pytest.raises(DomainError):
        surgery.parity_admissible(6, -3, 1, 1)


def test_cyclicity_examples():
    assert surgery.cyclicity_admissible(8, 4, 3, (1, 1))
    assert surgery.cyclicity_admissible(8, 4, 1, (1, 1))
    assert surgery.cyclicity_data(8, 4, 3, (1, 1)) == (2, 1, 4)
    assert surgery.cyclicity_data(8, 4, 1, (1, 1)) == (-2, 3, 4)
    with pytest.raises(DomainError):
        surgery.cyclicity_data(8, 4, 3, (2, 1))
    with pytest.raises(DomainError):
        surgery.cyclicity_admissible(8, 0, 3)


def test_cyclicity_coprime_case_is_vacuous():
    for n in range(2, 40):
        for k in range(1, n // 2 + 1):
            if gcd(n, k) == 1:
                for m in range(-5, 6):
                    assert surgery.cyclicity_admissible(n, k, m)


def test_bezout_independence():
    rng = random.Random(11)
    for n in range(2, 61):
        for k in range(1, n // 2 + 1):
            for m in range(-n, n + 1):
                ref = surgery.cyclicity_admissible(n, k, m)
                for _ in range(10):
                    pair = surgery.bezout_pair(n, k, rng.randint(-50, 50))
                    assert surgery.cyclicity_admissible(n, k, m, pair) == ref


def _essential(cands):
    return [(c.k, c.m, c.tag) for c in cands if c.k >= 1]


def test_enumeration_examples():
    assert _essential(surgery.enumerate_candidates(9, -5)) == [(2, 1, "E")]
    assert _essential(surgery.enumerate_candidates(7, -7)) == []
    nine = surgery.enumerate_candidates(9, -9)
    assert [c.tag for c in nine if c.k == 0] == ["B", "B"]
    live = [(c.k, c.m, c.tag) for c in nine if c.k >= 1 and c.cyclic]
    assert live == [(3, 2, "E")]


def test_enumeration_preconditions():
    with pytest.raises(DomainError):
        surgery.enumerate_candidates(5, -7)
    with pytest.raises(DomainError):
        surgery.enumerate_candidates(6, 3)


def test_case_split_exhaustive():
    for n in range(1, 101):
        for s in range(-n, n + 1):
            if s == 0 or (n - s) % 2:
                continue
            for c in surgery.enumerate_candidates(n, s):
                assert c.tag in surgery.TAGS
                assert c.h1 == abs(s)
                if c.k == 0:
                    assert c.tag == "B"
                    continue
                assert 1 <= c.k <= n // 2
                if c.m in (c.k, c.k - 2):
                    assert c.tag == "parity-excluded"
                ok, _ = surgery.parity_admissible(n, s, c.k, c.m)
                assert ok == (c.tag != "parity-excluded")


def test_case_e_range_reproduced():
    found = set()
    for n in range(1, 201):
        for k in range(2, n // 2 + 1):
            s = abs(n * k - n - k * k)
            if 0 < s <= n:
                found.add((n, k))
    expected = {(n, k) for n in range(1, 201) for k in (2, 3, 4) if surgery.in_case_e_range(n, k)}
    assert found == expected
