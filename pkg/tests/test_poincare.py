from __future__ import annotations

import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from drinfeld import AbsVal, certify_nonvanishing, lemma1_sum
from drinfeld.poincare import PreconditionError, carlitz_exp_abs, collapse_sum
from drinfeld.valuation import max_abs


def test_certificate_examples():
    c = certify_nonvanishing(4, 1, 3)
    assert c.N == 7 and c.verdict == "certified"
    assert c.u_abs == AbsVal(3, Fraction(-3, 2) - Fraction(3, 7))
    assert c.variant_flag == {"minus": True, "plus": True}
    c = certify_nonvanishing(10, 2, 3)
    assert c.N == 13 and c.verdict == "certified"
    assert len(c.s1_term_values) == 1


@pytest.mark.parametrize(
    "k, n, q, N, needle",
    [
        (16, 7, 3, None, "n > k/(q+1)"),
        (5, 1, 3, None, "congruent"),
        (4, 0, 3, None, "n >= 1"),
        (4, 1, 3, 6, "N > n*q*(q-1)"),
    ],
)
def test_preconditions(k, n, q, N, needle):
    with pytest.raises(PreconditionError) as exc:
        certify_nonvanishing(k, n, q, N)
    assert needle in str(exc.value)


def _admissible(q: int, kmax: int):
    for k in range(2, kmax):
        for n in range(1, k // (q + 1) + 1):
            if (k - 2 * n) % (q - 1) == 0:
                yield k, n


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_every_admissible_instance_certified(q):
    for k, n in _admissible(q, 90):
        c = certify_nonvanishing(k, n, q)
        assert c.distinct, (k, n)
        assert c.verdict == "certified", (k, n)
        assert c.s1 == max_abs([v for _, v in c.s1_term_values])


@pytest.mark.parametrize("q", [3, 4])
def test_monotone_in_N(q):
    for k, n in _admissible(q, 60):
        base = n * q * (q - 1) + 1
        for N in (base, base + 7, 10 * base):
            assert certify_nonvanishing(k, n, q, N).verdict == "certified"


def test_multi_gap_instance():
    # G_7 at q=3 has three gaps
    c = certify_nonvanishing(28, 7, 3)
    assert [i for i, _ in c.s1_term_values] == [0, 1, 2]
    assert c.verdict == "certified"


def test_json_and_report():
    c = certify_nonvanishing(10, 2, 3)
    obj = json.loads(c.to_json())
    assert obj["verdict"] == "certified" and obj["N"] == 13
    assert obj["s1_exponent"] == "-45/13"
    assert "verdict: certified" in c.report()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_u_abs_first_principles(q):
    # |e_C(pi~ xi)| = |pi~| |xi|^q: the i = 1 term dominates
    for N in (q * (q - 1) + 1, 50, 1000):
        pi_xi = AbsVal(q, Fraction(q, q - 1) + Fraction(1, N))
        assert carlitz_exp_abs(q, pi_xi) == AbsVal(q, Fraction(q, q - 1) + Fraction(q, N))
    assert carlitz_exp_abs(3, AbsVal(3, Fraction(1, 2))) == AbsVal(3, Fraction(1, 2))
    with pytest.raises(ValueError):
        carlitz_exp_abs(3, AbsVal(3, Fraction(3, 2)))  # i = 0 and i = 1 tie


def test_boundary_weight_meets_s2_bound():
    # k = n(q+1): the strict S_2 bound equals |S_1|, which still separates them
    c = certify_nonvanishing(4, 1, 3)
    assert c.s1 == c.s2_bound and c.verdict == "certified"
    c = certify_nonvanishing(12, 2, 5)
    assert c.s1 == c.s2_bound
    c = certify_nonvanishing(10, 2, 3)
    assert c.s1 > c.s2_bound


def test_lemma_examples():
    assert lemma1_sum(2, 1, 2) == 6
    assert lemma1_sum(3, 0, 3) == 4
    assert all(lemma1_sum(0, a, b) == 1 for a in range(5) for b in range(5))
    with pytest.raises(ValueError):
        lemma1_sum(-1, 0, 0)


def test_lemma_exhaustive():
    for w1 in range(31):
        for w2 in range(31):
            for w3 in range(31):
                assert lemma1_sum(w1, w2, w3) == comb(w2 + w3 + 1, w1)


def test_collapse_identity():
    for k in range(1, 21):
        for n in range(13):
            for i in range(n + 1):
                assert collapse_sum(k, n, i) == comb(k + n - 1, n - i)


exponents = st.fractions(min_value=-20, max_value=20, max_denominator=30)
absvals = st.one_of(st.just(None), exponents).map(lambda e: AbsVal(5, e))


@given(absvals, absvals, absvals)
def test_absval_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    if a <= b and b <= c:
        assert a <= c
    if not a.is_zero:
        assert (a / a) == AbsVal(5, 0)
        assert a**3 == a * a * a


def test_absval_mixed_q():
    with pytest.raises(ValueError):
        AbsVal(3, 1) < AbsVal(5, 1)
