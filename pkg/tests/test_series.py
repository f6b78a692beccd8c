from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from drinfeld import GF, K, USeries, eval_poly, parse, series_from_json
from drinfeld.series import format_series

F = GF(3)
T = parse(F, "T")


def series_st(prec: int = 6, unit: bool = False):
    coeff = st.sampled_from(["0", "1", "2", "T", "T + 1", "1/T", "2*T^2", "1/(T + 1)"])
    return st.lists(coeff, min_size=prec + 1, max_size=prec + 1).map(
        lambda cs: USeries(F, [parse(F, "1") if unit and i == 0 else parse(F, c) for i, c in enumerate(cs)])
    )


def u(prec: int = 8) -> USeries:
    return USeries.monomial(F, 1, prec)


def test_add_examples():
    f = USeries.from_dict(F, {3: 1, 5: -T}, 8)
    assert f + USeries.zero(F, 8) == f
    assert (u() + (-u())).is_zero()
    assert f + USeries.from_dict(F, {5: T}, 8) == USeries.monomial(F, 3, 8)


def test_mul_examples():
    one = USeries.one(F, 6)
    assert u(6) * one == u(6)
    assert u(6) * u(6) == USeries.monomial(F, 2, 6)
    assert (one + u(6)) * (one - u(6)) == one - USeries.monomial(F, 2, 6)


def test_precision_is_min():
    assert (u(5) + u(9)).prec == 5
    assert (u(5) * u(9)).prec == 5


def test_invert_examples():
    assert USeries.one(F, 4).invert() == USeries.one(F, 4)
    f = USeries.from_dict(F, {0: 1, 2: T}, 6)
    assert f.invert() == USeries.from_dict(F, {0: 1, 2: -T, 4: T**2, 6: -(T**3)}, 6)
    with pytest.raises(ZeroDivisionError):
        u(4).invert()


@given(series_st(), series_st(), series_st())
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(series_st(unit=True))
def test_double_inverse(f):
    assert f.invert().invert() == f
    assert f * f.invert() == USeries.one(F, f.prec)


def test_eval_poly_examples():
    s = USeries.from_dict(F, {1: 1, 2: 1}, 4)
    assert eval_poly({1: 1}, s) == s
    assert eval_poly({2: 1}, s) == USeries.from_dict(F, {2: 1, 3: 2, 4: 1}, 4)
    c = parse(F, "1/(T^3 - T)")
    assert eval_poly({3: 1, 2: c}, u(5)) == USeries.from_dict(F, {3: 1, 2: c}, 5)
    with pytest.raises(ValueError):
        eval_poly({1: 1}, USeries.one(F, 4))


@given(
    st.dictionaries(st.integers(1, 3), st.sampled_from(["1", "T", "1/T"]), max_size=3),
    st.dictionaries(st.integers(1, 3), st.sampled_from(["2", "T + 1"]), max_size=3),
    series_st(7),
)
def test_eval_poly_multiplicative(P, Q, s):
    s = USeries(F, (K(F, 0),) + s.coeffs[1:])
    if s.order() is None:
        return
    P = {e: parse(F, c) for e, c in P.items()}
    Q = {e: parse(F, c) for e, c in Q.items()}
    PQ: dict = {}
    for e1, c1 in P.items():
        for e2, c2 in Q.items():
            PQ[e1 + e2] = PQ.get(e1 + e2, K(F, 0)) + c1 * c2
    assert eval_poly(PQ, s) == eval_poly(P, s) * eval_poly(Q, s)


def test_derivation():
    f = USeries.from_dict(F, {0: 5, 1: 1, 3: T, 4: 2}, 6)
    assert f.derivation() == USeries.from_dict(F, {2: 1, 5: 2 * 4}, 6)


def test_text_format():
    f = USeries.from_dict(F, {3: parse(F, "1/(T^6+T^4+T^2)"), 5: 1}, 8)
    assert format_series(f) == "(1/(T^6 + T^4 + T^2))*u^3 + u^5 + O(u^9)"
    assert str(USeries.zero(F, 3)) == "O(u^4)"


@given(series_st(8))
def test_json_round_trip(f):
    doc = f.to_json()
    obj = json.loads(doc)
    assert obj["var"] == "u" and obj["prec"] == 8
    pows = [c["pow"] for c in obj["coeffs"]]
    assert pows == sorted(pows) and all(f[p] for p in pows)
    assert series_from_json(F, doc) == f
    assert series_from_json(F, obj).prec == f.prec


def test_equality_up_to_min_precision():
    assert USeries.from_dict(F, {1: 1, 7: 1}, 8) == USeries.from_dict(F, {1: 1}, 5)
    assert USeries.from_dict(F, {1: 1, 4: 1}, 8) != USeries.from_dict(F, {1: 1}, 5)
