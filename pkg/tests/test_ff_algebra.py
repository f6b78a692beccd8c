from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from drinfeld import GF, K, AbsVal, Poly, RatFunc, abs_val, monic_polys, parse, parse_poly, solve_linear
from drinfeld.ff_algebra import InconsistentSystemError, format_poly

QS = [2, 3, 4, 5, 9]


def poly_st(q: int, max_deg: int = 6):
    return st.lists(st.integers(0, q - 1), max_size=max_deg + 1)


@pytest.mark.parametrize("q", QS)
@given(data=st.data())
def test_field_axioms(q, data):
    F = GF(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


def test_extension_moduli():
    # lexicographically smallest monic irreducibles, lowest degree first
    assert GF(4).modulus == (1, 1, 1)
    assert GF(9).modulus == (1, 0, 1)
    assert GF(8).modulus == (1, 1, 0, 1)
    w = GF(9).w
    assert GF(9).mul(w, w) == GF(9).from_int(-1)


@pytest.mark.parametrize("bad", [0, 1, 6, 12, 100])
def test_non_prime_power_rejected(bad):
    with pytest.raises(ValueError):
        GF(bad)


@pytest.mark.parametrize("q", [2, 3, 4, 9])
@given(data=st.data())
def test_division_with_remainder(q, data):
    F = GF(q)
    a = Poly(F, data.draw(poly_st(q, 9)))
    b = Poly(F, data.draw(poly_st(q, 5)))
    if not b:
        with pytest.raises(ZeroDivisionError):
            divmod(a, b)
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree() < b.degree()


@pytest.mark.parametrize("q", [3, 4])
@given(data=st.data())
def test_backends_agree(q, data):
    from conftest import BACKENDS

    fields = [GF(q, name) for name in BACKENDS]
    a_c = data.draw(poly_st(q, 12))
    b_c = data.draw(poly_st(q, 8))
    results = []
    for F in fields:
        a, b = Poly(F, a_c), Poly(F, b_c)
        row = [a + b, a - b, a * b, -a, a.scale(q - 1)]
        if b:
            row += list(divmod(a, b))
        row.append(a.gcd(b) if (a or b) else F.zero)
        results.append([p.coeffs for p in row])
    assert all(r == results[0] for r in results)


def test_gcd_is_monic(F3):
    T = F3.T
    a = (T + 1) * (T**2 + 1) * 2
    b = (T + 1) * (T + 2)
    assert a.gcd(b) == T + 1


@given(poly_st(3, 5), poly_st(3, 5))
def test_ratfunc_canonical(n, d):
    F = GF(3)
    num, den = Poly(F, n), Poly(F, d)
    if not den:
        with pytest.raises(ZeroDivisionError):
            RatFunc(num, den)
        return
    x = RatFunc(num, den)
    assert x.den.is_monic()
    assert x.num.gcd(x.den).is_one() or not x.num
    assert RatFunc(x.num, x.den) == x
    assert (x.num, x.den) == (RatFunc(x.num, x.den).num, RatFunc(x.num, x.den).den)
    if not num:
        assert x.den.is_one()


@given(poly_st(5, 4), poly_st(5, 4), poly_st(5, 4), poly_st(5, 4))
def test_abs_val_laws(a, b, c, d):
    F = GF(5)
    if not any(b) or not any(d):
        return
    x, y = RatFunc(Poly(F, a), Poly(F, b)), RatFunc(Poly(F, c), Poly(F, d))
    assert abs_val(x * y) == abs_val(x) * abs_val(y)
    s = abs_val(x + y)
    assert s <= max(abs_val(x), abs_val(y))
    if abs_val(x) != abs_val(y):
        assert s == max(abs_val(x), abs_val(y))


def test_abs_val_examples(F3):
    x = parse(F3, "T^3 - T")
    assert abs_val(x) == AbsVal(3, 3)
    assert abs_val(x.inverse()) == AbsVal(3, -3)
    assert abs_val(K(F3, 0)).is_zero


def test_monic_polys_order():
    F = GF(3)
    assert [str(a) for a in monic_polys(F, 0)] == ["1"]
    assert [str(a) for a in monic_polys(F, 1)] == ["T", "T + 1", "T + 2"]
    two = monic_polys(F, 2)
    assert len(two) == 9 and str(two[0]) == "T^2"
    assert len(monic_polys(GF(4), 3)) == 64


@pytest.mark.parametrize(
    "q, text",
    [
        (3, "2*T^5 + T^2 + 1"),
        (3, "1/(T^3 + 2*T)"),
        (3, "(T^2 + 1)/(T^6 + T^4 + T^2)"),
        (5, "4*T + 3"),
        (4, "w*T^2 + (w + 1)"),
        (9, "(w + 2)*T^3 + 2*w"),
        (2, "0"),
    ],
)
def test_text_round_trip(q, text):
    F = GF(q)
    x = parse(F, text)
    assert parse(F, str(x)) == x


def test_parser_arithmetic(F3):
    assert parse(F3, "(T+1)^2 - T^2 - 2*T") == K(F3, 1)
    assert parse(F3, "T**3 / T") == parse(F3, "T^2")
    assert parse_poly(F3, "T^3 - T") == F3.T**3 - F3.T
    with pytest.raises(ValueError):
        parse(F3, "T +")
    with pytest.raises(ValueError):
        parse_poly(F3, "1/T")


def test_poly_format():
    F = GF(4)
    w = F.w
    f = Poly(F, [F.add(w, 1), 0, w])
    assert format_poly(f) == "w*T^2 + (w + 1)"
    assert format_poly(GF(3).zero) == "0"


def test_frobenius_is_pth_power():
    F = GF(9)
    f = parse_poly(F, "w*T^2 + T + 2*w")
    assert f.frobenius() == f**3


def test_solve_linear_examples(F3):
    one, zero = K(F3, 1), K(F3, 0)
    cols = [[one, zero], [one, one]]
    assert solve_linear(cols, [K(F3, 2), one]) == [one, one]
    ident = [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
    target = [parse(F3, "T"), parse(F3, "1/T"), K(F3, 2)]
    assert solve_linear(ident, target) == target
    with pytest.raises(InconsistentSystemError) as exc:
        solve_linear([[one, zero]], [zero, one])
    # 0-based: the second row
    assert exc.value.row == 1


@given(st.lists(st.lists(poly_st(3, 3), min_size=4, max_size=4), min_size=1, max_size=3), st.data())
def test_solve_linear_reproduces_target(col_coeffs, data):
    F = GF(3)
    cols = [[K(F, Poly(F, c)) for c in col] for col in col_coeffs]
    xs = [K(F, Poly(F, data.draw(poly_st(3, 2)))) for _ in cols]
    target = [sum((x * col[r] for x, col in zip(xs, cols)), K(F, 0)) for r in range(4)]
    try:
        sol = solve_linear(cols, target)
    except ArithmeticError:
        return  # rank-deficient draw
    recombined = [sum((x * col[r] for x, col in zip(sol, cols)), K(F, 0)) for r in range(4)]
    assert recombined == target


def test_solve_linear_dimension_mismatch(F3):
    with pytest.raises(ValueError):
        solve_linear([[K(F3, 1)]], [K(F3, 1), K(F3, 0)])
