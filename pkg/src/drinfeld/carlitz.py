"""Carlitz module data: brackets [i], the products D_i, the polynomials C_a,
the Carlitz exponential and the normalised zeta values ``zeta_A(k)/pi~^k``."""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .ff_algebra import FiniteField, Poly, RatFunc
from .series import USeries

_lock = threading.Lock()
_D_cache: dict[int, list[Poly]] = {}


def bracket(field: FiniteField, i: int) -> Poly:
    """``[i] = T^(q^i) - T``."""
    if i < 1:
        raise ValueError("brackets start at i = 1")
    return Poly.monomial(field, field.q**i) - field.T


def bigD(field: FiniteField, i: int) -> Poly:
    """``D_0 = 1`` and ``D_i = [i] * D_(i-1)^q``."""
    if i < 0:
        raise ValueError("D_i needs i >= 0")
    with _lock:
        table = _D_cache.setdefault(field.q, [field.one])
        while len(table) <= i:
            j = len(table)
            table.append(bracket(field, j) * table[-1].frobenius(field.l))
        return table[i]


def exp_coeff(field: FiniteField, i: int) -> RatFunc:
    """Coefficient ``1/D_i`` of ``z^(q^i)`` in the Carlitz exponential."""
    return RatFunc._raw(field.one, bigD(field, i))


@dataclass(frozen=True)
class CarlitzPoly:
    """``C_a(X) = sum_i coeffs[i] * X^(q^i)``."""

    a: Poly
    coeffs: tuple[Poly, ...]

    @property
    def field(self) -> FiniteField:
        return self.a.field

    def __call__(self, x):
        q = self.field.q
        return sum((c * x ** (q**i) for i, c in enumerate(self.coeffs)), self.field.zero * x)

    def lines(self) -> list[str]:
        return [f"c_{i} = {c}" for i, c in enumerate(self.coeffs)]


def _c_of_T_powers(field: FiniteField, d: int) -> list[list[Poly]]:
    """Coefficient lists of C_(T^j) for j = 0..d via c_i(Tb) = T c_i(b) + c_(i-1)(b)^q."""
    T = field.T
    out = [[field.one]]
    for _ in range(d):
        prev = out[-1]
        nxt = []
        for i in range(len(prev) + 1):
            c = T * prev[i] if i < len(prev) else field.zero
            if i >= 1:
                c = c + prev[i - 1].frobenius(field.l)
            nxt.append(c)
        out.append(nxt)
    return out


def carlitz_poly(a: Poly) -> CarlitzPoly:
    """The F_q-linear polynomial C_a, extended linearly from C_T(X) = TX + X^q."""
    if not a:
        raise ValueError("C_a is only defined here for a != 0")
    field = a.field
    d = int(a.degree())
    powers = _c_of_T_powers(field, d)
    coeffs = [field.zero] * (d + 1)
    for j, aj in enumerate(a.coeffs):
        if aj:
            for i, c in enumerate(powers[j]):
                coeffs[i] = coeffs[i] + c.scale(aj)
    return CarlitzPoly(a, tuple(coeffs))


def exp_series(field: FiniteField, prec: int) -> USeries:
    """Truncation of ``e_C(z) = sum z^(q^i) / D_i`` through ``z^prec``."""
    terms = {}
    i = 0
    while field.q**i <= prec:
        terms[field.q**i] = exp_coeff(field, i)
        i += 1
    return USeries.from_dict(field, terms, prec, var="z")


def zeta_ratio(field: FiniteField, k: int) -> RatFunc:
    """``zeta_A(k) / pi~^k`` for (q-1) | k, read off as the z^k coefficient of z/e_C(z)."""
    q = field.q
    if k < q - 1 or k % (q - 1):
        raise ValueError(f"k must be a positive multiple of q-1={q - 1}, got {k}")
    # e_C(z)/z = sum z^(q^i - 1)/D_i
    terms = {}
    i = 0
    while field.q**i - 1 <= k:
        terms[field.q**i - 1] = exp_coeff(field, i)
        i += 1
    return USeries.from_dict(field, terms, k, var="z").invert()[k]
