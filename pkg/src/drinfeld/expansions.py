"""A-expansions ``sum_{a monic} c_a G_n(u_a)`` and their u-expansions.

The named forms live here too: ``f_{k,n} = sum a^(k-n) G_n(u_a)``, the
single-cuspidal family ``f_s = f_{2+s(q-1),1}``, ``h = f_1`` and the
normalised Eisenstein series ``E_k = 1 + zeta_ratio(k)^(-1) sum G_k(u_a)``
with ``g = E_(q-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from functools import lru_cache
from typing import Mapping

from .carlitz import carlitz_poly, zeta_ratio
from .ff_algebra import FiniteField, Poly, RatFunc, K, iter_monic
from .goss import goss_poly
from .series import USeries


@dataclass(frozen=True)
class PowerRule:
    """``c_a = a^e``."""

    e: int

    def coefficient(self, a: Poly) -> Poly:
        return a**self.e

    def times_power(self, n: int) -> PowerRule:
        return PowerRule(self.e + n)


@dataclass(frozen=True)
class CoefficientTable:
    """Explicit ``c_a`` for monic ``a`` of degree <= ``degree_bound``; others vanish."""

    entries: tuple[tuple[Poly, RatFunc], ...]
    degree_bound: int

    @classmethod
    def from_mapping(cls, entries: Mapping[Poly, object], degree_bound: int) -> CoefficientTable:
        items = []
        for a, c in entries.items():
            if not a.is_monic():
                raise ValueError(f"table keys must be monic, got {a}")
            if a.degree() > degree_bound:
                raise ValueError(f"{a} exceeds the table degree bound {degree_bound}")
            items.append((a, K(a.field, c)))
        items.sort(key=lambda kv: (len(kv[0].coeffs), tuple(reversed(kv[0].coeffs))))
        return cls(tuple(items), degree_bound)

    def coefficient(self, a: Poly) -> RatFunc | None:
        for key, c in self.entries:
            if key == a:
                return c
        return None

    def times_power(self, n: int) -> CoefficientTable:
        return CoefficientTable(tuple((a, c * a**n) for a, c in self.entries), self.degree_bound)


@dataclass(frozen=True)
class AExpansion:
    """``scalar * sum_{a monic} c_a G_exponent(u_a)`` with weight/type metadata."""

    field: FiniteField
    exponent: int
    rule: PowerRule | CoefficientTable
    weight: int | None = None
    type_m: int | None = None
    scalar: RatFunc | None = dc_field(default=None)

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError(f"A-expansions need a positive exponent, got {self.exponent}")
        m = self.exponent if self.type_m is None else self.type_m
        object.__setattr__(self, "type_m", m % (self.field.q - 1) if self.field.q > 2 else 0)
        object.__setattr__(self, "scalar", K(self.field, 1 if self.scalar is None else self.scalar))

    def coefficient(self, a: Poly):
        return self.rule.coefficient(a)

    def expand(self, prec: int, **kwargs) -> USeries:
        return expand(self, prec, **kwargs)

    def describe(self) -> str:
        if isinstance(self.rule, PowerRule):
            body = f"sum_(a monic) a^{self.rule.e} G_{self.exponent}(u_a)"
        else:
            body = f"sum_(a monic, deg a <= {self.rule.degree_bound}) c_a G_{self.exponent}(u_a)"
        sc = str(self.scalar)
        return body if sc == "1" else f"({sc}) * {body}"


def _check_monic(a: Poly) -> None:
    if not a:
        raise ValueError("u_a needs a nonzero a")
    if not a.is_monic():
        raise ValueError(f"u_a needs a monic a, got {a}")


@lru_cache(maxsize=4096)
def _u_a_cached(a: Poly, prec: int) -> USeries:
    field = a.field
    d = int(a.degree())
    qd = field.q**d
    if qd > prec:
        return USeries.zero(field, prec)
    if d == 0:
        return USeries.monomial(field, 1, prec)
    # C_a(1/u) = u^(-q^d) * R(u),  R = 1 + sum_{i<d} c_i(a) u^(q^d - q^i)
    cp = carlitz_poly(a)
    r_prec = prec - qd
    terms = {0: 1}
    for i, c in enumerate(cp.coeffs[:-1]):
        e = qd - field.q**i
        if c and e <= r_prec:
            terms[e] = c
    R = USeries.from_dict(field, terms, r_prec)
    inv = R.invert()
    zero = RatFunc._raw(field.zero, field.one)
    return USeries._raw(field, (zero,) * qd + inv.coeffs)


def u_a(a: Poly, prec: int) -> USeries:
    """``u(az)`` as a series in ``u``: ``1 / C_a(1/u)``, of order ``q^deg(a)``."""
    _check_monic(a)
    if prec < 0:
        raise ValueError("precision must be non-negative")
    return _u_a_cached(a, prec)


def _degree_bound(q: int, ord_x: int, prec: int) -> int:
    d = -1
    while q ** (d + 1) * ord_x <= prec:
        d += 1
    return d


def expand(f: AExpansion, prec: int, *, goss_seed: int = 1) -> USeries:
    """u-expansion of ``f`` through ``u^prec``.

    Only monic ``a`` with ``q^deg(a) * ord_X(G_n) <= prec`` can reach ``u^prec``;
    the sum is regrouped as ``sum_i gamma_i sum_a c_a u_a^(n - i(q-1))``.
    """
    field = f.field
    q = field.q
    if prec < 0:
        raise ValueError("precision must be non-negative")
    G = goss_poly(f.exponent, field, seed=goss_seed)
    result = USeries.zero(field, prec)
    if not G.terms:
        return result
    D = _degree_bound(q, G.ord_x, prec)
    if isinstance(f.rule, CoefficientTable):
        D = min(D, f.rule.degree_bound)
    gaps = dict(G.gaps)
    exps = {G.exponent(i): i for i in gaps}
    sums: dict[int, USeries] = {}
    for d in range(D + 1):
        qd = q**d
        wanted = sorted(e for e in exps if e * qd <= prec)
        if not wanted:
            continue
        for a in iter_monic(field, d):
            c = f.coefficient(a)
            if c is None or not c:
                continue
            ua = u_a(a, prec)
            step_cache: dict[int, USeries] = {}
            prev_e, prev = 0, None
            for e in wanted:
                if prev is None:
                    cur = ua**e
                else:
                    diff = e - prev_e
                    if diff not in step_cache:
                        step_cache[diff] = ua**diff
                    cur = prev * step_cache[diff]
                term = cur.scale(c)
                sums[e] = sums[e] + term if e in sums else term
                prev_e, prev = e, cur
    for e, s in sums.items():
        result = result + s.scale(gaps[exps[e]])
    if f.scalar != 1:
        result = result.scale(f.scalar)
    return result


def make_f(k: int, n: int, field: FiniteField) -> AExpansion:
    """``f_{k,n} = sum a^(k-n) G_n(u_a)`` of weight k and type n mod (q-1)."""
    if n < 1:
        raise ValueError(f"f_(k,n) needs n >= 1, got n={n}")
    if k <= n:
        raise ValueError(f"f_(k,n) needs k > n, got k={k} <= n={n}")
    return AExpansion(field, n, PowerRule(k - n), weight=k)


def f_s(s: int, field: FiniteField) -> AExpansion:
    """Single-cuspidal ``f_s = sum a^(1+s(q-1)) u_a``, weight 2+s(q-1), type 1."""
    if s < 1:
        raise ValueError(f"f_s is indexed by s >= 1, got {s}")
    return make_f(2 + s * (field.q - 1), 1, field)


def h_form(field: FiniteField) -> AExpansion:
    """``h = sum a^q u_a = f_1``."""
    return make_f(field.q + 1, 1, field)


def eisenstein_expansion(k: int, field: FiniteField) -> AExpansion:
    """The A-expansion part ``zeta_ratio(k)^(-1) sum G_k(u_a)`` of E_k."""
    z = zeta_ratio(field, k)
    if not z:
        raise ZeroDivisionError(f"zeta_ratio({k}) vanishes; E_{k} cannot be normalised")
    return AExpansion(field, k, PowerRule(0), weight=k, type_m=0, scalar=z.inverse())


def eisenstein(k: int, prec: int, field: FiniteField) -> USeries:
    """Normalised Eisenstein series ``1 + zeta_ratio(k)^(-1) sum_{a monic} G_k(u_a)``."""
    tail = expand(eisenstein_expansion(k, field), prec)
    return USeries.one(field, prec) + tail


def g_series(prec: int, field: FiniteField) -> USeries:
    return eisenstein(field.q - 1, prec, field)


def named_series(form: str, prec: int, field: FiniteField, s: int | None = None) -> USeries:
    """Expansion of ``h``, ``g`` or ``f_s``."""
    if form == "h":
        return expand(h_form(field), prec)
    if form == "g":
        return g_series(prec, field)
    if form == "f_s":
        if s is None:
            raise ValueError("form f_s needs s")
        return expand(f_s(s, field), prec)
    raise ValueError(f"unknown form {form!r}; expected h, g or f_s")


def with_scalar(f: AExpansion, scalar) -> AExpansion:
    return replace(f, scalar=K(f.field, scalar))
