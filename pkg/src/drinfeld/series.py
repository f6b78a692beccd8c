"""Truncated power series in one variable over K = F_q(T).

A series with precision ``M`` stores the coefficients of ``u^0 .. u^M``;
everything from ``u^(M+1)`` on is unknown.  The display ``O(u^9)`` thus
belongs to precision 8.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .ff_algebra import FiniteField, Poly, RatFunc, K, format_ratfunc, parse


def _zero(field: FiniteField) -> RatFunc:
    return RatFunc._raw(field.zero, field.one)


class USeries:
    """Immutable truncated power series ``sum c_i u^i + O(u^(prec+1))``."""

    __slots__ = ("field", "prec", "coeffs", "var")

    def __init__(self, field: FiniteField, coeffs: Sequence, prec: int | None = None, var: str = "u"):
        if prec is None:
            prec = len(coeffs) - 1
        if prec < 0:
            raise ValueError("precision must be non-negative")
        cs = [K(field, c) for c in coeffs[: prec + 1]]
        cs.extend([_zero(field)] * (prec + 1 - len(cs)))
        self.field = field
        self.prec = prec
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def _raw(cls, field: FiniteField, coeffs: tuple, var: str = "u") -> USeries:
        obj = object.__new__(cls)
        obj.field = field
        obj.prec = len(coeffs) - 1
        obj.coeffs = coeffs
        obj.var = var
        return obj

    @classmethod
    def zero(cls, field: FiniteField, prec: int, var: str = "u") -> USeries:
        return cls._raw(field, (_zero(field),) * (prec + 1), var)

    @classmethod
    def one(cls, field: FiniteField, prec: int, var: str = "u") -> USeries:
        return cls.monomial(field, 0, prec, var=var)

    @classmethod
    def monomial(cls, field: FiniteField, e: int, prec: int, c=1, var: str = "u") -> USeries:
        cs = [_zero(field)] * (prec + 1)
        if e <= prec:
            cs[e] = K(field, c)
        return cls._raw(field, tuple(cs), var)

    @classmethod
    def from_dict(cls, field: FiniteField, terms: Mapping[int, object], prec: int, var: str = "u") -> USeries:
        cs = [_zero(field)] * (prec + 1)
        for e, c in terms.items():
            if e <= prec:
                cs[e] = K(field, c)
        return cls._raw(field, tuple(cs), var)

    # -- inspection ---------------------------------------------------------

    def __getitem__(self, i: int) -> RatFunc:
        if i > self.prec:
            raise IndexError(f"u^{i} is beyond precision {self.prec}")
        return self.coeffs[i]

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c.num]

    def order(self) -> int | None:
        """Least exponent with a nonzero stored coefficient; None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if c.num:
                return i
        return None

    def is_zero(self) -> bool:
        return self.order() is None

    def truncate(self, prec: int) -> USeries:
        if prec > self.prec:
            raise ValueError(f"cannot raise precision from {self.prec} to {prec}")
        return USeries._raw(self.field, self.coeffs[: prec + 1], self.var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        m = min(self.prec, other.prec)
        return self.field.q == other.field.q and self.coeffs[: m + 1] == other.coeffs[: m + 1]

    __hash__ = None

    def __repr__(self) -> str:
        return f"USeries(GF({self.field.q}), {self})"

    def __str__(self) -> str:
        return format_series(self)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: USeries) -> None:
        if self.field.q != other.field.q:
            raise ValueError("series over different fields")

    def __add__(self, other: USeries) -> USeries:
        self._check(other)
        m = min(self.prec, other.prec)
        return USeries._raw(self.field, tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs)), self.var)

    def __neg__(self) -> USeries:
        return USeries._raw(self.field, tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other: USeries) -> USeries:
        return self + (-other)

    def scale(self, c) -> USeries:
        c = K(self.field, c)
        if not c.num:
            return USeries.zero(self.field, self.prec, self.var)
        return USeries._raw(self.field, tuple(x * c if x.num else x for x in self.coeffs), self.var)

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return self.scale(other)
        self._check(other)
        m = min(self.prec, other.prec)
        a = [(i, c) for i, c in enumerate(self.coeffs[: m + 1]) if c.num]
        b = [(j, c) for j, c in enumerate(other.coeffs[: m + 1]) if c.num]
        acc: list = [None] * (m + 1)
        for i, x in a:
            lim = m - i
            for j, y in b:
                if j > lim:
                    break
                t = x * y
                k = i + j
                acc[k] = t if acc[k] is None else acc[k] + t
        zero = _zero(self.field)
        return USeries._raw(self.field, tuple(zero if c is None else c for c in acc), self.var)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> USeries:
        if e < 0:
            return self.invert() ** (-e)
        result = USeries.one(self.field, self.prec, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> USeries:
        """Multiply by ``u^k`` keeping the precision."""
        if k < 0:
            raise ValueError("negative shifts leave power series")
        zero = _zero(self.field)
        cs = ((zero,) * k + self.coeffs)[: self.prec + 1]
        return USeries._raw(self.field, cs, self.var)

    def invert(self) -> USeries:
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0.num:
            raise ZeroDivisionError("series without constant term is not invertible")
        inv0 = c0.inverse()
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c.num and i > 0]
        g: list[RatFunc] = [inv0]
        for n in range(1, self.prec + 1):
            acc = None
            for i, c in nz:
                if i > n:
                    break
                if g[n - i].num:
                    t = c * g[n - i]
                    acc = t if acc is None else acc + t
            g.append(_zero(self.field) if acc is None else -(acc * inv0))
        return USeries._raw(self.field, tuple(g), self.var)

    def derivation(self) -> USeries:
        """``sum i*b_i*u^(i+1)``: the derivation sending u to u^2, same precision."""
        zero = _zero(self.field)
        out = [zero] * (self.prec + 1)
        for i, c in enumerate(self.coeffs[: self.prec]):
            if c.num and i % self.field.p:
                out[i + 1] = c * i
        return USeries._raw(self.field, tuple(out), self.var)

    # -- serialisation ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "var": self.var,
            "prec": self.prec,
            "coeffs": [{"pow": i, "value": format_ratfunc(c)} for i, c in enumerate(self.coeffs) if c.num],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def series_from_json(field: FiniteField, doc: str | dict) -> USeries:
    obj = json.loads(doc) if isinstance(doc, str) else doc
    terms = {int(t["pow"]): parse(field, t["value"]) for t in obj["coeffs"]}
    return USeries.from_dict(field, terms, int(obj["prec"]), var=obj.get("var", "u"))


def format_series(f: USeries) -> str:
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c.num:
            continue
        mon = "1" if i == 0 else (f.var if i == 1 else f"{f.var}^{i}")
        cs = format_ratfunc(c)
        if i == 0:
            terms.append(cs)
        elif cs == "1":
            terms.append(mon)
        else:
            if " + " in cs or "/" in cs:
                cs = f"({cs})"
            terms.append(f"{cs}*{mon}")
    terms.append(f"O({f.var}^{f.prec + 1})")
    return " + ".join(terms)


def eval_poly(poly: Mapping[int, object] | Sequence | Iterable, s: USeries) -> USeries:
    """Substitute the series ``s`` (order >= 1) into a polynomial over K.

    ``poly`` is either a mapping exponent -> coefficient or a dense
    coefficient sequence (lowest degree first).  Powers of ``s`` are built
    incrementally, and powers whose order exceeds the precision are skipped.
    """
    if isinstance(poly, Mapping):
        terms = {int(e): c for e, c in poly.items()}
    elif hasattr(poly, "coeffs") and isinstance(getattr(poly, "coeffs"), Mapping):
        terms = dict(poly.coeffs)
    else:
        terms = dict(enumerate(poly))
    field = s.field
    ord_s = s.order()
    if ord_s == 0:
        raise ValueError("eval_poly needs a series without constant term")
    result = USeries.zero(field, s.prec, s.var)
    if ord_s is None:
        c0 = terms.get(0)
        return result if c0 is None else USeries.monomial(field, 0, s.prec, c0, var=s.var)
    exps = sorted(e for e, c in terms.items() if K(field, c).num and e * ord_s <= s.prec)
    cache = {1: s}

    def power(e: int) -> USeries:
        if e not in cache:
            half = power(e // 2)
            sq = half * half
            cache[e] = sq * s if e % 2 else sq
        return cache[e]

    prev_e, prev = 0, USeries.one(field, s.prec, s.var)
    for e in exps:
        cur = prev * power(e - prev_e) if e - prev_e and prev_e else (power(e) if e else prev)
        result = result + cur.scale(terms[e])
        prev_e, prev = e, cur
    return result
