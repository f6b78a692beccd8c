"""Goss polynomials for the Carlitz lattice.

``G_n(X) = sum_i gamma_i X^(n - i(q-1))`` with ``gamma_0 = 1``.  The
coefficient ``gamma_i`` is a polynomial in the exponential coefficients
``alpha_t = 1/D_t`` of weight ``i`` (``alpha_t`` weighs ``1 + q + ... + q^(t-1)``),
so all weight-``i`` coefficients share the common denominator

    Delta_0 = 1,   Delta_i = lcm_t  D_t * Delta_(i - w_t).

Both routes below work with numerators over ``Delta_i`` and only touch
polynomials in their inner loops; reduction to lowest terms happens once,
when a caller asks for :attr:`GossPoly.coeffs`.

* :func:`goss_poly` runs ``G_n = X (G_(n-1) + sum_t alpha_t G_(n-q^t))``
  with ``G_1 = X G_0``, ``G_0 = 1`` and ``G_j = 0`` in the alpha-terms for
  ``j <= 0`` (so ``G_n = X^n`` for ``n <= q``).
* :func:`goss_poly_oracle` reads ``G_n = X [z^(n-1)] 1/(1 - X e_C(z))``, i.e.
  the coefficient of ``X^(j+1)`` is ``[z^(n-1)] e_C(z)^j``.
"""

from __future__ import annotations

import json
import threading
from functools import cached_property

from .carlitz import bigD
from .ff_algebra import FiniteField, Poly, RatFunc, format_ratfunc
from .valuation import AbsVal


def _weight(q: int, t: int) -> int:
    return (q**t - 1) // (q - 1)


class _DenominatorTable:
    """Delta_i and the cofactors Delta_i / (D_t Delta_(i - w_t))."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.deltas: list[Poly] = [field.one]
        self.cofactors: list[dict[int, Poly]] = [{0: field.one}]
        self._lock = threading.Lock()

    def ensure(self, i_max: int) -> None:
        with self._lock:
            q = self.field.q
            while len(self.deltas) <= i_max:
                i = len(self.deltas)
                parts = {}
                t = 1
                while _weight(q, t) <= i:
                    parts[t] = bigD(self.field, t) * self.deltas[i - _weight(q, t)]
                    t += 1
                lcm = None
                for part in parts.values():
                    lcm = part if lcm is None else lcm * part.exact_div(lcm.gcd(part))
                cof = {0: self.field.one}
                for t, part in parts.items():
                    cof[t] = lcm.exact_div(part)
                self.deltas.append(lcm)
                self.cofactors.append(cof)

    def delta(self, i: int) -> Poly:
        self.ensure(i)
        return self.deltas[i]


class GossPoly:
    """``G_n`` over ``field``: gap index ``i`` -> (numerator, denominator).

    The pairs are not necessarily reduced; :attr:`coeffs` and :attr:`gaps`
    give reduced coefficients.
    """

    def __init__(self, field: FiniteField, n: int, terms: dict[int, tuple[Poly, Poly]]):
        self.field = field
        self.n = n
        self.terms = {i: nd for i, nd in sorted(terms.items()) if nd[0]}

    def exponent(self, i: int) -> int:
        return self.n - i * (self.field.q - 1)

    @cached_property
    def gaps(self) -> list[tuple[int, RatFunc]]:
        """Nonzero ``(i, gamma_i)`` in increasing ``i``."""
        return [(i, RatFunc(num, den)) for i, (num, den) in self.terms.items()]

    @cached_property
    def coeffs(self) -> dict[int, RatFunc]:
        """Exponent of X -> reduced coefficient, increasing exponent."""
        return {self.exponent(i): c for i, c in reversed(self.gaps)}

    @property
    def s(self) -> int:
        """Largest gap index with a nonzero coefficient."""
        return max(self.terms) if self.terms else -1

    @property
    def ord_x(self) -> int | None:
        return self.exponent(self.s) if self.terms else None

    def degree(self) -> int | None:
        return self.exponent(min(self.terms)) if self.terms else None

    def coeff_abs(self, i: int) -> AbsVal:
        """|gamma_i|, read from the unreduced pair (degree difference is invariant)."""
        if i not in self.terms:
            return AbsVal.zero(self.field.q)
        num, den = self.terms[i]
        return AbsVal(self.field.q, num.degree() - den.degree())

    def frobenius(self) -> GossPoly:
        """``G_n^p`` as a polynomial of degree ``p*n`` (Frobenius is additive)."""
        p = self.field.p
        out = {}
        for i, (num, den) in self.terms.items():
            # exponent p*(n - i(q-1)) = p*n - (p*i)(q-1)
            out[p * i] = (num.frobenius(), den.frobenius())
        return GossPoly(self.field, p * self.n, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GossPoly):
            return NotImplemented
        if self.n != other.n or self.field.q != other.field.q:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        for i, (n1, d1) in self.terms.items():
            n2, d2 = other.terms[i]
            if d1 == d2:
                if n1 != n2:
                    return False
            elif n1 * d2 != n2 * d1:
                return False
        return True

    __hash__ = None

    def __repr__(self) -> str:
        return f"GossPoly(q={self.field.q}, n={self.n})"

    def __str__(self) -> str:
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            mon = "X" if e == 1 else f"X^{e}"
            cs = format_ratfunc(c)
            if cs == "1":
                parts.append(mon)
            else:
                if " + " in cs or "/" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mon}")
        return " + ".join(parts) if parts else "0"

    def to_json_obj(self) -> dict:
        return {
            "var": "X",
            "q": self.field.q,
            "n": self.n,
            "degree": self.degree(),
            "coeffs": [{"pow": e, "value": format_ratfunc(c)} for e, c in sorted(self.coeffs.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


class _RecursionTable:
    def __init__(self, field: FiniteField, seed: int):
        self.field = field
        self.dens = _denominators(field)
        self.nums: list[dict[int, Poly]] = [{0: field.const(seed)} if field.const(seed) else {}]
        self._lock = threading.Lock()

    def get(self, n: int) -> dict[int, Poly]:
        with self._lock:
            q = self.field.q
            while len(self.nums) <= n:
                m = len(self.nums)
                self.dens.ensure((m - 1) // (q - 1) + 1)
                acc = dict(self.nums[m - 1])
                t = 1
                # G_0 only seeds G_1 = X*G_0; alpha-terms need m - q^t >= 1
                while q**t < m:
                    w = _weight(q, t)
                    for i0, num in self.nums[m - q**t].items():
                        i = i0 + w
                        term = num * self.dens.cofactors[i][t]
                        acc[i] = acc[i] + term if i in acc else term
                    t += 1
                self.nums.append({i: v for i, v in acc.items() if v})
            return self.nums[n]


class _OracleTable:
    """``[z^m] e_C(z)^j`` numerators, stored column by column in ``m``."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.dens = _denominators(field)
        self.cols: list[dict[int, Poly]] = [{0: field.one}]
        self._lock = threading.Lock()

    def column(self, m: int) -> dict[int, Poly]:
        with self._lock:
            q = self.field.q
            while len(self.cols) <= m:
                mm = len(self.cols)
                self.dens.ensure(mm // (q - 1) + 1)
                col: dict[int, Poly] = {}
                t = 0
                while q**t <= mm:
                    for j0, num in self.cols[mm - q**t].items():
                        j = j0 + 1
                        i = (mm - j) // (q - 1)
                        term = num * self.dens.cofactors[i][t]
                        col[j] = col[j] + term if j in col else term
                    t += 1
                self.cols.append({j: v for j, v in col.items() if v})
            return self.cols[m]


_tables_lock = threading.RLock()
_den_tables: dict[FiniteField, _DenominatorTable] = {}
_rec_tables: dict[tuple[FiniteField, int], _RecursionTable] = {}
_oracle_tables: dict[FiniteField, _OracleTable] = {}


def _denominators(field: FiniteField) -> _DenominatorTable:
    with _tables_lock:
        if field not in _den_tables:
            _den_tables[field] = _DenominatorTable(field)
        return _den_tables[field]


def goss_poly(n: int, field: FiniteField, *, seed: int = 1) -> GossPoly:
    """``G_n`` by the three-term-style recursion from ``G_0 = seed``.

    ``seed`` exists only as a fault-injection hook; the Goss polynomials need 1.
    """
    if n < 1:
        raise ValueError(f"Goss polynomials are indexed by n >= 1, got {n}")
    with _tables_lock:
        key = (field, seed)
        if key not in _rec_tables:
            _rec_tables[key] = _RecursionTable(field, seed)
        table = _rec_tables[key]
    nums = table.get(n)
    dens = table.dens
    return GossPoly(field, n, {i: (num, dens.delta(i)) for i, num in nums.items()})


def goss_poly_oracle(n: int, field: FiniteField) -> GossPoly:
    """``G_n`` from the generating function ``X z / (1 - X e_C(z))``."""
    if n < 1:
        raise ValueError(f"Goss polynomials are indexed by n >= 1, got {n}")
    q = field.q
    with _tables_lock:
        if field not in _oracle_tables:
            _oracle_tables[field] = _OracleTable(field)
        table = _oracle_tables[field]
    col = table.column(n - 1)
    terms = {}
    for j, num in col.items():
        # coefficient of X^(j+1) = X^(n - i(q-1))
        i = (n - 1 - j) // (q - 1)
        terms[i] = (num, table.dens.delta(i))
    return GossPoly(field, n, terms)
