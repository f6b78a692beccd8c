"""Non-vanishing certificates for the Drinfeld-Poincare series P_{k,n}.

At ``xi = T^(1/N)`` the series splits as ``S_1 + S_2 + S_3`` and the
certificate compares absolute values only:

* ``S_1 = -G_n(u(xi))``; its terms ``|gamma_i| |u(xi)|^(n - i(q-1))`` must be
  pairwise distinct, and then ``|S_1|`` is their maximum.  ``|u(xi)|`` is
  ``1/|e_C(pi~ xi)|``, read off the dominant term of the Carlitz exponential;
  it equals ``q^(-q/(q-1) - q/N)``.
* ``|S_2| < max_i |gamma_i| |pi~|^(-(n - i(q-1))) |xi|^(-(k - n + i(q-1)))``.
* every term of ``S_3`` is below ``max_i |gamma_i| |pi~|^(-(n +- i(q-1))) |xi|^(-(k - n + i(q-1)))``;
  both signs are evaluated and the weaker bound decides.

Both bounds are strict, so ``|S_1| >= bound`` already forces ``|S_1| > |S_2|``
(resp. ``|S_3|``); at ``k = n(q+1)`` the S_2 bound meets ``|S_1|`` exactly.

Also here: the binomial identities behind ``D_n P_{k,1} = P_{k+2n,1+n}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .ff_algebra import GF
from .goss import goss_poly
from .valuation import AbsVal, max_abs


class PreconditionError(ValueError):
    """An input violates the theorem's hypotheses; the message names which."""


@dataclass(frozen=True)
class Certificate:
    q: int
    k: int
    n: int
    N: int
    u_abs: AbsVal
    s1_term_values: tuple[tuple[int, AbsVal], ...]
    distinct: bool
    s1: AbsVal
    s2_bound: AbsVal
    s3_bound_minus: AbsVal
    s3_bound_plus: AbsVal

    @property
    def s3_bound(self) -> AbsVal:
        """The weaker of the two S_3 bounds."""
        return max(self.s3_bound_minus, self.s3_bound_plus)

    def certified_under(self, variant: str) -> bool:
        s3 = {"minus": self.s3_bound_minus, "plus": self.s3_bound_plus, "weaker": self.s3_bound}[variant]
        # the bounds are strict upper bounds, hence >= rather than >
        return self.distinct and self.s1 >= self.s2_bound and self.s1 >= s3

    @property
    def verdict(self) -> str:
        return "certified" if self.certified_under("weaker") else "inconclusive"

    @property
    def variant_flag(self) -> dict[str, bool]:
        return {v: self.certified_under(v) for v in ("minus", "plus")}

    def to_json_obj(self) -> dict:
        def ex(v: AbsVal):
            return None if v.is_zero else str(v.exponent)

        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "N": self.N,
            "u_xi_exponent": ex(self.u_abs),
            "s1_terms": [{"i": i, "exponent": ex(v)} for i, v in self.s1_term_values],
            "distinct": self.distinct,
            "s1_exponent": ex(self.s1),
            "s2_bound_exponent": ex(self.s2_bound),
            "s3_bound_exponent": {"minus": ex(self.s3_bound_minus), "plus": ex(self.s3_bound_plus)},
            "variant_flag": self.variant_flag,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def report(self) -> str:
        lines = [
            f"q = {self.q}, k = {self.k}, n = {self.n}, N = {self.N}",
            f"|u(xi_N)| = q^({self.u_abs.exponent})",
            "S1 terms |gamma_i| |u(xi_N)|^(n - i(q-1)):",
        ]
        lines += [f"  i = {i}: q^({v.exponent})" for i, v in self.s1_term_values]
        lines += [
            f"pairwise distinct: {self.distinct}",
            f"|S1|      = q^({self.s1.exponent})",
            f"|S2|      < q^({self.s2_bound.exponent})",
            f"|S3 term| < q^({self.s3_bound_minus.exponent})  [exponent n - i(q-1)]",
            f"|S3 term| < q^({self.s3_bound_plus.exponent})  [exponent n + i(q-1)]",
            f"verdict: {self.verdict}",
        ]
        return "\n".join(lines)


def certify_nonvanishing(k: int, n: int, q: int, N: int | None = None) -> Certificate:
    """Valuation certificate that ``P_{k,n}(T^(1/N)) != 0``."""
    field = GF(q)
    if n < 1:
        raise PreconditionError(f"n >= 1 required, got n = {n}")
    if (k - 2 * n) % (q - 1):
        raise PreconditionError(f"k = {k} is not congruent to 2n = {2 * n} mod q-1 = {q - 1}")
    if n * (q + 1) > k:
        raise PreconditionError(f"n > k/(q+1): {n} > {k}/{q + 1}")
    bound = n * q * (q - 1)
    if N is None:
        N = bound + 1
    elif N <= bound:
        raise PreconditionError(f"N > n*q*(q-1) = {bound} required, got N = {N}")
    G = goss_poly(n, field)
    pi = AbsVal(q, Fraction(q, q - 1))
    xi = AbsVal(q, Fraction(1, N))
    u_abs = AbsVal(q, 0) / carlitz_exp_abs(q, pi * xi)
    terms, s2_terms, s3_minus, s3_plus = [], [], [], []
    for i in G.terms:
        e = n - i * (q - 1)
        g_abs = G.coeff_abs(i)
        terms.append((i, g_abs * u_abs**e))
        tail = xi ** (-(k - n + i * (q - 1)))
        s2_terms.append(g_abs * pi ** (-e) * tail)
        s3_minus.append(g_abs * pi ** (-e) * tail)
        s3_plus.append(g_abs * pi ** (-(n + i * (q - 1))) * tail)
    values = [v for _, v in terms]
    distinct = len(set(values)) == len(values)
    return Certificate(
        q=q,
        k=k,
        n=n,
        N=N,
        u_abs=u_abs,
        s1_term_values=tuple(terms),
        distinct=distinct,
        s1=max_abs(values),
        s2_bound=max_abs(s2_terms),
        s3_bound_minus=max_abs(s3_minus),
        s3_bound_plus=max_abs(s3_plus),
    )


def carlitz_exp_abs(q: int, w: AbsVal) -> AbsVal:
    """``|e_C(w)|`` from ``e_C(w) = sum_i w^(q^i) / D_i`` when one term strictly dominates.

    ``|D_i| = q^(i q^i)``, so term i has exponent ``q^i (r - i)`` for ``|w| = q^r``.
    """
    if w.is_zero:
        return w
    r = w.exponent
    exps = []
    i = 0
    while i <= r + 1 or not exps:
        exps.append(q**i * (r - i))
        i += 1
    top = max(exps)
    if exps.count(top) > 1:
        raise ValueError(f"no dominant term in e_C at |w| = q^({r})")
    return AbsVal(q, top)


def binom(M: int, N: int) -> int:
    """Binomial coefficient as a polynomial in the upper index; 0 for N < 0."""
    if N < 0:
        return 0
    num = 1
    for t in range(N):
        num *= M - t
    return num // factorial(N)


def lemma1_sum(w1: int, w2: int, w3: int) -> int:
    """``sum_{r=0}^{w1} binom(w2+r, r) binom(w3-r, w1-r)``; equals binom(w2+w3+1, w1)."""
    if min(w1, w2, w3) < 0:
        raise ValueError("lemma1_sum takes non-negative arguments")
    return sum(binom(w2 + r, r) * binom(w3 - r, w1 - r) for r in range(w1 + 1))


def collapse_sum(k: int, n: int, i: int) -> int:
    """``sum_{r=0}^{n-i} binom(k+r-1, r) binom(n-r-1, n-r-i)``; equals binom(k+n-1, n-i)."""
    return sum(binom(k + r - 1, r) * binom(n - r - 1, n - r - i) for r in range(n - i + 1))
