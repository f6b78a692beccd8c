"""Hyperderivatives of A-expansions and the Lucas-type modularity criterion.

On A-expansions the n-th hyperderivative acts by

    D_n( sum c_a G_w(u_a) ) = binom(w+n-1, n) * sum c_a a^n G_(w+n)(u_a),

and D_n keeps a form of weight k modular when binom(k+n-1, j) = 0 mod p
for every 1 <= j <= n.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .expansions import AExpansion
from .ff_algebra import K
from .series import USeries


def lucas_binom(M: int, N: int, p: int) -> int:
    """``binom(M, N) mod p`` as the product of digitwise binomials in base p."""
    if M < 0 or N < 0:
        raise ValueError("lucas_binom takes non-negative arguments")
    result = 1
    while N:
        m, n = M % p, N % p
        if n > m:
            return 0
        result = result * _small_binom(m, n) % p
        M //= p
        N //= p
    return result


def _small_binom(m: int, n: int) -> int:
    r = 1
    for i in range(n):
        r = r * (m - i) // (i + 1)
    return r


def val_p(x: int, p: int) -> int:
    if x <= 0:
        raise ValueError(f"val_p needs a positive integer, got {x}")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def preserves_modularity(k: int, n: int, p: int) -> bool:
    """True when binom(k+n-1, j) vanishes mod p for all 1 <= j <= n."""
    top = k + n - 1
    return all(lucas_binom(top, j, p) == 0 for j in range(1, n + 1))


@dataclass(frozen=True)
class HyperResult:
    image: AExpansion
    order: int
    modular: bool | None
    vanished: bool

    @property
    def weight(self) -> int | None:
        return self.image.weight

    @property
    def type_m(self) -> int:
        return self.image.type_m


def hyper_derive(f: AExpansion, n: int) -> HyperResult:
    """Apply D_n to an A-expansion."""
    if n < 0:
        raise ValueError(f"hyperderivative order must be >= 0, got {n}")
    if n == 0:
        return HyperResult(f, 0, True, not f.scalar)
    field = f.field
    w = f.exponent
    factor = lucas_binom(w + n - 1, n, field.p)
    weight = None if f.weight is None else f.weight + 2 * n
    image = replace(
        f,
        exponent=w + n,
        rule=f.rule.times_power(n),
        weight=weight,
        type_m=f.type_m + n,
        scalar=f.scalar * K(field, factor),
    )
    modular = None if f.weight is None else preserves_modularity(f.weight, n, field.p)
    return HyperResult(image, n, modular, factor == 0 or not f.scalar)


class HypothesisError(ValueError):
    """A theorem hypothesis fails; ``condition`` names it."""

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


def thm_main_params(k: int, n: int, q: int) -> int:
    """``s = (k-2n)/(q-1)`` with ``D_(n-1) f_s = f_(k,n)`` in S_(k,n).

    Raises :class:`HypothesisError` naming the failed hypothesis.
    """
    if k < 1 or n < 1:
        raise HypothesisError(f"k and n must be positive, got k={k}, n={n}")
    p = _char(q)
    gap = k - 2 * n
    if gap <= 0 or gap % (q - 1):
        raise HypothesisError(f"k - 2n = {gap} is not a positive multiple of q - 1 = {q - 1}")
    v = val_p(k - n, p)
    if n > p**v:
        raise HypothesisError(f"n = {n} > p^val_p(k-n) = {p}^{v} = {p**v}")
    return gap // (q - 1)


def _char(q: int) -> int:
    return next(d for d in range(2, q + 1) if q % d == 0)


def enumerate_modular(k0: int, n_max: int, q: int) -> list[int]:
    """All ``1 <= n <= n_max`` for which D_n keeps weight ``k0`` modular."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    p = _char(q)
    return [n for n in range(1, n_max + 1) if preserves_modularity(k0, n, p)]


def d1_series_oracle(f: USeries) -> USeries:
    """D_1 on a u-series: the derivation with ``u -> u^2``, same precision."""
    return f.derivation()
