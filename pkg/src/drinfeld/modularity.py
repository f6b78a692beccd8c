"""Modularity witnesses: write a u-series in the basis g^i h^j of M_{k,m}."""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .expansions import expand, g_series, h_form
from .ff_algebra import FiniteField, InconsistentSystemError, RatFunc, SingularSystemError, solve_linear
from .series import USeries


def basis_monomials(k: int, m: int, q: int) -> list[tuple[int, int]]:
    """``(i, j)`` with ``(q-1)i + (q+1)j = k``, ``j = m mod (q-1)``, by increasing j."""
    if k < 0:
        raise ValueError(f"weight must be non-negative, got {k}")
    mod = q - 1
    if not 0 <= m < max(mod, 1):
        raise ValueError(f"type must satisfy 0 <= m < q-1, got {m}")
    out = []
    for j in range(k // (q + 1) + 1):
        rest = k - (q + 1) * j
        if rest % mod == 0 and (mod == 1 or j % mod == m):
            out.append((rest // mod, j))
    return out


def required_precision(k: int, m: int, q: int) -> int:
    return 2 * len(basis_monomials(k, m, q)) * (q + 1)


@dataclass(frozen=True)
class BasisSolution:
    weight: int
    type_m: int
    monomials: tuple[tuple[int, int], ...]
    coefficients: tuple[RatFunc, ...] | None
    residual_row: int | None = None
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.coefficients is not None

    def cuspidal(self) -> bool:
        """Every monomial with a nonzero coefficient contains h."""
        return self.ok and all(j >= 1 for (i, j), c in zip(self.monomials, self.coefficients) if c)

    def terms(self) -> list[tuple[tuple[int, int], RatFunc]]:
        if not self.ok:
            return []
        return [(mon, c) for mon, c in zip(self.monomials, self.coefficients) if c]


class PrecisionError(ValueError):
    """The series is too short to pin down a combination of the basis."""


_cache_lock = threading.Lock()
_gh_cache: dict[tuple[FiniteField, int], tuple[list[USeries], list[USeries]]] = {}


def _power_lists(field: FiniteField, prec: int, i_max: int, j_max: int) -> tuple[list[USeries], list[USeries]]:
    with _cache_lock:
        key = (field, prec)
        gp, hp = _gh_cache.get(key, ([USeries.one(field, prec)], [USeries.one(field, prec)]))
        if i_max >= len(gp):
            g = g_series(prec, field)
            while len(gp) <= i_max:
                gp.append(gp[-1] * g)
        if j_max >= len(hp):
            h = expand(h_form(field), prec)
            while len(hp) <= j_max:
                hp.append(hp[-1] * h)
        _gh_cache[key] = (gp, hp)
        return gp, hp


def monomial_series(field: FiniteField, i: int, j: int, prec: int) -> USeries:
    gp, hp = _power_lists(field, prec, i, j)
    return gp[i] * hp[j]


def express(f: USeries, k: int, m: int) -> BasisSolution:
    """Solve ``f = sum c_(i,j) g^i h^j`` exactly through ``prec(f)``.

    Raises :class:`PrecisionError` when ``prec(f) < 2 * dim * (q+1)``.
    """
    field = f.field
    q = field.q
    m = m % (q - 1) if q > 2 else 0
    mons = basis_monomials(k, m, q)
    need = 2 * len(mons) * (q + 1)
    if f.prec < need:
        raise PrecisionError(f"precision {f.prec} < {need} = 2*dim*(q+1) for weight {k}, type {m}")
    if not mons:
        row = f.order()
        if row is None:
            return BasisSolution(k, m, (), ())
        return BasisSolution(k, m, (), None, row, "space is zero but the series is not")
    cols = [monomial_series(field, i, j, f.prec).coeffs for i, j in mons]
    try:
        coeffs = solve_linear(cols, f.coeffs)
    except InconsistentSystemError as exc:
        return BasisSolution(k, m, tuple(mons), None, exc.row, f"nonzero residual at u^{exc.row}")
    except SingularSystemError as exc:  # pragma: no cover - g, h are algebraically independent
        return BasisSolution(k, m, tuple(mons), None, None, str(exc))
    return BasisSolution(k, m, tuple(mons), tuple(coeffs))


def ord_at_infinity(f: USeries) -> int | None:
    """Order of vanishing at the cusp, or None when every stored coefficient is 0."""
    return f.order()
