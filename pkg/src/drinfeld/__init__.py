"""Drinfeld modular forms with A-expansions over F_q[T]."""

from .backend import compiled_available, default_backend_name
from .carlitz import bigD, bracket, carlitz_poly, exp_series, zeta_ratio
from .expansions import AExpansion, CoefficientTable, PowerRule, eisenstein, expand, f_s, g_series, h_form, make_f, u_a
from .ff_algebra import GF, K, FiniteField, Poly, RatFunc, abs_val, monic_polys, parse, parse_poly, solve_linear
from .goss import GossPoly, goss_poly, goss_poly_oracle
from .hyperderiv import d1_series_oracle, enumerate_modular, hyper_derive, lucas_binom, thm_main_params
from .modularity import basis_monomials, express, ord_at_infinity
from .poincare import Certificate, certify_nonvanishing, lemma1_sum
from .series import USeries, eval_poly, series_from_json
from .valuation import AbsVal

__all__ = [
    "AExpansion",
    "AbsVal",
    "Certificate",
    "CoefficientTable",
    "FiniteField",
    "GF",
    "GossPoly",
    "K",
    "Poly",
    "PowerRule",
    "RatFunc",
    "USeries",
    "abs_val",
    "basis_monomials",
    "bigD",
    "bracket",
    "carlitz_poly",
    "certify_nonvanishing",
    "compiled_available",
    "d1_series_oracle",
    "default_backend_name",
    "eisenstein",
    "enumerate_modular",
    "eval_poly",
    "exp_series",
    "expand",
    "express",
    "f_s",
    "g_series",
    "goss_poly",
    "goss_poly_oracle",
    "h_form",
    "hyper_derive",
    "lemma1_sum",
    "lucas_binom",
    "make_f",
    "monic_polys",
    "ord_at_infinity",
    "parse",
    "parse_poly",
    "series_from_json",
    "solve_linear",
    "thm_main_params",
    "u_a",
    "zeta_ratio",
]
