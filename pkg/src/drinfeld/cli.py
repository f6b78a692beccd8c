"""``drinfeld`` command line front end.

Exit status: 0 on success, 1 when the input is rejected on mathematical
grounds (the message names the failed condition), 2 on usage errors.
With ``--json`` every run prints exactly one JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from typing import Sequence

from .carlitz import bigD, bracket, carlitz_poly, exp_coeff
from .expansions import AExpansion, eisenstein_expansion, expand, f_s, g_series, h_form, make_f
from .ff_algebra import GF, FiniteField, format_poly, format_ratfunc, parse_poly
from .goss import goss_poly
from .hyperderiv import HypothesisError, enumerate_modular, hyper_derive, lucas_binom, thm_main_params
from .modularity import PrecisionError, express
from .poincare import PreconditionError, certify_nonvanishing
from .series import USeries
from .verify import CRITERIA, run_criteria, thread_count


class DomainError(Exception):
    """Mathematical rejection; maps to exit status 1."""


_DOMAIN_ERRORS = (DomainError, HypothesisError, PreconditionError, PrecisionError, ValueError, ZeroDivisionError)


def _prime_power(text: str) -> int:
    try:
        q = int(text)
        GF(q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return q


def default_prec(k: int, q: int) -> int:
    return math.ceil(2 * k * (q + 1) / (q - 1))


# form specs: h | g | f_s(S) | f(K,N) | E(K) | D<n>(<form>)
_FORM_RE = re.compile(r"^(?:(h|g)|f_s\((\d+)\)|f\((\d+),(\d+)\)|E\((\d+)\)|D(\d+)\((.+)\))$")


def parse_form(text: str, field: FiniteField) -> AExpansion | str:
    """An A-expansion, or the string "g" (g has a constant term and no A-expansion here)."""
    m = _FORM_RE.match(text.replace(" ", ""))
    if not m:
        raise DomainError(f"cannot parse form {text!r}; expected h, g, f_s(S), f(K,N), E(K) or D<n>(<form>)")
    name, s, k, n, ek, order, inner = m.groups()
    if name == "h":
        return h_form(field)
    if name == "g":
        return "g"
    if s is not None:
        return f_s(int(s), field)
    if k is not None:
        return make_f(int(k), int(n), field)
    if ek is not None:
        return eisenstein_expansion(int(ek), field)
    base = parse_form(inner, field)
    if isinstance(base, str):
        raise DomainError("hyperderivatives act on A-expansions only; g has none here")
    return hyper_derive(base, int(order)).image


def form_series(form: AExpansion | str, prec: int, field: FiniteField) -> USeries:
    return g_series(prec, field) if form == "g" else expand(form, prec)


def _form_weight(form: AExpansion | str, field: FiniteField) -> int | None:
    return field.q - 1 if form == "g" else form.weight


def _need_q(args) -> FiniteField:
    if args.q is None:
        args.parser.error("--q is required for this command")
    return GF(args.q)


def _prec(args, k: int | None, q: int) -> int:
    if args.prec is not None:
        if args.prec < 0:
            args.parser.error("--prec must be non-negative")
        return args.prec
    if k is None:
        args.parser.error("--prec is required when the weight is unknown")
    return default_prec(k, q)


# command handlers return (json_obj, text)


def cmd_goss(args):
    F = _need_q(args)
    if args.n < 0:
        raise DomainError(f"n must be >= 0, got {args.n}")
    G = goss_poly(args.n, F)
    return G.to_json_obj(), f"G_{args.n} = {G}"


def cmd_carlitz(args):
    F = _need_q(args)
    obj: dict = {"q": F.q}
    lines = []
    if args.i is not None:
        if args.i < 0:
            raise DomainError(f"i must be >= 0, got {args.i}")
        D = bigD(F, args.i)
        obj["i"] = args.i
        obj["D"] = format_poly(D)
        obj["alpha"] = format_ratfunc(exp_coeff(F, args.i))
        if args.i >= 1:
            obj["bracket"] = format_poly(bracket(F, args.i))
            lines.append(f"[{args.i}] = {obj['bracket']}")
        lines.append(f"D_{args.i} = {obj['D']}")
    if args.a is not None:
        a = parse_poly(F, args.a)
        if not a:
            raise DomainError("C_a needs a != 0")
        cp = carlitz_poly(a)
        obj["a"] = format_poly(a)
        obj["C_a"] = [{"pow": F.q**i, "value": format_poly(c)} for i, c in enumerate(cp.coeffs)]
        lines.append(f"C_({obj['a']})(X):")
        lines += [f"  X^{F.q**i}: {format_poly(c)}" for i, c in enumerate(cp.coeffs)]
    if not lines:
        args.parser.error("carlitz needs --i and/or --a")
    return obj, "\n".join(lines)


def cmd_expand(args):
    F = _need_q(args)
    f = make_f(args.k, args.n, F)
    prec = _prec(args, args.k, F.q)
    s = expand(f, prec)
    label = f"f_({args.k},{args.n})"
    if args.as_poincare:
        s = -s
        label = f"P_({args.k},{args.n}) = -{label}"
    obj = {"form": label, "k": args.k, "n": args.n, "series": s.to_json_obj()}
    return obj, f"{label} = {s}"


def cmd_named(args):
    F = _need_q(args)
    if args.form == "f_s":
        if args.s is None:
            args.parser.error("--form f_s needs --s")
        form = parse_form(f"f_s({args.s})", F)
    else:
        form = parse_form(args.form, F)
    prec = _prec(args, _form_weight(form, F), F.q)
    s = form_series(form, prec, F)
    name = f"f_{args.s}" if args.form == "f_s" else args.form
    return {"form": name, "series": s.to_json_obj()}, f"{name} = {s}"


def cmd_hyperderiv(args):
    F = _need_q(args)
    if args.form == "f_s":
        if args.s is None:
            args.parser.error("--form f_s needs --s")
        f = f_s(args.s, F)
    else:
        f = h_form(F)
    if args.order < 0:
        raise DomainError(f"order must be >= 0, got {args.order}")
    res = hyper_derive(f, args.order)
    prec = _prec(args, res.weight, F.q)
    s = expand(res.image, prec)
    obj = {
        "order": args.order,
        "image": res.image.describe(),
        "weight": res.weight,
        "type": res.type_m,
        "modular": res.modular,
        "vanished": res.vanished,
        "series": s.to_json_obj(),
    }
    text = "\n".join(
        [
            f"D_{args.order} = {res.image.describe()}",
            f"weight {res.weight}, type {res.type_m}, modular: {str(res.modular).lower()}",
            f"expansion: {s}",
        ]
    )
    return obj, text


def cmd_enumerate(args):
    F = _need_q(args)
    got = enumerate_modular(args.source_weight, args.max_n, F.q)
    return {"source_weight": args.source_weight, "max_n": args.max_n, "n": got}, " ".join(map(str, got))


def cmd_lucas(args):
    if args.p < 2 or any(args.p % d == 0 for d in range(2, math.isqrt(args.p) + 1)):
        args.parser.error(f"--p must be prime, got {args.p}")
    if args.top < 0 or args.bottom < 0:
        raise DomainError("binomial arguments must be non-negative")
    r = lucas_binom(args.top, args.bottom, args.p)
    return {"p": args.p, "top": args.top, "bottom": args.bottom, "value": r}, str(r)


def cmd_basis(args):
    F = _need_q(args)
    form = parse_form(args.form, F)
    prec = _prec(args, args.k, F.q)
    sol = express(form_series(form, prec, F), args.k, args.type)
    obj = {
        "weight": sol.weight,
        "type": sol.type_m,
        "prec": prec,
        "ok": sol.ok,
        "monomials": [list(mon) for mon in sol.monomials],
    }
    if sol.ok:
        obj["coefficients"] = [format_ratfunc(c) for c in sol.coefficients]
        obj["cuspidal"] = sol.cuspidal()
        lines = [f"weight {sol.weight}, type {sol.type_m}: expressed through u^{prec}"]
        lines += [f"  g^{i} h^{j}: {format_ratfunc(c)}" for (i, j), c in zip(sol.monomials, sol.coefficients)]
        return obj, "\n".join(lines)
    obj["residual_row"] = sol.residual_row
    obj["failure"] = sol.failure
    raise _Failure(obj, f"not in M_({sol.weight},{sol.type_m}): {sol.failure}")


def cmd_certify(args):
    F = _need_q(args)
    c = certify_nonvanishing(args.k, args.n, F.q, args.root_order)
    return c.to_json_obj(), c.report()


def cmd_params(args):
    F = _need_q(args)
    s = thm_main_params(args.k, args.n, F.q)
    return {"k": args.k, "n": args.n, "s": s}, f"s = {s}: D_{args.n - 1} f_{s} = f_({args.k},{args.n})"


def cmd_verify(args):
    names = args.only or list(CRITERIA)
    results = run_criteria(names, goss_seed=args.goss_seed, threads=thread_count())
    obj = {"all_passed": all(r.ok for r in results), "criteria": [r.to_json_obj() for r in results]}
    text = "\n".join(r.line() for r in results)
    if not obj["all_passed"]:
        raise _Failure(obj, text)
    return obj, text


class _Failure(Exception):
    """A completed computation whose answer is negative; exit 1 with a full report."""

    def __init__(self, obj: dict, text: str):
        super().__init__(text)
        self.obj = obj
        self.text = text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=_prime_power, help="field size (prime power)")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--prec", type=int, help="u-precision (default ceil(2k(q+1)/(q-1)))")

    parser = argparse.ArgumentParser(prog="drinfeld", description="Drinfeld modular forms toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler, parser=p)
        return p

    p = add("goss", cmd_goss, "Goss polynomial G_n")
    p.add_argument("--n", type=int, required=True)

    p = add("carlitz", cmd_carlitz, "brackets, D_i and C_a")
    p.add_argument("--i", type=int)
    p.add_argument("--a", help="polynomial in T, e.g. 'T^2 + 1'")

    p = add("expand", cmd_expand, "u-expansion of f_(k,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--as-poincare", action="store_true", help="print -f_(k,n)")

    p = add("named", cmd_named, "expansion of h, g or f_s")
    p.add_argument("--form", choices=("h", "g", "f_s"), required=True)
    p.add_argument("--s", type=int)

    p = add("hyperderiv", cmd_hyperderiv, "hyperderivative of h or f_s")
    p.add_argument("--form", choices=("h", "f_s"), required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--order", type=int, required=True)

    p = add("enumerate-modular", cmd_enumerate, "n with D_n modular on weight K0")
    p.add_argument("--source-weight", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)

    p = add("lucas", cmd_lucas, "binom(M, N) mod p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--top", type=int, required=True)
    p.add_argument("--bottom", type=int, required=True)

    p = add("basis-express", cmd_basis, "express a form in the g-h basis")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--type", type=int, required=True)
    p.add_argument("--form", required=True, help="h | g | f_s(S) | f(K,N) | E(K) | D<n>(<form>)")

    p = add("certify-nonvanishing", cmd_certify, "valuation certificate for P_(k,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root-order", type=int)

    p = add("main-params", cmd_params, "s with D_(n-1) f_s = f_(k,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("verify-paper", cmd_verify, "run acceptance criteria A1-A8")
    p.add_argument("--only", nargs="+", choices=list(CRITERIA))
    p.add_argument("--goss-seed", type=int, default=1, choices=(0, 1), help=argparse.SUPPRESS)
    return parser


def _emit(args, obj: dict, text: str, ok: bool) -> None:
    if args.json:
        obj = {"ok": ok, **obj} if isinstance(obj, dict) else obj
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        stream = sys.stdout if ok else sys.stderr
        stream.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        obj, text = args.handler(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except _Failure as exc:
        if not args.json:
            sys.stdout.write(exc.text + "\n")
            return 1
        _emit(args, exc.obj, exc.text, False)
        return 1
    except _DOMAIN_ERRORS as exc:
        msg = str(exc) or type(exc).__name__
        _emit(args, {"error": msg}, f"error: {msg}", False)
        return 1
    _emit(args, obj, text, True)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
