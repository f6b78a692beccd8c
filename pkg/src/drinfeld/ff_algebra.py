"""Exact arithmetic in F_q, A = F_q[T] and K = F_q(T).

Elements of F_q are plain ints in ``range(q)``.  For ``q = p**l`` the int
``sum(c_i * p**i)`` stands for ``sum(c_i * w**i)`` where ``w`` is a root of
the field modulus, the lexicographically smallest monic irreducible of
degree ``l`` over F_p.  For prime ``q`` this is the usual residue.

Text format
-----------
Polynomials print as a sum of monomials in decreasing degree, e.g.
``T^3 + 2*T`` over F_3.  A coefficient of 1 is omitted in front of a power
of T.  Over extension fields a coefficient is a combination of powers of
``w``, parenthesised when it has more than one term: ``(w + 1)*T^2 + w``.
Rational functions print as ``num/den`` with parentheses around multi-term
parts, and ``/1`` omitted.  :func:`parse` reads all of these back (and more
general expressions using ``+ - * / ^`` and parentheses).
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache
from typing import Iterator, Sequence

from . import backend
from .valuation import AbsVal

NEG_INF = -math.inf


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    p = next((d for d in range(2, math.isqrt(q) + 1) if q % d == 0), q)
    l, m = 0, q
    while m % p == 0:
        m //= p
        l += 1
    if m != 1:
        raise ValueError(f"q must be a prime power, got {q}")
    return p, l


def _int_poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Product of two F_p-polynomials reduced by the monic ``mod``."""
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    d = len(mod) - 1
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            for j in range(d + 1):
                prod[i - d + j] = (prod[i - d + j] - c * mod[j]) % p
    return (prod + [0] * d)[:d]


def _is_irreducible_fp(f: Sequence[int], p: int) -> bool:
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=e):
            g = list(reversed(tail)) + [1]
            r = list(f)
            for i in range(len(r) - 1, e - 1, -1):
                c = r[i]
                if c:
                    for j in range(e + 1):
                        r[i - e + j] = (r[i - e + j] - c * g[j]) % p
            if not any(r[:e]):
                return False
    return True


def _smallest_irreducible(p: int, l: int) -> tuple[int, ...]:
    if l == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=l):
        f = list(reversed(tail)) + [1]
        if f[0] and _is_irreducible_fp(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """The field F_q together with the kernel used for polynomials over it."""

    def __init__(self, q: int, *, prefer_compiled: bool | None = None):
        self.p, self.l = _prime_power(q)
        self.q = q
        self.modulus = _smallest_irreducible(self.p, self.l)
        p = self.p
        if self.l == 1:
            self._add = self._mul = self._neg = self._inv = None
        else:
            if q > 4096:
                raise ValueError(f"extension fields are limited to q <= 4096, got {q}")
            coords = [self._digits(a) for a in range(q)]
            self._add = [[self._undigits([(x + y) % p for x, y in zip(ca, cb)]) for cb in coords]
                         for ca in coords]
            self._mul = [[self._undigits(_int_poly_mulmod(ca, cb, self.modulus, p)) for cb in coords]
                         for ca in coords]
            self._neg = [self._undigits([(-x) % p for x in c]) for c in coords]
            inv = [0] * q
            for a in range(1, q):
                row = self._mul[a]
                inv[a] = row.index(1)
            self._inv = inv
        self.kernel = backend.select(p, q, prefer_compiled=prefer_compiled)
        self.ctx = self.kernel.FieldContext(p, q, self._add, self._mul, self._neg, self._inv)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.l):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, digits: Sequence[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(digits))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    @property
    def backend_name(self) -> str:
        return self.kernel.BACKEND

    # -- element arithmetic -------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` in the basis 1, w, ..., w^(l-1)."""
        return tuple(self._digits(a))

    def from_coords(self, coords: Sequence[int]) -> int:
        if len(coords) != self.l or not all(0 <= c < self.p for c in coords):
            raise ValueError(f"expected {self.l} residues mod {self.p}, got {coords}")
        return self._undigits(coords)

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime field."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p if self.l == 1 else self._add[a][b]

    def neg(self, a: int) -> int:
        return (-a) % self.p if self.l == 1 else self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p if self.l == 1 else self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return pow(a, self.p - 2, self.p) if self.l == 1 else self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def elements(self) -> range:
        return range(self.q)

    def format_elem(self, a: int) -> str:
        if self.l == 1:
            return str(a)
        terms = []
        for j, c in reversed(list(enumerate(self._digits(a)))):
            if not c:
                continue
            mon = "" if j == 0 else ("w" if j == 1 else f"w^{j}")
            if not mon:
                terms.append(str(c))
            else:
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms) if terms else "0"

    # -- constructors -------------------------------------------------------

    def poly(self, coeffs: Sequence[int] = ()) -> Poly:
        return Poly(self, coeffs)

    @property
    def T(self) -> Poly:
        return Poly._raw(self, (0, 1))

    @property
    def one(self) -> Poly:
        return Poly._raw(self, (1,))

    @property
    def zero(self) -> Poly:
        return Poly._raw(self, ())

    def const(self, c: int) -> Poly:
        return Poly(self, (c,))

    @property
    def w(self) -> int:
        """The extension generator as an element (equals p; for l = 1 there is none)."""
        if self.l == 1:
            raise ValueError("prime fields have no extension generator")
        return self.p


@lru_cache(maxsize=None)
def GF(q: int, backend_name: str | None = None) -> FiniteField:
    """Cached field constructor; ``backend_name`` is 'python', 'compiled' or None."""
    prefer = None if backend_name is None else backend_name == "compiled"
    return FiniteField(q, prefer_compiled=prefer)


def _same_field(a: FiniteField, b: FiniteField) -> None:
    if a is not b and a.q != b.q:
        raise ValueError(f"mixing GF({a.q}) and GF({b.q})")


class Poly:
    """Immutable polynomial in T over F_q; coefficients lowest degree first."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: FiniteField, coeffs: Sequence[int] = ()):
        q = field.q
        cs = [c % q if field.l == 1 else c for c in coeffs]
        if field.l > 1 and not all(0 <= c < q for c in cs):
            raise ValueError("extension-field coefficients must lie in range(q)")
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, field: FiniteField, coeffs: tuple) -> Poly:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, field: FiniteField, e: int, c: int = 1) -> Poly:
        return cls(field, (0,) * e + (c,))

    # -- basic data ---------------------------------------------------------

    def degree(self) -> int | float:
        """Degree in T; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.field.q == other.field.q and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self._coerce(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.q, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly(GF({self.field.q}), {self})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            _same_field(self.field, other.field)
            return other
        if isinstance(other, int):
            return Poly._raw(self.field, (other % self.field.p,) if other % self.field.p else ())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return Poly._raw(F, F.kernel.poly_add(F.ctx, self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        F = self.field
        return Poly._raw(F, F.kernel.poly_neg(F.ctx, self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return Poly._raw(F, F.kernel.poly_sub(F.ctx, self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if len(o.coeffs) == 1:
            return Poly._raw(F, F.kernel.poly_scale(F.ctx, self.coeffs, o.coeffs[0]))
        if len(self.coeffs) == 1:
            return Poly._raw(F, F.kernel.poly_scale(F.ctx, o.coeffs, self.coeffs[0]))
        return Poly._raw(F, F.kernel.poly_mul(F.ctx, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        """Multiply by the F_q element ``c`` (an int in range(q))."""
        F = self.field
        return Poly._raw(F, F.kernel.poly_scale(F.ctx, self.coeffs, c))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        qt, r = F.kernel.poly_divmod(F.ctx, self.coeffs, o.coeffs)
        return Poly._raw(F, qt), Poly._raw(F, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc._raw(self, self.field.one) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(o, self)

    def exact_div(self, other: Poly) -> Poly:
        qt, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return qt

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative powers of polynomials live in RatFunc")
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius(self, times: int = 1) -> Poly:
        """``self ** (p**times)`` computed coefficientwise."""
        F = self.field
        pk = F.p**times
        if F.l == 1:
            cs = self.coeffs
        else:
            cs = tuple(F.pow(c, pk) for c in self.coeffs)
        out = [0] * (pk * (len(cs) - 1) + 1) if cs else []
        for i, c in enumerate(cs):
            out[i * pk] = c
        return Poly._raw(F, tuple(out))

    def gcd(self, other: Poly) -> Poly:
        F = self.field
        _same_field(F, other.field)
        return Poly._raw(F, F.kernel.poly_gcd(F.ctx, self.coeffs, other.coeffs))

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def __call__(self, x: int) -> int:
        """Evaluate at an element of F_q."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc


def format_poly(f: Poly, var: str = "T") -> str:
    F = f.field
    if not f.coeffs:
        return "0"
    terms = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        cs = F.format_elem(c)
        if F.l > 1 and "+" in cs:
            cs = f"({cs})"
        if e == 0:
            terms.append(cs)
            continue
        mon = var if e == 1 else f"{var}^{e}"
        terms.append(mon if c == 1 else f"{cs}*{mon}")
    return " + ".join(terms)


class RatFunc:
    """Element of K = F_q(T) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly | int, den: Poly | int | None = None):
        if isinstance(num, int):
            if not isinstance(den, Poly):
                raise TypeError("RatFunc from ints needs a Poly denominator to fix the field")
            num = den._coerce(num)
        F = num.field
        if den is None:
            den = F.one
        elif isinstance(den, int):
            den = num._coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            num, den = F.zero, F.one
        elif not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            if lc != 1:
                inv = F.inv(lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, f: Poly) -> RatFunc:
        return cls._raw(f, f.field.one)

    @property
    def field(self) -> FiniteField:
        return self.num.field

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return bool(self.num)

    def degree(self) -> int | float:
        """deg num - deg den (``-inf`` for zero)."""
        if not self.num:
            return NEG_INF
        return self.num.degree() - self.den.degree()

    def abs_val(self) -> AbsVal:
        return abs_val(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFunc(GF({self.field.q}), {self})"

    def __str__(self) -> str:
        return format_ratfunc(self)

    def _coerce(self, other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            _same_field(self.field, other.field)
            return other
        if isinstance(other, Poly):
            _same_field(self.field, other.field)
            return RatFunc._raw(other, other.field.one)
        if isinstance(other, int):
            return RatFunc._raw(self.num._coerce(other), self.field.one)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(a + c, b)
        if b == d:
            n = a + c
            if not n:
                return RatFunc._raw(n, n.field.one)
            g = n.gcd(b)
            if g.is_one():
                return RatFunc._raw(n, b)
            return RatFunc._raw(n.exact_div(g), b.exact_div(g))
        if d.is_one():
            return RatFunc._raw(a + c * b, b)
        if b.is_one():
            return RatFunc._raw(a * d + c, d)
        g = b.gcd(d)
        if g.is_one():
            return RatFunc._raw(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        n = a * d1 + c * b1
        if not n:
            return RatFunc._raw(n, n.field.one)
        g2 = n.gcd(g)
        if g2.is_one():
            return RatFunc._raw(n, b1 * d)
        return RatFunc._raw(n.exact_div(g2), b1 * d.exact_div(g2))

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc._raw(self.field.zero, self.field.one)
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, b)
        g1 = a.gcd(d) if not d.is_one() else d
        g2 = c.gcd(b) if not b.is_one() else b
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFunc._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("inverse of zero in K")
        num, den = self.den, self.num
        lc = den.lc
        if lc != 1:
            inv = self.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self.num**e, self.den**e)

    def frobenius(self, times: int = 1) -> RatFunc:
        return RatFunc._raw(self.num.frobenius(times), self.den.frobenius(times))


def format_ratfunc(x: RatFunc) -> str:
    num = format_poly(x.num)
    if x.den.is_one():
        return num
    den = format_poly(x.den)
    if " + " in num:
        num = f"({num})"
    if " + " in den or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


def K(field: FiniteField, value) -> RatFunc:
    """Coerce an int, Poly or RatFunc into K."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc._raw(value, field.one)
    if isinstance(value, int):
        return RatFunc._raw(field.one._coerce(value), field.one)
    raise TypeError(f"cannot coerce {type(value).__name__} into K")


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(T|w)|(\*\*|[-+*/^()]))")


def parse(field: FiniteField, text: str) -> RatFunc:
    """Parse a polynomial or rational-function expression over ``field``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("var", m.group(2)))
        else:
            tokens.append(("op", "^" if m.group(3) == "**" else m.group(3)))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor():
        if peek() == ("op", "-"):
            take()
            return -factor()
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "int":
                raise ValueError(f"expected an integer exponent in {text!r}")
            base = base**e
        return base

    def atom():
        kind, val = take()
        if kind == "int":
            return K(field, val)
        if kind == "var":
            if val == "T":
                return K(field, field.T)
            return K(field, Poly._raw(field, (field.w,)))
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


def parse_poly(field: FiniteField, text: str) -> Poly:
    x = parse(field, text)
    if not x.is_polynomial():
        raise ValueError(f"{text!r} is not a polynomial")
    return x.num


# -- operations -----------------------------------------------------------------

def iter_monic(field: FiniteField, d: int) -> Iterator[Poly]:
    """Monic polynomials of degree ``d``; lower coefficients run lexicographically
    from T^(d-1) down to T^0."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    for tail in itertools.product(range(field.q), repeat=d):
        yield Poly._raw(field, tuple(reversed(tail)) + (1,))


def monic_polys(field: FiniteField, d: int) -> list[Poly]:
    return list(iter_monic(field, d))


def abs_val(x: RatFunc | Poly) -> AbsVal:
    """``q ** (deg num - deg den)``, or the zero value."""
    if isinstance(x, Poly):
        x = RatFunc.from_poly(x)
    q = x.field.q
    if not x.num:
        return AbsVal.zero(q)
    return AbsVal(q, x.num.degree() - x.den.degree())


class InconsistentSystemError(ArithmeticError):
    """The target is not in the column span; ``row`` is the first failing row."""

    def __init__(self, row: int):
        super().__init__(f"inconsistent linear system at row {row}")
        self.row = row


class SingularSystemError(ArithmeticError):
    """The columns are linearly dependent, so no unique solution exists."""


def _size(x: RatFunc) -> int:
    return len(x.num.coeffs) + len(x.den.coeffs)


def solve_linear(columns: Sequence[Sequence[RatFunc]], target: Sequence[RatFunc]) -> list[RatFunc]:
    """Exact Gaussian elimination over K.

    ``columns[j][r]`` is the entry in row ``r`` of column ``j``.  Returns the
    unique coefficient vector ``x`` with ``sum_j x[j] * columns[j] == target``.
    Raises :class:`InconsistentSystemError` (carrying the first row, in the
    original numbering, whose residual is nonzero) when the target is outside
    the span, and :class:`SingularSystemError` when the columns are dependent.
    Pivots minimise the combined degree of the entry's numerator and denominator.
    """
    nrows = len(target)
    ncols = len(columns)
    if any(len(c) != nrows for c in columns):
        raise ValueError("all columns must have the same length as the target")
    if ncols > nrows:
        raise ValueError(f"{ncols} columns but only {nrows} rows")
    if nrows == 0:
        return []
    field = target[0].field
    rows = [[K(field, columns[j][r]) for j in range(ncols)] + [K(field, target[r])]
            for r in range(nrows)]
    free_rows = list(range(nrows))
    pivots: list[tuple[int, int]] = []
    singular = False
    for col in range(ncols):
        candidates = [r for r in free_rows if rows[r][col]]
        if not candidates:
            singular = True
            continue
        piv = min(candidates, key=lambda r: (_size(rows[r][col]), r))
        free_rows.remove(piv)
        prow = rows[piv]
        inv = prow[col].inverse()
        prow = [x * inv for x in prow]
        rows[piv] = prow
        for r in range(nrows):
            if r == piv:
                continue
            factor = rows[r][col]
            if factor:
                rows[r] = [x - factor * y if y else x for x, y in zip(rows[r], prow)]
        pivots.append((piv, col))
    for r in sorted(free_rows):
        if rows[r][ncols]:
            raise InconsistentSystemError(r)
    if singular:
        raise SingularSystemError("columns are linearly dependent")
    solution = [K(field, 0)] * ncols
    for piv, col in pivots:
        solution[col] = rows[piv][ncols]
    return solution
