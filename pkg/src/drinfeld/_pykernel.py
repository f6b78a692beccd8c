"""Pure-Python twin of the compiled polynomial kernels.

Same calling convention as ``_kernel.pyx``: polynomials are tuples of ints
(lowest degree first, no trailing zeros) and every function takes a
:class:`FieldContext` as its first argument.
"""

from __future__ import annotations

BACKEND = "python"


class FieldContext:
    __slots__ = ("p", "q", "prime", "add_t", "mul_t", "neg_t", "inv_t", "_ktables")

    def __init__(self, p, q, add_table=None, mul_table=None, neg_table=None, inv_table=None):
        self.p = p
        self.q = q
        self.prime = p == q
        self.add_t = add_table
        self.mul_t = mul_table
        self.neg_t = neg_table
        self.inv_t = inv_table
        self._ktables = None

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.prime:
            return pow(a, self.p - 2, self.p)
        return self.inv_t[a]


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def poly_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    if F.prime:
        p = F.p
        for i, y in enumerate(b):
            r[i] = (r[i] + y) % p
    else:
        add = F.add_t
        for i, y in enumerate(b):
            r[i] = add[r[i]][y]
    return _strip(r)


def poly_neg(F, a):
    if F.prime:
        p = F.p
        return tuple((p - x) % p for x in a)
    neg = F.neg_t
    return tuple(neg[x] for x in a)


def poly_sub(F, a, b):
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F, a, c):
    if c == 0:
        return ()
    if F.prime:
        p = F.p
        return _strip([x * c % p for x in a])
    row = F.mul_t[c]
    return _strip([row[x] for x in a])


_KRONECKER_MIN = 24


def poly_mul(F, a, b):
    if not a or not b:
        return ()
    if min(len(a), len(b)) >= _KRONECKER_MIN:
        return _kronecker_mul(F, a, b)
    nb = len(b)
    if F.prime:
        acc = [0] * (len(a) + nb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    acc[i + j] += x * y
        p = F.p
        return _strip([v % p for v in acc])
    add, mul = F.add_t, F.mul_t
    r = [0] * (len(a) + nb - 1)
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    r[i + j] = add[r[i + j]][row[y]]
    return _strip(r)


def _pack(values, width):
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _unpack(n, width, count):
    raw = n.to_bytes(width * count, "little")
    return [int.from_bytes(raw[i : i + width], "little") for i in range(0, width * count, width)]


def _kronecker_mul(F, a, b):
    """Product via one big-integer multiplication (Kronecker substitution)."""
    p = F.p
    n = len(a) + len(b) - 1
    if F.prime:
        bound = min(len(a), len(b)) * (p - 1) ** 2
        width = (bound.bit_length() + 8) // 8
        prod = _pack(a, width) * _pack(b, width)
        return _strip([v % p for v in _unpack(prod, width, n)])
    # coordinates in w: slot (t, s) holds the w^s part of the T^t coefficient
    digits, wpow = _ext_tables(F)
    l = len(digits[1])
    span = 2 * l - 1
    bound = min(len(a), len(b)) * l * (p - 1) ** 2
    width = (bound.bit_length() + 8) // 8
    pad = [0] * (l - 1)

    def flat(poly):
        out = []
        for x in poly:
            out.extend(digits[x])
            out.extend(pad)
        return out

    vals = _unpack(_pack(flat(a), width) * _pack(flat(b), width), width, n * span)
    add, mul = F.add_t, F.mul_t
    res = []
    for t in range(n):
        block = vals[t * span : (t + 1) * span]
        low = 0
        for s in range(l - 1, -1, -1):
            low = low * p + block[s] % p
        for s in range(l, span):
            c = block[s] % p
            if c:
                low = add[low][mul[c][wpow[s]]]
        res.append(low)
    return _strip(res)


def _ext_tables(F):
    cached = getattr(F, "_ktables", None)
    if cached is None:
        p, q = F.p, F.q
        l = 0
        while p**l < q:
            l += 1
        digits = []
        for x in range(q):
            d = []
            for _ in range(l):
                d.append(x % p)
                x //= p
            digits.append(tuple(d))
        wpow = [1]
        for _ in range(2 * l - 2):
            wpow.append(F.mul_t[wpow[-1]][p])  # the element w has index p
        cached = (digits, wpow)
        F._ktables = cached
    return cached


def _rem_inplace(F, r, b, quot=None):
    db = len(b) - 1
    inv_lc = F.inv(b[db])
    if F.prime:
        # entries below the current top are reduced lazily
        p = F.p
        body = b[:db]
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p * inv_lc % p
            if quot is not None:
                quot[i - db] = c
            if c:
                shift = i - db
                r[shift:i] = [u - c * y for u, y in zip(r[shift:i], body)]
        r[:db] = [u % p for u in r[:db]]
    else:
        add, mul, neg = F.add_t, F.mul_t, F.neg_t
        for i in range(len(r) - 1, db - 1, -1):
            c = mul[r[i]][inv_lc]
            if quot is not None:
                quot[i - db] = c
            if c:
                shift = i - db
                row = mul[neg[c]]
                for j, y in enumerate(b):
                    r[shift + j] = add[r[shift + j]][row[y]]
    del r[db:]
    return _strip(r)


def poly_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    quot = [0] * (len(a) - len(b) + 1)
    rem = _rem_inplace(F, list(a), b, quot)
    return _strip(quot), rem


def poly_gcd(F, a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    if len(a) < len(b):
        a, b = b, a
    if not a:
        return ()
    while b:
        a, b = b, _rem_inplace(F, list(a), b)
    return poly_scale(F, a, F.inv(a[-1]))
