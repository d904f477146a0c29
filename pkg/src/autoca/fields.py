"""Exact arithmetic in finite fields F_q with q = p^e.

Field elements are stored as integer codes.  The element with coordinate
vector (c_0, ..., c_{e-1}) in the power basis 1, z, ..., z^{e-1} of
F_p[z]/(modulus) has code c_0 + c_1*p + ... + c_{e-1}*p^{e-1}.  For a prime
field (e = 1) the code is simply the residue.  Codes are what the rest of
the package passes around; the FieldElem wrapper is a convenience for
callers who want operator syntax.

Extension fields require an explicitly supplied monic irreducible modulus
over F_p.  Irreducibility is checked at construction by trial division
against every monic polynomial of degree at most e//2.  There is no table
of Conway polynomials: field construction is fully determined by its
arguments.
"""

from __future__ import annotations

import itertools

import numpy as np

# Extension arithmetic uses q x q lookup tables; fields beyond this size
# are out of scope for this package.
_MAX_TABLE_Q = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- small helpers on F_p[z] coefficient lists (for the modulus only) --

def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        _fp_trim(a)
    return a


def _monic_fp_polys(p, degree):
    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


class FieldCtx:
    """A finite field F_q, q = p^e, with code-level arithmetic."""

    __slots__ = ("p", "e", "q", "modulus", "_mul_table", "_inv_table",
                 "_np_add", "_np_mul")

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            self.modulus = None
        else:
            if modulus is None:
                raise ValueError("extension field needs an explicit modulus")
            m = tuple(int(c) % p for c in modulus)
            if len(m) != e + 1 or m[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {e}")
            self._check_irreducible(list(m))
            self.modulus = m
        self._mul_table = None
        self._inv_table = None
        self._np_add = None
        self._np_mul = None
        if e > 1:
            if self.q > _MAX_TABLE_Q:
                raise ValueError(f"extension field of size {self.q} too large")
            self._build_tables()

    def _check_irreducible(self, m):
        p = self.p
        for deg in range(1, self.e // 2 + 1):
            for g in _monic_fp_polys(p, deg):
                if not _fp_mod(m, g, p):
                    raise ValueError("modulus is reducible")

    def _build_tables(self):
        p, q = self.p, self.q
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            va = self.decode(a)
            for b in range(a, q):
                c = self.encode(_fp_mod(_fp_mul(va, self.decode(b), p),
                                        list(self.modulus), p))
                mul[a][b] = c
                mul[b][a] = c
        self._mul_table = mul
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv

    # -- vector <-> code --

    def decode(self, code: int):
        """Coordinate vector of a code in the power basis (trailing zeros cut)."""
        v = []
        p = self.p
        for _ in range(self.e):
            v.append(code % p)
            code //= p
        return _fp_trim(v)

    def encode(self, vector) -> int:
        code = 0
        for c in reversed(list(vector)):
            code = code * self.p + (c % self.p)
        return code

    def vector(self, code: int):
        v = self.decode(code)
        return tuple(v + [0] * (self.e - len(v)))

    # -- code arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.e == 1:
            return pow(a, k, self.p)
        out = 1
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def inv_frobenius(self, a: int) -> int:
        """The inverse of c -> c^p, namely c -> c^(q/p)."""
        return self.pow(a, self.q // self.p)

    def elements(self):
        return range(self.q)

    @property
    def gen(self) -> int:
        """Code of z (only meaningful for e > 1)."""
        return self.p

    # -- vectorized arithmetic on numpy arrays of codes --

    def _np_tables(self):
        if self._np_add is None:
            q = self.q
            add = np.empty((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
            self._np_add = add
            self._np_mul = np.array(self._mul_table, dtype=np.int32)
        return self._np_add, self._np_mul

    def vadd(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        add, _ = self._np_tables()
        return add[a, b]

    def vscale(self, c: int, a):
        if self.e == 1:
            return (c * a) % self.p
        _, mul = self._np_tables()
        return mul[c][a]

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, e={self.e}, modulus={self.modulus})"


def format_elem(ctx: FieldCtx, code: int) -> str:
    """Literal form of a field element: plain integer, or a bracketed
    z-polynomial like [1+z] for extension elements outside the prime field."""
    if not 0 <= code < ctx.q:
        raise ValueError(f"code {code} outside field of size {ctx.q}")
    if code < ctx.p:
        return str(code)
    parts = []
    for i, c in enumerate(ctx.vector(code)):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("z" if c == 1 else f"{c}*z")
        else:
            parts.append(f"z^{i}" if c == 1 else f"{c}*z^{i}")
    return "[" + "+".join(parts) + "]"


class FieldElem:
    """Field element wrapper with operator syntax over a FieldCtx."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        if not 0 <= code < ctx.q:
            raise ValueError(f"code {code} outside field of size {ctx.q}")
        self.ctx = ctx
        self.code = code

    @property
    def vector(self):
        return self.ctx.vector(self.code)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ValueError("field elements from different fields")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p if self.ctx.e == 1 else other
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.div(self.code, c))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, k):
        return FieldElem(self.ctx, self.ctx.pow(self.code, k))

    def inverse(self):
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == (other % self.ctx.p if self.ctx.e == 1 else other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __repr__(self):
        return format_elem(self.ctx, self.code)


def ff_arith(a: FieldElem, b, op: str, k: int = 0) -> FieldElem:
    """Dispatch-style field arithmetic: op in add/sub/mul/div/pow/inv."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** k
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown field operation {op!r}")
