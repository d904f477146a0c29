"""Polynomial arithmetic over a fixed F_q, exact throughout.

Four representations, all immutable, all carrying field codes (ints):

Poly        dense coefficient tuple in one variable t, no trailing zeros;
            the zero polynomial is the empty tuple
LaurentPoly pair (low, coeffs) in one variable, both end coefficients
            nonzero unless zero
RatFun      reduced fraction of two Polys with a monic denominator
BiPoly      bivariate polynomial in (t, x): sparse map from x-exponent
            (possibly negative) to a Poly in t

Also here: the term-literal syntax shared by fixtures, spec files and CLI
output (`(t^2+t^9) + x + (t+t^2)*x^2 + (t^5+t^9)*x^4`), with a parser and
printers that round-trip, plus truncated power-series helpers used by the
equation verifier.
"""

from __future__ import annotations

import re

from .fields import FieldCtx, format_elem


class Poly:
    """Dense polynomial in one variable over F_q."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1,))

    @classmethod
    def const(cls, ctx, c):
        return cls(ctx, (c,))

    @classmethod
    def monomial(cls, ctx, k, c=1):
        if k < 0:
            raise ValueError("negative exponent in a plain polynomial")
        return cls(ctx, (0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def valuation(self):
        """Smallest exponent with nonzero coefficient; None for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __add__(self, other):
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return Poly(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
        return Poly(ctx, out)

    def scale(self, c):
        ctx = self.ctx
        if c == 0:
            return Poly.zero(ctx)
        return Poly(ctx, [ctx.mul(c, a) for a in self.coeffs])

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one(self.ctx)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        """(quotient, remainder) with deg r < deg other."""
        ctx = self.ctx
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = ctx.inv(other.lead)
        quot = [0] * max(0, len(rem) - db)
        while len(rem) > db:
            c = rem[-1]
            if c:
                f = ctx.mul(c, inv_lead)
                shift = len(rem) - 1 - db
                quot[shift] = f
                for i, bc in enumerate(other.coeffs):
                    rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(f, bc))
            rem.pop()
        return Poly(ctx, quot), Poly(ctx, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def lcm(self, other):
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ctx)
        return ((self * other) // self.gcd(other)).monic()

    def monic(self):
        if self.is_zero() or self.lead == 1:
            return self
        return self.scale(self.ctx.inv(self.lead))

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if self.is_zero() or k == 0:
            return self
        return Poly(self.ctx, (0,) * k + self.coeffs)

    def div_t(self, k):
        """Exact division by t^k."""
        if k == 0 or self.is_zero():
            return self
        if any(self.coeffs[:k]):
            raise ValueError(f"polynomial not divisible by t^{k}")
        return Poly(self.ctx, self.coeffs[k:])

    def compose_tpow(self, k):
        """Substitute t -> t^k."""
        if k == 1 or self.is_zero():
            return self
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(self.ctx, out)

    def map_coeffs(self, fn):
        return Poly(self.ctx, [fn(c) for c in self.coeffs])

    def frob_pow_p(self):
        """Raise to the p-th power: (sum a_i t^i)^p = sum a_i^p t^(ip)."""
        ctx = self.ctx
        return self.map_coeffs(ctx.frobenius).compose_tpow(ctx.p)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return format_poly(self)


def pth_root(a: Poly) -> Poly:
    """Exact p-th root of a polynomial whose support lies in exponents
    divisible by p: exponents shrink by p, coefficients map c -> c^(q/p)."""
    ctx = a.ctx
    p = ctx.p
    out = [0] * (a.degree // p + 1) if not a.is_zero() else []
    for i, c in enumerate(a.coeffs):
        if c:
            if i % p:
                raise ValueError(f"exponent {i} not divisible by {p}")
            out[i // p] = ctx.inv_frobenius(c)
    return Poly(ctx, out)


def residue_split(a: Poly):
    """Split by exponent residue: returns (a_0, ..., a_{p-1}) with
    a(t) = sum_s t^s * a_s(t^p)."""
    return [Poly(a.ctx, a.coeffs[s::a.ctx.p]) for s in range(a.ctx.p)]


def residue_join(parts):
    """Inverse of residue_split."""
    ctx = parts[0].ctx
    p = ctx.p
    if len(parts) != p:
        raise ValueError(f"expected {p} residue parts")
    size = max((part.degree * p + s + 1 for s, part in enumerate(parts)
                if not part.is_zero()), default=0)
    out = [0] * size
    for s, part in enumerate(parts):
        for i, c in enumerate(part.coeffs):
            out[i * p + s] = c
    return Poly(ctx, out)


class RatFun:
    """Reduced rational function in one variable with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        ctx = num.ctx
        if num.is_zero():
            self.num = num
            self.den = Poly.one(ctx)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num // g
            den = den // g
        scale = ctx.inv(den.lead)
        if scale != 1:
            num = num.scale(scale)
            den = den.scale(scale)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.ctx))

    @classmethod
    def zero(cls, ctx):
        return cls(Poly.zero(ctx), Poly.one(ctx))

    @classmethod
    def one(cls, ctx):
        return cls(Poly.one(ctx), Poly.one(ctx))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        return (isinstance(other, RatFun) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == Poly.one(self.num.ctx):
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


class LaurentPoly:
    """Laurent polynomial in one variable: coefficients from exponent `low`."""

    __slots__ = ("ctx", "low", "coeffs")

    def __init__(self, ctx: FieldCtx, low: int = 0, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        if not cs:
            low = 0
        self.ctx = ctx
        self.low = low
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, 0, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, 0, (1,))

    @classmethod
    def monomial(cls, ctx, k, c=1):
        return cls(ctx, k, (c,))

    @classmethod
    def from_terms(cls, ctx, terms: dict):
        if not terms:
            return cls.zero(ctx)
        lo = min(terms)
        hi = max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] = c
        return cls(ctx, lo, cs)

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p.ctx, 0, p.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_monomial(self):
        return len(self.coeffs) == 1

    @property
    def degree(self):
        if not self.coeffs:
            raise ValueError("zero Laurent polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    @property
    def valuation(self):
        if not self.coeffs:
            raise ValueError("zero Laurent polynomial has no valuation")
        return self.low

    def coeff(self, e):
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i, c

    def __add__(self, other):
        ctx = self.ctx
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] = c
        for i, c in enumerate(other.coeffs):
            j = other.low - lo + i
            out[j] = ctx.add(out[j], c)
        return LaurentPoly(ctx, lo, out)

    def __neg__(self):
        ctx = self.ctx
        return LaurentPoly(ctx, self.low, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        ctx = self.ctx
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(ctx)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return LaurentPoly(ctx, self.low + other.low, out)

    def scale(self, c):
        ctx = self.ctx
        if c == 0:
            return LaurentPoly.zero(ctx)
        return LaurentPoly(ctx, self.low, [ctx.mul(c, a) for a in self.coeffs])

    def shift(self, k):
        """Multiply by the variable to the k-th power."""
        if self.is_zero():
            return self
        return LaurentPoly(self.ctx, self.low + k, self.coeffs)

    def div_monomial(self, e, c):
        """Exact division by c * var^e."""
        return self.shift(-e).scale(self.ctx.inv(c))

    def inverse(self):
        """Inverse, defined only for monomials."""
        if not self.is_monomial():
            raise ValueError("only monomials are invertible Laurent polynomials")
        return LaurentPoly.monomial(self.ctx, -self.low, self.ctx.inv(self.coeffs[0]))

    def to_poly(self):
        if self.is_zero():
            return Poly.zero(self.ctx)
        if self.low < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        return Poly(self.ctx, (0,) * self.low + self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.ctx == other.ctx
                and self.low == other.low and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.low, self.coeffs))

    def __repr__(self):
        return format_laurent(self)


class BiPoly:
    """Bivariate polynomial in (t, x): map from x-exponent to a Poly in t.

    x-exponents may be negative (Laurent in x); t-exponents may not.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms=None):
        clean = {}
        if terms:
            for e, p in terms.items():
                if not p.is_zero():
                    clean[int(e)] = p
        self.ctx = ctx
        self.terms = clean

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def const(cls, ctx, c):
        if c == 0:
            return cls.zero(ctx)
        return cls(ctx, {0: Poly.const(ctx, c)})

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p.ctx, {0: p})

    @classmethod
    def from_tslices(cls, slices):
        """Build sum_i C_i(x) t^i from a list of Laurent polynomials in x."""
        ctx = slices[0].ctx
        cols = {}
        for i, lp in enumerate(slices):
            for e, c in lp.terms():
                cols.setdefault(e, {})[i] = c
        return cls(ctx, {e: Poly(ctx, [col.get(i, 0) for i in range(max(col) + 1)])
                         for e, col in cols.items()})

    def is_zero(self):
        return not self.terms

    def coeff(self, e) -> Poly:
        return self.terms.get(e, Poly.zero(self.ctx))

    def x_exponents(self):
        return sorted(self.terms)

    @property
    def x_degree(self):
        if not self.terms:
            raise ValueError("zero polynomial has no x-degree")
        return max(self.terms)

    @property
    def t_degree(self):
        if not self.terms:
            raise ValueError("zero polynomial has no t-degree")
        return max(p.degree for p in self.terms.values())

    def __add__(self, other):
        out = dict(self.terms)
        for e, p in other.terms.items():
            out[e] = out[e] + p if e in out else p
        return BiPoly(self.ctx, out)

    def __neg__(self):
        return BiPoly(self.ctx, {e: -p for e, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, p1 in self.terms.items():
            for e2, p2 in other.terms.items():
                e = e1 + e2
                prod = p1 * p2
                out[e] = out[e] + prod if e in out else prod
        return BiPoly(self.ctx, out)

    def pow_int(self, k):
        if k >= 0:
            out = BiPoly.const(self.ctx, 1)
            base = self
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        # negative powers only for x-monomials with constant coefficient
        if len(self.terms) == 1:
            (e, p), = self.terms.items()
            if p.degree == 0:
                return BiPoly(self.ctx,
                              {e * k: Poly.const(self.ctx,
                                                 self.ctx.pow(p.coeffs[0], k))})
        raise ValueError("negative power of a non-monomial")

    def scale_by_poly(self, p: Poly):
        if p.is_zero():
            return BiPoly.zero(self.ctx)
        return BiPoly(self.ctx, {e: q * p for e, q in self.terms.items()})

    def mul_xmono(self, e, c=1):
        return BiPoly(self.ctx,
                      {e0 + e: (p.scale(c) if c != 1 else p)
                       for e0, p in self.terms.items()})

    def t_content(self) -> int:
        """Largest k with t^k dividing every coefficient polynomial."""
        if not self.terms:
            raise ValueError("t-content of the zero polynomial")
        return min(p.valuation() for p in self.terms.values())

    def div_t(self, k):
        if k == 0:
            return self
        return BiPoly(self.ctx, {e: p.div_t(k) for e, p in self.terms.items()})

    def derivative_x(self):
        ctx = self.ctx
        out = {}
        for e, p in self.terms.items():
            c = e % ctx.p
            if c:
                out[e - 1] = p.scale(c)
        return BiPoly(ctx, out)

    def t_slice(self, i) -> LaurentPoly:
        """Coefficient of t^i as a Laurent polynomial in x."""
        return LaurentPoly.from_terms(
            self.ctx, {e: p.coeff(i) for e, p in self.terms.items() if p.coeff(i)})

    def t_slices(self):
        """All slices C_0 ... C_d with P = sum C_i(x) t^i."""
        return [self.t_slice(i) for i in range(self.t_degree + 1)]

    def subst_x(self, word, tpow: int) -> "BiPoly":
        """Substitute x -> w(t) + t^tpow * x, where w = sum word[j] t^j.

        x-powers are expanded through their base-p digits, using the
        characteristic-p identity (a + b)^(p^i) = a^(p^i) + b^(p^i).
        """
        ctx = self.ctx
        p = ctx.p
        if any(e < 0 for e in self.terms):
            raise ValueError("substitution requires nonnegative x-exponents")
        w = Poly(ctx, word)
        max_e = max(self.terms, default=0)
        # T[i] = (w + t^tpow x)^(p^i) = w^(p^i) + t^(tpow*p^i) x^(p^i)
        powers = []
        wp = w
        pi = 1
        while pi <= max_e or not powers:
            powers.append(BiPoly(ctx, {0: wp,
                                       pi: Poly.monomial(ctx, tpow * pi)}))
            wp = wp.frob_pow_p()
            pi *= p
        out = BiPoly.zero(ctx)
        for e, c in self.terms.items():
            if e == 0:
                out = out + BiPoly(ctx, {0: c})
                continue
            factor = BiPoly.const(ctx, 1)
            i = 0
            while e:
                d = e % p
                if d:
                    factor = factor * powers[i].pow_int(d)
                e //= p
                i += 1
            out = out + factor.scale_by_poly(c)
        return out

    def eval_series(self, series, n: int):
        """Evaluate at x = the power series given by `series` (list of codes),
        truncated to order n.  Returns the first n coefficients."""
        g = list(series[:n]) + [0] * max(0, n - len(series))
        out = [0] * n
        pow_cache = {}

        def xpow(e):
            if e in pow_cache:
                return pow_cache[e]
            if e == 0:
                v = [1] + [0] * (n - 1)
            elif e == 1:
                v = g
            elif e % self.ctx.p == 0:
                v = ser_pow_p(self.ctx, xpow(e // self.ctx.p), n)
            else:
                v = ser_mul(self.ctx, xpow(e - 1), g, n)
            pow_cache[e] = v
            return v

        for e in sorted(self.terms):
            if e < 0:
                raise ValueError("series evaluation needs nonnegative x-exponents")
            term = ser_poly_mul(self.ctx, self.terms[e], xpow(e), n)
            out = ser_add(self.ctx, out, term)
        return out

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __repr__(self):
        return format_bipoly(self)


def bipoly_shift_subst(P: BiPoly, word) -> BiPoly:
    """Substitute x -> c_0 + c_1 t + ... + c_{k-1} t^{k-1} + t^k x."""
    return P.subst_x(tuple(word), len(word))


def bipoly_t_content(P: BiPoly) -> int:
    return P.t_content()


# -- truncated power series helpers (lists of field codes) --

def ser_add(ctx, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        a[i] = ctx.add(a[i], c)
    return a


def ser_mul(ctx, a, b, n):
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[:n - i]):
                if bj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return out


def ser_pow_p(ctx, a, n):
    """(sum a_i t^i)^p truncated to order n."""
    out = [0] * n
    p = ctx.p
    for i, c in enumerate(a):
        if i * p >= n:
            break
        if c:
            out[i * p] = ctx.frobenius(c)
    return out


def ser_poly_mul(ctx, p: Poly, a, n):
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        if c and i < n:
            for j, aj in enumerate(a[:n - i]):
                if aj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(c, aj))
    return out


# -- term-literal parsing and printing --

_TOKEN = re.compile(r"\s*(\d+|[txz]|\^|\*|\+|\-|\(|\)|\[|\])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad character in literal: {text[pos:].strip()[0]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _LiteralParser:
    def __init__(self, ctx, tokens):
        self.ctx = ctx
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of literal")
        self.i += 1
        return tok

    def parse(self) -> BiPoly:
        v = self.expr()
        if self.peek() is not None:
            raise ValueError(f"unexpected token {self.peek()!r} in literal")
        return v

    def expr(self) -> BiPoly:
        if self.peek() == "-":
            self.next()
            v = -self.term()
        else:
            v = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self) -> BiPoly:
        v = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.next()
                v = v * self.factor()
            elif tok in ("(", "[", "t", "x", "z"):
                v = v * self.factor()
            else:
                return v

    def factor(self) -> BiPoly:
        base = self.base()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            tok = self.next()
            if not tok.isdigit():
                raise ValueError(f"bad exponent {tok!r}")
            return base.pow_int(sign * int(tok))
        return base

    def base(self) -> BiPoly:
        ctx = self.ctx
        tok = self.next()
        if tok.isdigit():
            code = int(tok) % ctx.p
            return BiPoly.const(ctx, code)
        if tok == "t":
            return BiPoly(ctx, {0: Poly.monomial(ctx, 1)})
        if tok == "x":
            return BiPoly(ctx, {1: Poly.one(ctx)})
        if tok == "z":
            if ctx.e == 1:
                raise ValueError("z is undefined over a prime field")
            return BiPoly.const(ctx, ctx.gen)
        if tok == "(":
            v = self.expr()
            if self.next() != ")":
                raise ValueError("unbalanced parenthesis")
            return v
        if tok == "[":
            v = self.expr()
            if self.next() != "]":
                raise ValueError("unbalanced bracket")
            return v
        raise ValueError(f"unexpected token {tok!r} in literal")


def parse_bipoly(text: str, ctx: FieldCtx) -> BiPoly:
    return _LiteralParser(ctx, _tokenize(text)).parse()


def parse_poly(text: str, ctx: FieldCtx) -> Poly:
    b = parse_bipoly(text, ctx)
    if any(e != 0 for e in b.terms):
        raise ValueError("expected a polynomial in t only")
    return b.coeff(0)


def parse_laurent(text: str, ctx: FieldCtx) -> LaurentPoly:
    b = parse_bipoly(text, ctx)
    out = {}
    for e, p in b.terms.items():
        if p.degree > 0:
            raise ValueError("expected a Laurent polynomial in x only")
        out[e] = p.coeffs[0]
    return LaurentPoly.from_terms(ctx, out)


def parse_elem(text: str, ctx: FieldCtx) -> int:
    b = parse_bipoly(text, ctx)
    if b.is_zero():
        return 0
    if list(b.terms) != [0] or b.coeff(0).degree > 0:
        raise ValueError(f"expected a field element, got {text!r}")
    return b.coeff(0).coeffs[0]


def _format_coeff_var(ctx, c, var, e):
    """One printed term `c * var^e` with the usual abbreviations."""
    if e == 0:
        return format_elem(ctx, c)
    v = var if e == 1 else f"{var}^{e}"
    if c == 1:
        return v
    return f"{format_elem(ctx, c)}*{v}"


def format_poly(p: Poly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    return " + ".join(_format_coeff_var(p.ctx, c, var, i)
                      for i, c in enumerate(p.coeffs) if c)


def format_laurent(lp: LaurentPoly, var: str = "x") -> str:
    if lp.is_zero():
        return "0"
    return " + ".join(_format_coeff_var(lp.ctx, c, var, e) for e, c in lp.terms())


def format_bipoly(b: BiPoly) -> str:
    if b.is_zero():
        return "0"
    parts = []
    for e in b.x_exponents():
        p = b.terms[e]
        nterms = sum(1 for c in p.coeffs if c)
        coeff = format_poly(p)
        if e == 0:
            parts.append(f"({coeff})" if nterms > 1 else coeff)
            continue
        xpart = "x" if e == 1 else f"x^{e}"
        if nterms == 1:
            if p.degree == 0 and p.coeffs[0] == 1:
                parts.append(xpart)
            else:
                parts.append(f"{coeff}*{xpart}")
        else:
            parts.append(f"({coeff})*{xpart}")
    return " + ".join(parts)
