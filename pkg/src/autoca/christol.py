"""From an automaton to a polynomial equation for its generating series.

The generating series F(t) = sum u_n t^n of an automatic sequence over F_q
satisfies an equation of additive (Ore) shape

    c_0(t) + c_1(t) x + c_q(t) x^q + c_{q^2}(t) x^{q^2} + ... = 0

The equation is extracted exactly: each kernel generating series
decomposes as F_i(t) = sum_r t^r F_{delta(i,r)}(t)^q, iterating gives each
F(t^{q^i}) as an F_q(t)-linear combination of the series F_j(t^{q^L}) at a
common level L, and the first linear dependency found while inserting the
rows F(t), F(t^q), ... into a Gaussian echelon yields the relation.  All
elimination happens over exactly represented rational functions;
truncated series appear only in verification.
"""

from __future__ import annotations

from .dfao import Dfao, SeqPrefix, kernel, minimize, power_base, zero_stabilize
from .fields import FieldCtx
from .poly import (BiPoly, Poly, RatFun, format_bipoly, parse_bipoly,
                   ser_pow_p)


def _is_power(n: int, base: int) -> bool:
    if n < 1:
        return False
    while n % base == 0:
        n //= base
    return n == 1


class OreEquation:
    """An equation sum_e c_e(t) x^e = 0 whose x-exponents are 0, 1, or
    powers of p (powers of q = p^e when fresh from the kernel elimination)."""

    __slots__ = ("ctx", "q", "bipoly")

    def __init__(self, ctx: FieldCtx, bipoly: BiPoly, q: int | None = None):
        self.ctx = ctx
        self.q = q if q is not None else ctx.q
        self.bipoly = bipoly
        exps = bipoly.x_exponents()
        if not any(e > 0 for e in exps):
            raise ValueError("equation must contain a positive power of x")
        for e in exps:
            if e != 0 and not _is_power(e, ctx.p):
                raise ValueError(f"x-exponent {e} is not a power of {ctx.p}")

    def coeff(self, e) -> Poly:
        return self.bipoly.coeff(e)

    @property
    def constant(self) -> Poly:
        return self.bipoly.coeff(0)

    def x_exponents(self):
        return self.bipoly.x_exponents()

    @property
    def x_degree(self):
        return self.bipoly.x_degree

    def __eq__(self, other):
        return isinstance(other, OreEquation) and self.bipoly == other.bipoly

    def __repr__(self):
        return format_bipoly(self.bipoly)


def parse_equation(text: str, ctx: FieldCtx) -> OreEquation:
    return OreEquation(ctx, parse_bipoly(text, ctx))


class KernelSystem:
    """Kernel decomposition data of a minimized automaton.

    states[i] is the automaton state generating the i-th kernel sequence
    (breadth-first order); succ[i][r] is the kernel index generating its
    base-q digit-r subsequence, so that
    F_i(t) = sum_r t^r F_{succ[i][r]}(t)^q.
    """

    __slots__ = ("dfao", "states", "reps", "succ")

    def __init__(self, dfao: Dfao, states, reps, succ):
        self.dfao = dfao
        self.states = tuple(states)
        self.reps = tuple(reps)
        self.succ = tuple(tuple(row) for row in succ)

    def __len__(self):
        return len(self.states)

    def check(self, length: int = 256) -> bool:
        """Numerically confirm the decomposition on sequence prefixes."""
        d = self.dfao
        q = d.k
        prefixes = [d.prefix(length, state=s).values for s in self.states]
        for i in range(len(self.states)):
            for n in range(length):
                j = self.succ[i][n % q]
                if prefixes[i][n] != prefixes[j][n // q]:
                    return False
        return True


def kernel_system(d: Dfao) -> KernelSystem:
    ks = kernel(d)
    index = {s: i for i, (s, _) in enumerate(ks)}
    succ = [[index[d.delta[s][r]] for r in range(d.k)] for s, _ in ks]
    return KernelSystem(d, [s for s, _ in ks], [rep for _, rep in ks], succ)


def _canonical_q_dfao(d: Dfao) -> Dfao:
    """Lift to base q, stabilize against trailing zero digits, minimize."""
    q = d.ctx.q
    if d.k != q:
        e = 0
        k = q
        while k > 1 and k % d.k == 0:
            k //= d.k
            e += 1
        if k != 1:
            raise ValueError(f"cannot lift base {d.k} to base {q}")
        d = power_base(d, e)
    return minimize(zero_stabilize(minimize(d)))


def algebraic_equation(d: Dfao, check_length: int = 512) -> OreEquation:
    """Equation satisfied by the generating series of the automaton.

    Elimination order is pinned: rows F(t), F(t^q), ..., expressed over
    the kernel series at level q^(d'+1), are inserted top-down into an
    echelon (columns in kernel order, first nonzero pivot); the first row
    that reduces to zero across the kernel columns supplies the relation.
    Denominators are cleared by their lcm and the common power of t is
    removed.  The result is verified against the sequence before return.
    """
    ctx = d.ctx
    q = ctx.q
    d = _canonical_q_dfao(d)
    ks = kernel_system(d)
    if not ks.check():
        raise RuntimeError("kernel decomposition failed its numeric check")
    nk = len(ks)
    levels = nk + 1

    # digit-transfer matrices: C1[i][j] = sum of t^r over digits r with
    # succ[i][r] = j, and C^(l+1)[i][j] = sum_m C^(l)[i][m] * C1[m][j](t^(q^l))
    c1 = [[Poly.zero(ctx) for _ in range(nk)] for _ in range(nk)]
    for i in range(nk):
        for r in range(q):
            j = ks.succ[i][r]
            c1[i][j] = c1[i][j] + Poly.monomial(ctx, r)
    comb = [None, c1]
    for level in range(1, levels):
        prev = comb[level]
        step = q ** level
        nxt = [[Poly.zero(ctx) for _ in range(nk)] for _ in range(nk)]
        for i in range(nk):
            for m in range(nk):
                if prev[i][m].is_zero():
                    continue
                for j in range(nk):
                    if not c1[m][j].is_zero():
                        nxt[i][j] = nxt[i][j] + prev[i][m] * c1[m][j].compose_tpow(step)
        comb.append(nxt)

    # row i: F(t^(q^i)) = sum_j comb[levels-i][0][j](t^(q^i)) * F_j(t^(q^levels))
    pivots = []  # (column, kernel row over RatFun, augmented row)
    relation = None
    for i in range(levels):
        row = [RatFun.from_poly(p.compose_tpow(q ** i)) for p in comb[levels - i][0]]
        aug = [RatFun.zero(ctx) for _ in range(levels)]
        aug[i] = RatFun.one(ctx)
        for col, prow, paug in pivots:
            f = row[col]
            if f.is_zero():
                continue
            factor = f / prow[col]
            row = [a - factor * b for a, b in zip(row, prow)]
            aug = [a - factor * b for a, b in zip(aug, paug)]
        pivot_col = next((c for c in range(nk) if not row[c].is_zero()), None)
        if pivot_col is None:
            relation = aug
            break
        pivots.append((pivot_col, row, aug))
    if relation is None or all(f.is_zero() for f in relation):
        raise RuntimeError("kernel elimination produced no usable relation")

    clear = Poly.one(ctx)
    for f in relation:
        if not f.is_zero():
            clear = clear.lcm(f.den)
    coeffs = [(f.num * (clear // f.den)) for f in relation]
    eq_terms = {q ** i: c for i, c in enumerate(coeffs) if not c.is_zero()}
    bip = BiPoly(ctx, eq_terms)
    bip = bip.div_t(bip.t_content())
    eq = OreEquation(ctx, bip, q)
    if not verify_equation(eq, d.prefix(check_length)):
        raise RuntimeError("extracted equation failed verification")
    return eq


def verify_equation(eq: OreEquation, s: SeqPrefix, length: int | None = None) -> bool:
    """Check sum_e c_e(t) F(t)^e + c_0(t) = 0 against a truncated series.

    F is truncated at the prefix length N; the congruence is checked for
    every t-exponent below N - max_e deg c_e, which is where truncation
    cannot interfere.
    """
    ctx = eq.ctx
    n = len(s) if length is None else min(length, len(s))
    if n < 64:
        raise ValueError("prefix too short to verify an equation (need 64 terms)")
    maxdeg = max(p.degree for p in eq.bipoly.terms.values())
    bound = n - maxdeg
    if bound <= 0:
        raise ValueError("prefix too short for the equation degree")
    total = eq.bipoly.eval_series(list(s.values[:n]), n)
    return not any(total[:bound])


def frobenius_series_check(ctx: FieldCtx, coeffs, n: int) -> bool:
    """F(t)^q == (coefficientwise Frobenius of F)(t^q) on truncations."""
    f = list(coeffs[:n])
    lhs = f
    for _ in range(ctx.e):
        lhs = ser_pow_p(ctx, lhs, n)
    rhs = [0] * n
    for i, c in enumerate(f):
        if i * ctx.q >= n:
            break
        rhs[i * ctx.q] = ctx.pow(c, ctx.q)
    return lhs == rhs


__all__ = ["OreEquation", "KernelSystem", "kernel_system", "algebraic_equation",
           "verify_equation", "parse_equation", "frobenius_series_check"]
