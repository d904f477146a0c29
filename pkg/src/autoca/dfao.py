"""Finite automata with output over a digit alphabet, and uniform
substitutions as an independent way to generate the same sequences.

Digit convention: numbers are fed to an automaton least-significant digit
first, and 0 is represented by the empty digit word.  Input files must
declare `digits lsd`; most-significant-first files are rejected rather
than converted.

Outputs live in an explicit F_q, injected at parse time via the output
table in the file.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldCtx, format_elem
from .poly import parse_elem


@dataclass(frozen=True)
class SeqPrefix:
    """A finite sequence prefix over F_q (values are field codes)."""

    ctx: FieldCtx
    values: tuple
    origin: str = "dfao"

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def shifted(self, k):
        return SeqPrefix(self.ctx, self.values[k:], self.origin)


class Dfao:
    """Deterministic finite automaton with output.

    states are indices 0..n-1 with display names; delta[s][a] is total.
    """

    __slots__ = ("ctx", "k", "names", "delta", "omega", "initial")

    def __init__(self, ctx: FieldCtx, k: int, names, delta, omega, initial: int):
        self.ctx = ctx
        self.k = k
        self.names = tuple(names)
        self.delta = tuple(tuple(row) for row in delta)
        self.omega = tuple(omega)
        self.initial = initial
        n = len(self.names)
        if len(self.delta) != n or len(self.omega) != n:
            raise ValueError("inconsistent automaton tables")
        for row in self.delta:
            if len(row) != k or any(not 0 <= s < n for s in row):
                raise ValueError("transition table not total")
        if not 0 <= initial < n:
            raise ValueError("initial state out of range")
        for c in self.omega:
            if not 0 <= c < ctx.q:
                raise ValueError("output outside the field")

    @property
    def n_states(self):
        return len(self.names)

    def eval_from(self, state: int, n: int) -> int:
        """Output for n starting at `state` (digits least significant first)."""
        delta = self.delta
        while n:
            state = delta[state][n % self.k]
            n //= self.k
        return self.omega[state]

    def eval(self, n: int) -> int:
        return self.eval_from(self.initial, n)

    def prefix(self, length: int, state: int | None = None) -> SeqPrefix:
        s = self.initial if state is None else state
        return SeqPrefix(self.ctx,
                         tuple(self.eval_from(s, n) for n in range(length)),
                         "dfao")

    def __eq__(self, other):
        return (isinstance(other, Dfao) and self.ctx == other.ctx
                and self.k == other.k and self.delta == other.delta
                and self.omega == other.omega and self.initial == other.initial)

    def __repr__(self):
        return (f"Dfao(k={self.k}, states={self.n_states}, "
                f"initial={self.names[self.initial]!r})")


def _bfs_order(delta, initial, k):
    """Breadth-first state order from the initial state, digits ascending."""
    order = [initial]
    seen = {initial}
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for a in range(k):
            t = delta[s][a]
            if t not in seen:
                seen.add(t)
                order.append(t)
    return order


def minimize(d: Dfao) -> Dfao:
    """Moore partition refinement; the result is relabeled breadth-first
    from the initial state so equal automata minimize identically."""
    n = d.n_states
    cls = {}
    label = [cls.setdefault(c, len(cls)) for c in d.omega]
    while True:
        sigs = {}
        new_label = []
        for s in range(n):
            sig = (label[s],) + tuple(label[d.delta[s][a]] for a in range(d.k))
            new_label.append(sigs.setdefault(sig, len(sigs)))
        if new_label == label:
            break
        label = new_label
    # quotient, then canonical BFS relabel of the reachable part
    class_delta = {}
    class_omega = {}
    class_name = {}
    for s in range(n):
        c = label[s]
        if c not in class_delta:
            class_delta[c] = [label[d.delta[s][a]] for a in range(d.k)]
            class_omega[c] = d.omega[s]
            class_name[c] = d.names[s]
    order = _bfs_order(class_delta, label[d.initial], d.k)
    index = {c: i for i, c in enumerate(order)}
    return Dfao(d.ctx, d.k,
                [class_name[c] for c in order],
                [[index[class_delta[c][a]] for a in range(d.k)] for c in order],
                [class_omega[c] for c in order],
                0)


def kernel(d: Dfao):
    """Kernel states of a minimized automaton in breadth-first order.

    Returns a list of (state, (j, r)) pairs: the state reached first by the
    digits of r (a j-digit word), generating the subsequence u_{k^j n + r}.
    """
    out = [(d.initial, (0, 0))]
    seen = {d.initial}
    i = 0
    while i < len(out):
        s, (j, r) = out[i]
        i += 1
        for a in range(d.k):
            t = d.delta[s][a]
            if t not in seen:
                seen.add(t)
                out.append((t, (j + 1, r + a * d.k ** j)))
    return out


def power_base(d: Dfao, e: int) -> Dfao:
    """Automaton over digits base k^e generating the same sequence.

    A base-k^e digit c is processed as its e base-k digits, least
    significant first (including trailing zeros)."""
    if e == 1:
        return d
    k = d.k
    K = k ** e
    delta = []
    for s in range(d.n_states):
        row = []
        for c in range(K):
            t = s
            cc = c
            for _ in range(e):
                t = d.delta[t][cc % k]
                cc //= k
            row.append(t)
        delta.append(row)
    return Dfao(d.ctx, K, d.names, delta, d.omega, d.initial)


def zero_stabilize(d: Dfao) -> Dfao:
    """Make outputs insensitive to extra high-order zero digits.

    Kernel decompositions read u_{kn+r} off state successors, which at
    n = 0, r = 0 requires omega(delta(s, 0)) = omega(s).  The returned
    automaton generates the same sequence and has that property, by
    tracking the state reached after stripping trailing zero digits.
    Automata that already have the property come back unchanged.
    """
    if all(d.omega[d.delta[s][0]] == d.omega[s] for s in range(d.n_states)):
        return d
    # state = (state on the full word, state on the word with trailing zeros stripped)
    start = (d.initial, d.initial)
    states = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        full, stripped = order[i]
        i += 1
        row = []
        for a in range(d.k):
            nxt_full = d.delta[full][a]
            nxt = (nxt_full, stripped if a == 0 else nxt_full)
            if nxt not in states:
                states[nxt] = len(order)
                order.append(nxt)
            row.append(states[nxt])
        delta.append(row)
    names = [f"{d.names[f]}|{d.names[s]}" for f, s in order]
    omega = [d.omega[s] for _, s in order]
    return Dfao(d.ctx, d.k, names, delta, omega, 0)


# -- text format --

def parse_dfao(text: str) -> Dfao:
    """Parse the line-oriented DFAO format.

    Lines: `base k`, `field p e [modulus]`, `digits lsd`, `initial <name>`,
    `state <name> output <elem>`, `trans <name> <digit> <name>`.
    """
    base = None
    ctx = None
    digits = None
    initial = None
    outputs = {}
    trans = {}
    order = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "base":
                base = int(parts[1])
            elif parts[0] == "field":
                p, e = int(parts[1]), int(parts[2])
                modulus = _parse_modulus(" ".join(parts[3:]), p) if len(parts) > 3 else None
                ctx = FieldCtx(p, e, modulus)
            elif parts[0] == "digits":
                digits = parts[1]
            elif parts[0] == "initial":
                initial = parts[1]
            elif parts[0] == "state":
                if parts[2] != "output":
                    raise ValueError("expected `state <name> output <elem>`")
                name = parts[1]
                if name in outputs:
                    raise ValueError(f"duplicate state {name!r}")
                outputs[name] = " ".join(parts[3:])
                order.append(name)
            elif parts[0] == "trans":
                key = (parts[1], int(parts[2]))
                if key in trans:
                    raise ValueError(f"duplicate transition {key}")
                trans[key] = parts[3]
            else:
                raise ValueError(f"unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"DFAO line {lineno}: {raw.strip()!r}: {exc}") from None
    if base is None or base < 2:
        raise ValueError("missing or bad `base` line")
    if ctx is None:
        raise ValueError("missing `field` line")
    if digits != "lsd":
        raise ValueError("file must declare `digits lsd` (most-significant-first"
                         " input is not supported)")
    k = base
    while k > 1 and k % ctx.p == 0:
        k //= ctx.p
    if k != 1:
        raise ValueError(f"base {base} is not a power of the characteristic {ctx.p}")
    if initial is None or initial not in outputs:
        raise ValueError("missing or unknown initial state")
    index = {name: i for i, name in enumerate(order)}
    omega = []
    for name in order:
        lit = outputs[name]
        try:
            code = parse_elem(lit, ctx)
        except ValueError as exc:
            raise ValueError(f"output for state {name!r}: {exc}") from None
        if _elem_outside_field(lit, ctx):
            raise ValueError(f"output {lit!r} for state {name!r} outside the field")
        omega.append(code)
    delta = [[None] * base for _ in order]
    for (src, digit), dst in trans.items():
        if src not in index:
            raise ValueError(f"transition from unknown state {src!r}")
        if dst not in index:
            raise ValueError(f"transition to unknown state {dst!r}")
        if not 0 <= digit < base:
            raise ValueError(f"digit {digit} outside base {base}")
        delta[index[src]][digit] = index[dst]
    for name in order:
        for a in range(base):
            if delta[index[name]][a] is None:
                raise ValueError(f"missing transition for state {name!r} digit {a}")
    return Dfao(ctx, base, order, delta, omega, index[initial])


def _elem_outside_field(lit: str, ctx) -> bool:
    lit = lit.strip()
    return lit.isdigit() and int(lit) >= ctx.p


def _parse_modulus(text: str, p: int):
    """Read a modulus written as a z-polynomial over F_p."""
    # tokenizes via the generic literal machinery with z treated as t
    from .poly import parse_poly
    return parse_poly(text.replace("z", "t"), FieldCtx(p)).coeffs


def format_dfao(d: Dfao, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"base {d.k}")
    if d.ctx.e == 1:
        lines.append(f"field {d.ctx.p} 1")
    else:
        mod = " + ".join(("1" if c == 1 else str(c)) if i == 0
                         else (f"z^{i}" if c == 1 else f"{c}*z^{i}")
                         for i, c in enumerate(d.ctx.modulus) if c)
        lines.append(f"field {d.ctx.p} {d.ctx.e} {mod}")
    lines.append("digits lsd")
    lines.append(f"initial {d.names[d.initial]}")
    for s, name in enumerate(d.names):
        lines.append(f"state {name} output {format_elem(d.ctx, d.omega[s])}")
    for s, name in enumerate(d.names):
        for a in range(d.k):
            lines.append(f"trans {name} {a} {d.names[d.delta[s][a]]}")
    return "\n".join(lines) + "\n"


# -- uniform substitutions --

@dataclass(frozen=True)
class Substitution:
    """Uniform substitution with a letter-to-letter coding into F_q."""

    ctx: FieldCtx
    rules: dict
    coding: dict
    seed: str

    def __post_init__(self):
        lengths = {len(w) for w in self.rules.values()}
        if len(lengths) != 1:
            raise ValueError("substitution is not uniform")
        k = lengths.pop()
        if k < 2:
            raise ValueError("substitution length must be >= 2")
        if self.seed not in self.rules:
            raise ValueError(f"seed {self.seed!r} has no rule")
        if self.rules[self.seed][0] != self.seed:
            raise ValueError("rule for the seed must start with the seed letter")
        for letter, word in self.rules.items():
            for c in word:
                if c not in self.rules:
                    raise ValueError(f"rule for {letter!r} uses unknown letter {c!r}")
        for letter in self.rules:
            if letter not in self.coding:
                raise ValueError(f"letter {letter!r} has no coding")

    @property
    def length(self):
        return len(next(iter(self.rules.values())))


def fixed_point_letters(s: Substitution, n: int) -> str:
    """First n letters of the fixed point starting from the seed."""
    w = s.seed
    while len(w) < n:
        w = "".join(s.rules[c] for c in w)
    return w[:n]


def substitution_fixed_point(s: Substitution, n: int) -> SeqPrefix:
    return SeqPrefix(s.ctx,
                     tuple(s.coding[c] for c in fixed_point_letters(s, n)),
                     "substitution")


def parse_substitution(text: str) -> Substitution:
    """Parse lines `field p e [mod]`, `subst a -> ab`, `code a 1`, `seed a`."""
    ctx = None
    rules = {}
    coding_raw = {}
    seed = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "field":
                p, e = int(parts[1]), int(parts[2])
                modulus = _parse_modulus(" ".join(parts[3:]), p) if len(parts) > 3 else None
                ctx = FieldCtx(p, e, modulus)
            elif parts[0] == "subst":
                if parts[2] != "->":
                    raise ValueError("expected `subst <letter> -> <word>`")
                rules[parts[1]] = parts[3]
            elif parts[0] == "code":
                coding_raw[parts[1]] = " ".join(parts[2:])
            elif parts[0] == "seed":
                seed = parts[1]
            else:
                raise ValueError(f"unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"substitution line {lineno}: {raw.strip()!r}: {exc}") from None
    if ctx is None:
        raise ValueError("missing `field` line")
    if seed is None:
        raise ValueError("missing `seed` line")
    coding = {letter: parse_elem(lit, ctx) for letter, lit in coding_raw.items()}
    return Substitution(ctx, rules, coding, seed)
