"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ``omega[i, j]`` (CoHA generators) or ``t[u, v]`` (restriction
targets).  Internally a variable is an integer code and a monomial is a
sorted tuple of ``(code, exponent)`` pairs; coefficients are ``gmpy2.mpq``.

Term order is graded lex with ``omega`` before ``t`` and smaller indices
more significant, so ``omega[1,1] > omega[1,2] > omega[2,1] > t[1,1]``.
"""
from __future__ import annotations

import heapq
import itertools
import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from gmpy2 import mpq

from .errors import BadPartition, NotDivisible, ParseError

FAMILIES = ("omega", "t")
_SYMBOL = {"omega": "ω", "t": "t"}
_SHIFT = 20
_MASK = (1 << _SHIFT) - 1


class VarId(NamedTuple):
    family: str
    first: int
    second: int

    @property
    def code(self) -> int:
        return (FAMILIES.index(self.family) << (2 * _SHIFT)) | (self.first << _SHIFT) | self.second

    def __str__(self):
        return f"{_SYMBOL[self.family]}[{self.first},{self.second}]"


def omega(i: int, j: int) -> VarId:
    return VarId("omega", i, j)


def tvar(u: int, v: int) -> VarId:
    return VarId("t", u, v)


def _decode(code: int) -> VarId:
    return VarId(FAMILIES[code >> (2 * _SHIFT)], (code >> _SHIFT) & _MASK, code & _MASK)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for c, e in b:
        d[c] = d.get(c, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: tuple, b: tuple):
    """``a / b`` or ``None`` when ``b`` does not divide ``a``."""
    d = dict(a)
    for c, e in b:
        have = d.get(c, 0)
        if have < e:
            return None
        if have == e:
            del d[c]
        else:
            d[c] = have - e
    return tuple(sorted(d.items()))


def _deg(m: tuple) -> int:
    return sum(e for _, e in m)


def _key(m: tuple):
    """Ascending sort key for graded lex."""
    return (_deg(m), tuple((-c, e) for c, e in m))


_BIG = 1 << 62


def _heap_key(m: tuple):
    """Key whose *smallest* value is the graded-lex *largest* monomial."""
    return (-_deg(m), tuple((c, -e) for c, e in m) + ((_BIG, 0),))


def _coerce(c) -> mpq:
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


class MPoly:
    """Immutable sparse polynomial; ``terms`` maps monomial -> nonzero mpq."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        self.terms = {m: _coerce(c) for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def const(cls, c) -> "MPoly":
        c = _coerce(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: VarId, exp: int = 1) -> "MPoly":
        return cls._raw({((v.code, exp),) if exp else (): mpq(1)})

    @classmethod
    def monomial(cls, powers: Mapping[VarId, int], coeff=1) -> "MPoly":
        mono = tuple(sorted((v.code, e) for v, e in powers.items() if e))
        c = _coerce(coeff)
        return cls._raw({mono: c} if c else {})

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> mpq:
        return self.terms.get((), mpq(0))

    def degree(self) -> int:
        """Total polynomial degree; ``-1`` for the zero polynomial."""
        return max((_deg(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({_deg(m) for m in self.terms}) <= 1

    def variables(self) -> set:
        return {_decode(c) for m in self.terms for c, _ in m}

    def items(self):
        """``(powers dict VarId -> exp, coefficient)`` in descending term order."""
        for m in sorted(self.terms, key=_key, reverse=True):
            yield {_decode(c): e for c, e in m}, self.terms[m]

    def leading_term(self):
        m = max(self.terms, key=_key)
        return m, self.terms[m]

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly._raw({m: c for m, c in self.terms.items() if _deg(m) == d})

    # arithmetic
    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = _coerce(other)
            if not c:
                return MPoly()
            return MPoly._raw({m: c * v for m, v in self.terms.items()})
        if len(self.terms) < len(other.terms):
            self, other = other, self
        out = {}
        get = out.get
        for m2, c2 in other.terms.items():
            if not m2:
                for m1, c1 in self.terms.items():
                    out[m1] = get(m1, 0) + c1 * c2
                continue
            for m1, c1 in self.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        return MPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = MPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        try:
            return self.terms == MPoly.const(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MPoly({format_poly(self)!r})"


def format_coeff(c) -> str:
    c = mpq(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_mono(m: tuple) -> str:
    out = []
    for code, e in m:
        v = str(_decode(code))
        out.append(v if e == 1 else f"{v}^{e}")
    return "*".join(out)


def format_poly(p: MPoly) -> str:
    """Canonical text: graded-lex descending, ``ω[i,j]`` / ``t[u,v]``, rationals ``a/b``."""
    if not p.terms:
        return "0"
    pieces = []
    for k, m in enumerate(sorted(p.terms, key=_key, reverse=True)):
        c = p.terms[m]
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = format_coeff(a)
        elif a == 1:
            body = _format_mono(m)
        else:
            body = f"{format_coeff(a)}*{_format_mono(m)}"
        if k == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def exact_div(p: MPoly, d: MPoly) -> MPoly:
    """The quotient ``p / d``; raises :class:`NotDivisible` on a nonzero remainder."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if d.is_constant():
        return p * (1 / d.constant_term())
    lm, lc = d.leading_term()
    dterms = list(d.terms.items())
    rem = dict(p.terms)
    heap = [(_heap_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if not c:
            continue
        qm = _mono_div(m, lm)
        if qm is None:
            raise NotDivisible(f"{format_poly(p)} is not divisible by {format_poly(d)}")
        qc = c / lc
        quot[qm] = qc
        for dm, dc in dterms:
            t = _mono_mul(qm, dm)
            old = rem.get(t)
            nv = (old or 0) - qc * dc
            if nv:
                if old is None:
                    heapq.heappush(heap, (_heap_key(t), t))
                rem[t] = nv
            elif old is not None:
                del rem[t]
    return MPoly._raw(quot)


def substitute(p: MPoly, mapping: Mapping[VarId, VarId]) -> MPoly:
    """Rename variables (not necessarily injectively); unmapped ones stay put."""
    codes = {a.code: b.code for a, b in mapping.items()}
    out = {}
    for m, c in p.terms.items():
        d = {}
        for code, e in m:
            k = codes.get(code, code)
            d[k] = d.get(k, 0) + e
        nm = tuple(sorted(d.items()))
        v = out.get(nm, 0) + c
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return MPoly._raw(out)


def is_block_symmetric(p: MPoly, blocks: Iterable[Sequence[VarId]]) -> bool:
    """Invariance under every adjacent transposition inside each block."""
    for block in blocks:
        block = list(block)
        for a, b in zip(block, block[1:]):
            if substitute(p, {a: b, b: a}) != p:
                return False
    return True


def vandermonde(vars: Sequence[VarId]) -> MPoly:
    """``prod_{a<b} (x_a - x_b)``."""
    out = MPoly.const(1)
    for a, b in itertools.combinations(vars, 2):
        out = out * (MPoly.var(a) - MPoly.var(b))
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def check_partition(lam: Sequence[int]) -> tuple:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise BadPartition(f"{list(lam)} is not a weakly decreasing list of non-negative integers")
    return lam


def schur(lam: Sequence[int], vars: Sequence[VarId]) -> MPoly:
    """Schur polynomial as the bialternant ``det(x_j^(lam_i + r - i)) / vandermonde``."""
    lam = check_partition(lam)
    r = len(vars)
    if len([x for x in lam if x]) > r:
        raise BadPartition(f"partition {list(lam)} has more than {r} nonzero parts")
    lam = (tuple(x for x in lam if x) + (0,) * r)[:r]
    if r == 0:
        return MPoly.const(1)
    exps = [lam[i] + r - 1 - i for i in range(r)]
    codes = [v.code for v in vars]
    num = {}
    for perm in itertools.permutations(range(r)):
        mono = tuple(sorted((codes[perm[i]], exps[i]) for i in range(r) if exps[i]))
        num[mono] = num.get(mono, 0) + _perm_sign(perm)
    num = MPoly({m: mpq(c) for m, c in num.items()})
    return exact_div(num, vandermonde(vars))


def monomial_symmetric(lam: Sequence[int], vars: Sequence[VarId]) -> MPoly:
    """Sum of the distinct monomials ``x^alpha`` with ``alpha`` a permutation of ``lam``."""
    lam = check_partition(lam)
    r = len(vars)
    parts = [x for x in lam if x]
    if len(parts) > r:
        return MPoly()
    padded = parts + [0] * (r - len(parts))
    codes = [v.code for v in vars]
    terms = {}
    for alpha in set(itertools.permutations(padded)):
        mono = tuple(sorted((codes[k], e) for k, e in enumerate(alpha) if e))
        terms[mono] = mpq(1)
    return MPoly._raw(terms)


# parsing ------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>(?:ω|w|omega|t)\[\s*\d+\s*,\s*\d+\s*\])|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list:
    text = text.replace("−", "-").replace("·", "*").replace("**", "^")
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos + 10]!r}")
        if mt.group("num"):
            out.append(("num", int(mt.group("num"))))
        elif mt.group("var"):
            raw = mt.group("var")
            fam = "t" if raw.startswith("t") else "omega"
            i, j = re.findall(r"\d+", raw.split("[", 1)[1])
            out.append(("var", VarId(fam, int(i), int(j))))
        else:
            out.append(("op", mt.group("op")))
        pos = mt.end()
    return out


def parse_poly(text: str) -> MPoly:
    """Parse the canonical text form (and any ``+ - * / ^ ()`` expression in it)."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division is only allowed by a nonzero constant")
                val = val * (1 / rhs.constant_term())
        return val

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            return base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return MPoly.const(val)
        if kind == "var":
            return MPoly.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ParseError("missing closing parenthesis")
            return inner
        raise ParseError(f"unexpected token {val!r}")

    if not toks:
        raise ParseError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input after token {pos}")
    return result
