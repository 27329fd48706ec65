"""Quantum algebra of a quiver, quantum dilogarithms and codimension extraction.

Scalars are exact rational functions in ``s`` (a square root of ``q``).
The algebra has basis ``y_gamma`` for nonzero ``gamma`` plus a separate
unit, with ``y_a y_b = -s^<a,b> y_{a+b}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy
from sympy import QQ
from sympy.polys.fields import field as frac_field

from .errors import BoxMismatch, InputError, NegativeCodim, NonInteger, SignMismatch, ZeroVector
from .quiver import Quiver, SubquiverPartition, antisym_form
from .roots import OrderedRoots, combined_reineke_order, enumerate_partitions

_FIELD, _S = frac_field("s", QQ)
_SYM = sympy.Symbol("s")


class QScalar:
    """Element of ``Q(s)`` kept as a reduced fraction with monic denominator."""

    __slots__ = ("_f",)

    def __init__(self, value=0):
        if isinstance(value, QScalar):
            value = value._f
        elif not (hasattr(value, "field") and value.field == _FIELD):
            value = _FIELD(value)
        self._f = value

    @classmethod
    def s_power(cls, k: int) -> "QScalar":
        return cls(_S**k)

    @property
    def numerator(self):
        """Numerator after scaling the denominator to be monic."""
        return self._f.numer.quo_ground(self._f.denom.LC)

    @property
    def denominator(self):
        return self._f.denom.quo_ground(self._f.denom.LC)

    def is_zero(self) -> bool:
        return not self._f.numer

    def __add__(self, other):
        return QScalar(self._f + _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return QScalar(self._f - _lift(other))

    def __rsub__(self, other):
        return QScalar(_lift(other) - self._f)

    def __mul__(self, other):
        return QScalar(self._f * _lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other)
        if not o.numer:
            raise ZeroDivisionError("division by the zero scalar")
        return QScalar(self._f / o)

    def __neg__(self):
        return QScalar(-self._f)

    def __pow__(self, k: int):
        return QScalar(self._f**k)

    def __eq__(self, other):
        try:
            return not (self._f - _lift(other)).numer
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((str(self.numerator), str(self.denominator)))

    def __str__(self):
        num = _format_upoly(self.numerator)
        if self.denominator == 1:
            return num
        if len(self.numerator.terms()) > 1:
            num = f"({num})"
        return f"{num}/({_format_upoly(self.denominator)})"

    __repr__ = __str__


def _lift(x):
    if isinstance(x, QScalar):
        return x._f
    return _FIELD(x)


def _format_upoly(p) -> str:
    """Ascending powers: ``1 - s^2``, ``-s``, ``1/2 + 3*s``."""
    terms = sorted(((e[0], c) for e, c in p.terms()), key=lambda t: t[0])
    if not terms:
        return "0"
    out = []
    for k, c in terms:
        c = Fraction(int(c.numerator), int(c.denominator))
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "s" if k == 1 else f"s^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def parse_qscalar(text: str) -> QScalar:
    """Inverse of ``str(QScalar)``."""
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"s": _SYM})
        num, den = sympy.fraction(sympy.together(expr))
        n = sympy.Poly(num, _SYM, domain=QQ)
        d = sympy.Poly(den, _SYM, domain=QQ)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError) as exc:
        raise InputError(f"cannot parse scalar {text!r}") from exc
    conv = lambda poly: sum((_S**k * QQ(int(c.p), int(c.q)) for (k,), c in poly.terms()), _FIELD(0))
    return QScalar(conv(n) / conv(d))


ONE = QScalar(1)


# algebra elements ----------------------------------------------------------


@dataclass(frozen=True)
class QElement:
    """Box-truncated element ``sum c_gamma y_gamma``; the zero vector key is the unit."""

    quiver: Quiver
    box: tuple
    support: dict = field(default_factory=dict)

    def coeff(self, gamma) -> QScalar:
        return self.support.get(tuple(gamma), QScalar(0))

    def __mul__(self, other: "QElement") -> "QElement":
        return qmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, QElement):
            return NotImplemented
        if self.quiver != other.quiver or self.box != other.box:
            return False
        keys = set(self.support) | set(other.support)
        return all(self.coeff(k) == other.coeff(k) for k in keys)

    def to_json(self) -> list:
        return [{"gamma": list(g), "scalar": str(c)} for g, c in sorted(self.support.items())]


def _in_box(gamma, box) -> bool:
    return all(0 <= g <= b for g, b in zip(gamma, box))


def make_element(q: Quiver, box, terms: dict) -> QElement:
    box = q.check_dim(box)
    support = {}
    for g, c in terms.items():
        g = q.check_dim(g)
        c = QScalar(c)
        if _in_box(g, box) and not c.is_zero():
            support[g] = support.get(g, QScalar(0)) + c
    return QElement(q, box, {g: c for g, c in support.items() if not c.is_zero()})


def element_from_json(q: Quiver, box, data) -> QElement:
    return make_element(q, box, {tuple(d["gamma"]): parse_qscalar(d["scalar"]) for d in data})


def unit(q: Quiver, box) -> QElement:
    return make_element(q, box, {q.zero(): 1})


def y(q: Quiver, gamma, box, coeff=1) -> QElement:
    """``coeff * y_gamma`` (``gamma = 0`` gives ``coeff`` times the unit)."""
    return make_element(q, box, {tuple(gamma): coeff})


def _twist(q: Quiver, a, b) -> tuple:
    """``(sign, s_exponent, grade)`` of ``y_a y_b``."""
    if not any(a):
        return 1, 0, tuple(b)
    if not any(b):
        return 1, 0, tuple(a)
    return -1, antisym_form(q, a, b), tuple(x + z for x, z in zip(a, b))


def qmul(x: QElement, z: QElement) -> QElement:
    if x.quiver != z.quiver or x.box != z.box:
        raise BoxMismatch("factors have different quivers or truncation boxes")
    q, box = x.quiver, x.box
    out = {}
    for (a, ca), (b, cb) in itertools.product(x.support.items(), z.support.items()):
        sign, k, g = _twist(q, a, b)
        if not _in_box(g, box):
            continue
        term = ca * cb * QScalar.s_power(k)
        if sign < 0:
            term = -term
        out[g] = out[g] + term if g in out else term
    return QElement(q, box, {g: c for g, c in out.items() if not c.is_zero()})


def qprod(factors: Sequence[QElement]) -> QElement:
    out = factors[0]
    for f in factors[1:]:
        out = qmul(out, f)
    return out


def poincare_factor(d: int) -> QScalar:
    """``prod_{k=1}^d (1 - q^k)^{-1}``."""
    out = QScalar(1)
    for k in range(1, d + 1):
        out = out / (1 - QScalar.s_power(2 * k))
    return out


def dilog(q: Quiver, gamma, box) -> QElement:
    """Truncated ``E(y_gamma) = sum_d (-1)^d q^{d^2/2} P_d y_gamma^d``."""
    gamma = q.check_dim(gamma)
    if not any(gamma):
        raise ZeroVector("the dilogarithm needs a nonzero dimension vector")
    box = q.check_dim(box)
    total = unit(q, box)
    power = unit(q, box)
    base = y(q, gamma, box)
    d = 0
    while True:
        d += 1
        power = qmul(power, base)
        if not power.support:
            break
        c = QScalar.s_power(d * d) * poincare_factor(d) * (-1) ** d
        scaled = QElement(q, box, {g: v * c for g, v in power.support.items()})
        total = make_element(q, box, _merge(total.support, scaled.support))
    return total


def _merge(a: dict, b: dict) -> dict:
    out = dict(a)
    for g, c in b.items():
        out[g] = out[g] + c if g in out else c
    return out


@dataclass(frozen=True)
class FactorizationResult:
    ok: bool
    gamma: tuple | None = None
    simple_side: QScalar | None = None
    root_side: QScalar | None = None
    grades_checked: int = 0

    def to_json(self) -> dict:
        out = {"verified": self.ok, "grades_checked": self.grades_checked}
        if not self.ok:
            out["witness"] = {
                "gamma": list(self.gamma),
                "simple_side": str(self.simple_side),
                "root_side": str(self.root_side),
            }
        return out


def simple_side(q: Quiver, box) -> QElement:
    return qprod([dilog(q, q.simple(i), box) for i in q.vertices])


def root_side(q: Quiver, roots: Sequence[tuple], box) -> QElement:
    return qprod([dilog(q, beta, box) for beta in roots])


def verify_factorization(p: SubquiverPartition, box, order: OrderedRoots | None = None) -> FactorizationResult:
    """Compare ``E(y_e1)...E(y_en)`` with ``E(y_beta1)...E(y_betar)`` in the box."""
    q = p.quiver
    box = q.check_dim(box)
    if order is None:
        order = combined_reineke_order(p)
    lhs = simple_side(q, box)
    rhs = root_side(q, order.roots, box)
    grades = list(itertools.product(*(range(b + 1) for b in box)))
    for g in grades:
        a, b = lhs.coeff(g), rhs.coeff(g)
        if a != b:
            return FactorizationResult(False, g, a, b, len(grades))
    return FactorizationResult(True, grades_checked=len(grades))


# monomial bookkeeping -------------------------------------------------------


def _monomial_product(q: Quiver, grades) -> tuple:
    """``(sign, s_exponent, grade)`` of ``y_{g1} y_{g2} ...`` without truncation."""
    sign, k, cur = 1, 0, q.zero()
    for g in grades:
        sg, kg, cur = _twist(q, cur, g)
        sign *= sg
        k += kg
    return sign, k, cur


def sign_exponent(order: OrderedRoots, m: Sequence[int]) -> int:
    """Closed-form ``s_m = sum_u m_u (|beta_u| - 1)``."""
    return sum(mu * (sum(beta) - 1) for beta, mu in zip(order.roots, m))


def normal_form(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> tuple:
    """``(sign, w)`` with ``prod y_{beta_u}^{m_u} = sign * q^w * prod y_{e_i}^{gamma(i)}``."""
    q = p.quiver
    if order is None:
        order = combined_reineke_order(p)
    m = tuple(int(x) for x in m)
    if len(m) != len(order) or any(x < 0 for x in m):
        raise InputError("partition must list a non-negative multiplicity for every root")
    root_grades = [beta for beta, mu in zip(order.roots, m) for _ in range(mu)]
    s1, k1, gamma = _monomial_product(q, root_grades)
    simple_grades = [q.simple(i) for i in q.vertices for _ in range(gamma[i - 1])]
    s2, k2, _ = _monomial_product(q, simple_grades)
    sign = s1 * s2
    if sign != (-1) ** sign_exponent(order, m):
        raise SignMismatch(f"normal-form sign {sign} disagrees with the closed formula for m={list(m)}")
    return sign, Fraction(k1 - k2, 2)


def codim(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> int:
    if order is None:
        order = combined_reineke_order(p)
    _, w = normal_form(p, m, order)
    gamma = [sum(mu * beta[i] for beta, mu in zip(order.roots, m)) for i in range(p.quiver.vertex_count)]
    c = w - Fraction(sum(g * g for g in gamma), 2) + Fraction(sum(x * x for x in m), 2)
    if c.denominator != 1:
        raise NonInteger(f"codimension {c} for m={list(m)} is not an integer")
    if c < 0:
        raise NegativeCodim(f"codimension {c} for m={list(m)} is negative")
    return int(c)


def block_codims(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> list:
    """Codimension of each block's share of ``m``, computed on that block alone."""
    from .strata import _block_data

    if order is None:
        order = combined_reineke_order(p)
    out = []
    for j in range(len(p.blocks)):
        sub_p, sub_order, _, idx = _block_data(p, order, j)
        out.append(codim(sub_p, [m[u] for u in idx], sub_order))
    return out


def codim_is_block_additive(p: SubquiverPartition, m, order: OrderedRoots | None = None) -> bool:
    if order is None:
        order = combined_reineke_order(p)
    return codim(p, m, order) == sum(block_codims(p, m, order))


def poincare_check(p: SubquiverPartition, gamma, k_max: int, order: OrderedRoots | None = None) -> list:
    """Per degree, ``(k, graded_dim, sum over partitions)`` from the root-side count."""
    from .algebra import graded_dim, partitions_bounded

    if order is None:
        order = combined_reineke_order(p)
    gamma = p.quiver.check_dim(gamma)
    parts = enumerate_partitions(order.roots, gamma)
    rows = []
    for k in range(k_max + 1):
        total = 0
        for m in parts:
            rest = k - codim(p, m, order)
            if rest < 0:
                continue
            counts = [1] + [0] * rest
            for mu in m:
                new = [0] * (rest + 1)
                for a in range(rest + 1):
                    if counts[a]:
                        for b in range(rest + 1 - a):
                            new[a + b] += counts[a] * partitions_bounded(b, mu)
                counts = new
            total += counts[rest]
        rows.append((k, graded_dim(gamma, k), total))
    return rows
