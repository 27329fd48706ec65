"""Elements of the cohomological Hall algebra and the shuffle product.

An element of the graded piece for ``gamma`` is a polynomial in
``omega[i, j]`` (``1 <= j <= gamma(i)``) separately symmetric in the
variables of each vertex.  The product is evaluated with the equivariant
localization (subset-sum) formula over one common denominator.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (
    BadMarker,
    InputError,
    InternalNotDivisible,
    NoUnitCoordinate,
    NotDivisible,
    NotSymmetric,
    QuiverMismatch,
    VariableOutOfRange,
)
from .poly import MPoly, VarId, exact_div, format_poly, is_block_symmetric, omega, parse_poly, substitute
from .quiver import Quiver, validate_quiver

A1 = Quiver(1, ())


@dataclass(frozen=True)
class CohaElement:
    quiver: Quiver
    grade: tuple
    poly: MPoly

    def __mul__(self, other: "CohaElement") -> "CohaElement":
        return mul2(self, other)

    def __add__(self, other: "CohaElement") -> "CohaElement":
        if other.quiver != self.quiver or other.grade != self.grade:
            raise QuiverMismatch("can only add elements of the same graded piece")
        return CohaElement(self.quiver, self.grade, self.poly + other.poly)

    def scale(self, c) -> "CohaElement":
        return CohaElement(self.quiver, self.grade, self.poly * c)

    def degree(self) -> int:
        """Polynomial degree (cohomological degree is twice this)."""
        return self.poly.degree()

    def to_json(self) -> dict:
        return {"gamma": list(self.grade), "poly": format_poly(self.poly)}

    def __str__(self):
        return f"{format_poly(self.poly)} in H_{list(self.grade)}"


def vertex_blocks(grade: Sequence[int]) -> list:
    return [[omega(i, j) for j in range(1, g + 1)] for i, g in enumerate(grade, start=1)]


def element(q: Quiver, gamma: Sequence[int], p: MPoly | str) -> CohaElement:
    """Validated element of the graded piece ``gamma``."""
    gamma = q.check_dim(gamma)
    if isinstance(p, str):
        p = parse_poly(p)
    for v in p.variables():
        if v.family != "omega" or not (1 <= v.first <= q.vertex_count) or not (1 <= v.second <= gamma[v.first - 1]):
            raise VariableOutOfRange(f"variable {v} is not available in grade {list(gamma)}")
    if not is_block_symmetric(p, vertex_blocks(gamma)):
        raise NotSymmetric(f"{format_poly(p)} is not symmetric in the variables of each vertex")
    return CohaElement(q, gamma, p)


def element_from_json(q: Quiver, data) -> CohaElement:
    if not isinstance(data, dict) or "gamma" not in data or "poly" not in data:
        raise InputError('an element must be {"gamma": [...], "poly": "..."}')
    return element(q, data["gamma"], str(data["poly"]))


def one(q: Quiver, gamma: Sequence[int]) -> CohaElement:
    return CohaElement(q, q.check_dim(gamma), MPoly.const(1))


def regrade(e: CohaElement, gamma: Sequence[int]) -> CohaElement:
    """The same polynomial viewed in another graded piece (validated)."""
    return element(e.quiver, gamma, e.poly)


def _diff(a: VarId, b: VarId) -> MPoly:
    return MPoly.var(a) - MPoly.var(b)


def _prod_diffs(pairs) -> MPoly:
    out = MPoly.const(1)
    for a, b in pairs:
        out = out * _diff(a, b)
    return out


def mul2(f: CohaElement, g: CohaElement, arrows: Sequence[tuple] | None = None) -> CohaElement:
    """Shuffle product ``f * g``.

    ``arrows`` restricts the numerator to a subset of the quiver's arrows;
    it exists only to compare against the full formula in tests.
    """
    if f.quiver != g.quiver:
        raise QuiverMismatch("factors live over different quivers")
    q = f.quiver
    g1, g2 = f.grade, g.grade
    gamma = tuple(a + b for a, b in zip(g1, g2))
    if f.poly.is_zero() or g.poly.is_zero():
        return CohaElement(q, gamma, MPoly())
    if arrows is None:
        arrows = q.arrows

    # per-vertex choices: (S, Sbar, sign * same-side factors)
    choices = []
    denominators = []
    for i, (a, b) in enumerate(zip(g1, g2), start=1):
        n = a + b
        opts = []
        for S in itertools.combinations(range(1, n + 1), a):
            Sbar = tuple(x for x in range(1, n + 1) if x not in S)
            if a and b:
                inv = sum(1 for u in Sbar for v in S if u > v)
                same = [(omega(i, x), omega(i, y)) for part in (S, Sbar) for x, y in itertools.combinations(part, 2)]
                factor = _prod_diffs(same) * (-1 if inv % 2 else 1)
            else:
                factor = None
            opts.append((S, Sbar, factor))
        choices.append(opts)
        if a and b:
            denominators.extend(itertools.combinations([omega(i, x) for x in range(1, n + 1)], 2))

    numerator = MPoly()
    for combo in itertools.product(*choices):
        fmap, gmap = {}, {}
        term = MPoly.const(1)
        for i, (S, Sbar, factor) in enumerate(combo, start=1):
            for j, x in enumerate(S, start=1):
                fmap[omega(i, j)] = omega(i, x)
            for j, x in enumerate(Sbar, start=1):
                gmap[omega(i, j)] = omega(i, x)
            if factor is not None:
                term = term * factor
        for t, h in arrows:
            S_t = combo[t - 1][0]
            Sbar_h = combo[h - 1][1]
            if S_t and Sbar_h:
                term = term * _prod_diffs((omega(h, u), omega(t, v)) for u in Sbar_h for v in S_t)
        term = term * substitute(f.poly, fmap) * substitute(g.poly, gmap)
        numerator = numerator + term

    result = numerator
    try:
        for a, b in denominators:
            result = exact_div(result, _diff(a, b))
    except NotDivisible as exc:
        raise InternalNotDivisible(f"localization sum is not a polynomial: {exc}") from exc
    return CohaElement(q, gamma, result)


def muln(factors: Sequence[CohaElement]) -> CohaElement:
    """Left-to-right product ``f1 * f2 * ... * fr``."""
    factors = list(factors)
    if not factors:
        raise InputError("muln needs at least one factor")
    out = factors[0]
    for f in factors[1:]:
        out = mul2(out, f)
    return out


def psi(p: int) -> CohaElement:
    """``x1^p`` in the rank-one piece of the CoHA of a single vertex."""
    return CohaElement(A1, (1,), MPoly.var(omega(1, 1), p))


def psi_chain(lam: Sequence[int]) -> list:
    """Factors ``psi(lam_r), psi(lam_{r-1} + 1), ..., psi(lam_1 + r - 1)``."""
    r = len(lam)
    return [psi(lam[r - 1 - k] + k) for k in range(r)]


def choose_marker(beta: Sequence[int]) -> int:
    """Smallest vertex where ``beta`` has coordinate 1."""
    for i, x in enumerate(beta, start=1):
        if x == 1:
            return i
    raise NoUnitCoordinate(f"root {list(beta)} has no coordinate equal to 1")


def subalgebra_element(q: Quiver, beta: Sequence[int], m: int, i: int, f: MPoly | str) -> CohaElement:
    """``f(omega[i,1..m])`` in the graded piece ``m * beta``.

    ``f`` is given in the single-vertex variables ``omega[1, 1..m]`` and
    must be symmetric in them.
    """
    beta = q.check_dim(beta)
    if not 1 <= i <= q.vertex_count or beta[i - 1] != 1:
        raise BadMarker(f"vertex {i} is not a marker for {list(beta)}")
    if isinstance(f, str):
        f = parse_poly(f)
    src = element(A1, (m,), f)
    mapping = {omega(1, j): omega(i, j) for j in range(1, m + 1)}
    return CohaElement(q, tuple(m * x for x in beta), substitute(src.poly, mapping))


@lru_cache(maxsize=None)
def partitions_bounded(d: int, parts: int) -> int:
    """Number of partitions of ``d`` into at most ``parts`` parts."""
    if d == 0:
        return 1
    if parts == 0 or d < 0:
        return 0
    return partitions_bounded(d, parts - 1) + partitions_bounded(d - parts, parts)


def graded_dim(gamma: Sequence[int], k: int) -> int:
    """Dimension of the degree-``k`` part (polynomial degree) of the piece ``gamma``."""
    counts = [1] + [0] * k
    for g in gamma:
        new = [0] * (k + 1)
        for a in range(k + 1):
            if counts[a]:
                for b in range(k + 1 - a):
                    new[a + b] += counts[a] * partitions_bounded(b, g)
        counts = new
    return counts[k]


def parse_quiver(vertex_count: int, arrows) -> Quiver:
    return validate_quiver(vertex_count, arrows)
