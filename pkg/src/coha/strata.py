"""Quiver-stratum classes, Y-sets, the restriction map and structure checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    CohaElement,
    choose_marker,
    element,
    graded_dim,
    muln,
    one,
    subalgebra_element,
    A1,
)
from .errors import E8Block, GradeMismatch, InputError, NotDynkin
from .linalg import poly_rank
from .parallel import pmap
from .poly import MPoly, format_poly, monomial_symmetric, omega, substitute, tvar
from .quiver import SubquiverPartition, euler_form, whole_partition
from .roots import OrderedRoots, combined_reineke_order, enumerate_partitions, partition_sum


def _order(p: SubquiverPartition, order: OrderedRoots | None) -> OrderedRoots:
    if not p.is_dynkin:
        raise NotDynkin("stratum computations need a Dynkin subquiver partition")
    return order if order is not None else combined_reineke_order(p)


def check_partition_vector(order: OrderedRoots, m: Sequence[int]) -> tuple:
    m = tuple(int(x) for x in m)
    if len(m) != len(order):
        raise InputError(f"partition has {len(m)} entries but there are {len(order)} roots")
    if any(x < 0 for x in m):
        raise InputError("multiplicities must be non-negative")
    return m


@dataclass(frozen=True)
class YSystem:
    gamma: tuple
    m: tuple
    order: OrderedRoots
    sets: dict  # (i, u, v) -> tuple of positions in 1..gamma(i); 1-based u, v

    def var_map(self) -> dict:
        """``omega[i, k] -> t[u, v]`` for every ``k`` in ``Y[i, u, v]``."""
        return {omega(i, k): tvar(u, v) for (i, u, v), ks in self.sets.items() for k in ks}

    def block_alias(self, u: int) -> tuple:
        """``(block, index inside block)`` of the flattened root index ``u`` (all 1-based)."""
        return self.order.block[u - 1] + 1, self.order.local[u - 1] + 1

    def table(self) -> dict:
        """Every ``Y[i, u, v]`` including the empty ones, for display."""
        out = {}
        n = len(self.gamma)
        for u, mu in enumerate(self.m, start=1):
            for v in range(1, mu + 1):
                for i in range(1, n + 1):
                    out[(i, u, v)] = self.sets.get((i, u, v), ())
        return out


def y_system(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> YSystem:
    order = _order(p, order)
    m = check_partition_vector(order, m)
    n = p.quiver.vertex_count
    counter = [0] * n
    sets = {}
    for u, (beta, mu) in enumerate(zip(order.roots, m), start=1):
        for v in range(1, mu + 1):
            for i in range(n):
                d = beta[i]
                if d:
                    sets[(i + 1, u, v)] = tuple(range(counter[i] + 1, counter[i] + d + 1))
                    counter[i] += d
    return YSystem(tuple(counter), m, order, sets)


def stratum_class(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> CohaElement:
    """``1 * 1 * ... * 1`` over the nonzero ``m_u beta_u``, the class of the stratum closure."""
    order = _order(p, order)
    m = check_partition_vector(order, m)
    q = p.quiver
    factors = [one(q, tuple(mu * x for x in beta)) for beta, mu in zip(order.roots, m) if mu]
    if not factors:
        return one(q, q.zero())
    return muln(factors)


def is_conditional(p: SubquiverPartition) -> bool:
    """True when a block is of type E: the class formula then assumes rational singularities."""
    return any(t is not None and t.startswith("E") for t in p.types)


def restrict(y: YSystem, e: CohaElement) -> MPoly:
    if e.grade != y.gamma:
        raise GradeMismatch(f"element grade {list(e.grade)} differs from Y-system grade {list(y.gamma)}")
    return substitute(e.poly, y.var_map())


def euler_class(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> MPoly:
    order = _order(p, order)
    return restrict(y_system(p, m, order), stratum_class(p, m, order))


def default_markers(order: OrderedRoots) -> list:
    return [choose_marker(beta) for beta in order.roots]


def factorization_product(p, m, f_list, markers=None, order=None) -> CohaElement:
    """``mu_m(f_1, ..., f_r)``: product of subalgebra elements in root order."""
    order = _order(p, order)
    m = check_partition_vector(order, m)
    if markers is None:
        markers = default_markers(order)
    factors = [
        subalgebra_element(p.quiver, beta, mu, i, f)
        for beta, mu, i, f in zip(order.roots, m, markers, f_list)
    ]
    return muln(factors)


def factored_restriction_check(p, m, f_list, markers=None, order=None):
    """Check ``restrict(mu_m(f)) == prod_u f_u(t[u, *]) * euler_class``.

    ``f_list[u]`` is a polynomial in ``omega[1, 1..m_u]`` (the single-vertex
    convention of :func:`subalgebra_element`).  Returns ``(ok, witness)``
    with both sides in the witness.
    """
    order = _order(p, order)
    m = check_partition_vector(order, m)
    y = y_system(p, m, order)
    lhs = restrict(y, factorization_product(p, m, f_list, markers, order))
    rhs = euler_class(p, m, order)
    for u, (mu, f) in enumerate(zip(m, f_list), start=1):
        f = element(A1, (mu,), f).poly if not isinstance(f, MPoly) else f
        rhs = rhs * substitute(f, {omega(1, v): tvar(u, v) for v in range(1, mu + 1)})
    return lhs == rhs, {"restricted_product": format_poly(lhs), "expected": format_poly(rhs)}


# blockwise computations -----------------------------------------------------


def _block_data(p: SubquiverPartition, order: OrderedRoots, j: int):
    sub, relabel = p.block_quiver(j)
    vs = p.blocks[j]
    idx = list(order.block_slice(j))
    local_roots = tuple(tuple(order.roots[u][v - 1] for v in vs) for u in idx)
    sub_p = whole_partition(sub)
    sub_order = OrderedRoots(local_roots, (0,) * len(idx), tuple(range(len(idx))))
    return sub_p, sub_order, relabel, idx


def block_orbit_classes(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> list:
    """Per block, the orbit class computed on the block alone, embedded back into ``p.quiver``."""
    order = _order(p, order)
    m = check_partition_vector(order, m)
    out = []
    for j in range(len(p.blocks)):
        sub_p, sub_order, relabel, idx = _block_data(p, order, j)
        cls = stratum_class(sub_p, [m[u] for u in idx], sub_order)
        back = {omega(k, a): omega(v, a) for v, k in relabel.items() for a in range(1, cls.grade[k - 1] + 1)}
        grade = [0] * p.quiver.vertex_count
        for v, k in relabel.items():
            grade[v - 1] = cls.grade[k - 1]
        out.append(CohaElement(p.quiver, tuple(grade), substitute(cls.poly, back)))
    return out


def orbit_product_check(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None):
    """Product of per-block orbit classes versus the stratum class; ``(ok, lhs, rhs)``."""
    order = _order(p, order)
    lhs = muln(block_orbit_classes(p, m, order))
    rhs = stratum_class(p, m, order)
    return lhs.poly == rhs.poly and lhs.grade == rhs.grade, lhs, rhs


def block_euler_classes(p: SubquiverPartition, m: Sequence[int], order: OrderedRoots | None = None) -> list:
    """Per block, the Euler class of the block run alone, with ``t`` renamed to global root indices."""
    order = _order(p, order)
    m = check_partition_vector(order, m)
    out = []
    for j in range(len(p.blocks)):
        sub_p, sub_order, _, idx = _block_data(p, order, j)
        mj = [m[u] for u in idx]
        eps = euler_class(sub_p, mj, sub_order)
        rename = {tvar(k + 1, v): tvar(u + 1, v) for k, u in enumerate(idx) for v in range(1, m[u] + 1)}
        out.append(substitute(eps, rename))
    return out


# structure verification -----------------------------------------------------


@dataclass(frozen=True)
class DegreeReport:
    k: int
    products: int
    rank: int
    graded_dim: int

    @property
    def verified(self) -> bool:
        return self.products == self.rank == self.graded_dim

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "products": self.products,
            "rank": self.rank,
            "graded_dim": self.graded_dim,
            "verified": self.verified,
        }


def degree_shift(p: SubquiverPartition, order: OrderedRoots, m: Sequence[int]) -> int:
    """Degree added by multiplying the factors of ``m`` (``-sum_{u<v} chi``)."""
    grades = [tuple(mu * x for x in beta) for beta, mu in zip(order.roots, m) if mu]
    return -sum(euler_form(p.quiver, a, b) for a, b in itertools.combinations(grades, 2))


def _compositions(total: int, caps: Sequence[bool]):
    """Compositions of ``total`` into ``len(caps)`` parts; parts with cap False are zero."""
    if not caps:
        if total == 0:
            yield ()
        return
    if not caps[0]:
        for rest in _compositions(total, caps[1:]):
            yield (0,) + rest
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, caps[1:]):
            yield (a,) + rest


def _bounded_partitions(d: int, parts: int, largest: int | None = None):
    if largest is None:
        largest = d
    if d == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _bounded_partitions(d - first, parts - 1, first):
            yield (first,) + rest


def subalgebra_basis(m: int, d: int) -> list:
    """Monomial symmetric basis of degree ``d`` in ``omega[1, 1..m]``."""
    vars_ = [omega(1, v) for v in range(1, m + 1)]
    return [monomial_symmetric(lam, vars_) for lam in _bounded_partitions(d, m)]


def _products_for(args):
    p, order, m, k_max, markers = args
    shift = degree_shift(p, order, m)
    by_k = {}
    for k in range(shift, k_max + 1):
        polys = []
        for split in _compositions(k - shift, [mu > 0 for mu in m]):
            bases = [subalgebra_basis(mu, d) for mu, d in zip(m, split)]
            for fs in itertools.product(*bases):
                polys.append(factorization_product(p, m, fs, markers, order).poly)
        by_k[k] = polys
    return by_k


def verify_structure_iso(
    p: SubquiverPartition,
    gamma: Sequence[int],
    k_max: int,
    order: OrderedRoots | None = None,
    markers: Sequence[int] | None = None,
) -> list:
    """Per-degree comparison of product count, rank and graded dimension."""
    if p.has_e8:
        raise E8Block("a block is an orientation of E8; its longest root has no marker vertex")
    order = _order(p, order)
    gamma = p.quiver.check_dim(gamma)
    if markers is None:
        markers = default_markers(order)
    parts = enumerate_partitions(order.roots, gamma)
    results = pmap(_products_for, [(p, order, m, k_max, markers) for m in parts])
    reports = []
    for k in range(k_max + 1):
        polys = [f for res in results for f in res.get(k, [])]
        reports.append(DegreeReport(k, len(polys), poly_rank(polys) if polys else 0, graded_dim(gamma, k)))
    return reports


def all_partitions(p: SubquiverPartition, gamma: Sequence[int], order: OrderedRoots | None = None) -> list:
    order = _order(p, order)
    out = enumerate_partitions(order.roots, gamma)
    assert all(partition_sum(order.roots, m) == tuple(gamma) for m in out)
    return out
