"""Positive roots of ADE quivers, Reineke orders and Kostant partitions."""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InputError, NoValidOrder, NotDynkin
from .quiver import Quiver, SubquiverPartition, antisym_form, classify_dynkin


def _cartan(q: Quiver) -> list:
    n = q.vertex_count
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for t, h in q.arrows:
        c[t - 1][h - 1] -= 1
        c[h - 1][t - 1] -= 1
    return c


def reflection_closure(cartan: Sequence[Sequence[int]], limit: int = 10_000) -> list:
    """Positive roots reachable from the simple roots by simple reflections.

    Works for any symmetric generalized Cartan matrix; for finite type it
    returns the whole positive system.  ``limit`` guards infinite types.
    """
    n = len(cartan)
    simples = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    found = set(simples)
    queue = list(simples)
    while queue:
        beta = queue.pop()
        for i in range(n):
            c = sum(cartan[i][k] * beta[k] for k in range(n))
            if c == 0:
                continue
            new = list(beta)
            new[i] -= c
            new = tuple(new)
            if min(new) < 0 or new in found:
                continue
            found.add(new)
            queue.append(new)
            if len(found) > limit:
                raise NotDynkin("root closure does not terminate; the diagram is not of finite type")
    return sorted(found)


def positive_roots(q: Quiver) -> list:
    """All positive roots of a connected Dynkin quiver, sorted lexicographically."""
    if classify_dynkin(q) is None:
        raise NotDynkin("quiver is not an orientation of an ADE Dynkin diagram")
    return reflection_closure(_cartan(q))


def is_reineke_order(q: Quiver, roots: Sequence[tuple]) -> bool:
    return all(
        antisym_form(q, roots[u], roots[v]) >= 0
        for u in range(len(roots))
        for v in range(u + 1, len(roots))
    )


def _constraint_graph(q: Quiver, roots):
    roots = [tuple(r) for r in roots]
    succ = {r: [] for r in roots}
    indeg = {r: 0 for r in roots}
    for a in roots:
        for b in roots:
            if a != b and antisym_form(q, a, b) > 0:
                succ[a].append(b)
                indeg[b] += 1
    return roots, succ, indeg


def reineke_order(q: Quiver, roots: Sequence[tuple] | None = None) -> list:
    """Linear extension of ``a -> b`` whenever ``<a, b> > 0``.

    Ties are broken by the lexicographically smallest vector, so the output
    is deterministic.
    """
    if roots is None:
        roots = positive_roots(q)
    roots, succ, indeg = _constraint_graph(q, roots)
    heap = [r for r in roots if indeg[r] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        r = heapq.heappop(heap)
        out.append(r)
        for s in succ[r]:
            indeg[s] -= 1
            if indeg[s] == 0:
                heapq.heappush(heap, s)
    if len(out) != len(roots) or not is_reineke_order(q, out):
        raise NoValidOrder("no Reineke order exists for these roots")
    return out


def reineke_orders(q: Quiver, roots: Sequence[tuple] | None = None, limit: int = 100) -> Iterator[list]:
    """Enumerate up to ``limit`` Reineke orders (all linear extensions)."""
    if roots is None:
        roots = positive_roots(q)
    roots, succ, indeg = _constraint_graph(q, roots)
    indeg = dict(indeg)
    count = 0

    def rec(prefix):
        nonlocal count
        if count >= limit:
            return
        if len(prefix) == len(roots):
            count += 1
            yield list(prefix)
            return
        for r in sorted(x for x in roots if indeg[x] == 0 and x not in placed):
            placed.add(r)
            for s in succ[r]:
                indeg[s] -= 1
            prefix.append(r)
            yield from rec(prefix)
            prefix.pop()
            for s in succ[r]:
                indeg[s] += 1
            placed.discard(r)

    placed = set()
    yield from rec([])


@dataclass(frozen=True)
class OrderedRoots:
    """Positive roots of a Dynkin subquiver partition in a combined Reineke order."""

    roots: tuple  # full-length dimension vectors
    block: tuple  # 0-based block index for each root
    local: tuple  # 0-based index inside the block's own order

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, u):
        return self.roots[u]

    def block_slice(self, j: int) -> range:
        idx = [u for u, b in enumerate(self.block) if b == j]
        return range(idx[0], idx[-1] + 1) if idx else range(0)


def block_positive_roots(p: SubquiverPartition, j: int) -> list:
    """Positive roots of block ``j`` embedded as dimension vectors of the whole quiver."""
    sub, relabel = p.block_quiver(j)
    back = {new: old for old, new in relabel.items()}
    out = []
    for r in positive_roots(sub):
        full = [0] * p.quiver.vertex_count
        for k, x in enumerate(r, start=1):
            full[back[k] - 1] = x
        out.append(tuple(full))
    return out


def combined_reineke_order(p: SubquiverPartition, block_orders: Sequence[Sequence[tuple]] | None = None) -> OrderedRoots:
    """Concatenate per-block Reineke orders in block order.

    ``block_orders`` overrides the per-block orders (each must be a valid
    Reineke order of that block's roots).
    """
    if not p.is_dynkin:
        raise NotDynkin("every block must be Dynkin to order its roots")
    roots, block, local = [], [], []
    for j in range(len(p.blocks)):
        if block_orders is not None:
            order = [tuple(r) for r in block_orders[j]]
            if sorted(order) != sorted(block_positive_roots(p, j)):
                raise InputError(f"block {j + 1}: supplied order is not a list of its positive roots")
            if not is_reineke_order(p.quiver, order):
                raise InputError(f"block {j + 1}: supplied order is not a Reineke order")
        else:
            order = reineke_order(p.quiver, block_positive_roots(p, j))
        for k, r in enumerate(order):
            roots.append(r)
            block.append(j)
            local.append(k)
    return OrderedRoots(tuple(roots), tuple(block), tuple(local))


def enumerate_partitions(roots: Sequence[tuple], gamma: Sequence[int]) -> list:
    """All ``m`` with ``sum m_u roots[u] == gamma``, in lexicographic order of ``m``."""
    roots = [tuple(r) for r in roots]
    gamma = tuple(gamma)
    n, r = len(gamma), len(roots)
    # vertices still reachable by roots u.. (for pruning)
    reach = [set() for _ in range(r + 1)]
    for u in range(r - 1, -1, -1):
        reach[u] = reach[u + 1] | {i for i in range(n) if roots[u][i]}
    out = []
    m = [0] * r

    def rec(u, rest):
        if any(rest[i] and i not in reach[u] for i in range(n)):
            return
        if u == r:
            out.append(tuple(m))
            return
        beta = roots[u]
        cap = min((rest[i] // beta[i] for i in range(n) if beta[i]), default=0)
        for k in range(cap + 1):
            m[u] = k
            rec(u + 1, tuple(rest[i] - k * beta[i] for i in range(n)))
        m[u] = 0

    rec(0, gamma)
    return out


def partition_sum(roots: Sequence[tuple], m: Sequence[int]) -> tuple:
    n = len(roots[0]) if roots else 0
    return tuple(sum(k * b[i] for k, b in zip(m, roots)) for i in range(n))


def format_root(beta: Sequence[int]) -> str:
    parts = []
    for i, x in enumerate(beta, start=1):
        if x == 1:
            parts.append(f"e{i}")
        elif x:
            parts.append(f"{x}e{i}")
    return "+".join(parts) or "0"


_ROOT_TERM = re.compile(r"^(\d*)\*?e(\d+)$")


def parse_root(text: str, n: int) -> tuple:
    """Inverse of :func:`format_root` (``"e1+2e3"``)."""
    vec = [0] * n
    for term in text.replace(" ", "").split("+"):
        mt = _ROOT_TERM.match(term)
        if not mt:
            raise InputError(f"cannot parse root {text!r}")
        i = int(mt.group(2))
        if not 1 <= i <= n:
            raise InputError(f"root {text!r} mentions vertex {i} outside 1..{n}")
        vec[i - 1] += int(mt.group(1) or 1)
    return tuple(vec)
