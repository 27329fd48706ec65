"""Acyclic quivers, their bilinear forms, and subquiver partitions.

Vertices are ``1..n`` and every arrow ``(tail, head)`` must satisfy
``head < tail`` ("head before tail").  Dimension vectors are plain tuples of
non-negative integers.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    ContractionCyclic,
    CycleFound,
    InputError,
    LengthMismatch,
    NotConnected,
    NotDisjointCover,
    NotDynkin,
    NotOrdered,
    OrderViolation,
)

DimVector = tuple


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple  # ((tail, head), ...) in canonical order

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def zero(self) -> tuple:
        return (0,) * self.vertex_count

    def simple(self, i: int) -> tuple:
        v = [0] * self.vertex_count
        v[i - 1] = 1
        return tuple(v)

    def check_dim(self, gamma: Sequence[int]) -> tuple:
        gamma = tuple(int(x) for x in gamma)
        if len(gamma) != self.vertex_count:
            raise LengthMismatch(
                f"dimension vector {gamma} has length {len(gamma)}, quiver has {self.vertex_count} vertices"
            )
        if any(x < 0 for x in gamma):
            raise InputError(f"dimension vector {gamma} has a negative entry")
        return gamma

    def to_json(self, blocks=None) -> dict:
        out = {"vertices": self.vertex_count, "arrows": [list(a) for a in self.arrows]}
        if blocks is not None:
            out["blocks"] = [list(b) for b in blocks]
        return out


def _has_cycle(n: int, edges: Iterable[tuple]) -> bool:
    """Kahn's algorithm on vertices 1..n with directed edges (src, dst)."""
    out = {v: [] for v in range(1, n + 1)}
    indeg = {v: 0 for v in range(1, n + 1)}
    for s, d in edges:
        out[s].append(d)
        indeg[d] += 1
    stack = [v for v in indeg if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen < n


def validate_quiver(vertex_count: int, arrows: Iterable[Sequence[int]]) -> Quiver:
    """Build a :class:`Quiver`, rejecting oriented cycles and head >= tail arrows."""
    n = int(vertex_count)
    if n < 1:
        raise InputError("a quiver needs at least one vertex")
    arr = []
    for a in arrows:
        if len(a) != 2:
            raise InputError(f"arrow {a!r} is not a (tail, head) pair")
        t, h = int(a[0]), int(a[1])
        if not (1 <= t <= n and 1 <= h <= n):
            raise InputError(f"arrow {(t, h)} has a vertex outside 1..{n}")
        arr.append((t, h))
    if _has_cycle(n, arr):
        raise CycleFound("the quiver has an oriented cycle")
    for t, h in arr:
        if not h < t:
            raise OrderViolation(f"arrow {t}->{h} violates head-before-tail ordering (need head < tail)")
    return Quiver(n, tuple(arr))


def reindex_quiver(vertex_count: int, arrows: Iterable[Sequence[int]]) -> tuple[Quiver, dict]:
    """Relabel an acyclic quiver into head-before-tail order.

    Returns the relabelled quiver and the map old vertex -> new vertex.
    Ties are broken by smallest original index.
    """
    n = int(vertex_count)
    arr = [(int(t), int(h)) for t, h in arrows]
    if _has_cycle(n, arr):
        raise CycleFound("the quiver has an oriented cycle")
    # a tail may only be placed once all heads of its outgoing arrows are placed
    pending = {v: 0 for v in range(1, n + 1)}
    waiting = {v: [] for v in range(1, n + 1)}
    for t, h in arr:
        pending[t] += 1
        waiting[h].append(t)
    heap = [v for v in pending if pending[v] == 0]
    heapq.heapify(heap)
    relabel = {}
    while heap:
        v = heapq.heappop(heap)
        relabel[v] = len(relabel) + 1
        for t in waiting[v]:
            pending[t] -= 1
            if pending[t] == 0:
                heapq.heappush(heap, t)
    q = validate_quiver(n, [(relabel[t], relabel[h]) for t, h in arr])
    return q, relabel


def euler_form(q: Quiver, g1: Sequence[int], g2: Sequence[int]) -> int:
    g1, g2 = q.check_dim(g1), q.check_dim(g2)
    val = sum(a * b for a, b in zip(g1, g2))
    for t, h in q.arrows:
        val -= g1[t - 1] * g2[h - 1]
    return val


def antisym_form(q: Quiver, g1: Sequence[int], g2: Sequence[int]) -> int:
    """``<g1, g2> = chi(g2, g1) - chi(g1, g2)``."""
    return euler_form(q, g2, g1) - euler_form(q, g1, g2)


def subquiver(q: Quiver, vertices: Iterable[int]) -> tuple[Quiver, dict]:
    """Induced full subquiver on ``vertices`` relabelled to 1..k (order preserved)."""
    vs = sorted(set(vertices))
    relabel = {v: k + 1 for k, v in enumerate(vs)}
    arrows = [(relabel[t], relabel[h]) for t, h in q.arrows if t in relabel and h in relabel]
    return Quiver(len(vs), tuple(arrows)), relabel


def _components(vertices, edges) -> list:
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    comps, seen = [], set()
    for v in sorted(adj):
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def classify_dynkin(q: Quiver) -> str | None:
    """Type of the underlying graph: ``"A3"``, ``"D5"``, ``"E6"`` ... or ``None``."""
    n = q.vertex_count
    pairs = [frozenset(a) for a in q.arrows]
    if len(set(pairs)) != len(pairs):
        return None  # parallel or antiparallel arrows
    if len(pairs) != n - 1 or len(_components(q.vertices, q.arrows)) != 1:
        return None
    deg = {v: 0 for v in q.vertices}
    adj = {v: [] for v in q.vertices}
    for t, h in q.arrows:
        deg[t] += 1
        deg[h] += 1
        adj[t].append(h)
        adj[h].append(t)
    branch = [v for v in deg if deg[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        return None
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while deg[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    return None


@dataclass(frozen=True)
class SubquiverPartition:
    quiver: Quiver
    blocks: tuple  # tuple of sorted vertex tuples, in validated order
    types: tuple  # Dynkin type string or None per block
    block_of: dict = field(compare=False, repr=False)

    @property
    def is_dynkin(self) -> bool:
        return all(t is not None for t in self.types)

    @property
    def has_e8(self) -> bool:
        return "E8" in self.types

    @property
    def internal_arrows(self) -> tuple:
        return tuple(a for a in self.quiver.arrows if self.block_of[a[0]] == self.block_of[a[1]])

    def block_quiver(self, j: int) -> tuple[Quiver, dict]:
        """Block ``j`` (0-based) as a standalone quiver and its vertex relabelling."""
        return subquiver(self.quiver, self.blocks[j])


def _ordered_suggestion(nblocks: int, contracted: list) -> list | None:
    pending = [0] * nblocks
    waiting = [[] for _ in range(nblocks)]
    for tb, hb in contracted:
        pending[tb] += 1
        waiting[hb].append(tb)
    heap = [j for j in range(nblocks) if pending[j] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        j = heapq.heappop(heap)
        order.append(j)
        for t in waiting[j]:
            pending[t] -= 1
            if pending[t] == 0:
                heapq.heappush(heap, t)
    return order if len(order) == nblocks else None


def validate_partition(q: Quiver, raw_blocks, require_dynkin: bool = False) -> SubquiverPartition:
    """Check that ``raw_blocks`` is an admissible, ordered subquiver partition of ``q``."""
    blocks = [tuple(sorted(int(v) for v in b)) for b in raw_blocks]
    seen = []
    for b in blocks:
        if not b:
            raise NotDisjointCover("empty block")
        if len(set(b)) != len(b):
            raise NotDisjointCover(f"block {list(b)} repeats a vertex")
        seen.extend(b)
    if sorted(seen) != list(q.vertices):
        raise NotDisjointCover(f"blocks {[list(b) for b in blocks]} do not partition vertices 1..{q.vertex_count}")
    block_of = {v: j for j, b in enumerate(blocks) for v in b}
    for b in blocks:
        inner = [a for a in q.arrows if a[0] in b and a[1] in b]
        if len(_components(b, inner)) != 1:
            raise NotConnected(f"block {list(b)} is not connected")
    contracted = [(block_of[t], block_of[h]) for t, h in q.arrows if block_of[t] != block_of[h]]
    if _has_cycle(len(blocks), [(x + 1, y + 1) for x, y in contracted]):
        raise ContractionCyclic("contracting the blocks produces an oriented cycle")
    if any(not hb < tb for tb, hb in contracted):
        order = _ordered_suggestion(len(blocks), contracted)
        suggestion = [list(blocks[j]) for j in order]
        raise NotOrdered(f"blocks are not in head-before-tail order; try {suggestion}", suggestion)
    types = []
    for j in range(len(blocks)):
        sub, _ = subquiver(q, blocks[j])
        types.append(classify_dynkin(sub))
    if require_dynkin:
        bad = [list(blocks[j]) for j, t in enumerate(types) if t is None]
        if bad:
            raise NotDynkin(f"blocks {bad} are not Dynkin quivers")
    return SubquiverPartition(q, tuple(blocks), tuple(types), block_of)


def singleton_partition(q: Quiver) -> SubquiverPartition:
    return validate_partition(q, [[v] for v in q.vertices])


def whole_partition(q: Quiver) -> SubquiverPartition:
    return validate_partition(q, [list(q.vertices)])


def contract(p: SubquiverPartition) -> Quiver:
    """The quiver obtained by collapsing each block of ``p`` to a vertex."""
    arrows = [
        (p.block_of[t] + 1, p.block_of[h] + 1)
        for t, h in p.quiver.arrows
        if p.block_of[t] != p.block_of[h]
    ]
    return validate_quiver(len(p.blocks), arrows)


def support(gamma: Sequence[int]) -> set:
    return {i + 1 for i, x in enumerate(gamma) if x}


def is_consistent(p: SubquiverPartition, gammas) -> tuple[bool, tuple | None]:
    """Whether ``gammas`` is consistent with ``p``.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is
    ``("unsupported", u)`` or ``("order", u, v)`` with 1-based list positions.
    Zero vectors are supported everywhere and never break the order.
    """
    cur_block, cur_pos = 0, None
    for u, g in enumerate(gammas, start=1):
        g = p.quiver.check_dim(g)
        supp = support(g)
        if not supp:
            continue
        js = {p.block_of[i] for i in supp}
        if len(js) != 1:
            return False, ("unsupported", u)
        (j,) = js
        if j < cur_block:
            return False, ("order", cur_pos, u)
        cur_block, cur_pos = j, u
    return True, None


def load_quiver_file(path) -> tuple[Quiver, list | None]:
    """Parse the JSON quiver file format ``{"vertices", "arrows", "blocks"?}``."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read quiver file {path}: {exc}") from exc
    return quiver_from_json(data)


def quiver_from_json(data) -> tuple[Quiver, list | None]:
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError('quiver JSON must be an object with a "vertices" field')
    q = validate_quiver(data["vertices"], data.get("arrows", []))
    blocks = data.get("blocks")
    return q, blocks
