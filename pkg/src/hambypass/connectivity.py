"""Strong components and k-strong connectivity on bit-mask digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Digraph, bits, mask_of


def reach(G: Digraph, v: int, within: int | None = None, backward: bool = False) -> int:
    """Vertices reachable from v (or reaching v) inside the set ``within``."""
    allowed = G.all_vertices if within is None else within
    adj = G.inn if backward else G.out
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_strong(G: Digraph, within: int | None = None) -> bool:
    allowed = G.all_vertices if within is None else within
    if allowed == 0:
        return False
    v = (allowed & -allowed).bit_length() - 1
    return reach(G, v, allowed) == allowed and reach(G, v, allowed, backward=True) == allowed


@dataclass(frozen=True)
class ComponentDecomposition:
    """Strong components D_1..D_s as vertex masks; arcs only run from D_i to D_j with i < j."""

    components: tuple[int, ...]

    def __len__(self):
        return len(self.components)

    def as_lists(self) -> list[list[int]]:
        return [bits(c) for c in self.components]

    def index_of(self, v: int) -> int:
        for i, c in enumerate(self.components):
            if c >> v & 1:
                return i
        raise ValueError(f"vertex {v} not covered")


def strong_components_ordered(G: Digraph, within: int | None = None) -> ComponentDecomposition:
    """Strong components in topological order of the condensation.

    Among components with no remaining predecessor the one holding the
    smallest vertex comes first, so the output is fully deterministic.
    """
    allowed = G.all_vertices if within is None else within
    comps = []
    left = allowed
    while left:
        v = (left & -left).bit_length() - 1
        c = reach(G, v, allowed) & reach(G, v, allowed, backward=True)
        comps.append(c)
        left &= ~c
    comps.sort(key=lambda c: c & -c)
    # Kahn's algorithm with the min-vertex tie break
    n = len(comps)
    succ = [set() for _ in range(n)]
    indeg = [0] * n
    for i, ci in enumerate(comps):
        out_i = 0
        for u in bits(ci):
            out_i |= G.out[u]
        for j, cj in enumerate(comps):
            if i != j and out_i & cj:
                succ[i].add(j)
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop(0)
        order.append(comps[i])
        for j in sorted(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
                ready.sort()
    return ComponentDecomposition(tuple(order))


def is_k_strong(G: Digraph, k: int) -> bool:
    """|V| >= k+1 and deleting any k-1 or fewer vertices leaves a strong digraph."""
    if k < 1:
        raise ValueError("k must be positive")
    p = G.order
    if p < k + 1:
        return False
    full = G.all_vertices
    for size in range(k):
        for removed in combinations(range(p), size):
            if not is_strong(G, full & ~mask_of(removed)):
                return False
    return True
