"""Digraph representation, degree arithmetic and isomorphism helpers.

A digraph of order p lives on the dense vertex range [0, p). Arcs are stored
as one out-neighbour bit mask per vertex (bit v of ``out[u]`` set iff u->v),
with the in-neighbour masks derived once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 64
CANONICAL_MAX_ORDER = 10


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> list[int]:
    """Members of a vertex bit mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Digraph:
    """Immutable simple loop-free digraph on vertices 0..order-1."""

    __slots__ = ("order", "out", "inn", "_hash")

    def __init__(self, order: int, out: Sequence[int]):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {order}")
        if len(out) != order:
            raise ValueError("need exactly one out-mask per vertex")
        full = (1 << order) - 1
        inn = [0] * order
        for u, row in enumerate(out):
            if row & ~full:
                raise ValueError(f"arc from {u} leaves the vertex range")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in bits(row):
                inn[v] |= 1 << u
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "out", tuple(out))
        object.__setattr__(self, "inn", tuple(inn))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.order == other.order and self.out == other.out

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.order, self.out)))
        return self._hash

    def __repr__(self):
        return f"Digraph({self.order}, arcs={self.arcs()})"

    @property
    def all_vertices(self) -> int:
        return (1 << self.order) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out[u] | self.inn[u]) >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.out[u])]

    def arc_count(self) -> int:
        return sum(popcount(r) for r in self.out)

    def od(self, v: int, within: int | None = None) -> int:
        row = self.out[v]
        return popcount(row if within is None else row & within)

    def id(self, v: int, within: int | None = None) -> int:
        col = self.inn[v]
        return popcount(col if within is None else col & within)

    def d(self, v: int, within: int | None = None) -> int:
        return self.od(v, within) + self.id(v, within)

    def adjacency_matrix(self) -> list[list[bool]]:
        return [[bool(self.out[u] >> v & 1) for v in range(self.order)] for u in range(self.order)]


def build(order: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph with exactly the listed arcs; repeated arcs collapse."""
    if order < 1:
        raise ValueError("order must be at least 1")
    out = [0] * order
    for u, v in arcs:
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"arc ({u},{v}) has an endpoint outside [0,{order})")
        if u == v:
            raise ValueError(f"loop arc ({u},{v}) is not allowed")
        out[u] |= 1 << v
    return Digraph(order, out)


def from_matrix(matrix: Sequence[Sequence[int | bool]]) -> Digraph:
    p = len(matrix)
    return Digraph(p, [sum(1 << v for v, x in enumerate(row) if x) for row in matrix])


def degree(G: Digraph, v: int, A: int | None = None) -> tuple[int, int, int]:
    """(out-degree, in-degree, degree) of v counted inside vertex set A."""
    if not 0 <= v < G.order:
        raise ValueError(f"vertex {v} out of range")
    if A is not None and A & ~G.all_vertices:
        raise ValueError("vertex set is not a subset of V(G)")
    o, i = G.od(v, A), G.id(v, A)
    return o, i, o + i


def converse(G: Digraph) -> Digraph:
    return Digraph(G.order, G.inn)


def relabel(G: Digraph, perm: Sequence[int]) -> Digraph:
    """Image of G under the vertex map v -> perm[v]."""
    p = G.order
    if sorted(perm) != list(range(p)):
        raise ValueError("perm must be a permutation of the vertices")
    out = [0] * p
    for u in range(p):
        row = 0
        for v in bits(G.out[u]):
            row |= 1 << perm[v]
        out[perm[u]] = row
    return Digraph(p, out)


def induced(G: Digraph, A: int) -> Digraph:
    """G<A>, with the members of A renumbered in ascending order."""
    if A == 0:
        raise ValueError("induced subdigraph needs a nonempty vertex set")
    if A & ~G.all_vertices:
        raise ValueError("vertex set is not a subset of V(G)")
    keep = bits(A)
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for u in keep:
        out.append(sum(1 << pos[v] for v in bits(G.out[u] & A)))
    return Digraph(len(keep), out)


def remove_vertices(G: Digraph, S: int) -> Digraph:
    return induced(G, G.all_vertices & ~S)


def complete(p: int) -> Digraph:
    full = (1 << p) - 1
    return Digraph(p, [full & ~(1 << v) for v in range(p)])


def add_arc(G: Digraph, u: int, v: int) -> Digraph:
    out = list(G.out)
    out[u] |= 1 << v
    return Digraph(G.order, out)


def remove_arc(G: Digraph, u: int, v: int) -> Digraph:
    out = list(G.out)
    out[u] &= ~(1 << v)
    return Digraph(G.order, out)


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically least off-diagonal adjacency string over relabelings."""

    order: int
    bits: str

    def hex(self) -> str:
        if not self.bits:
            return "0"
        width = (len(self.bits) + 3) // 4
        return format(int(self.bits, 2), f"0{width}x")

    def __str__(self):
        return f"{self.order}:{self.hex()}"

    def to_digraph(self) -> Digraph:
        p = self.order
        out = [0] * p
        it = iter(self.bits)
        for u in range(p):
            for v in range(p):
                if u != v and next(it) == "1":
                    out[u] |= 1 << v
        return Digraph(p, out)


def _row_bits(G: Digraph, seq: Sequence[int]) -> str:
    p = len(seq)
    chunks = []
    for i in range(p):
        row = G.out[seq[i]]
        chunks.append("".join("1" if row >> seq[j] & 1 else "0" for j in range(p) if j != i))
    return "".join(chunks)


def _twins(G: Digraph, u: int, v: int) -> bool:
    # transposition (u v) is an automorphism of G
    if G.has_arc(u, v) != G.has_arc(v, u):
        return False
    rest = ~((1 << u) | (1 << v))
    return (G.out[u] & rest) == (G.out[v] & rest) and (G.inn[u] & rest) == (G.inn[v] & rest)


def canonical_form(G: Digraph) -> CanonicalForm:
    """Minimum of the row-major adjacency string over all vertex orderings.

    Branch and bound over vertex orderings. After fixing the first k positions
    the rows of those positions are known up to the order of the unplaced
    vertices, so each such row is bounded below by its known prefix followed
    by its remaining zeros and then ones. Two leaves with equal strings give
    an automorphism; candidates in one orbit of the automorphisms fixing the
    current prefix lead to identical subtrees and are explored once.
    """
    p = G.order
    if p > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical_form supports order <= {CANONICAL_MAX_ORDER}, got {p}")
    if p == 1:
        return CanonicalForm(1, "")

    best: list = [None, None]  # rows, ordering
    autos: list[list[int]] = []
    out = G.out

    def lower_bounds(seq: list[int], rest: int) -> tuple[int, ...]:
        k = len(seq)
        nrest = popcount(rest)
        rows = []
        for i in range(k):
            row = out[seq[i]]
            val = 0
            for j in range(k):
                if j != i:
                    val = (val << 1) | (row >> seq[j] & 1)
            ones = popcount(row & rest)
            # remaining columns: zeros first, then ones
            val = (val << nrest) | ((1 << ones) - 1)
            rows.append(val)
        return tuple(rows)

    def same_orbit(u: int, explored: list[int], seq: list[int]) -> bool:
        gens = [g for g in autos if all(g[s] == s for s in seq)]
        if not gens:
            return False
        orbit = {u}
        frontier = [u]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(t in orbit for t in explored)

    def rec(seq: list[int], rest: int) -> None:
        if not rest:
            rows = lower_bounds(seq, 0)
            if best[0] is None or rows < best[0]:
                best[0], best[1] = rows, list(seq)
            elif rows == best[0]:
                g = [0] * p
                for a, b in zip(best[1], seq):
                    g[a] = b
                if g != list(range(p)):
                    autos.append(g)
            return
        tried: list[int] = []
        scored = []
        for v in bits(rest):
            if any(_twins(G, v, t) for t in tried):
                continue
            tried.append(v)
            seq.append(v)
            lb = lower_bounds(seq, rest & ~(1 << v))
            seq.pop()
            scored.append((lb, v))
        scored.sort()
        explored: list[int] = []
        for lb, v in scored:
            b = best[0]
            if b is not None and lb > b[: len(lb)]:
                break
            if same_orbit(v, explored, seq):
                continue
            explored.append(v)
            seq.append(v)
            rec(seq, rest & ~(1 << v))
            seq.pop()

    rec([], G.all_vertices)
    return CanonicalForm(p, _row_bits(G, best[1]))


def find_isomorphism(G: Digraph, H: Digraph) -> list[int] | None:
    """A vertex map m with relabel(G, m) == H, or None."""
    p = G.order
    if H.order != p or G.arc_count() != H.arc_count():
        return None
    sig_g = [(G.od(v), G.id(v)) for v in range(p)]
    sig_h = [(H.od(v), H.id(v)) for v in range(p)]
    if sorted(sig_g) != sorted(sig_h):
        return None
    # most constrained G-vertices first: rare signatures, then high degree
    freq: dict[tuple[int, int], int] = {}
    for s in sig_g:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(p), key=lambda v: (freq[sig_g[v]], -sum(sig_g[v]), v))
    image = [-1] * p
    used = [False] * p

    def consistent(u: int, w: int) -> bool:
        for x in range(p):
            y = image[x]
            if y < 0:
                continue
            if G.has_arc(u, x) != H.has_arc(w, y) or G.has_arc(x, u) != H.has_arc(y, w):
                return False
        return True

    def rec(i: int) -> bool:
        if i == p:
            return True
        u = order[i]
        for w in range(p):
            if used[w] or sig_h[w] != sig_g[u]:
                continue
            if not consistent(u, w):
                continue
            image[u] = w
            used[w] = True
            if rec(i + 1):
                return True
            image[u] = -1
            used[w] = False
        return False

    return list(image) if rec(0) else None


def is_isomorphic(G: Digraph, H: Digraph) -> bool:
    return find_isomorphism(G, H) is not None


def vertex_subsets(p: int, size: int) -> Iterable[int]:
    for combo in combinations(range(p), size):
        yield mask_of(combo)
