"""Exact witness search and the constructive insertion operations.

All searches branch on the least available vertex first, so the first
witness found is the lexicographically least one and repeated calls agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .core import Digraph, bits, mask_of, popcount

SEARCH_MAX_ORDER = 10


class WitnessKind(str, Enum):
    HAM_CYCLE = "hamcycle"
    HAM_PATH = "hampath"
    HAM_BYPASS = "bypass"
    DPN = "dpn"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    sequence: tuple[int, ...]
    second: tuple[int, ...] = ()
    n: int = 0  # D(p,n) parameter for DPN witnesses

    def __str__(self):
        seq = " ".join(map(str, self.sequence))
        if self.kind is WitnessKind.DPN:
            return f"dpn:{self.n} [{seq}; {' '.join(map(str, self.second))}]"
        if self.kind is WitnessKind.CYCLE:
            return f"cycle:{len(self.sequence)} [{seq}]"
        return f"{self.kind.value} [{seq}]"


def is_path(G: Digraph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq) or any(not 0 <= v < G.order for v in seq):
        return False
    return all(G.has_arc(a, b) for a, b in zip(seq, seq[1:]))


def is_cycle(G: Digraph, seq: Sequence[int]) -> bool:
    return len(seq) >= 2 and is_path(G, seq) and G.has_arc(seq[-1], seq[0])


def validate_witness(G: Digraph, w: Witness) -> bool:
    p = G.order
    seq = w.sequence
    if w.kind is WitnessKind.HAM_CYCLE:
        return len(seq) == p and is_cycle(G, seq)
    if w.kind is WitnessKind.HAM_PATH:
        return len(seq) == p and is_path(G, seq)
    if w.kind is WitnessKind.HAM_BYPASS:
        return len(seq) == p and p >= 2 and is_path(G, seq) and G.has_arc(seq[0], seq[-1])
    if w.kind is WitnessKind.CYCLE:
        return is_cycle(G, seq)
    if w.kind is WitnessKind.DPN:
        a, b = seq, w.second
        if not (is_path(G, a) and is_path(G, b)):
            return False
        if len(a) != w.n or len(b) != p - w.n + 2:
            return False
        if a[0] != b[0] or a[-1] != b[-1]:
            return False
        inner = set(a[1:-1]) | set(b[1:-1])
        return not (set(a[1:-1]) & set(b[1:-1])) and len(inner) + 2 == p and a[0] != a[-1]
    return False


def _check_order(G: Digraph, low: int) -> None:
    if G.order < low:
        raise ValueError(f"order must be at least {low}")
    if G.order > SEARCH_MAX_ORDER:
        raise ValueError(f"exhaustive search supports order <= {SEARCH_MAX_ORDER}")


def _extend(G: Digraph, path: list[int], left: int, last_ok: int) -> bool:
    """Extend ``path`` through every vertex of ``left`` ending inside ``last_ok``."""
    if not left:
        return bool(last_ok >> path[-1] & 1)
    cand = G.out[path[-1]] & left
    if popcount(left) == 1:
        cand &= last_ok
    for v in bits(cand):
        path.append(v)
        if _extend(G, path, left & ~(1 << v), last_ok):
            return True
        path.pop()
    return False


def find_hamiltonian_path(G: Digraph, start: int | None = None, end: int | None = None) -> Witness | None:
    _check_order(G, 1)
    full = G.all_vertices
    starts = range(G.order) if start is None else [start]
    last_ok = full if end is None else 1 << end
    for s in starts:
        path = [s]
        if G.order == 1:
            if last_ok & 1:
                return Witness(WitnessKind.HAM_PATH, (s,))
            continue
        if _extend(G, path, full & ~(1 << s), last_ok):
            return Witness(WitnessKind.HAM_PATH, tuple(path))
    return None


def find_hamiltonian_cycle(G: Digraph) -> Witness | None:
    _check_order(G, 2)
    path = [0]
    if _extend(G, path, G.all_vertices & ~1, G.inn[0]):
        return Witness(WitnessKind.HAM_CYCLE, tuple(path))
    return None


def find_hamiltonian_bypass(G: Digraph) -> Witness | None:
    """Least Hamiltonian path v1..vp whose first vertex dominates the last."""
    _check_order(G, 3)
    full = G.all_vertices
    for s in range(G.order):
        ends = G.out[s]
        if popcount(ends) < 2:
            # v1 dominates both its successor and v_p
            continue
        path = [s]
        if _extend(G, path, full & ~(1 << s), ends):
            return Witness(WitnessKind.HAM_BYPASS, tuple(path))
    return None


def find_dpn(G: Digraph, n: int) -> Witness | None:
    """Two internally disjoint (x,y)-paths with n-1 and p-n+1 arcs covering V."""
    p = G.order
    _check_order(G, 3)
    if not 2 <= n <= p:
        raise ValueError(f"n must lie in [2, {p}] for order {p}")
    if n == 2:
        w = find_hamiltonian_bypass(G)
        if w is None:
            return None
        seq = w.sequence
        return Witness(WitnessKind.DPN, (seq[0], seq[-1]), seq, 2)
    full = G.all_vertices
    first: list[int] = []

    def short(path: list[int], used: int) -> bool:
        if len(path) == n:
            x, y = path[0], path[-1]
            rest = full & ~used
            if not rest:
                if G.has_arc(x, y):
                    first[:] = [x, y]
                    return True
                return False
            for a in bits(G.out[x] & rest):
                second = [x, a]
                left = rest & ~(1 << a)
                if not left:
                    ok = G.has_arc(a, y)
                else:
                    ok = _extend(G, second, left, G.inn[y])
                if ok:
                    second.append(y)
                    first[:] = second
                    return True
            return False
        for v in bits(G.out[path[-1]] & ~used):
            path.append(v)
            if short(path, used | (1 << v)):
                return True
            path.pop()
        return False

    for x in range(p):
        path = [x]
        if short(path, 1 << x):
            return Witness(WitnessKind.DPN, tuple(path), tuple(first), n)
    return None


def _cycles_through_min(G: Digraph, allowed: int, length: int | None):
    """Yield cycles (as lists) whose least vertex is their first vertex."""
    for s in bits(allowed):
        higher = allowed & ~((2 << s) - 1)
        path = [s]

        def rec(used: int):
            last = path[-1]
            if length is None or len(path) == length:
                if len(path) >= 2 and G.has_arc(last, s):
                    yield list(path)
                if length is not None:
                    return
            for v in bits(G.out[last] & higher & ~used):
                path.append(v)
                yield from rec(used | (1 << v))
                path.pop()

        yield from rec(1 << s)


def find_cycle(G: Digraph, k: int, through: int | None = None, within: int | None = None) -> Witness | None:
    """Some k-cycle (optionally through a vertex, inside a vertex set)."""
    allowed = G.all_vertices if within is None else within
    if through is not None:
        if not allowed >> through & 1:
            return None
        path = [through]
        ok = _find_closing(G, path, allowed & ~(1 << through), k)
        return Witness(WitnessKind.CYCLE, tuple(path)) if ok else None
    for c in _cycles_through_min(G, allowed, k):
        return Witness(WitnessKind.CYCLE, tuple(c))
    return None


def _find_closing(G: Digraph, path: list[int], left: int, k: int) -> bool:
    if len(path) == k:
        return G.has_arc(path[-1], path[0])
    for v in bits(G.out[path[-1]] & left):
        path.append(v)
        if _find_closing(G, path, left & ~(1 << v), k):
            return True
        path.pop()
    return False


def cycle_spectrum(G: Digraph) -> set[int]:
    """All cycle lengths present in G (2-cycles included)."""
    _check_order(G, 1)
    p = G.order
    found: set[int] = set()
    for k in range(2, p + 1):
        if find_cycle(G, k) is not None:
            found.add(k)
    return found


def is_pancyclic(G: Digraph, spectrum: set[int] | None = None) -> bool:
    spec = cycle_spectrum(G) if spectrum is None else spectrum
    return all(k in spec for k in range(3, G.order + 1))


def longest_cycle_vertex_sets(G: Digraph) -> tuple[int, list[int]]:
    """Length of a longest cycle and the distinct vertex sets of all longest cycles."""
    p = G.order
    for k in range(p, 1, -1):
        sets = sorted({mask_of(c) for c in _cycles_through_min(G, G.all_vertices, k)})
        if sets:
            return k, sets
    return 0, []


# ---------------------------------------------------------------------------
# insertion lemmas


def _require_path(G: Digraph, P: Sequence[int]) -> None:
    if len(P) < 1 or not is_path(G, P):
        raise ValueError("P is not a path of G")


def _require_cycle(G: Digraph, C: Sequence[int]) -> None:
    if not is_cycle(G, C):
        raise ValueError("C is not a cycle of G")


def insert_into_path(G: Digraph, P: Sequence[int], x: int) -> tuple[int, ...] | None:
    """x_1..x_i x x_{i+1}..x_m for the least i with x_i->x->x_{i+1}, else None."""
    _require_path(G, P)
    if x in P or not 0 <= x < G.order:
        raise ValueError("x must be a vertex off the path")
    for i in range(len(P) - 1):
        if G.has_arc(P[i], x) and G.has_arc(x, P[i + 1]):
            return tuple(P[: i + 1]) + (x,) + tuple(P[i + 1 :])
    return None


def insert_into_cycle(G: Digraph, C: Sequence[int], x: int, k: int) -> tuple[int, ...] | None:
    """A k-cycle through x using only V(C) and x.

    First tries the cycles x c_j c_{j+1} .. c_{j+k-2} x built from consecutive
    cycle vertices; one of those exists whenever d(x, V(C)) >= m + 1. Falls
    back to exhaustive search so that None means no such cycle at all.
    """
    _require_cycle(G, C)
    m = len(C)
    if x in C or not 0 <= x < G.order:
        raise ValueError("x must be a vertex off the cycle")
    if not 2 <= k <= m + 1:
        raise ValueError(f"k must lie in [2, {m + 1}]")
    for j in range(m):
        seg = [C[(j + t) % m] for t in range(k - 1)]
        if G.has_arc(x, seg[0]) and G.has_arc(seg[-1], x):
            return (x,) + tuple(seg)
    w = find_cycle(G, k, through=x, within=mask_of(C) | (1 << x))
    return w.sequence if w else None


def extend_path_maximally(G: Digraph, P: Sequence[int], S: Sequence[int] | int) -> tuple[tuple[int, ...], list[int]]:
    """Insert members of S into P one at a time while any fits.

    Returns the extended path (same end vertices) and the vertices of S that
    could not be inserted.
    """
    _require_path(G, P)
    pending = bits(S) if isinstance(S, int) else sorted(set(S))
    if set(pending) & set(P):
        raise ValueError("S must be disjoint from P")
    path = tuple(P)
    if len(path) < 2:
        raise ValueError("P needs at least two vertices")
    progress = True
    while pending and progress:
        progress = False
        for y in pending:
            longer = insert_into_path(G, path, y)
            if longer is not None:
                path = longer
                pending.remove(y)
                progress = True
                break
    return path, pending


def extend_cycle_with_set(G: Digraph, C: Sequence[int], S: Sequence[int] | int) -> tuple[int, ...] | None:
    """A cycle whose vertex set is exactly V(C) together with S, or None."""
    _require_cycle(G, C)
    pending = bits(S) if isinstance(S, int) else sorted(set(S))
    if set(pending) & set(C):
        raise ValueError("S must be disjoint from C")
    cycle = tuple(C)
    progress = True
    while pending and progress:
        progress = False
        for y in pending:
            longer = insert_into_cycle(G, cycle, y, len(cycle) + 1)
            if longer is not None:
                cycle = longer
                pending.remove(y)
                progress = True
                break
    if not pending:
        return cycle
    target = mask_of(C) | mask_of(bits(S) if isinstance(S, int) else S)
    start = min(C)
    path = [start]
    if _extend(G, path, target & ~(1 << start), G.inn[start]):
        return tuple(path)
    return None


@dataclass
class Lemma35Report:
    statement_i: bool
    statement_ii: bool
    statement_iii: bool
    # k -> whether (iii) holds for that k; only k with x_k->y->x_{k+1} appear
    iii_by_k: dict[int, bool] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return self.statement_i and self.statement_ii and self.statement_iii


def check_lemma_35(G: Digraph, C: Sequence[int], y: int) -> Lemma35Report:
    """Evaluate the three structural statements for a bypass-free digraph.

    C is a cycle through every vertex but y. Indices k in the report are
    1-based positions on C, so x_k = C[k-1].
    """
    p = G.order
    _require_cycle(G, C)
    if len(C) != p - 1 or y in C or not 0 <= y < p:
        raise ValueError("C must cover every vertex except y")
    if find_hamiltonian_bypass(G) is not None:
        raise ValueError("digraph has a Hamiltonian bypass")
    m = len(C)
    x = lambda i: C[(i - 1) % m]  # noqa: E731

    st_i = all(
        G.od(y, (1 << x(i)) | (1 << x(i + 1))) <= 1 and G.id(y, (1 << x(i)) | (1 << x(i + 1))) <= 1
        for i in range(1, m + 1)
    )
    st_ii = 2 * G.od(y) <= p - 1 and 2 * G.id(y) <= p - 1 and G.d(y) <= p - 1
    by_k = {}
    for k in range(1, m + 1):
        if G.has_arc(x(k), y) and G.has_arc(y, x(k + 1)):
            by_k[k] = all(not G.has_arc(x(i + 1), x(i)) for i in range(1, m + 1) if i != k)
    return Lemma35Report(st_i, st_ii, all(by_k.values()), by_k)
