"""Degree-condition predicates and the Meyniel-type deficiency margin.

None of the predicates here include strong connectivity; claim checkers
combine them with the connectivity module explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Digraph

#: Deficiency of a digraph in which every pair of vertices is adjacent.
ALL_ADJACENT = math.inf


def non_adjacent_pairs(G: Digraph) -> list[tuple[int, int]]:
    p = G.order
    return [(x, y) for x in range(p) for y in range(x + 1, p) if not G.adjacent(x, y)]


def meyniel_deficiency(G: Digraph) -> int | float:
    """min d(x)+d(y) - (2p-2) over non-adjacent pairs, or ALL_ADJACENT.

    G satisfies (M_k) exactly when the result is >= k.
    """
    p = G.order
    if p < 2:
        raise ValueError("deficiency needs order >= 2")
    deg = [G.d(v) for v in range(p)]
    best = ALL_ADJACENT
    for x, y in non_adjacent_pairs(G):
        s = deg[x] + deg[y] - (2 * p - 2)
        if s < best:
            best = s
    return best


def satisfies_m(G: Digraph, k: int) -> bool:
    return meyniel_deficiency(G) >= k


def format_deficiency(value: int | float) -> str:
    return "all-adjacent" if value == ALL_ADJACENT else str(int(value))


def nash_williams(G: Digraph) -> bool:
    p = G.order
    return all(2 * G.od(v) >= p and 2 * G.id(v) >= p for v in range(p))


def ghouila_houri(G: Digraph) -> bool:
    p = G.order
    return all(G.d(v) >= p for v in range(p))


def woodall(G: Digraph) -> bool:
    """od(x) + id(y) >= p for every ordered pair x != y without the arc x->y."""
    p = G.order
    od = [G.od(v) for v in range(p)]
    idg = [G.id(v) for v in range(p)]
    for x in range(p):
        for y in range(p):
            if x != y and not G.has_arc(x, y) and od[x] + idg[y] < p:
                return False
    return True


def classic_conditions(G: Digraph) -> tuple[bool, bool, bool]:
    if G.order < 2:
        raise ValueError("classic conditions need order >= 2")
    return nash_williams(G), ghouila_houri(G), woodall(G)


def _common_in(G: Digraph, x: int, y: int) -> bool:
    return bool(G.inn[x] & G.inn[y])


def _common_out(G: Digraph, x: int, y: int) -> bool:
    return bool(G.out[x] & G.out[y])


def bjgl_51(G: Digraph) -> bool:
    """min{d(x),d(y)} >= n-1 and d(x)+d(y) >= 2n-1 for non-adjacent x,y with a common in-neighbour."""
    n = G.order
    for x, y in non_adjacent_pairs(G):
        if not _common_in(G, x, y):
            continue
        dx, dy = G.d(x), G.d(y)
        if min(dx, dy) < n - 1 or dx + dy < 2 * n - 1:
            return False
    return True


def _cross_sums(G: Digraph, x: int, y: int) -> int:
    return min(G.od(x) + G.id(y), G.id(x) + G.od(y))


def bjgl_52(G: Digraph) -> bool:
    """min{od(x)+id(y), id(x)+od(y)} >= n for non-adjacent pairs with a common out- or in-neighbour."""
    n = G.order
    for x, y in non_adjacent_pairs(G):
        if (_common_out(G, x, y) or _common_in(G, x, y)) and _cross_sums(G, x, y) < n:
            return False
    return True


def bgy_53(G: Digraph) -> bool:
    n = G.order
    for x, y in non_adjacent_pairs(G):
        if not (_common_out(G, x, y) or _common_in(G, x, y)):
            continue
        if G.d(x) + G.d(y) < 2 * n - 1 or _cross_sums(G, x, y) < n - 1:
            return False
    return True


def manoussakis_54(G: Digraph) -> bool:
    """Triple condition over ordered non-adjacent x, y and every third vertex z.

    Orders below 4 never satisfy it (the condition is only stated for n >= 4).
    """
    n = G.order
    if n < 4:
        return False
    od = [G.od(v) for v in range(n)]
    idg = [G.id(v) for v in range(n)]
    need = 3 * n - 2
    for a, b in non_adjacent_pairs(G):
        for x, y in ((a, b), (b, a)):
            base = od[x] + idg[x] + od[y] + idg[y]
            for z in range(n):
                if z == x or z == y:
                    continue
                if not G.has_arc(x, z) and base + od[x] + idg[z] < need:
                    return False
                if not G.has_arc(z, x) and base + idg[x] + od[z] < need:
                    return False
    return True


def extended_conditions(G: Digraph) -> tuple[bool, bool, bool, bool]:
    if G.order < 2:
        raise ValueError("extended conditions need order >= 2")
    return bjgl_51(G), bjgl_52(G), bgy_53(G), manoussakis_54(G)


def min_out_degree(G: Digraph) -> int:
    return min(G.od(v) for v in range(G.order))


def min_in_degree(G: Digraph) -> int:
    return min(G.id(v) for v in range(G.order))


def min_degree(G: Digraph) -> int:
    return min(G.d(v) for v in range(G.order))


@dataclass(frozen=True)
class ConditionReport:
    meyniel_deficiency: int | float
    nash_williams: bool
    ghouila_houri: bool
    woodall: bool
    bjgl_51: bool
    bjgl_52: bool
    bgy_53: bool
    manoussakis_54: bool
    notes: tuple[str, ...] = ()

    def lines(self) -> list[str]:
        out = [f"meyniel_deficiency = {format_deficiency(self.meyniel_deficiency)}"]
        for name in ("nash_williams", "ghouila_houri", "woodall", "bjgl_51", "bjgl_52", "bgy_53", "manoussakis_54"):
            out.append(f"{name} = {str(getattr(self, name)).lower()}")
        out.extend(f"note = {n}" for n in self.notes)
        return out


def condition_report(G: Digraph) -> ConditionReport:
    notes = ["bjgl_52 uses min{od(x)+id(y), id(x)+od(y)} >= n for every qualifying pair"]
    if G.order < 4:
        notes.append("manoussakis_54 requires order >= 4; reported false")
    nw, gh, wd = classic_conditions(G)
    e1, e2, e3, e4 = extended_conditions(G)
    return ConditionReport(meyniel_deficiency(G), nw, gh, wd, e1, e2, e3, e4, tuple(notes))
