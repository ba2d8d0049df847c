"""Vectorized hypothesis evaluation over blocks of digraphs.

A block is a boolean array ``adj`` of shape (N, p, p). Labeled digraphs on p
vertices are indexed by integers whose bit i is the i-th off-diagonal
position (u, v) in row-major order, so index 0 is the empty digraph and
index 2^(p(p-1)) - 1 the complete one.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import Digraph


@lru_cache(maxsize=None)
def arc_positions(p: int) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u in range(p) for v in range(p) if u != v)


def digraph_from_index(p: int, index: int) -> Digraph:
    out = [0] * p
    for i, (u, v) in enumerate(arc_positions(p)):
        if index >> i & 1:
            out[u] |= 1 << v
    return Digraph(p, out)


def index_of(G: Digraph) -> int:
    idx = 0
    for i, (u, v) in enumerate(arc_positions(G.order)):
        if G.has_arc(u, v):
            idx |= 1 << i
    return idx


def adjacency_block(p: int, start: int, stop: int) -> np.ndarray:
    """Adjacency arrays for the digraphs with indices in [start, stop)."""
    pos = arc_positions(p)
    idx = np.arange(start, stop, dtype=np.int64)
    flags = ((idx[:, None] >> np.arange(len(pos), dtype=np.int64)) & 1).astype(bool)
    adj = np.zeros((len(idx), p, p), dtype=bool)
    us = np.array([u for u, _ in pos], dtype=np.intp)
    vs = np.array([v for _, v in pos], dtype=np.intp)
    adj[:, us, vs] = flags
    return adj


def adjacency_from_flags(p: int, flags: np.ndarray) -> np.ndarray:
    pos = arc_positions(p)
    adj = np.zeros((flags.shape[0], p, p), dtype=bool)
    us = np.array([u for u, _ in pos], dtype=np.intp)
    vs = np.array([v for _, v in pos], dtype=np.intp)
    adj[:, us, vs] = flags.astype(bool)
    return adj


def digraph_from_adjacency(a: np.ndarray) -> Digraph:
    p = a.shape[0]
    weights = 1 << np.arange(p, dtype=np.int64)
    return Digraph(p, [int(x) for x in (a.astype(np.int64) @ weights)])


class Features:
    """Degree data and pairwise relations shared by all predicates."""

    def __init__(self, adj: np.ndarray):
        self.adj = adj
        self.n, self.p = adj.shape[0], adj.shape[1]
        self.od = adj.sum(axis=2, dtype=np.int16)
        self.id = adj.sum(axis=1, dtype=np.int16)
        self.deg = self.od + self.id
        sym = adj | adj.transpose(0, 2, 1)
        offdiag = ~np.eye(self.p, dtype=bool)
        self.nonadj = ~sym & offdiag
        self._strong = None

    def deficiency(self) -> np.ndarray:
        """Meyniel deficiency per digraph, +inf where every pair is adjacent."""
        p = self.p
        pair = (self.deg[:, :, None] + self.deg[:, None, :]).astype(np.float64) - (2 * p - 2)
        pair[~self.nonadj] = np.inf
        return pair.reshape(self.n, -1).min(axis=1)

    def strong(self) -> np.ndarray:
        if self._strong is None:
            self._strong = strongly_connected(self.adj)
        return self._strong

    def common_in(self) -> np.ndarray:
        a = self.adj.astype(np.int16)
        return np.einsum("nwx,nwy->nxy", a, a) > 0

    def common_out(self) -> np.ndarray:
        a = self.adj.astype(np.int16)
        return np.einsum("nxw,nyw->nxy", a, a) > 0


def strongly_connected(adj: np.ndarray) -> np.ndarray:
    n, p = adj.shape[0], adj.shape[1]
    if p == 1:
        return np.ones(n, dtype=bool)
    reach = adj | np.eye(p, dtype=bool)
    r = reach.astype(np.uint8)
    steps = 1
    while steps < p:
        r = (np.matmul(r, r) > 0).astype(np.uint8)
        steps *= 2
    return r.reshape(n, -1).all(axis=1)


def two_strong(adj: np.ndarray) -> np.ndarray:
    p = adj.shape[1]
    if p < 3:
        return np.zeros(adj.shape[0], dtype=bool)
    ok = strongly_connected(adj)
    for v in range(p):
        keep = [u for u in range(p) if u != v]
        sub = adj[:, keep][:, :, keep]
        ok &= strongly_connected(sub)
    return ok


def nash_williams(f: Features) -> np.ndarray:
    return ((2 * f.od >= f.p) & (2 * f.id >= f.p)).all(axis=1)


def ghouila_houri(f: Features) -> np.ndarray:
    return (f.deg >= f.p).all(axis=1)


def woodall(f: Features) -> np.ndarray:
    p = f.p
    no_arc = ~f.adj & ~np.eye(p, dtype=bool)
    cross = f.od[:, :, None] + f.id[:, None, :]
    return ~((cross < p) & no_arc).reshape(f.n, -1).any(axis=1)


def bjgl_51(f: Features) -> np.ndarray:
    n = f.p
    pairs = f.nonadj & f.common_in()
    dmin = np.minimum(f.deg[:, :, None], f.deg[:, None, :])
    dsum = f.deg[:, :, None] + f.deg[:, None, :]
    bad = pairs & ((dmin < n - 1) | (dsum < 2 * n - 1))
    return ~bad.reshape(f.n, -1).any(axis=1)


def _cross_min(f: Features) -> np.ndarray:
    a = f.od[:, :, None] + f.id[:, None, :]
    b = f.id[:, :, None] + f.od[:, None, :]
    return np.minimum(a, b)


def bjgl_52(f: Features) -> np.ndarray:
    pairs = f.nonadj & (f.common_in() | f.common_out())
    bad = pairs & (_cross_min(f) < f.p)
    return ~bad.reshape(f.n, -1).any(axis=1)


def bgy_53(f: Features) -> np.ndarray:
    n = f.p
    pairs = f.nonadj & (f.common_in() | f.common_out())
    dsum = f.deg[:, :, None] + f.deg[:, None, :]
    bad = pairs & ((dsum < 2 * n - 1) | (_cross_min(f) < n - 1))
    return ~bad.reshape(f.n, -1).any(axis=1)


def manoussakis_54(f: Features) -> np.ndarray:
    n = f.p
    if n < 4:
        return np.zeros(f.n, dtype=bool)
    need = 3 * n - 2
    eye = np.eye(n, dtype=bool)
    # [N, x, y, z]
    dsum = (f.deg[:, :, None] + f.deg[:, None, :])[:, :, :, None]
    distinct = ~eye[:, :, None] & ~eye[:, None, :] & ~eye[None, :, :]
    pairs = f.nonadj[:, :, :, None] & distinct[None]
    no_xz = ~f.adj[:, :, None, :]
    no_zx = ~f.adj.transpose(0, 2, 1)[:, :, None, :]
    a_val = dsum + f.od[:, :, None, None] + f.id[:, None, None, :]
    b_val = dsum + f.id[:, :, None, None] + f.od[:, None, None, :]
    bad = pairs & ((no_xz & (a_val < need)) | (no_zx & (b_val < need)))
    return ~bad.reshape(f.n, -1).any(axis=1)


def bypass_patterns(p: int) -> np.ndarray:
    """Index masks of every Hamiltonian bypass pattern on p labeled vertices."""
    from itertools import permutations

    pos = {uv: i for i, uv in enumerate(arc_positions(p))}
    masks = set()
    for perm in permutations(range(p)):
        m = 1 << pos[(perm[0], perm[-1])]
        for a, b in zip(perm, perm[1:]):
            m |= 1 << pos[(a, b)]
        masks.add(m)
    return np.array(sorted(masks), dtype=np.int64)


def has_pattern(indices: np.ndarray, patterns: np.ndarray, chunk: int = 4096) -> np.ndarray:
    """True where some pattern's arcs are all present in the indexed digraph."""
    out = np.zeros(len(indices), dtype=bool)
    for s in range(0, len(indices), chunk):
        part = indices[s : s + chunk, None]
        out[s : s + chunk] = ((part & patterns[None, :]) == patterns[None, :]).any(axis=1)
    return out
