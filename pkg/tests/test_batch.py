import random

import numpy as np

from conftest import random_digraph
from hambypass import batch
from hambypass import conditions as cond
from hambypass.connectivity import is_k_strong, is_strong
from oracles import has_bypass


def _adj(graphs):
    return np.array([G.adjacency_matrix() for G in graphs], dtype=bool)


def test_index_roundtrip():
    rng = random.Random(51)
    for p in range(2, 7):
        for _ in range(50):
            idx = rng.randrange(1 << (p * (p - 1)))
            G = batch.digraph_from_index(p, idx)
            assert batch.index_of(G) == idx
    assert batch.digraph_from_index(3, 0).arc_count() == 0
    assert batch.digraph_from_index(3, 63).arc_count() == 6
    # bit 0 is the first off-diagonal position (0, 1)
    assert list(batch.digraph_from_index(3, 1).arcs()) == [(0, 1)]


def test_adjacency_block_matches_scalar():
    adj = batch.adjacency_block(4, 100, 300)
    for i, a in enumerate(adj):
        assert batch.digraph_from_adjacency(a) == batch.digraph_from_index(4, 100 + i)


def test_vectorized_predicates_match_scalar():
    rng = random.Random(52)
    for p in (2, 3, 4, 5, 6, 7):
        graphs = [random_digraph(rng, p, q) for q in (0.3, 0.6, 0.8, 0.95) for _ in range(100)]
        f = batch.Features(_adj(graphs))
        checks = {
            "deficiency": (f.deficiency(), cond.meyniel_deficiency),
            "strong": (f.strong(), is_strong),
            "two_strong": (batch.two_strong(f.adj), lambda G: is_k_strong(G, 2)),
            "nash_williams": (batch.nash_williams(f), cond.nash_williams),
            "ghouila_houri": (batch.ghouila_houri(f), cond.ghouila_houri),
            "woodall": (batch.woodall(f), cond.woodall),
            "bjgl_51": (batch.bjgl_51(f), cond.bjgl_51),
            "bjgl_52": (batch.bjgl_52(f), cond.bjgl_52),
            "bgy_53": (batch.bgy_53(f), cond.bgy_53),
            "manoussakis_54": (batch.manoussakis_54(f), cond.manoussakis_54),
        }
        for name, (vec, scalar) in checks.items():
            for G, got in zip(graphs, vec):
                assert got == scalar(G), (name, G)


def test_pattern_containment_matches_oracle():
    rng = random.Random(53)
    for p in (3, 4, 5, 6):
        pats = batch.bypass_patterns(p)
        graphs = [random_digraph(rng, p, q) for q in (0.3, 0.5, 0.7) for _ in range(80)]
        idx = np.array([batch.index_of(G) for G in graphs], dtype=np.int64)
        got = batch.has_pattern(idx, pats)
        for G, g in zip(graphs, got):
            assert g == has_bypass(G.adjacency_matrix())
