import random

import pytest
from hypothesis import given

from conftest import digraphs, random_digraph
from hambypass.connectivity import is_k_strong, is_strong, strong_components_ordered
from hambypass.core import bits, build, complete, converse, mask_of
from hambypass.families import FamilySpec, generate
from oracles import k_strong, matrix, scc_partition, strong

C3 = build(3, [(0, 1), (1, 2), (2, 0)])


def _valid_order(G, comps):
    where = {v: i for i, c in enumerate(comps) for v in bits(c)}
    return all(where[u] <= where[v] for u, v in G.arcs())


def test_c3_single_component():
    assert strong_components_ordered(C3).as_lists() == [[0, 1, 2]]


def test_two_blocks_ordered_forward():
    G = build(4, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)])
    assert strong_components_ordered(G).as_lists() == [[0, 1], [2, 3]]
    # relabel so the sink block holds the smaller ids
    H = build(4, [(0, 1), (1, 0), (2, 3), (3, 2), (2, 1)])
    assert strong_components_ordered(H).as_lists() == [[2, 3], [0, 1]]


def test_dpk_is_strong():
    assert len(strong_components_ordered(generate(FamilySpec("dpk", (6, 2))))) == 1


def test_k_strong_examples():
    T5 = generate(FamilySpec("t5"))
    assert is_k_strong(T5, 1) and not is_k_strong(T5, 2)
    assert is_k_strong(complete(4), 3)
    for p in range(4, 8):
        assert not is_k_strong(generate(FamilySpec("dpk", (p, 2))), 2)


def test_k_strong_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        is_k_strong(C3, 0)


def test_small_orders():
    G = build(1, [])
    # one vertex is strong, but k-strong needs at least k+1 vertices
    assert is_strong(G) and not is_k_strong(G, 1)
    assert not is_strong(build(2, [(0, 1)]))


def test_components_match_oracle():
    rng = random.Random(5)
    for _ in range(400):
        p = rng.randint(1, 8)
        G = random_digraph(rng, p, rng.choice([0.15, 0.3, 0.5]))
        comps = strong_components_ordered(G).components
        assert {frozenset(bits(c)) for c in comps} == scc_partition(matrix(G))
        assert _valid_order(G, comps)
        assert is_strong(G) == strong(matrix(G))
        for k in (1, 2, 3):
            assert is_k_strong(G, k) == k_strong(matrix(G), k)


@given(digraphs(max_order=7))
def test_decomposition_partitions_and_each_part_strong(G):
    comps = strong_components_ordered(G).components
    total = 0
    for c in comps:
        assert total & c == 0
        total |= c
        assert is_strong(G, c)
    assert total == G.all_vertices
    assert _valid_order(G, comps)


@given(digraphs(max_order=7))
def test_k_strong_monotone_and_degree_bound(G):
    for k in (2, 3):
        if is_k_strong(G, k):
            assert is_k_strong(G, k - 1)
            assert min(min(G.od(v), G.id(v)) for v in range(G.order)) >= k
    if G.order >= 2:
        assert is_k_strong(G, 1) == (len(strong_components_ordered(G)) == 1)


@given(digraphs(max_order=7))
def test_converse_reverses_component_order(G):
    # the reversed order of G's components is a valid order for the converse
    comps = strong_components_ordered(G).components
    R = converse(G)
    assert set(strong_components_ordered(R).components) == set(comps)
    assert _valid_order(R, tuple(reversed(comps)))


def test_within_restricts():
    G = build(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 2)])
    assert is_strong(G, mask_of([0, 1, 2]))
    assert not is_strong(G, mask_of([0, 1]))
    assert strong_components_ordered(G, mask_of([0, 1, 3])).as_lists() == [[0], [1], [3]]
