import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digraphs, random_digraph, random_relabel
from hambypass.core import (
    CANONICAL_MAX_ORDER,
    CanonicalForm,
    Digraph,
    add_arc,
    build,
    canonical_form,
    complete,
    converse,
    degree,
    find_isomorphism,
    induced,
    is_isomorphic,
    mask_of,
    relabel,
    remove_arc,
)
from hambypass.families import FamilySpec, generate
from oracles import brute_canonical, brute_isomorphic, matrix

T5_ARCS = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4), (4, 1), (4, 3), (0, 2), (1, 3)]


def test_build_c3():
    G = build(3, [(0, 1), (1, 2), (2, 0)])
    assert G.arc_count() == 3
    assert sorted(G.arcs()) == [(0, 1), (1, 2), (2, 0)]


def test_build_t5_degree_facts():
    G = build(5, T5_ARCS)
    assert G.arc_count() == 10
    assert G.id(0) == 1 and G.od(3) == 1


def test_duplicate_arcs_are_idempotent():
    assert build(2, [(0, 1), (0, 1)]).arc_count() == 1


@pytest.mark.parametrize("arcs", [[(1, 1)], [(0, 3)], [(-1, 0)]])
def test_build_rejects_bad_arcs(arcs):
    with pytest.raises(ValueError):
        build(3, arcs)


@pytest.mark.parametrize("order", [0, 65])
def test_build_rejects_order(order):
    with pytest.raises(ValueError):
        build(order, [])


def test_degree_examples():
    K3 = complete(3)
    assert all(degree(K3, v) == (2, 2, 4) for v in range(3))
    assert degree(build(5, T5_ARCS), 3) == (1, 3, 4)
    C3 = build(3, [(0, 1), (1, 2), (2, 0)])
    assert degree(C3, 0, mask_of([1])) == (1, 0, 1)


def test_converse_examples():
    C3 = build(3, [(0, 1), (1, 2), (2, 0)])
    R = converse(C3)
    assert sorted(R.arcs()) == [(0, 2), (1, 0), (2, 1)]
    assert is_isomorphic(R, C3)
    G = generate(FamilySpec("kbipminus", (2,)))
    assert converse(G).arc_count() == 7


def test_induced_examples():
    assert induced(complete(5), mask_of([0, 2, 4])) == complete(3)
    D42 = generate(FamilySpec("dpk", (6, 2)))  # K*4 on {0..3}, K*3 on {3,4,5}
    assert induced(D42, mask_of(range(4))) == complete(4)
    C4 = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    H = induced(C4, mask_of([0, 2]))
    assert H.order == 2 and H.arc_count() == 0
    with pytest.raises(ValueError):
        induced(C4, 0)


def test_canonical_examples():
    C3 = build(3, [(0, 1), (1, 2), (2, 0)])
    assert canonical_form(C3) == canonical_form(relabel(C3, [2, 0, 1]))
    P3 = build(3, [(0, 1), (1, 2)])
    assert canonical_form(C3) != canonical_form(P3)
    # D_{4,1}: K*4 glued to K*2 at vertex 3 versus at vertex 0
    a = build(5, [(u, v) for u in range(4) for v in range(4) if u != v] + [(3, 4), (4, 3)])
    b = build(5, [(u, v) for u in range(4) for v in range(4) if u != v] + [(0, 4), (4, 0)])
    assert canonical_form(a) == canonical_form(b)
    assert brute_canonical(matrix(a)) == brute_canonical(matrix(b))


def test_canonical_rejects_large_order():
    with pytest.raises(ValueError, match=str(CANONICAL_MAX_ORDER)):
        canonical_form(complete(CANONICAL_MAX_ORDER + 1))


def test_canonical_matches_brute_force():
    rng = random.Random(7)
    for _ in range(300):
        p = rng.randint(1, 6)
        G = random_digraph(rng, p, rng.choice([0.2, 0.5, 0.8]))
        assert canonical_form(G).bits == brute_canonical(matrix(G))


def test_canonical_form_roundtrip():
    rng = random.Random(8)
    for _ in range(100):
        G = random_digraph(rng, rng.randint(1, 8))
        cf = canonical_form(G)
        H = cf.to_digraph()
        assert canonical_form(H) == cf
        assert is_isomorphic(G, H)
        assert str(cf).startswith(f"{G.order}:")


@given(digraphs(max_order=8), st.randoms(use_true_random=False))
def test_canonical_relabel_invariant(G, r):
    assert canonical_form(relabel(G, random_relabel(r, G.order))) == canonical_form(G)


def test_canonical_equality_iff_isomorphic():
    rng = random.Random(11)
    for _ in range(300):
        p = rng.randint(2, 6)
        G = random_digraph(rng, p)
        # half of the pairs are relabelings with one arc toggled
        H = relabel(G, random_relabel(rng, p))
        if rng.random() < 0.5:
            u, v = rng.sample(range(p), 2)
            H = remove_arc(H, u, v) if H.has_arc(u, v) else add_arc(H, u, v)
        same = canonical_form(G) == canonical_form(H)
        assert same == brute_isomorphic(matrix(G), matrix(H))


def test_find_isomorphism_map_is_valid():
    rng = random.Random(12)
    for _ in range(200):
        p = rng.randint(1, 8)
        G = random_digraph(rng, p)
        perm = random_relabel(rng, p)
        H = relabel(G, perm)
        m = find_isomorphism(G, H)
        assert m is not None and relabel(G, m) == H
    assert find_isomorphism(complete(3), build(3, [(0, 1)])) is None
    assert find_isomorphism(complete(3), complete(4)) is None


def test_canonical_slowest_cases_finish():
    # highly symmetric inputs are the expensive ones for branch and bound
    C10 = build(10, [(i, (i + 1) % 10) for i in range(10)])
    assert canonical_form(C10) == canonical_form(relabel(C10, [3, 1, 4, 0, 5, 9, 2, 6, 8, 7]))
    assert canonical_form(Digraph(10, [0] * 10)).bits == "0" * 90


@given(digraphs(max_order=7))
def test_degree_sums(G):
    p = G.order
    assert sum(G.od(v) for v in range(p)) == sum(G.id(v) for v in range(p)) == G.arc_count()
    assert sum(G.d(v) for v in range(p)) == 2 * G.arc_count()


@given(digraphs(min_order=2, max_order=7), st.data())
def test_degree_additive_over_partition(G, data):
    p = G.order
    A = data.draw(st.integers(0, (1 << p) - 1))
    full = (1 << p) - 1
    for v in range(p):
        a, b = degree(G, v, A), degree(G, v, full & ~A)
        assert tuple(x + y for x, y in zip(a, b)) == degree(G, v)


@given(digraphs(max_order=7))
def test_converse_involution(G):
    assert converse(converse(G)) == G


@given(digraphs(max_order=6), digraphs(max_order=6))
def test_converse_preserves_isomorphism_classes(G, H):
    assert (canonical_form(G) == canonical_form(H)) == (canonical_form(converse(G)) == canonical_form(converse(H)))


def test_relabel_direction():
    G = build(3, [(0, 1)])
    assert sorted(relabel(G, [2, 0, 1]).arcs()) == [(2, 0)]


def test_digraph_is_hashable_and_immutable():
    G = complete(3)
    assert len({G, complete(3)}) == 1
    with pytest.raises(AttributeError):
        G.order = 4


def test_canonical_form_ordering():
    assert CanonicalForm(3, "000001") < CanonicalForm(3, "000011")


def test_all_relabelings_of_order_four_share_form():
    rng = random.Random(3)
    G = random_digraph(rng, 4)
    forms = {canonical_form(relabel(G, list(perm))) for perm in permutations(range(4))}
    assert len(forms) == 1
