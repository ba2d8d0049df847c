import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digraphs, random_digraph, random_relabel
from hambypass import conditions as cond
from hambypass.core import add_arc, build, complete, relabel
from hambypass.families import FamilySpec, generate
from oracles import deficiency, degrees, matrix

T5 = generate(FamilySpec("t5"))
C3 = build(3, [(0, 1), (1, 2), (2, 0)])
K33 = generate(FamilySpec("kbip", (3, 3)))


def test_deficiency_examples():
    assert cond.meyniel_deficiency(T5) == cond.ALL_ADJACENT
    assert cond.format_deficiency(cond.meyniel_deficiency(T5)) == "all-adjacent"
    assert cond.meyniel_deficiency(K33) == 2
    assert cond.meyniel_deficiency(generate(FamilySpec("dpk", (5, 2)))) == 0
    for k in range(10):
        assert cond.satisfies_m(T5, k)


def test_deficiency_rejects_order_one():
    with pytest.raises(ValueError):
        cond.meyniel_deficiency(build(1, []))


def test_classic_examples():
    assert cond.classic_conditions(K33) == (True, True, True)
    assert cond.classic_conditions(T5) == (False, False, False)
    assert cond.classic_conditions(C3) == (False, False, False)


def test_extended_examples():
    assert cond.extended_conditions(complete(5)) == (True, True, True, True)
    assert cond.extended_conditions(T5) == (True, True, True, True)
    # K*_{2,2}: non-adjacent pairs share in-neighbours, d = 4 >= n-1 = 3, sums 8 >= 7
    K22 = generate(FamilySpec("kbip", (2, 2)))
    assert cond.bjgl_51(K22)


def test_manoussakis_needs_order_four():
    assert not cond.manoussakis_54(complete(3))
    rep = cond.condition_report(complete(3))
    assert rep.manoussakis_54 is False
    assert any("order >= 4" in n for n in rep.notes)


def test_report_lines():
    lines = cond.condition_report(T5).lines()
    assert lines[0] == "meyniel_deficiency = all-adjacent"
    assert "woodall = false" in lines
    assert "manoussakis_54 = true" in lines


# --- definitional oracles ---------------------------------------------------


def _oracle_conditions(A):
    n = len(A)
    od, idg, d = degrees(A)
    nonadj = [(x, y) for x in range(n) for y in range(n) if x != y and not A[x][y] and not A[y][x]]
    cin = lambda x, y: any(A[w][x] and A[w][y] for w in range(n))  # noqa: E731
    cout = lambda x, y: any(A[x][w] and A[y][w] for w in range(n))  # noqa: E731
    nw = all(2 * od[v] >= n and 2 * idg[v] >= n for v in range(n))
    gh = all(d[v] >= n for v in range(n))
    wd = all(od[x] + idg[y] >= n for x in range(n) for y in range(n) if x != y and not A[x][y])
    b51 = all(min(d[x], d[y]) >= n - 1 and d[x] + d[y] >= 2 * n - 1 for x, y in nonadj if cin(x, y))
    b52 = all(
        od[x] + idg[y] >= n and idg[x] + od[y] >= n for x, y in nonadj if cin(x, y) or cout(x, y)
    )
    b53 = all(
        d[x] + d[y] >= 2 * n - 1 and od[x] + idg[y] >= n - 1 and idg[x] + od[y] >= n - 1
        for x, y in nonadj
        if cin(x, y) or cout(x, y)
    )
    m54 = n >= 4 and all(
        (A[x][z] or d[x] + d[y] + od[x] + idg[z] >= 3 * n - 2) and (A[z][x] or d[x] + d[y] + idg[x] + od[z] >= 3 * n - 2)
        for x, y in nonadj
        for z in range(n)
        if z not in (x, y)
    )
    return (nw, gh, wd), (b51, b52, b53, m54)


def test_predicates_match_definitions():
    rng = random.Random(21)
    for _ in range(1500):
        p = rng.randint(2, 7)
        G = random_digraph(rng, p, rng.choice([0.4, 0.6, 0.8, 0.9]))
        classic, extended = _oracle_conditions(matrix(G))
        assert cond.classic_conditions(G) == classic
        assert cond.extended_conditions(G) == extended
        assert cond.meyniel_deficiency(G) == deficiency(matrix(G))


@given(digraphs(min_order=2, max_order=7), st.data())
def test_adding_arcs_never_lowers_deficiency(G, data):
    p = G.order
    u = data.draw(st.integers(0, p - 1))
    v = data.draw(st.integers(0, p - 1).filter(lambda x: x != u))
    assert cond.meyniel_deficiency(add_arc(G, u, v)) >= cond.meyniel_deficiency(G)


@given(digraphs(min_order=2, max_order=7))
def test_implications(G):
    dfc = cond.meyniel_deficiency(G)
    for k in range(-3, 4):
        if cond.satisfies_m(G, k + 1):
            assert cond.satisfies_m(G, k)
    nw, gh, wd = cond.classic_conditions(G)
    if wd or gh:
        assert dfc >= 2
    if nw:
        assert gh


@given(digraphs(min_order=2, max_order=7), st.randoms(use_true_random=False))
def test_relabel_invariance(G, r):
    H = relabel(G, random_relabel(r, G.order))
    assert cond.condition_report(G) == cond.condition_report(H)
