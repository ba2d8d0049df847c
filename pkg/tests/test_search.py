import random
from itertools import permutations

import pytest
from hypothesis import given

from conftest import digraphs, random_digraph
from hambypass.batch import digraph_from_index
from hambypass.core import build, complete, remove_arc
from hambypass.families import FamilySpec, d0, generate
from hambypass.search import (
    Witness,
    WitnessKind,
    cycle_spectrum,
    find_cycle,
    find_dpn,
    find_hamiltonian_bypass,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_pancyclic,
    longest_cycle_vertex_sets,
    validate_witness,
)
from oracles import (
    cycle_lengths,
    has_bypass,
    has_bypass_perm,
    has_dpn,
    has_ham_cycle,
    has_ham_path,
    matrix,
    valid_witness,
)

C3 = build(3, [(0, 1), (1, 2), (2, 0)])
T5 = generate(FamilySpec("t5"))


def _check(G, w):
    assert validate_witness(G, w)
    assert valid_witness(matrix(G), w.kind.value, w.sequence, w.second, w.n)


def test_hamcycle_examples():
    assert find_hamiltonian_cycle(C3).sequence == (0, 1, 2)
    for p in range(3, 9):
        for k in range(1, p - 1):
            assert find_hamiltonian_cycle(generate(FamilySpec("dpk", (p, k)))) is None
    w = find_hamiltonian_cycle(generate(FamilySpec("kbip", (3, 3))))
    _check(generate(FamilySpec("kbip", (3, 3))), w)
    assert [v < 3 for v in w.sequence] == [True, False] * 3


def test_bypass_examples():
    w = find_hamiltonian_bypass(complete(3))
    assert w.sequence == (0, 1, 2)
    assert find_hamiltonian_bypass(T5) is None
    assert find_hamiltonian_bypass(C3) is None
    assert find_hamiltonian_bypass(generate(d0(5))) is None
    with pytest.raises(ValueError):
        find_hamiltonian_bypass(complete(2))


def test_dpn_examples():
    # K*_{4,4} without y1 -> x1; x_i = i-1, y_i = i+3
    G = remove_arc(generate(FamilySpec("kbip", (4, 4))), 4, 0)
    w = find_dpn(G, 3)
    _check(G, w)
    # the construction from the text is also a valid witness
    text = Witness(WitnessKind.DPN, (0, 4, 1), (0, 5, 2, 6, 3, 7, 1), 3)
    _check(G, text)
    for p in range(4, 8):
        Cp = build(p, [(i, (i + 1) % p) for i in range(p)])
        for n in range(2, p - 1):
            assert find_dpn(Cp, n) is None
    _check(complete(4), find_dpn(complete(4), 3))


def test_dpn_range():
    with pytest.raises(ValueError):
        find_dpn(complete(5), 1)
    with pytest.raises(ValueError):
        find_dpn(complete(5), 6)


def test_spectrum_examples():
    assert cycle_spectrum(complete(4)) == {2, 3, 4}
    assert cycle_spectrum(generate(FamilySpec("kbip", (3, 3)))) == {2, 4, 6}
    assert is_pancyclic(complete(5))
    assert not is_pancyclic(generate(FamilySpec("kbip", (3, 3))))


def test_searchers_match_oracles_exhaustively_p4():
    for idx in range(1 << 12):
        G = digraph_from_index(4, idx)
        A = matrix(G)
        assert (find_hamiltonian_path(G) is not None) == has_ham_path(A)
        assert (find_hamiltonian_cycle(G) is not None) == has_ham_cycle(A)
        assert (find_hamiltonian_bypass(G) is not None) == has_bypass_perm(A)
        assert (find_dpn(G, 3) is not None) == has_dpn(A, 3)


def test_searchers_match_oracles_random():
    rng = random.Random(31)
    for _ in range(1500):
        p = rng.randint(3, 7)
        G = random_digraph(rng, p, rng.choice([0.3, 0.5, 0.7]))
        A = matrix(G)
        for w, truth in (
            (find_hamiltonian_path(G), has_ham_path(A)),
            (find_hamiltonian_cycle(G), has_ham_cycle(A)),
            (find_hamiltonian_bypass(G), has_bypass(A)),
        ):
            assert (w is not None) == truth
            if w is not None:
                _check(G, w)
        if p <= 6:
            for n in range(2, p + 1):
                w = find_dpn(G, n)
                assert (w is not None) == has_dpn(A, n)
                if w is not None:
                    _check(G, w)
        assert cycle_spectrum(G) == cycle_lengths(A)


def test_path_with_fixed_ends():
    G = complete(5)
    w = find_hamiltonian_path(G, start=3, end=1)
    assert w.sequence[0] == 3 and w.sequence[-1] == 1
    assert find_hamiltonian_path(build(3, [(0, 1), (1, 2)]), start=2) is None


@given(digraphs(min_order=3, max_order=7))
def test_bypass_witness_is_lexicographically_least_and_deterministic(G):
    w = find_hamiltonian_bypass(G)
    assert w == find_hamiltonian_bypass(G)
    if w is not None:
        A = matrix(G)
        least = next(
            s for s in permutations(range(G.order)) if A[s[0]][s[-1]] and all(A[a][b] for a, b in zip(s, s[1:]))
        )
        assert w.sequence == least


def test_find_cycle_lengths():
    G = complete(6)
    for k in range(2, 7):
        w = find_cycle(G, k, through=5)
        assert len(w.sequence) == k and 5 in w.sequence
        _check(G, w)


def test_longest_cycle_sets():
    G = generate(d0(5))
    m, sets = longest_cycle_vertex_sets(G)
    assert m == 4
    # every 4-cycle avoids exactly one vertex of A
    assert sorted(sets) == sorted(0b11111 & ~(1 << a) for a in range(3))


def test_validate_witness_rejects_bad():
    G = complete(4)
    assert not validate_witness(G, Witness(WitnessKind.HAM_CYCLE, (0, 1, 2)))
    assert not validate_witness(build(3, [(0, 1), (1, 2)]), Witness(WitnessKind.HAM_BYPASS, (0, 1, 2)))
    assert not validate_witness(G, Witness(WitnessKind.DPN, (0, 1, 2), (0, 1, 3, 2), 3))
