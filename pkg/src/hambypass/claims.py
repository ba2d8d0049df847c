"""Per-digraph theorem checks.

Each claim binds a hypothesis, a conclusion and an exception recognizer.
:func:`check_claim` evaluates them in that order and returns exactly one
:class:`Verdict`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from . import conditions as cond
from .connectivity import is_k_strong, is_strong, strong_components_ordered
from .core import Digraph, bits, induced
from .families import FamilyLabel, FamilySpec, phi_label, recognize_as, recognize_d0, recognize_exception
from .search import (
    SEARCH_MAX_ORDER,
    Witness,
    cycle_spectrum,
    find_cycle,
    find_dpn,
    find_hamiltonian_bypass,
    find_hamiltonian_cycle,
    longest_cycle_vertex_sets,
)


class ClaimId(str, Enum):
    MEYNIEL_1_5 = "Meyniel_1_5"
    THM_1_9 = "Thm_1_9_I_III_IV"
    THM_1_10 = "Thm_1_10"
    THM_1_12 = "Thm_1_12"
    THM_1_16 = "Thm_1_16"
    THM_1_18 = "Thm_1_18"
    THM_1_19 = "Thm_1_19"
    COR_1 = "Cor_1"
    COR_2 = "Cor_2"
    COR_3 = "Cor_3"
    THM_5_5 = "Thm_5_5"
    THM_5_6 = "Thm_5_6"
    THM_5_7 = "Thm_5_7"

    @classmethod
    def parse(cls, text: str) -> "ClaimId":
        for c in cls:
            if c.value.lower() == text.lower() or c.name.lower() == text.lower():
                return c
        if text.lower() == "thm_1_9":
            return cls.THM_1_9
        raise ValueError(f"unknown claim {text!r}; choose from {', '.join(c.value for c in cls)}")


class Outcome(str, Enum):
    HYPOTHESIS_NOT_MET = "hypothesis_not_met"
    HOLDS = "holds"
    EXCEPTION = "exception"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witnesses: tuple[Witness, ...] = ()
    label: FamilyLabel | None = None
    digraph: Digraph | None = None
    detail: str = ""

    def __str__(self):
        if self.outcome is Outcome.HOLDS:
            return "holds " + "; ".join(map(str, self.witnesses))
        if self.outcome is Outcome.EXCEPTION:
            return f"exception {self.label}"
        if self.outcome is Outcome.COUNTEREXAMPLE:
            return f"counterexample: {self.detail}"
        return "hypothesis not met"


NOT_MET = Verdict(Outcome.HYPOTHESIS_NOT_MET)


@dataclass
class Conclusion:
    ok: bool
    witnesses: tuple[Witness, ...] = ()
    detail: str = ""


# ---------------------------------------------------------------------------
# hypotheses


def _meyniel(G, k):
    return cond.meyniel_deficiency(G) >= k


def thm_5_7_hypothesis(G: Digraph) -> bool:
    """2-strong, d(x) >= n off one vertex x0, and G Hamiltonian or d(x0) >= 2(n-1)/5."""
    n = G.order
    if n < 3 or not is_k_strong(G, 2):
        return False
    low = [v for v in range(n) if G.d(v) < n]
    if len(low) > 1:
        return False
    if not low:
        return True
    return 5 * G.d(low[0]) >= 2 * (n - 1) or find_hamiltonian_cycle(G) is not None


HYPOTHESES: dict[ClaimId, Callable[[Digraph], bool]] = {
    ClaimId.MEYNIEL_1_5: lambda G: G.order >= 2 and _meyniel(G, 1) and is_strong(G),
    ClaimId.THM_1_9: lambda G: G.order >= 3 and _meyniel(G, 0) and is_strong(G) and find_hamiltonian_cycle(G) is None,
    ClaimId.THM_1_10: lambda G: G.order >= 3 and _meyniel(G, 2) and is_strong(G),
    ClaimId.THM_1_12: lambda G: G.order >= 3 and _meyniel(G, 1) and is_strong(G),
    ClaimId.THM_1_16: lambda G: G.order >= 3 and cond.min_degree(G) >= G.order - 1 and is_k_strong(G, 2),
    ClaimId.THM_1_18: lambda G: G.order >= 3 and _meyniel(G, 0) and is_strong(G),
    ClaimId.THM_1_19: lambda G: G.order >= 4 and _meyniel(G, 1) and is_strong(G),
    ClaimId.COR_1: lambda G: G.order >= 3 and cond.woodall(G),
    ClaimId.COR_2: lambda G: G.order >= 3 and cond.min_degree(G) >= G.order,
    ClaimId.COR_3: lambda G: G.order >= 3 and _meyniel(G, 1),
    ClaimId.THM_5_5: lambda G: (
        G.order >= 4
        and cond.min_out_degree(G) >= 2
        and cond.min_in_degree(G) >= 3
        and cond.bjgl_51(G)
        and is_strong(G)
    ),
    ClaimId.THM_5_6: lambda G: G.order >= 4 and cond.manoussakis_54(G) and is_strong(G),
    ClaimId.THM_5_7: thm_5_7_hypothesis,
}


# ---------------------------------------------------------------------------
# conclusions


def _bypass(G: Digraph) -> Conclusion:
    w = find_hamiltonian_bypass(G)
    return Conclusion(w is not None, (w,) if w else (), "" if w else "no Hamiltonian bypass")


def _hamiltonian(G: Digraph) -> Conclusion:
    w = find_hamiltonian_cycle(G)
    return Conclusion(w is not None, (w,) if w else (), "" if w else "no Hamiltonian cycle")


def _dp3(G: Digraph) -> Conclusion:
    w = find_dpn(G, 3)
    return Conclusion(w is not None, (w,) if w else (), "" if w else "no D(p,3)")


def _pancyclic(G: Digraph) -> Conclusion:
    spectrum = cycle_spectrum(G)
    missing = [k for k in range(3, G.order + 1) if k not in spectrum]
    if missing:
        return Conclusion(False, (), f"missing cycle lengths {missing}")
    return Conclusion(True, tuple(find_cycle(G, k) for k in range(3, G.order + 1)))


def thm_1_9_statements(G: Digraph) -> dict[str, bool]:
    """Statements I, III and IV for every vertex set of a longest cycle.

    I: vertices off the cycle are pairwise adjacent, have degree <= p-1, and
    the strong components of the part off the cycle are complete digraphs.
    III: if G is 2-strong, the part off the cycle is a transitive tournament.
    IV: every length in [2, m] occurs as a cycle length.
    """
    p = G.order
    m, cycle_sets = longest_cycle_vertex_sets(G)
    two_strong = is_k_strong(G, 2)
    st_i = st_iii = True
    for vs in cycle_sets:
        A = G.all_vertices & ~vs
        avs = bits(A)
        if any(not G.adjacent(u, v) for i, u in enumerate(avs) for v in avs[i + 1 :]):
            st_i = False
        if any(G.d(v) > p - 1 for v in avs):
            st_i = False
        for comp in strong_components_ordered(G, A).components:
            cb = bits(comp)
            if any(not G.has_arc(u, v) for u in cb for v in cb if u != v):
                st_i = False
        if two_strong and A:
            H = induced(G, A)
            q = H.order
            tournament = all(H.adjacent(u, v) and not (H.has_arc(u, v) and H.has_arc(v, u)) for u in range(q) for v in range(u + 1, q))
            acyclic = len(strong_components_ordered(H)) == q
            if not (tournament and acyclic):
                st_iii = False
    spectrum = cycle_spectrum(G)
    st_iv = all(r in spectrum for r in range(2, m + 1))
    return {"I": st_i, "III": st_iii, "IV": st_iv}


def _thm_1_9(G: Digraph) -> Conclusion:
    st = thm_1_9_statements(G)
    failed = [k for k, v in st.items() if not v]
    return Conclusion(not failed, (), "" if not failed else "statement(s) " + ",".join(failed) + " fail")


CONCLUSIONS: dict[ClaimId, Callable[[Digraph], Conclusion]] = {
    ClaimId.MEYNIEL_1_5: _hamiltonian,
    ClaimId.THM_1_9: _thm_1_9,
    ClaimId.THM_1_10: _pancyclic,
    ClaimId.THM_1_12: _pancyclic,
    ClaimId.THM_1_16: _bypass,
    ClaimId.THM_1_18: _bypass,
    ClaimId.THM_1_19: _dp3,
    ClaimId.COR_1: _bypass,
    ClaimId.COR_2: _bypass,
    ClaimId.COR_3: _bypass,
    ClaimId.THM_5_5: _bypass,
    ClaimId.THM_5_6: _bypass,
    ClaimId.THM_5_7: _bypass,
}


# ---------------------------------------------------------------------------
# exceptions


def _none(G: Digraph, c: Conclusion) -> FamilyLabel | None:
    return None


def _only(*tags: str) -> Callable[[Digraph, Conclusion], FamilyLabel | None]:
    def rec(G: Digraph, c: Conclusion) -> FamilyLabel | None:
        label = recognize_exception(G)
        if label is not None and label.spec.tag in tags:
            return label
        return None

    return rec


def _exc_1_9(G: Digraph, c: Conclusion) -> FamilyLabel | None:
    # only statement IV has an exception
    st = thm_1_9_statements(G)
    p = G.order
    if not (st["I"] and st["III"]) or p % 2 == 0:
        return None
    return recognize_as(G, FamilySpec("kbip", (p // 2, p // 2 + 1)))


def _exc_1_10(G: Digraph, c: Conclusion) -> FamilyLabel | None:
    p = G.order
    if p % 2:
        return None
    return recognize_as(G, FamilySpec("kbip", (p // 2, p // 2)))


def _exc_1_12(G: Digraph, c: Conclusion) -> FamilyLabel | None:
    p = G.order
    if p % 2 == 0:
        label = recognize_as(G, FamilySpec("kbip", (p // 2, p // 2))) or recognize_as(
            G, FamilySpec("kbipminus", (p // 2,))
        )
        if label:
            return label
    return phi_label(G)


def _exc_1_16(G: Digraph, c: Conclusion) -> FamilyLabel | None:
    # the D0 family only exists for odd orders
    return recognize_d0(G) if G.order % 2 else None


EXCEPTIONS: dict[ClaimId, Callable[[Digraph, Conclusion], FamilyLabel | None]] = {
    ClaimId.MEYNIEL_1_5: _none,
    ClaimId.THM_1_9: _exc_1_9,
    ClaimId.THM_1_10: _exc_1_10,
    ClaimId.THM_1_12: _exc_1_12,
    ClaimId.THM_1_16: _exc_1_16,
    ClaimId.THM_1_18: _only("c3", "t5", "dpk", "d0"),
    ClaimId.THM_1_19: _none,
    ClaimId.COR_1: _none,
    ClaimId.COR_2: _none,
    ClaimId.COR_3: _only("c3", "t5"),
    ClaimId.THM_5_5: _none,
    ClaimId.THM_5_6: _only("t5"),
    ClaimId.THM_5_7: _none,
}


def check_claim(G: Digraph, claim: ClaimId, hypothesis_known: bool = False) -> Verdict:
    """Classify G against a claim.

    ``hypothesis_known`` skips the hypothesis evaluation when a caller (the
    sweep pre-filter) has already established it.
    """
    claim = ClaimId(claim)
    if G.order > SEARCH_MAX_ORDER:
        raise ValueError(f"claim checks support order <= {SEARCH_MAX_ORDER}")
    if not hypothesis_known and not HYPOTHESES[claim](G):
        return NOT_MET
    result = CONCLUSIONS[claim](G)
    if result.ok:
        return Verdict(Outcome.HOLDS, result.witnesses)
    label = EXCEPTIONS[claim](G, result)
    if label is not None:
        return Verdict(Outcome.EXCEPTION, label=label, digraph=G)
    return Verdict(Outcome.COUNTEREXAMPLE, digraph=G, detail=result.detail)
