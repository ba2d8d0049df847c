"""Exhaustive and sampled claim sweeps, plus open-problem exploration.

Work is split into fixed-size blocks of the enumeration index (or of the
sample stream). Each block yields a partial report; partial reports are
merged in block order, so the result does not depend on worker scheduling.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator

import numpy as np

from . import batch
from .claims import CONCLUSIONS, EXCEPTIONS, HYPOTHESES, ClaimId, Outcome, check_claim
from .core import Digraph, canonical_form, find_isomorphism
from .families import FamilySpec, d0, generate, is_phi_member
from .search import SEARCH_MAX_ORDER, find_hamiltonian_bypass

EXHAUSTIVE_MAX_ORDER = 6
BLOCK_SIZE = 1 << 16
RNG_ID = "numpy-PCG64"

PATTERN_MAX_ORDER = 7
BYPASS_CLAIMS = frozenset(
    c for c in ClaimId if c not in (ClaimId.MEYNIEL_1_5, ClaimId.THM_1_9, ClaimId.THM_1_10, ClaimId.THM_1_12, ClaimId.THM_1_19)
)

OUTCOME_ORDER = (Outcome.HYPOTHESIS_NOT_MET, Outcome.HOLDS, Outcome.EXCEPTION, Outcome.COUNTEREXAMPLE)


# ---------------------------------------------------------------------------
# vectorized hypothesis pre-filters


def _narrow(keep: np.ndarray, adj: np.ndarray, test: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Apply ``test`` only to rows still alive in ``keep``."""
    idx = np.flatnonzero(keep)
    if len(idx):
        keep[idx] = test(adj[idx])
    return keep


def _min_deficiency(k: int):
    return lambda a: batch.Features(a).deficiency() >= k


def _features_test(fn):
    return lambda a: fn(batch.Features(a))


def _low_degree_at_most_one(a: np.ndarray) -> np.ndarray:
    f = batch.Features(a)
    return (f.deg < f.p).sum(axis=1) <= 1


def _min_deg(bound_of_p: Callable[[int], int]):
    return lambda a: (batch.Features(a).deg >= bound_of_p(a.shape[1])).all(axis=1)


def _dk55_degrees(a: np.ndarray) -> np.ndarray:
    f = batch.Features(a)
    return (f.od >= 2).all(axis=1) & (f.id >= 3).all(axis=1)


# Each entry: minimum order, cheapest-first stages, and whether the stages
# decide the hypothesis exactly (otherwise the scalar check runs as well).
_PREFILTERS: dict[ClaimId, tuple[int, tuple, bool]] = {
    ClaimId.MEYNIEL_1_5: (2, (_min_deficiency(1), batch.strongly_connected), True),
    ClaimId.THM_1_9: (3, (_min_deficiency(0), batch.strongly_connected), False),
    ClaimId.THM_1_10: (3, (_min_deficiency(2), batch.strongly_connected), True),
    ClaimId.THM_1_12: (3, (_min_deficiency(1), batch.strongly_connected), True),
    ClaimId.THM_1_16: (3, (_min_deg(lambda p: p - 1), batch.two_strong), True),
    ClaimId.THM_1_18: (3, (_min_deficiency(0), batch.strongly_connected), True),
    ClaimId.THM_1_19: (4, (_min_deficiency(1), batch.strongly_connected), True),
    ClaimId.COR_1: (3, (_features_test(batch.woodall),), True),
    ClaimId.COR_2: (3, (_min_deg(lambda p: p),), True),
    ClaimId.COR_3: (3, (_min_deficiency(1),), True),
    ClaimId.THM_5_5: (4, (_dk55_degrees, _features_test(batch.bjgl_51), batch.strongly_connected), True),
    ClaimId.THM_5_6: (4, (_features_test(batch.manoussakis_54), batch.strongly_connected), True),
    ClaimId.THM_5_7: (3, (_low_degree_at_most_one, batch.two_strong), False),
}


def prefilter(claim: ClaimId, adj: np.ndarray) -> tuple[np.ndarray, bool]:
    """Rows of ``adj`` that may satisfy the hypothesis, and whether that is exact."""
    min_order, stages, exact = _PREFILTERS[ClaimId(claim)]
    keep = np.full(adj.shape[0], adj.shape[1] >= min_order)
    for stage in stages:
        keep = _narrow(keep, adj, stage)
    return keep, exact


# ---------------------------------------------------------------------------
# reports


@dataclass
class SweepReport:
    """Aggregate of one sweep.

    ``to_text`` fixes the field order: claim, p, mode, seed, count, rng,
    total, the four outcome counts, then one ``exception_label`` line per
    label (sorted) and one ``counterexample`` line per canonical form
    (sorted). Wall time is kept out of the text so equal runs give equal
    bytes; ``timing_line`` renders it separately.
    """

    claim: ClaimId
    p: int
    mode: str
    seed: int | None = None
    count: int | None = None
    counts: dict[Outcome, int] = field(default_factory=lambda: {o: 0 for o in OUTCOME_ORDER})
    exception_labels: Counter = field(default_factory=Counter)
    exception_forms: dict[str, set[str]] = field(default_factory=dict)
    counterexamples: Counter = field(default_factory=Counter)
    wall_time: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def rng(self) -> str:
        return RNG_ID if self.mode == "sampled" else "-"

    def merge(self, other: "SweepReport") -> None:
        for o in OUTCOME_ORDER:
            self.counts[o] += other.counts[o]
        self.exception_labels.update(other.exception_labels)
        for label, forms in other.exception_forms.items():
            self.exception_forms.setdefault(label, set()).update(forms)
        self.counterexamples.update(other.counterexamples)

    def to_text(self) -> str:
        lines = [
            f"claim = {self.claim.value}",
            f"p = {self.p}",
            f"mode = {self.mode}",
            f"seed = {'-' if self.seed is None else self.seed}",
            f"count = {'-' if self.count is None else self.count}",
            f"rng = {self.rng}",
            f"total = {self.total}",
        ]
        lines += [f"{o.value} = {self.counts[o]}" for o in OUTCOME_ORDER]
        for label in sorted(self.exception_labels):
            forms = ",".join(sorted(self.exception_forms.get(label, ())))
            lines.append(f"exception_label = {label} count={self.exception_labels[label]} forms={forms}")
        for form in sorted(self.counterexamples):
            lines.append(f"counterexample = {form} count={self.counterexamples[form]}")
        return "\n".join(lines) + "\n"

    def timing_line(self) -> str:
        return f"wall_time = {self.wall_time:.3f}s"


# ---------------------------------------------------------------------------
# block workers


def _sample_block(p: int, seed: int, block: int, n: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, block])))
    flags = rng.integers(0, 2, size=(n, p * (p - 1)), dtype=np.uint8)
    return batch.adjacency_from_flags(p, flags)


def _block_adjacency(p: int, mode: str, seed: int | None, block: int, total: int) -> np.ndarray:
    start = block * BLOCK_SIZE
    stop = min(start + BLOCK_SIZE, total)
    if mode == "exhaustive":
        return batch.adjacency_block(p, start, stop)
    return _sample_block(p, seed, block, stop - start)


def _indices(adj: np.ndarray) -> np.ndarray:
    p = adj.shape[1]
    flags = adj[:, ~np.eye(p, dtype=bool)]
    weights = np.int64(1) << np.arange(p * (p - 1), dtype=np.int64)
    return (flags.astype(np.int64) * weights).sum(axis=1)


def _run_block(args) -> SweepReport:
    claim, p, mode, seed, block, total, fast = args
    adj = _block_adjacency(p, mode, seed, block, total)
    part = SweepReport(claim, p, mode)
    keep, exact = prefilter(claim, adj)
    part.counts[Outcome.HYPOTHESIS_NOT_MET] += int((~keep).sum())
    if fast and exact and claim in BYPASS_CLAIMS and p <= PATTERN_MAX_ORDER:
        # instances containing a bypass pattern hold; only the rest need search
        alive = np.flatnonzero(keep)
        found = batch.has_pattern(_indices(adj[alive]), batch.bypass_patterns(p))
        part.counts[Outcome.HOLDS] += int(found.sum())
        keep[alive[found]] = False
    for i in np.flatnonzero(keep):
        G = batch.digraph_from_adjacency(adj[i])
        v = check_claim(G, claim, hypothesis_known=exact)
        part.counts[v.outcome] += 1
        if v.outcome is Outcome.EXCEPTION:
            label = str(v.label)
            part.exception_labels[label] += 1
            part.exception_forms.setdefault(label, set()).add(str(canonical_form(G)))
        elif v.outcome is Outcome.COUNTEREXAMPLE:
            if not reverify_counterexample(G, claim):
                raise RuntimeError(f"counterexample {canonical_form(G)} failed independent re-verification")
            part.counterexamples[str(canonical_form(G))] += 1
    return part


def _blocks(total: int) -> int:
    return (total + BLOCK_SIZE - 1) // BLOCK_SIZE


def _run(claim, p, mode, seed, total, workers, fast) -> SweepReport:
    report = SweepReport(claim, p, mode)
    jobs = [(claim, p, mode, seed, b, total, fast) for b in range(_blocks(total))]
    if workers <= 1:
        parts = map(_run_block, jobs)
        for part in parts:
            report.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_block, jobs):  # results arrive in block order
                report.merge(part)
    return report


def sweep(
    p: int,
    claim: ClaimId | str,
    mode: str = "exhaustive",
    seed: int | None = None,
    count: int | None = None,
    workers: int = 1,
    long_running: bool = False,
    fast: bool = True,
) -> SweepReport:
    """Classify every labeled digraph of order p (or a seeded sample) against a claim.

    Exhaustive mode covers p <= 5, and p = 6 only with ``long_running``.
    Sampled mode needs an explicit seed and count and covers p <= 10.
    With ``fast`` (the default), bypass claims count instances that contain
    a bypass pattern as holding without running the scalar search; the
    result is identical, only cheaper.
    """
    claim = ClaimId.parse(claim) if isinstance(claim, str) else ClaimId(claim)
    if p < 1:
        raise ValueError("order must be positive")
    t0 = time.perf_counter()
    if mode == "exhaustive":
        if p > EXHAUSTIVE_MAX_ORDER:
            raise ValueError(f"exhaustive sweeps support p <= {EXHAUSTIVE_MAX_ORDER}")
        if p == EXHAUSTIVE_MAX_ORDER and not long_running:
            raise ValueError(f"exhaustive p = {p} is long-running; pass long_running=True")
        total = 1 << (p * (p - 1))
        report = _run(claim, p, mode, None, total, workers, fast)
    elif mode == "sampled":
        if seed is None or count is None:
            raise ValueError("sampled sweeps need an explicit seed and count")
        if count < 0:
            raise ValueError("count must be non-negative")
        if p > SEARCH_MAX_ORDER:
            raise ValueError(f"sampled sweeps support p <= {SEARCH_MAX_ORDER}")
        report = _run(claim, p, mode, seed, count, workers, fast)
        report.seed, report.count = seed, count
    else:
        raise ValueError(f"unknown mode {mode!r}; use exhaustive or sampled")
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# enumeration


def enumerate_digraphs(p: int, filter: Callable[[Digraph], bool] | None = None) -> Iterator[Digraph]:
    """Every labeled digraph of order p in arc-bit index order."""
    if p < 1 or p > EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"enumeration supports 1 <= p <= {EXHAUSTIVE_MAX_ORDER}")
    for index in range(1 << (p * (p - 1))):
        G = batch.digraph_from_index(p, index)
        if filter is None or filter(G):
            yield G


# ---------------------------------------------------------------------------
# independent re-verification of counterexamples


def _perm_bypass(G: Digraph) -> bool:
    return any(
        G.has_arc(s[0], s[-1]) and all(G.has_arc(a, b) for a, b in zip(s, s[1:])) for s in permutations(range(G.order))
    )


def _perm_ham(G: Digraph) -> bool:
    p = G.order
    for rest in permutations(range(1, p)):
        s = (0,) + rest
        if all(G.has_arc(s[i], s[(i + 1) % p]) for i in range(p)):
            return True
    return False


def _perm_dp3(G: Digraph) -> bool:
    # paths x a y and x ... y of lengths 2 and p-2 sharing only endpoints
    p = G.order
    for s in permutations(range(p)):
        x, a, y, rest = s[0], s[1], s[2], s[3:]
        route = (x,) + rest + (y,)
        if G.has_arc(x, a) and G.has_arc(a, y) and all(G.has_arc(u, v) for u, v in zip(route, route[1:])):
            return True
    return False


def _perm_cycle_lengths(G: Digraph) -> set[int]:
    from itertools import combinations

    found = set()
    for k in range(2, G.order + 1):
        for subset in combinations(range(G.order), k):
            first, rest = subset[0], subset[1:]
            if any(
                all(G.has_arc(c[i], c[(i + 1) % k]) for i in range(k)) for c in ((first,) + r for r in permutations(rest))
            ):
                found.add(k)
                break
    return found


def _candidate_exceptions(claim: ClaimId, p: int) -> list[Digraph]:
    """Every family member the claim's exception list allows at order p."""
    out: list[Digraph] = []
    tags = {
        ClaimId.THM_1_18: ("c3", "t5", "dpk", "d0"),
        ClaimId.COR_3: ("c3", "t5"),
        ClaimId.THM_5_6: ("t5",),
        ClaimId.THM_1_16: ("d0",),
        ClaimId.THM_1_10: ("kbip",),
        ClaimId.THM_1_9: ("kbip",),
        ClaimId.THM_1_12: ("kbip", "kbipminus"),
    }.get(claim, ())
    if "c3" in tags and p == 3:
        out.append(generate(FamilySpec("c3")))
    if "t5" in tags and p == 5:
        out.append(generate(FamilySpec("t5")))
    if "dpk" in tags:
        out += [generate(FamilySpec("dpk", (p, k))) for k in range(1, p - 1)]
    if "d0" in tags and p % 2 and p >= 3:
        b = (p - 1) // 2
        nbits = b * (b - 1)
        for bbits in range(1 << nbits):
            B = batch.digraph_from_index(b, bbits) if b >= 1 else None
            out.append(generate(d0(p, B)))
    if "kbip" in tags:
        if claim is ClaimId.THM_1_9 and p % 2:
            out.append(generate(FamilySpec("kbip", (p // 2, p // 2 + 1))))
        elif claim is not ClaimId.THM_1_9 and p % 2 == 0:
            out.append(generate(FamilySpec("kbip", (p // 2, p // 2))))
    if "kbipminus" in tags and p % 2 == 0:
        out.append(generate(FamilySpec("kbipminus", (p // 2,))))
    return out


def reverify_counterexample(G: Digraph, claim: ClaimId) -> bool:
    """Re-check a counterexample through code paths separate from check_claim.

    The hypothesis goes through the vectorized predicates (plus the scalar
    hypothesis for claims whose vectorized form is partial), the conclusion
    through permutation brute force, and the exception list through
    isomorphism tests against every generated family member. Orders above 8
    fall back to the search module for the conclusion.
    """
    claim = ClaimId(claim)
    adj = np.array(G.adjacency_matrix(), dtype=bool)[None]
    keep, exact = prefilter(claim, adj)
    if not keep[0] or (not exact and not HYPOTHESES[claim](G)):
        return False
    p = G.order
    if p <= 8:
        if claim in (ClaimId.MEYNIEL_1_5,):
            concl = _perm_ham(G)
        elif claim is ClaimId.THM_1_19:
            concl = _perm_dp3(G)
        elif claim in (ClaimId.THM_1_10, ClaimId.THM_1_12):
            concl = set(range(3, p + 1)) <= _perm_cycle_lengths(G)
        elif claim is ClaimId.THM_1_9:
            concl = CONCLUSIONS[claim](G).ok
        else:
            concl = _perm_bypass(G)
    else:
        concl = CONCLUSIONS[claim](G).ok
    if concl:
        return False
    if any(find_isomorphism(G, H) is not None for H in _candidate_exceptions(claim, p)):
        return False
    if claim is ClaimId.THM_1_12 and any(is_phi_member(G, m) for m in range((p + 1) // 2 + 1, p)):
        return False
    if claim is ClaimId.THM_1_9 and EXCEPTIONS[claim](G, CONCLUSIONS[claim](G)) is not None:
        return False
    return True


# ---------------------------------------------------------------------------
# open-problem exploration

EXPLORE_CONDITIONS: dict[str, Callable[[batch.Features], np.ndarray]] = {
    "bjgl_51": batch.bjgl_51,
    "bjgl_52": batch.bjgl_52,
    "bgy_53": batch.bgy_53,
    "manoussakis_54": batch.manoussakis_54,
    "dk_55": lambda f: batch.bjgl_51(f) & (f.od >= 2).all(axis=1) & (f.id >= 3).all(axis=1),
}
EXPLORE_EXHAUSTIVE_MAX = 5


def _bypass_free(adj: np.ndarray) -> np.ndarray:
    p = adj.shape[1]
    if p <= 7:
        return ~batch.has_pattern(_indices(adj), batch.bypass_patterns(p))
    return np.array([find_hamiltonian_bypass(batch.digraph_from_adjacency(a)) is None for a in adj], dtype=bool)


def _explore_block(args) -> set[str]:
    condition, p, mode, seed, block, total = args
    adj = _block_adjacency(p, mode, seed, block, total)
    keep = np.ones(adj.shape[0], dtype=bool)
    keep = _narrow(keep, adj, _features_test(EXPLORE_CONDITIONS[condition]))
    keep = _narrow(keep, adj, batch.strongly_connected)
    keep = _narrow(keep, adj, _bypass_free)
    return {str(canonical_form(batch.digraph_from_adjacency(adj[i]))) for i in np.flatnonzero(keep)}


def explore_open_problem(
    condition: str, p: int, budget: int = 0, seed: int | None = None, workers: int = 1
) -> list[str]:
    """Canonical forms of strong, bypass-free digraphs meeting ``condition``.

    Orders up to 5 are searched exhaustively (budget and seed are ignored);
    larger orders draw ``budget`` seeded uniform samples.
    """
    if condition not in EXPLORE_CONDITIONS:
        raise ValueError(f"unknown condition {condition!r}; choose from {', '.join(EXPLORE_CONDITIONS)}")
    if p < 1 or p > SEARCH_MAX_ORDER:
        raise ValueError(f"exploration supports 1 <= p <= {SEARCH_MAX_ORDER}")
    if p <= EXPLORE_EXHAUSTIVE_MAX:
        mode, total = "exhaustive", 1 << (p * (p - 1))
    else:
        if seed is None:
            raise ValueError("sampled exploration needs an explicit seed")
        if budget < 0:
            raise ValueError("budget must be non-negative")
        mode, total = "sampled", budget
    jobs = [(condition, p, mode, seed, b, total) for b in range(_blocks(total))]
    found: set[str] = set()
    if workers <= 1:
        for part in map(_explore_block, jobs):
            found |= part
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_explore_block, jobs):
                found |= part
    return sorted(found)
