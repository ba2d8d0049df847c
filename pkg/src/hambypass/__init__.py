"""Digraph toolkit for Hamiltonian bypasses under Meyniel-type degree conditions."""

from .claims import ClaimId, Outcome, Verdict, check_claim
from .conditions import ALL_ADJACENT, condition_report, meyniel_deficiency, satisfies_m
from .connectivity import is_k_strong, is_strong, strong_components_ordered
from .core import CanonicalForm, Digraph, build, canonical_form, converse, find_isomorphism, relabel
from .families import FamilyLabel, FamilySpec, generate, parse_spec, recognize_exception
from .io import decode_digraph6, encode_digraph6, read_digraph
from .search import Witness, find_dpn, find_hamiltonian_bypass, find_hamiltonian_cycle, find_hamiltonian_path
from .sweep import SweepReport, enumerate_digraphs, explore_open_problem, sweep

__all__ = [
    "ALL_ADJACENT",
    "CanonicalForm",
    "ClaimId",
    "Digraph",
    "FamilyLabel",
    "FamilySpec",
    "Outcome",
    "SweepReport",
    "Verdict",
    "Witness",
    "build",
    "canonical_form",
    "check_claim",
    "condition_report",
    "converse",
    "decode_digraph6",
    "encode_digraph6",
    "enumerate_digraphs",
    "explore_open_problem",
    "find_dpn",
    "find_hamiltonian_bypass",
    "find_hamiltonian_cycle",
    "find_hamiltonian_path",
    "find_isomorphism",
    "generate",
    "is_k_strong",
    "is_strong",
    "meyniel_deficiency",
    "parse_spec",
    "read_digraph",
    "recognize_exception",
    "relabel",
    "satisfies_m",
    "strong_components_ordered",
    "sweep",
]
