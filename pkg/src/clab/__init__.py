"""clab: an exact multiple list colouring workbench.

Core pieces: immutable graphs with rotation systems (`graphs`), colour sets
and the properness predicate (`colours`), the exact b-fold list colouring
solver with a brute-force oracle (`solver`), DIMACS CNF export (`cnf`), the
built-in planar gadget family and its amplification (`gadget`), machine
verification of their non-colourability (`verifier`), and desk-scale
exploration tools (`search`).  A FastAPI service (`service`) and a thin CLI
client (`cli`) wrap the same handlers.
"""

from .colours import ColourBlocks, Verdict, build_blocks, is_proper
from .gadget import (GadgetInstance, GadgetParams, build_G, build_H,
                     enumerate_pairs, k_of, p_of)
from .graphs import (EulerReport, Graph, GraphError, build_graph,
                     check_embedding, export_dot, glue, is_isomorphic)
from .search import chi_f, decide_ab, search_witness
from .solver import Budget, Outcome, SearchStats, brute_force, decide
from .verifier import (ProofTrace, VerificationReport, verify_arithmetic,
                       verify_lemma_dfs, verify_lemma_replay, verify_theorem)

__version__ = "0.1.0"

__all__ = [
    "Budget", "ColourBlocks", "EulerReport", "GadgetInstance", "GadgetParams",
    "Graph", "GraphError", "Outcome", "ProofTrace", "SearchStats",
    "VerificationReport", "Verdict", "brute_force", "build_G", "build_H",
    "build_blocks", "build_graph", "check_embedding", "chi_f", "decide",
    "decide_ab", "enumerate_pairs", "export_dot", "glue", "is_isomorphic",
    "is_proper", "k_of", "p_of", "search_witness", "verify_arithmetic",
    "verify_lemma_dfs", "verify_lemma_replay", "verify_theorem",
]
