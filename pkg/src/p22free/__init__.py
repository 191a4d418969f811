"""Extremal digraphs avoiding P(2,2), the orientation of C4 made of two
directed 2-paths with common ends: constructions, detection, recognition,
canonical labeling, small-order search and structural audits."""

from .audit import AuditReport, Verdict, audit_extremal_bounds, full_audit
from .canonical import CanonicalForm, are_isomorphic, canonical_form
from .constructions import (
    Family,
    FamilyParams,
    build_family,
    build_S,
    build_T,
    enumerate_params,
    ex_formula,
    remark_digraph,
)
from .detect import P22Witness, count_pairs_with_multi_middles, find_witness, is_free, stays_free_after
from .digraph import Digraph, add_arc, new_digraph, reverse
from .recognizer import Classification, classify, is_in_EX
from .search import SearchConfig, SearchResult, max_free_branch_and_bound, max_free_exhaustive, verify_lower_bound

__version__ = "0.1.0"
