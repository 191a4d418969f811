"""Direct computation of the largest P(2,2)-free digraphs on few vertices.

Two independent routes: brute-force enumeration of every labelled digraph
(orders up to 5), and a branch-and-bound over arc decisions that only ever
keeps free digraphs, adding arcs through the incremental freeness test.

The worker count for parallel search is read from the ``P22_WORKERS``
environment variable (default 1).
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .canonical import canonical_form
from .constructions import build_family, default_params, ex_formula
from .detect import _stays_free, is_free
from .digraph import Digraph

log = logging.getLogger(__name__)

MAX_EXHAUSTIVE_ORDER = 5
WORKERS_ENV = "P22_WORKERS"


class SearchSizeError(ValueError):
    pass


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class SearchConfig:
    n: int
    seed_lower_bound: Optional[int] = None
    seed_digraph: Optional[Digraph] = None
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    collect_witnesses: bool = True
    workers: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        for name in ("node_limit", "time_limit"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive")
        if self.seed_digraph is not None:
            if self.seed_digraph.n != self.n or not is_free(self.seed_digraph):
                raise ValueError("seed digraph must be a free digraph of order n")
            arcs = self.seed_digraph.arc_count
            if self.seed_lower_bound is None or self.seed_lower_bound < arcs:
                self.seed_lower_bound = arcs


@dataclass
class SearchResult:
    best_arcs: int
    optimal: bool
    witnesses: list[Digraph] = field(default_factory=list)
    nodes: int = 0

    def summary(self) -> str:
        return (
            f"best_arcs={self.best_arcs}\n"
            f"optimal={'true' if self.optimal else 'false'}\n"
            f"witnesses={len(self.witnesses)}"
        )


def _dedup(digraphs) -> list[Digraph]:
    seen = {}
    for D in digraphs:
        seen.setdefault(canonical_form(D), D)
    return [seen[k] for k in sorted(seen)]


def _ordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _free_mask(codes: np.ndarray, n: int, index: dict) -> np.ndarray:
    """Vectorized freeness over a batch of arc-set codes (bit i = pair i)."""
    free = np.ones(codes.shape, dtype=bool)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            count = np.zeros(codes.shape, dtype=np.uint8)
            for m in range(n):
                if m in (a, b):
                    continue
                first = (codes >> np.uint32(index[a, m])) & np.uint32(1)
                second = (codes >> np.uint32(index[m, b])) & np.uint32(1)
                count += (first & second).astype(np.uint8)
            free &= count < 2
    return free


def _decode(code: int, n: int, pairs) -> Digraph:
    out = [0] * n
    for i, (u, v) in enumerate(pairs):
        if code >> i & 1:
            out[u] |= 1 << v
    return Digraph(n, out)


def max_free_exhaustive(n: int, collect_witnesses: bool = True, workers: Optional[int] = None) -> SearchResult:
    """Test every labelled digraph of order ``n`` and keep the largest free ones."""
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise SearchSizeError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}")
    pairs = _ordered_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    total = 1 << len(pairs)
    chunk = min(total, 1 << 16)
    starts = range(0, total, chunk)

    def scan(start: int) -> tuple[int, np.ndarray]:
        codes = np.arange(start, start + chunk, dtype=np.uint32)
        sizes = np.bitwise_count(codes).astype(np.int16)
        sizes = np.where(_free_mask(codes, n, index), sizes, -1)
        best = int(sizes.max())
        return best, codes[sizes == best]

    with ThreadPoolExecutor(max_workers=workers or default_workers()) as pool:
        parts = list(pool.map(scan, starts))
    best = max(b for b, _ in parts)
    witnesses = []
    if collect_witnesses:
        codes = np.concatenate([c for b, c in parts if b == best])
        witnesses = [_decode(int(c), n, pairs) for c in codes]
        assert all(is_free(D) for D in witnesses)
        witnesses = _dedup(witnesses)
    return SearchResult(best_arcs=best, optimal=True, witnesses=witnesses, nodes=total)


class _LimitReached(Exception):
    pass


class _BranchAndBound:
    def __init__(self, n: int, best: int, strict_ties: bool, collect: bool,
                 node_limit: Optional[int], deadline: Optional[float]):
        self.n = n
        # arcs are decided pair by pair, both directions of a pair in a row
        self.order = []
        for i in range(n):
            for j in range(i + 1, n):
                self.order += [(i, j), (j, i)]
        self.out = [0] * n
        self.inn = [0] * n
        self.best = best
        self.strict_ties = strict_ties
        self.collect = collect
        self.found: dict = {}
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = deadline

    def _record(self, arcs: int) -> None:
        if arcs > self.best:
            self.best = arcs
            self.found = {}
        if self.collect or not self.found:
            D = Digraph(self.n, self.out)
            self.found.setdefault(canonical_form(D), D)

    def _prune(self, arcs: int, depth: int) -> bool:
        bound = arcs + len(self.order) - depth
        if self.collect or self.strict_ties:
            return bound < self.best
        return bound <= self.best

    def run(self, depth: int, arcs: int) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _LimitReached
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _LimitReached
        if depth == len(self.order):
            if arcs > self.best or (arcs == self.best and (self.collect or self.strict_ties)):
                self._record(arcs)
            return
        if self._prune(arcs, depth):
            return
        a, b = self.order[depth]
        if _stays_free(self.out, self.inn, a, b):
            self.out[a] |= 1 << b
            self.inn[b] |= 1 << a
            self.run(depth + 1, arcs + 1)
            self.out[a] &= ~(1 << b)
            self.inn[b] &= ~(1 << a)
        self.run(depth + 1, arcs)

    def run_prefix(self, prefix: tuple[int, ...]) -> None:
        """Replay fixed first decisions, then search the remaining subtree."""
        arcs = 0
        for depth, take in enumerate(prefix):
            if take:
                a, b = self.order[depth]
                if not _stays_free(self.out, self.inn, a, b):
                    return
                self.out[a] |= 1 << b
                self.inn[b] |= 1 << a
                arcs += 1
        self.run(len(prefix), arcs)


def _subtree(args) -> tuple[int, list[Digraph], int, bool]:
    n, prefix, best, strict, collect, node_limit, deadline = args
    bnb = _BranchAndBound(n, best, strict, collect, node_limit, deadline)
    complete = True
    try:
        bnb.run_prefix(prefix)
    except _LimitReached:
        complete = False
    return bnb.best, list(bnb.found.values()), bnb.nodes, complete


def max_free_branch_and_bound(config: SearchConfig) -> SearchResult:
    n = config.n
    seeded = config.seed_lower_bound is not None
    witness_seed = config.seed_digraph is not None
    # a bare numeric seed is only a claim; search for digraphs matching it
    strict_ties = seeded and not witness_seed
    best = config.seed_lower_bound if seeded else -1
    deadline = time.monotonic() + config.time_limit if config.time_limit else None
    workers = config.workers or default_workers()
    total_pairs = n * (n - 1)

    split = 0
    if workers > 1 and total_pairs >= 8:
        split = min(6, total_pairs)
    prefixes = [tuple((i >> k) & 1 for k in range(split)) for i in range(1 << split)]
    per_limit = None
    if config.node_limit is not None:
        per_limit = max(1, config.node_limit // len(prefixes))
    tasks = [(n, p, best, strict_ties, config.collect_witnesses, per_limit, deadline) for p in prefixes]
    if len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_subtree, tasks))
    else:
        parts = [_subtree(tasks[0])]

    found_best = max(b for b, _, _, _ in parts)
    complete = all(c for _, _, _, c in parts)
    nodes = sum(k for _, _, k, _ in parts)
    witnesses = [D for b, ws, _, _ in parts if b == found_best for D in ws]
    if witness_seed and config.seed_digraph.arc_count == found_best:
        witnesses.append(config.seed_digraph)
    witnesses = _dedup(witnesses)
    if not config.collect_witnesses:
        witnesses = witnesses[:1]

    optimal = complete
    best_arcs = found_best
    if seeded and not witnesses:
        # nothing reached the claimed seed, so the claim itself is unverified
        best_arcs = config.seed_lower_bound
        optimal = False
        if complete:
            log.warning("search exhausted without reaching the seed bound %d", best_arcs)
    return SearchResult(best_arcs=best_arcs, optimal=optimal, witnesses=witnesses, nodes=nodes)


def verify_lower_bound(n: int) -> bool:
    """Build a family member for ``n`` and confirm it is free with ex(n) arcs."""
    D = build_family(default_params(n))
    return is_free(D) and D.arc_count == ex_formula(n)
