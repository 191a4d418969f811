"""Canonical labeling of digraphs by individualization and refinement.

The vertex set is partitioned by ``(out-degree, in-degree, 2-cycle degree)``
and refined to an equitable ordered partition.  A search tree then picks the
first smallest non-singleton cell, individualizes each of its vertices in
turn, and refines again.  Every leaf is a vertex ordering; the canonical form
is the lexicographically least relabelled adjacency matrix over all leaves.

Two pruning rules keep structured inputs cheap.  A leaf whose matrix equals
the first leaf's yields an automorphism, and the search jumps straight back to
the node where that leaf's path left the first path.  Known automorphisms
fixing a node's individualized vertices also skip children lying in the same
orbit as an already explored child.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .digraph import Digraph, MAX_ORDER, SizeError, relabel


@dataclass(frozen=True, order=True)
class CanonicalForm:
    key: bytes

    def hex(self) -> str:
        return self.key.hex()

    @classmethod
    def fromhex(cls, text: str) -> "CanonicalForm":
        return cls(bytes.fromhex(text))

    def __str__(self) -> str:
        return self.hex()


def _refine(D: Digraph, cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    out, inn = D.out, D.inn
    queue = list(splitters)
    head = 0
    while head < len(queue):
        W = queue[head]
        head += 1
        new_cells = []
        changed = False
        for X in cells:
            if len(X) == 1:
                new_cells.append(X)
                continue
            groups: dict[tuple[int, int], list[int]] = {}
            for x in X:
                key = ((out[x] & W).bit_count(), (inn[x] & W).bit_count())
                groups.setdefault(key, []).append(x)
            if len(groups) == 1:
                new_cells.append(X)
                continue
            changed = True
            for key in sorted(groups):
                part = groups[key]
                new_cells.append(part)
                mask = 0
                for x in part:
                    mask |= 1 << x
                queue.append(mask)
        cells = new_cells
        if changed and len(cells) == D.n:
            break
    return cells


def _initial_cells(D: Digraph) -> list[list[int]]:
    groups: dict[tuple[int, int, int], list[int]] = {}
    for v in range(D.n):
        key = (D.out[v].bit_count(), D.inn[v].bit_count(), (D.out[v] & D.inn[v]).bit_count())
        groups.setdefault(key, []).append(v)
    return [groups[k] for k in sorted(groups)]


def _cell_mask(cell: list[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


class _Search:
    def __init__(self, D: Digraph):
        self.D = D
        self.first_path: list[int] = []
        self.first_order: Optional[list[int]] = None
        self.first_code: Optional[tuple[int, ...]] = None
        self.best_order: Optional[list[int]] = None
        self.best_code: Optional[tuple[int, ...]] = None
        self.generators: list[list[int]] = []

    def encode(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.D.n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            row = 0
            r = self.D.out[v]
            while r:
                low = r & -r
                row |= 1 << pos[low.bit_length() - 1]
                r ^= low
            code.append(row)
        return tuple(code)

    def _automorphism(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.D.n
        for a, b in zip(src, dst):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.D.n)):
            self.generators.append(gamma)

    def leaf(self, order: list[int], prefix: list[int]) -> Optional[int]:
        code = self.encode(order)
        if self.first_code is None:
            self.first_path = list(prefix)
            self.first_order = self.best_order = order
            self.first_code = self.best_code = code
            return None
        if code == self.first_code:
            self._automorphism(self.first_order, order)
            common = 0
            for a, b in zip(prefix, self.first_path):
                if a != b:
                    break
                common += 1
            return common
        if code == self.best_code:
            self._automorphism(self.best_order, order)
        elif code < self.best_code:
            self.best_code, self.best_order = code, order
        return None

    def orbits(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.D.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for gamma in self.generators:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.D.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.D.n)]

    def run(self, cells: list[list[int]], prefix: list[int]) -> Optional[int]:
        target_index = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target_index < 0 or len(cell) < len(cells[target_index])):
                target_index = i
        if target_index < 0:
            return self.leaf([cell[0] for cell in cells], prefix)

        depth = len(prefix)
        target = cells[target_index]
        explored: list[int] = []
        n_generators = -1
        orbit_of: list[int] = []
        for v in sorted(target):
            if explored and self.generators:
                if len(self.generators) != n_generators:
                    orbit_of = self.orbits(prefix)
                    n_generators = len(self.generators)
                if any(orbit_of[u] == orbit_of[v] for u in explored):
                    continue
            child = cells[:target_index] + [[v], [u for u in target if u != v]] + cells[target_index + 1:]
            child = _refine(self.D, child, [1 << v])
            jump = self.run(child, prefix + [v])
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(D: Digraph) -> list[int]:
    """Vertex order whose relabelled adjacency matrix is the canonical one.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    """
    if D.n > MAX_ORDER:
        raise SizeError(f"order {D.n} exceeds {MAX_ORDER}")
    cells = _initial_cells(D)
    cells = _refine(D, cells, [_cell_mask(c) for c in cells])
    search = _Search(D)
    search.run(cells, [])
    return search.best_order


@lru_cache(maxsize=8192)
def canonical_form(D: Digraph) -> CanonicalForm:
    order = canonical_labeling(D)
    width = (D.n + 7) // 8
    pos = [0] * D.n
    for i, v in enumerate(order):
        pos[v] = i
    canon = relabel(D, pos)
    key = D.n.to_bytes(2, "big") + b"".join(row.to_bytes(width, "big") for row in canon.out)
    return CanonicalForm(key)


def canonical_digraph(D: Digraph) -> Digraph:
    order = canonical_labeling(D)
    pos = [0] * D.n
    for i, v in enumerate(order):
        pos[v] = i
    return relabel(D, pos)


def are_isomorphic(D: Digraph, H: Digraph) -> bool:
    if D.n != H.n or D.arc_count != H.arc_count:
        return False
    if sorted(D.out[v].bit_count() for v in range(D.n)) != sorted(
        H.out[v].bit_count() for v in range(H.n)
    ):
        return False
    return canonical_form(D) == canonical_form(H)
