"""Strict digraphs stored as rows of out- and in-neighbour bitmasks.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is
a member.  Python integers are unbounded, so rows are single machine words for
small orders and transparently become multi-word beyond 64 vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ORDER = 256

VertexSet = int


class DigraphError(ValueError):
    """Base class for invalid digraph construction requests."""


class SizeError(DigraphError):
    pass


class LoopError(DigraphError):
    pass


class VertexRangeError(DigraphError, IndexError):
    pass


def bit(v: int) -> int:
    return 1 << v


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_ORDER:
        raise SizeError(f"order must be in 1..{MAX_ORDER}, got {n!r}")


class Digraph:
    """Immutable strict digraph on vertices ``0..n-1``.

    ``out[u]`` has bit ``v`` set iff the arc ``u -> v`` is present and
    ``inn[v]`` is the transposed relation.  Instances hash and compare by arc
    set, so they can be used as dictionary keys and cached.
    """

    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, n: int, out: Sequence[int]):
        _check_order(n)
        if len(out) != n:
            raise SizeError(f"expected {n} rows, got {len(out)}")
        full = (1 << n) - 1
        inn = [0] * n
        for u, row in enumerate(out):
            if row & ~full:
                raise VertexRangeError(f"row {u} references a vertex >= {n}")
            if row >> u & 1:
                raise LoopError(f"loop at vertex {u}")
            for v in members(row):
                inn[v] |= 1 << u
        self.n = n
        self.out = tuple(out)
        self.inn = tuple(inn)
        self._hash = hash((n, self.out))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        builder = DigraphBuilder(n)
        for u, v in arcs:
            builder.add_arc(u, v)
        return builder.freeze()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"

    @property
    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in members(self.out[u])]

    def out_degree(self, u: int) -> int:
        return self.out[self._vertex(u)].bit_count()

    def in_degree(self, u: int) -> int:
        return self.inn[self._vertex(u)].bit_count()

    def max_out_degree(self) -> int:
        return max(row.bit_count() for row in self.out)

    def _vertex(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise VertexRangeError(f"vertex {u} out of range for order {self.n}")
        return u


class DigraphBuilder:
    """Mutable scratch digraph used by constructors; ``freeze`` snapshots it."""

    def __init__(self, n: int):
        _check_order(n)
        self.n = n
        self.out = [0] * n

    def _check(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise VertexRangeError(f"arc ({u}, {v}) out of range for order {self.n}")
        if u == v:
            raise LoopError(f"loop at vertex {u}")

    def add_arc(self, u: int, v: int) -> "DigraphBuilder":
        self._check(u, v)
        self.out[u] |= 1 << v
        return self

    def add_2cycle(self, u: int, v: int) -> "DigraphBuilder":
        return self.add_arc(u, v).add_arc(v, u)

    def add_arcs_to(self, u: int, targets: VertexSet) -> "DigraphBuilder":
        """Add ``u -> t`` for every ``t`` in ``targets`` (``u`` itself skipped)."""
        for t in members(targets & ~(1 << u)):
            self.add_arc(u, t)
        return self

    def remove_arc(self, u: int, v: int) -> "DigraphBuilder":
        self._check(u, v)
        self.out[u] &= ~(1 << v)
        return self

    def freeze(self) -> Digraph:
        return Digraph(self.n, self.out)


def new_digraph(n: int) -> Digraph:
    _check_order(n)
    return Digraph(n, [0] * n)


def add_arc(D: Digraph, u: int, v: int) -> Digraph:
    """Return ``D`` plus the arc ``u -> v`` (idempotent)."""
    builder = DigraphBuilder(D.n)
    builder.out[:] = D.out
    return builder.add_arc(u, v).freeze()


def remove_arc(D: Digraph, u: int, v: int) -> Digraph:
    builder = DigraphBuilder(D.n)
    builder.out[:] = D.out
    return builder.remove_arc(u, v).freeze()


def reverse(D: Digraph) -> Digraph:
    return Digraph(D.n, D.inn)


def relabel(D: Digraph, perm: Sequence[int]) -> Digraph:
    """Image of ``D`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(D.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    out = [0] * D.n
    for u in range(D.n):
        row = 0
        for v in members(D.out[u]):
            row |= 1 << perm[v]
        out[perm[u]] = row
    return Digraph(D.n, out)


def induced(D: Digraph, S: VertexSet) -> Digraph:
    """Induced subdigraph on ``S``, relabelled to ``0..|S|-1`` in vertex order."""
    keep = list(members(S & D.vertices))
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for u in keep:
        out.append(vertex_set(index[v] for v in members(D.out[u] & S)))
    return Digraph(len(keep), out)


def out_neighbors(D: Digraph, u: int) -> VertexSet:
    return D.out[D._vertex(u)]


def in_neighbors(D: Digraph, u: int) -> VertexSet:
    return D.inn[D._vertex(u)]


def e(D: Digraph, S: VertexSet, T: VertexSet) -> int:
    """Number of arcs with tail in ``S`` and head in ``T``."""
    return sum((D.out[u] & T).bit_count() for u in members(S & D.vertices))


def matches(D: Digraph, S: VertexSet, T: VertexSet) -> bool:
    """True iff the arcs from ``S`` to ``T`` form a perfect matching ``S -> T``."""
    if S & T:
        raise ValueError("S and T must be disjoint")
    if S.bit_count() != T.bit_count():
        return False
    for u in members(S):
        if (D.out[u] & T).bit_count() != 1:
            return False
    for v in members(T):
        if (D.inn[v] & S).bit_count() != 1:
            return False
    return True


def tau(D: Digraph, v: int) -> int:
    """Number of vertices joined to ``v`` by a 2-cycle."""
    return (D.out[D._vertex(v)] & D.inn[v]).bit_count()


def alpha(D: Digraph, v: int) -> int:
    """Largest number of successors any vertex has outside ``N+(v)``."""
    outside = D.vertices & ~D.out[D._vertex(v)]
    return max((row & outside).bit_count() for row in D.out)
