"""Detection of P(2,2): two directed 2-paths u1->u2->u4 and u1->u3->u4.

A digraph contains P(2,2) exactly when some ordered pair ``(a, b)`` with
``a != b`` has at least two "middles" ``m`` with ``a -> m -> b``.  The middles
of a pair are ``out[a] & inn[b]``, so every check is a row intersection plus a
popcount.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .digraph import Digraph, members


class ContractError(ValueError):
    """Raised when a caller violates a documented precondition."""


class P22Witness(NamedTuple):
    u1: int
    u2: int
    u3: int
    u4: int

    def is_valid_for(self, D: Digraph) -> bool:
        u1, u2, u3, u4 = self
        return (
            u1 != u4
            and u2 != u3
            and D.has_arc(u1, u2)
            and D.has_arc(u2, u4)
            and D.has_arc(u1, u3)
            and D.has_arc(u3, u4)
        )


def _middles(D: Digraph, a: int, b: int) -> int:
    return D.out[a] & D.inn[b] & ~((1 << a) | (1 << b))


def find_witness(D: Digraph) -> Optional[P22Witness]:
    """Lexicographically first witness by ``(u1, u4)``, then by middle pair."""
    out, inn = D.out, D.inn
    for a in range(D.n):
        row = out[a]
        if row.bit_count() < 2:
            continue
        for b in range(D.n):
            if a == b:
                continue
            mids = row & inn[b] & ~(1 << b)
            if mids.bit_count() >= 2:
                m1, m2 = list(members(mids))[:2]
                return P22Witness(a, m1, m2, b)
    return None


def is_free(D: Digraph) -> bool:
    out, inn = D.out, D.inn
    for a in range(D.n):
        row = out[a]
        if row.bit_count() < 2:
            continue
        for b in range(D.n):
            if a != b and (row & inn[b]).bit_count() >= 2:
                return False
    return True


def count_pairs_with_multi_middles(D: Digraph) -> int:
    """Number of ordered pairs ``(a, b)`` joined by two or more 2-paths."""
    return sum(
        1
        for a in range(D.n)
        for b in range(D.n)
        if a != b and _middles(D, a, b).bit_count() >= 2
    )


def stays_free_after(D: Digraph, a: int, b: int) -> bool:
    """Whether the free digraph ``D`` stays free after adding ``a -> b``.

    Only copies of P(2,2) that use the new arc are examined: as a first arc
    ``a -> b -> w`` competing with some other ``a -> m -> w``, or as a second
    arc ``p -> a -> b`` competing with some other ``p -> m -> b``.
    """
    if a == b:
        raise ContractError("a loop can never be added")
    if not (0 <= a < D.n and 0 <= b < D.n):
        raise ContractError(f"arc ({a}, {b}) out of range")
    if D.has_arc(a, b):
        raise ContractError(f"arc ({a}, {b}) already present")
    return _stays_free(D.out, D.inn, a, b)


def _stays_free(out, inn, a: int, b: int) -> bool:
    others = out[a] & ~(1 << b)
    for w in members(out[b] & ~(1 << a)):
        if others & inn[w]:
            return False
    toward_b = inn[b] & ~(1 << a)
    for p in members(inn[a] & ~(1 << b)):
        if out[p] & toward_b:
            return False
    return True
