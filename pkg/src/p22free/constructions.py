"""Extremal P(2,2)-free digraphs: the ten families D1..D10 and their sizes.

Every family member of order ``n`` splits its vertices into a first part
``V1 = {0, .., n//2}`` and a second part ``V2`` holding the rest.  Inside
``V1`` sits one of the small gadgets built by :func:`build_S` (a 2-cycle
``y <-> z`` plus an out-star centred at ``z``) or :func:`build_T` (a 2-cycle
whose ends root two depth-2 arborescences), possibly with spare 2-cycles.
All of ``V1`` except one or two designated vertices is matched one-to-one into
``V2``, and each vertex of ``V2`` sends arcs back to all, or nearly all, of
``V1``.

Layouts are canonical: ``y = 0`` and the star centre ``z = 1`` (``y1 = 0``,
``y2 = 1`` for D4 and D5), gadgets are packed from the low indices upward, and
matchings pair the remaining sources with ``V2`` in index order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .digraph import Digraph, DigraphBuilder, vertex_set

MIN_ORDER = 13


class DomainError(ValueError):
    """Input outside the range where the extremal results apply."""


class ParamsError(ValueError):
    """Family parameters that do not describe a member of the family."""


class Family(enum.Enum):
    D1 = 1
    D2 = 2
    D3 = 3
    D4 = 4
    D5 = 5
    D6 = 6
    D7 = 7
    D8 = 8
    D9 = 9
    D10 = 10

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown family {name!r}") from None

    def admits(self, n: int) -> bool:
        """Parity condition on the order."""
        if self in (Family.D1, Family.D2):
            return n % 2 == 1
        if self is Family.D3:
            return n % 4 == 0
        return n % 4 == 2


# A depth-2 arborescence shape: one entry per child of the root giving that
# child's number of leaf children, sorted in non-increasing order.
Shape = tuple[int, ...]


@dataclass(frozen=True)
class FamilyParams:
    """Free parameters of one family member.

    ``c`` counts spare 2-cycles: inside V1 for D1, D4, D5 and D10, inside V2
    for the others (where it is tied to ``v4``).  ``v4`` is the number of
    vertices of V2 lying on 2-cycles for D2, D6 and D7.  ``variant`` selects
    the out-neighbourhood of the special vertex ``x`` of D8.  ``split`` holds
    the orders of the two star gadgets of D5, ``arbor`` the two arborescence
    shapes hanging off the roots of the D4 gadget.
    """

    family: Family
    n: int
    c: int = 0
    v4: int = 0
    variant: Optional[str] = None
    split: Optional[tuple[int, int]] = None
    arbor: Optional[tuple[Shape, Shape]] = None

    @property
    def v1_size(self) -> int:
        return self.n // 2 + 1

    @property
    def v2_size(self) -> int:
        return self.n - self.v1_size

    def describe(self) -> str:
        parts = [f"{self.family}", f"n={self.n}"]
        if self.c:
            parts.append(f"c={self.c}")
        if self.family in (Family.D2, Family.D6, Family.D7):
            parts.append(f"v4={self.v4}")
        if self.variant:
            parts.append(f"variant={self.variant}")
        if self.split:
            parts.append(f"split={self.split[0]}+{self.split[1]}")
        if self.arbor:
            parts.append(f"arbor={list(self.arbor[0])}|{list(self.arbor[1])}")
        return " ".join(parts)

    def as_dict(self) -> dict:
        d = {"family": str(self.family), "n": self.n, "c": self.c, "v4": self.v4}
        if self.variant:
            d["variant"] = self.variant
        if self.split:
            d["split"] = list(self.split)
        if self.arbor:
            d["arbor"] = [list(s) for s in self.arbor]
        return d


def ex_formula(n: int) -> int:
    """Maximum number of arcs of a P(2,2)-free digraph of order ``n >= 13``."""
    if n < MIN_ORDER:
        raise DomainError(f"the closed form holds only for n >= {MIN_ORDER}, got {n}")
    if n % 2:
        return (n * n + 4 * n - 1) // 4
    if (n // 2) % 2 == 0:
        return (n * n + 4 * n) // 4
    return (n * n + 4 * n - 4) // 4


def build_S(order: int) -> Digraph:
    """2-cycle ``0 <-> 1`` plus arcs ``1 -> j`` for every other vertex ``j``."""
    if order < 2:
        raise ParamsError("S needs at least the two vertices of its 2-cycle")
    b = DigraphBuilder(order)
    _add_S(b, 0, 1, range(2, order))
    return b.freeze()


def arborescence_order(shape: Shape) -> int:
    return 1 + len(shape) + sum(shape)


def build_T(left: int | Shape, right: int | Shape) -> Digraph:
    """2-cycle ``0 <-> 1`` with a depth-2 arborescence rooted at each end.

    Sizes count the root.  An integer size uses the star shape (every
    non-root vertex a child of the root); pass explicit shapes for deeper
    arborescences.
    """
    shapes = []
    for side in (left, right):
        if isinstance(side, int):
            if side < 1:
                raise ParamsError("arborescence orders include the root and must be >= 1")
            side = (0,) * (side - 1)
        shapes.append(_check_shape(tuple(side)))
    order = sum(arborescence_order(s) for s in shapes)
    b = DigraphBuilder(order)
    _add_T(b, 0, 1, shapes[0], shapes[1], iter(range(2, order)))
    return b.freeze()


def _check_shape(shape: Shape) -> Shape:
    if any(k < 0 for k in shape):
        raise ParamsError(f"invalid arborescence shape {shape}")
    return tuple(sorted(shape, reverse=True))


def _add_S(b: DigraphBuilder, y: int, z: int, leaves) -> None:
    b.add_2cycle(y, z)
    for leaf in leaves:
        b.add_arc(z, leaf)


def _add_T(b: DigraphBuilder, y1: int, y2: int, shape1: Shape, shape2: Shape, fresh) -> None:
    b.add_2cycle(y1, y2)
    for root, shape in ((y1, shape1), (y2, shape2)):
        for grandchildren in shape:
            child = next(fresh)
            b.add_arc(root, child)
            for _ in range(grandchildren):
                b.add_arc(child, next(fresh))


def arborescence_shapes(order: int) -> list[Shape]:
    """All depth-2 arborescence shapes on ``order`` vertices, root included."""
    shapes = []
    rest = order - 1
    for children in range(rest + 1):
        for part in _partitions(rest - children, children, rest - children):
            shapes.append(tuple(part) + (0,) * (children - len(part)))
    return shapes


def _partitions(total: int, max_parts: int, max_part: int) -> list[list[int]]:
    if total == 0:
        return [[]]
    if max_parts == 0:
        return []
    found = []
    for first in range(min(total, max_part), 0, -1):
        for tail in _partitions(total - first, max_parts - 1, first):
            found.append([first] + tail)
    return found


def _invalid(p: FamilyParams, why: str) -> ParamsError:
    return ParamsError(f"{p.describe()}: {why}")


def validate(p: FamilyParams) -> None:
    n, m, r = p.n, p.v1_size, p.v2_size
    if n < MIN_ORDER:
        raise DomainError(f"families are defined here for n >= {MIN_ORDER}, got {n}")
    if not p.family.admits(n):
        raise _invalid(p, "order has the wrong parity for this family")
    if p.c < 0 or p.v4 < 0:
        raise _invalid(p, "negative parameter")
    f = p.family
    if f is not Family.D8 and p.variant is not None:
        raise _invalid(p, "variant applies to D8 only")
    if f is not Family.D5 and p.split is not None:
        raise _invalid(p, "split applies to D5 only")
    if f is not Family.D4 and p.arbor is not None:
        raise _invalid(p, "arbor applies to D4 only")
    if f not in (Family.D2, Family.D6, Family.D7) and p.v4:
        raise _invalid(p, "v4 applies to D2, D6 and D7 only")

    if f is Family.D1:
        if 2 * p.c > m - 2:
            raise _invalid(p, "too many 2-cycles for V1")
    elif f is Family.D10:
        # w must be a leaf of the star, so the star keeps at least one leaf
        if 2 * p.c > m - 3:
            raise _invalid(p, "too many 2-cycles for V1")
    elif f in (Family.D2, Family.D6, Family.D7):
        low = 2 if f is Family.D2 else 0
        if p.v4 % 2 or p.v4 < low:
            raise _invalid(p, f"v4 must be even and >= {low}")
        if p.c != p.v4 // 2:
            raise _invalid(p, "c must equal v4/2")
        if f is Family.D6:
            if p.v4 > r:
                raise _invalid(p, "v4 exceeds |V2|")
        elif r - p.v4 < 1:
            raise _invalid(p, "V3 must be nonempty")
    elif f is Family.D3:
        if p.c != n // 4 - 1:
            raise _invalid(p, "D3 has exactly n/4 - 1 2-cycles in V2")
    elif f is Family.D4:
        if p.arbor is None:
            raise _invalid(p, "D4 needs two arborescence shapes")
        t = sum(arborescence_order(_check_shape(s)) for s in p.arbor)
        if t + 2 * p.c != m:
            raise _invalid(p, "gadget and 2-cycles must cover V1 exactly")
    elif f is Family.D5:
        if p.split is None or min(p.split) < 2:
            raise _invalid(p, "D5 needs two star gadgets of order >= 2")
        if sum(p.split) + 2 * p.c != m:
            raise _invalid(p, "gadgets and 2-cycles must cover V1 exactly")
    elif f is Family.D8:
        if p.variant not in ("a", "b"):
            raise _invalid(p, "D8 variant must be 'a' or 'b'")
        if p.c != (r - 2) // 2:
            raise _invalid(p, "D8 has exactly (|V2| - 2)/2 2-cycles in V2")
    elif f is Family.D9:
        if p.c != (r - 4) // 2:
            raise _invalid(p, "D9 has exactly (|V2| - 4)/2 2-cycles in V2")


def enumerate_params(family: Family, n: int) -> list[FamilyParams]:
    """Every admissible parameter tuple of ``family`` at order ``n``."""
    if n < MIN_ORDER or not family.admits(n):
        return []
    m, r = n // 2 + 1, n - (n // 2 + 1)
    P = FamilyParams
    f = family
    if f is Family.D1:
        return [P(f, n, c=c) for c in range((m - 2) // 2 + 1)]
    if f is Family.D10:
        return [P(f, n, c=c) for c in range((m - 3) // 2 + 1)]
    if f is Family.D2:
        return [P(f, n, c=k // 2, v4=k) for k in range(2, r, 2)]
    if f is Family.D6:
        return [P(f, n, c=k // 2, v4=k) for k in range(0, r + 1, 2)]
    if f is Family.D7:
        return [P(f, n, c=k // 2, v4=k) for k in range(0, r, 2)]
    if f is Family.D3:
        return [P(f, n, c=n // 4 - 1)]
    if f is Family.D8:
        return [P(f, n, c=(r - 2) // 2, variant=v) for v in ("a", "b")]
    if f is Family.D9:
        return [P(f, n, c=(r - 4) // 2)]
    if f is Family.D5:
        found = []
        for c in range((m - 4) // 2 + 1):
            t = m - 2 * c
            for s1 in range(2, t // 2 + 1):
                found.append(P(f, n, c=c, split=(s1, t - s1)))
        return found
    # D4: swapping the roots is an isomorphism, so shape pairs are unordered
    found = []
    for c in range((m - 2) // 2 + 1):
        t = m - 2 * c
        for left in range(1, t // 2 + 1):
            right = t - left
            for s1 in arborescence_shapes(left):
                for s2 in arborescence_shapes(right):
                    if left == right and s2 < s1:
                        continue
                    found.append(P(f, n, c=c, arbor=(s1, s2)))
    return found


def all_params(n: int) -> list[FamilyParams]:
    return [p for f in Family for p in enumerate_params(f, n)]


@lru_cache(maxsize=None)
def build_family(p: FamilyParams) -> Digraph:
    validate(p)
    return _BUILDERS[p.family](p)


def _matching(b: DigraphBuilder, sources, targets) -> None:
    sources, targets = list(sources), list(targets)
    assert len(sources) == len(targets), (sources, targets)
    for s, t in zip(sources, targets):
        b.add_arc(s, t)


def _star_with_2cycles(p: FamilyParams, b: DigraphBuilder) -> None:
    """V1 = S(y, z) on the low indices followed by ``p.c`` 2-cycles."""
    m = p.v1_size
    s = m - 2 * p.c
    _add_S(b, 0, 1, range(2, s))
    for i in range(s, m, 2):
        b.add_2cycle(i, i + 1)


def _build_d1(p: FamilyParams) -> Digraph:
    n, m = p.n, p.v1_size
    b = DigraphBuilder(n)
    _star_with_2cycles(p, b)
    V1 = vertex_set(range(m))
    _matching(b, range(1, m), range(m, n))
    for u in range(m, n):
        b.add_arcs_to(u, V1)
    return b.freeze()


def _build_d10(p: FamilyParams, w: int = 2) -> Digraph:
    n, m = p.n, p.v1_size
    b = DigraphBuilder(n)
    _star_with_2cycles(p, b)
    V1 = vertex_set(range(m))
    _matching(b, (u for u in range(1, m) if u != w), range(m, n))
    for u in range(m, n):
        b.add_arcs_to(u, V1)
    return b.freeze()


def _build_split_v2(p: FamilyParams, exclude: tuple[int, ...]) -> Digraph:
    """D2, D6, D7: V1 = S(y, z); V2 = V3 (independent) then V4 (2-cycles).

    V3 sends arcs to all of V1, V4 to all of V1 except ``z``.  The sources of
    the matching are V1 minus ``exclude``; ``z`` (when it is a source) comes
    first and therefore lands in V3.
    """
    n, m = p.n, p.v1_size
    b = DigraphBuilder(n)
    _add_S(b, 0, 1, range(2, m))
    V1 = vertex_set(range(m))
    v4_start = n - p.v4
    for i in range(v4_start, n, 2):
        b.add_2cycle(i, i + 1)
    _matching(b, (u for u in range(m) if u not in exclude), range(m, n))
    for u in range(m, n):
        b.add_arcs_to(u, V1 if u < v4_start else V1 & ~(1 << 1))
    return b.freeze()


def _build_d2(p: FamilyParams) -> Digraph:
    return _build_split_v2(p, exclude=(0,))


def _build_d6(p: FamilyParams) -> Digraph:
    return _build_split_v2(p, exclude=(0, 1))


def _build_d7(p: FamilyParams, x: int = 2) -> Digraph:
    return _build_split_v2(p, exclude=(0, x))


def _build_broadcast_v(p: FamilyParams, special: int) -> tuple[DigraphBuilder, int]:
    """Common core of D3, D8, D9.

    V1 = S(y, z); ``v = m`` is the first vertex of V2 and receives ``z -> v``
    besides its matched predecessor (the leaf 2).  V2 then holds ``special``
    further vertices with bespoke rules, followed by 2-cycles.  Returns the
    builder and the index of the first 2-cycle vertex.
    """
    n, m = p.n, p.v1_size
    b = DigraphBuilder(n)
    _add_S(b, 0, 1, range(2, m))
    v = m
    b.add_arc(1, v)
    _matching(b, range(2, m), range(m, n))
    V1 = vertex_set(range(m))
    b.add_arcs_to(v, V1)
    first_cycle = m + 1 + special
    for i in range(first_cycle, n, 2):
        b.add_2cycle(i, i + 1)
        b.add_arcs_to(i, V1 & ~(1 << 1))
        b.add_arcs_to(i + 1, V1 & ~(1 << 1))
    return b, first_cycle


def _build_d3(p: FamilyParams) -> Digraph:
    b, _ = _build_broadcast_v(p, special=0)
    return b.freeze()


def _build_d8(p: FamilyParams) -> Digraph:
    m = p.v1_size
    b, _ = _build_broadcast_v(p, special=1)
    x = m + 1
    V1 = vertex_set(range(m))
    # variant b drops the matched predecessor of v instead of z
    dropped = 1 if p.variant == "a" else 2
    b.add_arcs_to(x, V1 & ~(1 << dropped))
    return b.freeze()


def _build_d9(p: FamilyParams) -> Digraph:
    m = p.v1_size
    b, _ = _build_broadcast_v(p, special=3)
    x, x1, x2 = m + 1, m + 2, m + 3
    V1 = vertex_set(range(m))
    b.add_arc(x, x1)
    b.add_2cycle(x1, x2)
    x2_pred = x2 - m + 2
    b.add_arcs_to(x, V1 & ~(1 << 1) & ~(1 << x2_pred))
    for u in (x1, x2):
        b.add_arcs_to(u, V1 & ~(1 << 1))
    return b.freeze()


def _build_gadget_v1(p: FamilyParams, b: DigraphBuilder) -> None:
    """V1 layout for D4 and D5: roots y1 = 0, y2 = 1, then gadget bodies, then 2-cycles."""
    m = p.v1_size
    if p.family is Family.D4:
        s1, s2 = (_check_shape(s) for s in p.arbor)
        _add_T(b, 0, 1, s1, s2, iter(range(2, m)))
        used = arborescence_order(s1) + arborescence_order(s2)
    else:
        s1, s2 = p.split
        z1, z2 = 2, 3
        b.add_2cycle(0, z1)
        b.add_2cycle(1, z2)
        nxt = 4
        for z, size in ((z1, s1), (z2, s2)):
            for leaf in range(nxt, nxt + size - 2):
                b.add_arc(z, leaf)
            nxt += size - 2
        used = s1 + s2
    for i in range(used, m, 2):
        b.add_2cycle(i, i + 1)


def _build_d4_d5(p: FamilyParams) -> Digraph:
    n, m = p.n, p.v1_size
    b = DigraphBuilder(n)
    _build_gadget_v1(p, b)
    V1 = vertex_set(range(m))
    _matching(b, range(2, m), range(m, n))
    for u in range(m, n):
        b.add_arcs_to(u, V1)
    return b.freeze()


_BUILDERS = {
    Family.D1: _build_d1,
    Family.D2: _build_d2,
    Family.D3: _build_d3,
    Family.D4: _build_d4_d5,
    Family.D5: _build_d4_d5,
    Family.D6: _build_d6,
    Family.D7: _build_d7,
    Family.D8: _build_d8,
    Family.D9: _build_d9,
    Family.D10: _build_d10,
}


def default_params(n: int) -> FamilyParams:
    """One representative member for the parity class of ``n``."""
    if n < MIN_ORDER:
        raise DomainError(f"families are defined here for n >= {MIN_ORDER}, got {n}")
    family = Family.D1 if n % 2 else Family.D3 if n % 4 == 0 else Family.D4
    return enumerate_params(family, n)[0]


REMARK_ARCS = ((1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5))


def remark_digraph() -> Digraph:
    """Order-5 free digraph with 12 arcs (vertices 1..5 relabelled to 0..4)."""
    b = DigraphBuilder(5)
    for u, v in REMARK_ARCS:
        b.add_2cycle(u - 1, v - 1)
    return b.freeze()
