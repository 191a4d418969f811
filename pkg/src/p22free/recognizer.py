"""Membership test for EX(n), the P(2,2)-free digraphs of order n with ex(n) arcs.

A digraph qualifies iff it, or its reverse, is isomorphic to a member of one
of the families admitted at its order.  Recognition looks the canonical forms
of the input and of its reverse up in a per-order table holding the canonical
form of every enumerated family template.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .canonical import CanonicalForm, canonical_form
from .constructions import (
    MIN_ORDER,
    DomainError,
    Family,
    FamilyParams,
    all_params,
    build_family,
    ex_formula,
)
from .detect import is_free
from .digraph import Digraph, reverse


class Orientation(enum.Enum):
    AS_IS = "as-is"
    REVERSED = "reversed"

    def __str__(self) -> str:
        return self.value


class Reason(enum.Enum):
    WRONG_ARC_COUNT = "wrong arc count"
    CONTAINS_P22 = "contains P22"
    NO_FAMILY_MATCH = "no family match"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    family: Optional[Family] = None
    orientation: Optional[Orientation] = None
    reason: Optional[Reason] = None
    params: Optional[FamilyParams] = None

    @property
    def is_member(self) -> bool:
        return self.family is not None

    def __str__(self) -> str:
        if self.is_member:
            return f"Member({self.family}, {self.orientation})"
        return f"NotExtremal({self.reason})"


@lru_cache(maxsize=None)
def template_table(n: int) -> dict[CanonicalForm, tuple[FamilyParams, ...]]:
    """Canonical form -> templates with that form, in family order."""
    table: dict[CanonicalForm, list[FamilyParams]] = {}
    for p in all_params(n):
        table.setdefault(canonical_form(build_family(p)), []).append(p)
    return {cf: tuple(ps) for cf, ps in table.items()}


def _check_domain(D: Digraph) -> None:
    if D.n < MIN_ORDER:
        raise DomainError(f"the characterization applies for n >= {MIN_ORDER}, got {D.n}")


def all_matches(D: Digraph) -> list[tuple[FamilyParams, Orientation]]:
    """Every template that ``D`` or its reverse is isomorphic to."""
    _check_domain(D)
    table = template_table(D.n)
    found = [(p, Orientation.AS_IS) for p in table.get(canonical_form(D), ())]
    found += [(p, Orientation.REVERSED) for p in table.get(canonical_form(reverse(D)), ())]
    return sorted(found, key=lambda m: (m[0].family.value, m[1] is Orientation.REVERSED))


def classify(D: Digraph) -> Classification:
    _check_domain(D)
    if D.arc_count != ex_formula(D.n):
        return Classification(reason=Reason.WRONG_ARC_COUNT)
    if not is_free(D):
        return Classification(reason=Reason.CONTAINS_P22)
    table = template_table(D.n)
    forward = table.get(canonical_form(D), ())
    backward = table.get(canonical_form(reverse(D)), ())
    candidates = [(p, Orientation.AS_IS) for p in forward]
    candidates += [(p, Orientation.REVERSED) for p in backward]
    if not candidates:
        return Classification(reason=Reason.NO_FAMILY_MATCH)
    p, orientation = min(
        candidates, key=lambda m: (m[0].family.value, m[1] is Orientation.REVERSED)
    )
    return Classification(family=p.family, orientation=orientation, params=p)


def is_in_EX(D: Digraph) -> bool:
    return classify(D).is_member


def class_count(n: int) -> int:
    """Number of isomorphism classes in EX(n) according to the templates.

    A template and its reverse are counted separately unless isomorphic.
    """
    forms = set(template_table(n))
    for p in all_params(n):
        forms.add(canonical_form(reverse(build_family(p))))
    return len(forms)
