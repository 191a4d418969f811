"""Executable structural facts about P(2,2)-free and extremal digraphs.

The per-vertex checks in the first group hold for every P(2,2)-free digraph
and double as diagnostics on arbitrary input.  ``audit_extremal_bounds`` and
``audit_outset_structure`` describe digraphs of maximum size only; on other
input they report measurements without passing judgement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .constructions import MIN_ORDER
from .detect import is_free
from .digraph import Digraph, alpha, members, tau


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check.

    ``holds`` is None when the check's hypotheses are not met.  ``witness``
    lists the vertices (and, where noted, counts) exhibiting a violation.
    """

    name: str
    holds: Optional[bool]
    witness: tuple = ()
    note: str = ""

    def render(self) -> str:
        status = {True: "holds", False: "violated", None: "n/a"}[self.holds]
        text = f"{self.name}: {status}"
        if self.witness:
            text += " witness=" + ",".join(str(w) for w in self.witness)
        if self.note:
            text += f" ({self.note})"
        return text


def audit_common_successors(D: Digraph) -> Verdict:
    """Two distinct successors of any ``v`` share no successor other than ``v``.

    Equivalent to P(2,2)-freeness; a violation is returned as ``(v, s1, s2, w)``.
    """
    name = "common-successors"
    for v in range(D.n):
        succ = list(members(D.out[v]))
        for i, s1 in enumerate(succ):
            for s2 in succ[i + 1:]:
                shared = D.out[s1] & D.out[s2] & ~(1 << v)
                if shared:
                    w = (shared & -shared).bit_length() - 1
                    return Verdict(name, False, (v, s1, s2, w))
    return Verdict(name, True)


def audit_out_neighborhood_indegree(D: Digraph, v: int) -> Verdict:
    """Every ``u != v`` has at most one predecessor inside ``N+(v)``.

    A violation is returned as ``(v, u, p1, p2)``.
    """
    name = f"out-neighborhood-indegree[v={v}]"
    nv = D.out[v]
    for u in range(D.n):
        if u == v:
            continue
        preds = D.inn[u] & nv
        if preds.bit_count() > 1:
            p1, p2 = list(members(preds))[:2]
            return Verdict(name, False, (v, u, p1, p2))
    return Verdict(name, True)


def audit_pigeonhole_filter(D: Digraph, v: int, s1: int, s2: int, S: int) -> Verdict:
    """If ``e(s1, S) + e(s2, S) >= |S| + 2`` for successors ``s1, s2`` of ``v``,
    the digraph must contain P(2,2).

    The implication is checked both through an explicit copy ``v -> s_i -> w``
    and through the detector.  When the premise fails the verdict holds
    vacuously.
    """
    if s1 == s2 or not (D.has_arc(v, s1) and D.has_arc(v, s2)):
        raise ValueError("s1 and s2 must be distinct successors of v")
    name = f"pigeonhole[v={v},s1={s1},s2={s2}]"
    total = (D.out[s1] & S).bit_count() + (D.out[s2] & S).bit_count()
    if total < S.bit_count() + 2:
        return Verdict(name, True, note="premise not met")
    shared = D.out[s1] & D.out[s2] & S & ~(1 << v)
    if shared and not is_free(D):
        w = (shared & -shared).bit_length() - 1
        return Verdict(name, True, (v, s1, s2, w), note="premise met; P22 present")
    return Verdict(name, False, (v, s1, s2), note="premise met but no P22 found")


def audit_common_successor_bound(D: Digraph, v: int) -> Verdict:
    """Each ``u`` outside ``N+(v) + v`` shares at most ``d+(v) - tau(v) + 1``
    successors with ``v``.  A violation is returned as ``(v, u, shared)``.
    """
    name = f"common-successor-bound[v={v}]"
    nv = D.out[v]
    bound = nv.bit_count() - tau(D, v) + 1
    for u in members(D.vertices & ~nv & ~(1 << v)):
        shared = (D.out[u] & nv).bit_count()
        if shared > bound:
            return Verdict(name, False, (v, u, shared), note=f"bound {bound}")
    return Verdict(name, True, note=f"bound {bound}")


def audit_nonadjacent_outsets(D: Digraph, v: int) -> Verdict:
    """For an arc ``u1 -> u2`` with both ends outside ``N+(v)``, no arc runs
    from ``N+(v) & N+(u1)`` to ``N+(v) & N+(u2)``.

    A violation is returned as ``(u1, u2, t, s)`` with ``t -> s`` the
    offending arc.
    """
    name = f"nonadjacent-outsets[v={v}]"
    nv = D.out[v]
    outside = D.vertices & ~nv
    for u1 in members(outside):
        for u2 in members(D.out[u1] & outside):
            targets = nv & D.out[u2]
            for t in members(nv & D.out[u1]):
                hit = D.out[t] & targets
                if hit:
                    s = (hit & -hit).bit_length() - 1
                    return Verdict(name, False, (u1, u2, t, s))
    return Verdict(name, True)


def audit_outset_structure(D: Digraph, v: int) -> Verdict:
    """Refinement of the previous check for extremal digraphs.

    Hypotheses: every vertex of ``N+(v)`` has a predecessor inside ``N+(v)``,
    and ``u1 -> u2`` lies outside ``N+(v)`` with both ends of maximum
    out-degree.  Conclusion: both ends see exactly ``N+(v)`` minus one common
    vertex ``u'``, and ``u'`` sends arcs to the rest of ``N+(v)``.
    """
    name = f"outset-structure[v={v}]"
    nv = D.out[v]
    if any(not (D.inn[w] & nv) for w in members(nv)):
        return Verdict(name, None, note="some vertex of N+(v) has no predecessor in N+(v)")
    k = D.max_out_degree()
    outside = D.vertices & ~nv
    checked = 0
    for u1 in members(outside):
        if D.out[u1].bit_count() != k:
            continue
        for u2 in members(D.out[u1] & outside):
            if D.out[u2].bit_count() != k:
                continue
            checked += 1
            a, b = D.out[u1] & nv, D.out[u2] & nv
            missing = nv & ~a
            if a != b or missing.bit_count() != 1:
                return Verdict(name, False, (u1, u2))
            u_prime = missing.bit_length() - 1
            if D.out[u_prime] & nv != nv & ~missing:
                return Verdict(name, False, (u1, u2, u_prime))
    if not checked:
        return Verdict(name, None, note="no arc between maximum-degree vertices outside N+(v)")
    return Verdict(name, True, note=f"{checked} arcs checked")


@dataclass
class AuditReport:
    n: int
    arcs: int
    k: int
    max_degree_vertices: list[int]
    tau: dict[int, int]
    alpha: dict[int, int]
    applicable: bool
    alpha_ok: Optional[bool]
    tau_ok: Optional[bool]
    k_in_range: Optional[bool]
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        flags = [self.alpha_ok, self.tau_ok, self.k_in_range] + [v.holds for v in self.verdicts]
        return all(f is not False for f in flags)

    def render(self) -> str:
        lines = [
            f"order {self.n}, {self.arcs} arcs, max out-degree k = {self.k}",
            f"max-degree vertices: {' '.join(map(str, self.max_degree_vertices))}",
        ]
        for v in self.max_degree_vertices:
            lines.append(f"  v={v}: tau={self.tau[v]} alpha={self.alpha[v]}")
        if self.applicable:
            lines.append(f"alpha <= 1 at max-degree vertices: {_yes(self.alpha_ok)}")
            lines.append(f"tau <= 2 at max-degree vertices: {_yes(self.tau_ok)}")
            lines.append(f"n/2 <= k <= n/2 + 2: {_yes(self.k_in_range)}")
        else:
            lines.append(f"extremal bounds: not applicable below n = {MIN_ORDER}")
        lines.extend(v.render() for v in self.verdicts)
        return "\n".join(lines)

    def key_values(self) -> str:
        pairs = [
            ("n", self.n),
            ("arcs", self.arcs),
            ("k", self.k),
            ("max_degree_vertices", ",".join(map(str, self.max_degree_vertices))),
        ]
        for v in self.max_degree_vertices:
            pairs += [(f"tau.{v}", self.tau[v]), (f"alpha.{v}", self.alpha[v])]
        pairs += [
            ("alpha_ok", _kv(self.alpha_ok)),
            ("tau_ok", _kv(self.tau_ok)),
            ("k_in_range", _kv(self.k_in_range)),
        ]
        for v in self.verdicts:
            pairs.append((v.name, _kv(v.holds)))
        return "\n".join(f"{k}={val}" for k, val in pairs)


def _yes(flag: Optional[bool]) -> str:
    return {True: "yes", False: "NO", None: "n/a"}[flag]


def _kv(flag: Optional[bool]) -> str:
    return {True: "true", False: "false", None: "na"}[flag]


def audit_extremal_bounds(D: Digraph) -> AuditReport:
    """Measure ``k``, ``tau`` and ``alpha`` at every maximum-out-degree vertex.

    The bounds ``alpha <= 1``, ``tau <= 2`` and ``n/2 <= k <= n/2 + 2`` are
    facts about maximum-size free digraphs of order at least 13; below that
    order they are left unjudged.
    """
    k = D.max_out_degree()
    tops = [v for v in range(D.n) if D.out[v].bit_count() == k]
    taus = {v: tau(D, v) for v in tops}
    alphas = {v: alpha(D, v) for v in tops}
    applicable = D.n >= MIN_ORDER
    return AuditReport(
        n=D.n,
        arcs=D.arc_count,
        k=k,
        max_degree_vertices=tops,
        tau=taus,
        alpha=alphas,
        applicable=applicable,
        alpha_ok=all(a <= 1 for a in alphas.values()) if applicable else None,
        tau_ok=all(t <= 2 for t in taus.values()) if applicable else None,
        # 2n <= 4k <= 2n + 8 keeps the comparison in integers
        k_in_range=(2 * D.n <= 4 * k <= 2 * D.n + 8) if applicable else None,
    )


def full_audit(D: Digraph, vertices: Optional[list[int]] = None) -> AuditReport:
    """Extremal bounds plus every per-vertex check at the given vertices
    (default: every vertex of maximum out-degree)."""
    report = audit_extremal_bounds(D)
    if vertices is None:
        vertices = report.max_degree_vertices
    report.verdicts.append(audit_common_successors(D))
    for v in vertices:
        report.verdicts.append(audit_out_neighborhood_indegree(D, v))
        report.verdicts.append(audit_common_successor_bound(D, v))
        report.verdicts.append(audit_nonadjacent_outsets(D, v))
        report.verdicts.append(audit_outset_structure(D, v))
    return report
