"""Crossed modules of groups: construction, axiom reports, homotopy groups.

A crossed module is a homomorphism delta: M -> P together with a right
P-action on M satisfying

    CM1:  delta(m^p) = -p + delta(m) + p
    CM2:  -n + m + n = m^delta(n)

Both rules are checked over all pairs; nothing is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CM1Violation,
    CM2Violation,
    InternalInvariantBroken,
    NotNormal,
    Violation,
    XModError,
)
from .groups import (
    FiniteGroup,
    GroupAction,
    Homomorphism,
    Subgroup,
    group_action,
    homomorphism,
    image,
    kernel,
    make_group,
    quotient,
)


@dataclass(frozen=True, eq=False)
class CrossedModule:
    """A validated crossed module (delta: M -> P, action of P on M)."""

    M: FiniteGroup
    P: FiniteGroup
    delta: Homomorphism
    action: GroupAction
    name: str | None = None

    def act(self, m: str, p: str) -> str:
        return self.action.act(m, p)

    def to_candidate(self) -> XModCandidate:
        return XModCandidate.from_xmod(self)


def make_xmod(M: FiniteGroup, P: FiniteGroup, delta: Homomorphism,
              action: GroupAction, name=None) -> CrossedModule:
    """Assemble a crossed module, checking CM1 and CM2 exhaustively."""
    if delta.source is not M or delta.target is not P:
        raise ValueError("delta must map M into P")
    if action.actor is not P or action.space is not M:
        raise ValueError("action must let P act on M")
    for m in M:
        for p in P:
            if delta(action.act(m, p)) != P.conj(delta(m), p):
                raise CM1Violation(m, p)
    for m in M:
        for n in M:
            if M.conj(m, n) != action.act(m, delta(n)):
                raise CM2Violation(m, n)
    return CrossedModule(M, P, delta, action, name=name)


@dataclass
class XModCandidate:
    """Unvalidated crossed-module data, in the same shape as the file format.

    Used by the report-valued checker and by mutation tests; nothing here
    is trusted, including the group tables.
    """

    m_elements: list
    m_table: list
    m_identity: str
    p_elements: list
    p_table: list
    p_identity: str
    delta: dict
    action: dict  # p -> {m -> m^p}
    name: str | None = None

    @classmethod
    def from_xmod(cls, x: CrossedModule) -> XModCandidate:
        m_table = [[x.M.add(a, b) for b in x.M] for a in x.M]
        p_table = [[x.P.add(a, b) for b in x.P] for a in x.P]
        action = {p: {m: x.act(m, p) for m in x.M} for p in x.P}
        return cls(
            m_elements=list(x.M.elements),
            m_table=m_table,
            m_identity=x.M.identity,
            p_elements=list(x.P.elements),
            p_table=p_table,
            p_identity=x.P.identity,
            delta={m: x.delta(m) for m in x.M},
            action=action,
            name=x.name,
        )

    def clone(self) -> XModCandidate:
        return XModCandidate(
            m_elements=list(self.m_elements),
            m_table=[list(row) for row in self.m_table],
            m_identity=self.m_identity,
            p_elements=list(self.p_elements),
            p_table=[list(row) for row in self.p_table],
            p_identity=self.p_identity,
            delta=dict(self.delta),
            action={p: dict(row) for p, row in self.action.items()},
            name=self.name,
        )


def _try_group(elements, table, identity, label: str, report: list[Violation]):
    try:
        return make_group(elements, table, identity)
    except (XModError, ValueError) as exc:
        witness = getattr(exc, "witness", ())
        report.append(Violation(f"group:{label}", str(exc), witness))
        return None


def check_axioms(candidate: XModCandidate | CrossedModule) -> list[Violation]:
    """Full list of broken laws in the candidate; empty iff it is valid.

    Accepts unvalidated data: group tables, the boundary map and the
    action table are all re-checked from scratch.
    """
    if isinstance(candidate, CrossedModule):
        candidate = candidate.to_candidate()
    report: list[Violation] = []
    M = _try_group(candidate.m_elements, candidate.m_table, candidate.m_identity, "M", report)
    P = _try_group(candidate.p_elements, candidate.p_table, candidate.p_identity, "P", report)
    if M is None or P is None:
        return report

    delta = candidate.delta
    delta_ok = True
    for m in M:
        value = delta.get(m)
        if value is None:
            report.append(Violation("delta", f"no image for {m}", (m,)))
            delta_ok = False
        elif value not in P:
            report.append(Violation("delta", f"image {value!r} of {m} is not in P", (m, value)))
            delta_ok = False
    if delta_ok:
        for m in M:
            for n in M:
                if delta[M.add(m, n)] != P.add(delta[m], delta[n]):
                    report.append(Violation(
                        "delta", f"delta({m} + {n}) != delta({m}) + delta({n})", (m, n)))

    act = candidate.action
    action_ok = True
    for p in P:
        row = act.get(p)
        if row is None:
            report.append(Violation("action", f"no entries for actor {p}", (p,)))
            action_ok = False
            continue
        for m in M:
            value = row.get(m)
            if value is None:
                report.append(Violation("action", f"no entry for ({m})^{p}", (m, p)))
                action_ok = False
            elif value not in M:
                report.append(Violation(
                    "action", f"({m})^{p} = {value!r} is not in M", (m, p, value)))
                action_ok = False
    if action_ok:
        for m in M:
            if act[P.identity][m] != m:
                report.append(Violation("action", f"({m})^0 != {m}", (m,)))
        for m in M:
            for p in P:
                for q in P:
                    if act[q][act[p][m]] != act[P.add(p, q)][m]:
                        report.append(Violation(
                            "action", f"(({m})^{p})^{q} != ({m})^({p}+{q})", (m, p, q)))
        for m in M:
            for n in M:
                for p in P:
                    if act[p][M.add(m, n)] != M.add(act[p][m], act[p][n]):
                        report.append(Violation(
                            "action", f"({m}+{n})^{p} != ({m})^{p} + ({n})^{p}", (m, n, p)))

    if delta_ok and action_ok:
        for m in M:
            for p in P:
                if delta[act[p][m]] != P.conj(delta[m], p):
                    report.append(Violation(
                        "cm1", f"delta(({m})^{p}) != -{p} + delta({m}) + {p}", (m, p)))
        for m in M:
            for n in M:
                if M.conj(m, n) != act[delta[n]][m]:
                    report.append(Violation(
                        "cm2", f"-{n} + {m} + {n} != ({m})^delta({n})", (m, n)))
    return report


def xmod_from_candidate(candidate: XModCandidate) -> CrossedModule:
    """Validate a candidate the strict way, raising on the first failure."""
    M = make_group(candidate.m_elements, candidate.m_table, candidate.m_identity)
    P = make_group(candidate.p_elements, candidate.p_table, candidate.p_identity)
    delta = homomorphism(M, P, candidate.delta)
    table = {(m, p): candidate.action[p][m] for p in P for m in M}
    action = group_action(P, M, table)
    return make_xmod(M, P, delta, action, name=candidate.name)


@dataclass(frozen=True, eq=False)
class HomotopyData:
    """pi1 = Cok(delta), pi2 = Ker(delta), and the induced pi1-action on pi2.

    ``projection`` is the quotient map P -> pi1 and ``kernel_subgroup``
    the kernel inside M; both are needed by downstream constructions.
    """

    pi1: FiniteGroup
    pi2: FiniteGroup
    g_action: GroupAction
    projection: Homomorphism
    kernel_subgroup: Subgroup


@lru_cache(maxsize=None)
def homotopy(x: CrossedModule) -> HomotopyData:
    """Homotopy groups of the classifying space: Cok and Ker of delta.

    Normality of the image, centrality of the kernel and representative
    independence of the induced action are consequences of the axioms;
    each is re-verified and a failure raises InternalInvariantBroken.
    """
    img = image(x.delta)
    try:
        pi1, projection = quotient(x.P, img, name="pi1")
    except NotNormal as exc:
        raise InternalInvariantBroken(
            f"image of delta is not normal: {exc}", exc.witness) from exc
    ker = kernel(x.delta)
    for k in ker:
        for m in x.M:
            if x.M.add(k, m) != x.M.add(m, k):
                raise InternalInvariantBroken(
                    f"kernel element {k} is not central in M", (k, m))
    pi2 = ker.as_group(name="pi2")
    for p in x.P:
        rep = projection(p)
        for k in ker:
            if x.act(k, p) != x.act(k, rep):
                raise InternalInvariantBroken(
                    f"pi1-action on pi2 depends on the representative of {rep}", (k, p, rep))
    table = {(k, rep): x.act(k, rep) for k in pi2 for rep in pi1}
    g_action = group_action(pi1, pi2, table)
    return HomotopyData(pi1, pi2, g_action, projection, ker)
