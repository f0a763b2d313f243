"""Loop-space structure of a crossed module.

For a base element a of P, the vertex group P(a) consists of the pairs
(m, p) with delta(m) = [a, p] = -a - p + a + p under the composition
(n, q) + (m, p) = (m + n^p, q + p), and the loop crossed module at a is

    delta_a: M -> P(a),  delta_a(m) = (-m^a + m, delta m),  n^(m,p) = n^p.

The groupoid-level model has objects P, morphisms all triples (m, p, a)
with source p + a + delta(m) - p and target a, and fibre at a a copy of
M written as pairs (m, a).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import CodomainViolation, InternalInvariantBroken, XModError
from .groups import (
    FiniteGroup,
    GroupAction,
    Homomorphism,
    conjugacy_classes,
    group_action,
    homomorphism,
    image,
    kernel,
    make_group,
    pair_name,
    quotient,
    triple_name,
)
from .groupoids import (
    GroupoidXMod,
    GXModMorphism,
    as_groupoid_xmod,
    make_groupoid,
    make_gxm,
    make_gxm_morphism,
    restrict_to_object,
)
from .xmod import CrossedModule, homotopy, make_xmod


@dataclass(frozen=True)
class LoopMorphism:
    """A triple (m, p, a): a morphism of the loop groupoid with target a."""

    m: str
    p: str
    a: str
    source: str
    target: str

    @property
    def name(self) -> str:
        return triple_name(self.m, self.p, self.a)


def loop_morphism(x: CrossedModule, m: str, p: str, a: str) -> LoopMorphism:
    source = x.P.sub(x.P.add(x.P.add(p, a), x.delta(m)), p)
    return LoopMorphism(m, p, a, source, a)


@dataclass(frozen=True, eq=False)
class LoopData:
    """P(a), delta_a and the P(a)-action on M for one base element a."""

    base: str
    Pa: FiniteGroup
    delta_a: Homomorphism
    action: GroupAction
    pairs: dict  # element name -> (m, p)


@lru_cache(maxsize=None)
def loop_data(x: CrossedModule, a: str) -> LoopData:
    M, P = x.M, x.P
    P.index(a)
    pairs = [(m, p) for m in M for p in P if x.delta(m) == P.commutator(a, p)]
    names = [pair_name(m, p) for m, p in pairs]
    by_pair = {pair: name for pair, name in zip(pairs, names)}
    table = []
    for n, q in pairs:
        row = []
        for m, p in pairs:
            composite = (M.add(m, x.act(n, p)), P.add(q, p))
            value = by_pair.get(composite)
            if value is None:
                raise InternalInvariantBroken(
                    f"P({a}) is not closed under composition", (n, q, m, p))
            row.append(value)
        table.append(row)
    identity = pair_name(M.identity, P.identity)
    Pa = make_group(names, table, identity, name=f"P({a})")
    mapping = {}
    for m in M:
        value = pair_name(M.add(M.neg(x.act(m, a)), m), x.delta(m))
        if value not in Pa:
            raise CodomainViolation(m, value)
        mapping[m] = value
    delta_a = homomorphism(M, Pa, mapping)
    act_table = {(n, pair_name(m, p)): x.act(n, p) for n in M for m, p in pairs}
    action = group_action(Pa, M, act_table)
    return LoopData(a, Pa, delta_a, action, {name: pair for pair, name in by_pair.items()})


def components(x: CrossedModule) -> list[list[str]]:
    """Equivalence classes of P under b ~ p + a + delta(m) - p, by orbit closure.

    The number of classes is cross-checked against the count of conjugacy
    classes of Cok(delta), computed independently.
    """
    P = x.P
    reachable: dict[str, set[str]] = {}
    for a in P:
        block = {a}
        while True:
            grown = set(block)
            for b in block:
                for m in x.M:
                    for p in P:
                        grown.add(P.sub(P.add(P.add(p, b), x.delta(m)), p))
            if grown == block:
                break
            block = grown
        reachable[a] = block
    seen: set[str] = set()
    classes: list[list[str]] = []
    for a in P:
        if a in seen:
            continue
        block = P.sorted_elements(reachable[a])
        classes.append(block)
        seen.update(block)
    expected = len(conjugacy_classes(homotopy(x).pi1))
    if len(classes) != expected:
        raise InternalInvariantBroken(
            f"{len(classes)} components but {expected} conjugacy classes in pi1",
            (len(classes), expected))
    return classes


def group_Pa(x: CrossedModule, a: str) -> FiniteGroup:
    """The vertex group P(a) as an explicit table group on pair elements."""
    return loop_data(x, a).Pa


def delta_a(x: CrossedModule, a: str) -> Homomorphism:
    """The boundary m |-> (-m^a + m, delta m) into P(a)."""
    return loop_data(x, a).delta_a


def loop_xmod_at(x: CrossedModule, a: str) -> CrossedModule:
    """The loop crossed module at a; its axioms are re-verified on assembly."""
    data = loop_data(x, a)
    try:
        return make_xmod(x.M, data.Pa, data.delta_a, data.action,
                         name=f"{x.name or 'xmod'}-loop[{a}]")
    except XModError as exc:
        raise InternalInvariantBroken(
            f"loop crossed module at {a} fails an axiom: {exc}", exc.witness) from exc


@lru_cache(maxsize=None)
def loop_gpd_xmod(x: CrossedModule) -> GroupoidXMod:
    """The full loop crossed module over a groupoid.

    Objects are the elements of P.  The composite of u = (n, q, b) followed
    by v = (m, p, a) is (m + n^p, q + p, a), defined exactly when b is the
    source of v, equivalently b^p = a + delta(m).
    """
    M, P = x.M, x.P
    triples = [loop_morphism(x, m, p, a) for m, p, a in product(M, P, P)]
    by_name = {t.name: t for t in triples}
    names = [t.name for t in triples]
    source = {t.name: t.source for t in triples}
    target = {t.name: t.target for t in triples}
    compose = {}
    for u in triples:
        for v in triples:
            if u.target != v.source:
                continue
            w = triple_name(M.add(v.m, x.act(u.m, v.p)), P.add(u.p, v.p), v.a)
            compose[(u.name, v.name)] = w
    identities = {a: triple_name(M.identity, P.identity, a) for a in P}
    base = make_groupoid(tuple(P.elements), names, source, target, compose, identities)
    fibres = {}
    for a in P:
        elems = [pair_name(m, a) for m in M]
        table = [[pair_name(M.add(m, n), a) for n in M] for m in M]
        fibres[a] = make_group(elems, table, pair_name(M.identity, a), name=f"M@{a}")
    boundary = {pair_name(m, a): triple_name(M.add(M.neg(x.act(m, a)), m), x.delta(m), a)
                for a in P for m in M}
    action = {}
    for t in triples:
        for n in M:
            action[(pair_name(n, t.source), t.name)] = pair_name(x.act(n, t.p), t.a)
    return make_gxm(base, fibres, boundary, action)


def theta(x: CrossedModule, a: str) -> GXModMorphism:
    """The isomorphism from the loop groupoid restricted at a onto L[a].

    theta sends the triple (m, p, a) to the pair (m, p) and the fibre
    element (m, a) to m; it is validated as a structure-preserving
    bijection in every dimension.
    """
    gxm = loop_gpd_xmod(x)
    restricted = restrict_to_object(gxm, a)
    target_cm = loop_xmod_at(x, a)
    data = loop_data(x, a)
    src = as_groupoid_xmod(restricted)
    tgt = as_groupoid_xmod(target_cm)
    mor_map = {triple_name(m, p, a): pair_name(m, p) for m, p in data.pairs.values()}
    dim2_map = {pair_name(m, a): m for m in x.M}
    f = make_gxm_morphism(src, tgt, {"*": "*"}, mor_map, dim2_map)
    if not f.is_isomorphism():
        raise InternalInvariantBroken(f"theta at {a} is not bijective", (a,))
    return f


@dataclass(frozen=True, eq=False)
class LoopHomotopy:
    """pi1 and pi2 of the loop-space component at a."""

    pi1: FiniteGroup
    pi2: FiniteGroup
    projection: Homomorphism  # P(a) -> pi1


def pi_loop(x: CrossedModule, a: str) -> LoopHomotopy:
    """Cok and Ker of delta_a; the kernel is checked to equal the fixed points.

    The fixed-point identity Ker(delta_a) = {k in Ker(delta) : k^a = k}
    holds elementwise and is asserted, not assumed.
    """
    data = loop_data(x, a)
    pi1, projection = quotient(data.Pa, image(data.delta_a), name=f"pi1(L,{a})")
    ker = kernel(data.delta_a)
    pi2 = ker.as_group(name=f"pi2(L,{a})")
    fixed = {k for k in kernel(x.delta) if x.act(k, a) == k}
    if set(pi2.elements) != fixed:
        raise InternalInvariantBroken(
            f"Ker(delta_{a}) differs from the fixed points of {a}",
            tuple(sorted(set(pi2.elements) ^ fixed)))
    return LoopHomotopy(pi1, pi2, projection)
