"""Finite groupoids and crossed modules over groupoids, all extensional.

Composition is additive and reads left to right: for p: x -> y and
q: y -> z the composite p + q: x -> z is defined exactly when
target(p) = source(q).  Morphisms are stored as full tables so that
every law can be checked by enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CM1Violation,
    CM2Violation,
    InvalidAction,
    InvalidGroupoid,
    InvalidGroupoidXMod,
    InvalidMorphism,
    UnknownObject,
    Violation,
)
from .groups import (
    FiniteGroup,
    Homomorphism,
    group_action,
    homomorphism,
    image,
    kernel,
    make_group,
    quotient,
)
from .xmod import CrossedModule, make_xmod


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """A finite groupoid with an explicit partial composition table."""

    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    source: dict
    target: dict
    compose: dict  # (u: x->y, v: y->z) -> u + v : x->z
    identities: dict
    inverses: dict

    def star(self, x: str) -> list[str]:
        """Morphisms whose source is x."""
        if x not in self.objects:
            raise UnknownObject(x)
        return [u for u in self.morphisms if self.source[u] == x]

    def vertex_morphisms(self, x: str) -> list[str]:
        if x not in self.objects:
            raise UnknownObject(x)
        return [u for u in self.morphisms if self.source[u] == x and self.target[u] == x]

    def compose2(self, u: str, v: str) -> str:
        value = self.compose.get((u, v))
        if value is None:
            raise InvalidGroupoid("composition-undefined", (u, v))
        return value

    def inverse(self, u: str) -> str:
        return self.inverses[u]


def make_groupoid(objects, morphisms, source, target, compose, identities) -> FiniteGroupoid:
    """Build a groupoid, checking every law exhaustively."""
    objects = tuple(objects)
    morphisms = tuple(morphisms)
    if len(set(objects)) != len(objects):
        raise InvalidGroupoid("objects-distinct", (objects,))
    if len(set(morphisms)) != len(morphisms):
        raise InvalidGroupoid("morphisms-distinct", (morphisms,))
    object_set = set(objects)
    morphism_set = set(morphisms)
    for u in morphisms:
        if source.get(u) not in object_set:
            raise InvalidGroupoid("source", (u,))
        if target.get(u) not in object_set:
            raise InvalidGroupoid("target", (u,))
    for x in objects:
        e = identities.get(x)
        if e not in morphism_set or source[e] != x or target[e] != x:
            raise InvalidGroupoid("identity-missing", (x,))
    composable = {(u, v) for u in morphisms for v in morphisms if target[u] == source[v]}
    if set(compose) != composable:
        extra = set(compose) - composable
        missing = composable - set(compose)
        witness = next(iter(extra or missing))
        raise InvalidGroupoid("composition-domain", witness)
    for (u, v), w in compose.items():
        if w not in morphism_set or source[w] != source[u] or target[w] != target[v]:
            raise InvalidGroupoid("composition-endpoints", (u, v, w))
    for u in morphisms:
        if compose[(identities[source[u]], u)] != u or compose[(u, identities[target[u]])] != u:
            raise InvalidGroupoid("identity-law", (u,))
    for u in morphisms:
        for v in morphisms:
            if target[u] != source[v]:
                continue
            uv = compose[(u, v)]
            for w in morphisms:
                if target[v] != source[w]:
                    continue
                if compose[(uv, w)] != compose[(u, compose[(v, w)])]:
                    raise InvalidGroupoid("associativity", (u, v, w))
    inverses = {}
    for u in morphisms:
        found = None
        for v in morphisms:
            if source[v] != target[u] or target[v] != source[u]:
                continue
            if (compose[(u, v)] == identities[source[u]]
                    and compose[(v, u)] == identities[target[u]]):
                found = v
                break
        if found is None:
            raise InvalidGroupoid("inverse", (u,))
        inverses[u] = found
    return FiniteGroupoid(objects, morphisms, dict(source), dict(target),
                          dict(compose), dict(identities), inverses)


def vertex_group(groupoid: FiniteGroupoid, x: str) -> FiniteGroup:
    """The group of morphisms x -> x under groupoid composition."""
    vertex = groupoid.vertex_morphisms(x)
    table = [[groupoid.compose[(u, v)] for v in vertex] for u in vertex]
    return make_group(vertex, table, groupoid.identities[x], name=f"vertex@{x}")


def _base_components(groupoid: FiniteGroupoid) -> list[list[str]]:
    neighbours: dict[str, set[str]] = {x: set() for x in groupoid.objects}
    for u in groupoid.morphisms:
        a, b = groupoid.source[u], groupoid.target[u]
        neighbours[a].add(b)
        neighbours[b].add(a)
    order = {x: i for i, x in enumerate(groupoid.objects)}
    seen: set[str] = set()
    components: list[list[str]] = []
    for x in groupoid.objects:
        if x in seen:
            continue
        stack, block = [x], {x}
        while stack:
            y = stack.pop()
            for z in neighbours[y]:
                if z not in block:
                    block.add(z)
                    stack.append(z)
        seen |= block
        components.append(sorted(block, key=order.get))
    return components


@dataclass(frozen=True, eq=False)
class GroupoidXMod:
    """A crossed module over a groupoid: per-object fibres, boundary, action.

    Fibre element names are globally distinct, so the boundary and the
    action can be stored as flat tables.
    """

    base: FiniteGroupoid
    fibres: dict
    boundary: dict
    action: dict  # (m, u) -> element of the fibre at target(u), m in the fibre at source(u)
    object_of: dict

    def fibre_at(self, x: str) -> FiniteGroup:
        group = self.fibres.get(x)
        if group is None:
            raise UnknownObject(x)
        return group

    def act(self, m: str, u: str) -> str:
        return self.action[(m, u)]

    def boundary_of(self, m: str) -> str:
        return self.boundary[m]

    def all_fibre_elements(self) -> list[str]:
        return [m for x in self.base.objects for m in self.fibres[x]]


def make_gxm(base: FiniteGroupoid, fibres: dict, boundary: dict, action: dict) -> GroupoidXMod:
    """Assemble a crossed module over a groupoid, checking every law."""
    if set(fibres) != set(base.objects):
        raise InvalidGroupoidXMod("fibre-per-object", (tuple(fibres),))
    object_of: dict[str, str] = {}
    for x in base.objects:
        for m in fibres[x]:
            if m in object_of:
                raise InvalidGroupoidXMod("fibre-name-clash", (m, object_of[m], x))
            object_of[m] = x
    morphism_set = set(base.morphisms)
    for x in base.objects:
        group = fibres[x]
        for m in group:
            value = boundary.get(m)
            if value is None:
                raise InvalidGroupoidXMod("boundary-missing", (m,))
            if (value not in morphism_set or base.source[value] != x
                    or base.target[value] != x):
                raise InvalidGroupoidXMod("boundary-vertex", (m, value))
        for m in group:
            for n in group:
                if boundary[group.add(m, n)] != base.compose[(boundary[m], boundary[n])]:
                    raise InvalidGroupoidXMod("boundary-hom", (m, n))
    expected_keys = {(m, u) for u in base.morphisms for m in fibres[base.source[u]]}
    if set(action) != expected_keys:
        extra = set(action) - expected_keys
        missing = expected_keys - set(action)
        raise InvalidGroupoidXMod("action-domain", next(iter(extra or missing)))
    for (m, u), value in action.items():
        if value not in fibres[base.target[u]]:
            raise InvalidGroupoidXMod("action-codomain", (m, u, value))
    for x in base.objects:
        for m in fibres[x]:
            if action[(m, base.identities[x])] != m:
                raise InvalidAction("identity", (m, x))
    for u in base.morphisms:
        x = base.source[u]
        for v in base.morphisms:
            if base.target[u] != base.source[v]:
                continue
            uv = base.compose[(u, v)]
            for m in fibres[x]:
                if action[(action[(m, u)], v)] != action[(m, uv)]:
                    raise InvalidAction("composition", (m, u, v))
    for u in base.morphisms:
        group = fibres[base.source[u]]
        target_group = fibres[base.target[u]]
        for m in group:
            for n in group:
                if action[(group.add(m, n), u)] != target_group.add(
                        action[(m, u)], action[(n, u)]):
                    raise InvalidAction("additivity", (m, n, u))
    for u in base.morphisms:
        x = base.source[u]
        for m in fibres[x]:
            lhs = boundary[action[(m, u)]]
            rhs = base.compose[(base.compose[(base.inverses[u], boundary[m])], u)]
            if lhs != rhs:
                raise CM1Violation(m, u)
    for x in base.objects:
        group = fibres[x]
        for m in group:
            for n in group:
                if group.conj(m, n) != action[(m, boundary[n])]:
                    raise CM2Violation(m, n)
    return GroupoidXMod(base, dict(fibres), dict(boundary), dict(action), object_of)


def pi0(gxm: GroupoidXMod) -> list[list[str]]:
    """Connected components of the base groupoid, least representative first."""
    return _base_components(gxm.base)


def _boundary_hom(gxm: GroupoidXMod, x: str) -> Homomorphism:
    fibre = gxm.fibre_at(x)
    vertex = vertex_group(gxm.base, x)
    return homomorphism(fibre, vertex, {m: gxm.boundary[m] for m in fibre})


def pi1_at(gxm: GroupoidXMod, x: str) -> FiniteGroup:
    """Cokernel of the boundary at x."""
    delta = _boundary_hom(gxm, x)
    quo, _ = quotient(delta.target, image(delta), name=f"pi1@{x}")
    return quo


def pi2_at(gxm: GroupoidXMod, x: str) -> FiniteGroup:
    """Kernel of the boundary at x."""
    delta = _boundary_hom(gxm, x)
    return kernel(delta).as_group(name=f"pi2@{x}")


def restrict_to_object(gxm: GroupoidXMod, x: str) -> CrossedModule:
    """The crossed module of groups sitting over a single object."""
    fibre = gxm.fibre_at(x)
    vertex = vertex_group(gxm.base, x)
    delta = homomorphism(fibre, vertex, {m: gxm.boundary[m] for m in fibre})
    table = {(m, u): gxm.action[(m, u)] for m in fibre for u in vertex}
    action = group_action(vertex, fibre, table)
    return make_xmod(fibre, vertex, delta, action, name=f"restriction@{x}")


def as_groupoid_xmod(x: CrossedModule, obj: str = "*") -> GroupoidXMod:
    """A crossed module of groups, viewed over the one-object groupoid."""
    compose = {(u, v): x.P.add(u, v) for u in x.P for v in x.P}
    base = make_groupoid((obj,), tuple(x.P.elements),
                         {u: obj for u in x.P}, {u: obj for u in x.P},
                         compose, {obj: x.P.identity})
    boundary = {m: x.delta(m) for m in x.M}
    action = {(m, p): x.act(m, p) for m in x.M for p in x.P}
    return make_gxm(base, {obj: x.M}, boundary, action)


@dataclass(frozen=True, eq=False)
class GXModMorphism:
    """A structure-preserving map of crossed modules over groupoids."""

    source: GroupoidXMod
    target: GroupoidXMod
    obj_map: dict
    mor_map: dict
    dim2_map: dict

    def is_isomorphism(self) -> bool:
        def bijective(mapping, domain, codomain):
            values = [mapping[d] for d in domain]
            return len(set(values)) == len(domain) and set(values) == set(codomain)

        return (bijective(self.obj_map, self.source.base.objects, self.target.base.objects)
                and bijective(self.mor_map, self.source.base.morphisms,
                              self.target.base.morphisms)
                and bijective(self.dim2_map, self.source.all_fibre_elements(),
                              self.target.all_fibre_elements()))


def check_morphism(source: GroupoidXMod, target: GroupoidXMod,
                   obj_map: dict, mor_map: dict, dim2_map: dict) -> list[Violation]:
    """Report-valued check of the morphism laws."""
    report: list[Violation] = []
    src_base, tgt_base = source.base, target.base
    tgt_objects = set(tgt_base.objects)
    tgt_morphisms = set(tgt_base.morphisms)
    for x in src_base.objects:
        if obj_map.get(x) not in tgt_objects:
            report.append(Violation("object-map", f"no valid image for object {x}", (x,)))
    if report:
        return report
    for u in src_base.morphisms:
        fu = mor_map.get(u)
        if fu not in tgt_morphisms:
            report.append(Violation("morphism-map", f"no valid image for {u}", (u,)))
            continue
        if (tgt_base.source[fu] != obj_map[src_base.source[u]]
                or tgt_base.target[fu] != obj_map[src_base.target[u]]):
            report.append(Violation("endpoints", f"image of {u} has wrong endpoints", (u,)))
    if report:
        return report
    for x in src_base.objects:
        if mor_map[src_base.identities[x]] != tgt_base.identities[obj_map[x]]:
            report.append(Violation("identity", f"identity at {x} is not preserved", (x,)))
    for u in src_base.morphisms:
        for v in src_base.morphisms:
            if src_base.target[u] != src_base.source[v]:
                continue
            lhs = mor_map[src_base.compose[(u, v)]]
            rhs = tgt_base.compose[(mor_map[u], mor_map[v])]
            if lhs != rhs:
                report.append(Violation("composition", f"f({u} + {v}) != f({u}) + f({v})",
                                        (u, v)))
    for x in src_base.objects:
        fibre = source.fibres[x]
        target_fibre = target.fibres[obj_map[x]]
        for m in fibre:
            fm = dim2_map.get(m)
            if fm is None or fm not in target_fibre:
                report.append(Violation("dim2-map", f"no valid image for {m}", (m,)))
                continue
        if any(v.kind == "dim2-map" for v in report):
            continue
        for m in fibre:
            for n in fibre:
                if dim2_map[fibre.add(m, n)] != target_fibre.add(dim2_map[m], dim2_map[n]):
                    report.append(Violation("dim2-hom", f"f2({m} + {n}) != f2({m}) + f2({n})",
                                            (m, n)))
        for m in fibre:
            if mor_map[source.boundary[m]] != target.boundary[dim2_map[m]]:
                report.append(Violation("boundary-square",
                                        f"f1(delta {m}) != delta(f2 {m})", (m,)))
    if report:
        return report
    for u in src_base.morphisms:
        for m in source.fibres[src_base.source[u]]:
            if dim2_map[source.action[(m, u)]] != target.action[(dim2_map[m], mor_map[u])]:
                report.append(Violation("action-square",
                                        f"f2({m}^{u}) != f2({m})^f1({u})", (m, u)))
    return report


def make_gxm_morphism(source: GroupoidXMod, target: GroupoidXMod,
                      obj_map: dict, mor_map: dict, dim2_map: dict) -> GXModMorphism:
    report = check_morphism(source, target, obj_map, mor_map, dim2_map)
    if report:
        first = report[0]
        raise InvalidMorphism(first.kind, first.witness)
    return GXModMorphism(source, target, dict(obj_map), dict(mor_map), dict(dim2_map))


def is_fibration(f: GXModMorphism) -> list[Violation]:
    """Fibration report: morphism laws, star-surjectivity, fibrewise dim-2 surjectivity.

    The star at an object collects the morphisms with that source; with
    groupoid inverses, surjectivity on target-stars is equivalent and is
    not checked separately.
    """
    report = check_morphism(f.source, f.target, f.obj_map, f.mor_map, f.dim2_map)
    if report:
        return report
    src_base, tgt_base = f.source.base, f.target.base
    for a in src_base.objects:
        down = f.obj_map[a]
        hit = {f.mor_map[u] for u in src_base.star(a)}
        for w in tgt_base.star(down):
            if w not in hit:
                report.append(Violation(
                    "star-surjectivity",
                    f"no morphism at {a} maps to {w} at {down}", (a, w)))
    for a in src_base.objects:
        down = f.obj_map[a]
        hit = {f.dim2_map[m] for m in f.source.fibres[a]}
        for n in f.target.fibres[down]:
            if n not in hit:
                report.append(Violation(
                    "dim2-surjectivity",
                    f"fibre element {n} at {down} is not hit from {a}", (a, n)))
    return report
