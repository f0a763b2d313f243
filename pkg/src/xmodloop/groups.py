"""Finite group arithmetic on explicit composition tables.

A group is its validated table; nothing is presented by generators and
relations, so every law can be checked exhaustively.  Composition is
written additively (x + y, -x, 0) even for nonabelian groups.  Element
order is the input order and all derived listings follow it, which makes
every result deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import (
    InvalidAction,
    InvalidHomomorphism,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    SizeLimitExceeded,
    SpaceNotAbelian,
    UnknownElement,
)

DEFAULT_MAX_ISO_ORDER = 512


def pair_name(x: str, y: str) -> str:
    return f"({x}|{y})"


def triple_name(x: str, y: str, z: str) -> str:
    return f"({x}|{y}|{z})"


def split_composite(name: str) -> tuple[str, ...]:
    """Split "(x|y|...)" at top-level bars, respecting nested parentheses."""
    if len(name) < 2 or name[0] != "(" or name[-1] != ")":
        raise ValueError(f"not a composite element name: {name!r}")
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in name[1:-1]:
        if ch == "|" and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        current.append(ch)
    parts.append("".join(current))
    return tuple(parts)


class FiniteGroup:
    """A finite group on named elements, defined by its composition table.

    Construction validates closure, associativity, the declared identity
    and two-sided inverses, raising with a witness on the first failure.
    """

    def __init__(self, elements, table, identity, name=None):
        elements = [str(e) for e in elements]
        if not elements:
            raise ValueError("a group needs at least one element")
        if len(set(elements)) != len(elements):
            raise ValueError("element identifiers must be distinct")
        self.elements: list[str] = elements
        self.name = name
        self._index: dict[str, int] = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        if identity not in self._index:
            raise UnknownElement(identity)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError("composition table must be |G| x |G|")
        idx_table: list[list[int]] = []
        for i, row in enumerate(table):
            idx_row = []
            for j, value in enumerate(row):
                k = self._index.get(value)
                if k is None:
                    raise NotClosed(elements[i], elements[j], value)
                idx_row.append(k)
            idx_table.append(idx_row)
        self._table = idx_table
        self.identity = identity
        e = self._index[identity]
        for i in range(n):
            if idx_table[e][i] != i or idx_table[i][e] != i:
                raise NoIdentity(elements[i])
        inv: list[int] = []
        for i in range(n):
            found = None
            for j in range(n):
                if idx_table[i][j] == e and idx_table[j][i] == e:
                    found = j
                    break
            if found is None:
                raise NoInverse(elements[i])
            inv.append(found)
        self._inv = inv
        for i in range(n):
            for j in range(n):
                ij = idx_table[i][j]
                row_j = idx_table[j]
                for k in range(n):
                    if idx_table[ij][k] != idx_table[i][row_j[k]]:
                        raise NotAssociative(elements[i], elements[j], elements[k])

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<FiniteGroup {label} of order {len(self)}>"

    def index(self, x: str) -> int:
        i = self._index.get(x)
        if i is None:
            raise UnknownElement(x)
        return i

    def add(self, x: str, y: str) -> str:
        return self.elements[self._table[self.index(x)][self.index(y)]]

    def neg(self, x: str) -> str:
        return self.elements[self._inv[self.index(x)]]

    def sub(self, x: str, y: str) -> str:
        return self.add(x, self.neg(y))

    def add_all(self, xs) -> str:
        total = self.identity
        for x in xs:
            total = self.add(total, x)
        return total

    def conj(self, x: str, p: str) -> str:
        """Conjugate x^p = -p + x + p."""
        return self.add(self.add(self.neg(p), x), p)

    def commutator(self, x: str, y: str) -> str:
        """[x, y] = -x - y + x + y."""
        return self.add(self.add(self.add(self.neg(x), self.neg(y)), x), y)

    def element_order(self, x: str) -> int:
        power = x
        n = 1
        while power != self.identity:
            power = self.add(power, x)
            n += 1
        return n

    def is_abelian(self) -> bool:
        return all(self.add(x, y) == self.add(y, x)
                   for x in self.elements for y in self.elements)

    def sorted_elements(self, xs) -> list[str]:
        """Deduplicate and sort by canonical (input) order."""
        return sorted(set(xs), key=self.index)


def make_group(elements, table, identity, name=None) -> FiniteGroup:
    """Build and fully validate a finite group from its table."""
    return FiniteGroup(elements, table, identity, name=name)


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A validated subgroup, stored as a subset of the parent's elements."""

    parent: FiniteGroup
    members: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in set(self.members)

    def as_group(self, name=None) -> FiniteGroup:
        """The subgroup as a standalone group on its own elements."""
        members = list(self.members)
        table = [[self.parent.add(x, y) for y in members] for x in members]
        return FiniteGroup(members, table, self.parent.identity, name=name)


def subgroup(parent: FiniteGroup, members) -> Subgroup:
    """Validate a subset as a subgroup (contains 0, closed under + and -)."""
    ordered = parent.sorted_elements(list(members) + [parent.identity])
    member_set = set(ordered)
    for x in ordered:
        parent.index(x)
    for x in ordered:
        y = parent.neg(x)
        if y not in member_set:
            raise NotClosed(x, f"-{x}", y)
        for z in ordered:
            w = parent.add(x, z)
            if w not in member_set:
                raise NotClosed(x, z, w)
    return Subgroup(parent, tuple(ordered))


def centralizer(group: FiniteGroup, a: str) -> Subgroup:
    """Elements p with -a + p + a = p."""
    group.index(a)
    members = [p for p in group if group.conj(p, a) == p]
    return subgroup(group, members)


def subgroup_generated(group: FiniteGroup, generators) -> Subgroup:
    """Least subgroup containing the generators, by closure iteration."""
    current = {group.identity}
    for g in generators:
        group.index(g)
        current.add(g)
    while True:
        new = set(current)
        for x in current:
            new.add(group.neg(x))
            for y in current:
                new.add(group.add(x, y))
        if new == current:
            break
        current = new
    return subgroup(group, current)


def kernel(f: Homomorphism) -> Subgroup:
    members = [x for x in f.source if f(x) == f.target.identity]
    return subgroup(f.source, members)


def image(f: Homomorphism) -> Subgroup:
    return subgroup(f.target, {f(x) for x in f.source})


def conjugacy_classes(group: FiniteGroup) -> list[list[str]]:
    """The partition of the group into conjugacy classes, least element first."""
    seen: set[str] = set()
    classes: list[list[str]] = []
    for a in group:
        if a in seen:
            continue
        cls = group.sorted_elements(group.conj(a, p) for p in group)
        classes.append(cls)
        seen.update(cls)
    return classes


def quotient(group: FiniteGroup, normal: Subgroup, name=None) -> tuple[FiniteGroup, Homomorphism]:
    """Quotient by a normal subgroup, on least coset representatives.

    Returns the quotient group together with the projection homomorphism.
    """
    if normal.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    member_set = set(normal.members)
    for g in group:
        for x in normal:
            if group.conj(x, g) not in member_set:
                raise NotNormal(g, x)
    rep_of: dict[str, str] = {}
    reps: list[str] = []
    for g in group:
        if g in rep_of:
            continue
        reps.append(g)
        for x in normal:
            rep_of[group.add(g, x)] = g
    table = [[rep_of[group.add(a, b)] for b in reps] for a in reps]
    quo = FiniteGroup(reps, table, rep_of[group.identity], name=name)
    proj = homomorphism(group, quo, {g: rep_of[g] for g in group})
    return quo, proj


@dataclass(frozen=True, eq=False)
class Homomorphism:
    """A validated group homomorphism given extensionally."""

    source: FiniteGroup
    target: FiniteGroup
    mapping: dict

    def __call__(self, x: str) -> str:
        value = self.mapping.get(x)
        if value is None:
            raise UnknownElement(x)
        return value

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.source)

    def is_surjective(self) -> bool:
        return set(self.mapping.values()) == set(self.target.elements)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


def homomorphism(source: FiniteGroup, target: FiniteGroup, mapping: dict) -> Homomorphism:
    """Validate totality, codomain and additivity of a candidate map."""
    for x in source:
        if x not in mapping:
            raise UnknownElement(x)
        target.index(mapping[x])
    for x in source:
        for y in source:
            if mapping[source.add(x, y)] != target.add(mapping[x], mapping[y]):
                raise InvalidHomomorphism(x, y)
    return Homomorphism(source, target, dict(mapping))


@dataclass(frozen=True, eq=False)
class GroupAction:
    """A right action of ``actor`` on ``space``, (m, p) -> m^p, as a table."""

    actor: FiniteGroup
    space: FiniteGroup
    table: dict

    def act(self, m: str, p: str) -> str:
        value = self.table.get((m, p))
        if value is None:
            raise UnknownElement((m, p))
        return value


def group_action(actor: FiniteGroup, space: FiniteGroup, table: dict) -> GroupAction:
    """Validate an action table: m^0 = m, (m^p)^q = m^(p+q), (m+n)^p = m^p + n^p."""
    for m in space:
        for p in actor:
            value = table.get((m, p))
            if value is None:
                raise InvalidAction("totality", (m, p))
            if value not in space:
                raise InvalidAction("codomain", (m, p, value))
    for m in space:
        if table[(m, actor.identity)] != m:
            raise InvalidAction("identity", (m,))
    for m in space:
        for p in actor:
            for q in actor:
                if table[(table[(m, p)], q)] != table[(m, actor.add(p, q))]:
                    raise InvalidAction("composition", (m, p, q))
    for m in space:
        for n in space:
            for p in actor:
                if table[(space.add(m, n), p)] != space.add(table[(m, p)], table[(n, p)]):
                    raise InvalidAction("additivity", (m, n, p))
    return GroupAction(actor, space, dict(table))


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    return group_action(actor, space, {(m, p): m for m in space for p in actor})


def semidirect_product(n_group: FiniteGroup, h_group: FiniteGroup,
                       act: GroupAction, name=None) -> FiniteGroup:
    """Semidirect product on pairs (n, h) with (n,h) + (n',h') = (n^h' + n', h + h').

    The twist sits on the left factor so that, for abelian N, the table
    agrees entrywise with the loop vertex group built from the same data.
    """
    if act.actor is not h_group or act.space is not n_group:
        raise InvalidAction("wiring", (act.actor.name, act.space.name))
    pairs = [(n, h) for n in n_group for h in h_group]
    names = [pair_name(n, h) for n, h in pairs]
    table = []
    for n, h in pairs:
        row = []
        for n2, h2 in pairs:
            row.append(pair_name(n_group.add(act.act(n, h2), n2), h_group.add(h, h2)))
        table.append(row)
    identity = pair_name(n_group.identity, h_group.identity)
    return FiniteGroup(names, table, identity, name=name)


def direct_product(g_group: FiniteGroup, h_group: FiniteGroup, name=None) -> FiniteGroup:
    """Componentwise product on pairs, used as an oracle for trivial twists."""
    pairs = [(g, h) for g in g_group for h in h_group]
    names = [pair_name(g, h) for g, h in pairs]
    table = [[pair_name(g_group.add(g1, g2), h_group.add(h1, h2)) for g2, h2 in pairs]
             for g1, h1 in pairs]
    identity = pair_name(g_group.identity, h_group.identity)
    return FiniteGroup(names, table, identity, name=name)


def displacement_subgroup(act: GroupAction, a: str) -> Subgroup:
    """Subgroup of the (abelian) space generated by all -m^a + m."""
    act.actor.index(a)
    space = act.space
    for m in space:
        for n in space:
            if space.add(m, n) != space.add(n, m):
                raise SpaceNotAbelian(m, n)
    displacements = {space.add(space.neg(act.act(m, a)), m) for m in space}
    return subgroup_generated(space, displacements)


def _order_profile(group: FiniteGroup) -> Counter:
    return Counter(group.element_order(x) for x in group)


def _generating_sequence(group: FiniteGroup) -> list[str]:
    generated = {group.identity}
    gens: list[str] = []
    while len(generated) < len(group):
        g = next(x for x in group if x not in generated)
        gens.append(g)
        generated = set(subgroup_generated(group, list(generated) + [g]).members)
    return gens


def _close_partial(g_group: FiniteGroup, h_group: FiniteGroup, seed: dict) -> dict | None:
    """Close a partial map under products; None on conflict or collision."""
    known = dict(seed)
    used = set(known.values())
    if len(used) != len(known):
        return None
    frontier = list(known.items())
    while frontier:
        added: list[tuple[str, str]] = []
        items = list(known.items())
        for x, fx in frontier:
            for y, fy in items:
                for z, fz in ((g_group.add(x, y), h_group.add(fx, fy)),
                              (g_group.add(y, x), h_group.add(fy, fx))):
                    current = known.get(z)
                    if current is None:
                        if fz in used:
                            return None
                        known[z] = fz
                        used.add(fz)
                        added.append((z, fz))
                    elif current != fz:
                        return None
        frontier = added
    return known


def are_isomorphic(g_group: FiniteGroup, h_group: FiniteGroup,
                   max_order: int = DEFAULT_MAX_ISO_ORDER) -> Homomorphism | None:
    """Search for an isomorphism; None is a definitive negative.

    Backtracks over generator images with element-order pruning; partial
    maps are closed under products as they grow, so conflicts prune early.
    """
    if len(g_group) > max_order or len(h_group) > max_order:
        raise SizeLimitExceeded(max(len(g_group), len(h_group)), max_order)
    if len(g_group) != len(h_group):
        return None
    if _order_profile(g_group) != _order_profile(h_group):
        return None
    gens = _generating_sequence(g_group)
    gen_orders = {g: g_group.element_order(g) for g in gens}
    by_order: dict[int, list[str]] = {}
    for h in h_group:
        by_order.setdefault(h_group.element_order(h), []).append(h)

    def candidates(g: str) -> list[str]:
        pool = by_order.get(gen_orders[g], [])
        return sorted(pool, key=lambda h: (0 if h == g else 1, h_group.index(h)))

    def search(i: int, mapping: dict) -> dict | None:
        if i == len(gens):
            return mapping if len(mapping) == len(g_group) else None
        g = gens[i]
        if g in mapping:
            return search(i + 1, mapping)
        for h in candidates(g):
            seed = dict(mapping)
            seed[g] = h
            closed = _close_partial(g_group, h_group, seed)
            if closed is None:
                continue
            found = search(i + 1, closed)
            if found is not None:
                return found
        return None

    found = search(0, {g_group.identity: h_group.identity})
    if found is None:
        return None
    witness = homomorphism(g_group, h_group, found)
    if not witness.is_bijective():
        return None
    return witness
