"""Standard small crossed modules used by the test-suite and the docs.

TRIV   1 -> 1
CONJ   1 -> S3                    (trivial top group)
INC24  C2 -> C4, 1 |-> 2          (trivial action)
MOD32  0: C3 -> C2                (C2 inverts C3; a module, delta zero)
INN3   C3 -> S3 onto A3           (conjugation action)
"""

from __future__ import annotations

from functools import lru_cache

from .groups import FiniteGroup, group_action, homomorphism, make_group, trivial_action
from .xmod import CrossedModule, make_xmod

FIXTURE_NAMES = ("triv", "conj_s3", "inc24", "mod32", "inn3")

# S3 as permutations of {0,1,2}; x + y means "x then y".
_S3_PERMS = {
    "e": (0, 1, 2),
    "r": (1, 2, 0),
    "r2": (2, 0, 1),
    "s": (1, 0, 2),
    "rs": (0, 2, 1),
    "r2s": (2, 1, 0),
}


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    elements = [str(i) for i in range(n)]
    table = [[str((i + j) % n) for j in range(n)] for i in range(n)]
    return make_group(elements, table, "0", name=f"C{n}")


@lru_cache(maxsize=None)
def sym3() -> FiniteGroup:
    names = list(_S3_PERMS)
    by_perm = {perm: name for name, perm in _S3_PERMS.items()}

    def compose(x: str, y: str) -> str:
        px, py = _S3_PERMS[x], _S3_PERMS[y]
        return by_perm[tuple(py[px[i]] for i in range(3))]

    table = [[compose(x, y) for y in names] for x in names]
    return make_group(names, table, "e", name="S3")


@lru_cache(maxsize=None)
def triv() -> CrossedModule:
    one = cyclic(1)
    delta = homomorphism(one, one, {"0": "0"})
    return make_xmod(one, one, delta, trivial_action(one, one), name="triv")


@lru_cache(maxsize=None)
def conj_s3() -> CrossedModule:
    M, P = cyclic(1), sym3()
    delta = homomorphism(M, P, {"0": "e"})
    return make_xmod(M, P, delta, trivial_action(P, M), name="conj_s3")


@lru_cache(maxsize=None)
def inc24() -> CrossedModule:
    M, P = cyclic(2), cyclic(4)
    delta = homomorphism(M, P, {"0": "0", "1": "2"})
    return make_xmod(M, P, delta, trivial_action(P, M), name="inc24")


@lru_cache(maxsize=None)
def mod32() -> CrossedModule:
    M, P = cyclic(3), cyclic(2)
    delta = homomorphism(M, P, {m: "0" for m in M})
    table = {(m, "0"): m for m in M}
    table.update({(m, "1"): M.neg(m) for m in M})
    return make_xmod(M, P, delta, group_action(P, M, table), name="mod32")


@lru_cache(maxsize=None)
def inn3() -> CrossedModule:
    M, P = cyclic(3), sym3()
    delta_map = {"0": "e", "1": "r", "2": "r2"}
    inverse = {v: k for k, v in delta_map.items()}
    delta = homomorphism(M, P, delta_map)
    table = {(m, p): inverse[P.conj(delta_map[m], p)] for m in M for p in P}
    return make_xmod(M, P, delta, group_action(P, M, table), name="inn3")


def all_fixtures() -> dict[str, CrossedModule]:
    return {
        "triv": triv(),
        "conj_s3": conj_s3(),
        "inc24": inc24(),
        "mod32": mod32(),
        "inn3": inn3(),
    }
