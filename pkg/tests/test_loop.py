import pytest

from bruteforce import brute_components, brute_pa
from conftest import all_base_pairs
from xmodloop import fixtures
from xmodloop.errors import UnknownElement
from xmodloop.groups import (
    are_isomorphic,
    conjugacy_classes,
    image,
    kernel,
    pair_name,
    split_composite,
)
from xmodloop.groupoids import vertex_group
from xmodloop.loop import (
    components,
    delta_a,
    group_Pa,
    loop_data,
    loop_gpd_xmod,
    loop_morphism,
    loop_xmod_at,
    pi_loop,
    theta,
)
from xmodloop.xmod import check_axioms, homotopy

COMPONENT_COUNTS = {"triv": 1, "conj_s3": 3, "inc24": 2, "mod32": 2, "inn3": 2}


def test_component_counts_and_oracle(any_xmod):
    x = any_xmod
    classes = components(x)
    assert len(classes) == COMPONENT_COUNTS[x.name]
    assert {frozenset(c) for c in classes} == brute_components(x)
    assert len(classes) == len(conjugacy_classes(homotopy(x).pi1))


def test_conj_s3_components_are_conjugacy_classes():
    classes = components(fixtures.conj_s3())
    assert sorted(len(c) for c in classes) == [1, 2, 3]


def test_inc24_components_are_cosets():
    assert components(fixtures.inc24()) == [["0", "2"], ["1", "3"]]


def test_pa_set_matches_brute_filter():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        data = loop_data(x, a)
        assert set(data.pairs.values()) == brute_pa(x, a)


def test_pa_of_inc24_is_cyclic_four():
    pa = group_Pa(fixtures.inc24(), "1")
    assert len(pa) == 4
    assert {split_composite(e)[0] for e in pa.elements} == {"0"}
    assert are_isomorphic(pa, fixtures.cyclic(4)) is not None


def test_pa_of_mod32_at_generator_is_s3():
    pa = group_Pa(fixtures.mod32(), "1")
    assert len(pa) == 6
    assert are_isomorphic(pa, fixtures.sym3()) is not None


def test_pa_identity_and_inverse_formula():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        data = loop_data(x, a)
        pa = data.Pa
        assert pa.identity == pair_name(x.M.identity, x.P.identity)
        for element, (m, p) in data.pairs.items():
            negated = pair_name(x.M.neg(x.act(m, x.P.neg(p))), x.P.neg(p))
            assert pa.neg(element) == negated


def test_delta_a_values():
    mod32, inc24 = fixtures.mod32(), fixtures.inc24()
    assert delta_a(mod32, "1")("1") == "(2|0)"
    assert delta_a(inc24, "1")("1") == "(0|2)"
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        assert delta_a(x, a)(x.M.identity) == group_Pa(x, a).identity


def test_loop_xmod_axioms_hold_at_every_base_point():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        assert check_axioms(loop_xmod_at(x, a)) == []


def test_loop_xmod_of_trivial_is_trivial():
    lx = loop_xmod_at(fixtures.triv(), "0")
    assert len(lx.M) == 1 and len(lx.P) == 1


def test_mod32_loop_pi1_at_both_bases():
    x = fixtures.mod32()
    at_zero = pi_loop(x, "0")
    assert len(at_zero.pi1) == 6
    assert not at_zero.pi1.is_abelian()
    assert len(at_zero.pi2) == 3
    at_one = pi_loop(x, "1")
    assert are_isomorphic(at_one.pi1, fixtures.cyclic(2)) is not None
    assert len(at_one.pi2) == 1


def test_inn3_loop_pi_at_transposition():
    x = fixtures.inn3()
    data = pi_loop(x, "s")
    assert are_isomorphic(data.pi1, fixtures.cyclic(2)) is not None
    assert len(data.pi2) == 1


def test_pi2_equals_fixed_points_elementwise():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        fixed = {k for k in kernel(x.delta) if x.act(k, a) == k}
        assert set(pi_loop(x, a).pi2.elements) == fixed


def test_loop_morphism_source_target():
    x = fixtures.mod32()
    t = loop_morphism(x, "1", "1", "0")
    assert t.target == "0"
    assert t.source == x.P.sub(x.P.add(x.P.add("1", "0"), x.delta("1")), "1")


def test_loop_groupoid_shape_of_inc24():
    gxm = loop_gpd_xmod(fixtures.inc24())
    assert len(gxm.base.objects) == 4
    assert len(gxm.base.morphisms) == 32
    assert all(len(gxm.fibres[a]) == 2 for a in gxm.base.objects)


def test_composition_defined_iff_twisted_condition():
    for x in (fixtures.mod32(), fixtures.inc24()):
        gxm = loop_gpd_xmod(x)
        base = gxm.base
        for u in base.morphisms:
            n, q, b = split_composite(u)
            for v in base.morphisms:
                m, p, a = split_composite(v)
                defined = (u, v) in base.compose
                condition = x.P.conj(b, p) == x.P.add(a, x.delta(m))
                assert defined == condition


def test_composition_first_coordinate_is_the_pasting():
    x = fixtures.mod32()
    base = loop_gpd_xmod(x).base
    for (u, v), w in base.compose.items():
        n, q, b = split_composite(u)
        m, p, a = split_composite(v)
        first, second, third = split_composite(w)
        assert first == x.M.add(m, x.act(n, p))
        assert second == x.P.add(q, p)
        assert third == a


def test_theta_is_an_isomorphism_everywhere():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        assert theta(x, a).is_isomorphism()


def test_theta_matches_vertex_group_with_pa():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        gxm = loop_gpd_xmod(x)
        vertex = vertex_group(gxm.base, a)
        pa = group_Pa(x, a)
        mor_map = theta(x, a).mor_map
        assert {mor_map[u] for u in vertex.elements} == set(pa.elements)
        for u in vertex:
            for v in vertex:
                assert mor_map[vertex.add(u, v)] == pa.add(mor_map[u], mor_map[v])


def test_unknown_base_point_is_rejected():
    with pytest.raises(UnknownElement):
        group_Pa(fixtures.mod32(), "7")


def test_delta_a_image_is_normal_in_pa():
    for name, a in all_base_pairs():
        x = fixtures.all_fixtures()[name]
        data = loop_data(x, a)
        img = set(image(data.delta_a))
        for g in data.Pa:
            for d in img:
                assert data.Pa.conj(d, g) in img
