from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cypair import boundary_graph as bg
from cypair import fiber_criteria as fc
from cypair import fixtures


def spec(components, node=True, volume=3, rank=2, smooth=True, at="smooth"):
    return fc.FiberSpec.build(components, node, volume, rank, smooth, at)


class TestFiberSpec:
    def test_rank_component_accounting(self):
        with pytest.raises(fc.FiberError):
            spec([(1, True)], rank=2)
        with pytest.raises(fc.FiberError):
            spec([(1, True), (0, True)], rank=1)
        with pytest.raises(fc.FiberError):
            spec([(1, True)], rank=1, volume=0)

    def test_node_location_validation(self):
        with pytest.raises(fc.FiberError):
            spec([(1, True)], rank=1, at="B2")


class TestCheckPic2:
    def test_resolved_fiber_passes(self):
        assert fc.check_pic2(fixtures.load_fixture("ex63.resolved")) == fc.Verdict(True, ())

    def test_nonpositive_components_fail_third_condition(self):
        v = fc.check_pic2(fixtures.load_fixture("ex62.pic2"))
        assert (v.cluster_type, v.failed_conditions) == (False, (3,))

    def test_no_node_fails_first_condition(self):
        v = fc.check_pic2(spec([(1, True), (-1, True)], node=False))
        assert not v.cluster_type and 1 in v.failed_conditions

    def test_monodromy_condition(self):
        v = fc.check_pic2(spec([(1, False), (-1, True)]))
        assert v.failed_conditions == (2,)

    def test_rank_and_locus_guards(self):
        with pytest.raises(fc.WrongRank):
            fc.check_pic2(fixtures.load_fixture("ex62.pic1"))
        with pytest.raises(fc.BoundaryMeetsSingularities):
            fc.check_pic2(spec([(1, True), (-1, True)], smooth=False))


class TestCheckPic1:
    def test_volume_four_fails(self):
        v = fc.check_pic1(fixtures.load_fixture("ex62.pic1"))
        assert (v.cluster_type, v.failed_conditions) == (False, (3,))

    def test_volume_six_passes(self):
        assert fc.check_pic1(spec([(6, True)], volume=6, rank=1)).cluster_type

    def test_volume_five_boundary_case(self):
        assert fc.check_pic1(spec([(5, True)], volume=5, rank=1)).cluster_type

    def test_singular_locus_guard(self):
        with pytest.raises(fc.BoundaryMeetsSingularities):
            fc.check_pic1(fixtures.load_fixture("ex63.pic1"))

    def test_wrong_rank(self):
        with pytest.raises(fc.WrongRank):
            fc.check_pic1(fixtures.load_fixture("ex63.resolved"))


class TestNodeBlowupReduce:
    def test_volume_five(self):
        red = fc.node_blowup_reduce(spec([(5, True)], volume=5, rank=1))
        assert [c.self_int for c in red.components] == [Fr(1), Fr(-1)]
        assert fc.check_pic2(red).cluster_type

    def test_volume_four(self):
        red = fc.node_blowup_reduce(fixtures.load_fixture("ex62.pic1"))
        assert [c.self_int for c in red.components] == [Fr(0), Fr(-1)]
        assert not fc.check_pic2(red).cluster_type

    def test_volume_nine(self):
        red = fc.node_blowup_reduce(spec([(9, True)], volume=9, rank=1))
        assert [c.self_int for c in red.components] == [Fr(5), Fr(-1)]
        assert fc.check_pic2(red).cluster_type

    def test_blowup_corner_cross_check(self):
        # same arithmetic through the graph calculus: volume 9 nodal curve
        g = bg.BoundaryGraph.build([("B", 9, 1, 1)], rho=1)
        up = bg.blowup_corner(g, node="B")
        assert up.vertex("B").self_int == 5
        assert up.vertex("E1").self_int == -1

    def test_coherence_with_pic1(self):
        for vol in range(1, 13):
            for irr in (True, False):
                f = spec([(vol, irr)], volume=vol, rank=1)
                assert (
                    fc.check_pic1(f).cluster_type
                    == fc.check_pic2(fc.node_blowup_reduce(f)).cluster_type
                )

    def test_preconditions(self):
        with pytest.raises(fc.PreconditionFailed):
            fc.node_blowup_reduce(spec([(5, True)], node=False, volume=5, rank=1))
        with pytest.raises(fc.PreconditionFailed):
            fc.node_blowup_reduce(spec([(5, True)], volume=5, rank=1, at="A2"))
        with pytest.raises(fc.PreconditionFailed):
            fc.node_blowup_reduce(fixtures.load_fixture("ex63.resolved"))


class TestWeightedCorner:
    def test_ordinary_blowup(self):
        d = fc.weighted_corner_numbers(0, -1, 1, 1)
        assert (d.c1_tilde_sq, d.c2_tilde_sq) == (Fr(-1), Fr(-2))
        assert (d.c1_dot_e, d.c2_dot_e, d.c1_dot_c2) == (Fr(1), Fr(1), Fr(1))

    def test_weights_two_three(self):
        d = fc.weighted_corner_numbers(0, 0, 2, 3)
        assert (d.c1_tilde_sq, d.c2_tilde_sq) == (Fr(-2, 3), Fr(-3, 2))
        assert (d.c1_dot_e, d.c2_dot_e) == (Fr(1, 3), Fr(1, 2))

    def test_mixed_signs(self):
        d = fc.weighted_corner_numbers(1, -1, 1, 2)
        assert (d.c1_tilde_sq, d.c2_tilde_sq) == (Fr(1, 2), Fr(-3))
        assert (d.c1_dot_e, d.c2_dot_e) == (Fr(1, 2), Fr(1))

    def test_degenerates_to_smooth_corner(self):
        for c1 in (-3, 0, 2):
            for c2 in (-1, 0):
                d = fc.weighted_corner_numbers(c1, c2, 1, 1)
                assert d.c1_tilde_sq == c1 - 1
                assert d.c2_tilde_sq == c2 - 1
                assert d.c1_dot_e == d.c2_dot_e == d.c1_dot_c2 == 1


class TestObstruction:
    def test_examples(self):
        assert fc.obstruction_value(1, 1, fc.weighted_corner_numbers(0, -1, 1, 1)) == -1
        assert fc.obstruction_value(1, 1, fc.weighted_corner_numbers(0, 0, 1, 1)) == 0
        assert fc.obstruction_value(2, 3, fc.weighted_corner_numbers(0, 0, 3, 2)) == 0

    @settings(max_examples=300, deadline=None)
    @given(
        st.integers(1, 9), st.integers(1, 9), st.integers(1, 9), st.integers(1, 9),
        st.fractions(min_value=-5, max_value=0), st.fractions(min_value=-5, max_value=0),
    )
    def test_bound(self, alpha, beta, m1, m2, c1, c2):
        val = fc.obstruction_value(m1, m2, fc.weighted_corner_numbers(c1, c2, alpha, beta))
        bound = Fr(-((alpha * m1 - beta * m2) ** 2), alpha * beta)
        assert val <= bound <= 0
        if c1 == 0 and c2 == 0:
            assert val == bound


class TestWitnessSearch:
    def test_depth_zero_on_a_triangle(self):
        w = fc.prop51_witness_search(fixtures.load_fixture("p2.triangle"), max_blowups=0)
        assert w is not None and w.script == ()

    def test_depth_zero_needs_an_outside_node(self):
        # positive component with every node on it: no immediate witness
        g = fixtures.load_fixture("ex63.graph")
        assert fc.prop51_witness_search(g, max_blowups=0) is None

    def test_resolved_fiber_has_depth_one_witness(self):
        w = fc.prop51_witness_search(fixtures.load_fixture("ex63.graph"))
        assert w is not None
        assert len(w.script) == 1
        assert w.divisor == {"C1": 1, "C2": 0}

    def test_nonpositive_fiber_has_no_witness(self):
        assert fc.prop51_witness_search(fixtures.load_fixture("ex62.graph")) is None

    def test_no_witness_whenever_positivity_fails_alone(self):
        # both components nonpositive, node and monodromy fine: the
        # obstruction rules out a witness at every depth within the cap
        for s1, s2 in ((0, -1), (0, 0), (-1, -1), (-3, 0)):
            g = bg.BoundaryGraph.build(
                [("C1", s1, 1), ("C2", s2, 1)], [("C1", "C2", 2)], rho=5
            )
            spec2 = fc.FiberSpec.build([(s1, True), (s2, True)], True, 2, 2)
            assert fc.check_pic2(spec2).failed_conditions == (3,)
            assert fc.prop51_witness_search(g) is None, (s1, s2)

    def test_nodal_cubic_witness_at_depth_two(self):
        w = fc.prop51_witness_search(fixtures.load_fixture("p2.nodal_cubic"))
        assert w is not None
        assert w.script == (("node", "B"), ("edge", "B", "E1"))

    def test_pic2_true_graphs_admit_depth_one_witness(self):
        # a two-component coefficient-one boundary balances exactly when the
        # components meet twice; any pair of self-intersections then works
        for s1 in (1, 2, 3):
            for s2 in (-3, -1, 0):
                g = bg.BoundaryGraph.build(
                    [("C1", s1, 1), ("C2", s2, 1)], [("C1", "C2", 2)], rho=5
                )
                assert bg.is_calabi_yau(g)
                w = fc.prop51_witness_search(g, max_blowups=1)
                assert w is not None, (s1, s2)

    def test_requires_index_one(self):
        g = fixtures.load_fixture("ex64.pair")
        with pytest.raises(fc.PreconditionFailed):
            fc.prop51_witness_search(g)

    def test_requires_balance(self):
        g = bg.BoundaryGraph.build([("B", 9, 1, 0)], rho=1)
        with pytest.raises(fc.PreconditionFailed):
            fc.prop51_witness_search(g)

    def test_deterministic(self):
        a = fc.prop51_witness_search(fixtures.load_fixture("p2.nodal_cubic"))
        b = fc.prop51_witness_search(fixtures.load_fixture("p2.nodal_cubic"))
        assert a == b


class TestJson:
    def test_roundtrip_all_fiber_fixtures(self):
        for name in fixtures.fixture_names():
            if fixtures.fixture_kind(name) == "fiber":
                f = fixtures.load_fixture(name)
                assert fc.fiber_from_json(fc.fiber_to_json(f)) == f

    def test_bad_rank(self):
        with pytest.raises(fc.FiberError):
            fc.fiber_from_json({"components": []})
