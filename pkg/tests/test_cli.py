import json

import pytest

from cypair import boundary_graph as bg
from cypair import fiber_criteria as fc
from cypair import fixtures
from cypair import lattice_fan as lf
from cypair.cli import emit_dot, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestClassify:
    def test_not_cluster_type(self, capsys):
        data = invoke_json(capsys, "classify", "4A2")
        assert data["cluster_type"] is False
        assert data["volume"] == 1

    def test_cluster_type(self, capsys):
        data = invoke_json(capsys, "classify", "A1+A2+A5")
        assert data["cluster_type"] is True

    def test_parse_error_exits_2(self, capsys):
        code, _, err = invoke(capsys, "classify", "bogus")
        assert code == 2
        assert "bogus" in err

    def test_text_format(self, capsys):
        code, out, _ = invoke(capsys, "classify", "4A2", "--format", "text")
        assert code == 0
        assert "cluster_type: False" in out
        assert "volume: 1" in out


class TestDecidePair:
    def test_inline_json(self, capsys):
        spec = json.dumps(
            {"singularities": "A4", "boundary": {"kind": "nodal_smooth_locus"}}
        )
        data = invoke_json(capsys, "decide-pair", spec)
        assert (data["cluster_type"], data["case"], data["volume"]) == (True, 2, 5)

    def test_infeasible(self, capsys):
        spec = json.dumps(
            {
                "singularities": "4A2",
                "boundary": {"kind": "multi_component", "k": 2, "ranks": [2, 2]},
            }
        )
        data = invoke_json(capsys, "decide-pair", spec)
        assert data["case"] == "infeasible"

    def test_inconsistent_spec_exits_3(self, capsys):
        spec = json.dumps(
            {"singularities": "A4", "boundary": {"kind": "nodal_at_A", "n": 3}}
        )
        code, _, err = invoke(capsys, "decide-pair", spec)
        assert code == 3
        assert "A3" in err

    def test_bad_boundary_kind_exits_2(self, capsys):
        spec = json.dumps({"singularities": "A4", "boundary": {"kind": "mystery"}})
        code, _, _ = invoke(capsys, "decide-pair", spec)
        assert code == 2


class TestCheckFiber:
    def test_rank_one_volume_four(self, capsys):
        data = invoke_json(capsys, "check-fiber", "fixture:ex62.pic1", "--rank", "1")
        assert data == {"cluster_type": False, "failed_conditions": [3], "rank": 1}

    def test_rank_mismatch_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "check-fiber", "fixture:ex62.pic1", "--rank", "2")
        assert code == 2

    def test_module_error_exits_3(self, capsys):
        code, _, err = invoke(capsys, "check-fiber", "fixture:ex63.pic1")
        assert code == 3
        assert "BoundaryMeetsSingularities" in err

    def test_inline_spec(self, capsys):
        spec = json.dumps(fc.fiber_to_json(fixtures.load_fixture("ex63.resolved")))
        data = invoke_json(capsys, "check-fiber", spec)
        assert data["cluster_type"] is True


class TestGraphCommand:
    def test_validate_cy(self, capsys):
        data = invoke_json(capsys, "graph", "fixture:fig5.A7.before", "--op", "validate-cy")
        assert data["calabi_yau"] is True
        assert set(data["residuals"].values()) == {0}

    def test_apply_script_then_complexity(self, capsys):
        script = json.dumps([{"op": "blowup_interior", "vertex": "L1"}])
        data = invoke_json(
            capsys, "graph", "fixture:p2.triangle",
            "--apply", script, "--op", "complexity",
        )
        assert data["complexity"] == 1

    def test_contract_chains(self, capsys):
        data = invoke_json(capsys, "graph", "fixture:fig9.A1A2A5", "--op", "contract-chains")
        assert data["marks"] == ["A1", "A2", "A5"]

    def test_witness(self, capsys):
        data = invoke_json(capsys, "graph", "fixture:ex62.graph", "--op", "witness")
        assert data == {"witness": None}

    def test_blowdown_error_exits_3(self, capsys):
        script = json.dumps([{"op": "blowdown", "vertex": "L1"}])
        code, _, err = invoke(capsys, "graph", "fixture:p2.triangle", "--apply", script)
        assert code == 3
        assert "NotMinusOneCurve" in err


class TestFanCommand:
    def test_self_intersections(self, capsys):
        data = invoke_json(capsys, "fan", "fixture:p2.fan", "--op", "self-intersections")
        assert data["self_intersections"] == [1, 1, 1]

    def test_straddle_exits_3(self, capsys):
        code, _, err = invoke(capsys, "fan", "fixture:p2.fan", "--op", "project", "--form", "1,0")
        assert code == 3
        assert "NoToricMorphism" in err

    def test_prepare_then_project(self, capsys):
        data = invoke_json(
            capsys, "fan", "fixture:case2.fan", "--op", "prepare-projection", "--form", "1,1"
        )
        assert len(data["rays"]) == 5
        data2 = invoke_json(
            capsys, "fan", json.dumps(data["rays"]), "--op", "project", "--form", "1,1"
        )
        assert data2["fiber_over_infinity"] == [[3, 2]] or len(data2["fiber_over_infinity"]) == 1

    def test_invalid_fan_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "fan", "[[2,0],[0,1],[-1,-1]]", "--op", "smooth")
        assert code == 2


class TestCatalogAndFixtures:
    def test_catalog_counts(self, capsys):
        data = invoke_json(capsys, "catalog")
        assert data["count"] == 16
        assert sum(row["cluster_type"] for row in data["families"]) == 14

    def test_fixture_list(self, capsys):
        data = invoke_json(capsys, "fixture", "--list")
        assert "fig5.A7.before" in data["fixtures"]

    def test_unknown_fixture_exits_2(self, capsys):
        code, _, err = invoke(capsys, "fixture", "nope")
        assert code == 2
        assert "UnknownFixture" in err

    def test_fixture_dump_roundtrips(self, capsys):
        data = invoke_json(capsys, "fixture", "ex64.pair")
        assert bg.graph_from_json(data["graph"]) == fixtures.load_fixture("ex64.pair")


class TestDot:
    def test_single_vertex_three_lines(self):
        g = bg.BoundaryGraph.build([("B", 9, 1, 1)], rho=1)
        assert len(emit_dot(g).strip().split("\n")) == 3

    def test_deterministic_bytes(self):
        g1 = fixtures.load_fixture("fig5.A7.before")
        g2 = fixtures.load_fixture("fig5.A7.before")
        assert emit_dot(g1).encode() == emit_dot(g2).encode()

    def test_figure_has_ten_vertices(self):
        dot = emit_dot(fixtures.load_fixture("fig5.A7.before"))
        assert sum(1 for line in dot.splitlines() if "label=" in line and "--" not in line) == 10

    def test_styles(self):
        g = bg.BoundaryGraph.build(
            [("S", -2, 1), ("D", -1, 0), ("B", 3, 1), ("T", -3, "1/2")],
            [("S", "D"), ("D", "B"), ("B", "T"), ("S", "T")],
            rho=4,
        )
        dot = emit_dot(g)
        assert '"S" [label="S (-2)" style=solid];' in dot
        assert '"D" [label="D (-1)" style=dashed];' in dot
        assert '"B" [label="B (3)" style=bold];' in dot
        assert '"T" [label="T (-3)" style=dotted];' in dot

    def test_out_file(self, capsys, tmp_path):
        out = tmp_path / "g.dot"
        code, stdout, _ = invoke(
            capsys, "graph", "fixture:p2.triangle", "--op", "dot", "--out", str(out)
        )
        assert code == 0
        assert stdout == ""
        assert out.read_text().startswith("graph boundary {")


class TestFixtureShapes:
    def test_a7_panel_is_a_cycle_with_two_chords(self):
        g = fixtures.load_fixture("fig5.A7.before")
        boundary = [v for v in g.vertices if v.coeff == 1]
        chords = [v for v in g.vertices if v.coeff == 0]
        assert len(boundary) == 8 and len(chords) == 2
        assert all(v.self_int == -1 for v in chords)
        # the coefficient-one part is a single cycle: every vertex meets
        # exactly two other boundary vertices
        ids = {v.id for v in boundary}
        for v in boundary:
            deg = sum(
                e.multiplicity for e in g.edges_at(v.id) if e.other(v.id) in ids
            )
            assert deg == 2

    def test_ex62_fiber_volume_is_recorded(self):
        f = fixtures.load_fixture("ex62.pic1")
        assert f.volume == 4 and f.rel_picard_rank == 1


class TestCorpusRoundTrips:
    def test_parse_of_emit_is_identity_for_every_fixture(self):
        for name in fixtures.fixture_names():
            obj = fixtures.load_fixture(name)
            if isinstance(obj, bg.BoundaryGraph):
                assert bg.graph_from_json(json.loads(json.dumps(bg.graph_to_json(obj)))) == obj
            elif isinstance(obj, fc.FiberSpec):
                assert fc.fiber_from_json(json.loads(json.dumps(fc.fiber_to_json(obj)))) == obj
            else:
                assert lf.fan_from_json(json.loads(json.dumps(lf.fan_to_json(obj)))) == obj

    def test_malformed_payloads_exit_2(self, capsys):
        assert invoke(capsys, "graph", '{"vertices": [{"id": "A"}]}')[0] == 2
        assert invoke(capsys, "check-fiber", '{"rank": 1}')[0] == 2
        assert invoke(capsys, "graph", "not json and not a file")[0] == 2
        assert invoke(capsys, "graph", "fixture:p2.triangle", "--apply", "[42]")[0] == 2


class TestExpectedVerdictTable:
    def test_every_fixture_matches_the_frozen_table(self, capsys):
        for name, expected in fixtures.EXPECTED.items():
            kind = expected["kind"]
            assert fixtures.fixture_kind(name) == kind
            if kind == "graph":
                g = fixtures.load_fixture(name)
                assert bg.is_calabi_yau(g) == expected["calabi_yau"], name
                assert bg.coregularity(g) == expected["coregularity"], name
                assert bg.complexity(g) == expected["complexity"], name
                assert bg.index_integral(g) == expected["index_integral"], name
                if "chains" in expected:
                    assert bg.contract_minus2_chains(g).mark_ranks == expected["chains"]
                if "witness" in expected:
                    w = fc.prop51_witness_search(g)
                    assert (w is not None) == expected["witness"], name
            elif kind == "fiber":
                f = fixtures.load_fixture(name)
                check = fc.check_pic1 if f.rel_picard_rank == 1 else fc.check_pic2
                if "error" in expected:
                    with pytest.raises(fc.FiberError) as exc_info:
                        check(f)
                    assert type(exc_info.value).__name__ == expected["error"]
                else:
                    v = check(f)
                    assert v.cluster_type == expected["cluster_type"], name
                    assert list(v.failed_conditions) == expected["failed_conditions"], name
            else:
                fan = fixtures.load_fixture(name)
                if "smooth" in expected:
                    assert lf.is_smooth(fan) == expected["smooth"], name
                if "self_intersections" in expected:
                    assert lf.self_intersections(fan) == expected["self_intersections"]
                if "resolved_rays" in expected:
                    assert len(lf.resolve(fan).rays) == expected["resolved_rays"]
                if "projects_along" in expected:
                    lf.p1_projection(fan, tuple(expected["projects_along"]))
                if "needs_subdivision_for" in expected:
                    form = tuple(expected["needs_subdivision_for"])
                    with pytest.raises(lf.NoToricMorphism):
                        lf.p1_projection(fan, form)
                    lf.p1_projection(lf.subdivide_for_projection(fan, form), form)
