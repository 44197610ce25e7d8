import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nestohedra import (
    Hypergraph,
    HyperplaneSpec,
    abstract_polytope,
    catalog_lookup,
    check_vertex_membership,
    enumerate_constructions,
    f_vector,
    face_lattice_isomorphic,
    realize,
    saturated_closure,
    to_off,
    vertex_coordinates,
)
from nestohedra.errors import (
    DimensionMismatchError,
    NestohedraError,
    NotAConstructionError,
    NotASCError,
    NotAtomicError,
)
from nestohedra.realization import to_json_dict

from helpers import L, all_asc_hypergraphs, frozen, paper_a


def abar():
    return saturated_closure(paper_a())


class TestVertexCoordinates:
    def test_single_atom(self):
        h = Hypergraph.from_sets([{"1"}])
        assert vertex_coordinates(h, frozen("1")) == (3,)

    def test_two_chain(self):
        h = Hypergraph.from_sets([{"1"}, {"2"}, {"1", "2"}])
        k = frozenset({frozenset({"1"}), frozenset({"1", "2"})})
        assert vertex_coordinates(h, k) == (3, 6)

    def test_powerset_chain(self):
        sets = [set(c) for r in range(1, 4)
                for c in itertools.combinations("123", r)]
        h = Hypergraph.from_sets(sets)
        k = frozenset({frozenset({"1"}), frozenset({"1", "2"}),
                       frozenset({"1", "2", "3"})})
        assert vertex_coordinates(h, k) == (3, 6, 18)

    def test_l_vertex(self):
        # atoms sort as (u, x, y, z)
        assert vertex_coordinates(abar(), L) == (3, 54, 18, 6)

    def test_requires_asc(self):
        with pytest.raises(NotASCError):
            vertex_coordinates(paper_a(), L)

    def test_rejects_non_construction(self):
        with pytest.raises(NotAConstructionError):
            vertex_coordinates(abar(), frozen("x", "y", "z", "u"))

    def test_injective_across_constructions(self):
        for h in all_asc_hypergraphs(4):
            seen = {vertex_coordinates(h, k) for k in enumerate_constructions(h)}
            assert len(seen) == len(enumerate_constructions(h))


class TestRealize:
    def test_triangle(self):
        h = catalog_lookup("H_301").hypergraph
        rp = realize(h)
        assert rp.dimension == 2
        assert {c for _, c in rp.vertices} == {(21, 3, 3), (3, 21, 3), (3, 3, 21)}

    def test_associahedron_counts(self):
        rp = realize(abar())
        assert len(rp.vertices) == 14
        assert len(rp.facet_specs) == 9

    def test_empty_point(self):
        rp = realize(Hypergraph.from_sets([]))
        assert rp.dimension == 0
        assert rp.vertices == ((frozenset(), ()),)
        assert rp.facet_specs == ()

    def test_all_singletons_point(self):
        rp = realize(Hypergraph.from_sets([{"x"}, {"y"}]))
        assert rp.dimension == 0
        assert len(rp.vertices) == 1
        assert rp.vertices[0][1] == (3, 3)

    def test_requires_atomic(self):
        with pytest.raises(NotAtomicError):
            realize(Hypergraph.from_sets([{"x", "y"}]))

    def test_facet_count_for_asc(self):
        # every non-top member of the closure cuts a facet
        for h in all_asc_hypergraphs(4):
            rp = realize(h)
            assert len(rp.facet_specs) == len(h.members) - 1

    def test_simplicity(self):
        for h in all_asc_hypergraphs(4):
            rp = realize(h)
            for row in rp.incidence:
                assert sum(row) == rp.dimension

    def test_product_realization(self):
        rp = realize(catalog_lookup("H_4200").hypergraph)
        assert rp.dimension == 2
        assert len(rp.vertices) == 4
        assert {s.support for s in rp.facet_specs} == frozen("x", "y", "z", "u")

    def test_hyperplane_spec_validation(self):
        with pytest.raises(NestohedraError):
            HyperplaneSpec(frozenset("x"), 9)
        with pytest.raises(NestohedraError):
            HyperplaneSpec(frozenset(), 1)


class TestMembership:
    def test_l_vertex_boundary_set(self):
        v = vertex_coordinates(abar(), L)
        verdicts = check_vertex_membership(abar(), v)
        on = {m for m, verdict in verdicts.items() if verdict == "on-boundary"}
        assert on == L
        assert all(verdict == "strict-interior"
                   for m, verdict in verdicts.items() if m not in L)

    def test_origin_outside(self):
        verdicts = check_vertex_membership(abar(), (0, 0, 0, 0))
        assert set(verdicts.values()) == {"outside"}

    def test_scaled_interior_point(self):
        sets = [set(c) for r in range(1, 5)
                for c in itertools.combinations("wxyz", r)]
        h = Hypergraph.from_sets(sets)
        point = (3 ** 4,) * 4
        verdicts = check_vertex_membership(h, point)
        for m, verdict in verdicts.items():
            if len(m) < 4:
                assert verdict == "strict-interior"

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            check_vertex_membership(abar(), (1, 2, 3))


class TestBudgetInequality:
    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_antichain_sum_stays_under_union_level(self, data):
        n = data.draw(st.integers(min_value=2, max_value=6))
        atoms = list(range(n))
        subsets = [frozenset(c) for r in range(1, n)
                   for c in itertools.combinations(atoms, r)]
        fam = data.draw(st.lists(st.sampled_from(subsets), min_size=2,
                                 max_size=5, unique=True))
        antichain = [s for s in fam
                     if not any(s < t or t < s for t in fam if t is not s)]
        if len(antichain) < 2:
            antichain = None
        coords = data.draw(st.lists(
            st.integers(min_value=0, max_value=3 ** n),
            min_size=n, max_size=n))
        if antichain is None:
            return
        # clamp to the per-set budgets, keeping everything integral
        changed = True
        while changed:
            changed = False
            for s in antichain:
                total = sum(coords[i] for i in s)
                budget = 3 ** len(s)
                if total > budget:
                    for i in s:
                        coords[i] = coords[i] * budget // total
                    changed = True
        union = frozenset().union(*antichain)
        assert sum(coords[i] for i in union) < 3 ** len(union)


class TestIsomorphism:
    def test_tetrahedron(self):
        assert face_lattice_isomorphic(catalog_lookup("H_4001").hypergraph).ok

    def test_associahedron_with_mapping(self):
        iso = face_lattice_isomorphic(abar())
        assert iso.ok
        top = frozenset("xyzu")
        vertex_images = {v for v in iso.face_map.values() if len(v) == 4}
        assert vertex_images == enumerate_constructions(abar())
        assert iso.face_map[frozenset()] == frozenset({top})

    def test_disconnected_square(self):
        assert face_lattice_isomorphic(catalog_lookup("H_4200").hypergraph).ok

    def test_works_through_closure(self):
        assert face_lattice_isomorphic(paper_a()).ok


class TestLimits:
    def test_simplex_limit(self):
        for n in range(2, 5):
            atoms = "wxyz"[:n]
            h = Hypergraph.from_sets(
                [{a} for a in atoms] + [set(atoms)])
            p = abstract_polytope(h)
            assert f_vector(p) == tuple(
                len(list(itertools.combinations(atoms, k + 1)))
                for k in range(n - 1))
            assert face_lattice_isomorphic(h).ok

    def test_permutohedron_limit(self):
        for n in range(2, 5):
            atoms = "wxyz"[:n]
            sets = [set(c) for r in range(1, n + 1)
                    for c in itertools.combinations(atoms, r)]
            h = Hypergraph.from_sets(sets)
            import math
            assert len(enumerate_constructions(h)) == math.factorial(n)
            assert face_lattice_isomorphic(h).ok


class TestExports:
    def test_off_triangle(self):
        off = to_off(realize(catalog_lookup("H_301").hypergraph))
        lines = off.splitlines()
        assert lines[0] == "OFF"
        assert lines[1] == "3 1 3"
        assert lines[5].startswith("3 ")

    def test_off_tetrahedron_euler(self):
        off = to_off(realize(catalog_lookup("H_4001").hypergraph))
        lines = off.splitlines()
        nv, nf, ne = map(int, lines[1].split())
        assert (nv, nf, ne) == (4, 4, 6)
        cycles = [list(map(int, ln.split()))[1:] for ln in lines[2 + nv:]]
        assert all(len(c) == 3 for c in cycles)

    def test_off_every_rank3_entry(self):
        from nestohedra import catalog
        for e in catalog():
            rp = realize(e.hypergraph)
            if rp.dimension != 3:
                continue
            lines = to_off(rp).splitlines()
            nv, nf, ne = map(int, lines[1].split())
            assert nv - ne + nf == 2
            cycles = [list(map(int, ln.split()))[1:] for ln in lines[2 + nv:]]
            # every facet polygon walks each of its vertices exactly once
            for cyc, spec in zip(cycles, rp.facet_specs):
                expect = {i for i in range(nv)
                          if rp.incidence[i][rp.facet_specs.index(spec)]}
                assert sorted(cyc) == sorted(expect)

    def test_off_product_prism(self):
        # pentagon x segment: a disconnected hypergraph realizing in 3-D
        h = Hypergraph.from_sets(
            [{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"},
             {"d"}, {"e"}, {"d", "e"}])
        rp = realize(h)
        assert rp.dimension == 3
        lines = to_off(rp).splitlines()
        nv, nf, ne = map(int, lines[1].split())
        assert (nv, nf) == (10, 7)
        assert nv - ne + nf == 2

    def test_off_segment_and_point(self):
        seg = realize(Hypergraph.from_sets([{"x"}, {"y"}, {"x", "y"}]))
        lines = to_off(seg).splitlines()
        assert lines[1] == "2 0 1"
        pt = realize(Hypergraph.from_sets([{"x"}]))
        assert to_off(pt).splitlines()[1] == "1 0 0"

    def test_json_exact_integers(self):
        import json
        doc = to_json_dict(realize(abar()))
        text = json.dumps(doc)
        back = json.loads(text)
        assert back["dimension"] == 3
        assert all(isinstance(c, int)
                   for v in back["vertices"] for c in v["coords"])
