import pytest

from torifan.catalog import named_fan
from torifan.fan import fan_from_rays_2d, projective_plane_fan
from torifan.lattice import vsum
from torifan.primitive import (
    IncompleteFanError,
    extremality_flags,
    is_extremal,
    is_fano,
    is_weak_fano,
    mori_cone_generated_by_extremal,
    picard_rank,
    primitive_collections,
    relation_lattice,
    two_element_relation_kind,
)


def hirzebruch(a):
    return fan_from_rays_2d([(1, 0), (-1, 0), (0, 1), (a, -1)])


class TestCollections:
    def test_p2_single_collection(self):
        rels = primitive_collections(projective_plane_fan())
        assert len(rels) == 1
        rel = rels[0]
        assert rel.collection == (0, 1, 2)
        assert rel.sigma == () and rel.coeffs == ()
        assert rel.degree == 3

    def test_f2_two_collections(self):
        fan = named_fan("F2").fan  # rays (1,0), (-1,0), (1,1), (1,-1)
        rels = primitive_collections(fan)
        by_collection = {r.collection: r for r in rels}
        assert set(by_collection) == {(0, 1), (2, 3)}
        assert by_collection[(0, 1)].degree == 2
        crepant = by_collection[(2, 3)]
        assert crepant.degree == 0
        assert crepant.coeffs == ((0, 2),)  # (1,1) + (1,-1) = 2*(1,0)

    def test_x3_0_has_opposite_section_pair(self):
        fan = named_fan("X3_0").fan
        rels = primitive_collections(fan)
        assert any(len(r.collection) == 2 and r.coeffs == () for r in rels)

    def test_collections_are_minimal_non_faces(self):
        for name in ("S6", "W6_2", "X4_1", "PP2_O_O3"):
            fan = named_fan(name).fan
            faces = set()
            for cone in fan.max_cones:
                from itertools import combinations

                for k in range(len(cone) + 1):
                    faces.update(frozenset(c) for c in combinations(cone, k))
            for rel in primitive_collections(fan):
                s = frozenset(rel.collection)
                assert s not in faces
                assert all(s - {i} in faces for i in s)

    def test_deterministic_lexicographic_order(self):
        fan = named_fan("W7").fan
        rels = primitive_collections(fan)
        assert [r.collection for r in rels] == sorted(r.collection for r in rels)

    def test_incomplete_fan_raises(self):
        from torifan.fan import Fan

        p2 = projective_plane_fan()
        broken = Fan(2, p2.rays, p2.max_cones[:2])
        with pytest.raises((IncompleteFanError, ValueError)):
            primitive_collections(broken)


class TestRelationInvariants:
    def test_lattice_identity_holds_exactly(self):
        for name in ("P2", "F2", "W6_3", "X3_0", "X5_1", "P1xW7", "PP2_O_O3"):
            fan = named_fan(name).fan
            for rel in primitive_collections(fan):
                left = vsum([fan.rays[i] for i in rel.collection], fan.dim)
                right = vsum(
                    [tuple(a * x for x in fan.rays[i]) for i, a in rel.coeffs], fan.dim
                )
                assert left == right

    def test_class_vector_is_a_relation_among_rays(self):
        for name in ("S7", "X4_0", "P1xW5_2"):
            fan = named_fan(name).fan
            for rel in primitive_collections(fan):
                assert vsum(
                    [tuple(c * x for x in ray) for c, ray in zip(rel.cls, fan.rays)],
                    fan.dim,
                ) == (0,) * fan.dim

    def test_degree_equals_class_component_sum(self):
        for name in ("W4_2", "X4_1", "P1xF2"):
            fan = named_fan(name).fan
            for rel in primitive_collections(fan):
                assert rel.degree == sum(rel.cls)

    def test_sigma_is_unique_by_brute_force(self):
        from _oracles import brute_force_sigma

        for name in ("F1", "W3", "X3_0"):
            fan = named_fan(name).fan
            for rel in primitive_collections(fan):
                total = vsum([fan.rays[i] for i in rel.collection], fan.dim)
                hits = brute_force_sigma(fan.rays, fan.max_cones, total)
                assert len(hits) == 1
                face, coeffs = hits[0]
                assert face == rel.sigma
                assert tuple(coeffs) == tuple(a for _, a in rel.coeffs)


class TestFanoPredicates:
    def test_p2_fano(self):
        assert is_fano(projective_plane_fan())

    def test_f2_weak_not_fano(self):
        fan = named_fan("F2").fan
        assert is_weak_fano(fan)
        assert not is_fano(fan)

    def test_f3_not_weak_fano(self):
        # (0,1) + (3,-1) = 3*(1,0): degree 2 - 3 = -1
        fan = hirzebruch(3)
        rels = primitive_collections(fan)
        assert min(r.degree for r in rels) == -1
        assert not is_weak_fano(fan)

    def test_all_catalog_surfaces_weak_fano(self):
        from torifan.catalog import surfaces

        for nf in surfaces():
            rels = primitive_collections(nf.fan)
            assert is_weak_fano(nf.fan, rels)
            assert is_fano(nf.fan, rels) == nf.expected["fano"]


class TestTrichotomy:
    def test_zero_shape(self):
        fan = named_fan("X3_0").fan
        rel = next(
            r for r in primitive_collections(fan) if len(r.collection) == 2 and not r.coeffs
        )
        assert two_element_relation_kind(rel).kind == "zero"

    def test_single_ray_shape_on_f2(self):
        fan = named_fan("F2").fan
        rel = next(r for r in primitive_collections(fan) if r.degree == 0)
        shape = two_element_relation_kind(rel)
        assert shape.kind == "single_ray" and shape.a == 2

    def test_single_ray_center_on_x4_1(self):
        fan = named_fan("X4_1").fan
        rel = next(
            r
            for r in primitive_collections(fan)
            if len(r.collection) == 2 and len(r.coeffs) == 1 and r.coeffs[0][1] == 2
        )
        shape = two_element_relation_kind(rel)
        assert shape.kind == "single_ray" and shape.a == 2
        assert shape.center == rel.coeffs[0][0]

    def test_two_rays_shape(self):
        from torifan.classify import BundleSpec, build_bundle

        fan = build_bundle(BundleSpec(named_fan("P1xP1").fan, (1, 1), (0, 0)))
        rel = next(r for r in primitive_collections(fan) if len(r.coeffs) == 2)
        assert two_element_relation_kind(rel).kind == "two_rays"

    def test_outside_trichotomy_errors(self):
        fan = hirzebruch(3)
        rel = next(r for r in primitive_collections(fan) if r.degree == -1)
        with pytest.raises(ValueError):
            two_element_relation_kind(rel)

    def test_wrong_size_rejected(self):
        rel = primitive_collections(projective_plane_fan())[0]
        with pytest.raises(ValueError):
            two_element_relation_kind(rel)


class TestExtremality:
    def test_p2_unique_class_extremal(self):
        fan = projective_plane_fan()
        rels = primitive_collections(fan)
        assert is_extremal(fan, rels[0], rels)

    def test_f2_both_classes_extremal(self):
        fan = named_fan("F2").fan
        rels = primitive_collections(fan)
        assert extremality_flags(fan, rels) == (True, True)

    def test_x4_0_crepant_relation_extremal(self):
        fan = named_fan("X4_0").fan
        rels = primitive_collections(fan)
        rel = next(r for r in rels if r.degree == 0 and len(r.coeffs) == 1)
        assert rel.coeffs[0][1] == 2
        assert is_extremal(fan, rel, rels)

    def test_basis_pair_double_relations_extremal_on_catalog(self):
        # any relation x1 + x2 = 2y with {x1, y} a lattice basis is extremal
        from torifan.catalog import threefolds
        from torifan.lattice import cross3

        for nf in threefolds():
            fan = nf.fan
            rels = primitive_collections(fan)
            for rel in rels:
                if len(rel.collection) != 2 or len(rel.coeffs) != 1 or rel.coeffs[0][1] != 2:
                    continue
                x1 = fan.rays[rel.collection[0]]
                y = fan.rays[rel.coeffs[0][0]]
                # extend {x1, y} by a cross direction to test unimodularity
                n = cross3(x1, y)
                from math import gcd

                g = 0
                for c in n:
                    g = gcd(g, c)
                if g == 1:
                    assert is_extremal(fan, rel, rels)

    def test_mori_cone_generated_by_extremal_classes(self):
        for name in ("W6_1", "X5_1", "P1xW6_3", "PP2_O_O3"):
            fan = named_fan(name).fan
            assert mori_cone_generated_by_extremal(fan)


class TestRelationLattice:
    def test_rank_is_picard_number(self):
        for name in ("P2", "S6", "X4_1", "P1xW7"):
            fan = named_fan(name).fan
            lattice = relation_lattice(fan)
            assert lattice.rank == picard_rank(fan) == len(fan.rays) - fan.dim

    def test_basis_vectors_are_relations(self):
        fan = named_fan("X3_0").fan
        lattice = relation_lattice(fan)
        for vec in lattice.basis:
            total = vsum(
                [tuple(c * x for x in ray) for c, ray in zip(vec, fan.rays)], fan.dim
            )
            assert total == (0,) * fan.dim

    def test_classes_lie_in_the_relation_lattice(self):
        # every primitive relation class is an integer combination of the basis
        from torifan.lattice import solve_rational, matrix_from_columns

        fan = named_fan("W4_1").fan
        lattice = relation_lattice(fan)
        cols = matrix_from_columns(lattice.basis)
        for rel in primitive_collections(fan):
            sol = solve_rational(cols, rel.cls)
            assert sol is not None
            assert all(c.denominator == 1 for c in sol)
