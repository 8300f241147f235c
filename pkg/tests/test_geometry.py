import itertools

import pytest

from conicdsrg.geometry import (
    NUCLEUS,
    SingularPointError,
    bilinear_form,
    bundle_conic,
    conic_points,
    normalize,
    perp_conic_point,
    projective_points,
    quadratic_form,
    scale,
    vertex_set,
)
from conicdsrg.gf2e import FieldSpec

GF8 = FieldSpec.default(3)
FIELDS = [FieldSpec.default(e) for e in (1, 2, 3, 4)]


def triples(F):
    return itertools.product(range(F.q), repeat=3)


class TestForms:
    def test_quadratic_examples(self):
        assert quadratic_form(GF8, (1, 0, 1)) == 1
        assert quadratic_form(GF8, (1, 1, 1)) == 0
        assert quadratic_form(GF8, NUCLEUS) == 1

    def test_bilinear_examples(self):
        assert bilinear_form(GF8, (1, 0, 0), (0, 0, 1)) == 1
        for y in triples(GF8):
            assert bilinear_form(GF8, NUCLEUS, y) == 0
            assert bilinear_form(GF8, y, y) == 0

    @pytest.mark.parametrize("F", FIELDS[:3], ids=lambda F: f"q{F.q}")
    def test_polarization(self, F):
        for x in triples(F):
            for y in triples(F):
                s = tuple(a ^ b for a, b in zip(x, y))
                assert bilinear_form(F, x, y) == (
                    quadratic_form(F, s) ^ quadratic_form(F, x) ^ quadratic_form(F, y))
                assert bilinear_form(F, x, y) == bilinear_form(F, y, x)

    def test_bilinearity(self):
        for x, y in itertools.combinations(list(triples(GF8))[::7], 2):
            s = tuple(a ^ b for a, b in zip(x, y))
            for z in list(triples(GF8))[::11]:
                assert bilinear_form(GF8, s, z) == (
                    bilinear_form(GF8, x, z) ^ bilinear_form(GF8, y, z))

    @pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"q{F.q}")
    def test_q_homogeneous_degree_two(self, F):
        for x in triples(F):
            qx = quadratic_form(F, x)
            for a in range(F.q):
                assert quadratic_form(F, scale(F, a, x)) == F.mul(F.mul(a, a), qx)


class TestNormalize:
    def test_examples(self):
        assert normalize(GF8, (1, 0, 1)) == (1, 0, 1)
        # Q = 2, sqrt(2) = 6, 1/6 = 3
        assert normalize(GF8, (1, 0, 2)) == (3, 0, 6)
        assert quadratic_form(GF8, (3, 0, 6)) == 1
        with pytest.raises(SingularPointError, match="singular point has no normalization"):
            normalize(GF8, (1, 1, 1))

    @pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"q{F.q}")
    def test_scale_invariant_idempotent(self, F):
        for x in projective_points(F):
            if quadratic_form(F, x) == 0:
                continue
            xb = normalize(F, x)
            assert quadratic_form(F, xb) == 1
            assert normalize(F, xb) == xb
            for a in range(1, F.q):
                assert normalize(F, scale(F, a, x)) == xb


class TestPointSets:
    @pytest.mark.parametrize("e,size", [(1, 3), (2, 15), (3, 63), (4, 255)])
    def test_vertex_set_size(self, e, size):
        X = vertex_set(FieldSpec.default(e))
        assert len(X) == size
        assert list(X.points) == sorted(X.points)
        assert NUCLEUS not in X.index
        F = X.field
        assert all(quadratic_form(F, x) == 1 for x in X)

    @pytest.mark.parametrize("e,size", [(1, 3), (3, 9)])
    def test_conic_points(self, e, size):
        F = FieldSpec.default(e)
        C = conic_points(F)
        assert len(C) == size
        for x in C:
            assert quadratic_form(F, x) == 0
            assert bilinear_form(F, x, NUCLEUS) == 0

    @pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"q{F.q}")
    def test_point_count(self, F):
        assert len(vertex_set(F)) + len(conic_points(F)) + 1 == F.q ** 2 + F.q + 1

    def test_conic_is_rational_normal_curve(self):
        F = GF8
        expected = {(1, t, F.mul(t, t)) for t in range(8)} | {(0, 0, 1)}
        assert set(conic_points(F)) == expected

    def test_vertex_list_format(self):
        text = vertex_set(FieldSpec.default(2)).format()
        lines = text.splitlines()
        assert len(lines) == 15 and lines[0].startswith("0: (")


class TestBundle:
    def test_perp_point(self):
        X = vertex_set(GF8)
        for p in X:
            y = perp_conic_point(GF8, p)
            assert bilinear_form(GF8, y, p) == 0
            assert quadratic_form(GF8, y) == 0
            assert y not in X.index

    def test_bundle_conics_partition(self):
        X = vertex_set(GF8)
        for i in (0, 17, 62):
            p = X[i]
            conics = [bundle_conic(GF8, p, c) for c in range(1, 8)]
            assert [len(c) for c in conics] == [8] * 7
            covered = set().union(*conics)
            assert len(covered) == 56
            anti = {X[j] for j in X.antipodal_class(i)}
            assert len(anti) == 7 and not covered & anti
            assert covered | anti == set(X)

    def test_full_conic_passes_through_tangent_point(self):
        # over all of PG(2,q) the bundle conic has q + 1 points; the extra
        # one is C meet p^perp
        F = GF8
        X = vertex_set(F)
        p = X[5]
        t = perp_conic_point(F, p)
        for c in range(1, 8):
            full = {x for x in projective_points(F)
                    if F.mul(quadratic_form(F, p), quadratic_form(F, x))
                    ^ F.mul(c, F.mul(bilinear_form(F, x, p), bilinear_form(F, x, p))) == 0}
            assert len(full) == 9
            assert t in full
            inside = {normalize(F, x) for x in full if quadratic_form(F, x)}
            assert inside == bundle_conic(F, p, c)

    def test_zero_parameter_rejected(self):
        with pytest.raises(ValueError):
            bundle_conic(GF8, vertex_set(GF8)[0], 0)
