import itertools

import numpy as np
import pytest

from conicdsrg.construction import (
    antipode_split,
    antipodes,
    build_context,
    build_delta,
    build_groups,
    frobenius_permutation,
    veronese_matrix,
    veronese_permutation,
    verify_bundle_structure,
)
from conicdsrg.digraph import degrees, verify_drg
from conicdsrg.geometry import bilinear_form, quadratic_form
from conicdsrg.gf2e import FieldSpec
from conicdsrg.permgroups import orbits_on_set, point_stabilizer


class TestGamma:
    def test_q8(self, ctx8):
        G = ctx8.gamma
        assert G.n == 63 and G.is_symmetric()
        assert set(degrees(G)[0]) == {8}

    def test_q4(self, ctx4):
        assert ctx4.gamma.n == 15
        assert set(degrees(ctx4.gamma)[0]) == {4}
        assert verify_drg(ctx4.gamma, ((4, 2, 1), (1, 1, 4))).passed

    def test_adjacency_criteria_agree_on_scaled_reps(self, ctx8):
        # (x, y)^2 = Q(x) Q(y) for arbitrary scalar multiples
        F, X, A = ctx8.field, ctx8.X, ctx8.gamma.adj
        for i, j in itertools.combinations(range(0, 63, 4), 2):
            for a, b in ((2, 5), (7, 3)):
                x = tuple(F.mul(a, c) for c in X[i])
                y = tuple(F.mul(b, c) for c in X[j])
                xy = bilinear_form(F, x, y)
                adj = F.mul(xy, xy) == F.mul(quadratic_form(F, x), quadratic_form(F, y))
                assert adj == bool(A[i, j])

    def test_edge_transitive(self, ctx8):
        edges = {(u, v) for u, v in ctx8.gamma.arcs()}
        u, v = min(edges)
        images = {(g.images[u], g.images[v]) for g in ctx8.group_full}
        assert images == edges


class TestVeronese:
    def test_identity(self):
        F = FieldSpec.default(3)
        assert veronese_permutation(F, ((1, 0), (0, 1))).is_identity()

    def test_conic_parametrization(self):
        F = FieldSpec.default(3)
        for m in [((1, 1), (0, 1)), ((2, 3), (5, 7)), ((0, 1), (1, 0))]:
            (a, b), (c, d) = m
            if F.mul(a, d) ^ F.mul(b, c) == 0:
                continue
            M = veronese_matrix(F, m)
            for s, t in [(1, u) for u in range(8)] + [(0, 1)]:
                pt = (F.mul(s, s), F.mul(s, t), F.mul(t, t))
                img = tuple(F.mul(M[r][0], pt[0]) ^ F.mul(M[r][1], pt[1])
                            ^ F.mul(M[r][2], pt[2]) for r in range(3))
                s2, t2 = F.mul(a, s) ^ F.mul(b, t), F.mul(c, s) ^ F.mul(d, t)
                assert img == (F.mul(s2, s2), F.mul(s2, t2), F.mul(t2, t2))
                assert quadratic_form(F, img) == 0

    def test_preserves_gamma(self, ctx8):
        for g in ctx8.psl_gens:
            assert ctx8.gamma.is_invariant_under(g.images)
        assert ctx8.gamma.is_invariant_under(ctx8.frobenius.images)

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            veronese_permutation(FieldSpec.default(3), ((1, 1), (1, 1)))

    def test_frobenius_has_order_e(self):
        F = FieldSpec.default(4)
        assert frobenius_permutation(F).order() == 4


class TestGroups:
    @pytest.mark.parametrize("e,small,full", [(2, 60, 120), (3, 504, 1512)])
    def test_orders(self, e, small, full):
        ctx = build_context(FieldSpec.default(e))
        assert ctx.group_small.order == small
        assert ctx.group_full.order == full
        assert ctx.group_small.is_transitive() and ctx.group_full.is_transitive()

    def test_other_modulus(self):
        F = FieldSpec(3, 0b1101)
        small, full = build_groups(F)
        assert (small.order, full.order) == (504, 1512)


class TestAntipodeSplit:
    def test_sizes_every_vertex(self, ctx8):
        for p in range(0, 63, 9):
            a, b = antipode_split(ctx8, p)
            assert len(a) == len(b) == 3
            assert min(a) < min(b)
            assert sorted(a + b + [p]) == ctx8.X.antipodal_class(p)

    def test_small_stabilizer_fixes_class(self, ctx8):
        S = point_stabilizer(ctx8.group_small, 0)
        assert orbits_on_set(S, antipodes(ctx8, 0)) == [[j] for j in antipodes(ctx8, 0)]

    def test_requires_q8(self, ctx4):
        with pytest.raises(ValueError):
            antipode_split(ctx4, 0)


class TestDelta:
    def test_arc_counts(self, ctx8, delta_a, delta_b):
        for D in (delta_a, delta_b):
            assert int(D.adj.sum()) == 693
            one_way = D.adj & (1 - D.adj.T)
            assert int(one_way.sum()) == 189
            sym = D.adj & D.adj.T
            assert (sym == ctx8.gamma.adj).all()

    def test_three_out_into_antipodal_class(self, ctx8, delta_a):
        one_way = delta_a.adj & (1 - delta_a.adj.T)
        for u in range(63):
            targets = np.flatnonzero(one_way[u]).tolist()
            assert len(targets) == 3
            assert set(targets) <= set(ctx8.X.antipodal_class(u))

    def test_invariant_under_full_group(self, ctx8, delta_a, delta_b):
        for g in ctx8.group_full:
            assert delta_a.is_invariant_under(g.images)
            assert delta_b.is_invariant_under(g.images)

    def test_bad_choice(self, ctx8):
        with pytest.raises(ValueError):
            build_delta(ctx8, "C")

    def test_a_and_b_differ(self, delta_a, delta_b):
        assert delta_a != delta_b


class TestBundleStructure:
    @pytest.mark.parametrize("e", [2, 3])
    def test_passes(self, e):
        ctx = build_context(FieldSpec.default(e))
        q = ctx.field.q
        for p in (0, len(ctx.X) - 1):
            cert = verify_bundle_structure(ctx, p)
            assert cert.passed, cert.reason
            assert len(cert.singletons) == q - 1
            assert sorted(cert.conic_orbits) == list(range(1, q))
            assert all(len(o) == q for o in cert.conic_orbits.values())

    def test_neighbourhood_is_c_equal_one(self, ctx8):
        cert = verify_bundle_structure(ctx8, 0)
        assert cert.conic_orbits[1] == ctx8.gamma.out_neighbors(0)
