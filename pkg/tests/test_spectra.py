import math
from itertools import combinations

import pytest

from hermia.digraph import Digraph, hermitian
from hermia.errors import InternalInconsistency
from hermia.families import (
    named_digraph,
    negative_tetrahedron,
    negative_triangle,
    rank3_variant_a,
)
from hermia.gaussian import GaussianInt, GaussianMatrix
from hermia.spectra import (
    CharPoly,
    Inertia,
    Spectrum,
    char_poly,
    cospectral,
    eigenvalues,
    inertia,
    inertia_from_charpoly,
    interlacing_holds,
    rank,
    spectral_radius,
    spectrum_of,
    trace_power,
    triangle_balance,
)
from hermia.twins import ExpansionVector, twin_expand

from .conftest import random_digraph
from .oracles import brute_triangle_counts, charpoly_by_cofactors


class TestCharPoly:
    def test_tetrahedron(self):
        # (x + 3)(x - 1)^3
        assert char_poly(hermitian(negative_tetrahedron())).coeffs == (-3, 8, -6, 0, 1)

    def test_triangle(self):
        # (x + 2)(x - 1)^2
        assert char_poly(hermitian(negative_triangle())).coeffs == (2, -3, 0, 1)

    def test_zero_matrix(self):
        assert char_poly(hermitian(Digraph(5))).coeffs == (0, 0, 0, 0, 0, 1)

    def test_large_expansion_example(self):
        t = ExpansionVector.of(0, 1, 2, 6, 9)
        p = char_poly(hermitian(twin_expand(negative_tetrahedron(), t)))
        assert p.coeffs == (0,) * 14 + (-324, 384, -101, 0, 1)

    def test_matches_cofactor_oracle_exhaustive_n3(self, corpus3):
        for e in corpus3.entries:
            assert e.charpoly.coeffs == charpoly_by_cofactors(e.digraph)

    def test_matches_cofactor_oracle_sampled_n4(self, rng):
        for _ in range(80):
            d = random_digraph(rng, 4)
            assert char_poly(hermitian(d)).coeffs == charpoly_by_cofactors(d)

    def test_subdiagonal_coefficient_always_zero(self, rng):
        for _ in range(40):
            d = random_digraph(rng, rng.randrange(1, 7))
            assert char_poly(hermitian(d)).coeffs[d.n - 1] == 0

    def test_json_round_trip(self):
        p = CharPoly((-3, 8, -6, 0, 1))
        assert CharPoly.from_json(p.to_json()) == p
        assert p.to_json() == '["-3", "8", "-6", "0", "1"]'

    def test_shift_deflate_roots(self):
        p = CharPoly((-3, 8, -6, 0, 1))
        assert p(1) == 0 and p(-3) == 0
        assert p.shifted(1)(0) == p(1)
        assert p.deflate(1).coeffs == (3, -5, 1, 1)
        assert p.integer_roots() == [(-3, 1), (1, 3)]

    def test_try_divide(self):
        p = CharPoly((-3, 8, -6, 0, 1))
        q = CharPoly((3, 1))  # x + 3
        cubic = p.try_divide(q)
        assert cubic is not None and cubic.coeffs == (-1, 3, -3, 1)
        assert p.try_divide(CharPoly((5, 1))) is None


class TestInertia:
    def test_named(self):
        assert inertia(hermitian(negative_tetrahedron())) == Inertia(3, 1, 0)
        assert inertia(hermitian(negative_triangle())) == Inertia(2, 1, 0)
        assert inertia(hermitian(Digraph(6))) == Inertia(0, 0, 6)

    def test_rank(self):
        assert rank(hermitian(negative_tetrahedron())) == 4
        assert rank(hermitian(rank3_variant_a())) == 3
        assert rank(hermitian(Digraph(3))) == 0

    def test_agrees_with_float_signs(self, corpus4):
        for e in corpus4.entries:
            vals = eigenvalues(hermitian(e.digraph)).values
            pos = sum(v > 1e-9 for v in vals)
            neg = sum(v < -1e-9 for v in vals)
            assert (pos, neg, 4 - pos - neg) == tuple(e.inertia)

    def test_constant_coefficient_sign(self, rng):
        # c0 = (-1)^n det H and sign(det H) = (-1)^(negative count) when full rank.
        seen = 0
        while seen < 60:
            n = rng.randrange(2, 7)
            d = random_digraph(rng, n)
            p = char_poly(hermitian(d))
            i = inertia_from_charpoly(p)
            if i.n_zero:
                continue
            seen += 1
            assert p.coeffs[0] * (-1) ** (n + i.n_neg) > 0


class TestTracePowers:
    def test_tetrahedron_powers(self):
        h = hermitian(negative_tetrahedron())
        assert trace_power(h, 1) == 0
        assert trace_power(h, 2) == 12
        assert trace_power(h, 3) == -24  # (-3)^3 + 3 = -24
        assert trace_power(h, 4) == 84  # 81 + 3

    def test_edge_count_identity(self, rng):
        for _ in range(30):
            d = random_digraph(rng, rng.randrange(1, 7))
            assert trace_power(hermitian(d), 2) == 2 * d.edge_count_underlying()

    def test_exponent_bounds(self):
        with pytest.raises(ValueError):
            trace_power(hermitian(Digraph(2)), 5)


class TestTriangleBalance:
    def test_tetrahedron_all_faces_negative(self):
        assert tuple(triangle_balance(negative_tetrahedron())) == (0, 0, 0, 4)

    def test_all_digon_triangle(self):
        d = negative_triangle().underlying_graph()
        assert tuple(triangle_balance(d)) == (0, 0, 1, 0)

    def test_matches_oracle(self, rng):
        for _ in range(40):
            d = random_digraph(rng, 5)
            assert tuple(triangle_balance(d)) == brute_triangle_counts(d)

    def test_trace_identity_random_n5(self, rng):
        for _ in range(40):
            d = random_digraph(rng, 5)
            b = triangle_balance(d)
            assert trace_power(hermitian(d), 3) == 6 * (b.x1 + b.x2 + b.x3 - b.x4)


class TestEigenvalues:
    def test_tetrahedron(self):
        vals = eigenvalues(hermitian(negative_tetrahedron())).values
        assert max(abs(v - e) for v, e in zip(vals, (1, 1, 1, -3))) < 1e-9

    def test_uniform_expansion_scales(self):
        t = ExpansionVector.of(0, 2, 2, 2, 2)
        vals = spectrum_of(twin_expand(negative_tetrahedron(), t)).values
        expect = (2, 2, 2, 0, 0, 0, 0, -6)
        assert max(abs(v - e) for v, e in zip(vals, expect)) < 1e-9

    def test_variant_a_golden_ratio_like(self):
        t = ExpansionVector.of(0, 1, 1, 1, 1)
        vals = spectrum_of(twin_expand(rank3_variant_a(), t)).values
        expect = ((-1 + math.sqrt(17)) / 2, 1, 0, (-1 - math.sqrt(17)) / 2)
        assert max(abs(v - e) for v, e in zip(vals, expect)) < 1e-9

    def test_multiplicity_grouping(self):
        s = eigenvalues(hermitian(negative_tetrahedron()))
        assert [(round(v), m) for v, m in s.multiplicities()] == [(1, 3), (-3, 1)]

    def test_sum_near_zero(self, rng):
        for _ in range(20):
            d = random_digraph(rng, 6)
            assert abs(sum(spectrum_of(d).values)) < 1e-9 * 6


class TestCospectral:
    def test_triangle_pair(self):
        a = twin_expand(negative_triangle(), ExpansionVector.of(0, 3, 3, 18))
        b = twin_expand(negative_triangle(), ExpansionVector.of(4, 2, 9, 9))
        assert cospectral(a, b)

    def test_converse_always_cospectral(self, rng):
        for _ in range(20):
            d = random_digraph(rng, 6)
            assert cospectral(d, d.converse())

    def test_antispectral_not_cospectral(self):
        assert not cospectral(negative_triangle(), negative_triangle().underlying_graph())

    def test_different_orders(self):
        assert not cospectral(Digraph(2), Digraph(3))


class TestRadiusAndInterlacing:
    def test_radius_examples(self):
        assert spectral_radius(negative_tetrahedron()) == pytest.approx(3.0, abs=1e-9)
        assert spectral_radius(Digraph(3)) == 0.0
        assert spectral_radius(named_digraph("k2")) == pytest.approx(1.0, abs=1e-9)

    def test_radius_bound_three_mu1(self, corpus4):
        for e in corpus4.entries:
            vals = eigenvalues(hermitian(e.digraph)).values
            if not vals:
                continue
            assert max(abs(v) for v in vals) <= 3 * vals[0] + 1e-9

    def test_interlacing_tetrahedron_faces(self):
        h = hermitian(negative_tetrahedron())
        for sub in combinations(range(4), 3):
            assert interlacing_holds(h, sub)

    def test_interlacing_full_set(self, rng):
        d = random_digraph(rng, 5)
        assert interlacing_holds(hermitian(d), range(5))

    def test_interlacing_random(self, rng):
        for _ in range(60):
            n = rng.randrange(2, 8)
            d = random_digraph(rng, n)
            m = rng.randrange(1, n)
            sub = rng.sample(range(n), m)
            assert interlacing_holds(hermitian(d), sub)


class TestQuotientSupport:
    def test_complex_coefficient_raises(self):
        # A non-Hermitian matrix with genuinely complex spectrum.
        i = GaussianInt(0, 1)
        z = GaussianInt(0)
        m = GaussianMatrix(((z, i), (z, z)))  # nilpotent: fine, charpoly x^2
        assert char_poly(m).coeffs == (0, 0, 1)
        bad = GaussianMatrix(((i, z), (z, z)))  # eigenvalues {i, 0}
        with pytest.raises(InternalInconsistency):
            char_poly(bad)
