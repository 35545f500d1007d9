import numpy as np
import pytest

from hermia.digraph import Digraph, canonical_form, hermitian, is_isomorphic
from hermia.enumeration import (
    batched_charpolys,
    batched_inertia,
    build_corpus,
    canonical_codes,
    classify_one_negative,
    code_to_canon_bytes,
    decode_digraph,
    encode_digraph,
    expansion_collision_search,
    load_corpus,
    random_expansion_samples,
    save_corpus,
    shds_check,
    tminus_collision_search,
    verify_lambda_max_one,
    verify_tr_theorem,
)
from hermia.families import (
    named_digraph,
    negative_tetrahedron,
    negative_triangle,
    rank3_variant_a,
    rank3_variant_b,
)
from hermia.spectra import char_poly, inertia_from_charpoly
from hermia.twins import ExpansionVector, twin_expand

from .conftest import random_digraph


class TestCodes:
    def test_round_trip(self, rng):
        for _ in range(30):
            d = random_digraph(rng, rng.randrange(7))
            assert decode_digraph(d.n, encode_digraph(d)) == d

    def test_canon_bytes_match_canonical_form(self, rng):
        for _ in range(30):
            d = random_digraph(rng, 4)
            codes = canonical_codes(4)
            # the canonical code of d's class is the orbit minimum
            from hermia.enumeration import _canon_for_codes

            c = int(_canon_for_codes(4, np.array([encode_digraph(d)], dtype=np.uint32))[0])
            assert code_to_canon_bytes(4, c) == canonical_form(d)
            assert c in set(int(x) for x in codes)


class TestBatchedKernels:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_charpolys_match_faddeev_leverrier_exhaustively(self, n):
        total = 1 << (2 * (n * (n - 1) // 2))
        codes = np.arange(total, dtype=np.uint64)
        coeffs = batched_charpolys(n, codes)
        step = max(1, total // 128)
        for code in range(0, total, step):
            d = decode_digraph(n, code)
            assert tuple(int(c) for c in coeffs[code]) == char_poly(hermitian(d)).coeffs

    def test_charpolys_match_sampled_n5_n6(self, rng):
        for n in (5, 6):
            codes = np.array(
                [encode_digraph(random_digraph(rng, n)) for _ in range(40)],
                dtype=np.uint64,
            )
            coeffs = batched_charpolys(n, codes)
            for row, code in enumerate(codes):
                d = decode_digraph(n, int(code))
                assert tuple(int(c) for c in coeffs[row]) == char_poly(hermitian(d)).coeffs

    def test_batched_inertia_matches_descartes(self, rng):
        codes = np.array(
            [encode_digraph(random_digraph(rng, 6)) for _ in range(60)], dtype=np.uint64
        )
        coeffs = batched_charpolys(6, codes)
        p, q, z = batched_inertia(coeffs)
        for row in range(len(codes)):
            poly_coeffs = tuple(int(c) for c in coeffs[row])
            from hermia.spectra import CharPoly

            want = inertia_from_charpoly(CharPoly(poly_coeffs))
            assert (int(p[row]), int(q[row]), int(z[row])) == tuple(want)


class TestCorpus:
    def test_known_class_counts(self, corpus3, corpus4, corpus5):
        assert [len(build_corpus(n)) for n in (1, 2)] == [1, 3]
        assert len(corpus3) == 16
        assert len(corpus4) == 218
        assert len(corpus5) == 9608

    def test_entries_are_canonical_and_sorted(self, corpus4):
        canons = [e.canon for e in corpus4.entries]
        assert canons == sorted(canons)
        for e in corpus4.entries[::13]:
            assert canonical_form(e.digraph) == e.canon

    def test_cached_charpolys_exact(self, corpus4):
        for e in corpus4.entries[::7]:
            assert e.charpoly == char_poly(hermitian(e.digraph))
            assert e.inertia == inertia_from_charpoly(e.charpoly)

    def test_save_load_round_trip(self, corpus3, tmp_path):
        path = tmp_path / "corpus3.txt"
        save_corpus(corpus3, path)
        loaded = load_corpus(path)
        assert loaded.n == 3 and len(loaded) == len(corpus3)
        for a, b in zip(loaded.entries, corpus3.entries):
            assert a.canon == b.canon and a.charpoly == b.charpoly
            assert a.digraph == b.digraph

    def test_parallel_build_identical(self, corpus4):
        again = build_corpus(4, parallelism=2)
        assert [e.canon for e in again.entries] == [e.canon for e in corpus4.entries]


class TestClassification:
    def test_order3(self, corpus3):
        found = classify_one_negative(corpus3)
        assert len(found) == 1
        assert is_isomorphic(found[0].digraph, negative_triangle()) is not None

    def test_order4(self, corpus4):
        found = {e.canon for e in classify_one_negative(corpus4)}
        expected = {
            canonical_form(rank3_variant_a()),
            canonical_form(rank3_variant_b()),
            canonical_form(negative_tetrahedron()),
        }
        assert found == expected

    def test_order5_empty(self, corpus5):
        assert classify_one_negative(corpus5) == []

    def test_one_negative_contains_triangle(self, corpus5):
        # Rank > 2 with a single negative eigenvalue forces an induced
        # negative triangle.
        from itertools import combinations

        tri = negative_triangle()
        checked = 0
        for e in corpus5.entries:
            if e.inertia.n_neg != 1 or e.inertia.rank <= 2:
                continue
            checked += 1
            assert any(
                is_isomorphic(e.digraph.induced_subdigraph(c), tri) is not None
                for c in combinations(range(5), 3)
            )
        assert checked > 0


class TestLambdaMaxOne:
    def test_order2(self):
        found = verify_lambda_max_one(build_corpus(2))
        assert {e.canon for e in found} == {
            canonical_form(named_digraph("k2")),
            canonical_form(named_digraph("k2arrow")),
        }

    def test_order3(self, corpus3):
        found = verify_lambda_max_one(corpus3)
        assert [is_isomorphic(e.digraph, negative_triangle()) is not None for e in found] == [True]

    def test_order4(self, corpus4):
        found = verify_lambda_max_one(corpus4)
        assert [is_isomorphic(e.digraph, negative_tetrahedron()) is not None for e in found] == [True]

    def test_order5_none(self, corpus5):
        assert verify_lambda_max_one(corpus5) == []


class TestTrTheorem:
    def test_seeded_samples(self):
        samples = [d for _, _, d in random_expansion_samples(40, seed=424242)]
        checks = verify_tr_theorem(samples)
        assert all(c.passed for c in checks)
        assert {c.rank for c in checks} == {3, 4}

    def test_expected_reduction_targets(self):
        k = twin_expand(negative_tetrahedron(), ExpansionVector.of(1, 3, 1, 2, 1))
        (check,) = verify_tr_theorem([k])
        assert check.rank == 4 and check.reduction_target == "kminus"
        b = twin_expand(rank3_variant_b(), ExpansionVector.of(0, 2, 1, 1, 2))
        (check,) = verify_tr_theorem([b])
        assert check.rank == 3 and check.reduction_target == "tb"

    def test_tetrahedron_fixed_point(self):
        (check,) = verify_tr_theorem([negative_tetrahedron()])
        assert check.rank == 4 and check.passed


class TestShds:
    def test_triangle_unique_at_order3(self, corpus3):
        r = shds_check(negative_triangle(), corpus3)
        assert r.is_shds and r.cospectral_classes == 1

    def test_tetrahedron_unique_at_order4(self, corpus4):
        r = shds_check(negative_tetrahedron(), corpus4)
        assert r.is_shds and r.cospectral_classes == 1

    def test_padded_tetrahedron_unique_at_order5(self, corpus5):
        d = twin_expand(negative_tetrahedron(), ExpansionVector.of(1, 1, 1, 1, 1))
        r = shds_check(d, corpus5)
        assert r.is_shds and r.cospectral_classes == 1

    def test_cospectral_mate_detected(self, corpus4):
        # A digraph and its converse are cospectral; when not isomorphic the
        # report must flag the mate.
        for e in corpus4.entries:
            if is_isomorphic(e.digraph, e.digraph.converse()) is None:
                r = shds_check(e.digraph, corpus4)
                assert not r.is_shds
                break
        else:
            pytest.fail("expected a non-self-converse order-4 digraph")

    def test_restricted_order6_universe(self):
        d = twin_expand(negative_tetrahedron(), ExpansionVector.of(2, 1, 1, 1, 1))
        r = shds_check(d)
        assert r.order == 6 and r.is_shds


class TestCollisions:
    def test_none_below_eight(self):
        assert expansion_collision_search(7) == []

    def test_example_pair_at_sixty(self):
        reports = expansion_collision_search(60)
        assert len(reports) == 1
        r = reports[0]
        assert r.members == ((9, 18, 20, 60), (10, 12, 36, 45))
        assert r.key == (3522, 45360, 194400)
        assert r.core_charpoly.coeffs == (-583200, 90720, -3522, 0, 1)
        assert r.family_order == 107
        (v,) = r.verdicts
        assert not v.isomorphic and not v.switching_equivalent

    def test_triangle_pairs(self):
        reports = tminus_collision_search(18)
        keys = {r.key: r.members for r in reports}
        assert ((2, 9, 9), (3, 3, 18)) == keys[(117, 162)]
        assert tminus_collision_search(2) == []

    def test_members_share_core_charpoly(self):
        from hermia.families import charpoly_te_kminus

        for r in expansion_collision_search(60):
            for m in r.members:
                p = charpoly_te_kminus(ExpansionVector(0, m))
                assert p.nonzero_part() == r.core_charpoly

    def test_parallelism_determinism(self):
        serial = expansion_collision_search(36, parallelism=1)
        parallel = expansion_collision_search(36, parallelism=2)
        assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]

    def test_checkpoint_resume(self, tmp_path):
        ckpt = str(tmp_path / "collide")
        first = expansion_collision_search(60, checkpoint=ckpt)
        resumed = expansion_collision_search(60, checkpoint=ckpt)
        assert [r.to_json() for r in first] == [r.to_json() for r in resumed]
        import os

        assert os.path.exists(ckpt + ".npz")

    def test_bounds_validation(self):
        with pytest.raises(ValueError):
            expansion_collision_search(0)
