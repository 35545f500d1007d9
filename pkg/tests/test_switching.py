import random

import pytest

from hermia.digraph import Digraph, hermitian, is_isomorphic
from hermia.errors import NotAppropriate, SearchTimeout
from hermia.families import (
    named_digraph,
    negative_tetrahedron,
    negative_triangle,
    rank3_variant_a,
    rank3_variant_b,
)
from hermia.gaussian import I, MINUS_I, MINUS_ONE, ONE, UNITS
from hermia.spectra import char_poly
from hermia.switching import (
    SwitchingMatrix,
    apply_switching,
    switching_equivalent,
    verify_witness,
    whds_over,
)
from hermia.twins import ExpansionVector, expansion_blocks, twin_expand

from .conftest import random_digraph


def block_phases(ts, units):
    phases = []
    for size, u in zip(ts, units):
        phases.extend([u] * size)
    return SwitchingMatrix(tuple(phases))


class TestApplySwitching:
    def test_identity(self, rng):
        for _ in range(10):
            d = random_digraph(rng, 5)
            assert apply_switching(d, SwitchingMatrix.identity(5)) == d

    def test_digon_to_arc(self):
        k2 = named_digraph("k2")
        out = apply_switching(k2, SwitchingMatrix((ONE, I)))
        assert out == named_digraph("k2arrow")

    def test_not_appropriate(self):
        with pytest.raises(NotAppropriate):
            apply_switching(named_digraph("k2"), SwitchingMatrix((ONE, MINUS_ONE)))

    def test_block_swap_of_tetrahedron_expansion(self, rng):
        # The diagonal (-i, 1, i, 1) over the four blocks exchanges the roles
        # of blocks 1 and 3 of an expanded tetrahedron.
        for _ in range(8):
            ts = tuple(rng.randint(1, 3) for _ in range(4))
            t = ExpansionVector(0, ts)
            d = twin_expand(negative_tetrahedron(), t)
            s = block_phases(ts, (MINUS_I, ONE, I, ONE))
            switched = apply_switching(d, s)
            swapped = twin_expand(
                negative_tetrahedron(), ExpansionVector(0, (ts[2], ts[1], ts[0], ts[3]))
            )
            assert char_poly(hermitian(switched)) == char_poly(hermitian(d))
            assert is_isomorphic(switched, swapped) is not None

    def test_charpoly_invariant_under_random_appropriate_switchings(self, rng):
        done = 0
        while done < 25:
            d = random_digraph(rng, rng.randrange(2, 7))
            s = SwitchingMatrix(tuple(rng.choice(UNITS) for _ in range(d.n)))
            try:
                out = apply_switching(d, s)
            except NotAppropriate:
                continue
            done += 1
            assert char_poly(hermitian(out)) == char_poly(hermitian(d))


class TestSwitchingEquivalent:
    def test_k2_pair(self):
        w = switching_equivalent(named_digraph("k2"), named_digraph("k2arrow"))
        assert w is not None and verify_witness(named_digraph("k2"), named_digraph("k2arrow"), w)

    def test_triangle_family_pairwise(self):
        te = twin_expand(negative_triangle(), ExpansionVector.of(0, 1, 1, 2))
        members = [te, rank3_variant_a(), rank3_variant_b()]
        for a in members:
            for b in members:
                w = switching_equivalent(a, b)
                assert w is not None and verify_witness(a, b, w)

    def test_cospectral_but_inequivalent_expansions(self):
        a = twin_expand(negative_triangle(), ExpansionVector.of(0, 3, 3, 18))
        b = twin_expand(negative_triangle(), ExpansionVector.of(4, 2, 9, 9))
        assert switching_equivalent(a, b) is None

    def test_reflexive_and_symmetric(self, rng):
        for _ in range(10):
            d = random_digraph(rng, 5)
            w = switching_equivalent(d, d)
            assert w is not None and verify_witness(d, d, w)
            e = random_digraph(rng, 5)
            forward = switching_equivalent(d, e)
            backward = switching_equivalent(e, d)
            assert (forward is None) == (backward is None)

    def test_converse_is_equivalent(self, rng):
        for _ in range(10):
            d = random_digraph(rng, 6)
            w = switching_equivalent(d, d.converse())
            assert w is not None and verify_witness(d, d.converse(), w)

    def test_random_switch_and_relabel_recovered(self, rng):
        for _ in range(15):
            d = random_digraph(rng, 6)
            s = SwitchingMatrix(tuple(rng.choice(UNITS) for _ in range(6)))
            try:
                moved = apply_switching(d, s)
            except NotAppropriate:
                continue
            perm = list(range(6))
            rng.shuffle(perm)
            moved = moved.relabel(perm)
            w = switching_equivalent(d, moved)
            assert w is not None and verify_witness(d, moved, w)

    def test_strict_labels_mode(self):
        k2, k2p = named_digraph("k2"), named_digraph("k2arrow")
        assert switching_equivalent(k2, k2p, allow_relabel=False) is not None
        # A pure relabeling that moves the underlying graph's labeled edges
        # cannot be reproduced by switching alone.
        a = twin_expand(named_digraph("k2"), ExpansionVector.of(1, 1, 1))
        b = a.relabel((1, 0, 2))
        assert switching_equivalent(a, b) is not None
        assert switching_equivalent(a, b, allow_relabel=False) is None

    def test_budget_timeout(self):
        a = twin_expand(negative_tetrahedron(), ExpansionVector.of(0, 2, 2, 2, 2))
        b = twin_expand(negative_tetrahedron(), ExpansionVector.of(0, 2, 2, 2, 2))
        with pytest.raises(SearchTimeout):
            switching_equivalent(a, b, budget=3)

    def test_rank3_connected_cospectral_pairs_equivalent(self, corpus5):
        # Connected cospectral rank-3 digraphs are switching equivalent:
        # exhaustively verified for order 5.
        groups = {}
        for e in corpus5.entries:
            if e.inertia.rank == 3 and e.digraph.is_connected():
                groups.setdefault(e.charpoly.coeffs, []).append(e.digraph)
        pairs = 0
        for members in groups.values():
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    w = switching_equivalent(members[i], members[j])
                    assert w is not None and verify_witness(members[i], members[j], w)
                    pairs += 1
        assert pairs > 0

    def test_permuted_tetrahedron_expansions_equivalent(self):
        # Connected expansions over permutations of one multiset (entries <= 2)
        # are pairwise switching equivalent.
        from itertools import permutations

        for multiset in ((1, 1, 2, 2), (1, 2, 2, 2)):
            expansions = [
                twin_expand(negative_tetrahedron(), ExpansionVector(0, p))
                for p in sorted(set(permutations(multiset)))
            ]
            base = expansions[0]
            for other in expansions[1:]:
                w = switching_equivalent(base, other)
                assert w is not None and verify_witness(base, other, w)


class TestWhdsOver:
    def test_triangle_within_order3(self, corpus3):
        report = whds_over(negative_triangle(), corpus3.digraphs())
        assert report.passed
        assert len(report.cospectral) == 1  # only its own class

    def test_expansion_fails_against_mate(self):
        d = twin_expand(negative_triangle(), ExpansionVector.of(0, 3, 3, 18))
        mate = twin_expand(negative_triangle(), ExpansionVector.of(4, 2, 9, 9))
        report = whds_over(d, [mate])
        assert not report.passed
        assert report.inequivalent == (0,)

    def test_empty_digraph_trivially_passes(self, corpus3):
        report = whds_over(Digraph(3), corpus3.digraphs())
        assert report.passed and len(report.cospectral) == 1
