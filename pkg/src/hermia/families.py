"""Named digraphs, closed-form characteristic polynomials of their twin
expansions, explicit spectra for special expansion patterns, and quotient
matrices of equitable partitions.

The named structures (vertex 0 northmost, counterclockwise):

* ``tminus`` -- the negative triangle: a digon plus a directed path through
  the third vertex; spectrum {-2, 1, 1}.  The unique order-3 shape that
  contributes negatively to Tr H^3.
* ``kminus`` -- the negative tetrahedron: two digons and a 4-cycle of arcs;
  all four faces are negative triangles; spectrum {-3, 1, 1, 1}.
* ``ta``, ``tb`` -- the two other reduced order-4 digraphs with exactly one
  negative eigenvalue; both have rank 3.
* ``k2``, ``k2arrow`` -- the digon and the single arc on two vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .digraph import Digraph, digraph_from_edges
from .errors import NotEquitable, PatternMismatch
from .gaussian import GaussianInt, GaussianMatrix, ZERO
from .spectra import CharPoly, Spectrum, char_poly
from .twins import ExpansionVector


def negative_triangle() -> Digraph:
    return digraph_from_edges(3, [(0, 1, "d"), (0, 2, "a"), (2, 1, "a")])


def negative_tetrahedron() -> Digraph:
    return digraph_from_edges(
        4, [(0, 1, "d"), (2, 3, "d"), (0, 2, "a"), (2, 1, "a"), (1, 3, "a"), (3, 0, "a")]
    )


def rank3_variant_a() -> Digraph:
    """The negative triangle with a fourth vertex on an arc 2-cycle 1->3->0."""
    return digraph_from_edges(
        4, [(0, 1, "d"), (0, 2, "a"), (2, 1, "a"), (1, 3, "a"), (3, 0, "a")]
    )


def rank3_variant_b() -> Digraph:
    """The negative triangle with a fourth vertex joined by a digon to 2 and an arc to 0."""
    return digraph_from_edges(
        4, [(0, 1, "d"), (2, 3, "d"), (0, 2, "a"), (2, 1, "a"), (3, 0, "a")]
    )


def digon_pair() -> Digraph:
    return digraph_from_edges(2, [(0, 1, "d")])


def oriented_pair() -> Digraph:
    return digraph_from_edges(2, [(0, 1, "a")])


_NAMED = {
    "tminus": negative_triangle,
    "negative-triangle": negative_triangle,
    "kminus": negative_tetrahedron,
    "negative-tetrahedron": negative_tetrahedron,
    "ta": rank3_variant_a,
    "tb": rank3_variant_b,
    "k2": digon_pair,
    "k2arrow": oriented_pair,
    "k2'": oriented_pair,
}


def named_digraph(name: str) -> Digraph:
    try:
        return _NAMED[name.strip().lower()]()
    except KeyError:
        raise ValueError(
            f"unknown digraph name {name!r}; expected one of {sorted(set(_NAMED))}"
        ) from None


def expansion_base(name: str) -> Digraph:
    """The expandable bases accepted by the closed-form charpoly helpers."""
    base = named_digraph(name)
    if base.n not in (3, 4):
        raise ValueError(f"{name!r} is not an expansion base")
    return base


# -- closed-form characteristic polynomials ------------------------------------


def _sym(values: Sequence[int], k: int) -> int:
    return sum(math.prod(c) for c in combinations(values, k))


def _padded(core: Sequence[int], zeros: int) -> CharPoly:
    return CharPoly((0,) * zeros + tuple(core))


def charpoly_te_kminus(t: ExpansionVector) -> CharPoly:
    """x^(n-4) * (x^4 - e2 x^2 + 2 e3 x - 3 e4) in the block sizes."""
    if t.k != 4:
        raise ValueError("negative-tetrahedron expansion needs 4 block sizes")
    e2, e3, e4 = _sym(t.ts, 2), _sym(t.ts, 3), _sym(t.ts, 4)
    return _padded((-3 * e4, 2 * e3, -e2, 0, 1), t.order - 4)


def charpoly_te_tminus(t: ExpansionVector) -> CharPoly:
    """x^(n-3) * (x^3 - e2 x + 2 e3) in the block sizes."""
    if t.k != 3:
        raise ValueError("negative-triangle expansion needs 3 block sizes")
    e2, e3 = _sym(t.ts, 2), _sym(t.ts, 3)
    return _padded((2 * e3, -e2, 0, 1), t.order - 3)


def charpoly_te_ta(t: ExpansionVector) -> CharPoly:
    """Expansion of the rank-3 variant a; blocks 3 and 4 act through their sum."""
    if t.k != 4:
        raise ValueError("rank-3 variant expansion needs 4 block sizes")
    t1, t2, t3, t4 = t.ts
    s = t3 + t4
    core = (2 * t1 * t2 * s, -(t1 * t2 + (t1 + t2) * s), 0, 1)
    return _padded(core, t.order - 3)


def charpoly_te_tb(t: ExpansionVector) -> CharPoly:
    """Expansion of the rank-3 variant b; blocks 2 and 4 act through their sum."""
    if t.k != 4:
        raise ValueError("rank-3 variant expansion needs 4 block sizes")
    t1, t2, t3, t4 = t.ts
    s = t2 + t4
    core = (2 * t1 * t3 * s, -(t1 * t3 + (t1 + t3) * s), 0, 1)
    return _padded(core, t.order - 3)


_CLOSED_FORMS = {
    "kminus": charpoly_te_kminus,
    "tminus": charpoly_te_tminus,
    "ta": charpoly_te_ta,
    "tb": charpoly_te_tb,
}


def charpoly_te(base: str, t: ExpansionVector) -> CharPoly:
    try:
        fn = _CLOSED_FORMS[base.strip().lower()]
    except KeyError:
        raise ValueError(f"no closed form for base {base!r}") from None
    return fn(t)


def te_kminus_counts(t: ExpansionVector) -> tuple[int, int, int]:
    """(order, underlying edges, negative triangles) of the expanded tetrahedron."""
    if t.k != 4:
        raise ValueError("negative-tetrahedron expansion needs 4 block sizes")
    return t.order, _sym(t.ts, 2), _sym(t.ts, 3)


# -- explicit spectra for special expansion vectors ------------------------------


@dataclass(frozen=True, slots=True)
class QuadraticValue:
    """(add + coef * sqrt(radicand)) / den, kept exact until rendered."""

    add: int
    coef: int
    radicand: int
    den: int = 1

    @property
    def value(self) -> float:
        return (self.add + self.coef * math.sqrt(self.radicand)) / self.den

    def __str__(self) -> str:
        if self.coef == 0 or self.radicand == 0:
            frac = f"{self.add}/{self.den}" if self.den != 1 else str(self.add)
            return frac
        body = f"{self.add}{'+' if self.coef > 0 else '-'}{abs(self.coef)}*sqrt({self.radicand})"
        return f"({body})/{self.den}" if self.den != 1 else f"({body})"


def closed_form_spectrum(t: ExpansionVector) -> list[tuple[QuadraticValue, int]]:
    """Exact nonzero eigenvalues (with multiplicities) of an expanded negative
    tetrahedron whose block-size multiset fits one of the three closed-form
    patterns: all equal, exactly three equal, or two equal pairs.

    The characteristic polynomial depends on the block sizes only through
    their multiset, so matching is on the multiset.
    """
    if t.k != 4:
        raise ValueError("needs 4 block sizes")
    s = sorted(t.ts)
    distinct = sorted(set(s))
    if len(distinct) == 1:
        a = distinct[0]
        return [(QuadraticValue(a, 0, 0), 3), (QuadraticValue(-3 * a, 0, 0), 1)]
    if len(distinct) == 2:
        lo, hi = distinct
        if s.count(lo) == 3 or s.count(hi) == 3:
            t1 = lo if s.count(lo) == 3 else hi
            t2 = hi if t1 == lo else lo
            rad = 3 * t1 * t2 + t1 * t1
            return [
                (QuadraticValue(t1, 0, 0), 2),
                (QuadraticValue(-t1, 1, rad), 1),
                (QuadraticValue(-t1, -1, rad), 1),
            ]
        t1, t2 = lo, hi
        rad = t1 * t1 + 14 * t1 * t2 + t2 * t2
        return [
            (QuadraticValue(t1, 0, 0), 1),
            (QuadraticValue(t2, 0, 0), 1),
            (QuadraticValue(-t1 - t2, 1, rad, 2), 1),
            (QuadraticValue(-t1 - t2, -1, rad, 2), 1),
        ]
    raise PatternMismatch(f"block sizes {t.ts} fit none of the closed-form patterns")


def explicit_spectrum_cases(t: ExpansionVector) -> Spectrum:
    """The full spectrum (floats, descending) for the closed-form patterns."""
    values = []
    for qv, mult in closed_form_spectrum(t):
        values.extend([qv.value] * mult)
    values.extend([0.0] * (t.order - 4))
    return Spectrum(tuple(sorted(values, reverse=True)))


# -- complete tripartite family --------------------------------------------------


def oriented_c3(a: int, b: int, c: int) -> Digraph:
    """Complete tripartite digraph with all arcs A->B, B->C, C->A."""
    if min(a, b, c) < 1:
        raise ValueError("part sizes must be positive")
    pa = range(0, a)
    pb = range(a, a + b)
    pc = range(a + b, a + b + c)
    edges = [(u, v, "a") for u in pa for v in pb]
    edges += [(u, v, "a") for u in pb for v in pc]
    edges += [(u, v, "a") for u in pc for v in pa]
    return digraph_from_edges(a + b + c, edges)


def c3_whds_predicate(a: int) -> bool:
    """True iff no prime congruent to 1 mod 6 divides a (trial division)."""
    if a < 1:
        raise ValueError("argument must be a positive integer")
    rest = a
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            if p % 6 == 1:
                return False
            while rest % p == 0:
                rest //= p
        p += 1
    return rest == 1 or rest % 6 != 1


# -- quotient matrices ------------------------------------------------------------


VertexPartition = Sequence[Sequence[int]]


@dataclass(frozen=True)
class QuotientMatrix:
    """Block row sums of a Hermitian under an equitable vertex partition."""

    matrix: GaussianMatrix
    blocks: tuple[tuple[int, ...], ...]

    def char_poly(self) -> CharPoly:
        """Divides the characteristic polynomial of the partitioned matrix."""
        return char_poly(self.matrix)


def quotient_matrix(m: GaussianMatrix, partition: VertexPartition) -> QuotientMatrix:
    """The k x k matrix of block row sums; raises NotEquitable when some block
    has non-constant row sums."""
    blocks = tuple(tuple(sorted(b)) for b in partition)
    flat = [v for b in blocks for v in b]
    if sorted(flat) != list(range(m.n)):
        raise ValueError("partition must cover every vertex exactly once")
    k = len(blocks)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            sums = []
            for u in blocks[i]:
                s = ZERO
                for v in blocks[j]:
                    s = s + m.entry(u, v)
                sums.append(s)
            if any(s != sums[0] for s in sums):
                bad = [blocks[i][x] for x, s in enumerate(sums) if s != sums[0]]
                raise NotEquitable(i, j, bad)
            row.append(sums[0] if sums else ZERO)
        rows.append(row)
    return QuotientMatrix(GaussianMatrix(rows), blocks)
