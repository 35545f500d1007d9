"""Exact counts of digraphs and self-converse digraphs up to isomorphism.

Both counts are Burnside sums over cycle types of the symmetric group.  For
plain digraphs the group element pi acts on ordered pairs by
(u, v) -> (pi(u), pi(v)) and fixes 2^(number of pair cycles) digraphs.  For
self-converse digraphs we count orbits merged with the converse map: writing
G for the order-2 extension of S_n by arc reversal, Burnside on G gives

    #orbits(G) = (#classes + (1/n!) * sum_pi |Fix(pi o conv)|) / 2

while directly #orbits(G) = (#classes + #self-converse classes) / 2, hence

    SC_n = (1/n!) * sum_pi |Fix(pi o conv)|,

where pi o conv acts on ordered pairs by (u, v) -> (pi(v), pi(u)) and fixes
2^(number of cycles) digraphs.  Orbits are counted concretely: one
representative permutation per cycle type, walking the pair map.  Everything
is exact integer arithmetic; the divisions by n! are asserted exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InternalInconsistency


@dataclass(frozen=True, slots=True)
class CycleType:
    """A partition of n as cycle lengths, with its conjugacy-class size."""

    parts: tuple[int, ...]
    weight: int

    @property
    def n(self) -> int:
        return sum(self.parts)

    def representative(self) -> list[int]:
        """One permutation with these cycle lengths (consecutive cycles)."""
        perm = []
        start = 0
        for length in self.parts:
            perm.extend(range(start + 1, start + length))
            perm.append(start)
            start += length
        return perm


def _partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def cycle_types(n: int) -> list[CycleType]:
    """All cycle types of S_n; weights sum to n!."""
    out = []
    for parts in _partitions(n):
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        denom = 1
        for length, mult in counts.items():
            denom *= length**mult * math.factorial(mult)
        out.append(CycleType(parts, math.factorial(n) // denom))
    total = sum(ct.weight for ct in out)
    if total != math.factorial(n):
        raise InternalInconsistency("conjugacy class sizes do not sum to n!")
    return out


def _pair_cycles(n: int, perm: list[int], converse: bool) -> int:
    """Cycles of the induced map on ordered pairs (u, v), u != v."""
    index = {}
    pairs = []
    for u in range(n):
        for v in range(n):
            if u != v:
                index[(u, v)] = len(pairs)
                pairs.append((u, v))
    seen = [False] * len(pairs)
    cycles = 0
    for start, (u, v) in enumerate(pairs):
        if seen[start]:
            continue
        cycles += 1
        cu, cv = u, v
        while True:
            cu, cv = (perm[cv], perm[cu]) if converse else (perm[cu], perm[cv])
            j = index[(cu, cv)]
            if seen[j]:
                break
            seen[j] = True
    return cycles


def _burnside(n: int, converse: bool) -> int:
    total = 0
    for ct in cycle_types(n):
        rep = ct.representative()
        total += ct.weight * (1 << _pair_cycles(n, rep, converse))
    if total % math.factorial(n) != 0:
        raise InternalInconsistency("Burnside sum not divisible by n!")
    return total // math.factorial(n)


def count_digraphs(n: int) -> int:
    """Number of loop-free digraphs on n vertices up to isomorphism."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return _burnside(n, converse=False)


def count_self_converse(n: int) -> int:
    """Number of self-converse digraphs on n vertices up to isomorphism."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return _burnside(n, converse=True)


def self_converse_fraction(n: int) -> float:
    """The exact rational count ratio, reduced, then rendered as a double."""
    return float(Fraction(count_self_converse(n), count_digraphs(n)))


def sci3(value: Fraction) -> str:
    """Three significant digits in 'd.dde-k' form, truncated toward zero.

    Truncation (not rounding) matches the reference table this reproduces:
    e.g. 0.0736885... prints as 7.36e-2.  Computed with exact integer
    arithmetic so no float wobble can flip a digit.
    """
    if value <= 0:
        raise ValueError("positive values only")
    exp = 0
    while value >= 10:
        value /= 10
        exp += 1
    while value < 1:
        value *= 10
        exp -= 1
    hundredths = int(value * 100)  # exact Fraction -> int truncates
    return f"{hundredths // 100}.{hundredths % 100:02d}e{exp}"


def self_converse_fraction_sci(n: int) -> str:
    return sci3(Fraction(count_self_converse(n), count_digraphs(n)))


def fraction_table(max_n: int, min_n: int = 3) -> list[tuple[int, str]]:
    """Rows (n, truncated scientific fraction) for min_n <= n <= max_n."""
    return [(n, self_converse_fraction_sci(n)) for n in range(min_n, max_n + 1)]
