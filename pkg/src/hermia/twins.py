"""Twin detection, twin reduction, and twin expansion.

Two vertices are twins when their Hermitian rows coincide (which forces them
to be non-adjacent).  Reduction collapses every twin class to its
lowest-labeled member and drops isolated vertices; expansion replaces vertex
u by a block of t_u mutual twins and prepends t_0 isolated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, PairState
from .errors import ArityMismatch


@dataclass(frozen=True, slots=True)
class ExpansionVector:
    """t0 isolated vertices plus one positive multiplicity per source vertex."""

    t0: int
    ts: tuple[int, ...]

    def __post_init__(self):
        if self.t0 < 0:
            raise ValueError("t0 must be nonnegative")
        if any(t < 1 for t in self.ts):
            raise ValueError("block multiplicities must be positive")

    @property
    def k(self) -> int:
        return len(self.ts)

    @property
    def order(self) -> int:
        """Order of the expanded digraph."""
        return self.t0 + sum(self.ts)

    @classmethod
    def of(cls, *values: int) -> "ExpansionVector":
        """Build from the flat form (t0, t1, ..., tk)."""
        return cls(values[0], tuple(values[1:]))

    @classmethod
    def parse(cls, text: str) -> "ExpansionVector":
        """Parse the CLI syntax 't0:t1,t2,...,tk' (e.g. '2:5,4,2,3')."""
        head, _, tail = text.partition(":")
        if not _:
            raise ValueError(f"expected 't0:t1,...,tk', got {text!r}")
        try:
            t0 = int(head)
            ts = tuple(int(p) for p in tail.split(",") if p != "")
        except ValueError:
            raise ValueError(f"bad expansion vector {text!r}") from None
        return cls(t0, ts)

    def __str__(self) -> str:
        return f"{self.t0}:{','.join(map(str, self.ts))}"


def _row_signature(d: Digraph, u: int) -> tuple[int, ...]:
    """The Hermitian row of u as oriented pair-state codes (0 on the diagonal)."""
    return tuple(
        0 if x == u else int(d.pair_state(u, x)) for x in range(d.n)
    )


def are_twins(d: Digraph, u: int, v: int) -> bool:
    """True iff rows u and v of the Hermitian coincide (implies non-adjacency)."""
    if u == v:
        raise ValueError("a vertex is not its own twin")
    return _row_signature(d, u) == _row_signature(d, v)


def twin_classes(d: Digraph) -> list[list[int]]:
    """Twin classes as sorted lists, ordered by their minimum member."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for u in range(d.n):
        groups.setdefault(_row_signature(d, u), []).append(u)
    return sorted(groups.values())


def twin_reduction(d: Digraph) -> Digraph:
    """Keep the lowest-labeled member of every twin class, drop isolated
    vertices, relabel compactly."""
    reps = [
        cls[0]
        for cls in twin_classes(d)
        if not d.is_isolated(cls[0])
    ]
    return d.induced_subdigraph(reps)


def is_reduced(d: Digraph) -> bool:
    """No twin pair and no isolated vertex (the fixed points of reduction)."""
    if any(d.is_isolated(u) for u in range(d.n)):
        return False
    return all(len(cls) == 1 for cls in twin_classes(d))


def expansion_blocks(t: ExpansionVector) -> list[range]:
    """Vertex ranges of the expanded digraph: the isolated block (if any)
    followed by one block per source vertex, in source order."""
    blocks = []
    start = t.t0
    if t.t0:
        blocks.append(range(0, t.t0))
    for size in t.ts:
        blocks.append(range(start, start + size))
        start += size
    return blocks


def twin_expand(d: Digraph, t: ExpansionVector) -> Digraph:
    """Replace vertex u by t_u twins and prepend t0 isolated vertices.

    Blocks are contiguous in source-vertex order after the isolated block, so
    expanded Hermitians have the documented block-constant shape.
    """
    if t.k != d.n:
        raise ArityMismatch(f"vector has {t.k} blocks for a digraph of order {d.n}")
    starts = []
    pos = t.t0
    for size in t.ts:
        starts.append(pos)
        pos += size
    pairs: dict[tuple[int, int], PairState] = {}
    for (u, v), state in d.pairs():
        for a in range(starts[u], starts[u] + t.ts[u]):
            for b in range(starts[v], starts[v] + t.ts[v]):
                pairs[(a, b)] = state
    return Digraph(t.order, pairs)
