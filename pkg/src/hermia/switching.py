"""Four-way switching and switching equivalence.

A switching is conjugation of the Hermitian by a diagonal matrix of unit
Gaussian phases; it is valid ("appropriate") when every resulting entry stays
in the adjacency alphabet, i.e. no entry becomes -1.  Switching preserves the
underlying graph exactly, so the equivalence search only permutes within
underlying-graph color classes, and phases are forced by propagation: fixing
one phase per connected component costs nothing because a global phase drops
out of conjugation.

Equivalence here means: a four-way switching, possibly composed with the
converse, up to relabeling.  Pass ``allow_relabel=False`` for the strict
labeled notion.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .digraph import Digraph, PairState, _stable_colors, hermitian
from .errors import NotAppropriate, SearchTimeout, SizeMismatch
from .gaussian import GaussianInt, ONE, UNITS, parse_unit
from .spectra import char_poly


@dataclass(frozen=True, slots=True)
class SwitchingMatrix:
    """Per-vertex unit phases of a diagonal switching matrix."""

    phases: tuple[GaussianInt, ...]

    def __post_init__(self):
        for p in self.phases:
            if p not in UNITS:
                raise ValueError(f"phase {p} is not a unit")

    @classmethod
    def identity(cls, n: int) -> "SwitchingMatrix":
        return cls((ONE,) * n)

    @classmethod
    def parse(cls, parts: Iterable[str]) -> "SwitchingMatrix":
        return cls(tuple(parse_unit(p) for p in parts))

    def __len__(self) -> int:
        return len(self.phases)

    def as_strings(self) -> list[str]:
        return [str(p) for p in self.phases]


@dataclass(frozen=True, slots=True)
class EquivalenceWitness:
    """Replayable proof that two digraphs are switching equivalent.

    Replay: optionally take the converse of the first digraph, relabel by
    ``permutation``, then conjugate by ``phases`` (indexed by the second
    digraph's labels); the result must equal the second digraph exactly.
    """

    permutation: tuple[int, ...]
    phases: SwitchingMatrix
    conversed: bool

    def to_json(self) -> dict:
        return {
            "permutation": list(self.permutation),
            "phases": self.phases.as_strings(),
            "conversed": self.conversed,
        }


def apply_switching(d: Digraph, s: SwitchingMatrix) -> Digraph:
    """The digraph with Hermitian S^-1 H S; raises NotAppropriate if any
    entry leaves {0, 1, i, -i}."""
    if len(s) != d.n:
        raise SizeMismatch(f"switching matrix has {len(s)} phases for order {d.n}")
    pairs = {}
    for (u, v), _ in d.pairs():
        h = s.phases[u].conjugate() * d.hermitian_entry(u, v) * s.phases[v]
        if h.re == -1:
            raise NotAppropriate(f"pair ({u},{v}) would get entry -1")
        if h.re == 1:
            pairs[(u, v)] = PairState.DIGON
        elif h.im == 1:
            pairs[(u, v)] = PairState.ARC_FWD
        else:
            pairs[(u, v)] = PairState.ARC_BWD
    return Digraph(d.n, pairs)


def verify_witness(d1: Digraph, d2: Digraph, w: EquivalenceWitness) -> bool:
    """Exact replay of a witness."""
    if d1.n != d2.n or len(w.phases) != d2.n:
        return False
    src = d1.converse() if w.conversed else d1
    moved = src.relabel(w.permutation)
    ph = w.phases.phases
    for a in range(d2.n):
        for b in range(a + 1, d2.n):
            lhs = ph[a].conjugate() * moved.hermitian_entry(a, b) * ph[b]
            if lhs != d2.hermitian_entry(a, b):
                return False
    return True


def _bfs_order(d: Digraph) -> tuple[list[int], list[bool]]:
    """Vertices in a component-by-component BFS order of the underlying graph,
    plus a flag marking component roots."""
    order: list[int] = []
    is_root: list[bool] = []
    seen = [False] * d.n
    for start in range(d.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        order.append(start)
        is_root.append(True)
        while queue:
            u = queue.pop(0)
            for v, _ in d.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    order.append(v)
                    is_root.append(False)
                    queue.append(v)
    return order, is_root


DEFAULT_BUDGET = 2_000_000


def switching_equivalent(
    d1: Digraph,
    d2: Digraph,
    budget: int = DEFAULT_BUDGET,
    allow_relabel: bool = True,
    allow_converse: bool = True,
) -> Optional[EquivalenceWitness]:
    """A witness that d2 is obtained from d1 by switching (optionally composed
    with the converse and a relabeling), or None.

    Raises SearchTimeout past `budget` vertex-assignment attempts.
    """
    if d1.n != d2.n:
        return None
    if d1.edge_count_underlying() != d2.edge_count_underlying():
        return None
    colors2 = _stable_colors(d2.underlying_graph())
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors2):
        by_color.setdefault(c, []).append(v)
    nodes = 0

    def search(src: Digraph) -> Optional[tuple[tuple[int, ...], SwitchingMatrix]]:
        nonlocal nodes
        colors1 = _stable_colors(src.underlying_graph())
        if Counter(colors1) != Counter(colors2):
            return None
        order, is_root = _bfs_order(src)
        image = [-1] * src.n
        used = [False] * d2.n
        phases: list[Optional[GaussianInt]] = [None] * d2.n

        def place(k: int) -> bool:
            nonlocal nodes
            if k == src.n:
                return True
            u = order[k]
            candidates = (
                by_color[colors1[u]] if allow_relabel else [u]
            )
            for w in candidates:
                if used[w] or colors2[w] != colors1[u]:
                    continue
                nodes += 1
                if nodes > budget:
                    raise SearchTimeout(nodes, budget)
                forced: Optional[GaussianInt] = None
                ok = True
                for j in range(k):
                    v = order[j]
                    ha = src.hermitian_entry(u, v)
                    hb = d2.hermitian_entry(w, image[v])
                    if ha.is_zero() != hb.is_zero():
                        ok = False
                        break
                    if ha.is_zero():
                        continue
                    need = ha * phases[image[v]] * hb.conjugate()
                    if forced is None:
                        forced = need
                    elif forced != need:
                        ok = False
                        break
                if not ok:
                    continue
                if forced is None:
                    forced = ONE
                image[u] = w
                used[w] = True
                phases[w] = forced
                if place(k + 1):
                    return True
                phases[w] = None
                used[w] = False
                image[u] = -1
            return False

        if place(0):
            return tuple(image), SwitchingMatrix(tuple(p or ONE for p in phases))
        return None

    variants = [(False, d1)]
    if allow_converse:
        variants.append((True, d1.converse()))
    for conversed, src in variants:
        found = search(src)
        if found is not None:
            perm, phases = found
            witness = EquivalenceWitness(perm, phases, conversed)
            assert verify_witness(d1, d2, witness)
            return witness
    return None


@dataclass(frozen=True)
class WhdsReport:
    """Outcome of testing a digraph against a candidate universe."""

    cospectral: tuple[int, ...]
    witnesses: dict[int, EquivalenceWitness]
    inequivalent: tuple[int, ...]
    timed_out: tuple[int, ...]

    @property
    def passed(self) -> bool:
        """True when every cospectral candidate is switching equivalent."""
        return not self.inequivalent and not self.timed_out


def whds_over(
    d: Digraph,
    candidates: Sequence[Digraph],
    budget: int = DEFAULT_BUDGET,
) -> WhdsReport:
    """Filter candidates cospectral to d and test switching equivalence
    against each; candidates of a different order are never cospectral."""
    target = char_poly(hermitian(d))
    cospectral = []
    witnesses: dict[int, EquivalenceWitness] = {}
    inequivalent = []
    timed_out = []
    for idx, cand in enumerate(candidates):
        if cand.n != d.n or char_poly(hermitian(cand)) != target:
            continue
        cospectral.append(idx)
        try:
            w = switching_equivalent(d, cand, budget=budget)
        except SearchTimeout:
            timed_out.append(idx)
            continue
        if w is None:
            inequivalent.append(idx)
        else:
            witnesses[idx] = w
    return WhdsReport(tuple(cospectral), witnesses, tuple(inequivalent), tuple(timed_out))
