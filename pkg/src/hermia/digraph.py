"""Loop-free digraphs stored as a pair-state table.

Every unordered vertex pair {u, v} carries exactly one of four states:
no edge, a digon (arcs both ways), or a single arc in one direction.  This
makes loop-freeness structural and keeps the Hermitian entry alphabet
{0, 1, i, -i} total.

Vertex labels are 0-based.  Digraphs defined by circular drawings elsewhere
in this package label the northmost vertex 0 and proceed counterclockwise,
so documented matrices reproduce entry-for-entry.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DigraphParseError, EdgeConflict, LoopRejected, SizeMismatch
from .gaussian import GaussianInt, HermitianMatrix, I, MINUS_I, ONE, ZERO


class PairState(IntEnum):
    """State of an unordered pair stored under its sorted key (u, v), u < v.

    ARC_FWD is the arc u -> v, ARC_BWD the arc v -> u.
    """

    NONE = 0
    DIGON = 1
    ARC_FWD = 2
    ARC_BWD = 3


def _flip(state: PairState) -> PairState:
    if state is PairState.ARC_FWD:
        return PairState.ARC_BWD
    if state is PairState.ARC_BWD:
        return PairState.ARC_FWD
    return state


#: Hermitian entry h_{uv} for each oriented pair state, Def-style alphabet.
_ENTRY = {
    PairState.NONE: ZERO,
    PairState.DIGON: ONE,
    PairState.ARC_FWD: I,
    PairState.ARC_BWD: MINUS_I,
}


def pair_order(n: int) -> list[tuple[int, int]]:
    """Unordered pairs in incremental order: all pairs within {0..k} before
    any pair touching k+1.  Canonical encodings use this order so a partial
    vertex assignment determines a prefix."""
    return [(i, j) for j in range(n) for i in range(j)]


class Digraph:
    """An immutable loop-free digraph on vertices 0..n-1."""

    __slots__ = ("n", "_pairs", "_hash")

    def __init__(self, n: int, pairs: dict[tuple[int, int], PairState] | None = None):
        if n < 0:
            raise ValueError("order must be nonnegative")
        clean: dict[tuple[int, int], PairState] = {}
        for (u, v), state in (pairs or {}).items():
            if u == v:
                raise LoopRejected(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex pair ({u},{v}) out of range for order {n}")
            if u > v:
                u, v = v, u
                state = _flip(state)
            state = PairState(state)
            if state is PairState.NONE:
                continue
            if clean.get((u, v), state) != state:
                raise EdgeConflict(f"pair ({u},{v}) given contradictory states")
            clean[(u, v)] = state
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_pairs", clean)
        object.__setattr__(self, "_hash", hash((n, frozenset(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    # -- basic queries ----------------------------------------------------

    def pair_state(self, u: int, v: int) -> PairState:
        """State of {u, v} oriented so ARC_FWD means the arc u -> v."""
        if u == v:
            raise LoopRejected(f"no state for a loop at {u}")
        if u < v:
            return self._pairs.get((u, v), PairState.NONE)
        return _flip(self._pairs.get((v, u), PairState.NONE))

    def hermitian_entry(self, u: int, v: int) -> GaussianInt:
        if u == v:
            return ZERO
        return _ENTRY[self.pair_state(u, v)]

    def pairs(self) -> Iterator[tuple[tuple[int, int], PairState]]:
        """Non-empty pairs under sorted keys, in lexicographic key order."""
        return iter(sorted(self._pairs.items()))

    def digon_count(self) -> int:
        return sum(1 for s in self._pairs.values() if s is PairState.DIGON)

    def arc_count(self) -> int:
        """Number of pairs joined by a single arc."""
        return sum(1 for s in self._pairs.values() if s is not PairState.DIGON)

    def edge_count_underlying(self) -> int:
        return len(self._pairs)

    def adjacent(self, u: int, v: int) -> bool:
        return self.pair_state(u, v) is not PairState.NONE

    def neighbors(self, u: int) -> Iterator[tuple[int, PairState]]:
        """(v, state oriented u -> v) over vertices adjacent to u."""
        for v in range(self.n):
            if v == u:
                continue
            s = self.pair_state(u, v)
            if s is not PairState.NONE:
                yield v, s

    def is_isolated(self, u: int) -> bool:
        return all(self.pair_state(u, v) is PairState.NONE for v in range(self.n) if v != u)

    def degree_triple(self, u: int) -> tuple[int, int, int]:
        """(digon degree, out-degree, in-degree) of u."""
        d = o = i = 0
        for _, s in self.neighbors(u):
            if s is PairState.DIGON:
                d += 1
            elif s is PairState.ARC_FWD:
                o += 1
            else:
                i += 1
        return d, o, i

    def connected_components(self) -> list[list[int]]:
        """Components of the underlying graph, each sorted, ordered by minimum."""
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            comp, stack = [], [root]
            seen[root] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v, _ in self.neighbors(u):
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    # -- structural operations --------------------------------------------

    def converse(self) -> "Digraph":
        """All arcs reversed; digons fixed."""
        return Digraph(self.n, {k: _flip(s) for k, s in self._pairs.items()})

    def underlying_graph(self) -> "Digraph":
        """Every arc replaced by a digon."""
        return Digraph(self.n, {k: PairState.DIGON for k in self._pairs})

    def induced_subdigraph(self, vertices: Iterable[int]) -> "Digraph":
        """Subdigraph on the given vertex set, relabeled in increasing order."""
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise ValueError("vertex subset out of range")
        index = {v: i for i, v in enumerate(keep)}
        pairs = {}
        for u in keep:
            for v in keep:
                if u < v:
                    s = self.pair_state(u, v)
                    if s is not PairState.NONE:
                        pairs[(index[u], index[v])] = s
        return Digraph(len(keep), pairs)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Image under the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        pairs = {}
        for (u, v), s in self._pairs.items():
            pairs[(perm[u], perm[v])] = s
        return Digraph(self.n, pairs)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._pairs == other._pairs
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={self.edge_count_underlying()})"


def digraph_from_edges(
    n: int, edges: Iterable[tuple[int, int, str]]
) -> Digraph:
    """Build a digraph from (u, v, kind) triples, kind 'a' (arc u->v) or 'd'.

    Arc declarations in both directions merge into a digon.  A pair declared
    both as a digon and as an arc is rejected as contradictory.
    """
    kinds: dict[tuple[int, int], set] = {}
    for u, v, kind in edges:
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex pair ({u},{v}) out of range for order {n}")
        key = (min(u, v), max(u, v))
        claims = kinds.setdefault(key, set())
        if kind in ("a", "arc"):
            claims.add(("a", u, v))
        elif kind in ("d", "digon"):
            claims.add("digon")
        else:
            raise ValueError(f"unknown edge kind {kind!r}")
    pairs = {}
    for (u, v), claims in kinds.items():
        arcs = {c for c in claims if c != "digon"}
        if "digon" in claims and arcs:
            raise EdgeConflict(f"pair ({u},{v}) declared both digon and arc")
        if "digon" in claims or len(arcs) == 2:
            pairs[(u, v)] = PairState.DIGON
        else:
            (_, a, b) = arcs.pop()
            pairs[(u, v)] = PairState.ARC_FWD if a == u else PairState.ARC_BWD
    return Digraph(n, pairs)


def hermitian(d: Digraph) -> HermitianMatrix:
    """The Hermitian adjacency matrix: digon -> 1, arc u->v -> i at (u,v)."""
    return HermitianMatrix(
        tuple(tuple(d.hermitian_entry(u, v) for v in range(d.n)) for u in range(d.n))
    )


def digraph_from_hermitian(m: HermitianMatrix) -> Digraph:
    """Inverse of :func:`hermitian` (the matrix class validates the alphabet)."""
    pairs = {}
    for u in range(m.n):
        for v in range(u + 1, m.n):
            e = m.entry(u, v)
            if e == ONE:
                pairs[(u, v)] = PairState.DIGON
            elif e == I:
                pairs[(u, v)] = PairState.ARC_FWD
            elif e == MINUS_I:
                pairs[(u, v)] = PairState.ARC_BWD
    return Digraph(m.n, pairs)


# -- isomorphism ------------------------------------------------------------


def _stable_colors(d: Digraph) -> list[int]:
    """Iterated neighborhood refinement of the (digon, out, in) degree colors.

    Colors are isomorphism-invariant, so equal-color classes are the only
    legal images in an isomorphism search.  Palette indices of two digraphs
    are comparable whenever the digraphs are isomorphic, which is the only
    case any search here relies on; full adjacency checks keep the searches
    complete regardless.
    """
    colors = [d.degree_triple(u) for u in range(d.n)]
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    cur = [palette[c] for c in colors]
    while True:
        sigs = [
            (cur[u], tuple(sorted((int(s), cur[v]) for v, s in d.neighbors(u))))
            for u in range(d.n)
        ]
        palette = {c: i for i, c in enumerate(sorted(set(sigs)))}
        nxt = [palette[s] for s in sigs]
        if len(set(nxt)) == len(set(cur)):
            return nxt
        cur = nxt


def is_isomorphic(d1: Digraph, d2: Digraph) -> Optional[tuple[int, ...]]:
    """A vertex bijection perm with d1.relabel(perm) == d2, or None.

    Backtracking over color classes with incremental adjacency checks;
    practical for order <= 10, and far beyond when the classes are fine.
    """
    if d1.n != d2.n:
        raise SizeMismatch(f"orders differ: {d1.n} vs {d2.n}")
    if d1.n == 0:
        return ()
    if d1.edge_count_underlying() != d2.edge_count_underlying():
        return None
    c1, c2 = _stable_colors(d1), _stable_colors(d2)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(c2):
        by_color.setdefault(c, []).append(v)
    from collections import Counter

    if Counter(c1) != Counter(c2):
        return None

    order = sorted(range(d1.n), key=lambda u: (len(by_color[c1[u]]), u))
    image: list[int] = [-1] * d1.n
    used = [False] * d2.n

    def extend(k: int) -> bool:
        if k == d1.n:
            return True
        u = order[k]
        for w in by_color[c1[u]]:
            if used[w]:
                continue
            if all(
                d1.pair_state(u, order[j]) == d2.pair_state(w, image[order[j]])
                for j in range(k)
            ):
                image[u] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                image[u] = -1
        return False

    if extend(0):
        return tuple(image)
    return None


def is_self_converse(d: Digraph) -> bool:
    """True iff the digraph is isomorphic to its converse."""
    return is_isomorphic(d, d.converse()) is not None


# -- canonical form -----------------------------------------------------------


def encode(d: Digraph, perm: Sequence[int] | None = None) -> bytes:
    """Pair states of d.relabel(perm) as one byte per pair in incremental order."""
    if perm is None:
        perm = range(d.n)
    inv = [0] * d.n
    for u, p in enumerate(perm):
        inv[p] = u
    out = bytearray()
    for a, b in pair_order(d.n):
        out.append(int(d.pair_state(inv[a], inv[b])))
    return bytes(out)


def canonical_form(d: Digraph) -> bytes:
    """The lexicographically minimal encoding over all vertex permutations.

    Exact minimum found by position-by-position descent with prefix pruning;
    candidate vertices are tried in refinement-color order, which is only a
    move ordering (restricting the search to color-respecting permutations
    could miss the true minimum).  Practical for order <= 8.
    """
    n = d.n
    header = f"{n}:".encode()
    if n == 0:
        return header
    best: list[int] | None = None

    placed: list[int] = []
    digits: list[int] = []
    in_placed = [False] * n

    def descend():
        nonlocal best
        if len(placed) == n:
            if best is None or digits < best:
                best = digits[:]
            return
        children = sorted(
            ([int(d.pair_state(u, v)) for u in placed], v)
            for v in range(n)
            if not in_placed[v]
        )
        for new, v in children:
            # A leaf below this node starts with digits + new; compare the
            # whole prefix because best may have changed since we descended.
            if best is not None:
                end = len(digits) + len(new)
                if digits + new > best[:end]:
                    continue
            placed.append(v)
            in_placed[v] = True
            digits.extend(new)
            descend()
            del digits[len(digits) - len(new):]
            in_placed[v] = False
            placed.pop()

    descend()
    assert best is not None
    return header + bytes(best)


# -- text and JSON formats ----------------------------------------------------


def format_digraph(d: Digraph) -> str:
    """Text format: 'n N' then one 'u v a' (arc u->v) or 'u v d' line per pair,
    sorted by pair."""
    lines = [f"n {d.n}"]
    for (u, v), s in d.pairs():
        if s is PairState.DIGON:
            lines.append(f"{u} {v} d")
        elif s is PairState.ARC_FWD:
            lines.append(f"{u} {v} a")
        else:
            lines.append(f"{v} {u} a")
    return "\n".join(lines) + "\n"


def parse_digraph(text: str, source: str = "<string>") -> Digraph:
    """Parse the text format; `#` starts a comment, blank lines are ignored."""
    n: int | None = None
    edges: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise DigraphParseError(source, lineno, tokens[0], "expected 'n <order>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise DigraphParseError(source, lineno, tokens[1], "order must be an integer") from None
            if n < 0:
                raise DigraphParseError(source, lineno, tokens[1], "order must be nonnegative")
            continue
        if len(tokens) != 3:
            raise DigraphParseError(source, lineno, line, "expected 'u v a|d'")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise DigraphParseError(source, lineno, tokens[0], "endpoints must be integers") from None
        if tokens[2] not in ("a", "d"):
            raise DigraphParseError(source, lineno, tokens[2], "kind must be 'a' or 'd'")
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphParseError(source, lineno, tokens[0], f"vertex out of range 0..{n - 1}")
        if u == v:
            raise DigraphParseError(source, lineno, tokens[0], "loops are not allowed")
        edges.append((u, v, tokens[2]))
    if n is None:
        raise DigraphParseError(source, 1, "", "missing 'n <order>' header")
    try:
        return digraph_from_edges(n, edges)
    except (EdgeConflict, LoopRejected) as exc:
        raise DigraphParseError(source, 0, "", str(exc)) from exc


def read_digraph(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_digraph(fh.read(), source=str(path))


def write_digraph(d: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_digraph(d))


def digraph_to_json(d: Digraph) -> dict:
    edges = []
    for (u, v), s in d.pairs():
        if s is PairState.DIGON:
            edges.append([u, v, "d"])
        elif s is PairState.ARC_FWD:
            edges.append([u, v, "a"])
        else:
            edges.append([v, u, "a"])
    return {"n": d.n, "edges": edges}


def digraph_from_json(obj: dict) -> Digraph:
    return digraph_from_edges(obj["n"], [tuple(e) for e in obj["edges"]])
