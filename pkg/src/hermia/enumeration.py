"""Exhaustive small-order enumeration, theorem verification sweeps, and the
expansion-vector cospectrality searches.

Labeled digraphs of order n are packed into integer codes: one base-4 digit
per unordered pair in the incremental order of :func:`hermia.digraph.pair_order`,
first pair in the most significant position, so integer order equals the
lexicographic order of the canonical byte encodings.

The heavy sweeps run on int64 numpy arrays.  Exactness is preserved because
every intermediate is provably tiny: for order <= 6 the entries of H^k are
bounded by 5^(k-1) <= 3125, traces by 6 * 3125, and all Newton-identity
intermediates by ~10^8, ten orders of magnitude inside the int64 range.
Cross-checks against the pure-integer Faddeev-LeVerrier path live in the
test suite.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations, permutations
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .digraph import (
    Digraph,
    PairState,
    canonical_form,
    hermitian,
    is_isomorphic,
    pair_order,
)
from .errors import InternalInconsistency
from .families import (
    named_digraph,
    negative_tetrahedron,
    negative_triangle,
    rank3_variant_a,
    rank3_variant_b,
)
from .spectra import CharPoly, Inertia, char_poly, inertia_from_charpoly
from .twins import ExpansionVector, is_reduced, twin_expand, twin_reduction

# -- packed digraph codes -------------------------------------------------------


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def encode_digraph(d: Digraph) -> int:
    code = 0
    for i, j in pair_order(d.n):
        code = (code << 2) | int(d.pair_state(i, j))
    return code


def decode_digraph(n: int, code: int) -> Digraph:
    pairs = {}
    for i, j in reversed(pair_order(n)):
        digit = code & 3
        code >>= 2
        if digit:
            pairs[(i, j)] = PairState(digit)
    return Digraph(n, pairs)


def code_to_canon_bytes(n: int, code: int) -> bytes:
    """Byte encoding of a code, matching :func:`hermia.digraph.canonical_form`
    output when the code is orbit-minimal."""
    p = pair_count(n)
    digits = bytes((code >> (2 * (p - 1 - k))) & 3 for k in range(p))
    return f"{n}:".encode() + digits


_PERM_LUTS: dict[int, list[list[np.ndarray]]] = {}


def _perm_luts(n: int) -> list[list[np.ndarray]]:
    """For every permutation, per-pair lookup tables mapping a pair digit to
    its shifted contribution in the permuted code."""
    if n in _PERM_LUTS:
        return _PERM_LUTS[n]
    pairs = pair_order(n)
    p = len(pairs)
    index = {pr: k for k, pr in enumerate(pairs)}
    luts_all = []
    for perm in permutations(range(n)):
        luts = []
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            flip = a > b
            if flip:
                a, b = b, a
            q = index[(a, b)]
            shift = 2 * (p - 1 - q)
            digits = [0, 1, 3, 2] if flip else [0, 1, 2, 3]
            luts.append(np.array([d << shift for d in digits], dtype=np.uint32))
        luts_all.append(luts)
    _PERM_LUTS[n] = luts_all
    return luts_all


def _canon_for_codes(n: int, codes: np.ndarray) -> np.ndarray:
    """Orbit-minimal code for every entry of `codes` (full permutation orbit)."""
    p = pair_count(n)
    digit_arrays = [
        ((codes >> np.uint32(2 * (p - 1 - k))) & np.uint32(3)).astype(np.intp)
        for k in range(p)
    ]
    canon = codes.copy()
    for luts in _perm_luts(n):
        mapped = np.zeros_like(codes)
        for k in range(p):
            mapped += luts[k][digit_arrays[k]]
        np.minimum(canon, mapped, out=canon)
    return canon


def _canon_chunk(args: tuple[int, int, int]) -> np.ndarray:
    n, start, stop = args
    codes = np.arange(start, stop, dtype=np.uint32)
    return np.unique(_canon_for_codes(n, codes))


def canonical_codes(n: int, parallelism: int = 1) -> np.ndarray:
    """Sorted orbit-minimal codes, one per isomorphism class (order <= 5)."""
    if n > 5:
        raise ValueError("full enumeration is supported for order <= 5")
    total = 1 << (2 * pair_count(n))
    if n <= 3 or parallelism <= 1:
        return _canon_chunk((n, 0, total))
    step = -(-total // (parallelism * 4))
    chunks = [(n, s, min(s + step, total)) for s in range(0, total, step)]
    with Pool(parallelism) as pool:
        parts = pool.map(_canon_chunk, chunks)
    return np.unique(np.concatenate(parts))


# -- batched exact characteristic polynomials -----------------------------------


def _codes_to_matrices(n: int, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Stacked integer Hermitians (re, im) of shape (len(codes), n, n)."""
    p = pair_count(n)
    m = len(codes)
    hre = np.zeros((m, n, n), dtype=np.int64)
    him = np.zeros((m, n, n), dtype=np.int64)
    for k, (i, j) in enumerate(pair_order(n)):
        d = (codes >> np.uint64(2 * (p - 1 - k))).astype(np.int64) & 3
        hre[:, i, j] = hre[:, j, i] = (d == 1)
        im = (d == 2).astype(np.int64) - (d == 3)
        him[:, i, j] = im
        him[:, j, i] = -im
    return hre, him


def _cmatmul(are, aim, bre, bim):
    return are @ bre - aim @ bim, are @ bim + aim @ bre


def _re_trace_product(are, aim, bre, bim):
    """Re and Im of Tr(A @ B) without forming the product."""
    re = np.einsum("nij,nji->n", are, bre) - np.einsum("nij,nji->n", aim, bim)
    im = np.einsum("nij,nji->n", are, bim) + np.einsum("nij,nji->n", aim, bre)
    return re, im


def batched_charpolys(n: int, codes: np.ndarray) -> np.ndarray:
    """Exact charpoly coefficients (low degree first) for every code; int64.

    Power traces come from at most two batched matrix products (H^2, H^3 and
    elementwise contractions cover exponents up to 6), then Newton's
    identities with asserted-exact divisions.  The products run in float64
    through BLAS: for n <= 6 every entry of H^k is bounded by 5^(k-1) <= 3125
    and every dot-product intermediate by 6 * 3125^2 < 2^27, so all values
    are integers far inside the 2^53 exact range and the floats round-trip
    to int64 losslessly (asserted).
    """
    if n > 6:
        raise ValueError("batched charpolys are bounded to order 6 (exactness proof)")
    m = len(codes)
    coeffs = np.zeros((m, n + 1), dtype=np.int64)
    coeffs[:, n] = 1
    if n == 0 or m == 0:
        return coeffs
    ire, iim = _codes_to_matrices(n, codes)
    hre, him = ire.astype(np.float64), iim.astype(np.float64)

    def as_int(arr: np.ndarray) -> np.ndarray:
        out = arr.astype(np.int64)
        if (out != arr).any():
            raise InternalInconsistency("float trace is not integral")
        return out

    p = [None, np.zeros(m, dtype=np.int64)]  # p[1] = Tr H = 0
    if n >= 2:
        h2re, h2im = _cmatmul(hre, him, hre, him)
        p.append(as_int(np.einsum("nii->n", h2re)))
    if n >= 3:
        re, im = _re_trace_product(h2re, h2im, hre, him)
        _assert_zero(im)
        p.append(as_int(re))
    if n >= 4:
        re, im = _re_trace_product(h2re, h2im, h2re, h2im)
        _assert_zero(im)
        p.append(as_int(re))
    if n >= 5:
        h3re, h3im = _cmatmul(h2re, h2im, hre, him)
        re, im = _re_trace_product(h2re, h2im, h3re, h3im)
        _assert_zero(im)
        p.append(as_int(re))
    if n >= 6:
        re, im = _re_trace_product(h3re, h3im, h3re, h3im)
        _assert_zero(im)
        p.append(as_int(re))
    e = [np.ones(m, dtype=np.int64)]
    for k in range(1, n + 1):
        acc = np.zeros(m, dtype=np.int64)
        sign = 1
        for i in range(1, k + 1):
            acc += sign * e[k - i] * p[i]
            sign = -sign
        q, r = np.divmod(acc, k)
        if r.any():
            raise InternalInconsistency("Newton identity division not exact")
        e.append(q)
    for k in range(1, n + 1):
        coeffs[:, n - k] = ((-1) ** k) * e[k]
    return coeffs


def _assert_zero(arr: np.ndarray) -> None:
    if np.count_nonzero(arr):
        raise InternalInconsistency("imaginary part of a Hermitian trace is nonzero")


def batched_inertia(coeffs: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized Descartes inertia (n_pos, n_neg, n_zero) from coefficients."""
    m, width = coeffs.shape
    n = width - 1
    nz = coeffs != 0
    n_zero = np.argmax(nz, axis=1)
    n_pos = np.zeros(m, dtype=np.int64)
    n_neg = np.zeros(m, dtype=np.int64)
    last_p = np.zeros(m, dtype=np.int64)
    last_n = np.zeros(m, dtype=np.int64)
    for k in range(width):
        s = np.sign(coeffs[:, k])
        sn = s if k % 2 == 0 else -s
        live = s != 0
        n_pos += ((last_p * s) < 0) & live
        n_neg += ((last_n * sn) < 0) & live
        last_p = np.where(live, s, last_p)
        last_n = np.where(live, sn, last_n)
    if ((n_pos + n_neg + n_zero) != n).any():
        raise InternalInconsistency("Descartes counts do not exhaust the roots")
    return n_pos, n_neg, n_zero


# -- the digraph corpus -----------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    canon: bytes
    digraph: Digraph
    charpoly: CharPoly
    inertia: Inertia


@dataclass(frozen=True)
class DigraphCorpus:
    """One representative per isomorphism class of a fixed order, with cached
    exact spectra data, in deterministic (canonical encoding) order."""

    n: int
    entries: tuple[CorpusEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def digraphs(self) -> list[Digraph]:
        return [e.digraph for e in self.entries]

    def cospectral_classes(self) -> dict[tuple[int, ...], list[CorpusEntry]]:
        groups: dict[tuple[int, ...], list[CorpusEntry]] = {}
        for e in self.entries:
            groups.setdefault(e.charpoly.coeffs, []).append(e)
        return groups


def build_corpus(n: int, parallelism: int = 1) -> DigraphCorpus:
    """Enumerate all isomorphism classes of order n (<= 5) with exact data."""
    codes = canonical_codes(n, parallelism)
    coeffs = batched_charpolys(n, codes.astype(np.uint64))
    entries = []
    for row, code in enumerate(codes):
        poly = CharPoly(tuple(int(c) for c in coeffs[row]))
        entries.append(
            CorpusEntry(
                canon=code_to_canon_bytes(n, int(code)),
                digraph=decode_digraph(n, int(code)),
                charpoly=poly,
                inertia=inertia_from_charpoly(poly),
            )
        )
    return DigraphCorpus(n, tuple(entries))


def save_corpus(corpus: DigraphCorpus, path) -> None:
    """Line-oriented persistence: canonical form in hex plus charpoly JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"corpus n={corpus.n} classes={len(corpus)}\n")
        for e in corpus.entries:
            fh.write(f"{e.canon.hex()}\t{e.charpoly.to_json()}\n")


def load_corpus(path) -> DigraphCorpus:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().split()
        n = int(header[1].removeprefix("n="))
        entries = []
        for line in fh:
            canon_hex, poly_json = line.rstrip("\n").split("\t")
            canon = bytes.fromhex(canon_hex)
            digits = canon.split(b":", 1)[1]
            code = 0
            for d in digits:
                code = (code << 2) | d
            poly = CharPoly.from_json(poly_json)
            entries.append(
                CorpusEntry(
                    canon=canon,
                    digraph=decode_digraph(n, code),
                    charpoly=poly,
                    inertia=inertia_from_charpoly(poly),
                )
            )
    return DigraphCorpus(n, tuple(entries))


# -- classification sweeps ---------------------------------------------------------


def classify_one_negative(corpus: DigraphCorpus) -> list[CorpusEntry]:
    """Reduced digraphs of rank > 2 with exactly one negative eigenvalue."""
    return [
        e
        for e in corpus.entries
        if e.inertia.n_neg == 1 and e.inertia.rank > 2 and is_reduced(e.digraph)
    ]


def verify_lambda_max_one(corpus: DigraphCorpus) -> list[CorpusEntry]:
    """Connected digraphs whose largest eigenvalue is exactly 1.

    Exact test: 1 is a root of the charpoly and the Taylor shift by 1 has no
    sign variation (no root exceeds 1); Descartes is exact on real-rooted
    polynomials.
    """
    out = []
    for e in corpus.entries:
        if not e.digraph.is_connected():
            continue
        if e.charpoly(1) != 0:
            continue
        if e.charpoly.shifted(1).descartes_positive_roots() == 0:
            out.append(e)
    return out


_N6_TRIANGLE_BASE = (1 << 28) | (2 << 26) | (3 << 24)
_N6_FREE = 1 << 24  # 4^12 assignments of the 12 pairs outside the fixed triangle


def _ordered_digit(digits: dict[tuple[int, int], np.ndarray], u: int, x: int) -> np.ndarray:
    d = digits[(min(u, x), max(u, x))]
    if u > x:
        return d ^ (d >> 1)  # swap the two arc directions
    return d


def _scan_chunk_n6(args: tuple[int, int]) -> list[int]:
    """One chunk of the order-6 sweep; returns codes that are reduced, have
    rank > 2 and exactly one negative eigenvalue (expected: none)."""
    start, stop = args
    codes = np.arange(start, stop, dtype=np.uint64) + np.uint64(_N6_TRIANGLE_BASE)
    pairs = pair_order(6)
    p = len(pairs)
    digits = {
        pr: ((codes >> np.uint64(2 * (p - 1 - k))) & np.uint64(3)).astype(np.uint8)
        for k, pr in enumerate(pairs)
    }
    # Vertices 0..2 carry the fixed triangle, so only 3..5 can be isolated.
    alive = np.ones(len(codes), dtype=bool)
    for v in (3, 4, 5):
        deg = np.zeros(len(codes), dtype=bool)
        for x in range(6):
            if x != v:
                deg |= digits[(min(v, x), max(v, x))] != 0
        alive &= deg
    # Twins: equal Hermitian rows (forces the joint pair state to be empty).
    has_twin = np.zeros(len(codes), dtype=bool)
    for u in range(6):
        for v in range(u + 1, 6):
            same = digits[(u, v)] == 0
            for x in range(6):
                if x != u and x != v:
                    same &= _ordered_digit(digits, u, x) == _ordered_digit(digits, v, x)
            has_twin |= same
    alive &= ~has_twin
    survivors = codes[alive]
    if len(survivors) == 0:
        return []
    coeffs = batched_charpolys(6, survivors)
    n_pos, n_neg, n_zero = batched_inertia(coeffs)
    hits = survivors[(n_neg == 1) & ((6 - n_zero) > 2)]
    return [int(c) for c in hits]


def scan_order6_one_negative(parallelism: int = 1, chunk: int = 1 << 17) -> list[Digraph]:
    """Order-6 sweep for reduced, rank > 2, single-negative-eigenvalue digraphs.

    Construction already pins a negative triangle on vertices 0..2, which any
    such digraph must contain (each isomorphism class with the property would
    appear at least once); soundness of that filter is unit-tested at small
    order.  Returns the offending digraphs; the expected result is empty.
    """
    ranges = [(s, min(s + chunk, _N6_FREE)) for s in range(0, _N6_FREE, chunk)]
    if parallelism <= 1:
        hits: list[int] = []
        for r in ranges:
            hits.extend(_scan_chunk_n6(r))
    else:
        with Pool(parallelism) as pool:
            hits = [c for part in pool.map(_scan_chunk_n6, ranges) for c in part]
    hits.sort()
    out = [decode_digraph(6, c) for c in hits]
    return [d for d in out if is_reduced(d)]


# -- twin-reduction theorem spot checks ---------------------------------------------


@dataclass(frozen=True)
class ReductionCheck:
    digraph: Digraph
    rank: int
    reduction_target: Optional[str]

    @property
    def passed(self) -> bool:
        return self.reduction_target is not None


def verify_tr_theorem(samples: Iterable[Digraph]) -> list[ReductionCheck]:
    """For digraphs with one negative eigenvalue and rank > 2, twin reduction
    must land on one of the four named structures (rank 3: the triangle
    family; rank 4: the tetrahedron)."""
    rank3 = {
        "tminus": negative_triangle(),
        "ta": rank3_variant_a(),
        "tb": rank3_variant_b(),
    }
    kminus = negative_tetrahedron()
    out = []
    for d in samples:
        inert = inertia_from_charpoly(char_poly(hermitian(d)))
        if inert.n_neg != 1 or inert.rank <= 2:
            raise ValueError("samples must have one negative eigenvalue and rank > 2")
        reduced = twin_reduction(d)
        target = None
        if inert.rank == 3:
            for name, ref in rank3.items():
                if reduced.n == ref.n and is_isomorphic(reduced, ref) is not None:
                    target = name
                    break
        elif inert.rank == 4:
            if reduced.n == 4 and is_isomorphic(reduced, kminus) is not None:
                target = "kminus"
        out.append(ReductionCheck(d, inert.rank, target))
    return out


def random_expansion_samples(
    count: int, seed: int, max_entry: int = 4, max_isolated: int = 3
) -> list[tuple[str, ExpansionVector, Digraph]]:
    """Seeded random twin expansions of the four named one-negative structures."""
    import random

    rng = random.Random(seed)
    bases = ["tminus", "kminus", "ta", "tb"]
    out = []
    for _ in range(count):
        name = rng.choice(bases)
        base = named_digraph(name)
        t = ExpansionVector(
            rng.randint(0, max_isolated),
            tuple(rng.randint(1, max_entry) for _ in range(base.n)),
        )
        out.append((name, t, twin_expand(base, t)))
    return out


# -- strong determination checks ------------------------------------------------------


@dataclass(frozen=True)
class ShdsReport:
    """Cospectral mates of a digraph within the full universe of its order."""

    order: int
    charpoly: CharPoly
    cospectral_classes: int
    isomorphic_classes: int
    mates: tuple[Digraph, ...]

    @property
    def is_shds(self) -> bool:
        """No cospectral mate outside the digraph's isomorphism class."""
        return not self.mates


def shds_check(
    d: Digraph,
    corpus: DigraphCorpus | None = None,
    parallelism: int = 1,
) -> ShdsReport:
    """Enumerate every digraph of d's order cospectral to d and classify the
    mates by isomorphism.  Exhaustive for order <= 5; order 6 is enumerated
    restricted to the matching underlying-edge count (forced by Tr H^2, which
    the spectrum determines).
    """
    target = char_poly(hermitian(d))
    if d.n <= 5:
        corpus = corpus if corpus is not None and corpus.n == d.n else build_corpus(d.n, parallelism)
        cands = [e.digraph for e in corpus.entries if e.charpoly == target]
    elif d.n == 6:
        cands = _order6_cospectral_candidates(target)
    else:
        raise ValueError("universe enumeration is bounded to order 6")
    iso = 0
    mates = []
    for cand in cands:
        if is_isomorphic(d, cand) is not None:
            iso += 1
        else:
            mates.append(cand)
    return ShdsReport(d.n, target, len(cands), iso, tuple(mates))


def _order6_cospectral_candidates(target: CharPoly) -> list[Digraph]:
    """Representatives of every order-6 class with the given charpoly."""
    if target.degree != 6 or target.coeffs[5] != 0:
        raise ValueError("target must be a trace-zero degree-6 charpoly")
    # Tr H^2 = -2 c4 = 2 * edge count, so the underlying edge count is pinned.
    edge_count = -target.coeffs[4]
    if not 0 <= edge_count <= 15:
        return []
    work = math.comb(15, edge_count) * 3**edge_count
    if work > 80_000_000:
        raise ValueError("restricted order-6 enumeration too large for this edge count")
    want = np.array(target.coeffs, dtype=np.int64)
    seen: dict[bytes, Digraph] = {}
    p = 15
    for support in combinations(range(p), edge_count):
        m_codes = 3**edge_count
        assign = np.arange(m_codes, dtype=np.uint64)
        codes = np.zeros(m_codes, dtype=np.uint64)
        for slot, k in enumerate(support):
            digit = (assign // np.uint64(3**slot)) % np.uint64(3) + np.uint64(1)
            codes |= digit << np.uint64(2 * (p - 1 - k))
        coeffs = batched_charpolys(6, codes)
        hit = np.all(coeffs == want, axis=1)
        for code in codes[hit]:
            g = decode_digraph(6, int(code))
            seen.setdefault(canonical_form(g), g)
    return list(seen.values())


# -- expansion-vector collision searches ------------------------------------------------


@dataclass(frozen=True)
class PairVerdict:
    """Non-isomorphism / non-equivalence evidence for one collision pair."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    isomorphic: bool
    switching_equivalent: bool
    certificate: str


@dataclass(frozen=True)
class CollisionReport:
    """Expansion vectors sharing one nonzero characteristic polynomial."""

    base: str
    key: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    family_order: int
    core_charpoly: CharPoly
    verdicts: tuple[PairVerdict, ...]

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "key": list(self.key),
            "members": [list(m) for m in self.members],
            "family_order": self.family_order,
            "core_charpoly": json.loads(self.core_charpoly.to_json()),
            "verdicts": [
                {
                    "a": list(v.a),
                    "b": list(v.b),
                    "isomorphic": v.isomorphic,
                    "switching_equivalent": v.switching_equivalent,
                    "certificate": v.certificate,
                }
                for v in self.verdicts
            ],
        }


def _kminus_weak_keys(t1: int, bound: int) -> np.ndarray:
    """(e3 << 27 | e4) for all monotone vectors with first entry t1.

    e3 < 2^23 and e4 < 2^27 for bound <= 104, so the packed key fits easily;
    the weak key may merge vectors with different e2, which the exact
    regrouping afterwards separates.
    """
    keys = []
    for t2 in range(t1, bound + 1):
        for t3 in range(t2, bound + 1):
            t4 = np.arange(t3, bound + 1, dtype=np.int64)
            e3 = t1 * t2 * t3 + (t1 * t2 + (t1 + t2) * t3) * t4
            e4 = (t1 * t2 * t3) * t4
            keys.append((e3.astype(np.uint64) << np.uint64(27)) | e4.astype(np.uint64))
    if not keys:
        return np.zeros(0, dtype=np.uint64)
    return np.concatenate(keys)


def _kminus_vectors_with_keys(t1: int, bound: int, wanted: np.ndarray) -> list[tuple[int, ...]]:
    out = []
    for t2 in range(t1, bound + 1):
        for t3 in range(t2, bound + 1):
            t4 = np.arange(t3, bound + 1, dtype=np.int64)
            e3 = t1 * t2 * t3 + (t1 * t2 + (t1 + t2) * t3) * t4
            e4 = (t1 * t2 * t3) * t4
            key = (e3.astype(np.uint64) << np.uint64(27)) | e4.astype(np.uint64)
            for v in t4[np.isin(key, wanted)]:
                out.append((t1, t2, t3, int(v)))
    return out


def _shard_keys_kminus(args: tuple[tuple[int, ...], int]) -> np.ndarray:
    t1s, bound = args
    parts = [_kminus_weak_keys(t1, bound) for t1 in t1s]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)


def _elem_syms(vec: Sequence[int]) -> tuple[int, ...]:
    return tuple(
        sum(math.prod(c) for c in combinations(vec, k)) for k in range(2, len(vec) + 1)
    )


def _group_reports(base: str, groups: dict[tuple[int, ...], list[tuple[int, ...]]]) -> list[CollisionReport]:
    reports = []
    for key, vectors in groups.items():
        if len(vectors) < 2:
            continue
        vectors = sorted(vectors)
        orders = [sum(v) for v in vectors]
        family_order = max(orders)
        if base == "kminus":
            core = CharPoly((-3 * key[2], 2 * key[1], -key[0], 0, 1))
        else:
            core = CharPoly((2 * key[1], -key[0], 0, 1))
        verdicts = []
        for a, b in combinations(vectors, 2):
            verdicts.append(_verdict(base, a, b, family_order))
        reports.append(
            CollisionReport(base, key, tuple(vectors), family_order, core, tuple(verdicts))
        )
    reports.sort(key=lambda r: (r.family_order, r.key))
    return reports


def _verdict(base: str, a: tuple[int, ...], b: tuple[int, ...], family_order: int) -> PairVerdict:
    """Certify that the padded expansions of two distinct multisets are
    neither isomorphic nor switching equivalent.

    Isomorphism would preserve the multiset of twin-class sizes, which is
    exactly the (distinct) vectors; quicker certificates are reported when
    available.  Switching preserves the underlying graph, whose degree
    sequence (with isolated padding) is determined by the multiset.
    For small orders the real searches are run instead of certificates.
    """
    from .switching import switching_equivalent

    sum_a, sum_b = sum(a), sum(b)
    if family_order <= 10:
        base_d = named_digraph(base)
        da = twin_expand(base_d, ExpansionVector(family_order - sum_a, a))
        db = twin_expand(base_d, ExpansionVector(family_order - sum_b, b))
        iso = is_isomorphic(da, db) is not None
        sw = switching_equivalent(da, db) is not None
        return PairVerdict(a, b, iso, sw, "searched exhaustively")
    if sum_a != sum_b:
        cert = "isolated-vertex counts differ after padding"
    elif base == "kminus" and a[0] * a[1] + a[2] * a[3] != b[0] * b[1] + b[2] * b[3]:
        cert = "digon counts differ"
    else:
        cert = "twin-class size multisets differ"
    return PairVerdict(a, b, False, False, cert)


def expansion_collision_search(
    bound: int,
    parallelism: int = 1,
    checkpoint: Optional[str] = None,
) -> list[CollisionReport]:
    """All families of monotone 4-vectors with entries <= bound whose expanded
    negative tetrahedra share their nonzero characteristic polynomial.

    Keyed by the elementary symmetric functions (e2, e3, e4); two distinct
    monotone vectors with equal key are automatically distinct multisets, so
    every duplicated key is a genuine collision.  Deterministic output for
    any parallelism; `checkpoint` persists per-shard key arrays.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if bound > 2000:
        raise ValueError("weak-key packing is proven for bound <= 2048")
    shards = _shards(bound, parallelism)
    done: dict[str, np.ndarray] = {}
    if checkpoint:
        done = _load_checkpoint(checkpoint, bound)
    todo = [(i, s) for i, s in enumerate(shards) if f"shard_{i}" not in done]
    results = dict(done)
    if todo:
        args = [(s, bound) for _, s in todo]
        if parallelism > 1:
            with Pool(parallelism) as pool:
                fresh = pool.map(_shard_keys_kminus, args)
        else:
            fresh = [_shard_keys_kminus(a) for a in args]
        for (i, _), keys in zip(todo, fresh):
            results[f"shard_{i}"] = keys
            if checkpoint:
                _save_checkpoint(checkpoint, bound, results)
    all_keys = np.concatenate([results[f"shard_{i}"] for i in range(len(shards))])
    uniq, counts = np.unique(all_keys, return_counts=True)
    dup = uniq[counts >= 2]
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    if len(dup):
        for t1 in range(1, bound + 1):
            for vec in _kminus_vectors_with_keys(t1, bound, dup):
                groups.setdefault(_elem_syms(vec), []).append(vec)
    return _group_reports("kminus", groups)


def _shards(bound: int, parallelism: int) -> list[tuple[int, ...]]:
    """t1 values grouped into a deterministic, parallelism-independent set of
    shards (small t1 does most of the work, so interleave)."""
    width = max(8, parallelism * 4)
    buckets: list[list[int]] = [[] for _ in range(min(width, bound))]
    for t1 in range(1, bound + 1):
        buckets[(t1 - 1) % len(buckets)].append(t1)
    return [tuple(b) for b in buckets if b]


def _checkpoint_path(path: str) -> str:
    return path if path.endswith(".npz") else path + ".npz"


def _save_checkpoint(path: str, bound: int, results: dict[str, np.ndarray]) -> None:
    np.savez_compressed(_checkpoint_path(path), bound=np.array([bound]), **results)


def _load_checkpoint(path: str, bound: int) -> dict[str, np.ndarray]:
    import os

    path = _checkpoint_path(path)
    if not os.path.exists(path):
        return {}
    data = np.load(path)
    if int(data["bound"][0]) != bound:
        return {}
    return {k: data[k] for k in data.files if k.startswith("shard_")}


def tminus_collision_search(bound: int) -> list[CollisionReport]:
    """Collision families of monotone 3-vectors for the expanded negative
    triangle, keyed by (e2, e3); members of different totals are reconciled
    by isolated-vertex padding, as the verdicts note."""
    if bound < 1:
        raise ValueError("bound must be positive")
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for t1 in range(1, bound + 1):
        for t2 in range(t1, bound + 1):
            for t3 in range(t2, bound + 1):
                vec = (t1, t2, t3)
                groups.setdefault(_elem_syms(vec), []).append(vec)
    return _group_reports("tminus", groups)
