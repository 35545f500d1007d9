"""Exact characteristic polynomials, inertia, trace powers, triangle balance,
and floating-point eigenvalues of Hermitian adjacency matrices.

Everything structural is exact integer arithmetic; floats appear only in the
eigenvalue list, which is a convenience view, never an oracle for sign counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from operator import mul
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .digraph import Digraph, canonical_form, digraph_from_edges
from .errors import InternalInconsistency, NonConvergence, SizeMismatch
from .gaussian import GaussianMatrix

#: Relative tolerance for grouping floating eigenvalues into multiplicities.
GROUP_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class CharPoly:
    """A monic polynomial with exact integer coefficients, low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be int")
        if self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def trailing_zeros(self) -> int:
        """Multiplicity of the root 0."""
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def nonzero_part(self) -> "CharPoly":
        """The polynomial divided by its power of the root 0."""
        return CharPoly(self.coeffs[self.trailing_zeros():])

    def shifted(self, a: int) -> "CharPoly":
        """Coefficients of p(x + a) (Horner in the polynomial ring, exact)."""
        out = [self.coeffs[-1]]
        for c in reversed(self.coeffs[:-1]):
            nxt = [0] * (len(out) + 1)
            for k, v in enumerate(out):
                nxt[k + 1] += v
                nxt[k] += a * v
            nxt[0] += c
            out = nxt
        return CharPoly(tuple(out))

    def deflate(self, root: int) -> "CharPoly":
        """Synthetic division by (x - root); raises if root is not a root."""
        quot = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quot.append(acc)
        if acc != 0:
            raise ValueError(f"{root} is not a root")
        quot.pop()
        return CharPoly(tuple(reversed(quot)))

    def integer_roots(self) -> list[tuple[int, int]]:
        """All integer roots with multiplicities, sorted by root."""
        roots: dict[int, int] = {}
        p = self
        z = p.trailing_zeros()
        if z:
            roots[0] = z
            p = p.nonzero_part()
        c0 = abs(p.coeffs[0])
        candidates = set()
        d = 1
        while d * d <= c0:
            if c0 % d == 0:
                candidates.update({d, -d, c0 // d, -(c0 // d)})
            d += 1
        for r in sorted(candidates):
            while p.degree > 0 and p(r) == 0:
                roots[r] = roots.get(r, 0) + 1
                p = p.deflate(r)
        return sorted(roots.items())

    def try_divide(self, divisor: "CharPoly") -> "CharPoly | None":
        """Exact quotient by a monic divisor, or None if division leaves a remainder."""
        rem = list(self.coeffs)
        dc = divisor.coeffs
        if divisor.degree > self.degree:
            return None
        quot = [0] * (self.degree - divisor.degree + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = rem[k + divisor.degree]
            quot[k] = q
            if q:
                for j, d in enumerate(dc):
                    rem[k + j] -= q * d
        if any(rem[: divisor.degree]):
            return None
        return CharPoly(tuple(quot))

    def descartes_positive_roots(self) -> int:
        """Sign variations of the coefficient sequence.

        Equals the number of positive roots exactly when the polynomial is
        real-rooted, which holds for every characteristic polynomial produced
        by this package.
        """
        last = 0
        changes = 0
        for c in self.coeffs:
            if c == 0:
                continue
            s = 1 if c > 0 else -1
            if last and s != last:
                changes += 1
            last = s
        return changes

    def negated_variable(self) -> "CharPoly":
        """Coefficients of +-p(-x), normalized monic."""
        sign = 1 if (self.degree % 2 == 0) else -1
        return CharPoly(tuple(sign * ((-1) ** k) * c for k, c in enumerate(self.coeffs)))

    def to_json(self) -> str:
        """JSON array of decimal strings, low degree first (survives any size)."""
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "CharPoly":
        return cls(tuple(int(c) for c in json.loads(text)))

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                x = "x" if k == 1 else f"x^{k}"
                body = x if mag == 1 else f"{mag}{x}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class Inertia(NamedTuple):
    """Exact counts of positive, negative and zero eigenvalues."""

    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def rank(self) -> int:
        return self.n_pos + self.n_neg


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Floating eigenvalues sorted descending."""

    values: tuple[float, ...]

    def multiplicities(self) -> list[tuple[float, int]]:
        """Eigenvalues grouped at relative tolerance GROUP_TOL."""
        groups: list[tuple[float, int]] = []
        for v in self.values:
            if groups:
                rep, m = groups[-1]
                if abs(v - rep) <= GROUP_TOL * max(1.0, abs(rep), abs(v)):
                    groups[-1] = (rep, m + 1)
                    continue
            groups.append((v, 1))
        return groups

    def radius(self) -> float:
        return max((abs(v) for v in self.values), default=0.0)


class TriangleBalance(NamedTuple):
    """Counts of the four induced order-3 shapes that contribute to Tr H^3.

    x1: digon + two arcs into the third vertex,
    x2: digon + two arcs out of the third vertex,
    x3: all-digon triangle,
    x4: negative triangle (digon + a directed path through the third vertex).
    """

    x1: int
    x2: int
    x3: int
    x4: int


# -- exact kernels -------------------------------------------------------------


def _matmul(are, aim, bre, bim, n):
    """Exact complex integer matrix product via four real products."""
    brt = list(zip(*bre))
    bit = list(zip(*bim))
    cre, cim = [], []
    for i in range(n):
        ar, ai = are[i], aim[i]
        rrow, irow = [], []
        for j in range(n):
            br, bi = brt[j], bit[j]
            rrow.append(sum(map(mul, ar, br)) - sum(map(mul, ai, bi)))
            irow.append(sum(map(mul, ar, bi)) + sum(map(mul, ai, br)))
        cre.append(rrow)
        cim.append(irow)
    return cre, cim


def char_poly(m: GaussianMatrix) -> CharPoly:
    """det(xI - M) with exact integer coefficients via Faddeev-LeVerrier.

    Works for any square Gaussian-integer matrix whose characteristic
    polynomial is real (Hermitian matrices, quotient matrices of equitable
    partitions); a nonzero imaginary part in any coefficient is a bug.
    """
    n = m.n
    if n == 0:
        return CharPoly((1,))
    are, aim = m.split_parts()
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mre = [row[:] for row in are]
    mim = [row[:] for row in aim]
    tr_re = sum(mre[i][i] for i in range(n))
    tr_im = sum(mim[i][i] for i in range(n))
    if tr_im != 0:
        raise InternalInconsistency("complex coefficient in characteristic polynomial")
    coeffs[n - 1] = -tr_re
    for k in range(2, n + 1):
        for i in range(n):
            mre[i][i] += coeffs[n - k + 1]
        mre, mim = _matmul(are, aim, mre, mim, n)
        tr_re = sum(mre[i][i] for i in range(n))
        tr_im = sum(mim[i][i] for i in range(n))
        if tr_im != 0:
            raise InternalInconsistency("complex coefficient in characteristic polynomial")
        if tr_re % k != 0:
            raise InternalInconsistency("Faddeev-LeVerrier division not exact")
        coeffs[n - k] = -(tr_re // k)
    return CharPoly(tuple(coeffs))


def inertia_from_charpoly(p: CharPoly) -> Inertia:
    """Exact inertia by Descartes' rule, valid because p is real-rooted."""
    n_zero = p.trailing_zeros()
    q = p.nonzero_part()
    n_pos = q.descartes_positive_roots()
    n_neg = q.negated_variable().descartes_positive_roots()
    if n_pos + n_neg != q.degree:
        raise InternalInconsistency("Descartes counts do not exhaust the roots")
    return Inertia(n_pos, n_neg, n_zero)


def inertia(m: GaussianMatrix) -> Inertia:
    return inertia_from_charpoly(char_poly(m))


def rank(m: GaussianMatrix) -> int:
    return inertia(m).rank


def trace_power(m: GaussianMatrix, k: int) -> int:
    """Exact Tr M^k for 1 <= k <= 4; the trace must be real."""
    if not 1 <= k <= 4:
        raise ValueError("exponent must be between 1 and 4")
    n = m.n
    are, aim = m.split_parts()
    pre, pim = are, aim
    for _ in range(k - 1):
        pre, pim = _matmul(pre, pim, are, aim, n)
    t_im = sum(pim[i][i] for i in range(n))
    if t_im != 0:
        raise InternalInconsistency("trace of a Hermitian power must be real")
    return sum(pre[i][i] for i in range(n))


# -- triangle balance ----------------------------------------------------------


def _reference_triangles() -> list[Digraph]:
    """The four order-3 shapes, in x1..x4 order."""
    return [
        digraph_from_edges(3, [(0, 1, "d"), (0, 2, "a"), (1, 2, "a")]),
        digraph_from_edges(3, [(0, 1, "d"), (2, 0, "a"), (2, 1, "a")]),
        digraph_from_edges(3, [(0, 1, "d"), (0, 2, "d"), (1, 2, "d")]),
        digraph_from_edges(3, [(0, 1, "d"), (0, 2, "a"), (2, 1, "a")]),
    ]


_TRIANGLE_CLASS: dict[bytes, int] = {}


def _triangle_class_table() -> dict[bytes, int]:
    if not _TRIANGLE_CLASS:
        for j, t in enumerate(_reference_triangles()):
            _TRIANGLE_CLASS[canonical_form(t)] = j
    return _TRIANGLE_CLASS


def triangle_balance(d: Digraph) -> TriangleBalance:
    """Classify every induced vertex triple against the four contributing shapes."""
    table = _triangle_class_table()
    counts = [0, 0, 0, 0]
    for triple in combinations(range(d.n), 3):
        sub = d.induced_subdigraph(triple)
        if sub.edge_count_underlying() != 3:
            continue
        j = table.get(canonical_form(sub))
        if j is not None:
            counts[j] += 1
    return TriangleBalance(*counts)


# -- floating eigenvalues -------------------------------------------------------


def _real_embedding(m: GaussianMatrix) -> np.ndarray:
    """The 2n x 2n real symmetric matrix [[Re, -Im], [Im, Re]].

    Its spectrum is that of m with every eigenvalue doubled.
    """
    re, im = m.split_parts()
    re = np.array(re, dtype=float).reshape(m.n, m.n)
    im = np.array(im, dtype=float).reshape(m.n, m.n)
    return np.block([[re, -im], [im, re]])


def eigenvalues(m: GaussianMatrix) -> Spectrum:
    """Floating eigenvalues, descending, via the real symmetric embedding."""
    if m.n == 0:
        return Spectrum(())
    try:
        doubled = np.linalg.eigvalsh(_real_embedding(m))
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(str(exc)) from exc
    return Spectrum(tuple(float(v) for v in doubled[::-1][::2]))


def spectrum_of(d: Digraph) -> Spectrum:
    from .digraph import hermitian

    return eigenvalues(hermitian(d))


def spectral_radius(d: Digraph) -> float:
    return spectrum_of(d).radius()


def cospectral(d1: Digraph, d2: Digraph) -> bool:
    """Exact equality of characteristic polynomials; orders must match."""
    from .digraph import hermitian

    if d1.n != d2.n:
        return False
    return char_poly(hermitian(d1)) == char_poly(hermitian(d2))


def interlacing_holds(m: GaussianMatrix, vertices: Iterable[int], slack: float = GROUP_TOL) -> bool:
    """Check the interlacing inequalities between m and its principal submatrix."""
    keep = sorted(set(vertices))
    sub = GaussianMatrix(
        tuple(tuple(m.entry(u, v) for v in keep) for u in keep)
    )
    lam = eigenvalues(m).values
    mu = eigenvalues(sub).values
    n, k = len(lam), len(mu)
    return all(
        lam[i] + slack >= mu[i] >= lam[n - k + i] - slack for i in range(k)
    )
