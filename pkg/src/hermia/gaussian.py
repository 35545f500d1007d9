"""Exact Gaussian-integer scalars and matrices.

Python integers are arbitrary precision, so a Gaussian integer is just a
(re, im) pair with exact ring arithmetic; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalInconsistency


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """A Gaussian integer re + im*i."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def scale(self, k: int) -> "GaussianInt":
        return GaussianInt(k * self.re, k * self.im)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        """True for 1, -1, i, -i (the only invertible Gaussian integers)."""
        return self.re * self.re + self.im * self.im == 1

    def inverse_unit(self) -> "GaussianInt":
        """Inverse of a unit; for units the inverse equals the conjugate."""
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        return self.conjugate()

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return im
        return f"{self.re}{'+' if self.im > 0 else ''}{im}"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
MINUS_ONE = GaussianInt(-1, 0)
I = GaussianInt(0, 1)
MINUS_I = GaussianInt(0, -1)

UNITS = (ONE, I, MINUS_ONE, MINUS_I)

#: Allowed off-diagonal values of a Hermitian adjacency matrix.
ADJACENCY_ALPHABET = frozenset({ZERO, ONE, I, MINUS_I})


def parse_unit(text: str) -> GaussianInt:
    """Parse one of '1', '-1', 'i', '-i'."""
    table = {"1": ONE, "-1": MINUS_ONE, "i": I, "-i": MINUS_I}
    try:
        return table[text.strip()]
    except KeyError:
        raise ValueError(f"not a Gaussian unit: {text!r}") from None


class GaussianMatrix:
    """An immutable square matrix over the Gaussian integers."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[GaussianInt]]):
        grid = tuple(tuple(row) for row in rows)
        n = len(grid)
        for row in grid:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for entry in row:
                if not isinstance(entry, GaussianInt):
                    raise TypeError("entries must be GaussianInt")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianMatrix is immutable")

    def entry(self, u: int, v: int) -> GaussianInt:
        return self.rows[u][v]

    def trace(self) -> GaussianInt:
        t = ZERO
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def transpose(self) -> "GaussianMatrix":
        return GaussianMatrix(zip(*self.rows))

    def conjugate_transpose(self) -> "GaussianMatrix":
        return GaussianMatrix(
            tuple(e.conjugate() for e in col) for col in zip(*self.rows)
        )

    def __matmul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.rows))
        return GaussianMatrix(
            tuple(
                sum((a * b for a, b in zip(row, col)), ZERO)
                for col in cols
            )
            for row in self.rows
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaussianMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}x{self.n})"

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def split_parts(self) -> tuple[list[list[int]], list[list[int]]]:
        """Real and imaginary integer parts as nested lists (for kernels)."""
        re = [[e.re for e in row] for row in self.rows]
        im = [[e.im for e in row] for row in self.rows]
        return re, im


class HermitianMatrix(GaussianMatrix):
    """A Hermitian adjacency matrix: zero diagonal, off-diagonal entries in
    {0, 1, i, -i}, conjugate symmetric."""

    def __init__(self, rows: Iterable[Iterable[GaussianInt]]):
        super().__init__(rows)
        for u in range(self.n):
            if not self.rows[u][u].is_zero():
                raise InternalInconsistency(f"nonzero diagonal at {u}")
            for v in range(u + 1, self.n):
                e = self.rows[u][v]
                if e not in ADJACENCY_ALPHABET:
                    raise InternalInconsistency(f"entry ({u},{v}) = {e} not in alphabet")
                if self.rows[v][u] != e.conjugate():
                    raise InternalInconsistency(f"entries ({u},{v}),({v},{u}) not conjugate")
