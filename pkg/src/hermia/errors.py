"""Exception types shared across the package."""


class HermiaError(Exception):
    """Base class for all library-specific errors."""


class LoopRejected(HermiaError):
    """An edge with equal endpoints was supplied; loops are not supported."""


class EdgeConflict(HermiaError):
    """The same vertex pair received contradictory edge kinds."""


class SizeMismatch(HermiaError):
    """Two digraphs of different order were compared where equal order is required."""


class ArityMismatch(HermiaError):
    """An expansion vector's length does not match the digraph order."""


class NotAppropriate(HermiaError):
    """A switching matrix produced an entry outside {0, 1, i, -i}."""


class NotEquitable(HermiaError):
    """A vertex partition has a block without constant row sums."""

    def __init__(self, block_row: int, block_col: int, rows: list[int]):
        self.block_row = block_row
        self.block_col = block_col
        self.rows = rows
        super().__init__(
            f"block ({block_row},{block_col}) has non-constant row sums on rows {rows}"
        )


class PatternMismatch(HermiaError):
    """An expansion vector fits none of the closed-form spectrum patterns."""


class SearchTimeout(HermiaError):
    """A backtracking search exceeded its node budget."""

    def __init__(self, nodes: int, budget: int):
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"search exceeded node budget ({nodes} >= {budget})")


class InternalInconsistency(HermiaError):
    """An exact computation produced a value its invariants forbid (a bug)."""


class NonConvergence(HermiaError):
    """The floating-point eigensolver failed to converge (a bug or bad input)."""


class DigraphParseError(HermiaError):
    """A digraph text file could not be parsed."""

    def __init__(self, source: str, line: int, token: str, message: str):
        self.source = source
        self.line = line
        self.token = token
        super().__init__(f"{source}:{line}: token {token!r}: {message}")
