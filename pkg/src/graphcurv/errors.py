"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI lives in ``graphcurv.cli``; library code
raises these directly.
"""


class GraphInputError(ValueError):
    """Malformed graph file, generator spec, or invalid generator parameters."""


class DisconnectedGraphError(RuntimeError):
    """An operation that needs finite distances was given a disconnected graph."""

    def __init__(self, u: int, v: int):
        self.unreachable_pair = (u, v)
        super().__init__(f"graph is disconnected: vertex {v} is unreachable from vertex {u}")


class InconsistentSystemError(RuntimeError):
    """The curvature system D w = n 1 has no solution for this graph."""


class NumericallySingularError(RuntimeError):
    """Float LU hit a pivot too small to trust; no float solution is returned."""


class HardVerificationError(RuntimeError):
    """A check that the theory guarantees has failed.

    This falsifies the implementation, never the theorem: an upper-bound
    failure, a lower-bound failure under non-negative curvature, or a game
    certificate that does not close.
    """
