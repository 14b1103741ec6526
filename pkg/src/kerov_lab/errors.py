class KerovLabError(Exception):
    pass


class LengthMismatch(KerovLabError, ValueError):
    pass


class InterlacingViolation(KerovLabError, ValueError):
    def __init__(self, index, gap):
        self.index = index
        self.gap = gap
        super().__init__(f"interlacing fails at j={index} by {gap:.3g}")


class NonpositiveScale(KerovLabError, ValueError):
    pass


class AlphaOutOfRange(KerovLabError, ValueError):
    pass


class EdgeSingularity(KerovLabError, ValueError):
    pass


class OrderTooSmall(KerovLabError, ValueError):
    pass


class NoConvergence(KerovLabError, ArithmeticError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"off-diagonal {row} failed to deflate")


class BoundExceeded(KerovLabError, ValueError):
    pass


class BranchPoint(KerovLabError, ValueError):
    pass


class OracleMismatch(KerovLabError, AssertionError):
    pass
