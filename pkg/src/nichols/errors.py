"""Exception types raised by the engine."""

from __future__ import annotations


class NicholsError(Exception):
    """Base class for every error raised by this package."""


class ZeroArgument(NicholsError, ValueError):
    pass


class EmptyWord(NicholsError, ValueError):
    pass


class NotLyndon(NicholsError, ValueError):
    pass


class SingleLetter(NicholsError, ValueError):
    pass


class NotHomogeneous(NicholsError, ValueError):
    pass


class DegreeMismatch(NicholsError, ValueError):
    pass


class MijUnbounded(NicholsError):
    """No admissible n <= bound in the m_ij scan."""

    def __init__(self, i: int, j: int, bound: int):
        self.i, self.j, self.bound = i, j, bound
        super().__init__(
            f"m_{i}{j} not found within scan bound {bound}: "
            "root system not finite within cap (or bound too small)"
        )


class CapExceeded(NicholsError):
    def __init__(self, cap: int, what: str = "groupoid objects"):
        self.cap, self.what = cap, what
        super().__init__(f"{what} exceeded cap {cap}; root system not finite within cap")


class DegreeBoundExceeded(NicholsError):
    def __init__(self, degree: int, bound: int):
        self.degree, self.bound = degree, bound
        super().__init__(f"total degree {degree} exceeds oracle bound {bound}")


class UnboundedEnumeration(NicholsError):
    pass


class NoDecomposition(NicholsError):
    def __init__(self, root):
        self.root = tuple(root)
        super().__init__(f"root {self.root} is not a sum of two positive roots")


class IncompleteRootList(NicholsError, ValueError):
    pass


class NoSolution(NicholsError):
    pass


class InputError(NicholsError, ValueError):
    """Malformed input document; the message names the offending field."""


OracleDegreeExceeded = DegreeBoundExceeded
