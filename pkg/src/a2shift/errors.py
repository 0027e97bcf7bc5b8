"""Exception hierarchy shared across the package."""


class A2ShiftError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimePowerError(A2ShiftError):
    def __init__(self, q):
        super().__init__(f"{q} is not a prime power")
        self.q = q


class UnsupportedOrderError(A2ShiftError):
    def __init__(self, q, limit):
        super().__init__(f"order {q} exceeds the supported maximum {limit}")
        self.q = q
        self.limit = limit


class FormatSyntaxError(A2ShiftError):
    """Malformed input file; carries the 1-based offending line number."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class VersionUnsupportedError(FormatSyntaxError):
    pass


class KindMismatchError(A2ShiftError):
    def __init__(self, expected, found):
        super().__init__(f"expected a {expected} document, found {found}")
        self.expected = expected
        self.found = found


class UnknownPointError(FormatSyntaxError):
    def __init__(self, lineno, token):
        super().__init__(lineno, f"point {token!r} not in the points directive")
        self.token = token


class ArityError(FormatSyntaxError):
    def __init__(self, lineno, count):
        super().__init__(lineno, f"relator must have 3 tokens, got {count}")
        self.count = count


class OrderTooLargeError(A2ShiftError):
    pass


class DimensionMismatchError(A2ShiftError):
    pass


class NotWallAdjacentError(A2ShiftError):
    def __init__(self, left, right):
        super().__init__(f"{left} and {right} are not wall-adjacent")
        self.left = left
        self.right = right


class NoPathError(A2ShiftError):
    """No wall strip joins the two tiles; a counterexample to strong
    connectivity, never expected for a validated presentation."""

    def __init__(self, initial, final):
        super().__init__(f"no wall strip from {initial} to {final}")
        self.initial = initial
        self.final = final


class NoMeetError(A2ShiftError):
    def __init__(self, initial, final):
        super().__init__(f"no tile reachable from {initial} and co-reachable from {final}")
        self.initial = initial
        self.final = final


class DNotReachableError(A2ShiftError):
    def __init__(self, d):
        super().__init__(f"point {d} is not a feasible successor left-edge label")
        self.d = d


class InfeasibleExhaustiveError(A2ShiftError):
    def __init__(self, q):
        super().__init__(f"exhaustive sweep is infeasible for q={q}; use sample mode")
        self.q = q


class InvariantError(A2ShiftError):
    """A structural count guaranteed by a validated presentation failed;
    indicates the input bypassed validation."""
