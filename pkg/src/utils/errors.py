"""Exception hierarchy shared by every layer of the toolkit.

The command-line entry point maps the three families onto exit codes:
InputError and PreconditionError exit with 2, SizeGuardError exits with 3.
"""


class MatroidError(Exception):
    """Base class for every error raised by the library."""


# --- Input errors (exit 2) ---

class InputError(MatroidError):
    """The caller supplied data that cannot describe a valid object."""


class InvalidSubsetError(InputError):
    def __init__(self, subset, n):
        super().__init__(f"subset {subset:#b} has a bit outside the ground set of size {n}")
        self.subset = subset
        self.n = n


class RankAxiomError(InputError):
    """A rank table violates one of the rank axioms."""

    def __init__(self, violations):
        first = violations[0] if violations else None
        super().__init__(f"rank table violates the rank axioms ({len(violations)} witnesses, first: {first})")
        self.violations = list(violations)


class MultiplicityError(InputError):
    pass


class SpecFileError(InputError):
    pass


class InvalidOrderError(InputError):
    pass


# --- Precondition errors (exit 2) ---

class PreconditionError(MatroidError):
    """The object is valid but the requested operation does not apply to it."""


class LoopError(PreconditionError):
    def __init__(self, operation, loops):
        super().__init__(f"{operation} requires a loopless matroid (loops: {loops:#b})")
        self.operation = operation
        self.loops = loops


class ColoopError(PreconditionError):
    def __init__(self, operation, coloops):
        super().__init__(f"{operation} requires a matroid without coloops (coloops: {coloops:#b})")
        self.operation = operation
        self.coloops = coloops


class NotAFlatError(PreconditionError):
    def __init__(self, subset):
        super().__init__(f"subset {subset:#b} is not a flat")
        self.subset = subset


class RankTooSmallError(PreconditionError):
    pass


class UnsupportedMultiplicityError(PreconditionError):
    pass


# --- Size guard (exit 3) ---

class SizeGuardError(MatroidError):
    def __init__(self, guard, limit, size, operation):
        super().__init__(f"{operation}: size {size} exceeds guard {guard}={limit}")
        self.guard = guard
        self.limit = limit
        self.size = size
        self.operation = operation
