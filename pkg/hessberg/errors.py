"""
Exception hierarchy for hessberg.

InputError covers anything the caller got wrong (exit code 1 on the command
line); PropertyViolation means a mathematical postcondition failed (exit
code 2).
"""


class HessbergError(Exception):
    """Base class for every error raised by hessberg."""


class InputError(HessbergError, ValueError):
    """Malformed or unsupported input."""


class UnsupportedCartanType(InputError):
    pass


class ParseError(InputError):
    pass


class NotARoot(InputError):
    def __init__(self, coeffs, message=None):
        self.coeffs = tuple(coeffs)
        super().__init__(message or f"{list(self.coeffs)} is not a root")


class NotSimple(InputError):
    def __init__(self, root):
        self.root = root
        super().__init__(f"{root} is not a simple root")


class GuardExceeded(InputError):
    """A size guard refused the computation (override with --force)."""


class ClosureViolation(InputError):
    """A root set is not closed under addition with positive roots.

    ``witness`` is the triple (beta, alpha, beta + alpha).
    """

    def __init__(self, beta, alpha, total):
        self.witness = (beta, alpha, total)
        super().__init__(
            f"not a Hessenberg space: {beta} + {alpha} = {total} is missing"
        )


class InversionSetError(InputError):
    """A set of positive roots is not closed, or its complement is not."""

    def __init__(self, first, second, total, complement=False):
        self.pair = (first, second)
        self.total = total
        self.complement = complement
        where = "complement of the set" if complement else "set"
        super().__init__(
            f"not an inversion set: {where} contains {first} and {second} "
            f"but not {total}"
        )


class HessenbergFunctionError(InputError):
    pass


class PreconditionError(InputError):
    pass


class NotAFixedPoint(PreconditionError):
    pass


class NotMaximalInversion(PreconditionError):
    pass


class IdentityHasNoDescent(PreconditionError):
    pass


class NoWitnessError(InputError):
    """The connectedness criterion holds, so there is nothing to witness."""


class CentralLeviError(InputError):
    """The Levi datum is all of the simple roots (central semisimple element)."""


class PropertyViolation(HessbergError, AssertionError):
    """A proven property failed to hold. This is a bug, not bad input."""
