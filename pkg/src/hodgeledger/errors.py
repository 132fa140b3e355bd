"""Exception hierarchy shared by every module of the package."""


class HodgeLedgerError(Exception):
    """Base class for all errors raised by hodgeledger."""


class WeightParityError(HodgeLedgerError, ValueError):
    """An entry (n, p, q) with p + q of different parity than n."""


class VirtualInput(HodgeLedgerError, ValueError):
    """A super power was requested of a class with a negative multiplicity."""


class DimensionGuard(HodgeLedgerError, ValueError):
    pass


class BadInput(HodgeLedgerError, ValueError):
    pass


class UnknownName(HodgeLedgerError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class NotEffective(HodgeLedgerError, ArithmeticError):
    """A class expected to be an honest cohomology table has negative entries."""


class FixtureInvalid(HodgeLedgerError, ValueError):
    """A ledger fixture violates one of the load-time invariants."""


class Inconsistent(HodgeLedgerError, ArithmeticError):
    """The rank constraints of a ledger have no admissible solution."""


class ExprError(HodgeLedgerError, ValueError):
    """Base class for errors in the expression language.

    ``offset`` is the 1-based character offset in the source text.
    """

    def __init__(self, message, offset=None, expected=()):
        self.message = message
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        super().__init__(message)

    def __str__(self):
        text = self.message
        if self.offset is not None:
            text = f"{text} at offset {self.offset}"
        if self.expected:
            text = f"{text} (expected one of: {', '.join(self.expected)})"
        return text


class ParseError(ExprError):
    pass


class ArityError(ExprError):
    pass


class UnknownIdentifier(ExprError):
    pass
