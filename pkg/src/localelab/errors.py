"""Exception hierarchy.

Every error that can be caused by bad input derives from ``LocaleLabError``
so the CLI can map it to exit code 2.  ``InvariantViolation`` is different:
it means a cross-check between two independent computations disagreed,
which is a bug in this package rather than in the input.
"""


class LocaleLabError(ValueError):
    """Base class for input/validation errors."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownElement(LocaleLabError, KeyError):
    def __str__(self):
        return self.args[0]


class CycleError(LocaleLabError):
    pass


class NotALattice(LocaleLabError):
    pass


class NotAFrame(LocaleLabError):
    pass


class SizeLimit(LocaleLabError):
    pass


class NotAHomomorphism(LocaleLabError):
    pass


class NotOvert(LocaleLabError):
    pass


class NotAClosure(LocaleLabError):
    pass


class NotANucleus(LocaleLabError):
    pass


class NotASublocaleSet(LocaleLabError):
    pass


class FrameMismatch(LocaleLabError):
    pass


class NotATopology(LocaleLabError):
    pass


class AxiomsFailed(LocaleLabError):
    pass


class PreconditionFailed(LocaleLabError):
    pass


class DocumentError(LocaleLabError):
    pass


class InvariantViolation(AssertionError):
    """Two routes to the same value disagreed."""
