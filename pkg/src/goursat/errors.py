"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class GoursatError(ValueError):
    """Base class for all invalid-input conditions raised by this package."""


class MalformedSgv(GoursatError):
    pass


class MalformedDerived(GoursatError):
    pass


class NotRealizable(GoursatError):
    """A derived vector that violates one of the coding relations.

    ``relation`` names the violated relation so callers (and the CLI) can
    report it verbatim.
    """

    def __init__(self, relation: str, detail: str = ""):
        self.relation = relation
        msg = relation if not detail else f"{relation} ({detail})"
        super().__init__(msg)


class NotCritical(GoursatError):
    pass


class SingleStage(GoursatError):
    pass


class RvtSyntaxError(GoursatError):
    """Rejected RVT word. ``position`` is 1-based."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class BadAlphabet(RvtSyntaxError):
    pass


class TAfterR(RvtSyntaxError):
    pass


class MissingLeadingRR(RvtSyntaxError):
    pass


class RoundTripFailure(GoursatError):
    pass


class NoCriticalLetters(GoursatError):
    pass


class MalformedCriticalString(GoursatError):
    pass


class BadlyParametrized(GoursatError):
    pass


class InvalidPuiseux(GoursatError):
    pass


class MalformedBranch(GoursatError):
    pass
