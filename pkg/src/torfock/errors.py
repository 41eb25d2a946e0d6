"""Exception types shared across the kernel.

Every error that can abort a verification carries enough context in its
message to reproduce the offending computation.
"""


class TorfockError(Exception):
    pass


class ConfigError(TorfockError):
    """Bad or inconsistent run configuration (exit code 2 in the CLI)."""


class NonUnit(TorfockError):
    """Inversion of a series whose leading term is not certified nonzero."""


class DivisionByZero(TorfockError):
    pass


class InexactDivision(TorfockError):
    """div_exact_eps found a certified nonzero coefficient below the shift."""


class BadLeadingTerm(TorfockError):
    """log/sqrt need leading coefficient exactly 1; exp needs positive order."""


class NotNilpotent(TorfockError):
    """Substitution argument must have strictly positive epsilon-order."""


class PrecisionError(TorfockError):
    """A comparison was requested beyond the certified truncation order."""


class ResonanceError(TorfockError):
    """A matrix coefficient hit a vanishing denominator (resonant parameters)."""


class UnknownRelation(TorfockError):
    pass


class KindMismatch(TorfockError):
    """Mixed difference/differential operator arithmetic."""
