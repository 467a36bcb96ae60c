"""Closed error vocabulary shared by every public operation."""


class TableauxError(ValueError):
    """Base class; ``code`` names the failure class in CLI diagnostics."""

    code = "Error"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class SumMismatch(TableauxError):
    code = "SumMismatch"


class NotDominating(TableauxError):
    code = "NotDominating"


class NoSuchIndex(TableauxError):
    code = "NoSuchIndex"


class InvalidFloor(TableauxError):
    code = "InvalidFloor"


class ShapeMismatch(TableauxError):
    code = "ShapeMismatch"


class MixedPoset(TableauxError):
    code = "MixedPoset"


class ZeroCount(TableauxError):
    code = "ZeroCount"


class Overflow(TableauxError):
    code = "Overflow"


class NotContained(TableauxError):
    code = "NotContained"


class CapExceeded(TableauxError):
    code = "CapExceeded"


class ParseError(TableauxError):
    code = "ParseError"
