"""Exception hierarchy.

Everything raised deliberately by the package derives from
:class:`DiffGaloisError`, so callers (and the command line driver) can
tell user-facing failures apart from bugs.
"""


class DiffGaloisError(Exception):
    """Base class for all package errors."""


class ShapeMismatch(DiffGaloisError, ValueError):
    pass


class CountMismatch(DiffGaloisError, ValueError):
    pass


class BetaMismatch(DiffGaloisError, ValueError):
    pass


class NotAlternating(DiffGaloisError, ValueError):
    def __init__(self, i, k, l, detail=""):
        self.index = (i, k, l)
        msg = f"wedge table is not alternating at (i={i}, k={k}, l={l})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class IndexOutOfRange(DiffGaloisError, ValueError):
    pass


class NotFlat(DiffGaloisError, ValueError):
    """The connection has nonzero curvature; it is not integrable."""


class GenusTooSmall(DiffGaloisError, ValueError):
    pass


class UnknownTarget(DiffGaloisError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown target"


class NotSemisimple(DiffGaloisError, ValueError):
    pass


class ResourceCapExceeded(DiffGaloisError, RuntimeError):
    pass


class EigenvalueFieldUnsupported(DiffGaloisError, ValueError):
    pass


class MalformedInput(DiffGaloisError, ValueError):
    """Input data that does not follow one of the documented file grammars.

    ``where`` is a field path such as ``matrices[1][0][2]``; ``line`` is set
    when the failure is a JSON syntax error.
    """

    def __init__(self, message, where=None, line=None):
        self.where = where
        self.line = line
        parts = []
        if line is not None:
            parts.append(f"line {line}")
        if where:
            parts.append(where)
        prefix = ": ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class InvariantBreach(DiffGaloisError, AssertionError):
    """Two independent computations that must agree did not.

    This signals a defect in the package, never bad user input.
    """
