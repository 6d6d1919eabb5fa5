"""Exception hierarchy for numerical failures.

Input problems (bad node files, unsupported node counts, unordered nodes)
raise plain ``ValueError``.  Failures of the numerics themselves derive from
:class:`NumericalFailure` so callers can distinguish the two.
"""


class NumericalFailure(ArithmeticError):
    """Base class for failures of the numerical machinery."""


class DegreeOverflowError(NumericalFailure):
    """No extended moment exceeded the zero threshold up to index 2n.

    Degree detection is guaranteed to terminate by index 2n, so hitting this
    signals a misconfigured zero threshold, not a property of the rule.
    """


class SingularDiagonalError(NumericalFailure):
    """A diagonal entry of the triangular block underflowed to zero."""


class SingularSystemError(NumericalFailure):
    """A dense elimination hit a pivot too small to be trusted."""


class ConvergenceError(NumericalFailure):
    """An iteration (Newton root polishing) failed to converge."""


class SelfCheckError(NumericalFailure):
    """An internal cross-check failed, indicating a broken computation."""
