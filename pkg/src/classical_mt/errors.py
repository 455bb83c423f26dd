"""Exception hierarchy.

Every error raised by the library derives from :class:`MeasurementError`.
The ``exit_code`` attribute is what the command-line front end returns:
2 for malformed input, 3 when the input is well formed but the requested
inference is degenerate.
"""


class MeasurementError(ValueError):
    """Base class for all library errors (invalid input by default)."""

    exit_code = 2


class DegenerateInferenceError(MeasurementError):
    """The input is valid but the requested inference has no answer."""

    exit_code = 3


# --- spaces, states, observables ------------------------------------------


class EmptySpaceError(MeasurementError):
    pass


class DuplicateLabelError(MeasurementError):
    pass


class UnknownLabelError(MeasurementError, KeyError):
    def __str__(self):  # KeyError would repr() the message
        return MeasurementError.__str__(self)


class UnknownOutcomeError(MeasurementError, KeyError):
    def __str__(self):
        return MeasurementError.__str__(self)


class InvalidStateError(MeasurementError):
    """Weights are negative or do not sum to one."""


class NegativeEffectError(MeasurementError):
    pass


class ColumnNotNormalizedError(MeasurementError):
    """Singleton effects at one point do not sum to one."""

    def __init__(self, point, total):
        self.point = point
        self.total = total
        super().__init__(f"effects at point {point!r} sum to {total}, expected 1")


class DimensionMismatchError(MeasurementError):
    pass


class SpaceMismatchError(MeasurementError):
    pass


class InvalidScalarError(MeasurementError):
    pass


# --- sessions -------------------------------------------------------------


class SessionConsumedError(MeasurementError):
    """A measurement session was executed a second time."""


class StateUnknownError(MeasurementError):
    """No outcome distribution exists for a session with a fully unknown state."""


# --- inference ------------------------------------------------------------


class ZeroEvidenceError(DegenerateInferenceError):
    pass


class ZeroLikelihoodEverywhereError(DegenerateInferenceError):
    pass


# --- causality ------------------------------------------------------------


class NotMarkovError(MeasurementError):
    pass


class InvalidTreeError(MeasurementError):
    pass


class NotComparableError(MeasurementError):
    pass


# --- symmetry -------------------------------------------------------------


class IndexOutOfRangeError(MeasurementError, IndexError):
    pass


class NotUniformWeightsError(MeasurementError):
    pass


class NotStateIndependentError(DegenerateInferenceError):
    pass


# --- problems -------------------------------------------------------------


class InvalidAlphaError(MeasurementError):
    pass


class PriorSuppliedError(MeasurementError):
    """A prior was given to a variant that must not receive one."""


class MissingPriorError(MeasurementError):
    pass


class InvalidProblemError(MeasurementError):
    pass


# --- simulation -----------------------------------------------------------


class NoConditioningEventsError(DegenerateInferenceError):
    pass
