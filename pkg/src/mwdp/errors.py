"""Exception hierarchy.

The CLI maps these to exit codes: anything derived from :class:`InputError`
exits 2, :class:`CapExceeded` exits 3, and :class:`InternalCheckFailed`
(or any unexpected exception) exits 1.
"""


class MWDPError(Exception):
    """Base class for all toolkit errors."""


class InputError(MWDPError):
    """Malformed or contract-violating input."""


class ValidationError(InputError):
    """An instance violates a structural invariant."""


class SelfLoop(ValidationError):
    pass


class DuplicateArc(ValidationError):
    pass


class NegativeCost(ValidationError):
    pass


class UnknownMatrix(ValidationError):
    pass


class UnknownVertex(ValidationError):
    pass


class KindViolation(ValidationError):
    pass


class EmptyFamily(InputError):
    pass


class PreconditionViolated(InputError):
    """A solver was invoked on an instance outside its matrix-property precondition."""

    def __init__(self, prop: str, detail: str = ""):
        self.prop = prop
        msg = f"precondition violated: every matrix must satisfy property ({prop})"
        if detail:
            msg += f"; {detail}"
        super().__init__(msg)


class HypothesisViolated(InputError):
    """Matrices handed to a reduction do not satisfy its required property pattern."""


class NotLinear(InputError):
    pass


class BadColor(InputError):
    pass


class NegativeK(InputError):
    pass


class NegativeWeight(InputError):
    pass


class BadTerminals(InputError):
    pass


class NoEdges(InputError):
    pass


class CapExceeded(MWDPError):
    """Exhaustive solving was requested beyond the configured vertex cap."""


class TooLarge(CapExceeded):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"brute force over {n} vertices exceeds cap {cap}")


class HardInstanceTooLarge(CapExceeded):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"instance family is hard and |V| = {n} exceeds the exhaustive-solver cap {cap}; "
            "raise the cap or use the local-search heuristic"
        )


class NonIntegralRecovery(MWDPError):
    """Cut recovery did not land on an admissible integer.

    Signals a gadget construction bug or a non-optimal input weight.
    """


class InternalCheckFailed(MWDPError):
    """A cross-check the solver performs on its own output failed; this is a bug."""
