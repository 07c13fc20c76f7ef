"""Exception types shared across the package."""

from __future__ import annotations


class ValidationError(ValueError):
    """Input data violates a documented invariant.

    ``code`` is a stable machine-readable identifier for the violated
    invariant (e.g. ``"face-count"``); ``detail`` is the human message.
    """

    def __init__(self, code: str, detail: str):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


class InternalInvariantError(RuntimeError):
    """The extension engine hit a dead end it can prove should not exist.

    The lemmas guarantee success on valid input, so this always indicates a
    defect (or invalid unvalidated input); ``trace`` carries the recursion
    path for diagnosis.
    """

    def __init__(self, detail: str, trace: tuple = ()):
        super().__init__(detail)
        self.detail = detail
        self.trace = trace

    def trace_json(self) -> dict:
        return {"detail": self.detail, "trace": [list(map(str, t)) for t in self.trace]}
