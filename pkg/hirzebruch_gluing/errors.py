"""Exceptions raised when inputs violate a named invariant."""


class GluingError(Exception):
    """Base class for every error raised by hirzebruch_gluing."""


class InvariantError(GluingError, ValueError):
    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        self.message = message
        super().__init__(f"{invariant}: {message}")

    def to_json(self) -> dict:
        return {"status": "error", "invariant": self.invariant, "message": self.message}

    def __reduce__(self):
        return (type(self), (self.invariant, self.message))
