"""Exception types shared across the package."""


class Flops2FootprintError(Exception):
    """Base class for all errors raised by this package."""


class ProfileValidationError(Flops2FootprintError):
    """A hardware profile document violates the profile schema or its invariants."""


class NotFoundError(Flops2FootprintError):
    """A model, profile, element symbol, or precision label could not be resolved."""


class InputError(Flops2FootprintError):
    """User-supplied data is inconsistent (e.g. scores for an unknown model)."""
