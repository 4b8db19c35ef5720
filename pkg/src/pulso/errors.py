"""Shared exception types."""


class PulsoError(Exception):
    """Base class for errors raised by this package."""


class EmptyCorpusError(PulsoError):
    """No records survived parsing and filtering."""
