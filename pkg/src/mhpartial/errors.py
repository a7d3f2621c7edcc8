"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad input from the caller (dimension mismatch, bad field, bad params)."""


class WindowExhausted(RuntimeError):
    """A computation on a rule-backend algebra left the configured key window."""

    def __init__(self, msg, keys=()):
        super().__init__(msg)
        self.keys = list(keys)


class UnsupportedStructure(RuntimeError):
    """The requested operation needs data this structure does not carry."""


class InternalInconsistency(RuntimeError):
    """A structure violated one of its own invariants (with a witness)."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness
