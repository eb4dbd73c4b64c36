"""Exception types shared across the package."""


class SlztError(Exception):
    pass


class PrecisionError(SlztError):
    """A truncated series does not carry enough terms to decide the question."""


class ZeroDivisorError(SlztError, ZeroDivisionError):
    pass


class DegenerateRecursionError(SlztError):
    pass


class ConstructionError(SlztError):
    """An identity that must hold by construction failed (implementation bug)."""


class CertificateError(SlztError):
    pass
