"""Exception types shared across the package."""


class VerificationError(RuntimeError):
    """A mathematical assertion that the library certifies was violated.

    Raised by the verification harnesses (ratio checks, Brezis-Gallouet
    checks) when a computed quantity lands on the wrong side of a proved
    inequality; carries enough context to identify the offending input.
    """


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""
