"""Exception types shared across the package."""


class GammaPoleError(ValueError):
    """Raised when Gamma is evaluated at (or within 1e-12 of) a nonpositive integer."""


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


class NonConvergenceError(RuntimeError):
    """Raised when adaptive refinement exceeds its configured depth."""
