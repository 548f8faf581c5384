"""Exception types shared across the package."""


class ConstacodesError(Exception):
    pass


class Inapplicable(ConstacodesError, ArithmeticError):
    """A mathematical hypothesis fails; the requested operation is undefined.

    Distinct from a usage error: the inputs are well formed but the theory
    does not apply (e.g. no n-th root exists, gcd(n, p) != 1).
    """


class NoRootError(Inapplicable):
    """No root of the requested kind exists."""


class CapExceeded(ConstacodesError, RuntimeError):
    """A configured size/enumeration cap would be exceeded."""
