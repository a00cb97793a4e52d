"""Exception types shared across the package."""


class AlphaSingular(ZeroDivisionError):
    """A denominator vanished at the chosen value of alpha."""

    def __init__(self, factor, alpha=None):
        self.factor = factor
        self.alpha = alpha
        msg = f"vanishing factor: {factor}"
        if alpha is not None:
            msg += f" (alpha={alpha})"
        super().__init__(msg)


class NotHomogeneous(ValueError):
    pass


class NotInSpan(ArithmeticError):
    """Triangular elimination left a nonzero residual."""


class ZeroLeadingCoefficient(ArithmeticError):
    pass


def nonzero(value, factor, alpha=None):
    """Return ``value`` unchanged, raising AlphaSingular if it is zero."""
    if value == 0:
        raise AlphaSingular(factor, alpha)
    return value
