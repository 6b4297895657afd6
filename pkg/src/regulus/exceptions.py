"""Error types raised by regulus"""


class RegulusError(ValueError):
    """Base class for all regulus errors"""


class IncompatibleRingsError(RegulusError):
    """Binary series operation on two different coefficient rings"""

    def __init__(self, left: object, right: object):
        super().__init__(f"incompatible rings: {left} and {right}")


class NonInvertibleSeriesError(RegulusError):
    """Constant term is not a unit of the coefficient ring"""

    def __init__(self, constant: int, ring: object):
        super().__init__(f"non-invertible series: constant term {constant} is not a unit in {ring}")


class InsufficientOrderError(RegulusError):
    """A comparison or extraction asks for coefficients the series does not know"""

    def __init__(self, requested: int, available: int):
        super().__init__(
            f"insufficient order: exponent {requested} requested, "
            f"series known through {available - 1}"
        )


class NotPrimeError(RegulusError):
    """The modular generating function needs a prime modulus"""

    def __init__(self, value: int):
        super().__init__(f"{value} is not prime; f_l = f_1^l (mod l) needs a prime l")


class OutOfDeskScaleError(RegulusError):
    """Required truncation order is larger than the configured cap"""

    def __init__(
        self, required: int, cap: int, setting: str = "REGULUS_MAX_ORDER", quantity: str = "order"
    ):
        self.required = required
        self.cap = cap
        super().__init__(
            f"out of desk scale: {quantity} {required} required, cap is {cap} "
            f"(raise {setting} to allow it)"
        )


class UnknownCheckError(RegulusError):
    """No registry entry with the given name"""

    def __init__(self, name: str):
        super().__init__(f"unknown check: {name}")


class SequenceIntegrityError(RegulusError):
    """A closed form that must be an integer evaluated to something else"""
