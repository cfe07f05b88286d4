"""Interval value types: unit intervals, their nonnegative sums, orderings."""
import enum
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

from ivhfs.core.exceptions import Inverted, OutOfRange

Rational = Union[Fraction, int, str, Decimal, float]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def to_fraction(value: Rational) -> Fraction:
    """Convert a number or decimal string to an exact Fraction.

    Floats go through their shortest repr, so 0.1 becomes 1/10 rather than
    the binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not interval endpoints")
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


class RankOrdering(str, enum.Enum):
    """Outcome of a total-order comparison."""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class OrderProfile(str, enum.Enum):
    """How two intervals are joined, met and compared."""
    COMPONENTWISE = "componentwise"
    RANK_SELECT = "rank-select"

    @classmethod
    def parse(cls, value: Union[str, "OrderProfile"]) -> "OrderProfile":
        if isinstance(value, cls):
            return value
        normalized = str(value).strip().lower()
        if normalized in ("rank", "rank-select", "rank_select"):
            return cls.RANK_SELECT
        if normalized == "componentwise":
            return cls.COMPONENTWISE
        raise ValueError(f"Unknown order profile: {value!r}")

    @property
    def cli_name(self) -> str:
        return "rank" if self is OrderProfile.RANK_SELECT else "componentwise"


@dataclass(frozen=True)
class NonNegInterval:
    """Interval with nonnegative endpoints; intermediate of sums before scaling."""
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lower", to_fraction(self.lower))
        object.__setattr__(self, "upper", to_fraction(self.upper))
        if self.lower < 0:
            raise OutOfRange(
                "Interval endpoints must be nonnegative",
                {"lower": str(self.lower), "upper": str(self.upper)},
            )
        if self.lower > self.upper:
            raise Inverted(
                "Lower endpoint exceeds upper endpoint",
                {"lower": str(self.lower), "upper": str(self.upper)},
            )


@dataclass(frozen=True)
class UnitInterval:
    """Closed subinterval [lower, upper] of [0, 1] with exact endpoints."""
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        lower = to_fraction(self.lower)
        upper = to_fraction(self.upper)
        if lower < ZERO or upper > ONE or upper < ZERO or lower > ONE:
            raise OutOfRange(
                "Interval endpoints must lie in [0, 1]",
                {"lower": str(lower), "upper": str(upper)},
            )
        if lower > upper:
            raise Inverted(
                "Lower endpoint exceeds upper endpoint",
                {"lower": str(lower), "upper": str(upper)},
            )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def is_degenerate(self) -> bool:
        return self.lower == self.upper

    def rank_key(self):
        """Sort key of the rank total order: endpoint sum, then lower endpoint."""
        return (self.lower + self.upper, self.lower)

    def as_nonneg(self) -> NonNegInterval:
        return NonNegInterval(self.lower, self.upper)

    def __str__(self) -> str:
        return f"[{format_endpoint(self.lower)}, {format_endpoint(self.upper)}]"


def format_endpoint(value: Fraction) -> str:
    """Render an exact endpoint as a decimal string when it terminates.

    Non-terminating values (thirds, sevenths) fall back to "p/q" so the
    rendering stays exact and parses back to the same Fraction.
    """
    if value.denominator == 1:
        return f"{value.numerator}.0"
    twos = fives = 0
    rest = value.denominator
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    scaled = value.numerator * 10**places // value.denominator
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}".rstrip("0").rstrip(".") or "0"


NULL_INTERVAL = UnitInterval(ZERO, ZERO)
FULL_INTERVAL = UnitInterval(ONE, ONE)
