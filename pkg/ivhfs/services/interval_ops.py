"""Operations on unit intervals: ranking, lattice operations, arithmetic."""
from fractions import Fraction

from ivhfs.models.interval import (
    HALF,
    ONE,
    ZERO,
    NonNegInterval,
    OrderProfile,
    Rational,
    RankOrdering,
    UnitInterval,
    to_fraction,
)


def make_interval(lower: Rational, upper: Rational) -> UnitInterval:
    """Build a validated unit interval; raises OutOfRange or Inverted."""
    return UnitInterval(to_fraction(lower), to_fraction(upper))


def interval_width(a: UnitInterval) -> Fraction:
    return a.upper - a.lower


def possibility_degree(a: UnitInterval, b: UnitInterval) -> Fraction:
    """Degree of possibility that a >= b.

    When both intervals are points the formula divides by zero; the point
    values are compared instead (1, 1/2 or 0).
    """
    total_width = interval_width(a) + interval_width(b)
    if total_width == 0:
        if a.lower > b.lower:
            return ONE
        if a.lower == b.lower:
            return HALF
        return ZERO
    overlap = max((b.upper - a.lower) / total_width, ZERO)
    return max(ONE - overlap, ZERO)


def rank_compare(a: UnitInterval, b: UnitInterval) -> RankOrdering:
    """Total order: possibility degree first, then lower, then upper endpoint."""
    degree = possibility_degree(a, b)
    if degree < HALF:
        return RankOrdering.LESS
    if degree > HALF:
        return RankOrdering.GREATER
    if (a.lower, a.upper) < (b.lower, b.upper):
        return RankOrdering.LESS
    if (a.lower, a.upper) > (b.lower, b.upper):
        return RankOrdering.GREATER
    return RankOrdering.EQUAL


def interval_complement(a: UnitInterval) -> UnitInterval:
    return UnitInterval(ONE - a.upper, ONE - a.lower)


def interval_join(a: UnitInterval, b: UnitInterval, profile: OrderProfile) -> UnitInterval:
    if profile is OrderProfile.COMPONENTWISE:
        return UnitInterval(max(a.lower, b.lower), max(a.upper, b.upper))
    return b if rank_compare(a, b) is RankOrdering.LESS else a


def interval_meet(a: UnitInterval, b: UnitInterval, profile: OrderProfile) -> UnitInterval:
    if profile is OrderProfile.COMPONENTWISE:
        return UnitInterval(min(a.lower, b.lower), min(a.upper, b.upper))
    return b if rank_compare(a, b) is RankOrdering.GREATER else a


def interval_leq(a: UnitInterval, b: UnitInterval, profile: OrderProfile) -> bool:
    """a <= b: both endpoints, or possibility of b >= a at least one half."""
    if profile is OrderProfile.COMPONENTWISE:
        return a.lower <= b.lower and a.upper <= b.upper
    return possibility_degree(b, a) >= HALF


def interval_sum(a: NonNegInterval, b: NonNegInterval) -> NonNegInterval:
    return NonNegInterval(a.lower + b.lower, a.upper + b.upper)


def interval_scale(factor: Rational, a: NonNegInterval) -> NonNegInterval:
    factor = to_fraction(factor)
    if factor < 0:
        raise ValueError(f"Scale factor must be nonnegative, got {factor}")
    if factor == 0:
        return NonNegInterval(ZERO, ZERO)
    return NonNegInterval(factor * a.lower, factor * a.upper)


def interval_ring_sum(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    return UnitInterval(
        a.lower + b.lower - a.lower * b.lower,
        a.upper + b.upper - a.upper * b.upper,
    )


def interval_ring_product(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    return UnitInterval(a.lower * b.lower, a.upper * b.upper)
