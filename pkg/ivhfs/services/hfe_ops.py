"""Operations on interval-valued hesitant fuzzy elements.

Join and meet work position by position after both operands are padded to
a common length by repeating their largest interval. Ring sum and ring
product combine every pair of intervals and keep distinct results only.
"""
from functools import reduce
from fractions import Fraction
from typing import Iterable, Tuple

from ivhfs.core.exceptions import EmptyHfe, TooShort
from ivhfs.models.hfe import Ivhfe
from ivhfs.models.interval import OrderProfile, RankOrdering, UnitInterval
from ivhfs.services.interval_ops import (
    interval_complement,
    interval_join,
    interval_leq,
    interval_meet,
    interval_ring_product,
    interval_ring_sum,
    interval_scale,
    interval_sum,
    rank_compare,
)


def canonicalize(raw: Iterable[UnitInterval]) -> Ivhfe:
    """Ascending rank order, as kept by Ivhfe; duplicates are kept."""
    elements = list(raw)
    if not elements:
        raise EmptyHfe("A hesitant element needs at least one interval")
    return Ivhfe(tuple(elements))


def extend(e: Ivhfe, n: int) -> Ivhfe:
    """Pad e to length n with copies of its largest interval."""
    if n < len(e):
        raise TooShort(
            f"Cannot extend an element of length {len(e)} to {n}",
            {"length": len(e), "target": n},
        )
    return Ivhfe(e.elements + (e.maximum,) * (n - len(e)))


def _aligned(e1: Ivhfe, e2: Ivhfe) -> Tuple[Ivhfe, Ivhfe]:
    n = max(len(e1), len(e2))
    return extend(e1, n), extend(e2, n)


def hfe_complement(e: Ivhfe) -> Ivhfe:
    return canonicalize(interval_complement(element) for element in e)


def hfe_join(e1: Ivhfe, e2: Ivhfe, profile: OrderProfile) -> Ivhfe:
    left, right = _aligned(e1, e2)
    return canonicalize(interval_join(a, b, profile) for a, b in zip(left, right))


def hfe_meet(e1: Ivhfe, e2: Ivhfe, profile: OrderProfile) -> Ivhfe:
    left, right = _aligned(e1, e2)
    return canonicalize(interval_meet(a, b, profile) for a, b in zip(left, right))


def hfe_ring_sum(e1: Ivhfe, e2: Ivhfe) -> Ivhfe:
    return canonicalize({interval_ring_sum(a, b) for a in e1 for b in e2})


def hfe_ring_product(e1: Ivhfe, e2: Ivhfe) -> Ivhfe:
    return canonicalize({interval_ring_product(a, b) for a in e1 for b in e2})


def score(e: Ivhfe) -> UnitInterval:
    """Mean of the lower endpoints and of the upper endpoints."""
    total = reduce(interval_sum, (element.as_nonneg() for element in e))
    mean = interval_scale(Fraction(1, len(e)), total)
    return UnitInterval(mean.lower, mean.upper)


def score_compare(e1: Ivhfe, e2: Ivhfe) -> RankOrdering:
    return rank_compare(score(e1), score(e2))


def first_violation(e1: Ivhfe, e2: Ivhfe, profile: OrderProfile):
    """Index of the first aligned position where e1 <= e2 fails, else None."""
    left, right = _aligned(e1, e2)
    for index, (a, b) in enumerate(zip(left, right)):
        if not interval_leq(a, b, profile):
            return index
    return None


def hfe_leq(e1: Ivhfe, e2: Ivhfe, profile: OrderProfile) -> bool:
    return first_violation(e1, e2, profile) is None


def hfe_eq(e1: Ivhfe, e2: Ivhfe, profile: OrderProfile) -> bool:
    return hfe_leq(e1, e2, profile) and hfe_leq(e2, e1, profile)


def is_null_hfe(e: Ivhfe) -> bool:
    return e.is_null


def is_full_hfe(e: Ivhfe) -> bool:
    return e.is_full
