"""Topology service: axiom checks, closure, interior and neighborhoods."""
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import structlog

from ivhfs.core.config import settings
from ivhfs.core.exceptions import TopologyError
from ivhfs.models.interval import OrderProfile
from ivhfs.models.softset import SoftSet
from ivhfs.models.topology import (
    ABSOLUTE,
    PHI,
    Axiom,
    Family,
    SoftPoint,
    TopologyComparison,
    TopologyReport,
    Violation,
)
from ivhfs.services.hfe_ops import first_violation, hfe_eq, hfe_leq
from ivhfs.services.softset_ops import (
    CellWitness,
    absolute_set,
    normalize,
    null_set,
    require_same_context,
    restrict,
    ss_complement,
    ss_equal,
    ss_intersection,
    ss_subset,
    ss_union,
)

logger = structlog.get_logger(__name__)

Member = Tuple[str, SoftSet]


class Hull(NamedTuple):
    """Closure or interior together with the members folded into it."""
    value: SoftSet
    contributors: Tuple[str, ...]


def complement_name(name: str) -> str:
    if name == PHI:
        return ABSOLUTE
    if name == ABSOLUTE:
        return PHI
    return f"{name}^C"


class TopologyService:
    """Topology queries under one order profile.

    Membership in a family is always judged up to soft equality, so a padded
    variant of a member counts as that member.
    """

    def __init__(self, profile: OrderProfile, workers: Optional[int] = None):
        self.profile = profile
        self.workers = workers or settings.VALIDATION_WORKERS

    # Membership

    def find_member(self, family: Family, soft_set: SoftSet) -> Optional[str]:
        soft_set = normalize(soft_set)
        for name, member in family:
            if ss_equal(member, soft_set, self.profile):
                return name
        return None

    def _differing_cell(self, family: Family, result: SoftSet, first_operand: SoftSet) -> CellWitness:
        """First cell that matches no member, positioned against the first operand."""
        members = [member for _, member in family]
        fallback = None
        for parameter, obj, value in result.iter_cells():
            reference = first_operand.cell(parameter, obj)
            if hfe_eq(value, reference, self.profile):
                continue
            position = first_violation(value, reference, self.profile)
            if position is None:
                position = first_violation(reference, value, self.profile)
            witness = CellWitness(parameter, obj, position)
            if fallback is None:
                fallback = witness
            if not any(hfe_eq(value, member.cell(parameter, obj), self.profile) for member in members):
                return witness
        return fallback

    def _check_pair(self, family: Family, pair: Tuple[Member, Member]) -> List[Violation]:
        (left_name, left), (right_name, right) = pair
        violations = []
        for axiom, combine in (
            (Axiom.MEET_CLOSED, ss_intersection),
            (Axiom.JOIN_CLOSED, ss_union),
        ):
            result = combine(left, right, self.profile)
            if self.find_member(family, result) is None:
                violations.append(
                    Violation(
                        axiom=axiom,
                        operands=(left_name, right_name),
                        witness=result,
                        cell=self._differing_cell(family, result, left),
                    )
                )
        return violations

    def validate_topology(self, family: Family) -> TopologyReport:
        violations: List[Violation] = []
        context = family.context
        for axiom, required in ((Axiom.CONTAINS_PHI, null_set(context)), (Axiom.CONTAINS_E, absolute_set(context))):
            if self.find_member(family, required) is None:
                violations.append(Violation(axiom=axiom, operands=(), witness=required))

        pairs = list(combinations(family.members, 2))
        if self.workers > 1 and len(pairs) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                per_pair = list(executor.map(lambda pair: self._check_pair(family, pair), pairs))
        else:
            per_pair = [self._check_pair(family, pair) for pair in pairs]
        for found in per_pair:
            violations.extend(found)

        report = TopologyReport(tuple(violations))
        logger.debug(
            "Topology validated",
            profile=self.profile.value,
            members=len(family),
            violations=len(report.violations),
        )
        return report

    # Open and closed sets

    def closed_members(self, family: Family) -> List[Member]:
        return [(complement_name(name), ss_complement(member)) for name, member in family]

    def is_open(self, family: Family, soft_set: SoftSet) -> bool:
        return self.find_member(family, soft_set) is not None

    def is_closed(self, family: Family, soft_set: SoftSet) -> bool:
        return self.is_open(family, ss_complement(soft_set))

    def closure_with_terms(self, family: Family, soft_set: SoftSet) -> Hull:
        soft_set = normalize(soft_set)
        require_same_context(soft_set, *[member for _, member in family])
        terms = [
            (name, closed)
            for name, closed in self.closed_members(family)
            if ss_subset(soft_set, closed, self.profile)
        ]
        value = reduce(
            lambda acc, term: ss_intersection(acc, term, self.profile),
            (closed for _, closed in terms),
            absolute_set(soft_set.context),
        )
        return Hull(value, tuple(name for name, _ in terms))

    def closure(self, family: Family, soft_set: SoftSet) -> SoftSet:
        return self.closure_with_terms(family, soft_set).value

    def interior_with_terms(self, family: Family, soft_set: SoftSet) -> Hull:
        soft_set = normalize(soft_set)
        require_same_context(soft_set, *[member for _, member in family])
        terms = [(name, member) for name, member in family if ss_subset(member, soft_set, self.profile)]
        value = reduce(
            lambda acc, term: ss_union(acc, term, self.profile),
            (member for _, member in terms),
            null_set(soft_set.context),
        )
        return Hull(value, tuple(name for name, _ in terms))

    def interior(self, family: Family, soft_set: SoftSet) -> SoftSet:
        return self.interior_with_terms(family, soft_set).value

    # Families

    def _contained(self, smaller: Family, larger: Family) -> bool:
        return all(self.find_member(larger, member) is not None for _, member in smaller)

    def compare_topologies(self, first: Family, second: Family) -> TopologyComparison:
        require_same_context(absolute_set(first.context), absolute_set(second.context))
        forward = self._contained(first, second)
        backward = self._contained(second, first)
        if forward and backward:
            return TopologyComparison.EQUAL
        if forward:
            return TopologyComparison.COARSER
        if backward:
            return TopologyComparison.FINER
        return TopologyComparison.INCOMPARABLE

    def is_comparable(self, first: Family, second: Family) -> bool:
        return self.compare_topologies(first, second) is not TopologyComparison.INCOMPARABLE

    def intersect_topologies(self, families: Sequence[Family]) -> Family:
        if not families:
            raise TopologyError("Intersection needs at least one family")
        head, rest = families[0], families[1:]
        for other in rest:
            require_same_context(absolute_set(head.context), absolute_set(other.context))
        members = tuple(
            (name, member)
            for name, member in head
            if all(self.find_member(other, member) is not None for other in rest)
        )
        return Family(head.context, members)

    # Points and neighborhoods

    def point_in(self, point: SoftPoint, soft_set: SoftSet) -> bool:
        soft_set = normalize(soft_set)
        require_same_context(point.carrier, soft_set)
        return all(
            hfe_leq(point.carrier.cell(point.at, obj), soft_set.cell(point.at, obj), self.profile)
            for obj in point.context.universe
        )

    def nbd_witness_of_point(self, family: Family, candidate: SoftSet, point: SoftPoint) -> Optional[str]:
        """Name of the first member between the point and the candidate."""
        candidate = normalize(candidate)
        require_same_context(candidate, point.carrier)
        for name, member in family:
            if self.point_in(point, member) and ss_subset(member, candidate, self.profile):
                return name
        return None

    def is_nbd_of_point(self, family: Family, candidate: SoftSet, point: SoftPoint) -> bool:
        return self.nbd_witness_of_point(family, candidate, point) is not None

    def nbd_system(self, family: Family, point: SoftPoint, candidates: Iterable[SoftSet]) -> List[bool]:
        return [self.is_nbd_of_point(family, candidate, point) for candidate in candidates]

    def nbd_witness_of_set(self, family: Family, candidate: SoftSet, inner: SoftSet) -> Optional[str]:
        candidate = normalize(candidate)
        inner = normalize(inner)
        require_same_context(candidate, inner)
        for name, member in family:
            if ss_subset(inner, member, self.profile) and ss_subset(member, candidate, self.profile):
                return name
        return None

    def is_nbd_of_set(self, family: Family, candidate: SoftSet, inner: SoftSet) -> bool:
        return self.nbd_witness_of_set(family, candidate, inner) is not None

    # Finite pools

    def neighborhood_pool(self, family: Family) -> List[Member]:
        """Members and their complements, without soft-equal repeats."""
        pool: List[Member] = []
        for name, soft_set in list(family) + self.closed_members(family):
            if not any(ss_equal(soft_set, kept, self.profile) for _, kept in pool):
                pool.append((name, soft_set))
        return pool

    def point_pool(self, family: Family) -> List[Tuple[str, SoftPoint]]:
        """Single-parameter restrictions of the neighborhood pool that are points."""
        points: List[Tuple[str, SoftPoint]] = []
        for name, soft_set in self.neighborhood_pool(family):
            for parameter in family.context.parameters:
                point = as_point(restrict(soft_set, parameter))
                if point is None:
                    continue
                if any(ss_equal(point.carrier, kept.carrier, self.profile) for _, kept in points):
                    continue
                points.append((f"{parameter}({name})", point))
        return points


def as_point(soft_set: SoftSet) -> Optional[SoftPoint]:
    soft_set = normalize(soft_set)
    non_null = [
        parameter
        for parameter in soft_set.context.parameters
        if not all(soft_set.cell(parameter, obj).is_null for obj in soft_set.context.universe)
    ]
    if len(non_null) != 1:
        return None
    return SoftPoint(soft_set, non_null[0])
