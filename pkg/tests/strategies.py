"""Hypothesis strategies for intervals, hesitant elements, soft sets and topologies."""
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional

import hypothesis.strategies as st
from hypothesis import assume

from ivhfs.models.hfe import Ivhfe
from ivhfs.models.interval import OrderProfile, UnitInterval
from ivhfs.models.softset import Context, SoftSet
from ivhfs.models.topology import Family
from ivhfs.services.hfe_ops import canonicalize
from ivhfs.services.softset_ops import absolute_set, null_set, ss_equal, ss_intersection, ss_union
from ivhfs.services.workspace_service import Workspace

GRID = [Fraction(i, 10) for i in range(11)]

# Totally ordered both componentwise and by rank, and closed under complement
CHAIN = [
    UnitInterval(Fraction(lower, 10), Fraction(upper, 10))
    for lower, upper in [(0, 0), (0, 2), (1, 3), (3, 5), (4, 6), (5, 7), (7, 9), (8, 10), (10, 10)]
]

MAX_FAMILY = 12

profiles = st.sampled_from(list(OrderProfile))


@st.composite
def grid_intervals(draw) -> UnitInterval:
    a, b = draw(st.sampled_from(GRID)), draw(st.sampled_from(GRID))
    return UnitInterval(min(a, b), max(a, b))


chain_intervals = st.sampled_from(CHAIN)


def elements_for(profile: OrderProfile):
    """Intervals on which the profile's laws hold exactly."""
    return grid_intervals() if profile is OrderProfile.RANK_SELECT else chain_intervals


def hfes(elements=None, min_size: int = 1, max_size: int = 3):
    elements = elements if elements is not None else grid_intervals()
    return st.lists(elements, min_size=min_size, max_size=max_size).map(canonicalize)


def fixed_hfes(length: int, elements=None):
    return hfes(elements, min_size=length, max_size=length)


@st.composite
def contexts(draw, max_objects: int = 3, max_parameters: int = 3) -> Context:
    objects = draw(st.integers(1, max_objects))
    parameters = draw(st.integers(1, max_parameters))
    return Context(
        tuple(f"h{i + 1}" for i in range(objects)),
        tuple(f"e{i + 1}" for i in range(parameters)),
    )


@st.composite
def soft_sets(draw, context: Context, cell_strategy=None, normalized: bool = False) -> SoftSet:
    cell_strategy = cell_strategy if cell_strategy is not None else hfes()
    if normalized:
        support = context.parameters
    else:
        support = tuple(
            draw(st.lists(st.sampled_from(context.parameters), min_size=1, unique=True))
        )
    cells = {(p, o): draw(cell_strategy) for p in support for o in context.universe}
    return SoftSet(context, support, cells)


def close_family(seeds: List[SoftSet], profile: OrderProfile) -> Optional[List[SoftSet]]:
    """Close phi, E and the seeds under meet and join up to soft equality."""
    context = seeds[0].context
    members = [null_set(context), absolute_set(context)]
    for seed in seeds:
        if not any(ss_equal(seed, m, profile) for m in members):
            members.append(seed)
    grew = True
    while grew:
        grew = False
        for left, right in combinations(list(members), 2):
            for combined in (ss_intersection(left, right, profile), ss_union(left, right, profile)):
                if not any(ss_equal(combined, m, profile) for m in members):
                    members.append(combined)
                    grew = True
                    if len(members) > MAX_FAMILY:
                        return None
    return members


@st.composite
def topologies(draw, context: Context, profile: OrderProfile, length: int) -> Family:
    """A valid topology generated from one or two random seed sets."""
    cells = fixed_hfes(length, elements_for(profile))
    seeds = draw(st.lists(soft_sets(context, cells, normalized=True), min_size=1, max_size=2))
    members = close_family(seeds, profile)
    assume(members is not None)
    return Family(context, tuple((f"T{i}", member) for i, member in enumerate(members)))


@st.composite
def topology_cases(draw, profile: OrderProfile):
    """Context, cell length, a topology and a cell strategy matching it."""
    context = draw(contexts())
    length = draw(st.integers(1, 3))
    family = draw(topologies(context, profile, length))
    cells = fixed_hfes(length, elements_for(profile))
    return context, length, family, cells


def workspace_of(context: Context, sets: Dict[str, SoftSet], families: Dict[str, Family] = None) -> Workspace:
    """Bundle generated data into a workspace so a failing case can be written out."""
    sets = dict(sets)
    topologies_by_name = {}
    for name, family in (families or {}).items():
        members = []
        for member_name, member in family:
            key = f"{name}.{member_name}"
            sets[key] = member
            members.append(key)
        topologies_by_name[name] = tuple(members)
    return Workspace(context, sets, topologies_by_name)


def workspace_of_hfes(**named: Ivhfe) -> Workspace:
    context = Context(("h1",), ("e1",))
    return workspace_of(
        context,
        {name: SoftSet(context, ("e1",), {("e1", "h1"): value}) for name, value in named.items()},
    )
