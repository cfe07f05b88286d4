"""Soft-set algebra over a shared context.

Union and intersection keep the raw supports (A ∪ B, A ∩ B). Complement
and everything in the topology layer work on normalized sets, whose
support is the whole parameter set with null cells filled in.
"""
from typing import Callable, NamedTuple, Optional

from ivhfs.core.exceptions import ContextMismatch, EmptyIntersection, SupportError
from ivhfs.models.hfe import FULL_HFE, NULL_HFE, Ivhfe
from ivhfs.models.interval import OrderProfile
from ivhfs.models.softset import Context, SoftSet
from ivhfs.services.hfe_ops import (
    first_violation,
    hfe_complement,
    hfe_join,
    hfe_meet,
    hfe_ring_product,
    hfe_ring_sum,
)


class CellWitness(NamedTuple):
    """Where an inclusion fails: object and position are None for support gaps."""
    parameter: str
    object: Optional[str]
    position: Optional[int]

    def describe(self) -> str:
        if self.object is None:
            return f"parameter {self.parameter} outside the support"
        return f"cell ({self.parameter}, {self.object}), element {self.position + 1}"


def require_same_context(*sets: SoftSet) -> Context:
    context = sets[0].context
    for other in sets[1:]:
        if other.context != context:
            raise ContextMismatch(
                "Soft sets are defined over different contexts",
                {
                    "expected": {"universe": list(context.universe), "parameters": list(context.parameters)},
                    "found": {"universe": list(other.context.universe), "parameters": list(other.context.parameters)},
                },
            )
    return context


def _constant(context: Context, value: Ivhfe) -> SoftSet:
    return SoftSet(
        context,
        context.parameters,
        {(parameter, obj): value for parameter in context.parameters for obj in context.universe},
    )


def null_set(context: Context) -> SoftSet:
    return _constant(context, NULL_HFE)


def absolute_set(context: Context) -> SoftSet:
    return _constant(context, FULL_HFE)


def normalize(f: SoftSet) -> SoftSet:
    """Extend the support to every parameter, filling new cells with {[0,0]}."""
    if f.is_normalized:
        return f
    cells = dict(f.cells)
    for parameter in f.context.parameters:
        if parameter not in f.support:
            for obj in f.context.universe:
                cells[(parameter, obj)] = NULL_HFE
    return SoftSet(f.context, f.context.parameters, cells)


def restrict(f: SoftSet, parameter: str) -> SoftSet:
    """Keep the cells at one parameter and null out the rest (normalized)."""
    if parameter not in f.context.parameters:
        raise SupportError("Unknown parameter", {"parameter": parameter})
    f = normalize(f)
    cells = {
        (name, obj): (f.cell(name, obj) if name == parameter else NULL_HFE)
        for name in f.context.parameters
        for obj in f.context.universe
    }
    return SoftSet(f.context, f.context.parameters, cells)


def _cellwise(f: SoftSet, g: SoftSet, parameters, combine: Callable[[Ivhfe, Ivhfe], Ivhfe]) -> SoftSet:
    cells = {}
    for parameter in parameters:
        for obj in f.context.universe:
            in_f = parameter in f.support
            in_g = parameter in g.support
            if in_f and in_g:
                cells[(parameter, obj)] = combine(f.cell(parameter, obj), g.cell(parameter, obj))
            elif in_f:
                cells[(parameter, obj)] = f.cell(parameter, obj)
            else:
                cells[(parameter, obj)] = g.cell(parameter, obj)
    return SoftSet(f.context, tuple(parameters), cells)


def ss_complement(f: SoftSet) -> SoftSet:
    f = normalize(f)
    return SoftSet(
        f.context,
        f.support,
        {key: hfe_complement(value) for key, value in f.cells.items()},
    )


def ss_union(f: SoftSet, g: SoftSet, profile: OrderProfile) -> SoftSet:
    context = require_same_context(f, g)
    support = context.order_parameters(set(f.support) | set(g.support))
    return _cellwise(f, g, support, lambda a, b: hfe_join(a, b, profile))


def _shared_support(f: SoftSet, g: SoftSet, operation: str):
    context = require_same_context(f, g)
    support = context.order_parameters(set(f.support) & set(g.support))
    if not support:
        raise EmptyIntersection(
            f"{operation} needs overlapping supports",
            {"left": list(f.support), "right": list(g.support)},
        )
    return support


def ss_intersection(f: SoftSet, g: SoftSet, profile: OrderProfile) -> SoftSet:
    support = _shared_support(f, g, "Intersection")
    return _cellwise(f, g, support, lambda a, b: hfe_meet(a, b, profile))


def ss_ring_sum(f: SoftSet, g: SoftSet) -> SoftSet:
    return _cellwise(f, g, _shared_support(f, g, "Ring sum"), hfe_ring_sum)


def ss_ring_product(f: SoftSet, g: SoftSet) -> SoftSet:
    return _cellwise(f, g, _shared_support(f, g, "Ring product"), hfe_ring_product)


def subset_witness(f: SoftSet, g: SoftSet, profile: OrderProfile) -> Optional[CellWitness]:
    """First place where f ⊆ g fails, or None when it holds."""
    require_same_context(f, g)
    for parameter in f.support:
        if parameter not in g.support:
            return CellWitness(parameter, None, None)
    for parameter, obj, value in f.iter_cells():
        position = first_violation(value, g.cell(parameter, obj), profile)
        if position is not None:
            return CellWitness(parameter, obj, position)
    return None


def ss_subset(f: SoftSet, g: SoftSet, profile: OrderProfile) -> bool:
    return subset_witness(f, g, profile) is None


def equality_witness(f: SoftSet, g: SoftSet, profile: OrderProfile) -> Optional[CellWitness]:
    return subset_witness(f, g, profile) or subset_witness(g, f, profile)


def ss_equal(f: SoftSet, g: SoftSet, profile: OrderProfile) -> bool:
    return equality_witness(f, g, profile) is None
