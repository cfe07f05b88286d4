"""Families of soft sets, soft points and topology reports."""
import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from ivhfs.core.exceptions import ContextMismatch, DuplicateMember, NotAPoint
from ivhfs.models.softset import Context, SoftSet
from ivhfs.services.softset_ops import CellWitness, normalize

PHI = "phi"
ABSOLUTE = "E"
RESERVED_NAMES = (PHI, ABSOLUTE)


class Axiom(str, enum.Enum):
    """Topology axioms, in the order they are checked."""
    CONTAINS_PHI = "contains-phi"
    CONTAINS_E = "contains-E"
    MEET_CLOSED = "meet-closed"
    JOIN_CLOSED = "join-closed"


class TopologyComparison(str, enum.Enum):
    EQUAL = "equal"
    COARSER = "coarser"
    FINER = "finer"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Family:
    """Named finite collection of normalized soft sets over one context."""
    context: Context
    members: Tuple[Tuple[str, SoftSet], ...]

    def __post_init__(self):
        members = tuple((name, normalize(soft_set)) for name, soft_set in self.members)
        names = [name for name, _ in members]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise DuplicateMember("Family member names must be distinct", {"duplicates": duplicates})
        for name, soft_set in members:
            if soft_set.context != self.context:
                raise ContextMismatch(
                    "Family member is defined over another context",
                    {"member": name},
                )
        object.__setattr__(self, "members", members)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.members)

    def __iter__(self) -> Iterator[Tuple[str, SoftSet]]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def get(self, name: str) -> Optional[SoftSet]:
        for member_name, soft_set in self.members:
            if member_name == name:
                return soft_set
        return None


@dataclass(frozen=True)
class SoftPoint:
    """Normalized soft set that is non-null at exactly one parameter."""
    carrier: SoftSet
    at: str

    def __post_init__(self):
        carrier = normalize(self.carrier)
        if self.at not in carrier.context.parameters:
            raise NotAPoint("Unknown point parameter", {"parameter": self.at})
        for parameter in carrier.context.parameters:
            row_is_null = all(carrier.cell(parameter, obj).is_null for obj in carrier.context.universe)
            if parameter == self.at and row_is_null:
                raise NotAPoint("Point parameter carries only null cells", {"parameter": parameter})
            if parameter != self.at and not row_is_null:
                raise NotAPoint("Point is non-null at a second parameter", {"parameter": parameter})
        object.__setattr__(self, "carrier", carrier)

    @property
    def context(self) -> Context:
        return self.carrier.context


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the operands and the set that breaks it."""
    axiom: Axiom
    operands: Tuple[str, ...]
    witness: Optional[SoftSet] = None
    cell: Optional[CellWitness] = None


@dataclass(frozen=True)
class TopologyReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations
