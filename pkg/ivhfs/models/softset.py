"""Soft-universe context and interval-valued hesitant fuzzy soft sets."""
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from ivhfs.core.exceptions import SupportError
from ivhfs.models.hfe import Ivhfe

Cell = Tuple[str, str]


def _check_names(kind: str, names: Sequence[str]) -> Tuple[str, ...]:
    names = tuple(names)
    if not names:
        raise SupportError(f"The {kind} must not be empty")
    for name in names:
        if not isinstance(name, str) or not name.strip():
            raise SupportError(f"Invalid {kind} name: {name!r}", {"name": repr(name)})
    if len(set(names)) != len(names):
        duplicates = sorted({name for name in names if names.count(name) > 1})
        raise SupportError(f"Duplicate {kind} names", {"duplicates": duplicates})
    return names


@dataclass(frozen=True)
class Context:
    """Universe of objects U and parameter set E shared by soft sets."""
    universe: Tuple[str, ...]
    parameters: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "universe", _check_names("universe", self.universe))
        object.__setattr__(self, "parameters", _check_names("parameters", self.parameters))

    def order_parameters(self, names) -> Tuple[str, ...]:
        wanted = set(names)
        return tuple(name for name in self.parameters if name in wanted)


@dataclass(frozen=True, eq=False)
class SoftSet:
    """Mapping from (parameter in support, object) to a hesitant element."""
    context: Context
    support: Tuple[str, ...]
    cells: Mapping[Cell, Ivhfe]

    def __post_init__(self):
        support = tuple(self.support)
        if not support:
            raise SupportError("A soft set needs a nonempty support")
        unknown = [name for name in support if name not in self.context.parameters]
        if unknown:
            raise SupportError("Support outside the context parameters", {"unknown": unknown})
        if len(set(support)) != len(support):
            raise SupportError("Duplicate parameters in support", {"support": list(support)})

        cells: Dict[Cell, Ivhfe] = {}
        for parameter in self.context.order_parameters(support):
            for obj in self.context.universe:
                value = self.cells.get((parameter, obj))
                if value is None:
                    raise SupportError(
                        "Missing cell",
                        {"parameter": parameter, "object": obj},
                    )
                cells[(parameter, obj)] = value
        extra = [key for key in self.cells if key not in cells]
        if extra:
            raise SupportError(
                "Cells outside support or universe",
                {"cells": [list(key) for key in extra]},
            )
        object.__setattr__(self, "support", self.context.order_parameters(support))
        object.__setattr__(self, "cells", MappingProxyType(cells))

    @classmethod
    def from_rows(cls, context: Context, rows: Mapping[str, Mapping[str, Ivhfe]]) -> "SoftSet":
        """Build from {parameter: {object: Ivhfe}}; the keys form the support."""
        cells = {
            (parameter, obj): value
            for parameter, row in rows.items()
            for obj, value in row.items()
        }
        return cls(context, tuple(rows), cells)

    def cell(self, parameter: str, obj: str) -> Ivhfe:
        return self.cells[(parameter, obj)]

    def row(self, parameter: str) -> Dict[str, Ivhfe]:
        return {obj: self.cells[(parameter, obj)] for obj in self.context.universe}

    def iter_cells(self) -> Iterator[Tuple[str, str, Ivhfe]]:
        for parameter in self.support:
            for obj in self.context.universe:
                yield parameter, obj, self.cells[(parameter, obj)]

    @property
    def is_normalized(self) -> bool:
        return self.support == self.context.parameters

    def __eq__(self, other) -> bool:
        if not isinstance(other, SoftSet):
            return NotImplemented
        return (
            self.context == other.context
            and self.support == other.support
            and dict(self.cells) == dict(other.cells)
        )

    def __hash__(self) -> int:
        return hash((self.context, self.support, tuple(sorted(self.cells.items(), key=lambda kv: kv[0]))))
