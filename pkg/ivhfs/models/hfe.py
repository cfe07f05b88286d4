"""Interval-valued hesitant fuzzy element."""
from dataclasses import dataclass
from typing import Iterator, Tuple

from ivhfs.core.exceptions import EmptyHfe
from ivhfs.models.interval import FULL_INTERVAL, NULL_INTERVAL, UnitInterval


@dataclass(frozen=True)
class Ivhfe:
    """Nonempty multiset of unit intervals kept in ascending rank order.

    Duplicates are meaningful: lengths take part in the extension
    convention, and worked examples carry repeated intervals.
    """
    elements: Tuple[UnitInterval, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise EmptyHfe("A hesitant element needs at least one interval")
        for element in elements:
            if not isinstance(element, UnitInterval):
                raise TypeError(f"Expected UnitInterval, got {type(element).__name__}")
        object.__setattr__(self, "elements", tuple(sorted(elements, key=UnitInterval.rank_key)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[UnitInterval]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> UnitInterval:
        return self.elements[index]

    @property
    def maximum(self) -> UnitInterval:
        return self.elements[-1]

    @property
    def is_null(self) -> bool:
        return all(element == NULL_INTERVAL for element in self.elements)

    @property
    def is_full(self) -> bool:
        return all(element == FULL_INTERVAL for element in self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(element) for element in self.elements) + "}"


NULL_HFE = Ivhfe((NULL_INTERVAL,))
FULL_HFE = Ivhfe((FULL_INTERVAL,))
