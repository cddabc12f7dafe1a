"""
Matroid Schema Module

Pydantic models for flats and the lattice of flats of a represented matroid.
Element sets are stored as ascending tuples of column labels so that models
are hashable and serialize deterministically.
"""

from typing import Dict, FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Flat(BaseModel):
    """
    Closed set of the matroid.

    Attributes:
        elements: ascending column labels
        rank: rank of the element set
    """
    model_config = ConfigDict(frozen=True)

    elements: Tuple[int, ...]
    rank: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _sorted(self) -> "Flat":
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError(f"flat elements must be ascending and distinct, got {self.elements}")
        return self

    @classmethod
    def of(cls, elements, rank: int) -> "Flat":
        return cls(elements=tuple(sorted(elements)), rank=rank)

    @property
    def as_set(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    def __le__(self, other: "Flat") -> bool:
        return self.as_set <= other.as_set

    def __lt__(self, other: "Flat") -> bool:
        return self.as_set < other.as_set


class FlatLattice(BaseModel):
    """
    All flats ordered by inclusion.

    Attributes:
        flats: sorted by (rank, elements); flats[0] is the bottom (all loops),
            flats[-1] the top (ground set)
        covers: index pairs (i, j) with flats[i] covered by flats[j]
        mobius_from_bottom: mu(bottom, flats[i]) aligned with flats
    """
    model_config = ConfigDict(frozen=True)

    flats: Tuple[Flat, ...]
    covers: Tuple[Tuple[int, int], ...]
    mobius_from_bottom: Tuple[int, ...]

    @model_validator(mode="after")
    def _aligned(self) -> "FlatLattice":
        if not self.flats:
            raise ValueError("a lattice of flats has at least one flat")
        if len(self.mobius_from_bottom) != len(self.flats):
            raise ValueError("mobius values must align with flats")
        return self

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return self.flats[-1]

    @property
    def rank(self) -> int:
        return self.top.rank

    def index_of(self, flat: Flat) -> int:
        return self._index()[flat.elements]

    def mobius_of(self, flat: Flat) -> int:
        return self.mobius_from_bottom[self.index_of(flat)]

    def of_rank(self, rank: int) -> Tuple[Flat, ...]:
        return tuple(f for f in self.flats if f.rank == rank)

    def hyperplanes(self) -> Tuple[Flat, ...]:
        return self.of_rank(self.rank - 1) if self.rank > 0 else ()

    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {f.elements: i for i, f in enumerate(self.flats)}

    def to_json(self) -> list:
        """Debug dump: list of {elements, rank, mobius}."""
        return [
            {"elements": list(f.elements), "rank": f.rank, "mobius": mu}
            for f, mu in zip(self.flats, self.mobius_from_bottom)
        ]
