"""
Topology Schema Module

Pydantic models describing the orbit space X = S^{2n-1}/T^r and its rational
singular set: reduced Poincare polynomials, the wedge decomposition of the
singular set over the lattice of flats, and the hyperplane strata.

Reduced Poincare polynomials are UnivariatePolynomial values. `None` stands
for the empty space, whose reduced polynomial would be t^{-1}.
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schema.schema_action import IsotropyGroup
from src.schema.schema_matroid import Flat
from src.utils import UnivariatePolynomial


def _terms(p: Optional[UnivariatePolynomial]):
    return None if p is None else p.to_json()["terms"]


class QuotientSummary(BaseModel):
    """
    Homology of the quotient X.

    Attributes:
        dimension: 2n - 1 - r
        poincare: reduced Poincare polynomial t^{r-1} T(M_X; 0, t^2)
        betti: (degree, rank of reduced H_degree) for every nonzero degree
        simply_connected: True iff n >= 2, or n = 1 and r = 1
        torsion_free: the integral homology of X never has torsion
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dimension: int = Field(..., ge=0)
    poincare: UnivariatePolynomial
    betti: Tuple[Tuple[int, int], ...]
    simply_connected: bool
    torsion_free: bool = True

    @model_validator(mode="after")
    def _betti_matches(self) -> "QuotientSummary":
        if tuple(self.poincare.items()) != tuple(self.betti):
            raise ValueError(f"betti numbers {self.betti} disagree with {self.poincare}")
        if not self.poincare.has_nonnegative_coefficients():
            raise ValueError(f"reduced Poincare polynomial {self.poincare} has a negative coefficient")
        return self

    @classmethod
    def of(cls, dimension: int, poincare: UnivariatePolynomial, simply_connected: bool) -> "QuotientSummary":
        return cls(dimension=dimension,
                   poincare=poincare,
                   betti=tuple(poincare.items()),
                   simply_connected=simply_connected)

    @property
    def is_acyclic(self) -> bool:
        return self.poincare.is_zero()

    def to_json(self) -> dict:
        return {
            "dim": self.dimension,
            "poincare": _terms(self.poincare),
            "poincare_text": str(self.poincare),
            "betti": [{"degree": d, "rank": str(b)} for d, b in self.betti],
            "simply_connected": self.simply_connected,
            "torsion_free": self.torsion_free,
        }


class WedgeSummand(BaseModel):
    """
    One summand X_F * (wedge of `multiplicity` spheres S^{sphere_dim}) of the
    singular set, for a proper flat F.

    sphere_dim = -1 is the empty sphere; flat_quotient_poincare is None when
    X_F is empty (F is the bottom flat and there are no loops). `contribution`
    is the reduced polynomial of the join, None when the join is empty.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    flat: Flat
    multiplicity: int = Field(..., ge=0)
    sphere_dim: int = Field(..., ge=-1)
    flat_quotient_poincare: Optional[UnivariatePolynomial] = None
    contribution: Optional[UnivariatePolynomial] = None

    def to_json(self) -> dict:
        return {
            "flat": list(self.flat.elements),
            "flat_rank": self.flat.rank,
            "multiplicity": self.multiplicity,
            "sphere_dim": self.sphere_dim,
            "flat_quotient_poincare": _terms(self.flat_quotient_poincare),
            "contribution": _terms(self.contribution),
        }


class SingularStratum(BaseModel):
    """Image of S^H in X for a hyperplane H, of dimension 2|H| - r."""
    model_config = ConfigDict(frozen=True)

    hyperplane: Flat
    dimension: int = Field(..., ge=0)
    isotropy: IsotropyGroup

    def to_json(self) -> dict:
        return {"hyperplane": list(self.hyperplane.elements),
                "dim": self.dimension,
                "isotropy": str(self.isotropy)}


class SingularSetSummary(BaseModel):
    """
    Everything known about the rational singular set.

    Attributes:
        strata: one entry per nonempty hyperplane
        wedge: one summand per proper flat
        poincare: reduced Poincare polynomial (zero when the set is empty)
        empty: the singular set has no points
        formula_applicable: the closed formula t^{r-2}[T(1,t^2) - T(0,t^2)]
            is a genuine polynomial for this rank
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    strata: Tuple[SingularStratum, ...]
    wedge: Tuple[WedgeSummand, ...]
    poincare: UnivariatePolynomial
    empty: bool
    formula_applicable: bool

    @model_validator(mode="after")
    def _empty_is_acyclic(self) -> "SingularSetSummary":
        if self.empty and not self.poincare.is_zero():
            raise ValueError("an empty singular set has zero reduced Poincare polynomial")
        return self

    def to_json(self) -> dict:
        return {
            "strata": [s.to_json() for s in self.strata],
            "wedge": [w.to_json() for w in self.wedge],
            "poincare": _terms(self.poincare),
            "poincare_text": str(self.poincare),
            "empty": self.empty,
            "formula_applicable": self.formula_applicable,
        }
