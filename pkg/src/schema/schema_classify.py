"""
Classification Schema Module

The verdict on a quotient space and the join factors it is built from.
Classification is recursive: a JoinOfFactors verdict carries one
Classification per factor.
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.enums.value_enums import Verdict, ManifoldStatus, FactorRole
from src.schema.schema_action import TorusAction
from src.schema.schema_topology import QuotientSummary
from src.utils import UnivariatePolynomial


class JoinFactor(BaseModel):
    """
    One factor X_i of X = X_1 * ... * X_l.

    Attributes:
        columns: original column labels covered by the factor
        action: the factor's own effective action (0 x 1 for a loop circle)
        role: loop circle or matroid component block
    """
    model_config = ConfigDict(frozen=True)

    columns: Tuple[int, ...]
    action: TorusAction
    role: FactorRole

    @model_validator(mode="after")
    def _width(self) -> "JoinFactor":
        if len(self.columns) != self.action.n:
            raise ValueError(f"factor over columns {self.columns} has {self.action.n} matrix columns")
        return self

    def to_json(self) -> dict:
        return {"columns": list(self.columns), "role": self.role.value, "action": self.action.to_json()}


class Classification(BaseModel):
    """
    Verdict on a quotient.

    Attributes:
        verdict: Point, Circle, Cone, Sphere, ComplexProjective,
            JoinOfFactors or NotManifold
        dim: real dimension of the quotient
        index: sphere dimension, or complex dimension for ComplexProjective
        manifold: what can be claimed about the manifold property
        factors: classifications of the join factors (JoinOfFactors only)
        homology: reduced homology of the quotient
        evidence: the facts used, in order
        witness: offending weight for rank-one NotManifold verdicts
        columns: original column labels, set on join factors
    """
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    dim: int = Field(..., ge=0)
    index: Optional[int] = None
    manifold: ManifoldStatus
    factors: Tuple["Classification", ...] = ()
    homology: Optional[QuotientSummary] = None
    evidence: Tuple[str, ...] = ()
    witness: Optional[int] = None
    columns: Optional[Tuple[int, ...]] = None

    @model_validator(mode="after")
    def _consistent(self) -> "Classification":
        poincare = self.homology.poincare if self.homology is not None else None
        if self.verdict is Verdict.SPHERE:
            if self.index != self.dim:
                raise ValueError(f"Sphere index {self.index} differs from dimension {self.dim}")
            if poincare is not None and poincare != UnivariatePolynomial.monomial(self.dim):
                raise ValueError(f"Sphere({self.dim}) with reduced homology {poincare}")
        if self.verdict is Verdict.CONE and poincare is not None and not poincare.is_zero():
            raise ValueError(f"Cone with nonzero reduced homology {poincare}")
        if self.verdict is Verdict.COMPLEX_PROJECTIVE and (self.index is None or 2 * self.index != self.dim):
            raise ValueError(f"ComplexProjective({self.index}) of real dimension {self.dim}")
        if self.factors:
            expected = sum(f.dim for f in self.factors) + len(self.factors) - 1
            if self.dim != expected:
                raise ValueError(f"join of factors has dimension {expected}, got {self.dim}")
        return self

    @property
    def is_sphere(self) -> bool:
        return self.verdict is Verdict.SPHERE

    @property
    def label(self) -> str:
        if self.verdict in (Verdict.SPHERE, Verdict.COMPLEX_PROJECTIVE):
            return f"{self.verdict.value}({self.index})"
        if self.verdict is Verdict.JOIN_OF_FACTORS:
            return " * ".join(f.label for f in self.factors)
        return self.verdict.value

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "label": self.label,
            "dim": self.dim,
            "index": self.index,
            "manifold": self.manifold.value,
            "factors": [f.to_json() for f in self.factors],
            "homology": self.homology.to_json() if self.homology is not None else None,
            "evidence": list(self.evidence),
            "witness": self.witness,
            "columns": list(self.columns) if self.columns is not None else None,
        }


Classification.model_rebuild()
