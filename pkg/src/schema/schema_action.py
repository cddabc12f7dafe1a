"""
Torus Action Schema Module

Pydantic models for the weight matrix of a diagonalized torus action
T^r -> S^{2n-1}, its Smith decomposition, isotropy groups and the matrix
moves that preserve the quotient up to isometry.

Rows are circles of the torus, columns are the invariant circles of the
sphere. Entries are exact Python integers; booleans and floats are rejected.
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, StrictInt, model_validator

from src.enums.value_enums import MoveKind


class TorusAction(BaseModel):
    """
    r x n integer weight matrix Z = (z_ij).

    Attributes:
        matrix: rows of Z; r = len(matrix) may be 0 (trivial torus)
        n: number of invariant circles (columns), at least 1

    Examples:
        >>> TorusAction(matrix=((2, 3),), n=2).r
        1
    """
    model_config = ConfigDict(frozen=True)

    matrix: Tuple[Tuple[StrictInt, ...], ...] = Field(
        ...,
        description="Rows of the weight matrix"
    )
    n: int = Field(
        ...,
        ge=1,
        description="Number of columns (invariant circles)"
    )

    @model_validator(mode="after")
    def _rectangular(self) -> "TorusAction":
        for index, row in enumerate(self.matrix):
            if len(row) != self.n:
                raise ValueError(f"row {index} has {len(row)} entries, expected {self.n}")
        return self

    @classmethod
    def from_rows(cls, rows, n: Optional[int] = None) -> "TorusAction":
        """Build from any nested iterable; n defaults to the first row length."""
        rows = tuple(tuple(row) for row in rows)
        if n is None:
            n = len(rows[0]) if rows else 0
        return cls(matrix=rows, n=n)

    @property
    def r(self) -> int:
        """Torus rank (number of rows)."""
        return len(self.matrix)

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.n))

    def to_json(self) -> dict:
        return {"rows": [list(row) for row in self.matrix], "cols": self.n}

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.matrix)


class SmithDecomposition(BaseModel):
    """
    U * Z * V = diag(d_1, ..., d_k, 0, ...), U and V unimodular.

    Attributes:
        left: r x r matrix U
        diag: invariant factors, positive, each dividing the next
        right: n x n matrix V
    """
    model_config = ConfigDict(frozen=True)

    left: Tuple[Tuple[int, ...], ...]
    diag: Tuple[int, ...]
    right: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _divisibility_chain(self) -> "SmithDecomposition":
        for value in self.diag:
            if value <= 0:
                raise ValueError(f"invariant factors must be positive, got {self.diag}")
        for a, b in zip(self.diag, self.diag[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors {self.diag} break the divisibility chain")
        return self

    @property
    def rank(self) -> int:
        return len(self.diag)


class IsotropyGroup(BaseModel):
    """
    Closed subgroup T^k x Z_{c_1} x ... of the torus.

    Attributes:
        torus_rank: dimension k of the identity component
        finite_factors: cyclic orders >= 2, ascending; trivial factors omitted
    """
    model_config = ConfigDict(frozen=True)

    torus_rank: int = Field(0, ge=0)
    finite_factors: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _canonical(self) -> "IsotropyGroup":
        if any(c < 2 for c in self.finite_factors):
            raise ValueError(f"finite factors must be >= 2, got {self.finite_factors}")
        if list(self.finite_factors) != sorted(self.finite_factors):
            raise ValueError(f"finite factors must be ascending, got {self.finite_factors}")
        return self

    @classmethod
    def from_invariant_factors(cls, torus_rank: int, factors) -> "IsotropyGroup":
        return cls(torus_rank=torus_rank,
                   finite_factors=tuple(sorted(c for c in factors if c > 1)))

    @property
    def is_trivial(self) -> bool:
        return self.torus_rank == 0 and not self.finite_factors

    def __str__(self) -> str:
        parts = [f"T^{self.torus_rank}"] if self.torus_rank else []
        parts += [f"Z_{c}" for c in self.finite_factors]
        return " x ".join(parts) if parts else "trivial"

    def to_json(self) -> dict:
        return {"torus_rank": self.torus_rank, "finite_factors": list(self.finite_factors)}


class Move(BaseModel):
    """
    One matrix move.

    first/second are row or column indices depending on kind. For
    ADD_ROW_MULTIPLE, row `second` receives `multiplier` times row `first`.
    For DIVIDE_ROW, row `first` is divided by `multiplier`.
    """
    model_config = ConfigDict(frozen=True)

    kind: MoveKind
    first: int = Field(..., ge=0)
    second: Optional[int] = Field(None, ge=0)
    multiplier: int = 1

    def __str__(self) -> str:
        if self.kind is MoveKind.ADD_ROW_MULTIPLE:
            return f"{self.kind.value}({self.multiplier} x row {self.first} -> row {self.second})"
        if self.kind is MoveKind.DIVIDE_ROW:
            return f"{self.kind.value}(row {self.first} / {self.multiplier})"
        if self.second is None:
            return f"{self.kind.value}({self.first})"
        return f"{self.kind.value}({self.first}, {self.second})"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "first": self.first,
                "second": self.second, "multiplier": self.multiplier}
