from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.enums.value_enums import SubCommand, OutputFormat, PropertyStatus


class CliRequest(BaseModel):
    """Schema for one CLI invocation; exactly one matrix source is set."""
    model_config = ConfigDict(frozen=True)

    subcommand: SubCommand
    matrix_text: Optional[str] = Field(
        None,
        description="Inline matrix passed with --matrix"
    )
    path: Optional[str] = Field(
        None,
        description="Matrix file given as positional argument"
    )
    use_stdin: bool = Field(
        False,
        description="Read the matrix from standard input"
    )
    format: OutputFormat = OutputFormat.TEXT
    auto_reduce: bool = False
    force: bool = Field(
        False,
        description="Lift the subset-enumeration limit"
    )
    limit: Optional[int] = Field(
        None,
        ge=1,
        description="Override ORACLE_SUBSET_LIMIT for this run"
    )

    @model_validator(mode="after")
    def _one_source(self) -> "CliRequest":
        sources = [self.matrix_text is not None, self.path is not None, self.use_stdin]
        if sum(sources) != 1:
            raise ValueError("exactly one matrix source is required (path, --matrix or stdin)")
        return self


class PropertyResult(BaseModel):
    """Outcome of one verify check."""
    model_config = ConfigDict(frozen=True)

    name: str
    status: PropertyStatus
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


class VerificationReport(BaseModel):
    """All verify checks for one input."""
    model_config = ConfigDict(frozen=True)

    results: Tuple[PropertyResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.status is not PropertyStatus.FAIL for r in self.results)

    def failures(self) -> Tuple[PropertyResult, ...]:
        return tuple(r for r in self.results if r.status is PropertyStatus.FAIL)

    def to_json(self) -> dict:
        return {"passed": self.passed, "properties": [r.to_json() for r in self.results]}
