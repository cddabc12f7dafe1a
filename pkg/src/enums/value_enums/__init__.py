from .quotient_values import MoveKind, Verdict, ManifoldStatus, FactorRole
from .cli_values import SubCommand, OutputFormat, PropertyStatus, ExitCode
