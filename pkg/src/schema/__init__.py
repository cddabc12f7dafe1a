

from .schema_action import TorusAction, SmithDecomposition, IsotropyGroup, Move
from .schema_matroid import Flat, FlatLattice
from .schema_topology import QuotientSummary, WedgeSummand, SingularStratum, SingularSetSummary
from .schema_classify import JoinFactor, Classification
from .schema_cli import CliRequest, PropertyResult, VerificationReport
