from enum import Enum


class MoveKind(str, Enum):
    """Matrix moves that leave the quotient space unchanged up to isometry."""
    SWAP_ROWS = "swap_rows"
    SWAP_COLS = "swap_cols"
    NEGATE_ROW = "negate_row"
    NEGATE_COL = "negate_col"
    ADD_ROW_MULTIPLE = "add_row_multiple"
    DIVIDE_ROW = "divide_row"  # only legal when the divisor divides the whole row

    @classmethod
    def elementary_moves(cls):
        """The five moves accepted by canonical_moves."""
        return {cls.SWAP_ROWS, cls.SWAP_COLS, cls.NEGATE_ROW, cls.NEGATE_COL, cls.ADD_ROW_MULTIPLE}

    @classmethod
    def values(cls):
        """helper method that returns all valid values of an Enum as a set."""
        return {member.value for member in cls}


class Verdict(str, Enum):
    """Symbolic verdict on the quotient space."""
    POINT = "Point"
    CIRCLE = "Circle"
    CONE = "Cone"
    SPHERE = "Sphere"
    COMPLEX_PROJECTIVE = "ComplexProjective"
    JOIN_OF_FACTORS = "JoinOfFactors"
    NOT_MANIFOLD = "NotManifold"


class ManifoldStatus(str, Enum):
    """What the classification can claim about the manifold property."""
    MANIFOLD = "manifold"
    NOT_MANIFOLD = "not a manifold"
    CONTRACTIBLE = "contractible; manifold-with-boundary status out of scope"
    UNDETERMINED = "manifold status: not determined"


class FactorRole(str, Enum):
    """Role of a join factor produced by join_decomposition."""
    LOOP_CIRCLE = "loop_circle"
    BLOCK = "block"
