"""Exception hierarchy shared by every module of the package."""


class YBMeshError(Exception):
    """Base class for all errors raised by ybmesh."""


class InvalidInput(YBMeshError, ValueError):
    """Malformed tables, files or arguments."""


class RowNotBijective(InvalidInput):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is not a bijection")


class DegreeMismatch(InvalidInput):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"permutation degree {got} does not match carrier size {expected}")


class AxiomViolation(InvalidInput):
    """A birack axiom fails; ``witness`` is the offending tuple."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"axiom {axiom} fails at {self.witness}")


class NotRightCyclic(InvalidInput):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"left quasigroup is not right cyclic (witness {witness})")


class NotNonDegenerate(InvalidInput):
    def __init__(self):
        super().__init__("left quasigroup is degenerate: x -> x\\x is not a bijection")


class IsotopeNotRightCyclic(NotRightCyclic):
    pass


class NotTwoPermutational(InvalidInput):
    def __init__(self):
        super().__init__("birack is not 2-permutational")


class NotAutomorphism(InvalidInput):
    def __init__(self):
        super().__init__("permutation is not an automorphism of the left quasigroup")


class InvalidMesh(InvalidInput):
    pass


class GeneratorsDoNotGenerate(InvalidMesh):
    pass


class WorkLimitExceeded(YBMeshError):
    def __init__(self, needed, limit):
        self.needed = needed
        self.limit = limit
        super().__init__(f"work estimate {needed} exceeds limit {limit}")
