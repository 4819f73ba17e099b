class QuiverError(ValueError):
    """Base class for invalid quiver data"""


class CycleError(QuiverError):
    """The support digraph of a quiver has a directed cycle"""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        path = " -> ".join(str(src) for src, _ in self.cycle)
        super().__init__(f"Quiver is not acyclic: cycle {path} -> {self.cycle[0][0]}")


class NotIndivisible(QuiverError):
    """gcd of the dimension vector is not 1"""

    def __init__(self, d, g):
        self.d = tuple(d)
        self.gcd = g
        super().__init__(f"Dimension vector {list(self.d)} is not indivisible (gcd {g})")


class InvalidStability(QuiverError):
    """A linear form that does not vanish on its dimension vector"""


class InvalidSection(QuiverError):
    """A linear form a with a(d) != 1"""


class QuiverFormatError(QuiverError):
    """Malformed quiver JSON or command-line vector"""


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more items than the budget allows"""

    def __init__(self, count, budget, what="sub-dimension vectors"):
        self.count = count
        self.budget = budget
        super().__init__(f"Enumeration of {count} {what} exceeds budget {budget}; "
                         f"raise --budget or QFL_BUDGET to proceed")
