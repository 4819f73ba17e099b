import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import networkx as nx

from utils.constants import STATUS_CERTIFIED
from utils.exceptions import CycleError, InvalidStability, QuiverError

DimVector = Tuple[int, ...]
LinearForm = Tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    """Acyclic quiver: vertex count plus arrow-multiplicity matrix (mult[i][j] arrows i -> j)"""
    n: int
    mult: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise QuiverError(f"Vertex count must be positive, got {self.n}")
        mult = tuple(tuple(int(x) for x in row) for row in self.mult)
        if len(mult) != self.n or any(len(row) != self.n for row in mult):
            raise QuiverError(f"Multiplicity matrix must be {self.n}x{self.n}")
        if any(x < 0 for row in mult for x in row):
            raise QuiverError("Arrow multiplicities must be non-negative")
        object.__setattr__(self, 'mult', mult)

        graph = self.support_graph()
        if not nx.is_directed_acyclic_graph(graph):
            raise CycleError(nx.find_cycle(graph))

    def support_graph(self) -> nx.DiGraph:
        """Directed graph with an edge i -> j whenever mult[i][j] > 0"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        for i, j, m in self.arrows():
            graph.add_edge(i, j, mult=m)
        return graph

    def arrows(self) -> Iterator[Tuple[int, int, int]]:
        """(source, target, multiplicity) for every non-zero entry, row-major"""
        for i, row in enumerate(self.mult):
            for j, m in enumerate(row):
                if m:
                    yield i, j, m

    @property
    def num_arrows(self) -> int:
        return sum(m for _, _, m in self.arrows())

    @classmethod
    def from_matrix(cls, rows) -> 'Quiver':
        """Square multiplicity matrix, rows[i][j] arrows i -> j"""
        rows = [list(row) for row in rows]
        if not rows:
            raise QuiverError("Multiplicity matrix cannot be empty")
        return cls(len(rows), tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class Stability:
    """Integer linear form theta together with the dimension vector d it vanishes on"""
    theta: LinearForm
    d: DimVector

    def __post_init__(self):
        theta = tuple(int(x) for x in self.theta)
        d = tuple(int(x) for x in self.d)
        if len(theta) != len(d):
            raise InvalidStability(f"Stability {list(theta)} and dimension vector {list(d)} differ in length")
        if sum(t * x for t, x in zip(theta, d)) != 0:
            raise InvalidStability(f"Stability {list(theta)} does not vanish on {list(d)}")
        object.__setattr__(self, 'theta', theta)
        object.__setattr__(self, 'd', d)

    def __call__(self, e) -> int:
        return sum(t * x for t, x in zip(self.theta, e))

    def scaled(self, k: int) -> 'Stability':
        return Stability(tuple(k * t for t in self.theta), self.d)


@dataclass(frozen=True)
class AmpleStabilityVerdict:
    """Outcome of the sufficient ample-stability criterion"""
    status: str
    scanned_count: int
    witness: Optional[DimVector] = None
    witness_theta: Optional[int] = None
    witness_pairing: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class SignVector:
    """Signs of theta(e) over all proper non-zero e <= d in lex order, run-length encoded"""
    d: DimVector
    runs: Tuple[Tuple[int, int], ...]

    def signs(self) -> Iterator[int]:
        for sign, length in self.runs:
            for _ in range(length):
                yield sign

    def items(self) -> Iterator[Tuple[DimVector, int]]:
        """(e, sign) pairs, e in lex order"""
        zero = tuple(0 for _ in self.d)
        vectors = (e for e in itertools.product(*(range(x + 1) for x in self.d))
                   if e != zero and e != self.d)
        return zip(vectors, self.signs())

    def __len__(self) -> int:
        return sum(length for _, length in self.runs)

    @property
    def zero_count(self) -> int:
        return sum(length for sign, length in self.runs if sign == 0)

    @property
    def has_zero(self) -> bool:
        return any(sign == 0 for sign, _ in self.runs)


@dataclass(frozen=True)
class FanoCertificate:
    """Outcome of Fano certification for one (Q, d)"""
    status: str
    dimension: int
    picard_rank: int
    index: int
    canonical_theta: Stability
    witness: Optional[DimVector] = None
    notes: Tuple[str, ...] = ()

    @property
    def certified(self) -> bool:
        return self.status == STATUS_CERTIFIED


@dataclass(frozen=True)
class ToricQuiverSpec:
    """Toric case d = (1,...,1): strictly upper-triangular multiplicities a[k][l], k < l"""
    n: int
    a: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.a)
        if self.n < 1 or len(a) != self.n or any(len(row) != self.n for row in a):
            raise QuiverError(f"Toric spec must be an {self.n}x{self.n} matrix")
        for k in range(self.n):
            for l in range(self.n):
                if a[k][l] < 0:
                    raise QuiverError("Arrow multiplicities must be non-negative")
                if l <= k and a[k][l]:
                    raise QuiverError(f"Toric spec must be strictly upper-triangular (a[{k}][{l}] = {a[k][l]})")
        object.__setattr__(self, 'a', a)

    @classmethod
    def from_flat(cls, n: int, values) -> 'ToricQuiverSpec':
        """Inverse of flat(): row-major entries above the diagonal"""
        values = list(values)
        a = [[0] * n for _ in range(n)]
        pos = 0
        for k in range(n):
            for l in range(k + 1, n):
                a[k][l] = values[pos]
                pos += 1
        return cls(n, tuple(tuple(row) for row in a))

    def flat(self) -> Tuple[int, ...]:
        return tuple(self.a[k][l] for k in range(self.n) for l in range(k + 1, self.n))

    @property
    def total_arrows(self) -> int:
        return sum(self.flat())

    def arrows(self) -> List[Tuple[int, int, int]]:
        return [(k, l, self.a[k][l]) for k in range(self.n)
                for l in range(k + 1, self.n) if self.a[k][l]]

    def to_quiver(self) -> Quiver:
        return Quiver(self.n, self.a)


@dataclass(frozen=True)
class ToricConditionReport:
    """Result of the toric Fano conditions scan; failing_k is 0-indexed"""
    ok: bool
    failing_k: Optional[Tuple[int, ...]] = None
    out_weight: Optional[int] = None
    in_weight: Optional[int] = None
    reason: str = ""


@dataclass(frozen=True)
class ToricInvariants:
    dim: int
    rank: int
    index: int


@dataclass(frozen=True)
class ToricCatalogEntry:
    spec: ToricQuiverSpec
    invariants: ToricInvariants
