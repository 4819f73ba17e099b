"""
Quivers, dimension vectors, Euler forms and the elementary quantities derived from them.

Every operation is a pure function on immutable data. Arithmetic is exact; any value that
leaves the signed 64-bit range raises OverflowError instead of being silently widened.
"""
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from config import INT_LIMIT
from modules.models import DimVector, Quiver
from utils.exceptions import QuiverError
from utils.logger import logger


def checked(value: int, what: str = "value") -> int:
    """Enforce the integer policy on a single intermediate"""
    if value > INT_LIMIT or value < -INT_LIMIT - 1:
        raise OverflowError(f"{what} {value} exceeds the signed 64-bit range")
    return value


def _require_length(Q: Quiver, *vectors: Sequence[int]):
    for vec in vectors:
        if len(vec) != Q.n:
            raise QuiverError(f"Vector {list(vec)} has length {len(vec)}, quiver has {Q.n} vertices")


def make_quiver(n: int, arrows: Iterable[Tuple[int, int, int]]) -> Quiver:
    """
    Build a quiver from (source, target, multiplicity) triples.
    Parallel entries accumulate; acyclicity is checked by the Quiver constructor.
    """
    if n < 1:
        raise QuiverError(f"Vertex count must be positive, got {n}")

    mult = [[0] * n for _ in range(n)]
    for src, dst, m in arrows:
        if not (0 <= src < n and 0 <= dst < n):
            raise IndexError(f"Arrow {src}->{dst} out of range for {n} vertices")
        if m < 0:
            raise QuiverError(f"Arrow {src}->{dst} has negative multiplicity {m}")
        mult[src][dst] = checked(mult[src][dst] + m, "multiplicity")

    quiver = Quiver(n, tuple(tuple(row) for row in mult))
    logger.debug(f"Built {describe(quiver)}")
    return quiver


def arrow_list(Q: Quiver) -> List[Tuple[int, int, int]]:
    """Inverse of make_quiver"""
    return list(Q.arrows())


def support_graph(Q: Quiver) -> nx.DiGraph:
    return Q.support_graph()


def topological_order(Q: Quiver) -> List[int]:
    """Kahn's algorithm, smallest available vertex first"""
    return list(nx.lexicographical_topological_sort(Q.support_graph()))


def basis_vector(n: int, i: int) -> DimVector:
    if not 0 <= i < n:
        raise IndexError(f"Vertex {i} out of range for {n} vertices")
    return tuple(1 if k == i else 0 for k in range(n))


def evaluate(theta: Sequence[int], e: Sequence[int]) -> int:
    """theta(e) for a linear form theta"""
    if len(theta) != len(e):
        raise QuiverError(f"Linear form {list(theta)} and vector {list(e)} differ in length")
    total = 0
    for t, x in zip(theta, e):
        total = checked(total + checked(t * x, "product"), "linear form value")
    return total


def euler_form(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d,e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j"""
    _require_length(Q, d, e)
    total = 0
    for i in range(Q.n):
        total = checked(total + checked(d[i] * e[i], "product"), "Euler form")
    for i, j, m in Q.arrows():
        term = checked(checked(m * d[i], "product") * e[j], "product")
        total = checked(total - term, "Euler form")
    return total


def euler_form_by_arrows(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """Same form, one parallel arrow at a time (independent oracle)"""
    _require_length(Q, d, e)
    total = sum(d[i] * e[i] for i in range(Q.n))
    for i, j, m in Q.arrows():
        for _ in range(m):
            total -= d[i] * e[j]
    return checked(total, "Euler form")


def antisym_form(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """{d,e} = <d,e> - <e,d>"""
    return checked(euler_form(Q, d, e) - euler_form(Q, e, d), "antisymmetrized form")


def moduli_dimension(Q: Quiver, d: Sequence[int]) -> int:
    """1 - <d,d>; may be <= 0, interpretation is left to the caller"""
    return checked(1 - euler_form(Q, d, d), "dimension")


def gcd_form(theta: Iterable[int]) -> int:
    """gcd of the entries; 0 for an empty or all-zero input"""
    return reduce(gcd, (abs(x) for x in theta), 0)


def is_indivisible(d: Iterable[int]) -> bool:
    return gcd_form(d) == 1


def vector_sub(d: Sequence[int], e: Sequence[int]) -> DimVector:
    return tuple(x - y for x, y in zip(d, e))


def vector_add(d: Sequence[int], e: Sequence[int]) -> DimVector:
    return tuple(x + y for x, y in zip(d, e))


def describe(Q: Quiver) -> str:
    """One-line summary used in log messages"""
    arrows = ", ".join(f"{i}->{j}x{m}" for i, j, m in Q.arrows()) or "no arrows"
    return f"quiver({Q.n} vertices: {arrows})"

