"""
Stability conditions on a dimension vector d.

Covers the canonical stability {d,_}, the sub-dimension-vector scan, coprimality, the
sufficient ample-stability criterion, the integer section a with a(d) = 1, the retraction
r(theta) = theta - theta(d) a onto Stab(d), and the anticanonical class obtained from the
first-Chern-class computation on the tangent sequence.
"""
import itertools
from math import prod
from typing import Iterator, List, Optional, Sequence, Tuple

from config import DEFAULT_BUDGET
from modules.models import AmpleStabilityVerdict, DimVector, LinearForm, Quiver, Stability
from modules.quiver_core import (antisym_form, basis_vector, checked, euler_form, evaluate,
                                 gcd_form, vector_sub, _require_length)
from utils.constants import STATUS_CERTIFIED, STATUS_INCONCLUSIVE
from utils.exceptions import BudgetExceeded, InvalidSection, NotIndivisible
from utils.logger import logger


# ==================== CANONICAL STABILITY ====================

def canonical_stability(Q: Quiver, d: Sequence[int]) -> Stability:
    """theta_i = {d, i}; vanishes on d by antisymmetry"""
    _require_length(Q, d)
    theta = tuple(antisym_form(Q, d, basis_vector(Q.n, i)) for i in range(Q.n))
    return Stability(theta, tuple(d))


# ==================== SUB-DIMENSION VECTORS ====================

def subdim_count(d: Sequence[int]) -> int:
    """Number of e with 0 < e < d componentwise"""
    return max(prod(x + 1 for x in d) - 2, 0)


def subdim_vectors(d: Sequence[int], budget: Optional[int] = None) -> Iterator[DimVector]:
    """Every e with 0 <= e <= d, e != 0, e != d, exactly once, in lexicographic order"""
    count = subdim_count(d)
    budget = DEFAULT_BUDGET if budget is None else budget
    if count > budget:
        logger.warning(f"Refusing to enumerate {count} sub-dimension vectors of {list(d)} (budget {budget})")
        raise BudgetExceeded(count, budget)
    return _subdim_iter(tuple(d))


def _subdim_iter(d: DimVector) -> Iterator[DimVector]:
    if not any(d):
        return
    zero = tuple(0 for _ in d)
    for e in itertools.product(*(range(x + 1) for x in d)):
        if e != zero and e != d:
            yield e


# ==================== COPRIMALITY ====================

def coprime_witness(stab: Stability, budget: Optional[int] = None) -> Optional[DimVector]:
    """Lex-first proper non-zero e <= d with theta(e) = 0, or None"""
    for e in subdim_vectors(stab.d, budget):
        if evaluate(stab.theta, e) == 0:
            return e
    return None


def is_coprime(stab: Stability, budget: Optional[int] = None) -> bool:
    return coprime_witness(stab, budget) is None


# ==================== AMPLE STABILITY ====================

def pairing_defect(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<e, d - e>"""
    return euler_form(Q, e, vector_sub(d, e))


def ample_stability_criterion(Q: Quiver, stab: Stability,
                              budget: Optional[int] = None) -> AmpleStabilityVerdict:
    """
    Sufficient criterion for the unstable locus to have codimension >= 2:
    <e, d-e> <= -2 for every proper non-zero e <= d with theta(e) >= 0.

    Stops at the first failing e (lex order). Inconclusive is not a disproof.
    """
    _require_length(Q, stab.d)
    scanned = 0
    for e in subdim_vectors(stab.d, budget):
        scanned += 1
        value = evaluate(stab.theta, e)
        if value < 0:
            continue
        pairing = pairing_defect(Q, stab.d, e)
        if pairing > -2:
            logger.debug(f"Ample-stability criterion fails at e={list(e)}: theta(e)={value}, <e,d-e>={pairing}")
            return AmpleStabilityVerdict(
                status=STATUS_INCONCLUSIVE,
                scanned_count=scanned,
                witness=e,
                witness_theta=value,
                witness_pairing=pairing,
            )

    return AmpleStabilityVerdict(status=STATUS_CERTIFIED, scanned_count=scanned)


# ==================== SECTION a ====================

def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0"""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1

    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t

    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def section_a(d: Sequence[int]) -> LinearForm:
    """
    Integer linear form a with a(d) = 1.

    Folds the extended Euclidean algorithm over the entries in increasing vertex order,
    then walks backwards from the last vertex, reducing each coefficient to its balanced
    residue modulo d_j/g, where j is the nearest earlier vertex with d_j != 0 and
    g = gcd(d_i, d_j). The partner coefficient absorbs the change, so a(d) stays 1.
    """
    d = tuple(d)
    g_total = gcd_form(d)
    if g_total != 1:
        raise NotIndivisible(d, g_total)

    a = [0] * len(d)
    g = 0
    for i, x in enumerate(d):
        g, s, t = _ext_gcd(g, x)
        a = [checked(s * c, "section coefficient") for c in a]
        a[i] = t

    for i in range(len(d) - 1, 0, -1):
        if d[i] == 0:
            continue
        partners = [j for j in range(i - 1, -1, -1) if d[j] != 0]
        if not partners:
            continue
        j = partners[0]
        g = gcd_form((d[i], d[j]))
        step_i, step_j = d[j] // g, d[i] // g
        residue = a[i] % step_i
        if residue > step_i // 2:
            residue -= step_i
        t = (residue - a[i]) // step_i
        a[i] += t * step_i
        a[j] = checked(a[j] - t * step_j, "section coefficient")

    section = tuple(a)
    if evaluate(section, d) != 1:
        raise AssertionError(f"section {list(section)} does not evaluate to 1 on {list(d)}")
    return section


def kernel_moves(d: Sequence[int]) -> List[LinearForm]:
    """Integer forms v with v(d) = 0; adding them to a section gives another section"""
    n = len(d)
    moves = []
    for i in range(n):
        if d[i] == 0:
            moves.append(basis_vector(n, i))
    for i, j in itertools.combinations(range(n), 2):
        if d[i] and d[j]:
            g = gcd_form((d[i], d[j]))
            v = [0] * n
            v[i] = d[j] // g
            v[j] = -(d[i] // g)
            moves.append(tuple(v))
    return moves


def section_family(d: Sequence[int], count: int) -> List[LinearForm]:
    """
    `count` distinct sections, starting with section_a(d) and then stepping
    +v, -v, +2v, -2v, ... along each kernel move in turn.
    Returns fewer when d admits fewer (a single vertex has exactly one).
    """
    base = section_a(d)
    sections = [base]
    moves = kernel_moves(d)
    if not moves:
        return sections

    k = 1
    while len(sections) < count:
        for v in moves:
            for sign in (1, -1):
                if len(sections) >= count:
                    break
                sections.append(tuple(b + sign * k * x for b, x in zip(base, v)))
        k += 1
    return sections


def _require_section(d: Sequence[int], a: Sequence[int]):
    if len(a) != len(d) or evaluate(a, d) != 1:
        raise InvalidSection(f"Section {list(a)} does not satisfy a(d) = 1 for d = {list(d)}")


# ==================== RETRACTION AND CLASSES ====================

def retraction(d: Sequence[int], a: Sequence[int], theta: Sequence[int]) -> Stability:
    """r(theta) = theta - theta(d) * a; a projection onto Stab(d)"""
    _require_section(d, a)
    value = evaluate(theta, d)
    result = tuple(checked(t - checked(value * x, "product"), "retraction") for t, x in zip(theta, a))
    return Stability(result, tuple(d))


def det_tautological_class(Q: Quiver, d: Sequence[int], a: Sequence[int], i: int) -> Stability:
    """Class of det(V_i) as the linear form -r(i); evaluates to -e_i + d_i a(e) on e"""
    _require_length(Q, d, a)
    r = retraction(d, a, basis_vector(Q.n, i))
    return Stability(tuple(-x for x in r.theta), r.d)


def anticanonical_class(Q: Quiver, d: Sequence[int], a: Sequence[int]) -> Stability:
    """
    First Chern class of the tangent bundle.

    The vertex terms V_i* (x) V_i contribute -d_i c(V_i) + d_i c(V_i) = 0, so only the
    arrow terms V_i* (x) V_j remain: each arrow i -> j adds -d_j c(V_i) + d_i c(V_j),
    with c(V_i) the class of det(V_i).
    """
    _require_length(Q, d, a)
    _require_section(d, a)
    classes = [det_tautological_class(Q, d, a, i).theta for i in range(Q.n)]

    total = [0] * Q.n
    for i, j, m in Q.arrows():
        for k in range(Q.n):
            contribution = -d[j] * classes[i][k] + d[i] * classes[j][k]
            total[k] = checked(total[k] + checked(m * contribution, "product"), "anticanonical class")

    return Stability(tuple(total), tuple(d))
