"""
Wall-and-chamber structure on Stab(d).

Walls are the hyperplanes theta(e) = 0 for proper non-zero e <= d. Every e is kept (no
dedup of e's spanning the same hyperplane), so a chamber is exactly a locus of constant,
nowhere-zero sign vector.
"""
from typing import List, Optional, Sequence, Tuple

from modules.models import DimVector, Quiver, SignVector, Stability
from modules.quiver_core import evaluate
from modules.stability import ample_stability_criterion, is_coprime, retraction, subdim_vectors
from utils.constants import AMPLE, AMPLE_UNKNOWN
from utils.logger import logger


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_vector(stab: Stability, budget: Optional[int] = None) -> SignVector:
    """Sign of theta(e) for every proper non-zero e <= d, lex order, run-length encoded"""
    runs: List[Tuple[int, int]] = []
    for e in subdim_vectors(stab.d, budget):
        sign = _sign(evaluate(stab.theta, e))
        if runs and runs[-1][0] == sign:
            runs[-1] = (sign, runs[-1][1] + 1)
        else:
            runs.append((sign, 1))
    return SignVector(stab.d, tuple(runs))


def walls_through(stab: Stability, budget: Optional[int] = None) -> List[DimVector]:
    """Every e whose wall contains theta"""
    return [e for e in subdim_vectors(stab.d, budget) if evaluate(stab.theta, e) == 0]


def in_chamber_interior(stab: Stability, budget: Optional[int] = None) -> bool:
    """True iff theta lies on no wall; agrees with is_coprime"""
    return not sign_vector(stab, budget).has_zero


def same_chamber(first: Stability, second: Stability, budget: Optional[int] = None) -> bool:
    """Both sign vectors are nowhere zero and identical"""
    if first.d != second.d:
        raise ValueError(f"Stabilities belong to different dimension vectors "
                         f"{list(first.d)} and {list(second.d)}")
    for e in subdim_vectors(first.d, budget):
        s1 = _sign(evaluate(first.theta, e))
        s2 = _sign(evaluate(second.theta, e))
        if s1 == 0 or s1 != s2:
            return False
    return True


def ample_check(Q: Quiver, base: Stability, candidate: Sequence[int], a: Sequence[int],
                budget: Optional[int] = None) -> str:
    """
    Ample if r(candidate) lies in the interior of the chamber of base, Unknown otherwise.
    base must be coprime and certified by the ample-stability criterion.
    """
    if not is_coprime(base, budget):
        raise ValueError(f"Base stability {list(base.theta)} is not coprime for d = {list(base.d)}")
    verdict = ample_stability_criterion(Q, base, budget)
    if not verdict.certified:
        raise ValueError(f"d = {list(base.d)} is not certified amply stable for {list(base.theta)} "
                         f"(witness {list(verdict.witness)})")

    projected = retraction(base.d, a, candidate)
    if same_chamber(base, projected, budget):
        return AMPLE

    logger.debug(f"r(candidate) = {list(projected.theta)} is outside the chamber of {list(base.theta)}")
    return AMPLE_UNKNOWN


def chamber_report(stab: Stability, other: Optional[Stability] = None,
                   budget: Optional[int] = None) -> dict:
    """Membership data for one stability, and the same-chamber test for a second one"""
    sv = sign_vector(stab, budget)
    report = {
        'd': list(stab.d),
        'theta': list(stab.theta),
        'in_chamber_interior': not sv.has_zero,
        'walls_hit': sv.zero_count,
        'sign_vector': sv,
    }
    if other is not None:
        report['theta2'] = list(other.theta)
        report['theta2_in_chamber_interior'] = in_chamber_interior(other, budget)
        report['same_chamber'] = same_chamber(stab, other, budget)
    return report
