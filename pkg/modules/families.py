"""
Example families with closed-form predictors: subspace quivers S_m, generalized Kronecker
quivers K_m and thickened subspace quivers S_m^(k).

Predictors are pure arithmetic and never call the enumerative machinery; the sweeps at the
bottom compare them against live certificates.
"""
from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

from modules.fano import fano_certifier
from modules.models import DimVector, FanoCertificate, Quiver
from modules.quiver_core import make_quiver
from utils.constants import NOTE_PSEUDO_INDEX, STATUS_CERTIFIED, STATUS_NOT_COPRIME
from utils.logger import logger


# ==================== SUBSPACE QUIVERS ====================

def subspace_quiver(m: int) -> Quiver:
    """Sources i_1..i_m (vertices 0..m-1), sink j (vertex m), one arrow i_k -> j each"""
    return thickened_quiver(m, 1)


def subspace_dim(m: int, d: int) -> DimVector:
    """sum_k i_k + d j"""
    if m < 1 or d < 1:
        raise ValueError(f"Need m >= 1 and d >= 1, got m={m}, d={d}")
    return tuple([1] * m + [d])


def subspace_predict(m: int, d: int) -> dict:
    """Moduli of m points in P^(d-1): dimension (d-1)(m-d-1), Picard rank m"""
    if m < 1 or d < 1:
        raise ValueError(f"Need m >= 1 and d >= 1, got m={m}, d={d}")
    theta = [d] * m + [-m]
    return {
        'theta': theta,
        'dim': (d - 1) * (m - d - 1),
        'rank': m,
        'index': gcd(d, m),
        'coprime_iff': gcd(m, d) == 1,
        'nonempty_iff': m - 1 > d,
        'side_conditions': gcd(m, d) == 1 and 2 <= d <= m - 2,
    }


def subspace_pairing(k_size: int, e_j: int, d: int) -> int:
    """<e, d-e> on S_m for e = 1_K + e_j j, |K| = k_size"""
    return (e_j - k_size) * (d - e_j)


# ==================== KRONECKER QUIVERS ====================

def kronecker_quiver(m: int) -> Quiver:
    """Vertices i = 0, j = 1 and m arrows i -> j"""
    if m < 1:
        raise ValueError(f"Kronecker quiver needs m >= 1, got {m}")
    return make_quiver(2, [(0, 1, m)])


def kronecker_in_reduced_range(m: int, d: int, e: int) -> bool:
    """Coprime d, e >= 1 with min <= max <= m * min / 2 (the range the dimension bound covers)"""
    lo, hi = min(d, e), max(d, e)
    return m >= 3 and lo >= 1 and gcd(d, e) == 1 and 2 * hi <= m * lo


def kronecker_predict(m: int, d: int, e: int) -> dict:
    """Dimension mde - d^2 - e^2 + 1, Picard rank one, index m for coprime (d, e)"""
    if m < 1 or d < 0 or e < 0:
        raise ValueError(f"Need m >= 1 and d, e >= 0, got m={m}, d={d}, e={e}")
    return {
        'theta': [m * e, -m * d],
        'dim': m * d * e - d * d - e * e + 1,
        'rank': 1,
        'index': m * gcd(d, e),
        'degenerate': m <= 2,
        'side_conditions': kronecker_in_reduced_range(m, d, e),
    }


def kronecker_min_dim_check(m: int, bound: int) -> dict:
    """
    mde - d^2 - e^2 + 1 >= m - 1 over coprime 1 <= d <= e <= floor(md/2), d, e <= bound,
    with equality exactly at (1, 1).
    """
    if m < 3:
        raise ValueError(f"Kronecker dimension bound needs m >= 3, got {m}")

    checked_pairs = 0
    equality_pairs = []
    counterexamples = []
    for d in range(1, bound + 1):
        for e in range(d, min(bound, (m * d) // 2) + 1):
            if gcd(d, e) != 1:
                continue
            checked_pairs += 1
            dim = kronecker_predict(m, d, e)['dim']
            if dim == m - 1:
                equality_pairs.append([d, e])
            if dim < m - 1 or (dim == m - 1) != ((d, e) == (1, 1)):
                counterexamples.append({'d': d, 'e': e, 'dim': dim})

    report = {
        'check': 'kronecker-min-dim',
        'm': m,
        'bound': bound,
        'pairs_checked': checked_pairs,
        'equality_pairs': equality_pairs,
        'counterexamples': counterexamples,
        'passed': not counterexamples,
    }
    if counterexamples:
        logger.warning(f"Kronecker dimension bound fails for m={m}: {counterexamples}")
    return report


# ==================== THICKENED SUBSPACE QUIVERS ====================

def thickened_quiver(m: int, k: int) -> Quiver:
    """S_m with every arrow i_l -> j replaced by k parallel arrows"""
    if m < 1 or k < 1:
        raise ValueError(f"Need m >= 1 and k >= 1, got m={m}, k={k}")
    return make_quiver(m + 1, [(l, m, k) for l in range(m)])


def thickened_excluded(m: int, k: int, d: int) -> List[str]:
    """Side conditions of the family that (m, k, d) violates"""
    reasons = []
    if gcd(m, d) != 1:
        reasons.append("gcd(m,d) != 1")
    if d > m * k - 1:
        reasons.append("d > mk-1")
    if k == 1 and d in (1, m - 1):
        reasons.append("k = 1 and d in {1, m-1}")
    return reasons


def thickened_predict(m: int, k: int, d: int) -> dict:
    """Dimension (km-1-d)(d-1) + (k-1)m, Picard rank m, index k for gcd(m, d) = 1"""
    if m < 1 or k < 1 or d < 1:
        raise ValueError(f"Need m, k, d >= 1, got m={m}, k={k}, d={d}")
    excluded = thickened_excluded(m, k, d)
    special = []
    if m == 1:
        special.append('grassmannian')
    if d == 1 or d == k * m - 1:
        special.append('projective_power')
    if k == 1:
        special.append('point_configuration')
    return {
        'theta': [k * d] * m + [-k * m],
        'dim': (k * m - 1 - d) * (d - 1) + (k - 1) * m,
        'rank': m,
        'index': k * gcd(d, m),
        'stable_exists_if': d <= k * m,
        'excluded': excluded,
        'side_conditions': not excluded,
        'special_cases': special,
    }


def mukai_check(m: int, k: int, d: int) -> dict:
    """rank * (index - 1) <= dimension, equality expected exactly for d = 1 or d = km - 1"""
    prediction = thickened_predict(m, k, d)
    lhs = m * (k - 1)
    rhs = prediction['dim']
    return {
        'm': m,
        'k': k,
        'd': d,
        'lhs': lhs,
        'rhs': rhs,
        'holds': lhs <= rhs,
        'equality': lhs == rhs,
        'equality_expected': d == 1 or d == k * m - 1,
        'note': NOTE_PSEUDO_INDEX,
    }


def mukai_scan(max_m: int, max_k: int) -> dict:
    """mukai_check over every m, k <= bounds, 1 <= d <= km - 1 with gcd(m, d) = 1"""
    reports = []
    for m in range(1, max_m + 1):
        for k in range(1, max_k + 1):
            for d in range(1, k * m):
                if gcd(m, d) == 1:
                    reports.append(mukai_check(m, k, d))

    failures = [r for r in reports if not r['holds'] or r['equality'] != r['equality_expected']]
    return {
        'check': 'mukai',
        'max_m': max_m,
        'max_k': max_k,
        'cases': len(reports),
        'equality_cases': sum(1 for r in reports if r['equality']),
        'failures': failures,
        'passed': not failures,
    }


# ==================== REGISTRY AND SWEEPS ====================

# name -> (parameter names, quiver + dimension vector builder, predictor)
FAMILIES: Dict[str, Tuple[Tuple[str, ...], Callable, Callable]] = {
    'subspace': (('m', 'd'),
                 lambda m, d: (subspace_quiver(m), subspace_dim(m, d)),
                 subspace_predict),
    'kronecker': (('m', 'd', 'e'),
                  lambda m, d, e: (kronecker_quiver(m), (d, e)),
                  kronecker_predict),
    'thickened': (('m', 'k', 'd'),
                  lambda m, k, d: (thickened_quiver(m, k), subspace_dim(m, d)),
                  thickened_predict),
}

# families where Certified holds exactly on the side conditions
EXACT_FAMILIES = {'subspace', 'thickened'}


def expected_status(family: str, prediction: dict, params: dict) -> Optional[str]:
    """Status the known results for the family force, or None where they say nothing"""
    if prediction['side_conditions']:
        return STATUS_CERTIFIED
    if family == 'kronecker' and gcd(params['d'], params['e']) != 1:
        return STATUS_NOT_COPRIME
    if family in EXACT_FAMILIES:
        return 'not Certified'
    return None


def compare_prediction(family: str, params: dict, prediction: dict,
                       certificate: FanoCertificate) -> dict:
    """Field-by-field agreement between a predictor and a live certificate"""
    mismatches = []
    if list(certificate.canonical_theta.theta) != prediction['theta']:
        mismatches.append('theta')
    if certificate.dimension != prediction['dim']:
        mismatches.append('dim')
    if certificate.certified:
        if certificate.picard_rank != prediction['rank']:
            mismatches.append('rank')
        if certificate.index != prediction['index']:
            mismatches.append('index')

    expected = expected_status(family, prediction, params)
    if expected == 'not Certified':
        if certificate.certified:
            mismatches.append('status')
    elif expected is not None and certificate.status != expected:
        mismatches.append('status')

    return {
        'expected_status': expected,
        'mismatches': mismatches,
        'agree': not mismatches,
    }


def family_sweep(family: str, param_grid: List[dict], jobs: Optional[int] = None,
                 budget: Optional[int] = None, include_cases: bool = False) -> dict:
    """Predict and certify every parameter set; report disagreements (and every case on request)"""
    names, builder, predictor = FAMILIES[family]
    instances = [builder(*(params[name] for name in names)) for params in param_grid]
    certificates = fano_certifier.certify_batch(instances, jobs=jobs, budget=budget)

    cases = []
    for params, certificate in zip(param_grid, certificates):
        prediction = predictor(*(params[name] for name in names))
        comparison = compare_prediction(family, params, prediction, certificate)
        cases.append({
            'params': params,
            'status': certificate.status,
            'dim': certificate.dimension,
            'rank': certificate.picard_rank,
            'index': certificate.index,
            **comparison,
        })

    disagreements = [case for case in cases if not case['agree']]
    if disagreements:
        logger.warning(f"{family} sweep: {len(disagreements)} disagreement(s)")
    report = {
        'check': family,
        'cases': len(cases),
        'certified': sum(1 for case in cases if case['status'] == STATUS_CERTIFIED),
        'disagreements': disagreements,
        'passed': not disagreements,
    }
    if include_cases:
        report['results'] = cases
    return report


def subspace_grid(max_m: int, max_d: int) -> List[dict]:
    return [{'m': m, 'd': d} for m in range(1, max_m + 1) for d in range(1, max_d + 1)]


def kronecker_grid(ms, max_de: int) -> List[dict]:
    return [{'m': m, 'd': d, 'e': e} for m in ms
            for d in range(1, max_de + 1) for e in range(1, max_de + 1)]


def thickened_grid(max_m: int, max_k: int, max_d: int) -> List[dict]:
    return [{'m': m, 'k': k, 'd': d} for m in range(1, max_m + 1)
            for k in range(1, max_k + 1) for d in range(1, max_d + 1)]


def subspace_family_sweep(max_m: int, max_d: int, jobs: Optional[int] = None,
                          budget: Optional[int] = None, include_cases: bool = False) -> dict:
    return family_sweep('subspace', subspace_grid(max_m, max_d), jobs, budget, include_cases)


def kronecker_family_sweep(ms, max_de: int, jobs: Optional[int] = None,
                           budget: Optional[int] = None, include_cases: bool = False) -> dict:
    return family_sweep('kronecker', kronecker_grid(ms, max_de), jobs, budget, include_cases)


def thickened_family_sweep(max_m: int, max_k: int, max_d: int, jobs: Optional[int] = None,
                           budget: Optional[int] = None, include_cases: bool = False) -> dict:
    return family_sweep('thickened', thickened_grid(max_m, max_k, max_d), jobs, budget, include_cases)
