"""
Toric quiver moduli: d = (1,...,1) on a quiver whose vertices are topologically sorted,
so the arrow counts form a strictly upper-triangular matrix a[k][l].

For a proper non-empty vertex subset K with complement K', write a(K,K') for the number of
arrows leaving K. The moduli space is a smooth projective toric Fano variety when, for every
K, a(K,K') != a(K',K) and max(a(K,K'), a(K',K)) >= 2.
"""
from functools import partial
from math import comb
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from config import DEFAULT_BUDGET
from modules.models import (Quiver, ToricCatalogEntry, ToricConditionReport, ToricInvariants,
                            ToricQuiverSpec)
from modules.quiver_core import gcd_form, topological_order
from utils.constants import TORIC_DEDUP_MAX_VERTICES, TORIC_MAX_VERTICES
from utils.exceptions import BudgetExceeded, QuiverError
from utils.fixtures import TORIC_FIXTURES
from utils.logger import logger
from utils.parallel import parallel_map


def toric_theta(spec: ToricQuiverSpec) -> Tuple[int, ...]:
    """Out-degree minus in-degree per vertex, counted with multiplicity"""
    theta = [0] * spec.n
    for k, l, m in spec.arrows():
        theta[k] += m
        theta[l] -= m
    return tuple(theta)


def cut_weights(spec: ToricQuiverSpec, mask: int) -> Tuple[int, int]:
    """(a(K,K'), a(K',K)) for the vertex subset encoded by mask"""
    out_weight = in_weight = 0
    for k, l, m in spec.arrows():
        k_in = (mask >> k) & 1
        l_in = (mask >> l) & 1
        if k_in and not l_in:
            out_weight += m
        elif l_in and not k_in:
            in_weight += m
    return out_weight, in_weight


def toric_fano_conditions(spec: ToricQuiverSpec) -> ToricConditionReport:
    """Scan every proper non-empty K by bitmask; report the first K that fails"""
    if spec.n > TORIC_MAX_VERTICES:
        raise QuiverError(f"Toric conditions support at most {TORIC_MAX_VERTICES} vertices, got {spec.n}")

    for mask in range(1, (1 << spec.n) - 1):
        out_weight, in_weight = cut_weights(spec, mask)
        reason = ""
        if out_weight == in_weight:
            reason = "a(K,K') = a(K',K)"
        elif max(out_weight, in_weight) < 2:
            reason = "max(a(K,K'), a(K',K)) < 2"
        if reason:
            subset = tuple(v for v in range(spec.n) if (mask >> v) & 1)
            return ToricConditionReport(False, subset, out_weight, in_weight, reason)

    return ToricConditionReport(True)


def toric_invariants(spec: ToricQuiverSpec) -> ToricInvariants:
    """Dimension a([n],[n]) - n + 1, Picard rank n - 1, index gcd(theta)"""
    return ToricInvariants(
        dim=spec.total_arrows - spec.n + 1,
        rank=spec.n - 1,
        index=gcd_form(toric_theta(spec)),
    )


def spec_from_quiver(Q: Quiver) -> ToricQuiverSpec:
    """Relabel vertices along topological_order so the matrix becomes upper-triangular"""
    order = topological_order(Q)
    return ToricQuiverSpec(Q.n, tuple(tuple(Q.mult[src][dst] for dst in order) for src in order))


def canonical_form(spec: ToricQuiverSpec) -> ToricQuiverSpec:
    """Smallest flattened matrix over all relabellings that keep the support upper-triangular"""
    if spec.n > TORIC_DEDUP_MAX_VERTICES:
        raise QuiverError(f"Canonical form supports at most {TORIC_DEDUP_MAX_VERTICES} vertices")

    best = None
    for order in nx.all_topological_sorts(spec.to_quiver().support_graph()):
        flat = tuple(spec.a[order[p]][order[q]] for p in range(spec.n) for q in range(p + 1, spec.n))
        if best is None or flat < best:
            best = flat
    return ToricQuiverSpec.from_flat(spec.n, best)


def spec_count(n: int, max_arrows: int) -> int:
    """Number of upper-triangular matrices with total multiplicity <= max_arrows"""
    slots = n * (n - 1) // 2
    return comb(max_arrows + slots, slots)


def _compositions(total: int, slots: int) -> Iterable[Tuple[int, ...]]:
    """Weak compositions of total into slots parts, lex order"""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def _passing_canonical(flat: Tuple[int, ...], n: int) -> Optional[Tuple[int, ...]]:
    spec = ToricQuiverSpec.from_flat(n, flat)
    if not toric_fano_conditions(spec).ok:
        return None
    return canonical_form(spec).flat()


def enumerate_toric_fano(n: int, max_arrows: int, budget: Optional[int] = None,
                         jobs: Optional[int] = None,
                         progress: bool = False) -> List[ToricCatalogEntry]:
    """
    Every spec with total multiplicity <= max_arrows passing the toric Fano conditions,
    one per relabelling class (canonical form), sorted by total arrows then canonical flat.
    """
    if n < 2:
        raise QuiverError(f"Toric enumeration needs n >= 2, got {n}")
    if n > TORIC_DEDUP_MAX_VERTICES:
        raise QuiverError(f"Toric enumeration supports at most {TORIC_DEDUP_MAX_VERTICES} vertices")

    count = spec_count(n, max_arrows)
    budget = DEFAULT_BUDGET if budget is None else budget
    if count > budget:
        logger.warning(f"Refusing to enumerate {count} toric specs (budget {budget})")
        raise BudgetExceeded(count, budget, what="toric specs")

    slots = n * (n - 1) // 2
    candidates = [flat for total in range(max_arrows + 1) for flat in _compositions(total, slots)]
    logger.info(f"Scanning {len(candidates)} toric specs on {n} vertices (max arrows {max_arrows})")
    canonical = parallel_map(partial(_passing_canonical, n=n), candidates, jobs,
                             progress=progress, desc="Toric specs")

    unique = sorted({flat for flat in canonical if flat is not None},
                    key=lambda flat: (sum(flat), flat))
    catalog = []
    for flat in unique:
        spec = ToricQuiverSpec.from_flat(n, flat)
        catalog.append(ToricCatalogEntry(spec, toric_invariants(spec)))

    logger.info(f"Found {len(catalog)} toric Fano quivers on {n} vertices")
    return catalog


def toric_fixture(name: str) -> ToricQuiverSpec:
    """One of the seven pictured quivers"""
    if name not in TORIC_FIXTURES:
        raise KeyError(f"Unknown toric fixture '{name}'")
    n, arrows, _ = TORIC_FIXTURES[name]
    a = [[0] * n for _ in range(n)]
    for k, l, m in arrows:
        a[k][l] += m
    return ToricQuiverSpec(n, tuple(tuple(row) for row in a))
