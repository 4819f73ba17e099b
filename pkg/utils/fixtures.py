"""
Embedded quivers addressable on the command line as @name.
"""
from typing import Dict, List, Tuple

Arrows = List[Tuple[int, int, int]]

# Format: name -> (vertex count, arrows, expected (dim, rank, index)); d = (1,...,1)
TORIC_FIXTURES: Dict[str, Tuple[int, Arrows, Tuple[int, int, int]]] = {
    # Del Pezzo surfaces
    "p1xp1": (3, [(0, 2, 2), (1, 2, 2)], (2, 2, 2)),
    "bl1p2": (3, [(0, 1, 1), (0, 2, 1), (1, 2, 2)], (2, 2, 1)),
    # T=0, B=1, L=2, R=3
    "bl2p2": (4, [(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)], (2, 3, 1)),
    # sources T=0, B=1, M=2; sinks L=3, R=4
    "bl3p2": (5, [(0, 3, 1), (0, 4, 1), (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1)], (2, 4, 1)),

    # Threefolds
    "p1xp2": (3, [(0, 2, 2), (1, 2, 3)], (3, 2, 1)),
    "blp_p3": (3, [(0, 1, 1), (0, 2, 1), (1, 2, 3)], (3, 2, 2)),
    "bll_p3": (3, [(0, 1, 2), (0, 2, 2), (1, 2, 1)], (3, 2, 1)),
}

# Format: name -> (vertex count, arrows, suggested dimension vector)
QUIVER_FIXTURES: Dict[str, Tuple[int, Arrows, Tuple[int, ...]]] = {
    "k3": (2, [(0, 1, 3)], (2, 3)),
    "k4": (2, [(0, 1, 4)], (1, 2)),
    "s5": (6, [(i, 5, 1) for i in range(5)], (1, 1, 1, 1, 1, 2)),
    "s6": (7, [(i, 6, 1) for i in range(6)], (1, 1, 1, 1, 1, 1, 2)),
    "s7": (8, [(i, 7, 1) for i in range(7)], (1, 1, 1, 1, 1, 1, 1, 3)),
}


def fixture_names() -> List[str]:
    return list(TORIC_FIXTURES) + list(QUIVER_FIXTURES)


def fixture_arrows(name: str) -> Tuple[int, Arrows]:
    """(n, arrows) of any embedded quiver"""
    if name in TORIC_FIXTURES:
        n, arrows, _ = TORIC_FIXTURES[name]
    elif name in QUIVER_FIXTURES:
        n, arrows, _ = QUIVER_FIXTURES[name]
    else:
        raise KeyError(f"Unknown fixture '{name}'. Available: {', '.join(fixture_names())}")
    return n, list(arrows)


def fixture_dimension_vector(name: str) -> Tuple[int, ...]:
    """d = (1,...,1) for toric fixtures, the stored suggestion otherwise"""
    if name in TORIC_FIXTURES:
        return tuple([1] * TORIC_FIXTURES[name][0])
    if name in QUIVER_FIXTURES:
        return QUIVER_FIXTURES[name][2]
    raise KeyError(f"Unknown fixture '{name}'")
