# Certificate statuses
STATUS_CERTIFIED = "Certified"
STATUS_NOT_COPRIME = "NotCoprime"
STATUS_INCONCLUSIVE = "Inconclusive"

# Ampleness outcomes (never "NotAmple": only part of the ample cone is identified)
AMPLE = "Ample"
AMPLE_UNKNOWN = "Unknown"

# CLI exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_COPRIME = 2
EXIT_INCONCLUSIVE = 3
EXIT_BUDGET = 4
EXIT_CHECK_FAILED = 5

EXIT_BY_STATUS = {
    STATUS_CERTIFIED: EXIT_OK,
    STATUS_NOT_COPRIME: EXIT_NOT_COPRIME,
    STATUS_INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

# Certificate JSON field order
CERTIFICATE_FIELDS = [
    "status",
    "dimension",
    "picard_rank",
    "index",
    "theta",
    "witness",
    "notes",
]

# Catalog columns (toric-enumerate export)
CATALOG_COLUMNS = [
    "n",
    "arrows",
    "total_arrows",
    "dim",
    "rank",
    "index",
]

# Toric conditions scan subsets as bitmasks
TORIC_MAX_VERTICES = 62

# Canonical-form dedup tries every linear extension
TORIC_DEDUP_MAX_VERTICES = 7

# Names of the pictured toric quivers
TORIC_FIXTURE_NAMES = [
    "p1xp1",
    "bl1p2",
    "bl2p2",
    "bl3p2",
    "p1xp2",
    "blp_p3",
    "bll_p3",
]

# Fixture prefix on the command line (e.g. @p1xp1)
FIXTURE_PREFIX = "@"

# Notes attached to certificates
NOTE_NONEMPTY = ("Presumes the stable locus is non-empty; non-emptiness is not decided here.")
NOTE_RATIONAL = ("Such moduli spaces are also rational with purely algebraic cohomology; "
                 "these properties are quoted, not computed.")
NOTE_POINT = ("Canonical stability vanishes identically: the moduli space is a point "
              "and the index is undefined (reported as 0).")
NOTE_INCONCLUSIVE = ("The ample-stability criterion is only sufficient: "
                     "Inconclusive is not a disproof of the Fano property.")
NOTE_NOT_COPRIME = ("Canonical stability lies on a wall: semistable and stable loci differ.")
NOTE_PSEUDO_INDEX = ("The index is used as a lower bound for the pseudo-index, "
                     "so lhs = rank * (index - 1) understates rank * (pseudo-index - 1).")
