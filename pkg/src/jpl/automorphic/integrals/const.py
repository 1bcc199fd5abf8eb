# encoding: utf-8

'''🧮 Global Integrals: constants.'''

DEFAULT_PARAMS      = (1, 6)   # Default inclusive parameter range for the parametric families
PROCESS_TIMEOUT     = 600      # How many seconds to wait for a worker process to finish
WEYL_MAX_P          = 4        # Largest p for the exhaustive scan over S_2p
ORACLE_MAX_P        = 2        # Largest p for the finite-field admissibility oracle
ORACLE_PRIME        = 3        # Field used by the finite-field admissibility oracle
OPEN_REGIME_MIN_M   = 4        # From this m on, a k = 1 cuspidal slot leaves the budget unconstrained
MAX_SEARCH_LENGTH   = 8        # Hard cap on the number of slots the enumerator will try

# Exit codes
EXIT_OK             = 0
EXIT_FAILED         = 1
EXIT_USAGE          = 2

# Output formats
EMIT_JSON           = 'json'
EMIT_MARKDOWN       = 'markdown'
EMIT_FORMATS        = (EMIT_JSON, EMIT_MARKDOWN)

# Slot roles
CUSPIDAL            = 'cuspidal'
AUTOMORPHIC         = 'automorphic'
EISENSTEIN          = 'eisenstein'

# Row status
STATUS_UNKNOWN      = 'unknown'
STATUS_NONZERO      = 'nonzero_unipotent'
STATUS_NOT_UNIPOTENT = 'not_unipotent'

# Row flags
FLAG_OPEN_REGIME    = 'open_regime'
FLAG_VANISHING      = 'vanishing_unknown'
FLAG_LIFTED         = 'cuspidal_exclusion_lifted'

# Classical family tags
GL, GSP, GSO        = 'GL', 'GSp', 'GSO'

# Exceptional groups and their similitude families
E6, E7              = 'E6', 'E7'
GE6, GE7            = 'GE6', 'GE7'

# Packaged fixtures
ORBITS_FIXTURE      = 'orbits_exceptional.json'
TABLES_FIXTURE      = 'tables_expected.json'

# Dynkin diagrams in Bourbaki numbering; E6 is the chain 1-3-4-5-6 with 2 attached to 4
DYNKIN_EDGES = {
    E6: ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    E7: ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
}

# Position k of a digit string such as "0101000" is the coefficient of this simple root
DIGIT_NODES = {
    E6: (1, 2, 3, 4, 5, 6),
    E7: (1, 2, 3, 4, 5, 6, 7),
}

# The diagonal GL_2 stabilizing the E6 coefficient of GE7 contains the SL_2 through these simple roots
GE7_STABILIZER_NODES = frozenset({2, 5, 7})

# Labels a GE6 cuspidal representation cannot carry
GE6_CUSPIDAL_EXCLUDED = frozenset({'D5', 'D5(a1)'})
