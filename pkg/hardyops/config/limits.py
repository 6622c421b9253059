BLASCHKE_ZERO_MARGIN = 1e-6            # zeros must satisfy |a| <= 1 - margin
UNIMODULAR_TOLERANCE = 1e-12           # allowed drift of |c| from 1 for inner constants
ATOM_TOLERANCE = 1e-12                 # evaluation points this close to an atom are singular
ROOT_TOLERANCE = 1e-9                  # default root-distance tolerance (circle and cancellation)
AMBIGUOUS_CANCELLATION_FACTOR = 1e3    # near-cancellations within factor x tolerance are ambiguous
GEOMETRIC_TAIL_TARGET = 1e-18          # target l1 mass left out of each geometric factor
MAX_GEOMETRIC_TERMS = 20_000           # hard cap on stored geometric series terms
SAMPLE_CHOP_FACTOR = 64                # sampled coefficients below factor*eps*max are dropped
MAX_SAMPLE_EXPONENT = 20               # at most 2**20 boundary samples per expansion
MAX_MATRIX_DIMENSION = 4096            # largest window accepted for dense assembly
MIN_WINDOW = 4                         # smallest reporting window accepted by run configs
RANDOM_ZERO_RADIUS = 0.8               # random Blaschke zeros are drawn from this disk
RANDOM_SYMBOL_DEGREE = 5               # random Laurent symbols span at most this many indices per side
RANDOM_THETA_DEGREE = (1, 3)           # degree range for random theta
RANDOM_ETA_DEGREE = (0, 3)             # degree range for random eta
