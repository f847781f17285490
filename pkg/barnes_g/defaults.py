"""
Default limits and policies shared by the evaluators.
"""

# guard digits: BASE_GUARD + GUARD_PER_DECADE * ceil(log10(digits))
BASE_GUARD = 10
GUARD_PER_DECADE = 5

# tanh-sinh level schedule: step h = 2**-level
QUADRATURE_MIN_LEVEL = 2
QUADRATURE_MAX_LEVEL = 10

# Gauss-Legendre degree cap for finite paths (3 * 2**(degree-1) nodes)
GAUSS_LEGENDRE_MAX_DEGREE = 8
# longest straight piece of a finite path handed to one Gauss-Legendre rule
PATH_PIECE_LENGTH = 0.5

# summation caps
SERIES_TERM_CAP = 200000
ASYMPTOTIC_TERM_CAP = 400

# highest multiple gamma order served by the integral route
MULTIGAMMA_MAX_ORDER = 6

# verify tolerance is 10**-(digits - VERIFY_SLACK_DIGITS)
VERIFY_SLACK_DIGITS = 5

# accepted --digits ranges on the command line
EVAL_DIGITS_RANGE = (10, 5000)
BENCH_DIGITS_RANGE = (10, 2000)

# seeded sample for the G(z+1) = Gamma(z) G(z) check
RECURRENCE_SAMPLES = 40
RECURRENCE_SEED = 20240611
