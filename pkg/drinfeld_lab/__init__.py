import os

os.environ['PY_ENV'] = os.environ.get('PY_ENV') or 'development'
ROOT_DIR = os.path.normpath(os.path.join(os.path.dirname(__file__), '..'))

# guards keeping exhaustive runs desk-scale
EXHAUSTIVE_GUARD = 10 ** 7  # codewords of a global code
LOCAL_GUARD = 10 ** 6  # codewords of a local code
COUNT_GUARD = 10 ** 7  # candidates u in a progression count
SIEVE_GUARD = 10 ** 6  # monic polynomials in a vectorized irreducibility table
KERNEL_ENUM_GUARD = 4096  # q^n for batched rank by kernel counting
ADMISSIBLE_MARGIN = 1e-12

# valid verification modes
VERIFY_MODES = ('exhaustive', 'sampled')
# job file modes of run_lab: build only, or build then verify
LAB_MODES = ('build', 'sampled', 'exhaustive')
