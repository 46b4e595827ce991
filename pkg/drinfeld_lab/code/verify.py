# The verify module
# Measure dimension, minimum rank distance and local distances of a built code, exhaustively
# under the guards or by seeded sampling, and compare against the Singleton and locality bounds.
from drinfeld_lab import EXHAUSTIVE_GUARD, KERNEL_ENUM_GUARD, LOCAL_GUARD, VERIFY_MODES
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import fq_from_spec, fq_rank, fq_spec
from drinfeld_lab.lib import logger, math_util, util
from drinfeld_lab.lib.decorator import timeit
import numpy as np

BATCH_ENTRIES = 2 ** 22  # int64 entries per batched rank computation
logger = logger.get_logger(__name__)


def singleton_bound(m, n, d):
    '''Largest F_q-dimension of an m x n rank-metric code with minimum distance d'''
    return max(m, n) * (min(m, n) - d + 1)


def locality_bound(n, k, r, delta):
    '''
    Upper bound on the rank distance of an (n, k) code over F_{q^m} with rank-locality (r, δ)
    @example

    verify.locality_bound(9, 6, 2, 2)
    # => 2
    '''
    return n - k + 1 - (math_util.ceil_div(k, r) - 1) * (delta - 1)


def _kernel_vectors(GF, n):
    '''All of F_q^n as the columns of an n x q^n matrix'''
    q = GF.order
    return GF(math_util.to_digits(np.arange(q ** n), q, n).T)


def rank_weights(mats):
    '''
    Ranks over F_q of a stack of m x n matrices.
    For small q^n the kernel of every matrix is counted against all of F_q^n in one product,
    rank = n - log_q #kernel; otherwise each rank is computed separately.
    @param {FieldArray} mats shape (N, m, n)
    @returns {np.ndarray} int ranks of length N
    '''
    GF = type(mats)
    N, m, n = mats.shape
    q = GF.order
    if N == 0:
        return np.zeros(0, dtype=np.int64)
    if q ** n > KERNEL_ENUM_GUARD:
        return np.array([fq_rank(M) for M in mats], dtype=np.int64)
    V = _kernel_vectors(GF, n)
    batch = max(1, BATCH_ENTRIES // (m * q ** n))
    ranks = []
    for start in range(0, N, batch):
        chunk = mats[start:start + batch]
        images = poly.to_ints(chunk.reshape(-1, n) @ V).reshape(len(chunk), m, -1)
        kernel = np.count_nonzero(~np.any(images, axis=1), axis=1)
        ranks.append(n - np.rint(np.log(kernel) / np.log(q)).astype(np.int64))
    return np.concatenate(ranks)


def _codeword_mats(G, coords, m, n):
    return (coords @ G).reshape(-1, m, n)


def _min_weight_range(spec, G_ints, m, n, start, stop, batch=8192):
    '''Minimum rank weight over message indices [start, stop); indices are base-q coordinate vectors'''
    GF = fq_from_spec(spec)
    G = GF(G_ints)
    q, K = GF.order, G.shape[0]
    best = None
    for lo in range(start, stop, batch):
        idxs = np.arange(lo, min(lo + batch, stop), dtype=np.int64)
        coords = GF(math_util.to_digits(idxs, q, K))
        weights = rank_weights(_codeword_mats(G, coords, m, n))
        low = int(weights.min())
        best = low if best is None else min(best, low)
    return best


def min_rank_weight(G, m, n, mode='sampled', samples=200, rng=None, num_cpus=1):
    '''
    Minimum rank weight of the nonzero codewords c·G, c in F_q^K
    @param {FieldArray} G F_q generator matrix, shape (K, m·n)
    @param {str} mode exhaustive enumerates every nonzero c; sampled draws `samples` nonzero c
    @returns {int}
    '''
    GF = type(G)
    q, K = GF.order, G.shape[0]
    if mode == 'exhaustive':
        total = q ** K
        spec, G_ints = fq_spec(GF), poly.to_ints(G)
        if num_cpus > 1:
            # index 0 is the zero codeword
            args = [(spec, G_ints, m, n, start + 1, stop + 1) for start, stop in util.chunk_ranges(total - 1, num_cpus)]
            return min(util.parallelize(_min_weight_range, args, num_cpus))
        return _min_weight_range(spec, G_ints, m, n, 1, total)
    elif mode == 'sampled':
        rng = util.get_rng(0) if rng is None else rng
        coords = rng.integers(0, q, (samples, K))
        zero_rows = ~coords.any(axis=1)
        coords[zero_rows, 0] = 1
        return int(rank_weights(_codeword_mats(G, GF(coords), m, n)).min())
    else:
        raise ValueError(f'Unrecognized verify mode {mode}, choose from {VERIFY_MODES}')


def _resolve_mode(mode, size, guard, label):
    if mode == 'exhaustive' and size > guard:
        logger.warning(f'{label}: {size} codewords exceed guard {guard}, falling back to sampled')
        return 'sampled', True
    return mode, False


@timeit
def verify_code(code, mode='sampled', samples=200, strict=False, seed=None, num_cpus=1):
    '''
    Check a built code against its contract: F_q-dimension m(s+1)r, rank distance ℓR - Rs - r + 1,
    local distance δ per group, the Singleton bound and the locality bound (optimality).
    Exhaustive checks demand equality; sampled checks can only confirm the lower bounds.
    @param {CodeInstance} code
    @param {str} mode 'exhaustive' or 'sampled'; exhaustive above the guard falls back to sampled
    @param {int} samples Sample count for sampled checks
    @param {bool} strict Also require δ < R
    @param {int} seed Sampling seed
    @returns {dict} report with a top-level pass flag
    '''
    if mode not in VERIFY_MODES:
        raise ValueError(f'Unrecognized verify mode {mode}, choose from {VERIFY_MODES}')
    p = code.params
    q, m, n = p.q, code.tower.m, p.n
    rng = util.get_rng(0 if seed is None else seed)

    G = code.generator_matrix()
    dimension = fq_rank(G)
    global_mode, fallback = _resolve_mode(mode, q ** G.shape[0], EXHAUSTIVE_GUARD, 'global code')
    distance = min_rank_weight(G, m, n, global_mode, samples, rng, num_cpus)
    if global_mode == 'exhaustive':
        distance_pass = distance == p.d
    else:
        distance_pass = p.d <= distance <= n

    local = []
    for i in range(1, p.ell + 1):
        G_local = code.local_generator(i)
        # local codes are small: exhaustive whenever the guard allows, in either mode
        local_mode, local_fallback = _resolve_mode('exhaustive', q ** G_local.shape[0], LOCAL_GUARD, f'local code {i}')
        measured = min_rank_weight(G_local, m, p.R, local_mode, samples, rng)
        local_pass = measured == p.delta if local_mode == 'exhaustive' else measured >= p.delta
        local.append({'group': i, 'mode': local_mode, 'fallback': local_fallback, 'distance': measured, 'pass': bool(local_pass)})

    bound = singleton_bound(m, n, p.d)
    eq_bound = locality_bound(n, p.k, p.r, p.delta)
    strict_pass = p.delta < p.R
    report = {
        'contract': p.contract(),
        'mode': global_mode,
        'fallback': fallback,
        'samples': None if global_mode == 'exhaustive' else samples,
        'dimension': {'expected': m * p.k, 'measured': dimension, 'pass': dimension == m * p.k},
        'distance': {'expected': p.d, 'measured': distance, 'pass': bool(distance_pass)},
        'local': local,
        'singleton': {'dimension': m * p.k, 'bound': bound, 'pass': m * p.k <= bound},
        'locality_bound': {'bound': eq_bound, 'distance': p.d, 'optimal': p.d == eq_bound},
        'strict': {'enabled': strict, 'delta_below_R': strict_pass},
    }
    checks = [
        report['dimension']['pass'],
        report['distance']['pass'],
        all(row['pass'] for row in local),
        report['singleton']['pass'],
        report['locality_bound']['optimal'],
        strict_pass or not strict,
    ]
    report['pass'] = all(checks)
    logger.info(f'Verified {p} in {global_mode} mode: distance {distance}, pass {report["pass"]}')
    return report
