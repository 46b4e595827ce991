# The dirichlet module
# Effective Dirichlet machinery over F_q[T]: admissibility of (q, m, deg h), deterministic search for
# monic irreducible P ≡ a mod h, exhaustive progression counts and the explicit error-term bounds.
from drinfeld_lab import ADMISSIBLE_MARGIN, COUNT_GUARD, SIEVE_GUARD
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import fq_from_spec, fq_spec
from drinfeld_lab.lib import logger, math_util, util
from drinfeld_lab.lib.decorator import timeit
from drinfeld_lab.lib.error import GuardExceededError, ValidationError
from fractions import Fraction
from functools import lru_cache
import math
import numpy as np

LEMMA_CONSTANTS = ('stated', 'proof')
logger = logger.get_logger(__name__)


class SearchReport:
    '''
    Outcome of find_prime: found = u·h + a when present, with the number of candidates tested
    in the fixed enumeration order up to and including the hit
    '''

    def __init__(self, h, m, a, found=None, u=None, tested=0, admissible=None):
        self.h = h
        self.m = m
        self.a = a
        self.found = found
        self.u = u
        self.tested = tested
        self.admissible = admissible

    def __repr__(self):
        return f'SearchReport(found={self.found is not None}, tested={self.tested})'

    def to_dict(self):
        return {
            'q': self.h.field.order,
            'h': poly.format_poly(self.h),
            'm': self.m,
            'a': poly.format_poly(self.a),
            'found': self.found is not None,
            'P': None if self.found is None else poly.format_poly(self.found),
            'u': None if self.u is None else poly.format_poly(self.u),
            'tested': self.tested,
            'admissible': self.admissible,
        }


def lemma_rhs(q, m, constant='stated'):
    '''
    Right-hand side m/2 - log m/log q - c/log q of the admissibility inequality.
    The stated constant is c = log 5; the proof yields the tighter c = log(6/sqrt(m) + 2).
    '''
    if constant == 'stated':
        c = math.log(5)
    elif constant == 'proof':
        c = math.log(6 / math.sqrt(m) + 2)
    else:
        raise ValueError(f'Unrecognized lemma constant {constant}, choose from {LEMMA_CONSTANTS}')
    return m / 2 - math.log(m) / math.log(q) - c / math.log(q)


def admissible(q, m, lR, constant='stated'):
    '''
    Whether lR < m/2 - log m/log q - log 5/log q, which guarantees a monic irreducible P ≡ a mod h of degree m
    for every h of degree lR and unit a. The margin leans toward inadmissible.
    @example

    dirichlet.admissible(5, 16, 2)
    # => True
    '''
    if m < 4:
        raise ValidationError(f'below lemma range: m = {m} < 4')
    return lR < lemma_rhs(q, m, constant) - ADMISSIBLE_MARGIN


def _check_progression(h, m, a):
    if h.field is not a.field:
        raise ValidationError('h and a must share the coefficient field')
    n = poly.deg(h)
    if n < 1:
        raise ValidationError(f'h must be nonconstant, got {poly.format_poly(h)}')
    if poly.deg(a) >= n:
        raise ValidationError(f'need deg a < deg h, got a = {poly.format_poly(a)}')
    if poly.deg(poly.poly_gcd(a, h)) != 0:
        raise ValidationError(f'a = {poly.format_poly(a)} is not a unit modulo h = {poly.format_poly(h)}')
    if m < n:
        raise ValidationError(f'need m >= deg h = {n}, got m = {m}')


def _search_range(spec, h_asc, a_asc, k, start, stop):
    '''First index in [start, stop) whose candidate u·h + a is irreducible, else None'''
    GF = fq_from_spec(spec)
    h, a = poly.from_asc(h_asc, GF), poly.from_asc(a_asc, GF)
    for idx in range(start, stop):
        P = poly.monic_at(GF, k, idx) * h + a
        if poly.is_irreducible(P):
            return idx
    return None


@timeit
def find_prime(h, m, a=None, num_cpus=1):
    '''
    Search monic u of degree m - deg h in enumeration order (constant coefficient fastest) for the first
    P = u·h + a that is irreducible. Partitioned runs return the same order-minimal hit.
    @param {galois.Poly} h Modulus
    @param {int} m Degree of P
    @param {galois.Poly} a Unit residue, defaults to 1
    @param {int} num_cpus Worker processes for disjoint candidate ranges
    @returns {SearchReport}
    '''
    GF = h.field
    a = poly.const(1, GF) if a is None else a
    _check_progression(h, m, a)
    q, k = GF.order, m - h.degree
    total = q ** k
    spec, h_asc, a_asc = fq_spec(GF), poly.to_asc(h), poly.to_asc(a)
    if num_cpus > 1 and total > 1:
        args = [(spec, h_asc, a_asc, k, start, stop) for start, stop in util.chunk_ranges(total, num_cpus)]
        hits = [idx for idx in util.parallelize(_search_range, args, num_cpus) if idx is not None]
        hit = min(hits) if hits else None
    else:
        hit = _search_range(spec, h_asc, a_asc, k, 0, total)

    report = SearchReport(h, m, a, admissible=admissible(q, m, h.degree) if m >= 4 else False)
    if hit is None:
        report.tested = total
        logger.info(f'No irreducible P ≡ {poly.format_poly(a)} mod {poly.format_poly(h)} of degree {m} among {total} candidates')
    else:
        report.u = poly.monic_at(GF, k, hit)
        report.found = report.u * h + a
        report.tested = hit + 1
        logger.info(f'Found P = {poly.format_poly(report.found)} after {report.tested} candidates')
    return report


def find_smallest_degree(h, m_start, m_max, a=None, num_cpus=1):
    '''First report with a hit for m = m_start, ..., m_max; the last (empty) report otherwise'''
    assert m_start <= m_max, f'empty degree range [{m_start}, {m_max}]'
    for m in range(m_start, m_max + 1):
        report = find_prime(h, m, a, num_cpus=num_cpus)
        if report.found is not None:
            break
    return report


def residue_index(a, n):
    '''Enumeration index of the residue a among polynomials of degree < n'''
    asc = poly.to_asc(a) + [0] * n
    return int(math_util.from_digits(asc[:n], a.field.order))


@lru_cache(maxsize=256)
def _progression_counts(GF, h_asc, m):
    h = poly.from_asc(h_asc, GF)
    q, n = GF.order, h.degree
    table = poly.irreducible_table(GF, m)
    uh = poly.convolve_rows(GF(list(h_asc)), poly.monic_matrix(GF, m - n))
    residues = GF(math_util.to_digits(np.arange(q ** n), q, n))
    weights = q ** np.arange(m, dtype=np.int64)
    low = uh[:, None, :n] + residues[None, :, :]
    idxs = poly.to_ints(low) @ weights[:n] + (poly.to_ints(uh[:, n:m]) @ weights[n:])[:, None]
    counts = table[idxs].sum(axis=0)
    counts.flags.writeable = False
    return counts


def progression_counts(h, m):
    '''
    #S_m(r, h) for every residue r of degree < deg h at once, indexed by residue_index.
    Every monic P of degree m >= deg h is uniquely u·h + r, so one pass over the sieve covers all classes.
    '''
    GF = h.field
    if GF.order ** m > SIEVE_GUARD:
        raise GuardExceededError(f'q^m = {GF.order ** m} exceeds the sieve guard {SIEVE_GUARD}')
    assert m >= h.degree >= 1, f'need m >= deg h >= 1, got m = {m}, h = {poly.format_poly(h)}'
    return _progression_counts(GF, tuple(poly.to_asc(h)), m)


@timeit
def count_progression(h, m, a):
    '''
    #S_m(a, h) by exhaustive enumeration of the monic u with P = u·h + a
    @example

    GF = galois.GF(3)
    dirichlet.count_progression(poly.parse_poly('T', GF), 2, poly.const(1, GF))
    # => 1
    '''
    _check_progression(h, m, a)
    GF = h.field
    q, n = GF.order, h.degree
    total = q ** (m - n)
    if total > COUNT_GUARD:
        raise GuardExceededError(f'too large for exhaustive count: {total} candidates > {COUNT_GUARD}')
    if q ** m <= SIEVE_GUARD:
        return int(progression_counts(h, m)[residue_index(a, n)])
    count = 0
    for idx in range(total):
        if poly.is_irreducible(poly.monic_at(GF, m - n, idx) * h + a):
            count += 1
    return count


def _bound_side(lhs, coeff, q, m):
    '''Compare |lhs| <= coeff·q^{m/2} exactly by squaring both sides'''
    return {
        'lhs': float(lhs),
        'rhs': float(coeff) * q ** (m / 2),
        'pass': bool(lhs * lhs <= coeff * coeff * q ** m),
    }


def bound_report(h, m, a, count, phi=None):
    '''
    Both sides of |#S_m(a,h) - q^m/(mΦ(h))| <= (3T(m) + 2 deg h) q^{m/2}/m
    and of |#S_m - q^m/m| <= 2 q^{m/2}/m for a known count, with exact rational comparison
    '''
    q, n = h.field.order, h.degree
    phi = poly.totient(h) if phi is None else phi
    divisors = math_util.divisor_count(m)
    main = Fraction(q ** m, m * phi)
    s_m = poly.count_irreducibles(q, m)
    progression = _bound_side(abs(count - main), Fraction(3 * divisors + 2 * n, m), q, m)
    total = _bound_side(abs(s_m - Fraction(q ** m, m)), Fraction(2, m), q, m)
    return {
        'q': q,
        'h': poly.format_poly(h),
        'm': m,
        'a': poly.format_poly(a),
        'count': count,
        'main_term': float(main),
        'totient': phi,
        'divisor_count': divisors,
        'irreducible_count': s_m,
        'progression': progression,
        'total': total,
        'pass': progression['pass'] and total['pass'],
    }


def check_bounds(h, m, a):
    '''
    Count #S_m(a, h) exhaustively and check both error-term bounds
    @returns {dict} report with pass flags
    @example

    report = dirichlet.check_bounds(poly.parse_poly('T', GF3), 2, poly.const(1, GF3))
    report['count'], report['pass']
    # => (1, True)
    '''
    return bound_report(h, m, a, count_progression(h, m, a))
