# The poly module
# Univariate polynomials over F_q. A galois.Poly is the UniPoly of the lab;
# this module adds the contracts the construction relies on: monic gcd, -inf degree of zero,
# Frobenius-criterion irreducibility, counting, totient, valuation and a text codec.
from drinfeld_lab import SIEVE_GUARD
from drinfeld_lab.lib import logger, math_util
from drinfeld_lab.lib.error import ValidationError
from functools import lru_cache
import galois
import math
import numpy as np
import regex as re

RE_EXP = re.compile(r'\^(\d+)')
logger = logger.get_logger(__name__)


# construction and inspection

def from_asc(coeffs, GF):
    '''
    Make a polynomial over GF from ascending coefficients
    @param {list} coeffs Ascending coefficients as ints (integer representation) or field scalars
    @param {type} GF The galois field class of the coefficients
    @returns {galois.Poly} The polynomial, trailing zeros dropped
    @example

    f = poly.from_asc([2, 0, 1], galois.GF(3))
    # => Poly(x^2 + 2, GF(3))
    '''
    ints = [int(c) for c in coeffs]
    return galois.Poly(ints or [0], field=GF, order='asc')


def to_asc(f):
    '''Ascending int coefficients of f with no trailing zeros; [] for the zero polynomial'''
    if is_zero(f):
        return []
    return [int(c) for c in f.coeffs[::-1]]


def const(c, GF):
    return galois.Poly([int(c)], field=GF)


def to_ints(arr):
    '''Integer representation of a FieldArray as a plain int64 ndarray'''
    return arr.view(np.ndarray).astype(np.int64)


def var_T(GF):
    return galois.Poly([1, 0], field=GF)


def is_zero(f):
    return f.degree == 0 and int(f.coeffs[0]) == 0


def deg(f):
    '''Degree with the -inf sentinel for the zero polynomial'''
    return -math.inf if is_zero(f) else f.degree


def lead(f):
    return f.coeffs[0]


def monic(f):
    '''Scale f to leading coefficient 1; the zero polynomial stays zero'''
    if is_zero(f):
        return f
    return f * const(lead(f) ** -1, f.field)


def is_monic(f):
    return not is_zero(f) and int(lead(f)) == 1


# ring operations

def poly_divmod(a, b):
    '''Euclidean division a = qb + r with deg r < deg b'''
    if is_zero(b):
        raise ZeroDivisionError('division by zero polynomial')
    return divmod(a, b)


def poly_gcd(a, b):
    '''Monic gcd; gcd(a, 0) = monic(a)'''
    if is_zero(b):
        return monic(a)
    if is_zero(a):
        return monic(b)
    return monic(galois.gcd(a, b))


def eval_at(f, x):
    '''Horner evaluation of f over F_q at a FieldElement x of an extension'''
    tower = x.tower
    result = tower.zero
    for c in f.coeffs:
        result = result * x + tower.from_fq(c)
    return result


def multiplicity(f, P):
    '''Largest n with P^n | f, for nonzero f'''
    n = 0
    quotient, remainder = poly_divmod(f, P)
    while is_zero(remainder):
        n += 1
        f = quotient
        quotient, remainder = poly_divmod(f, P)
    return n


# irreducibility and counting

def is_irreducible(f):
    '''
    Frobenius-power criterion: f of degree n is irreducible iff x^{q^n} = x mod f
    and gcd(x^{q^{n/ρ}} - x, f) = 1 for every prime ρ | n
    @param {galois.Poly} f Polynomial of degree >= 1
    @returns {bool} Whether f is irreducible over its coefficient field
    '''
    n = deg(f)
    if n < 1:
        raise ValidationError(f'degree too small for irreducibility: {f}')
    if n == 1:
        return True
    f = monic(f)
    q = f.field.order
    x = var_T(f.field)
    primes, _multiplicities = galois.factors(n)
    checkpoints = {n // int(rho) for rho in primes}
    x_qk = x
    for k in range(1, n + 1):
        x_qk = pow(x_qk, q, f)
        if k in checkpoints and deg(poly_gcd(x_qk - x, f)) > 0:
            return False
    return x_qk == x


def count_irreducibles(q, m):
    '''
    #S_m, the number of monic irreducibles of degree m over F_q, by Möbius inversion
    @example

    poly.count_irreducibles(5, 3)
    # => 40
    '''
    assert m >= 1, f'count_irreducibles needs m >= 1, got {m}'
    total = sum(math_util.mobius(m // d) * q ** d for d in galois.divisors(m))
    return total // m


def monic_matrix(GF, d, start=0, stop=None):
    '''
    Monic polynomials of degree d as rows of ascending coefficients, in enumeration order:
    index i holds the monic polynomial whose lower coefficients are the base-q digits of i,
    constant coefficient fastest-varying
    @returns {FieldArray} shape (stop - start, d + 1)
    '''
    q = GF.order
    stop = q ** d if stop is None else stop
    idxs = np.arange(start, stop, dtype=np.int64)
    digits = math_util.to_digits(idxs, q, d)
    leads = np.ones((len(idxs), 1), dtype=np.int64)
    return GF(np.hstack([digits, leads]))


def monic_at(GF, d, idx):
    '''The idx-th monic polynomial of degree d in enumeration order'''
    return from_asc(monic_matrix(GF, d, idx, idx + 1)[0], GF)


def enumerate_monic(GF, d):
    '''Generate every monic polynomial of degree d in enumeration order'''
    for idx in range(GF.order ** d):
        yield monic_at(GF, d, idx)


def convolve_rows(row, mat):
    '''Multiply the polynomial `row` (ascending) into every row of `mat` at once'''
    GF = type(mat)
    n, width = mat.shape
    out = GF.Zeros((n, len(row) + width - 1))
    for i, c in enumerate(row):
        if int(c) != 0:
            out[:, i:i + width] = out[:, i:i + width] + c * mat
    return out


@lru_cache(maxsize=None)
def irreducible_table(GF, m):
    '''
    Exact sieve over all monic polynomials of degree m: entry i tells whether monic_at(GF, m, i) is irreducible.
    Strikes out every product of a monic irreducible of degree d <= m/2 with a monic cofactor.
    @returns {np.ndarray} read-only boolean array of length q^m
    '''
    q = GF.order
    size = q ** m
    assert size <= SIEVE_GUARD, f'sieve of {size} polynomials exceeds guard {SIEVE_GUARD}'
    reducible = np.zeros(size, dtype=bool)
    weights = q ** np.arange(m, dtype=np.int64)
    for d in range(1, m // 2 + 1):
        factors = monic_matrix(GF, d)[irreducible_table(GF, d)]
        cofactors = monic_matrix(GF, m - d)
        for factor in factors:
            products = convolve_rows(factor, cofactors)
            idxs = to_ints(products[:, :m]) @ weights
            reducible[idxs] = True
    table = ~reducible
    table.flags.writeable = False
    logger.debug(f'Sieved degree {m} over GF({q}): {int(table.sum())} irreducible')
    return table


def irreducibles(GF, m):
    '''All monic irreducibles of degree m, in enumeration order'''
    rows = monic_matrix(GF, m)[irreducible_table(GF, m)]
    return [from_asc(row, GF) for row in rows]


def totient(h):
    '''
    Φ(h), the number of nonzero polynomials of degree < deg h coprime to h
    @example

    poly.totient(poly.from_asc([0, 0, 1], galois.GF(3)))  # T^2
    # => 6
    '''
    assert deg(h) >= 1, f'totient needs deg h >= 1, got {h}'
    q = h.field.order
    factors, multiplicities = monic(h).factors()
    phi = 1
    for factor, k in zip(factors, multiplicities):
        norm = q ** factor.degree
        phi *= norm ** k - norm ** (k - 1)
    return phi


# rational functions and valuations

class RationalFunction:
    '''
    Element num/den of F_q(T), canonicalized to coprime parts with monic denominator
    '''

    def __init__(self, num, den=None):
        GF = num.field
        den = const(1, GF) if den is None else den
        if is_zero(den):
            raise ZeroDivisionError('division by zero polynomial')
        if is_zero(num):
            num, den = num, const(1, GF)
        else:
            g = poly_gcd(num, den)
            num, den = num // g, den // g
            scale = const(lead(den) ** -1, GF)
            num, den = num * scale, den * scale
        self.num = num
        self.den = den
        self.field = GF

    @classmethod
    def one(cls, GF):
        return cls(const(1, GF))

    def is_zero(self):
        return is_zero(self.num)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError('division by zero')
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(to_asc(self.num)), tuple(to_asc(self.den))))

    def __repr__(self):
        if deg(self.den) == 0:
            return f'RationalFunction({format_poly(self.num)})'
        return f'RationalFunction(({format_poly(self.num)})/({format_poly(self.den)}))'

    def evaluate(self, x):
        '''Value at a FieldElement x; raises when the denominator vanishes'''
        return eval_at(self.num, x) / eval_at(self.den, x)


def valuation(g, P):
    '''
    v_P(g) = multiplicity of P in the numerator minus that in the denominator; v_P(0) = inf
    @param {RationalFunction} g
    @param {galois.Poly} P Monic irreducible
    '''
    if not is_irreducible(P):
        raise ValidationError(f'valuation needs an irreducible P, got {format_poly(P)}')
    if g.is_zero():
        return math.inf
    P = monic(P)
    return multiplicity(g.num, P) - multiplicity(g.den, P)


# text codec

def normalize_text(text):
    text = re.sub(r'\s+', '', str(text))
    return text.replace('\\alpha', 'a').replace('alpha', 'a').replace('α', 'a').replace('*', '').replace('{', '').replace('}', '')


def split_terms(text, var):
    '''
    Split polynomial text into (negative, coefficient text, exponent) triples.
    Coefficients may be parenthesized expressions, e.g. "(a+1)T^3+a" with var "T".
    '''
    text = normalize_text(text)
    if not text:
        raise ValidationError('empty polynomial text')
    terms, depth, start = [], 0, 0
    for idx, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch in '+-' and depth == 0 and idx > start:
            terms.append(text[start:idx])
            start = idx
    terms.append(text[start:])
    if depth != 0:
        raise ValidationError(f'unbalanced parentheses in {text!r}')

    parsed = []
    for term in terms:
        negative = term.startswith('-')
        term = term.lstrip('+-')
        if not term:
            raise ValidationError(f'malformed polynomial text {text!r}')
        coef, sep, rest = term.rpartition(var)
        if not sep:
            coef, exponent = term, 0
        elif rest == '':
            exponent = 1
        else:
            match = RE_EXP.fullmatch(rest)
            if match is None:
                raise ValidationError(f'malformed term {term!r} in {text!r}')
            exponent = int(match.group(1))
        if coef.startswith('(') and coef.endswith(')'):
            coef = coef[1:-1]
        parsed.append((negative, coef or '1', exponent))
    return parsed


def format_terms(terms, var):
    '''Render descending (coefficient text, exponent) pairs; coefficients equal to "1" are elided'''
    parts = []
    for coef, k in terms:
        if k == 0:
            parts.append(coef)
            continue
        mono = var if k == 1 else f'{var}^{k}'
        if coef == '1':
            parts.append(mono)
        elif '+' in coef or '-' in coef:
            parts.append(f'({coef}){mono}')
        else:
            parts.append(f'{coef}{mono}')
    return '+'.join(parts) or '0'


def _as_int(d, obj):
    '''Integer value of a JSON coefficient; bools, floats and other non-integers are rejected'''
    if isinstance(d, (bool, np.bool_)) or not (isinstance(d, (int, np.integer)) or (isinstance(d, np.ndarray) and d.ndim == 0 and np.issubdtype(d.dtype, np.integer))):
        raise ValidationError(f'non-integral F_q coefficient {d!r} in {obj!r}')
    return int(d)


def parse_fq(obj, GF):
    '''
    F_q element from an int (an F_p constant), an ascending list of e ints, or text in the generator a
    @example

    GF8 = galois.GF(2**3)
    poly.parse_fq('a^2+a', GF8) == poly.parse_fq([0, 1, 1], GF8)
    # => True
    '''
    p = GF.characteristic
    gen = GF(p) if GF.degree > 1 else None
    if isinstance(obj, (list, tuple)):
        digits = [(False, str(_as_int(d, obj)), k) for k, d in enumerate(obj)]
    elif isinstance(obj, str):
        text = normalize_text(obj)
        if 'a' in text and gen is None:
            raise ValidationError(f'generator a is undefined over prime field GF({p}): {obj!r}')
        digits = split_terms(text, 'a')
    else:
        return GF(_as_int(obj, obj) % p)

    value = GF(0)
    for negative, coef, k in digits:
        try:
            c = GF(int(coef) % p)
        except ValueError:
            raise ValidationError(f'malformed F_q coefficient {coef!r} in {obj!r}')
        if k > 0:
            if gen is None:
                raise ValidationError(f'generator a is undefined over prime field GF({p}): {obj!r}')
            c = c * gen ** k
        value = value - c if negative else value + c
    return value


def format_fq(c, GF):
    '''Text of an F_q element: an integer over F_p, else a polynomial in a'''
    if GF.degree == 1:
        return str(int(c))
    digits = math_util.to_digits([int(c)], GF.characteristic, GF.degree)[0]
    terms = [(str(int(d)), k) for k, d in reversed(list(enumerate(digits))) if d]
    return format_terms(terms, 'a')


def encode_fq(c, GF):
    '''Serialize an F_q element: int over F_p, ascending digit list of length e otherwise'''
    if GF.degree == 1:
        return int(c)
    return [int(d) for d in math_util.to_digits([int(c)], GF.characteristic, GF.degree)[0]]


def parse_poly(text, GF, var='T'):
    '''
    Polynomial over GF from text such as "T^9+4T^6+T^3+4" or "(a+1)T^3+a"
    @example

    h = poly.parse_poly('T^4+2', galois.GF(3))
    poly.to_asc(h)
    # => [2, 0, 0, 0, 1]
    '''
    coeffs = {}
    for negative, coef, k in split_terms(text, var):
        c = parse_fq(coef, GF)
        coeffs[k] = coeffs.get(k, GF(0)) + (-c if negative else c)
    if not coeffs:
        return const(0, GF)
    top = max(coeffs)
    return from_asc([coeffs.get(k, GF(0)) for k in range(top + 1)], GF)


def format_poly(f, var='T'):
    '''Text form of a polynomial, descending powers'''
    GF = f.field
    asc = to_asc(f)
    terms = [(format_fq(c, GF), k) for k, c in reversed(list(enumerate(asc))) if c]
    return format_terms(terms, var)


def coerce_poly(obj, GF, var='T'):
    '''Polynomial from a galois Poly, an ascending coefficient list, or text'''
    if isinstance(obj, galois.Poly):
        return obj
    if isinstance(obj, str):
        return parse_poly(obj, GF, var)
    if isinstance(obj, (list, tuple)):
        return from_asc([parse_fq(c, GF) for c in obj], GF)
    raise ValidationError(f'cannot read a polynomial from {obj!r}')


def encode_poly(f):
    '''Serialize a polynomial as its ascending coefficient array'''
    return [encode_fq(c, f.field) for c in f.coeffs[::-1]] if not is_zero(f) else []
