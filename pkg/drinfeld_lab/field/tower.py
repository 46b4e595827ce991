# The tower module
# Arithmetic for F_p ⊂ F_q ⊂ F_{q^m}. F_q is a galois field class; elements of F_{q^m}
# are coordinate vectors over F_q in the power basis {1, x̄, ..., x̄^{m-1}} of the defining modulus.
from drinfeld_lab.field import poly
from drinfeld_lab.lib import logger, math_util
from drinfeld_lab.lib.error import TowerMismatchError, ValidationError
from functools import lru_cache
import galois
import numpy as np

logger = logger.get_logger(__name__)


@lru_cache(maxsize=None)
def _cached_fq(p, e, fq_modulus):
    if e == 1:
        return galois.GF(p)
    modulus = galois.Poly(list(fq_modulus), field=galois.GF(p), order='asc')
    return galois.GF(p ** e, irreducible_poly=modulus)


def make_fq(p, e=1, fq_modulus=None):
    '''
    Make F_q = F_p[y]/(fq_modulus) as a galois field class, cached per modulus
    @param {int} p Prime characteristic
    @param {int} e Degree of F_q over F_p
    @param {list|str} fq_modulus Monic irreducible of degree e over F_p, ascending ints or text in a (or y); the galois default when absent
    @returns {type} The galois FieldArray class of F_q
    @example

    GF8 = tower.make_fq(2, 3, [1, 1, 0, 1])  # a^3+a+1
    '''
    if not galois.is_prime(p):
        raise ValidationError(f'p must be prime, got {p}')
    if e < 1:
        raise ValidationError(f'e must be >= 1, got {e}')
    if e == 1:
        return _cached_fq(p, 1, None)
    GFp = galois.GF(p)
    if fq_modulus is None:
        fq_modulus = poly.to_asc(galois.GF(p ** e).irreducible_poly)
    if isinstance(fq_modulus, str):
        var = 'y' if 'y' in fq_modulus else 'a'
        modulus = poly.parse_poly(fq_modulus, GFp, var=var)
    else:
        modulus = poly.coerce_poly(list(fq_modulus), GFp)
    if not (poly.is_monic(modulus) and modulus.degree == e and poly.is_irreducible(modulus)):
        raise ValidationError(f'fq_modulus must be monic irreducible of degree {e} over F_{p}, got {poly.to_asc(modulus)}')
    return _cached_fq(p, e, tuple(poly.to_asc(modulus)))


def make_fq_of_order(q, fq_modulus=None):
    '''Make F_q from its order q = p^e'''
    p, e = math_util.prime_power(q)
    return make_fq(p, e, fq_modulus)


def fq_from_spec(spec):
    '''Rebuild F_q from the (p, e, fq_modulus) triple of fq_spec'''
    p, e, fq_modulus = spec
    return _cached_fq(p, e, None if fq_modulus is None else tuple(fq_modulus))


def fq_spec(GF):
    '''Plain (p, e, fq_modulus) triple that rebuilds GF in another process'''
    fq_modulus = None if GF.degree == 1 else tuple(poly.to_asc(GF.irreducible_poly))
    return (GF.characteristic, GF.degree, fq_modulus)


def fq_rank(M):
    '''Rank over F_q of a matrix; 0 for an empty matrix'''
    if M.size == 0:
        return 0
    return int(np.linalg.matrix_rank(M))


class FieldTower:
    '''
    The tower F_p ⊂ F_q ⊂ F_{q^m} with a distinguished root z of P.

    Default mode takes fqm_modulus = P, so that z = x̄ is a root of P for free.
    Explicit mode takes any fqm_modulus together with z, and checks P(z) = 0.
    With neither P nor z the tower is plain arithmetic and z = x̄.
    '''

    def __init__(self, GF, fqm_modulus=None, P=None, z=None):
        self.GF = GF
        self.p = GF.characteristic
        self.e = GF.degree
        self.q = GF.order
        self.fq_modulus = fq_spec(GF)[2]
        if fqm_modulus is None:
            if P is None:
                raise ValidationError('a tower needs fqm_modulus or P')
            fqm_modulus = P
        modulus = poly.coerce_poly(fqm_modulus, GF, var='x')
        if not poly.is_monic(modulus) or not poly.is_irreducible(modulus):
            raise ValidationError(f'fqm_modulus must be monic irreducible over F_{self.q}, got {poly.format_poly(modulus, "x")}')
        self.fqm_modulus = modulus
        self.m = modulus.degree
        self.key = (self.p, self.e, self.fq_modulus, tuple(poly.to_asc(modulus)))
        self.var = 'a' if self.e == 1 else 'w'

        self.zero = FieldElement(self, GF.Zeros(self.m))
        self.one = self.from_fq(GF(1))
        self.gen = self.from_poly(poly.var_T(GF))
        self._frob_mats = {0: GF.Identity(self.m), 1: self._frobenius_matrix()}

        self.P = None if P is None else poly.coerce_poly(P, GF)
        if z is None:
            if self.P is not None and self.P != modulus:
                raise ValidationError('explicit tower mode needs z when fqm_modulus differs from P')
            self.z = self.gen
        else:
            self.z = self.decode(z)
        if self.P is not None and poly.eval_at(self.P, self.z):
            raise ValidationError(f'z is not a root of P = {poly.format_poly(self.P)}')

    @classmethod
    def default(cls, P):
        '''Default-mode tower over the coefficient field of P'''
        return cls(P.field, P=P)

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f'FieldTower(q={self.q}, m={self.m}, fqm_modulus={poly.format_poly(self.fqm_modulus, "x")})'

    def _frobenius_matrix(self):
        '''Matrix of x -> x^q: column j holds (x̄^q)^j'''
        x_q = self.gen ** self.q
        cols, col = [], self.one
        for _j in range(self.m):
            cols.append(col)
            col = col * x_q
        return self.expand_columns(cols)

    def frobenius_matrix(self, i):
        '''Matrix of x -> x^{q^i}, i reduced modulo m'''
        i = i % self.m
        if i not in self._frob_mats:
            self._frob_mats[i] = self._frob_mats[1] @ self.frobenius_matrix(i - 1)
        return self._frob_mats[i]

    def check(self, x):
        if not isinstance(x, FieldElement) or x.tower.key != self.key:
            raise TowerMismatchError()
        return x

    # constructors

    def from_vec(self, vec):
        return FieldElement(self, self.GF(vec))

    def from_poly(self, f):
        '''Residue class of a polynomial over F_q modulo fqm_modulus'''
        r = f % self.fqm_modulus
        vec = self.GF.Zeros(self.m)
        coeffs = r.coeffs[::-1]
        vec[:len(coeffs)] = coeffs
        return FieldElement(self, vec)

    def from_fq(self, c):
        vec = self.GF.Zeros(self.m)
        vec[0] = c
        return FieldElement(self, vec)

    def basis(self, j):
        '''Power basis element x̄^j'''
        vec = self.GF.Zeros(self.m)
        vec[j] = 1
        return FieldElement(self, vec)

    def random(self, rng):
        return self.from_vec(rng.integers(0, self.q, self.m))

    def elements(self):
        '''Every element of F_{q^m}, in integer-index order (small towers only)'''
        for digits in math_util.to_digits(np.arange(self.q ** self.m), self.q, self.m):
            yield self.from_vec(digits)

    # linear algebra over F_q

    def expand_columns(self, v):
        '''m x n matrix over F_q whose column j holds the coordinates of v[j]'''
        if len(v) == 0:
            return self.GF.Zeros((self.m, 0))
        cols = [poly.to_ints(self.check(x).vec) for x in v]
        return self.GF(np.stack(cols, axis=1))

    def from_columns(self, M):
        '''Inverse of expand_columns'''
        return [self.from_vec(M[:, j]) for j in range(M.shape[1])]

    def mul_matrix(self, y):
        '''Matrix over F_q of x -> y x'''
        return self.expand_columns([y * self.basis(j) for j in range(self.m)])

    # codec

    def encode(self, x):
        '''Serialize as an ascending array of m F_q elements'''
        return [poly.encode_fq(c, self.GF) for c in self.check(x).vec]

    def decode(self, obj):
        '''Element from an ascending array of m F_q elements, or text in the generator'''
        if isinstance(obj, FieldElement):
            return self.check(obj)
        if isinstance(obj, str):
            return self.parse(obj)
        if not isinstance(obj, (list, tuple)) or len(obj) != self.m:
            raise ValidationError(f'F_{self.q}^{self.m} element must be an array of {self.m} F_q elements, got {obj!r}')
        return FieldElement(self, self.GF([int(poly.parse_fq(c, self.GF)) for c in obj]))

    def parse(self, text):
        '''Element from text such as "3a^8+2a^7+a+2" (generator a when e = 1, w otherwise)'''
        return self.from_poly(poly.parse_poly(text, self.GF, var=self.var))

    def format(self, x):
        return poly.format_poly(self.check(x).as_poly(), var=self.var)

    def to_dict(self):
        return {
            'p': self.p,
            'e': self.e,
            'fq_modulus': None if self.fq_modulus is None else list(self.fq_modulus),
            'm': self.m,
            'fqm_modulus': poly.encode_poly(self.fqm_modulus),
            'z': self.encode(self.z),
        }


class FieldElement:
    '''Immutable element of F_{q^m} in a FieldTower'''
    __slots__ = ('tower', 'vec')

    def __init__(self, tower, vec):
        self.tower = tower
        self.vec = vec

    @property
    def coeffs(self):
        return tuple(int(c) for c in self.vec)

    def as_poly(self):
        return poly.from_asc(self.vec, self.tower.GF)

    def is_zero(self):
        return not np.any(self.vec)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.tower.key == other.tower.key and np.array_equal(self.vec, other.vec)

    def __hash__(self):
        return hash((self.tower.key, self.coeffs))

    def __repr__(self):
        return self.tower.format(self)

    def __add__(self, other):
        self.tower.check(other)
        return FieldElement(self.tower, self.vec + other.vec)

    def __sub__(self, other):
        self.tower.check(other)
        return FieldElement(self.tower, self.vec - other.vec)

    def __neg__(self):
        return FieldElement(self.tower, -self.vec)

    def __mul__(self, other):
        self.tower.check(other)
        return self.tower.from_poly(self.as_poly() * other.as_poly())

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError('division by zero')
        d, s, _t = galois.egcd(self.as_poly(), self.tower.fqm_modulus)
        return self.tower.from_poly(s * poly.const(poly.lead(d) ** -1, self.tower.GF))

    def __truediv__(self, other):
        self.tower.check(other)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.tower.one
        return self.tower.from_poly(pow(self.as_poly(), n, self.tower.fqm_modulus))

    def scale(self, c):
        '''Product with an F_q scalar'''
        return FieldElement(self.tower, self.vec * self.tower.GF(int(c)))

    def frobenius(self, i=1):
        '''x^{q^i}, an F_q-linear automorphism'''
        assert i >= 0, f'frobenius needs i >= 0, got {i}'
        return FieldElement(self.tower, self.tower.frobenius_matrix(i) @ self.vec)

    def norm(self):
        '''Nr(x) = prod_{i<m} x^{q^i}, returned as an F_q scalar'''
        result = self.tower.one
        for i in range(self.tower.m):
            result = result * self.frobenius(i)
        assert not np.any(result.vec[1:]), f'norm of {self} left F_q'
        return result.vec[0]
