# The twisted module
# The skew ring F_{q^m}{τ} with τc = c^q τ, and its image under ι, the q-linearized polynomials
# sum c_i x^{q^i} under composition. Both store ascending coefficient tuples of FieldElement.
from drinfeld_lab.field import poly
from drinfeld_lab.lib import logger
from drinfeld_lab.lib.error import ValidationError
import math

logger = logger.get_logger(__name__)


class _TauStore:
    '''Shared storage, addition and evaluation for twisted and linearized polynomials'''

    def __init__(self, tower, coeffs=()):
        coeffs = [tower.check(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.tower = tower
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, tower):
        return cls(tower)

    @classmethod
    def constant(cls, tower, c):
        return cls(tower, [c])

    @classmethod
    def monomial(cls, tower, c, i):
        '''c τ^i, resp. c x^{q^i}'''
        return cls(tower, [tower.zero] * i + [c])

    @property
    def degree(self):
        '''τ-degree (q-degree); -1 for zero'''
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.tower.zero

    def _like(self, coeffs):
        return type(self)(self.tower, coeffs)

    def _check(self, other):
        if not isinstance(other, _TauStore):
            raise TypeError(f'expected a twisted or linearized polynomial, got {type(other).__name__}')
        self.tower.check(other.tower.one)

    def __add__(self, other):
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return self._like([self.coeff(i) + other.coeff(i) for i in range(size)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, _TauStore):
            return NotImplemented
        return type(self) is type(other) and self.tower == other.tower and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.tower.key, self.coeffs))

    def scale(self, c):
        '''Left product c·f by an F_{q^m} element'''
        return self._like([c * a for a in self.coeffs])

    def evaluate(self, x):
        '''sum_i c_i x^{q^i}; F_q-linear in x'''
        self.tower.check(x)
        result = self.tower.zero
        for i, c in enumerate(self.coeffs):
            if c:
                result = result + c * x.frobenius(i)
        return result

    def __call__(self, x):
        return self.evaluate(x)

    def twisted_product(self, other):
        '''
        Bilinear extension of (a τ^i)(b τ^j) = a b^{q^i} τ^{i+j}
        '''
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self._like([])
        out = [self.tower.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b.frobenius(i)
        return self._like(out)

    def encode(self):
        return [self.tower.encode(c) for c in self.coeffs]

    def matrix(self):
        '''m x m matrix over F_q of x -> evaluate(x) in the power basis'''
        tower = self.tower
        return tower.expand_columns([self.evaluate(tower.basis(j)) for j in range(tower.m)])


class TwistedPoly(_TauStore):
    '''
    Element sum_i c_i τ^i of F_{q^m}{τ}; the product is the twisted product
    @example

    phiT = TwistedPoly(tower, [tower.z, tower.one])  # z + τ
    phiT * phiT
    # => z^2 + (z + z^q)τ + τ^2
    '''

    @classmethod
    def tau(cls, tower, i=1):
        return cls.monomial(tower, tower.one, i)

    def __mul__(self, other):
        return self.twisted_product(other)

    def power(self, k):
        result = TwistedPoly.constant(self.tower, self.tower.one)
        for _i in range(k):
            result = result * self
        return result

    def to_linearized(self):
        '''ι: c τ^i -> c x^{q^i}'''
        return LinearizedPoly(self.tower, self.coeffs)

    def __repr__(self):
        terms = [(self.tower.format(c), i) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return poly.format_terms(terms, 'τ')


class LinearizedPoly(_TauStore):
    '''
    q-linearized polynomial sum_i c_i x^{q^i}; composition corresponds to the twisted product under ι
    '''

    def compose(self, other):
        '''(self ∘ other)(x) = self(other(x))'''
        return self.twisted_product(other)

    def to_twisted(self):
        return TwistedPoly(self.tower, self.coeffs)

    @classmethod
    def parse(cls, tower, text):
        '''
        Linearized polynomial from text such as "(3a+2)x^5+(4a^2+4a+1)x"; every exponent must be a power of q
        '''
        coeffs = {}
        for negative, coef, k in poly.split_terms(text, 'x'):
            i = round(math.log(k, tower.q)) if k >= 1 else -1
            if k < 1 or tower.q ** i != k:
                raise ValidationError(f'exponent {k} in {text!r} is not a power of q = {tower.q}')
            c = tower.parse(coef)
            coeffs[i] = coeffs.get(i, tower.zero) + (-c if negative else c)
        size = max(coeffs) + 1 if coeffs else 0
        return cls(tower, [coeffs.get(i, tower.zero) for i in range(size)])

    def __repr__(self):
        q = self.tower.q
        terms = [(self.tower.format(c), q ** i) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return poly.format_terms(terms, 'x')


def kernel_basis(f):
    '''
    F_q-basis of {x in F_{q^m} : f(x) = 0}, as the null space of the m x m matrix of f over F_q.
    Rows come back in reduced row-echelon order, so the basis is deterministic.
    @param {TwistedPoly|LinearizedPoly} f Nonzero
    @returns {list} FieldElement basis, possibly empty
    '''
    if f.is_zero():
        raise ValidationError('kernel is the whole space')
    null = f.matrix().null_space()
    basis = [f.tower.from_vec(row) for row in null]
    logger.debug(f'Kernel of degree-{f.degree} map has dimension {len(basis)}')
    return basis
