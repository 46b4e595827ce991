# The carlitz module
# Rank-1 Drinfeld modules φ_T = T + gτ reduced modulo P (the Carlitz module when g = 1),
# their torsion spaces inside F_{q^m}, good reduction and the reciprocity predicate.
from drinfeld_lab.field import poly
from drinfeld_lab.field.poly import RationalFunction
from drinfeld_lab.field.tower import FieldTower, fq_rank
from drinfeld_lab.field.twisted import TwistedPoly, kernel_basis
from drinfeld_lab.lib import logger
from drinfeld_lab.lib.error import ConstructionError, DirectSumError, InseparableError, ValidationError
import functools

logger = logger.get_logger(__name__)


def check_good_reduction(g, P):
    '''
    Whether φ_T = T + gτ has good reduction at P: v_P(g) = 0 and v_P(T) >= 0, the latter always true
    @param {RationalFunction} g
    @param {galois.Poly} P Monic irreducible
    @returns {bool}
    @example

    carlitz.check_good_reduction(RationalFunction.one(GF), P)
    # => True
    '''
    return poly.valuation(g, P) == 0


class TorsionSpace:
    '''
    φ̄[a] inside F_{q^m}: an F_q-basis of the kernel of ι(φ̄_a)
    '''

    def __init__(self, module, a, basis):
        self.module = module
        self.a = a
        self.basis = list(basis)
        self.dim = len(self.basis)
        assert fq_rank(module.tower.expand_columns(self.basis)) == self.dim, 'torsion basis is not F_q-independent'

    @property
    def is_rational(self):
        '''Whether the whole a-torsion lies in F_{q^m}, i.e. dim = deg a'''
        return self.dim == poly.deg(self.a)

    def contains(self, x):
        return self.module.phi_of(self.a).evaluate(x).is_zero()

    def is_submodule(self, b):
        '''Whether φ̄_b maps the torsion into itself (the F_q[T]-module structure)'''
        phi_b = self.module.phi_of(b)
        return all(self.contains(phi_b.evaluate(beta)) for beta in self.basis)

    def __repr__(self):
        return f'TorsionSpace(a={poly.format_poly(self.a)}, dim={self.dim})'


class ReducedCarlitz:
    '''
    The reduction φ̄ of φ^(g) at P, living on the tower F_q ⊂ F_{q^m} = F_P:
    φ̄_T = z + ḡτ, with z the root of P and ḡ = g mod P (ḡ = 1 for the Carlitz module).
    '''
    rank = 1

    def __init__(self, tower, g_bar=None):
        g_bar = tower.one if g_bar is None else tower.check(g_bar)
        if g_bar.is_zero():
            raise ConstructionError('bad reduction: g vanishes modulo P')
        self.tower = tower
        self.g_bar = g_bar
        self.phiT = TwistedPoly(tower, [tower.z, g_bar])
        assert self.phiT.degree == self.rank, f'φ_T must have τ-degree {self.rank}'
        self._phi_cache = {}

    @classmethod
    def from_rational(cls, tower, g):
        '''Reduce φ^(g) for g in F_q(T) modulo the P of the tower'''
        if tower.P is None:
            raise ValidationError('reduction needs a tower carrying P')
        if not check_good_reduction(g, tower.P):
            raise ConstructionError(f'{g} has bad reduction at P = {poly.format_poly(tower.P)}')
        return cls(tower, g.evaluate(tower.z))

    def __repr__(self):
        return f'ReducedCarlitz(phiT={self.phiT})'

    def _phi_of_asc(self, asc):
        if asc in self._phi_cache:
            return self._phi_cache[asc]
        tower = self.tower
        result = TwistedPoly.zero(tower)
        for c in reversed(asc):
            result = result * self.phiT + TwistedPoly.constant(tower, tower.from_fq(tower.GF(c)))
        self._phi_cache[asc] = result
        return result

    def phi_of(self, a):
        '''
        φ̄_a = sum_i a_i φ̄_T^i by Horner inside the twisted ring; τ-degree deg a and τ^0-coefficient a(z)
        @param {galois.Poly|str|list} a Element of F_q[T]
        @returns {TwistedPoly}
        '''
        a = poly.coerce_poly(a, self.tower.GF)
        return self._phi_of_asc(tuple(poly.to_asc(a)))

    def division_constant(self, a):
        '''Coefficient of x in ι(φ̄_a), equal to a(z)'''
        return self.phi_of(a).coeff(0)

    def torsion_space(self, a):
        '''
        φ̄[a] as a TorsionSpace; a dimension below deg a is reported as "torsion not rational"
        '''
        a = poly.coerce_poly(a, self.tower.GF)
        if poly.deg(a) < 1:
            raise ValidationError(f'torsion needs deg a >= 1, got {poly.format_poly(a)}')
        if poly.eval_at(a, self.tower.z).is_zero():
            raise InseparableError()
        space = TorsionSpace(self, a, kernel_basis(self.phi_of(a)))
        if not space.is_rational:
            logger.warning(f'torsion not rational: dim φ̄[{poly.format_poly(a)}] = {space.dim} < {poly.deg(a)}')
        return space

    def torsion_direct_sum(self, factors):
        '''
        Concatenate the torsion bases of pairwise coprime factors and check they form a basis of φ̄[prod factors]
        '''
        factors = [poly.coerce_poly(f, self.tower.GF) for f in factors]
        assert factors, 'torsion_direct_sum needs at least one factor'
        for i, f in enumerate(factors):
            for g in factors[i + 1:]:
                if poly.deg(poly.poly_gcd(f, g)) > 0:
                    raise ValidationError(f'factors {poly.format_poly(f)} and {poly.format_poly(g)} are not coprime')
        spaces = [self.torsion_space(f) for f in factors]
        if len(spaces) == 1:
            return spaces[0]
        basis = [beta for space in spaces for beta in space.basis]
        product = functools.reduce(lambda x, y: x * y, factors)
        if fq_rank(self.tower.expand_columns(basis)) != len(basis):
            raise DirectSumError()
        whole = self.torsion_space(product)
        if whole.dim != len(basis):
            raise DirectSumError(f'direct sum violated: factors give {len(basis)} of dim {whole.dim}')
        return TorsionSpace(self, product, basis)


def reciprocity_predicate(P, h, g=None):
    '''
    P ≡ Nr(ḡ) mod h, with the norm embedded as a constant polynomial. For g = 1 this is P ≡ 1 mod h,
    which holds iff P splits completely in the h-division field.
    @param {galois.Poly} P Monic irreducible
    @param {galois.Poly} h Nonconstant, v_P(h) = 0
    @param {RationalFunction} g Defaults to 1, v_P(g) = 0
    @returns {bool}
    '''
    GF = P.field
    if not poly.is_monic(P) or not poly.is_irreducible(P):
        raise ValidationError(f'P must be monic irreducible, got {poly.format_poly(P)}')
    if poly.deg(h) < 1:
        raise ValidationError(f'h must be nonconstant, got {poly.format_poly(h)}')
    g = RationalFunction.one(GF) if g is None else g
    if poly.valuation(g, P) != 0:
        raise ValidationError('reciprocity needs v_P(g) = 0')
    if poly.valuation(RationalFunction(h), P) != 0:
        raise ValidationError('reciprocity needs v_P(h) = 0')
    tower = FieldTower.default(P)
    norm = g.evaluate(tower.z).norm()
    return (P % h) == poly.const(norm, GF)
