# The construction module
# Rank-metric codes with rank-locality (r, δ) from the torsion of the reduced Carlitz module:
# messages f = sum_k g_k φ̄_{T^R}^k with τ-deg g_k < r are evaluated at bases of the torsion spaces
# φ̄[T^R - a_i], one locality group per a_i.
from drinfeld_lab.code import gabidulin
from drinfeld_lab.drinfeld.carlitz import ReducedCarlitz
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import FieldTower, fq_rank, fq_spec, make_fq
from drinfeld_lab.field.twisted import LinearizedPoly, TwistedPoly
from drinfeld_lab.lib import logger, util
from drinfeld_lab.lib.decorator import lab_api
from drinfeld_lab.lib.error import (
    ConstructionError, DirectSumError, InsufficientSurvivorsError, NoPrimeFoundError, ValidationError)
from drinfeld_lab.search import dirichlet
import functools
import itertools
import math
import numpy as np
import pydash as ps

logger = logger.get_logger(__name__)


def construction_modulus(GF, R, a):
    '''h = prod_i (T^R - a_i) over F_q'''
    T_R = poly.from_asc([0] * R + [1], GF)
    factors = [T_R - poly.const(a_i, GF) for a_i in a]
    return functools.reduce(lambda x, y: x * y, factors), factors


class CodeParams:
    '''
    Parameters (q, r, δ, ℓ, s, a, m) of the construction with optional P, explicit tower and bases.
    Derived: R = r + δ - 1, h = prod (T^R - a_i), k = (s+1)r, n = ℓR, d = ℓR - Rs - r + 1.
    '''

    def __init__(self, params):
        params = dict(params)
        util.set_attr(self, dict(
            fq_modulus=None,
            m_max=None,
            P=None,
            fqm_modulus=None,
            z=None,
            bases=None,
        ))
        util.set_attr(self, params, [
            'p', 'e', 'fq_modulus', 'r', 'delta', 'ell', 's', 'm', 'm_max', 'P', 'fqm_modulus', 'z', 'bases'])
        for key in ('p', 'e', 'r', 'delta', 'ell', 's', 'm'):
            if not isinstance(getattr(self, key, None), int):
                raise ValidationError(f'params field {key} must be an integer, got {params.get(key)!r}')
        self.m_max = self.m if self.m_max is None else self.m_max
        self.GF = make_fq(self.p, self.e, self.fq_modulus)
        self.q = self.GF.order
        self.R = self.r + self.delta - 1
        self.a = [poly.parse_fq(a_i, self.GF) for a_i in params.get('a', [])]
        self.k = (self.s + 1) * self.r
        self.n = self.ell * self.R
        self.d = self.n - self.R * self.s - self.r + 1
        if self.P is not None:
            self.P = poly.coerce_poly(self.P, self.GF)
        self.h, self.factors = (None, []) if not self.a else construction_modulus(self.GF, self.R, self.a)

    def __repr__(self):
        return f'CodeParams(q={self.q}, r={self.r}, delta={self.delta}, ell={self.ell}, s={self.s}, m={self.m})'

    def validate(self, strict=False):
        '''
        Check gcd(q, R) = 1, (s+1)r < ℓR, s+1 <= ℓ < q, ℓR <= m, δ >= 2, distinct nonzero a_i;
        strict additionally requires δ < R. A given P must be monic irreducible of degree m with P ≡ 1 mod h.
        '''
        if self.r < 1 or self.s < 0:
            raise ValidationError(f'need r >= 1 and s >= 0, got r = {self.r}, s = {self.s}')
        if self.delta < 2:
            raise ValidationError(f'need delta >= 2, got {self.delta}')
        if math.gcd(self.q, self.R) != 1:
            raise ValidationError(f'gcd(q, R) = gcd({self.q}, {self.R}) must be 1')
        if not self.k < self.n:
            raise ValidationError(f'need (s+1)r < ℓR, got {self.k} >= {self.n}')
        if not self.s + 1 <= self.ell < self.q:
            raise ValidationError(f'need s+1 <= ℓ < q, got s = {self.s}, ℓ = {self.ell}, q = {self.q}')
        if not self.n <= self.m:
            raise ValidationError(f'need ℓR <= m, got ℓR = {self.n}, m = {self.m}')
        if self.m_max < self.m:
            raise ValidationError(f'need m_max >= m, got m_max = {self.m_max}, m = {self.m}')
        if len(self.a) != self.ell:
            raise ValidationError(f'need ℓ = {self.ell} values a_i, got {len(self.a)}')
        ints = [int(a_i) for a_i in self.a]
        if 0 in ints or len(set(ints)) != len(ints):
            raise ValidationError(f'a_i must be distinct and nonzero, got {[poly.format_fq(a_i, self.GF) for a_i in self.a]}')
        if strict and not self.delta < self.R:
            raise ValidationError(f'strict mode needs 2 <= δ < R, got δ = {self.delta}, R = {self.R}')
        if self.P is not None:
            if not (poly.is_monic(self.P) and self.P.degree == self.m and poly.is_irreducible(self.P)):
                raise ValidationError(f'P must be monic irreducible of degree m = {self.m}, got {poly.format_poly(self.P)}')
            if self.P % self.h != poly.const(1, self.GF):
                raise ValidationError(f'P must be ≡ 1 mod h = {poly.format_poly(self.h)}')
        return True

    def contract(self):
        '''(m x ℓR, m(s+1)r, ℓR - Rs - r + 1, r, δ): matrix shape, F_q-dimension, rank distance and locality'''
        return {
            'shape': [self.m, self.n],
            'dimension': self.m * self.k,
            'distance': self.d,
            'r': self.r,
            'delta': self.delta,
        }

    def to_dict(self):
        return {
            'p': self.p,
            'e': self.e,
            'fq_modulus': None if self.e == 1 else list(fq_spec(self.GF)[2]),
            'r': self.r,
            'delta': self.delta,
            'ell': self.ell,
            's': self.s,
            'a': [poly.encode_fq(a_i, self.GF) for a_i in self.a],
            'm': self.m,
        }


class Message:
    '''
    Blocks g_0, ..., g_s of F_{q^m}{τ}, each of τ-degree < r
    '''

    def __init__(self, tower, blocks):
        self.tower = tower
        self.blocks = [block if isinstance(block, TwistedPoly) else block.to_twisted() for block in blocks]

    @classmethod
    def from_obj(cls, tower, obj):
        '''Blocks from a list of linearized text ("x+ax^5") or ascending element arrays'''
        if ps.is_dict(obj):
            obj = obj.get('blocks')
        if not ps.is_list(obj):
            raise ValidationError(f'message must be a list of blocks, got {obj!r}')
        blocks = []
        for block in obj:
            if isinstance(block, str):
                blocks.append(LinearizedPoly.parse(tower, block).to_twisted())
            else:
                blocks.append(TwistedPoly(tower, [tower.decode(c) for c in block]))
        return cls(tower, blocks)

    @classmethod
    def zero(cls, code):
        return cls(code.tower, [TwistedPoly.zero(code.tower)] * (code.params.s + 1))

    @classmethod
    def random(cls, code, rng):
        tower = code.tower
        return cls(tower, [TwistedPoly(tower, [tower.random(rng) for _j in range(code.params.r)]) for _k in range(code.params.s + 1)])

    def __add__(self, other):
        return Message(self.tower, [f + g for f, g in zip(self.blocks, other.blocks)])

    def scale(self, c):
        '''c·message for c in F_{q^m} acting on the left of every block'''
        return Message(self.tower, [block.scale(c) for block in self.blocks])

    def __eq__(self, other):
        return isinstance(other, Message) and self.blocks == other.blocks

    def __repr__(self):
        return f'Message({[str(block.to_linearized()) for block in self.blocks]})'

    def to_dict(self):
        return {'blocks': [block.encode() for block in self.blocks]}


class Codeword:
    '''
    Evaluations (f(β_1^{(1)}), ..., f(β_R^{(ℓ)})) in group-major order; None marks an erased entry
    '''

    def __init__(self, code, entries):
        self.code = code
        self.entries = [None if x is None else code.tower.check(x) for x in entries]
        assert len(self.entries) == code.params.n, f'codeword needs {code.params.n} entries, got {len(self.entries)}'

    @property
    def erased(self):
        '''1-based indices of erased entries'''
        return [t + 1 for t, x in enumerate(self.entries) if x is None]

    def is_complete(self):
        return not self.erased

    def erase(self, columns):
        '''Copy with the given 1-based columns erased'''
        for col in columns:
            if not 1 <= col <= len(self.entries):
                raise ValidationError(f'column {col} out of range 1..{len(self.entries)}')
        columns = set(columns)
        entries = [None if t + 1 in columns else x for t, x in enumerate(self.entries)]
        return Codeword(self.code, entries)

    def _check_complete(self):
        if not self.is_complete():
            raise ValidationError(f'erased entries present at columns {self.erased}')

    def matrix(self):
        '''m x ℓR matrix over F_q, column t holding the coordinates of entry t'''
        self._check_complete()
        return self.code.tower.expand_columns(self.entries)

    def __add__(self, other):
        self._check_complete()
        other._check_complete()
        return Codeword(self.code, [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_complete()
        other._check_complete()
        return Codeword(self.code, [x - y for x, y in zip(self.entries, other.entries)])

    def scale(self, c):
        self._check_complete()
        return Codeword(self.code, [c * x for x in self.entries])

    def __eq__(self, other):
        return isinstance(other, Codeword) and self.entries == other.entries

    def __repr__(self):
        return f'Codeword({["*" if x is None else str(x) for x in self.entries]})'

    def encode(self):
        return [None if x is None else self.code.tower.encode(x) for x in self.entries]


class CodeInstance:
    '''
    A built code: params, the tower F_q ⊂ F_{q^m}, the reduced Carlitz module,
    the ℓ x R torsion bases and the group-major locality sets
    '''

    def __init__(self, params, tower, module, bases):
        self.params = params
        self.tower = tower
        self.module = module
        self.bases = [list(group) for group in bases]
        self.points = [beta for group in self.bases for beta in group]
        R = params.R
        self.locality_sets = [[i * R + j + 1 for j in range(R)] for i in range(params.ell)]
        self.phi_TR = module.phi_of(poly.from_asc([0] * R + [1], tower.GF))
        self._generator_matrix = None
        logger.info(f'Code built: {util.to_json(params.contract())}')

    def __repr__(self):
        return f'CodeInstance({self.params}, {self.tower})'

    def _check_message(self, msg):
        p = self.params
        if len(msg.blocks) != p.s + 1:
            raise ValidationError(f'message needs s+1 = {p.s + 1} blocks, got {len(msg.blocks)}')
        for k, block in enumerate(msg.blocks):
            self.tower.check(block.tower.one)
            if block.degree >= p.r:
                raise ValidationError(f'block degree overflow: g_{k} has τ-degree {block.degree} >= r = {p.r}')

    def message_poly(self, msg):
        '''f = sum_k g_k φ̄_{T^R}^k, by Horner in the twisted ring'''
        self._check_message(msg)
        f = msg.blocks[-1]
        for block in reversed(msg.blocks[:-1]):
            f = f * self.phi_TR + block
        return f

    @lab_api
    def encode(self, msg):
        '''
        Evaluate f = sum_k g_k φ̄_{T^R}^k at every torsion basis element
        @param {Message} msg
        @returns {Codeword}
        '''
        f = self.message_poly(msg)
        return Codeword(self, [f.evaluate(beta) for beta in self.points])

    @lab_api
    def restriction(self, msg, i):
        '''
        f restricted to φ̄[T^R - a_i] as the linearized polynomial sum_k a_i^k g_k, of q-degree < r
        @param {int} i 1-based group index
        '''
        if not 1 <= i <= self.params.ell:
            raise ValidationError(f'group index {i} out of range 1..{self.params.ell}')
        self._check_message(msg)
        tower = self.tower
        a_i = self.params.a[i - 1]
        result = TwistedPoly.zero(tower)
        for k, block in enumerate(msg.blocks):
            result = result + block.scale(tower.from_fq(a_i ** k))
        return result.to_linearized()

    def _group_fill(self, entries, survivors, erased):
        points = [self.points[t] for t in survivors]
        values = [entries[t] for t in survivors]
        local = gabidulin.interpolate_linearized(points, values, self.params.r)
        return {t: local.evaluate(self.points[t]) for t in erased}

    @lab_api
    def recover(self, word, check_subsets=False):
        '''
        Repair erasures group by group: interpolate the local polynomial through the first r survivors
        and re-evaluate at the erased torsion points. check_subsets demands every r-subset of survivors agrees.
        @param {Codeword} word With at most δ - 1 erasures per group
        @returns {Codeword} Complete codeword
        '''
        r = self.params.r
        entries = list(word.entries)
        for i, cols in enumerate(self.locality_sets):
            idxs = [c - 1 for c in cols]
            erased = [t for t in idxs if entries[t] is None]
            survivors = [t for t in idxs if entries[t] is not None]
            if len(survivors) < r:
                raise InsufficientSurvivorsError(f'insufficient survivors in group {i + 1}: {len(survivors)} < r = {r}')
            if not erased:
                continue
            fill = self._group_fill(entries, survivors[:r], erased)
            if check_subsets:
                for subset in itertools.combinations(survivors, r):
                    if self._group_fill(entries, list(subset), erased) != fill:
                        raise ValidationError(f'survivor subsets of group {i + 1} disagree: not a codeword')
            for t, x in fill.items():
                entries[t] = x
            logger.debug(f'Recovered columns {[t + 1 for t in erased]} of group {i + 1}')
        return Codeword(self, entries)

    @lab_api
    def rank_distance(self, A, B):
        '''d_R(A, B) = rank over F_q of the matrix expansion of A - B'''
        return fq_rank((A - B).matrix())

    def rank_weight(self, A):
        return fq_rank(A.matrix())

    def generator_matrix(self):
        '''
        F_q generator matrix of the code, one row per F_q-basis message x̄^t τ^j in block k,
        row index (k·r + j)·m + t; a codeword is its m x ℓR matrix flattened row-major
        @returns {FieldArray} shape (m(s+1)r, m·ℓR)
        '''
        if self._generator_matrix is not None:
            return self._generator_matrix
        p, tower = self.params, self.tower
        images = list(self.points)
        rows = []
        for _k in range(p.s + 1):
            for j in range(p.r):
                frob = [y.frobenius(j) for y in images]
                for t in range(tower.m):
                    rows.append(poly.to_ints(tower.expand_columns([tower.basis(t) * y for y in frob])).reshape(-1))
            images = [self.phi_TR.evaluate(y) for y in images]
        self._generator_matrix = tower.GF(np.stack(rows))
        return self._generator_matrix

    def local_generator(self, i):
        '''F_q generator matrix of the local code on group i (1-based)'''
        return gabidulin.gabidulin_generator(self.bases[i - 1], self.params.r)

    def to_dict(self):
        tower = self.tower
        return {
            'format': 'code',
            'params': self.params.to_dict(),
            'P': poly.encode_poly(tower.P),
            'fqm_modulus': poly.encode_poly(tower.fqm_modulus),
            'z': tower.encode(tower.z),
            'bases': [[tower.encode(beta) for beta in group] for group in self.bases],
            'locality_sets': self.locality_sets,
        }

    @classmethod
    def from_dict(cls, d, strict=False):
        '''Rebuild a code from a CodeFile dict, revalidating the stored bases'''
        if d.get('format') != 'code':
            raise ValidationError(f'code file needs format "code", got {d.get("format")!r}')
        for key in ('params', 'P', 'fqm_modulus', 'z', 'bases'):
            if key not in d:
                raise ValidationError(f'code file is missing field {key}')
        params = {**d['params'], 'P': d['P'], 'fqm_modulus': d['fqm_modulus'], 'z': d['z'], 'bases': d['bases']}
        params['m'] = len(d['P']) - 1
        code = build_code(params, strict=strict)
        if 'locality_sets' in d and d['locality_sets'] != code.locality_sets:
            raise ValidationError(f'code file locality_sets {d["locality_sets"]} differ from group-major {code.locality_sets}')
        return code


def _find_modulus(params):
    report = dirichlet.find_smallest_degree(params.h, params.m, params.m_max, poly.const(1, params.GF))
    if report.found is None:
        raise NoPrimeFoundError(f'no monic irreducible P ≡ 1 mod {poly.format_poly(params.h)} of degree {params.m}..{params.m_max}')
    logger.info(f'Using P = {poly.format_poly(report.found)} of degree {report.m}')
    return report.found


def _explicit_bases(params, module):
    '''Decode ℓ x R given bases and check each group spans φ̄[T^R - a_i] and the union is independent'''
    tower = module.tower
    if not (ps.is_list(params.bases) and len(params.bases) == params.ell):
        raise ValidationError(f'bases must be an ℓ x R array with ℓ = {params.ell}')
    bases = []
    for i, (group, factor) in enumerate(zip(params.bases, params.factors)):
        if not (ps.is_list(group) and len(group) == params.R):
            raise ValidationError(f'bases[{i}] must hold R = {params.R} elements')
        group = [tower.decode(beta) for beta in group]
        phi = module.phi_of(factor)
        for j, beta in enumerate(group):
            if not phi.evaluate(beta).is_zero():
                raise ValidationError(f'bases[{i}][{j}] = {beta} is not in φ̄[{poly.format_poly(factor)}]')
        if fq_rank(tower.expand_columns(group)) != params.R:
            raise ValidationError(f'bases[{i}] is not F_q-independent')
        bases.append(group)
    if fq_rank(tower.expand_columns([beta for group in bases for beta in group])) != params.n:
        raise DirectSumError()
    return bases


def _torsion_bases(params, module):
    bases = []
    for factor in params.factors:
        space = module.torsion_space(factor)
        if space.dim != params.R:
            raise ConstructionError(f'construction broken, P invalid: dim φ̄[{poly.format_poly(factor)}] = {space.dim} != R = {params.R}')
        bases.append(space.basis)
    whole = module.torsion_direct_sum(params.factors)
    assert whole.dim == params.n, f'torsion of h has dimension {whole.dim}, expected ℓR = {params.n}'
    return bases


def build_code(params, strict=False):
    '''
    Build a CodeInstance: validate, find P when absent (smallest degree in m..m_max),
    build the tower, then take the torsion bases (computed, or explicit and validated)
    @param {dict|CodeParams} params
    @param {bool} strict Also enforce δ < R
    @returns {CodeInstance}
    @example

    code = construction.build_code(spec_util.get('demo.json', 'tiny'))
    code.locality_sets
    # => [[1, 2], [3, 4]]
    '''
    params = params if isinstance(params, CodeParams) else CodeParams(params)
    params.validate(strict)
    if params.P is None:
        params.P = _find_modulus(params)
        params.m = params.P.degree

    if params.fqm_modulus is None:
        if params.z is not None:
            raise ValidationError('z needs an explicit fqm_modulus')
        tower = FieldTower.default(params.P)
    else:
        tower = FieldTower(params.GF, params.fqm_modulus, P=params.P, z=params.z)
        if tower.m != params.m:
            raise ValidationError(f'fqm_modulus has degree {tower.m}, expected m = {params.m}')
    module = ReducedCarlitz(tower)
    if params.bases is None:
        bases = _torsion_bases(params, module)
    else:
        bases = _explicit_bases(params, module)
    return CodeInstance(params, tower, module, bases)
