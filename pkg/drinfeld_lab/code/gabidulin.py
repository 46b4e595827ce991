# The gabidulin module
# Moore matrices, linearized interpolation and the F_q generator matrix of a Gabidulin code
# on F_q-independent evaluation points; the local codes of a locality group are of this kind.
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import fq_rank
from drinfeld_lab.field.twisted import LinearizedPoly
from drinfeld_lab.lib import logger
from drinfeld_lab.lib.error import MooreMatrixSingularError, ValidationError
import numpy as np

logger = logger.get_logger(__name__)


def moore_matrix(points, r):
    '''
    r x len(points) Moore matrix with entry (j, i) = points[i]^{q^j}, as FieldElements
    @example

    gabidulin.moore_matrix([b1, b2], 2)
    # => [[b1, b2], [b1^q, b2^q]]
    '''
    return [[x.frobenius(j) for x in points] for j in range(r)]


def check_independent(points):
    '''Raise MooreMatrixSingularError unless the points are F_q-linearly independent'''
    tower = points[0].tower
    if fq_rank(tower.expand_columns(points)) < len(points):
        raise MooreMatrixSingularError()


def interpolate_linearized(points, values, r):
    '''
    The unique linearized polynomial L = sum_{j<r} c_j x^{q^j} with L(points[i]) = values[i].
    Solves for the coordinates of every c_j at once: block (i, j) of the F_q system is the
    multiplication matrix of points[i]^{q^j}.
    @param {list} points r F_q-independent FieldElements
    @param {list} values r FieldElements
    @param {int} r q-degree bound plus one
    @returns {LinearizedPoly}
    '''
    if not (len(points) == len(values) == r) or r < 1:
        raise ValidationError(f'interpolation needs exactly r = {r} points and values, got {len(points)} and {len(values)}')
    tower = points[0].tower
    check_independent(points)
    moore = moore_matrix(points, r)
    blocks = [[tower.mul_matrix(moore[j][i]) for j in range(r)] for i in range(r)]
    A = tower.GF(np.block([[poly.to_ints(M) for M in row] for row in blocks]))
    rhs = tower.expand_columns(values).T.reshape(-1)
    solution = np.linalg.solve(A, rhs)
    coeffs = [tower.from_vec(solution[j * tower.m:(j + 1) * tower.m]) for j in range(r)]
    return LinearizedPoly(tower, coeffs)


def gabidulin_generator(points, r):
    '''
    F_q generator matrix of {(L(p_1), ..., L(p_n)) : q-deg L < r}. Row j·m + t is the codeword of x̄^t x^{q^j};
    a codeword is the m x n coordinate matrix flattened row-major.
    @returns {FieldArray} shape (r·m, m·n)
    '''
    tower = points[0].tower
    rows = []
    for j in range(r):
        frob = [x.frobenius(j) for x in points]
        for t in range(tower.m):
            rows.append(poly.to_ints(tower.expand_columns([tower.basis(t) * y for y in frob])).reshape(-1))
    return tower.GF(np.stack(rows))
