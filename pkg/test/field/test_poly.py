from drinfeld_lab.field import poly
from drinfeld_lab.field.poly import RationalFunction
from drinfeld_lab.field.tower import make_fq_of_order
from drinfeld_lab.lib import math_util
from drinfeld_lab.lib.error import ValidationError
import math
import pytest

NUM_CASES = 1000


def test_from_asc(GF3):
    f = poly.from_asc([2, 0, 1], GF3)
    assert f.degree == 2
    assert poly.to_asc(f) == [2, 0, 1]
    assert poly.to_asc(poly.from_asc([1, 0, 0], GF3)) == [1]


def test_zero(GF3):
    zero = poly.const(0, GF3)
    assert poly.is_zero(zero)
    assert poly.deg(zero) == -math.inf
    assert poly.to_asc(zero) == []
    assert not poly.is_monic(zero)


def test_monic(GF5):
    f = poly.from_asc([1, 2], GF5)  # 2T + 1
    assert poly.monic(f) == poly.from_asc([3, 1], GF5)
    assert poly.is_monic(poly.monic(f))


def test_poly_gcd(GF3):
    f = poly.parse_poly('T^2-1', GF3)
    g = poly.parse_poly('2T-2', GF3)
    assert poly.poly_gcd(f, g) == poly.parse_poly('T+2', GF3)
    assert poly.poly_gcd(g, poly.const(0, GF3)) == poly.parse_poly('T+2', GF3)
    assert poly.poly_gcd(poly.const(0, GF3), g) == poly.parse_poly('T+2', GF3)


def test_poly_divmod_zero(GF3):
    with pytest.raises(ZeroDivisionError):
        poly.poly_divmod(poly.var_T(GF3), poly.const(0, GF3))


@pytest.mark.parametrize('text,res', [
    ('T', True),
    ('T^2+1', True),
    ('T^2+2', False),
    ('T^4+2', False),
    ('T^5+2T+1', True),
    ('T^9+4T^6+T^3+4', False),
])
def test_is_irreducible(GF3, text, res):
    assert poly.is_irreducible(poly.parse_poly(text, GF3)) == res


def test_is_irreducible_constant(GF3):
    with pytest.raises(ValidationError):
        poly.is_irreducible(poly.const(2, GF3))


@pytest.mark.parametrize('q,m,res', [
    (2, 4, 3),
    (3, 2, 3),
    (3, 4, 18),
    (5, 3, 40),
])
def test_count_irreducibles(q, m, res):
    assert poly.count_irreducibles(q, m) == res


def test_monic_at(GF3):
    assert poly.monic_at(GF3, 2, 0) == poly.parse_poly('T^2', GF3)
    assert poly.monic_at(GF3, 2, 5) == poly.parse_poly('T^2+T+2', GF3)
    assert poly.monic_at(GF3, 0, 0) == poly.const(1, GF3)
    assert list(poly.enumerate_monic(GF3, 1)) == [poly.parse_poly(t, GF3) for t in ('T', 'T+1', 'T+2')]


def test_irreducibles(GF3):
    assert poly.irreducibles(GF3, 2) == [poly.parse_poly(t, GF3) for t in ('T^2+1', 'T^2+T+2', 'T^2+2T+2')]


@pytest.mark.parametrize('m', [3, 4])
def test_irreducible_table(GF3, m):
    table = poly.irreducible_table(GF3, m)
    assert int(table.sum()) == poly.count_irreducibles(3, m)
    for idx in range(0, 3 ** m, 7):
        assert table[idx] == poly.is_irreducible(poly.monic_at(GF3, m, idx))


def test_irreducible_table_gf8(GF8):
    assert int(poly.irreducible_table(GF8, 3).sum()) == poly.count_irreducibles(8, 3)


@pytest.mark.parametrize('text,res', [
    ('T', 2),
    ('T^2', 6),
    ('T^2+1', 8),
    ('T^4+2', 32),
])
def test_totient(GF3, text, res):
    assert poly.totient(poly.parse_poly(text, GF3)) == res


def random_monic(rng, GF, degree):
    return poly.from_asc(rng.integers(0, GF.order, degree).tolist() + [1], GF)


def test_is_irreducible_trial_division(rng):
    divisors = {}
    for _i in range(NUM_CASES):
        GF = make_fq_of_order(int(rng.choice([2, 3, 4, 5])))
        n = int(rng.integers(1, 7))
        f = random_monic(rng, GF, n)
        for d in range(1, n // 2 + 1):
            if (GF.order, d) not in divisors:
                divisors[(GF.order, d)] = list(poly.enumerate_monic(GF, d))
        has_factor = any(poly.is_zero(poly.poly_divmod(f, g)[1]) for d in range(1, n // 2 + 1) for g in divisors[(GF.order, d)])
        assert poly.is_irreducible(f) == (not has_factor)


def test_totient_counts_units(GF3):
    for text in ('T^2', 'T^2+1', 'T^3+2T', 'T^3+T+1'):
        h = poly.parse_poly(text, GF3)
        rows = math_util.to_digits(range(1, 3 ** h.degree), 3, h.degree)
        units = [row for row in rows if poly.deg(poly.poly_gcd(poly.from_asc(row.tolist(), GF3), h)) == 0]
        assert poly.totient(h) == len(units)


def test_totient_multiplicative(GF3, rng):
    for _i in range(NUM_CASES):
        a = random_monic(rng, GF3, int(rng.integers(1, 4)))
        b = random_monic(rng, GF3, int(rng.integers(1, 4)))
        if poly.deg(poly.poly_gcd(a, b)) == 0:
            assert poly.totient(a * b) == poly.totient(a) * poly.totient(b)


def test_valuation_additive(GF3, rng):
    primes = [poly.parse_poly(t, GF3) for t in ('T', 'T+1', 'T^2+1')]
    for _i in range(NUM_CASES):
        f, g, u, w = (random_monic(rng, GF3, int(d)) for d in rng.integers(0, 4, 4))
        x, y = RationalFunction(f, g), RationalFunction(u, w)
        for P in primes:
            assert poly.valuation(x * y, P) == poly.valuation(x, P) + poly.valuation(y, P)
            assert poly.valuation(x / y, P) == poly.valuation(x, P) - poly.valuation(y, P)


def test_multiplicity(GF3):
    T = poly.var_T(GF3)
    f = T * T * (T + poly.const(1, GF3))
    assert poly.multiplicity(f, T) == 2
    assert poly.multiplicity(f, T + poly.const(2, GF3)) == 0


def test_rational_function(GF3):
    T = poly.var_T(GF3)
    one = poly.const(1, GF3)
    g = RationalFunction(T * T - one, T - one)
    assert g.num == T + one
    assert g.den == one
    assert RationalFunction(T + one, poly.const(2, GF3) * (T + one)) == RationalFunction(poly.const(2, GF3))
    assert (g / g) == RationalFunction.one(GF3)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(T, poly.const(0, GF3))


def test_valuation(GF3):
    T = poly.var_T(GF3)
    g = RationalFunction(T * T, T + poly.const(1, GF3))
    assert poly.valuation(g, T) == 2
    assert poly.valuation(g, T + poly.const(1, GF3)) == -1
    assert poly.valuation(g, T + poly.const(2, GF3)) == 0
    assert poly.valuation(RationalFunction(poly.const(0, GF3)), T) == math.inf
    with pytest.raises(ValidationError):
        poly.valuation(g, T * T)


@pytest.mark.parametrize('text', [
    'T^9+4T^6+T^3+4',
    'T^10+4T^9+4T^7+T^6+T^4+4T^3+4T+2',
    'T+4',
])
def test_format_poly(GF5, text):
    assert poly.format_poly(poly.parse_poly(text, GF5)) == text


def test_parse_poly_gf8(GF8):
    h = poly.parse_poly('T^6+(a+1)T^3+a', GF8)
    assert h.degree == 6
    assert poly.format_poly(h) == 'T^6+(a+1)T^3+a'
    assert poly.to_asc(h) == [2, 0, 0, 3, 0, 0, 1]


def test_parse_poly_negative(GF3):
    assert poly.parse_poly('T^2 - 1', GF3) == poly.parse_poly('T^2+2', GF3)
    assert poly.parse_poly('-T', GF3) == poly.parse_poly('2T', GF3)


@pytest.mark.parametrize('text', ['', 'T^^2', '(T+1', 'T^x'])
def test_parse_poly_malformed(GF3, text):
    with pytest.raises(ValidationError):
        poly.parse_poly(text, GF3)


def test_parse_fq(GF3, GF8):
    assert poly.parse_fq('a^2+a', GF8) == poly.parse_fq([0, 1, 1], GF8)
    assert poly.parse_fq('α', GF8) == GF8(2)
    assert poly.parse_fq(4, GF3) == GF3(1)
    with pytest.raises(ValidationError):
        poly.parse_fq('a', GF3)


@pytest.mark.parametrize('obj', [[1.5, 0, 1], [True, 0, 0], 2.7, 2.0, None, [0, '1', 0]])
def test_parse_fq_non_integral(GF8, obj):
    with pytest.raises(ValidationError):
        poly.parse_fq(obj, GF8)


def test_coerce_poly_non_integral(GF3):
    with pytest.raises(ValidationError):
        poly.coerce_poly([1, 2.5, 1], GF3)


def test_format_fq(GF3, GF8):
    assert poly.format_fq(GF3(2), GF3) == '2'
    assert poly.format_fq(GF8(6), GF8) == 'a^2+a'
    assert poly.encode_fq(GF8(6), GF8) == [0, 1, 1]


def test_coerce_poly(GF3):
    f = poly.parse_poly('T^5+2T+1', GF3)
    assert poly.coerce_poly(f, GF3) is f
    assert poly.coerce_poly([1, 2, 0, 0, 0, 1], GF3) == f
    assert poly.coerce_poly('T^5+2T+1', GF3) == f
    assert poly.encode_poly(f) == [1, 2, 0, 0, 0, 1]
    with pytest.raises(ValidationError):
        poly.coerce_poly(1.5, GF3)
