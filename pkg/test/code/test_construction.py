from drinfeld_lab.code import construction
from drinfeld_lab.code.construction import CodeInstance, CodeParams, Codeword, Message
from drinfeld_lab.field import poly
from drinfeld_lab.field.twisted import LinearizedPoly, TwistedPoly
from drinfeld_lab.lib.error import ConstructionError, InsufficientSurvivorsError, NoPrimeFoundError, ValidationError
from drinfeld_lab.spec import spec_util
import pytest

NUM_CASES = 1000


def test_construction_modulus(GF3):
    h, factors = construction.construction_modulus(GF3, 2, [GF3(1), GF3(2)])
    assert h == poly.parse_poly('T^4+2', GF3)
    assert factors == [poly.parse_poly('T^2+2', GF3), poly.parse_poly('T^2+1', GF3)]


def test_code_params(tiny_spec, GF3):
    params = CodeParams(tiny_spec)
    assert (params.q, params.R, params.k, params.n, params.d) == (3, 2, 2, 4, 2)
    assert params.h == poly.parse_poly('T^4+2', GF3)
    assert params.m_max == 12
    assert params.validate()
    assert params.contract() == {'shape': [5, 4], 'dimension': 10, 'distance': 2, 'r': 1, 'delta': 2}


@pytest.mark.parametrize('override', [
    {'delta': 1},
    {'ell': 3},
    {'a': [1, 1]},
    {'a': [0, 1]},
    {'a': [1]},
    {'m': 3},
    {'s': 2},
    {'r': 0},
    {'r': 2},
    {'m_max': 4},
    {'P': 'T^5+2T+2'},
    {'P': 'T^5+T^4+2'},
])
def test_validate_rejects(tiny_spec, override):
    with pytest.raises(ValidationError):
        construction.build_code({**tiny_spec, **override})


def test_validate_types(tiny_spec):
    with pytest.raises(ValidationError):
        CodeParams({**tiny_spec, 'r': '1'})


def test_strict(tiny_spec):
    with pytest.raises(ValidationError):
        construction.build_code(tiny_spec, strict=True)


def test_no_prime_found(tiny_spec):
    with pytest.raises(NoPrimeFoundError):
        construction.build_code({**tiny_spec, 'm': 4, 'm_max': 4})
    assert issubclass(NoPrimeFoundError, ConstructionError)


def test_z_needs_modulus(tiny_spec):
    with pytest.raises(ValidationError):
        construction.build_code({**tiny_spec, 'P': 'T^5+2T+1', 'z': [0, 1, 0, 0, 0]})


def test_build_tiny(tiny_code, GF3):
    assert tiny_code.tower.P == poly.parse_poly('T^5+2T+1', GF3)
    assert tiny_code.tower.m == 5
    assert tiny_code.params.m == 5
    assert tiny_code.locality_sets == [[1, 2], [3, 4]]
    assert len(tiny_code.points) == 4
    for group, factor in zip(tiny_code.bases, tiny_code.params.factors):
        phi = tiny_code.module.phi_of(factor)
        assert all(phi(beta).is_zero() for beta in group)


def test_build_with_given_P(tiny_spec, tiny_code):
    code = construction.build_code({**tiny_spec, 'P': 'T^5+2T+1'})
    assert code.tower == tiny_code.tower
    assert code.points == tiny_code.points


def test_encode_linear(tiny_code, rng):
    zero = tiny_code.encode(Message.zero(tiny_code))
    assert all(x.is_zero() for x in zero.entries)
    for _i in range(NUM_CASES):
        msg1, msg2 = Message.random(tiny_code, rng), Message.random(tiny_code, rng)
        c = tiny_code.tower.random(rng)
        assert tiny_code.encode(msg1 + msg2) == tiny_code.encode(msg1) + tiny_code.encode(msg2)
        assert tiny_code.encode(msg1.scale(c)) == tiny_code.encode(msg1).scale(c)


def test_restriction(tiny_code, rng):
    msg = Message.random(tiny_code, rng)
    word = tiny_code.encode(msg)
    for i, cols in enumerate(tiny_code.locality_sets, start=1):
        local = tiny_code.restriction(msg, i)
        assert local.degree < tiny_code.params.r
        for col in cols:
            assert local(tiny_code.points[col - 1]) == word.entries[col - 1]
    with pytest.raises(ValidationError):
        tiny_code.restriction(msg, 3)


def test_message_checks(tiny_code):
    tower = tiny_code.tower
    with pytest.raises(ValidationError):
        tiny_code.encode(Message(tower, [TwistedPoly.tau(tower), TwistedPoly.zero(tower)]))
    with pytest.raises(ValidationError):
        tiny_code.encode(Message(tower, [TwistedPoly.zero(tower)]))


def test_message_from_obj(tiny_code):
    tower = tiny_code.tower
    msg = Message.from_obj(tower, {'blocks': ['(a+1)x', [[1, 0, 0, 0, 2]]]})
    assert msg.blocks[0] == TwistedPoly(tower, [tower.parse('a+1')])
    assert msg.blocks[1] == TwistedPoly(tower, [tower.parse('2a^4+1')])
    assert Message.from_obj(tower, msg.to_dict()) == msg
    with pytest.raises(ValidationError):
        Message.from_obj(tower, 'x')


def test_recover(tiny_code, rng):
    word = tiny_code.encode(Message.random(tiny_code, rng))
    for cols in ([1], [2, 3], [1, 4]):
        erased = word.erase(cols)
        assert erased.erased == sorted(cols)
        assert tiny_code.recover(erased, check_subsets=True) == word
    assert tiny_code.recover(word) == word


def test_recover_insufficient(tiny_code, rng):
    word = tiny_code.encode(Message.random(tiny_code, rng))
    with pytest.raises(InsufficientSurvivorsError):
        tiny_code.recover(word.erase([1, 2]))


def test_codeword(tiny_code, rng):
    word = tiny_code.encode(Message.random(tiny_code, rng))
    assert word.is_complete()
    assert word.matrix().shape == (5, 4)
    with pytest.raises(ValidationError):
        word.erase([5])
    with pytest.raises(ValidationError):
        word.erase([2]).matrix()
    with pytest.raises(AssertionError):
        Codeword(tiny_code, word.entries[:3])


def test_rank_distance(tiny_code, rng):
    A = tiny_code.encode(Message.random(tiny_code, rng))
    B = tiny_code.encode(Message.random(tiny_code, rng))
    assert tiny_code.rank_distance(A, A) == 0
    assert tiny_code.rank_distance(A, B) == tiny_code.rank_weight(A - B)
    if A != B:
        assert tiny_code.rank_distance(A, B) >= tiny_code.params.d


def test_generator_matrix(tiny_code):
    G = tiny_code.generator_matrix()
    assert G.shape == (10, 20)
    tower = tiny_code.tower
    # basis message x̄^2 τ^0 in block 1: row (1·r + 0)·m + 2
    msg = Message(tower, [TwistedPoly.zero(tower), TwistedPoly(tower, [tower.basis(2)])])
    word = tiny_code.encode(msg)
    assert G[7].tolist() == word.matrix().reshape(-1).tolist()


def test_generator_matrix_cached(tiny_spec, tiny_code):
    G = tiny_code.generator_matrix()
    assert tiny_code.generator_matrix() is G
    other = construction.build_code(tiny_spec)
    assert other.generator_matrix() is not G
    assert other.generator_matrix().tolist() == G.tolist()


def test_code_dict(tiny_code):
    d = tiny_code.to_dict()
    assert d['format'] == 'code'
    assert d['P'] == [1, 2, 0, 0, 0, 1]
    assert d['locality_sets'] == [[1, 2], [3, 4]]
    code = CodeInstance.from_dict(d)
    assert code.points == tiny_code.points
    assert code.tower == tiny_code.tower
    with pytest.raises(ValidationError):
        CodeInstance.from_dict({**d, 'locality_sets': [[1, 3], [2, 4]]})
    with pytest.raises(ValidationError):
        CodeInstance.from_dict({**d, 'format': 'word'})
    with pytest.raises(ValidationError):
        CodeInstance.from_dict({k: v for k, v in d.items() if k != 'bases'})


def test_worked_example(worked_code, worked_ref):
    tower, GF = worked_code.tower, worked_code.tower.GF
    h, u = poly.parse_poly(worked_ref['h'], GF), poly.parse_poly(worked_ref['u'], GF)
    assert worked_code.params.h == h
    assert tower.P == u * h + poly.const(1, GF)
    assert worked_code.params.contract() == {'shape': [10, 9], 'dimension': 60, 'distance': 2, 'r': 2, 'delta': 2}

    msg = Message.from_obj(tower, worked_ref['message'])
    word = worked_code.encode(msg)
    assert word.entries == [tower.parse(text) for text in worked_ref['encodings']]
    restriction = worked_code.restriction(msg, worked_ref['restriction_group'])
    assert restriction == LinearizedPoly.parse(tower, worked_ref['restriction'])
    col = worked_ref['erased_column']
    assert worked_code.recover(word.erase([col])) == word


def test_worked_example_printed_bases_negate(worked_code, worked_ref):
    tower = worked_code.tower
    spec = spec_util.get('demo.json', 'worked_example')
    code = construction.build_code({**spec, 'bases': [spec['bases'][0], *worked_ref['printed_bases']]})
    msg = Message.from_obj(tower, worked_ref['message'])
    expected = [tower.parse(text) for text in worked_ref['encodings']]
    entries = code.encode(msg).entries
    assert entries[:3] == expected[:3]
    assert entries[3:] == [-x for x in expected[3:]]
    assert worked_code.encode(msg).entries == expected


def test_worked_example_bad_bases(worked_ref):
    spec = spec_util.get('demo.json', 'worked_example')
    bases = spec['bases']
    with pytest.raises(ValidationError):
        construction.build_code({**spec, 'bases': [bases[1], bases[0], bases[2]]})
    with pytest.raises(ValidationError):
        construction.build_code({**spec, 'bases': bases[:2]})


def test_q8_demo(GF8):
    code = construction.build_code(spec_util.get('demo.json', 'q8_demo'))
    assert code.params.h == poly.parse_poly('T^6+(a+1)T^3+a', GF8)
    assert code.tower.var == 'w'
    assert code.locality_sets == [[1, 2, 3], [4, 5, 6]]
    word = code.encode(Message.zero(code))
    assert code.recover(word.erase([2, 6])) == word
