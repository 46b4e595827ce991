from drinfeld_lab.code import construction
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import FieldTower, make_fq
from drinfeld_lab.lib import util
from drinfeld_lab.spec import spec_util
import pandas as pd
import pytest


@pytest.fixture(scope='session')
def GF3():
    return make_fq(3)


@pytest.fixture(scope='session')
def GF5():
    return make_fq(5)


@pytest.fixture(scope='session')
def GF8():
    return make_fq(2, 3, [1, 1, 0, 1])


@pytest.fixture(scope='session')
def tiny_spec():
    return spec_util.get('demo.json', 'tiny')


@pytest.fixture(scope='session')
def tiny_code(tiny_spec):
    return construction.build_code(tiny_spec)


@pytest.fixture(scope='session')
def worked_ref():
    return spec_util.get_reference('worked_example')


@pytest.fixture(scope='session')
def worked_code():
    return construction.build_code(spec_util.get('demo.json', 'worked_example'))


@pytest.fixture(scope='session')
def tower_3_5(GF3):
    '''F_3 ⊂ F_{3^5} with modulus P = T^5 + 2T + 1'''
    return FieldTower.default(poly.parse_poly('T^5+2T+1', GF3))


@pytest.fixture
def rng():
    return util.get_rng(0)


@pytest.fixture
def test_df():
    data = pd.DataFrame({
        'integer': [1, 2, 3],
        'square': [1, 4, 9],
        'letter': ['a', 'b', 'c'],
    })
    assert isinstance(data, pd.DataFrame)
    return data


@pytest.fixture
def test_dict():
    data = {
        'a': 1,
        'b': 2,
        'c': 3,
    }
    assert isinstance(data, dict)
    return data


@pytest.fixture
def test_list():
    data = [1, 2, 3]
    assert isinstance(data, list)
    return data


@pytest.fixture
def test_str():
    data = 'lorem ipsum dolor'
    assert isinstance(data, str)
    return data
