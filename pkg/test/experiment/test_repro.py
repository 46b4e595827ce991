from drinfeld_lab.drinfeld.carlitz import ReducedCarlitz
from drinfeld_lab.experiment import repro
from drinfeld_lab.field import poly
from drinfeld_lab.field.tower import make_fq_of_order
import pytest


def test_run_worked_example():
    report = repro.run_worked_example()
    assert report['P_is_uh_plus_1']
    assert report['phi_T3']
    assert report['encodings_matched'] == report['encodings_total'] == 9
    assert report['restriction']
    assert report['recovery']
    assert report['locality_bound'] == 2
    assert report['summary'] == '9/9 encodings match; recovery of f5 matches'
    assert report['pass']


def test_expected_phi_T3(tower_3_5):
    module = ReducedCarlitz(tower_3_5)
    assert module.phi_of('T^3') == repro.expected_phi_T3(tower_3_5)


def test_run_prime_table():
    df = repro.run_prime_table()
    assert len(df) == 18
    assert df['pass'].all()
    assert set(df['q']) == {5, 7, 8}


def test_run_tiny():
    report = repro.run_tiny()
    assert report['m'] == 5
    assert report['P'] == 'T^5+2T+1'
    assert report['distance']['measured'] == 2
    assert report['recovery'] == {'patterns': 9, 'recovered': 9, 'pass': True}
    assert report['pass']


def test_erasure_patterns(tiny_code):
    patterns = repro.erasure_patterns(tiny_code)
    assert len(patterns) == 9
    assert [] in patterns
    assert [2, 3] in patterns
    assert all(len(cols) <= 2 for cols in patterns)


def test_units(GF3):
    assert repro.units(poly.parse_poly('T^2', GF3)) == [poly.parse_poly(t, GF3) for t in ('1', '2', 'T+1', 'T+2', '2T+1', '2T+2')]


def test_run_bounds_sweep():
    GF = make_fq_of_order(3)
    grid = [(3, poly.parse_poly('T', GF)), (3, poly.parse_poly('T^2+1', GF))]
    df = repro.run_bounds_sweep(grid, m_max=6)
    # T: m = 1..6 with 2 units; T^2+1: m = 2..6 with 8 units
    assert len(df) == 6 * 2 + 5 * 8
    assert df['pass'].all()


def test_run_bounds_sweep_default():
    df = repro.run_bounds_sweep()
    assert len(df) == 2685
    assert df['m'].max() == 10
    assert df['pass'].all()
    assert set(df['q']) == {2, 3, 5}


def test_run_admissible_grid():
    df = repro.run_admissible_grid()
    assert len(df) == 78
    assert set(df['q']) == {3, 5}
    assert set(df['deg_h']) == {1, 2}
    assert df['found'].all()
    assert df['admissible'].all()


def test_run_reciprocity():
    df = repro.run_reciprocity()
    assert len(df) == poly.count_irreducibles(3, 4)
    assert df['agree'].all()
    assert df['congruent'].any()


@pytest.mark.parametrize('target', ['unknown', 'lemma'])
def test_run_target_unknown(target):
    with pytest.raises(ValueError):
        repro.run_target(target)
