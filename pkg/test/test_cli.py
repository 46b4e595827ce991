from drinfeld_lab import cli
from drinfeld_lab.lib import util
import pytest


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    lines = dict(line.split(': ', 1) for line in out.strip().split('\n') if ': ' in line)
    return code, lines


@pytest.fixture
def code_path(tmp_path, capsys):
    data_path = str(tmp_path / 'code.json')
    code, _lines = run(['build', '--params', 'demo.json', '--name', 'tiny', '--out', data_path], capsys)
    assert code == cli.EXIT_OK
    return data_path


def test_admissible(capsys):
    code, lines = run(['admissible', '--q', '5', '--m', '16', '--lr', '2'], capsys)
    assert code == cli.EXIT_OK
    assert lines['admissible'] == 'true'
    code, _lines = run(['admissible', '--q', '5', '--m', '3', '--lr', '2'], capsys)
    assert code == cli.EXIT_INVALID


def test_search_prime(capsys):
    code, lines = run(['search-prime', '--q', '3', '--h', 'T^4+2', '--m', '5'], capsys)
    assert code == cli.EXIT_OK
    assert lines['found'] == 'true'
    assert lines['P'] == 'T^5+2T+1'
    assert lines['u'] == 'T'
    assert lines['tested'] == '1'


def test_search_prime_exhausted(capsys):
    code, lines = run(['search-prime', '--q', '2', '--h', 'T^2', '--m', '2'], capsys)
    assert code == cli.EXIT_EXHAUSTED
    assert lines['found'] == 'false'


def test_dirichlet(capsys):
    code, lines = run(['dirichlet', 'count', '--q', '3', '--h', 'T', '--m', '2'], capsys)
    assert code == cli.EXIT_OK
    assert lines['count'] == '1'
    code, lines = run(['dirichlet', 'check-bounds', '--q', '3', '--h', 'T', '--m', '2', '--a', '2'], capsys)
    assert code == cli.EXIT_OK
    assert lines['count'] == '2'
    assert lines['pass'] == 'true'
    code, _lines = run(['dirichlet', 'count', '--q', '3', '--h', 'T', '--m', '16'], capsys)
    assert code == cli.EXIT_GUARD


def test_build(code_path):
    data = util.read(code_path)
    assert data['format'] == 'code'
    assert data['P'] == [1, 2, 0, 0, 0, 1]


def test_build_strict(tmp_path, capsys):
    code, _lines = run(['build', '--params', 'demo.json', '--name', 'tiny', '--strict-thm11', '--out', str(tmp_path / 'code.json')], capsys)
    assert code == cli.EXIT_INVALID


def test_encode_erase_recover(code_path, tmp_path, capsys):
    msg_path = util.write({'blocks': ['(a+1)x', 'ax']}, str(tmp_path / 'msg.json'))
    word_path = str(tmp_path / 'word.json')
    erased_path = str(tmp_path / 'erased.json')
    recovered_path = str(tmp_path / 'recovered.json')

    code, lines = run(['encode', '--code', code_path, '--message', msg_path, '--out', word_path], capsys)
    assert code == cli.EXIT_OK
    assert lines['n'] == '4'
    code, lines = run(['erase', '--word', word_path, '--columns', '1,3', '--out', erased_path], capsys)
    assert code == cli.EXIT_OK
    assert util.read(erased_path)['entries'][0] is None
    code, lines = run(['recover', '--code', code_path, '--word', erased_path, '--out', recovered_path], capsys)
    assert code == cli.EXIT_OK
    assert lines['recovered'] == '[1, 3]'
    assert util.read(recovered_path)['entries'] == util.read(word_path)['entries']

    code, _lines = run(['erase', '--word', word_path, '--columns', '1,2'], capsys)
    assert code == cli.EXIT_OK
    code, _lines = run(['recover', '--code', code_path, '--word', word_path, '--out', recovered_path], capsys)
    assert code == cli.EXIT_INVALID
    code, _lines = run(['erase', '--word', word_path, '--columns', '9'], capsys)
    assert code == cli.EXIT_INVALID


def test_verify(code_path, tmp_path, capsys):
    report_path = str(tmp_path / 'report.json')
    code, lines = run(['verify', '--code', code_path, '--exhaustive', '--report', report_path], capsys)
    assert code == cli.EXIT_OK
    assert lines['distance.measured'] == '2'
    assert lines['pass'] == 'true'
    assert util.read(report_path)['pass']

    code, lines = run(['verify', '--code', code_path, '--samples', '16', '--seed', '1'], capsys)
    assert code == cli.EXIT_OK
    assert lines['mode'] == 'sampled'
    code, _lines = run(['verify', '--code', code_path, '--strict'], capsys)
    assert code == cli.EXIT_INVALID
    code, _lines = run(['verify', '--code', code_path, '--samples', '0'], capsys)
    assert code == cli.EXIT_INVALID


def test_missing_file(tmp_path, capsys):
    code, _lines = run(['verify', '--code', str(tmp_path / 'missing.json')], capsys)
    assert code == cli.EXIT_INVALID
    code, _lines = run(['build', '--params', 'demo.json', '--name', 'no_such_set', '--out', str(tmp_path / 'code.json')], capsys)
    assert code == cli.EXIT_INVALID


def test_repro(tmp_path, capsys):
    out = str(tmp_path / 'table.csv')
    code, lines = run(['repro', 'table1', '--out', out], capsys)
    assert code == cli.EXIT_OK
    assert lines['passed'] == '18'
    assert len(util.read(out)) == 18
