from drinfeld_lab.lib import util
import pytest
import run_lab


def test_run_spec(tiny_spec):
    result = run_lab.run_spec(tiny_spec, 'build')
    assert result['name'] == 'tiny'
    assert result['contract']['distance'] == 2
    result = run_lab.run_spec(tiny_spec, 'exhaustive')
    assert result['pass']
    with pytest.raises(ValueError):
        run_lab.run_spec(tiny_spec, 'train')


def test_run_job(tmp_path, capsys):
    job_file = util.write({'demo.json': {'tiny': 'sampled'}}, str(tmp_path / 'job.json'))
    assert run_lab.run_job(job_file)
    assert 'name: tiny' in capsys.readouterr().out
