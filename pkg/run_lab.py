# The drinfeld_lab entrypoint
from drinfeld_lab import LAB_MODES
from drinfeld_lab import cli
from drinfeld_lab.code import construction, verify
from drinfeld_lab.lib import logger, util
from drinfeld_lab.spec import spec_util
import sys


debug_modules = [
    # 'construction',
]
debug_level = 'DEBUG'
logger.toggle_debug(debug_modules, debug_level)
logger = logger.get_logger(__name__)


def run_spec(spec, lab_mode):
    '''Build the code of a spec, then verify it unless lab_mode is build'''
    if lab_mode not in LAB_MODES:
        raise ValueError(f'Unrecognizable lab_mode not of {LAB_MODES}')
    code = construction.build_code(spec)
    if lab_mode == 'build':
        return {'name': spec['name'], 'contract': code.params.contract(), 'pass': True}
    report = verify.verify_code(code, lab_mode)
    return {'name': spec['name'], **report}


def read_spec_and_run(spec_file, spec_name, lab_mode):
    '''Read a spec and run it in lab mode'''
    logger.info(f'Running lab spec_file:{spec_file} spec_name:{spec_name} in mode:{lab_mode}')
    spec = spec_util.get(spec_file, spec_name)
    return run_spec(spec, lab_mode)


def run_job(job_file):
    '''Run every spec of a job file {spec_file: {spec_name: lab_mode}}; True when all pass'''
    results = []
    for spec_file, spec_and_mode in util.read(job_file).items():
        for spec_name, lab_mode in spec_and_mode.items():
            result = read_spec_and_run(spec_file, spec_name, lab_mode)
            print(util.to_lines(result))
            results.append(result['pass'])
    return all(results)


def main():
    '''Main method to run jobs from scheduler, or a cli subcommand directly'''
    args = sys.argv[1:]
    if len(args) <= 1:  # use scheduler
        job_file = args[0] if len(args) == 1 else 'job/experiments.json'
        return cli.EXIT_OK if run_job(job_file) else cli.EXIT_CHECK_FAILED
    else:
        return cli.main(args)


if __name__ == '__main__':
    sys.exit(main())
