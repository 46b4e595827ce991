import os
import sys
from setuptools import find_packages, setup

try:
    from setuptools.command.test import test as TestCommand
except ImportError:  # removed in newer setuptools; use `pytest` directly
    TestCommand = None

test_args = [
    '--verbose',
    '--capture=sys',
    '--log-level=INFO',
    '--log-cli-level=INFO',
    '--log-file-level=INFO',
    '--timeout=600',
    '--cov-report=html',
    '--cov-report=term',
    '--cov-report=xml',
    '--cov=drinfeld_lab',
    'test',
]

cmdclass = {}
if TestCommand is not None:
    class PyTest(TestCommand):
        user_options = [('pytest-args=', 'a', 'Arguments to pass to py.test')]

        def initialize_options(self):
            os.environ['PY_ENV'] = 'test'
            TestCommand.initialize_options(self)
            self.pytest_args = test_args

        def run_tests(self):
            import pytest
            errno = pytest.main(self.pytest_args)
            sys.exit(errno)

    cmdclass['test'] = PyTest


setup(
    name='drinfeld_lab',
    version='1.0.0',
    description='Rank-metric codes with rank-locality from Carlitz module torsion over finite fields.',
    keywords='rank metric, locally recoverable codes, Drinfeld modules, Gabidulin codes',
    license='MIT',
    packages=find_packages(include=['drinfeld_lab', 'drinfeld_lab.*']),
    package_data={'drinfeld_lab': ['spec/*.json', 'spec/reference/*.json']},
    python_requires='>=3.8',
    install_requires=[
        'colorlog>=4.0.2',
        'galois>=0.3.3',
        'numpy>=1.21',
        'pandas>=1.3',
        'pydash>=4.2.1',
        'pyyaml>=5.1',
        'regex>=2019.05.25',
        'ujson>=1.35',
    ],
    zip_safe=False,
    include_package_data=True,
    extras_require={
        'testing': [
            'pytest>=6.0',
            'pytest-cov>=2.7.1',
            'pytest-timeout>=1.3.3',
        ],
    },
    entry_points={'console_scripts': ['drinfeld_lab=drinfeld_lab.cli:main']},
    classifiers=[],
    test_suite='test',
    cmdclass=cmdclass,
)
