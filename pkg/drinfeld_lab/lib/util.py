from drinfeld_lab import ROOT_DIR
from fractions import Fraction
import json
import multiprocessing as mp
import numpy as np
import os
import pandas as pd
import pydash as ps
import ujson
import yaml

NUM_CPUS = mp.cpu_count()


class LabJsonEncoder(json.JSONEncoder):
    '''Encode numpy scalars and arrays (galois FieldArrays included), exact fractions, DataFrames and report objects'''

    def default(self, obj):
        if isinstance(obj, (np.integer, np.bool_)):
            return obj.item()
        elif isinstance(obj, (np.floating, Fraction)):
            return float(obj)
        elif isinstance(obj, (np.ndarray, pd.Series)):
            return obj.tolist()
        elif isinstance(obj, pd.DataFrame):
            return obj.to_dict('records')
        elif hasattr(obj, 'to_dict'):
            return obj.to_dict()
        else:
            return str(obj)


def cast_df(val):
    '''missing pydash method to cast value as DataFrame'''
    if isinstance(val, pd.DataFrame):
        return val
    return pd.DataFrame(val)


def chunk_ranges(total, num_chunks):
    '''
    Split range(total) into at most num_chunks contiguous (start, stop) pairs, in order.
    Used to partition candidate and message indices across workers.
    @example

    util.chunk_ranges(10, 3)
    # => [(0, 3), (3, 6), (6, 10)]
    '''
    num_chunks = max(1, min(num_chunks, total))
    bounds = [total * k // num_chunks for k in range(num_chunks + 1)]
    return [(start, stop) for start, stop in zip(bounds[:-1], bounds[1:]) if stop > start]


def flatten_dict(obj, delim='.', prefix=''):
    '''
    Flatten nested dicts, and lists of dicts, into delim-joined keys. Other lists stay values.
    @example

    util.flatten_dict({'distance': {'expected': 2, 'pass': True}, 'local': [{'group': 1}]})
    # => {'distance.expected': 2, 'distance.pass': True, 'local.0.group': 1}
    '''
    flat = {}
    for key, val in obj.items():
        path = f'{prefix}{key}'
        if ps.is_dict(val) and not ps.is_empty(val):
            flat.update(flatten_dict(val, delim, path + delim))
        elif ps.is_list(val) and not ps.is_empty(val) and all(ps.is_dict(v) for v in val):
            for idx, v in enumerate(val):
                flat.update(flatten_dict(v, delim, f'{path}{delim}{idx}{delim}'))
        else:
            flat[path] = val
    return flat


def get_rng(seed=None):
    '''Get a numpy Generator; a None seed draws fresh entropy'''
    return np.random.default_rng(seed)


def parallelize(fn, args, num_cpus=NUM_CPUS):
    '''
    Run fn over a list of argument tuples in a process pool, results in the order of args.
    Workers are spawned fresh and get only picklable plain values; a single cpu runs in-process.
    @example

    util.parallelize(pow, [(2, 3), (3, 2)], num_cpus=2)
    # => [8, 9]
    '''
    if num_cpus <= 1 or len(args) <= 1:
        return [fn(*arg) for arg in args]
    with mp.get_context('spawn').Pool(min(num_cpus, len(args)), maxtasksperchild=1) as pool:
        results = pool.starmap(fn, args)
    return results


def _read_json(open_file, **kwargs):
    return ujson.load(open_file, **kwargs)


def _read_yaml(open_file, **kwargs):
    return yaml.safe_load(open_file)


def _write_json(data, open_file):
    json.dump(data, open_file, indent=2, cls=LabJsonEncoder)


def _write_yaml(data, open_file):
    # round trip through the encoder so numpy and galois values become plain types
    yaml.safe_dump(json.loads(to_json(data, indent=None)), open_file, sort_keys=False)


READERS = {'.json': _read_json, '.yml': _read_yaml, '.yaml': _read_yaml}
WRITERS = {'.json': _write_json, '.yml': _write_yaml, '.yaml': _write_yaml}


def read(data_path, **kwargs):
    '''
    Read a lab file by extension
    - {.csv} to DataFrame, e.g. a saved sweep
    - {.json} to dict or list, e.g. params, code and word files
    - {.yml} to dict
    - {*} to str
    @param {str} data_path Path, resolved by smart_path
    @returns {data} The parsed data
    @example

    code_dict = util.read('tiny.code.json')
    # => {'format': 'code', 'params': {...}, ...}

    sweep_df = util.read('bounds.csv')
    # => <DataFrame>
    '''
    data_path = smart_path(data_path)
    if not os.path.isfile(data_path):
        raise FileNotFoundError(data_path)
    ext = os.path.splitext(data_path)[-1]
    if ext == '.csv':
        return pd.read_csv(data_path, **kwargs)
    with open(data_path, 'r') as open_file:
        reader = READERS.get(ext)
        return open_file.read() if reader is None else reader(open_file, **kwargs)


def set_attr(obj, attr_dict, keys=None):
    '''Set attribute of an object from a dict'''
    if keys is not None:
        attr_dict = ps.pick(attr_dict, keys)
    for attr, val in attr_dict.items():
        setattr(obj, attr, val)
    return obj


def smart_path(data_path, as_dir=False):
    '''
    Resolve data_path into an abspath. A relative path is taken from the cwd when it, or its parent dir,
    exists there (cli arguments), else joined from ROOT_DIR (package files such as drinfeld_lab/spec).
    @param {str} data_path The input data path to resolve
    @param {bool} as_dir Whether to return as dirname
    @returns {str} The normalized absolute data_path
    @example

    util.smart_path('drinfeld_lab/spec/demo.json')
    # => '/home/user/drinfeld_lab/drinfeld_lab/spec/demo.json'
    '''
    if not os.path.isabs(data_path):
        cwd_path = os.path.abspath(data_path)
        in_cwd = os.path.exists(cwd_path) or os.path.isdir(os.path.dirname(cwd_path))
        data_path = cwd_path if in_cwd else os.path.join(ROOT_DIR, data_path)
    if as_dir:
        data_path = os.path.dirname(data_path)
    return os.path.normpath(data_path)


def to_json(d, indent=2):
    '''Shorthand method for stringify JSON with indent'''
    return json.dumps(d, indent=indent, cls=LabJsonEncoder)


def to_lines(d):
    '''Render a (nested) report dict as machine-parseable key: value lines'''
    lines = []
    for k, v in flatten_dict(d).items():
        if isinstance(v, (list, tuple)):
            v = json.dumps(v, cls=LabJsonEncoder)
        elif isinstance(v, (bool, np.bool_)):
            v = str(bool(v)).lower()
        lines.append(f'{k}: {v}')
    return '\n'.join(lines)


def write(data, data_path):
    '''
    Write a lab file by extension, creating parent dirs
    - {.csv} from DataFrame or records
    - {.json} from dict, list or DataFrame (as records)
    - {.yml} from dict
    - {*} from str(*)
    @param {*} data The data to write
    @param {str} data_path Path, resolved by smart_path
    @returns {str} The resolved path written to
    @example

    util.write(report, 'verify_report.json')
    util.write(sweep_df, 'bounds.csv')
    '''
    data_path = smart_path(data_path)
    os.makedirs(os.path.dirname(data_path), exist_ok=True)
    ext = os.path.splitext(data_path)[-1]
    if ext == '.csv':
        cast_df(data).to_csv(data_path, index=False)
        return data_path
    with open(data_path, 'w') as open_file:
        writer = WRITERS.get(ext)
        if writer is None:
            open_file.write(str(data))
        else:
            writer(data, open_file)
    return data_path
