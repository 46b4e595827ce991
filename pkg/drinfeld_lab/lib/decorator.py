from drinfeld_lab.lib import logger
from functools import wraps
import time

# qualified names of the public code operations, filled at import time
LAB_API = []
logger = logger.get_logger(__name__)


def lab_api(fn):
    '''
    Function decorator to register a public operation of a code object, e.g. encode or recover
    @example

    from drinfeld_lab.lib.decorator import lab_api
    @lab_api
    def encode(self, msg):
        ...

    decorator.LAB_API
    # => ['CodeInstance.encode', ...]
    '''
    fn.lab_api = True
    LAB_API.append(fn.__qualname__)
    return fn


def timeit(fn):
    '''
    Function decorator to log the elapsed time of a search or enumeration at DEBUG
    @example

    from drinfeld_lab.lib.decorator import timeit
    @timeit
    def count_progression(h, m, a):
        ...

    count_progression(h, 8, a)
    # => Timed: count_progression 412.3318ms
    '''
    @wraps(fn)
    def time_fn(*args, **kwargs):
        start = time.perf_counter()
        output = fn(*args, **kwargs)
        logger.debug(f'Timed: {fn.__name__} {round((time.perf_counter() - start) * 1000, 4)}ms')
        return output
    return time_fn
