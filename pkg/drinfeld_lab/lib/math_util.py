# Integer arithmetic used by the counting formulas and enumerators
import galois
import math
import numpy as np


def ceil_div(a, b):
    '''Integer ceiling of a / b for b > 0'''
    return -(-a // b)


def divisor_count(m):
    '''
    T(m), the number of positive divisors of m
    @example

    math_util.divisor_count(12)
    # => 6
    '''
    assert m >= 1, f'divisor_count needs m >= 1, got {m}'
    return len(galois.divisors(m))


def mobius(n):
    '''Möbius function μ(n)'''
    assert n >= 1, f'mobius needs n >= 1, got {n}'
    if n == 1:
        return 1
    _primes, multiplicities = galois.factors(n)
    if any(k > 1 for k in multiplicities):
        return 0
    return (-1) ** len(multiplicities)


def prime_power(q):
    '''
    Split a prime power q into (p, e) with q = p^e
    @example

    math_util.prime_power(8)
    # => (2, 3)
    '''
    assert q >= 2, f'q must be a prime power, got {q}'
    primes, multiplicities = galois.factors(q)
    assert len(primes) == 1, f'q must be a prime power, got {q}'
    return int(primes[0]), int(multiplicities[0])


def to_digits(idxs, base, width):
    '''
    Expand integer indices into little-endian base digits, shape (len(idxs), width)
    @example

    math_util.to_digits(np.array([5]), 3, 3)
    # => array([[2, 1, 0]])
    '''
    idxs = np.asarray(idxs, dtype=np.int64).reshape(-1, 1)
    return (idxs // base ** np.arange(width, dtype=np.int64)) % base


def from_digits(digits, base):
    '''Inverse of to_digits along the last axis'''
    digits = np.asarray(digits, dtype=np.int64)
    return digits @ (base ** np.arange(digits.shape[-1], dtype=np.int64))


def log_base(x, base):
    return math.log(x) / math.log(base)
