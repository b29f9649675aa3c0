"""Exact nonnegative-integer primitives.

Nothing in this package touches floating point; every ceiling, residue and
primality decision goes through here.
"""

from __future__ import annotations

from math import gcd, isqrt

#: Upper bound (exclusive) on values produced by the checked helpers.
NAT_LIMIT = 1 << 128

# Deterministic Miller-Rabin: the first k primes as witnesses are exact below
# each bound (Jaeschke 1993; Sorenson & Webster 2015).
_MR_TIERS = (
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)
PRIME_LIMIT = _MR_TIERS[-1][0]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _nat(value: int, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def checked(value: int) -> int:
    """Return `value` unchanged, raising OverflowError past the 128-bit budget."""
    if value < 0 or value >= NAT_LIMIT:
        raise OverflowError(f"value {value} outside the supported range [0, 2**128)")
    return value


def ceil_div(a: int, b: int) -> int:
    """Least integer >= a/b."""
    _nat(a, "a")
    _nat(b, "b")
    if b == 0:
        raise ZeroDivisionError("ceil_div by zero")
    return -(-a // b)


def divides(d: int, n: int) -> bool:
    _nat(d, "d")
    _nat(n, "n")
    if d == 0:
        raise ZeroDivisionError("divisor must be positive")
    return n % d == 0


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < PRIME_LIMIT."""
    _nat(n, "n")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 53 * 53:
        return True
    for bound, witnesses in _MR_TIERS:
        if n < bound:
            break
    else:
        raise OverflowError(f"{n} exceeds the deterministic primality range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime_trial(n: int) -> bool:
    """Trial division; slow but obviously correct. Used as a cross-check."""
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def primes_upto(n: int) -> list[int]:
    """All primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending (trial division)."""
    _nat(n, "n")
    if n == 0:
        raise ValueError("0 has no finite set of prime divisors")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power_part(n: int, p: int) -> int:
    """Largest power of p dividing n >= 1."""
    if n <= 0:
        raise ValueError("n must be positive")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Unique r < m1*m2 with r = r1 (mod m1) and r = r2 (mod m2)."""
    for name, v in (("r1", r1), ("m1", m1), ("r2", r2), ("m2", m2)):
        _nat(v, name)
    if m1 == 0 or m2 == 0:
        raise ZeroDivisionError("moduli must be positive")
    if gcd(m1, m2) != 1:
        raise ValueError(f"moduli {m1} and {m2} are not coprime")
    if r1 >= m1 or r2 >= m2:
        raise ValueError("residues must be reduced modulo their moduli")
    # r = r1 + m1 * k with m1 * k = r2 - r1 (mod m2)
    k = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * k
