"""Exact elementary number theory: primes, factorization, Mobius, phi, p-parts.

Everything here works on plain Python ints (arbitrary precision) and is pure.
Primality is deterministic trial division; intended scale is n <= ~10**9.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=65536)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(factorize(n))


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)**(number of prime factors)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    if n == 1:
        return 1
    fac = _factorize_cached(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    out = n
    for p, _ in _factorize_cached(n):
        out -= out // p
    return out


@dataclass(frozen=True)
class PAdicPart:
    """p-adic valuation data of an integer: part == p**ord exactly."""

    ord: int
    part: int


def p_adic(n: int, p: int) -> PAdicPart:
    """Largest power of the prime p dividing n >= 1, as (ord, p**ord)."""
    if n < 1:
        raise ValueError(f"p_adic requires n >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"p_adic requires a prime modulus, got {p}")
    ord_ = 0
    part = 1
    while n % p == 0:
        n //= p
        ord_ += 1
        part *= p
    return PAdicPart(ord_, part)


def p_part(n: int, p: int) -> int:
    """Shorthand for p_adic(n, p).part."""
    return p_adic(n, p).part


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, ascending (1 first, n last)."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    out = [1]
    for p, e in _factorize_cached(n):
        out = [d * pk for d in out for pk in _prime_powers(p, e)]
    out.sort()
    return out


def _prime_powers(p: int, e: int) -> list[int]:
    pows = [1]
    for _ in range(e):
        pows.append(pows[-1] * p)
    return pows


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Ascending primes p with lo <= p <= hi (empty list if none)."""
    if lo > hi:
        raise ValueError(f"primes_in_range requires lo <= hi, got {lo} > {hi}")
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]
