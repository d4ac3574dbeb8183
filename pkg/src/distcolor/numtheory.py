"""Deterministic integer and modular arithmetic primitives.

All residues are canonicalized to {0, ..., m-1}. Primality testing is
deterministic for every input that fits in 64 bits (fixed Miller-Rabin
witness set, no probabilistic error).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPrime, NotCoprime, ZeroDivisor

# Witness set proven complete for all n < 3.3 * 10^24, far past 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the odd-order test for 2 modulo a prime p.

    condition_holds is true iff no power of 2 is congruent to -1 mod p;
    witness_r is the smallest exponent r with 2^r = -1 when one exists.
    """

    p: int
    order_of_two: int
    condition_holds: bool
    witness_r: int | None = None


def is_prime(m: int) -> bool:
    """Deterministic primality test (exact for all 64-bit inputs)."""
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def mod_pow(a: int, e: int, m: int) -> int:
    """a**e mod m by square-and-multiply, canonicalized to {0, ..., m-1}."""
    return pow(a % m, e, m)


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo the prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisor(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Least k >= 1 with a^k = 1 mod the prime p; always divides p - 1."""
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    a %= p
    if a == 0:
        raise NotCoprime(f"0 is not a unit mod {p}")
    order = p - 1
    for q in _prime_factors(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise InvalidPrime(f"{p} is not an odd prime")
    e = pow(a % p, (p - 1) // 2, p)
    if e == 0:
        return 0
    return 1 if e == 1 else -1


def check_t1_condition(p: int) -> ConditionReport:
    """Test whether no power of 2 equals -1 mod p (p prime, p > 3).

    -1 lies in the cyclic group generated by 2 iff the order d of 2 is
    even and 2^(d/2) = -1, so only one exponent needs checking.
    """
    if p <= 3 or not is_prime(p):
        raise InvalidPrime(f"need a prime p > 3, got {p}")
    d = multiplicative_order(2, p)
    if d % 2 == 0 and pow(2, d // 2, p) == p - 1:
        return ConditionReport(p, d, False, d // 2)
    return ConditionReport(p, d, True, None)


def _sieve(limit: int) -> bytearray:
    """Byte array marking primality of 0..limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return flags


def primes_in_class(limit: int, residue: int, modulus: int) -> list[int]:
    """Ascending primes p <= limit with p = residue mod modulus."""
    if limit < 2:
        return []
    flags = _sieve(limit)
    return [p for p in range(2, limit + 1) if flags[p] and p % modulus == residue]


def next_prime(m: int) -> int:
    """Smallest prime >= m."""
    k = max(m, 2)
    while not is_prime(k):
        k += 1
    return k
