"""Integer helpers: valuations, primality, and factorization.

Discriminants of the polynomials handled here can run to dozens of digits,
so trial division alone is not enough; factorization falls back to Brent's
variant of Pollard rho after stripping small primes.  Everything is
deterministic: the rho "random" walk uses a fixed constant sequence.
"""

from __future__ import annotations

import math

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]

# Strong-pseudoprime bases proving primality for n < 3.3 * 10^24; larger n
# fall back to the same fixed bases, which is probabilistic but deterministic.
_MR_BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def odd_part(n: int) -> int:
    """n with all factors of two removed (sign preserved, odd_part(0) = 0)."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    return sign * (n >> valuation(n, 2))


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; exact below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
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


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        f = lambda x: (x * x + c) % n
        x, y, d = 2, 2, 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in range(2, 10000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def odd_prime_divisors(n: int) -> list[int]:
    """Sorted odd primes dividing n (n nonzero)."""
    return sorted(p for p in factorize(n) if p != 2)
