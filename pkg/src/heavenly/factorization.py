"""Factorization of univariate polynomials over Q.

The route is classical Zassenhaus: reduce to a monic squarefree integer
polynomial, factor it modulo the smallest odd prime keeping it squarefree
(Berlekamp, fully deterministic), Hensel-lift the modular factors past the
Mignotte coefficient bound, and recombine subsets in ascending size order.
Returned factors are monic over Q, sorted by (degree, coefficient tuple),
with multiplicities.

The mod-p layer works on plain int lists (ascending coefficients, trimmed).
It is internal but also feeds the ramification machinery, which needs mod-p
factorizations with multiplicities.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import isqrt

from .errors import InputError, ResourceCapError
from .integers import is_probable_prime
from .polynomials import (
    UniPoly,
    monic_integral_with_scale,
    poly_gcd,
)

# Guard against pathological subset recombination; generous for this
# toolkit's degree range.
RECOMBINATION_CAP = 5_000_000


# ---------------------------------------------------------------------------
# Arithmetic in Fp[x] on int lists.


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _mod_add(f, g, p):
    n = max(len(f), len(g))
    return _trim(
        [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
         for i in range(n)]
    )


def _mod_sub(f, g, p):
    n = max(len(f), len(g))
    return _trim(
        [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
         for i in range(n)]
    )


def _mod_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _mod_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = [c % p for c in f]
    d = len(g) - 1
    inv_lc = pow(g[-1], -1, p)
    q = [0] * max(len(f) - d, 0)
    for k in range(len(f) - 1, d - 1, -1):
        c = f[k]
        if c == 0:
            continue
        c = c * inv_lc % p
        q[k - d] = c
        for j, b in enumerate(g):
            f[k - d + j] = (f[k - d + j] - c * b) % p
    return _trim(q), _trim(f[:d])


def _mod_gcd(f, g, p):
    a, b = _trim([c % p for c in f]), _trim([c % p for c in g])
    while b:
        a, b = b, _mod_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _mod_pow_mod(base, e, modulus, p):
    """base^e mod (modulus, p) by repeated squaring."""
    out = [1]
    base = _mod_divmod(base, modulus, p)[1]
    while e:
        if e & 1:
            out = _mod_divmod(_mod_mul(out, base, p), modulus, p)[1]
        base = _mod_divmod(_mod_mul(base, base, p), modulus, p)[1]
        e >>= 1
    return out


def _mod_deriv(f, p):
    return _trim([i * c % p for i, c in enumerate(f)][1:])


def _mod_monic(f, p):
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _nullspace_mod_p(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the kernel of the matrix m over Fp (row-major)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [row[:] for row in m]
    pivots: dict[int, int] = {}
    rank = 0
    for c in range(cols):
        pr = next((r for r in range(rank, rows) if a[r][c] % p), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][c] % p:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        pivots[c] = rank
        rank += 1
    basis = []
    for fc in (c for c in range(cols) if c not in pivots):
        v = [0] * cols
        v[fc] = 1
        for c, r in pivots.items():
            v[c] = (-a[r][fc]) % p
        basis.append(v)
    return basis


def _berlekamp_split(f: list[int], p: int) -> list[list[int]]:
    """Irreducible factors of squarefree monic f over Fp (deterministic)."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    xp = _mod_pow_mod([0, 1], p, f, p)
    cols = []
    power = [1]
    for _ in range(n):
        cols.append(power + [0] * (n - len(power)))
        power = _mod_divmod(_mod_mul(power, xp, p), f, p)[1]
    frob_minus_id = [
        [(cols[j][i] - (1 if i == j else 0)) % p for j in range(n)]
        for i in range(n)
    ]
    basis = _nullspace_mod_p(frob_minus_id, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        if len(factors) == r:
            break
        vpoly = _trim([c % p for c in v])
        if len(vpoly) <= 1:
            continue  # constants never separate factors
        refined = []
        for g in factors:
            if len(g) - 1 == 1:
                refined.append(g)
                continue
            rem = g
            for a in range(p):
                if len(rem) - 1 < 2:
                    break
                d = _mod_gcd(rem, _mod_sub(vpoly, [a], p), p)
                if 1 <= len(d) - 1 < len(rem) - 1:
                    refined.append(d)
                    rem = _mod_divmod(rem, d, p)[0]
            if len(rem) - 1 >= 1:
                refined.append(_mod_monic(rem, p))
        factors = refined
    if len(factors) != r:
        raise ArithmeticError("Berlekamp split incomplete")
    return factors


def _reduce_mod_p(f: UniPoly, p: int) -> list[int]:
    """Coefficients of f reduced mod p; denominators must be units mod p."""
    out = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise InputError(f"denominator of {c} not invertible mod {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return _trim(out)


def factor_mod_p(f: UniPoly, p: int) -> list[tuple[list[int], int]]:
    """Factorization over Fp with multiplicities; f must be nonzero mod p.

    Returns monic irreducible factors as ascending int lists, sorted by
    (degree, coefficients); the leading unit is discarded.
    """
    if not is_probable_prime(p):
        raise InputError(f"{p} is not prime")
    return _factor_mod_p_lists(_reduce_mod_p(f, p), p)


def _factor_mod_p_lists(f: list[int], p: int) -> list[tuple[list[int], int]]:
    f = _trim([c % p for c in f])
    if not f:
        raise InputError("zero polynomial mod p")
    out: dict[tuple[int, ...], int] = {}
    _factor_mod_p_rec(_mod_monic(f, p), p, 1, out)
    items = [(list(k), e) for k, e in out.items()]
    items.sort(key=lambda t: (len(t[0]), t[0]))
    return items


def _factor_mod_p_rec(f, p, mult, out):
    if len(f) - 1 < 1:
        return
    d = _mod_deriv(f, p)
    if not d:
        # f = g(x)^p with g's coefficients the p-th roots, which in Fp are
        # the coefficients themselves.
        g = [f[i] for i in range(0, len(f), p)]
        _factor_mod_p_rec(g, p, mult * p, out)
        return
    sqfree = _mod_divmod(f, _mod_gcd(f, d, p), p)[0]
    for piece in _berlekamp_split(_mod_monic(sqfree, p), p):
        key = tuple(piece)
        e = 0
        while True:
            q, r = _mod_divmod(f, piece, p)
            if r:
                break
            f = q
            e += 1
        out[key] = out.get(key, 0) + mult * e
    if len(f) - 1 >= 1:
        _factor_mod_p_rec(f, p, mult, out)


# ---------------------------------------------------------------------------
# Hensel lifting: quadratic two-factor steps arranged in a binary tree.
# All factors are monic, so divisions stay exact over Z/m.


def _zx_add(f, g, m):
    n = max(len(f), len(g))
    return _trim(
        [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m
         for i in range(n)]
    )


def _zx_sub(f, g, m):
    n = max(len(f), len(g))
    return _trim(
        [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m
         for i in range(n)]
    )


def _zx_mul(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % m
    return _trim(out)


def _zx_divmod_monic(f, g, m):
    f = [c % m for c in f]
    d = len(g) - 1
    q = [0] * max(len(f) - d, 0)
    for k in range(len(f) - 1, d - 1, -1):
        c = f[k]
        if c == 0:
            continue
        q[k - d] = c
        for j, b in enumerate(g):
            f[k - d + j] = (f[k - d + j] - c * b) % m
    return _trim(q), _trim(f[:d])


def _xgcd_mod_p(f, g, p):
    """(s, t) with s*f + t*g = 1 over Fp, deg s < deg g, deg t < deg f."""
    r0, r1 = _trim([c % p for c in f]), _trim([c % p for c in g])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _mod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mod_sub(s0, _mod_mul(q, s1, p), p)
        t0, t1 = t1, _mod_sub(t0, _mod_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("xgcd of non-coprime polynomials")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g*h with s*g + t*h = 1 from mod m to mod m^2."""
    mm = m * m
    e = _zx_sub(f, _zx_mul(g, h, mm), mm)
    q, r = _zx_divmod_monic(_zx_mul(s, e, mm), h, mm)
    g1 = _zx_add(g, _zx_add(_zx_mul(t, e, mm), _zx_mul(q, g, mm), mm), mm)
    h1 = _zx_add(h, r, mm)
    b = _zx_sub(_zx_add(_zx_mul(s, g1, mm), _zx_mul(t, h1, mm), mm), [1], mm)
    c, d = _zx_divmod_monic(_zx_mul(s, b, mm), h1, mm)
    s1 = _zx_sub(s, d, mm)
    t1 = _zx_sub(t, _zx_add(_zx_mul(t, b, mm), _zx_mul(c, g1, mm), mm), mm)
    return g1, h1, s1, t1


def _modulus_for(p: int, target: int) -> int:
    m = p
    while m < target:
        m = m * m
    return m


def _hensel_lift_tree(f, factors, p, target):
    """Lift the mod-p factorization `factors` of f to mod p^(2^k) >= target."""
    m_final = _modulus_for(p, target)
    if len(factors) == 1:
        return [[c % m_final for c in f]]
    half = len(factors) // 2
    g = [1]
    for fac in factors[:half]:
        g = _mod_mul(g, fac, p)
    h = [1]
    for fac in factors[half:]:
        h = _mod_mul(h, fac, p)
    s, t = _xgcd_mod_p(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g = [c % m for c in g]
    h = [c % m for c in h]
    return (_hensel_lift_tree(g, factors[:half], p, target)
            + _hensel_lift_tree(h, factors[half:], p, target))


# ---------------------------------------------------------------------------
# Zassenhaus over Z.


def _int_divmod_monic(f: list[int], g: list[int]):
    """(quotient, remainder) of exact integer division by monic g."""
    f = f[:]
    d = len(g) - 1
    q = [0] * max(len(f) - d, 0)
    for k in range(len(f) - 1, d - 1, -1):
        c = f[k]
        if c == 0:
            continue
        q[k - d] = c
        for j, b in enumerate(g):
            f[k - d + j] -= c * b
    return q, _trim(f[:d])


def _mignotte_target(f: list[int]) -> int:
    """2B + 1 where B bounds every coefficient of every monic divisor of f."""
    n = len(f) - 1
    b = (1 << n) * (isqrt(sum(c * c for c in f)) + 1)
    return 2 * b + 1


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _next_odd_prime(p: int) -> int:
    q = p + 2
    while not is_probable_prime(q):
        q += 2
    return q


def _squarefree_mod(f: list[int], p: int) -> bool:
    fp = _trim([c % p for c in f])
    if len(fp) != len(f):
        return False  # leading coefficient vanished
    d = _mod_deriv(fp, p)
    if not d:
        return False
    return len(_mod_gcd(fp, d, p)) == 1


def _factor_monic_squarefree_int(f: list[int]) -> list[list[int]]:
    """Monic irreducible integer factors of a monic squarefree int poly."""
    if len(f) - 1 <= 1:
        return [f]
    # Smallest odd prime keeping f squarefree; exists since f is squarefree
    # over Q and only primes dividing the discriminant fail.
    p = 3
    while not _squarefree_mod(f, p):
        p = _next_odd_prime(p)
    modular = [fac for fac, _ in _factor_mod_p_lists(f, p)]
    if len(modular) == 1:
        return [f]
    target = _mignotte_target(f)
    m = _modulus_for(p, target)
    lifted = _hensel_lift_tree([c % m for c in f], modular, p, target)

    remaining = list(range(len(lifted)))
    current = f
    found: list[list[int]] = []
    tested = 0
    size = 1
    while 2 * size <= len(remaining):
        progressed = False
        for combo in combinations(remaining, size):
            tested += 1
            if tested > RECOMBINATION_CAP:
                raise ResourceCapError(
                    f"factor recombination exceeded {RECOMBINATION_CAP} subsets"
                )
            # Cheap screen: a true divisor's constant term divides f(0).
            if current[0] != 0:
                const = 1
                for i in combo:
                    const = const * lifted[i][0] % m
                const = _symmetric(const, m)
                if const == 0 or current[0] % const != 0:
                    continue
            prod = [1]
            for i in combo:
                prod = _zx_mul(prod, lifted[i], m)
            cand = [_symmetric(c, m) for c in prod]
            q, r = _int_divmod_monic(current, cand)
            if not r:
                found.append(cand)
                current = q
                remaining = [i for i in remaining if i not in combo]
                progressed = True
                break
        if not progressed:
            size += 1
    if len(current) - 1 >= 1:
        found.append(current)
    return found


def _provably_squarefree(f: UniPoly) -> bool:
    """Cheap one-sided test: squarefree modulo some small prime.

    deg gcd over Q never exceeds deg gcd mod p when p keeps the leading
    coefficient, so a single squarefree reduction proves squarefreeness
    and spares the exact gcd on large inputs.
    """
    ints = monic_integral_with_scale(f)[0].integer_coefficients()
    p = 3
    for _ in range(5):
        if _squarefree_mod(ints, p):
            return True
        p = _next_odd_prime(p)
    return False


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree parts with multiplicities."""
    if f.is_zero:
        raise InputError("cannot decompose the zero polynomial")
    f = f.monic()
    if f.degree < 1:
        return []
    if f.degree > 12 and _provably_squarefree(f):
        return [(f, 1)]
    out = []
    g = poly_gcd(f, f.derivative())
    w = f // g
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, g)
        piece = w // y
        if piece.degree >= 1:
            out.append((piece.monic(), i))
        w = y
        g = g // y
        i += 1
    return out


def factor_over_q(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible monic factors of f over Q with multiplicities.

    The product of factor^multiplicity times a rational constant equals f;
    the list is sorted by (degree, coefficient tuple).
    """
    if f.is_zero:
        raise InputError("cannot factor the zero polynomial")
    if f.degree < 1:
        return []
    result: list[tuple[UniPoly, int]] = []
    for part, mult in squarefree_decomposition(f):
        monic_int, scale = monic_integral_with_scale(part)
        for g_int in _factor_monic_squarefree_int(
            monic_int.integer_coefficients()
        ):
            g = UniPoly.from_list(g_int)
            if scale != 1:
                # Roots of g are scale * (roots of the factor of `part`);
                # substitute x -> scale*x and renormalize.
                g = UniPoly.from_list(
                    [c * scale**k for k, c in enumerate(g.coeffs)]
                ).monic()
            result.append((g, mult))
    result.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return result


def is_irreducible_over_q(f: UniPoly) -> bool:
    """True when deg f >= 1 and f is irreducible over Q."""
    if f.degree < 1:
        return False
    facs = factor_over_q(f)
    return len(facs) == 1 and facs[0][1] == 1


__all__ = [
    "factor_over_q",
    "is_irreducible_over_q",
    "squarefree_decomposition",
    "factor_mod_p",
    "RECOMBINATION_CAP",
]
