"""Odd ramification: frozen small fields plus closed-form quadratic oracle."""

import random

import pytest

from heavenly.errors import ResourceCapError
from heavenly.integers import factorize, odd_prime_divisors
from heavenly.polynomials import UniPoly, discriminant, parse_polynomial
from heavenly.ramification import (
    RAMIFICATION_DEGREE_CAP,
    _dedekind_is_p_maximal,
    _odd_ramified_of_polynomial,
    _p_maximal_index_valuation,
    odd_ramified_primes,
    unramified_away_2,
)
from heavenly.towers import base_field, extend, splitting_tower


def tower_of(text):
    return extend(base_field("Q"), parse_polynomial(text))


def test_rationals_have_no_odd_ramification():
    assert odd_ramified_primes(base_field("Q")) == set()
    assert unramified_away_2(base_field("Q"))


def test_gaussian_integers_unramified_away_2():
    assert odd_ramified_primes(base_field("Q(i)")) == set()


def test_all_four_base_quadratics_unramified_away_2():
    for tag in ("Q(i)", "Q(sqrt2)", "Q(sqrt-2)"):
        assert unramified_away_2(base_field(tag)), tag


def test_sqrt5_ramified_at_5():
    assert odd_ramified_primes(tower_of("x^2-5")) == {5}


def test_sqrt45_is_sqrt5_in_disguise():
    # 3^2 divides the polynomial discriminant 180, but the order is not
    # 3-maximal and enlargement removes the 3 entirely
    assert odd_ramified_primes(tower_of("x^2-45")) == {5}


def test_sqrt_minus_3_ramified_at_3():
    assert odd_ramified_primes(tower_of("x^2+3")) == {3}
    assert not unramified_away_2(tower_of("x^2+3"))


def test_eighth_roots_of_unity_unramified_away_2():
    zeta8 = splitting_tower(parse_polynomial("x^4+1"))
    assert unramified_away_2(zeta8)


def test_sqrt2_i_tower_unramified_away_2():
    K = extend(base_field("Q(sqrt2)"), parse_polynomial("x^2+1"))
    assert odd_ramified_primes(K) == set()


def test_twelfth_cyclotomic_ramified_at_3_with_maximal_order():
    # x^4 - x^2 + 1 has discriminant 144; the order is already 3-maximal
    # and the reduction is a square, so 3 genuinely ramifies
    fl = [1, 0, -1, 0, 1]
    assert _dedekind_is_p_maximal(fl, 3)
    assert _odd_ramified_of_polynomial(UniPoly.of(*fl)) == {3}


def test_scaled_twelfth_cyclotomic_needs_deep_enlargement():
    # root 3*zeta12: same field, index 3^6, several enlargement rounds
    f = parse_polynomial("x^4-9*x^2+81")
    assert _p_maximal_index_valuation([81, 0, -9, 0, 1], 3) == 6
    assert _odd_ramified_of_polynomial(f) == {3}


def test_cube_root_2_ramified_at_3():
    assert odd_ramified_primes(tower_of("x^3-2")) == {3}


def test_fifth_cyclotomic_ramified_at_5():
    assert _odd_ramified_of_polynomial(
        parse_polynomial("x^4+x^3+x^2+x+1")) == {5}


def test_seventh_cyclotomic_ramified_at_7():
    assert _odd_ramified_of_polynomial(
        parse_polynomial("x^6+x^5+x^4+x^3+x^2+x+1")) == {7}


def test_disc_23_cubic():
    assert _odd_ramified_of_polynomial(parse_polynomial("x^3-x-1")) == {23}


def test_degree_cap_enforced():
    from heavenly.towers import _extend_unchecked, tower_field

    K = base_field("Q(sqrt2)")
    while K.absolute_degree <= RAMIFICATION_DEGREE_CAP:
        F = tower_field(K)
        K = _extend_unchecked(K, [F.neg(F.generator()), F.zero(), F.one()])
    assert K.absolute_degree == 128
    with pytest.raises(ResourceCapError):
        odd_ramified_primes(K)


def test_quadratic_fields_match_squarefree_part_oracle():
    # Q(sqrt m) ramifies at exactly the odd primes of the squarefree part
    rng = random.Random(20260822)
    trials = 0
    while trials < 60:
        m = rng.randint(2, 600)
        r = int(m ** 0.5)
        if r * r == m:
            continue
        square_free = 1
        for p, e in factorize(m).items():
            if e % 2:
                square_free *= p
        expected = set(odd_prime_divisors(square_free)) \
            if square_free != 1 else set()
        got = _odd_ramified_of_polynomial(UniPoly.of(-m, 0, 1))
        assert got == expected, (m, got, expected)
        trials += 1


def test_ramified_set_within_polynomial_discriminant():
    rng = random.Random(97)
    count = 0
    while count < 25:
        coeffs = [rng.randint(-9, 9) for _ in range(3)] + [1]
        f = UniPoly.of(*coeffs)
        d = discriminant(f)
        if d == 0:
            continue
        from heavenly.factorization import is_irreducible_over_q
        if not is_irreducible_over_q(f):
            continue
        ram = _odd_ramified_of_polynomial(f)
        allowed = set(odd_prime_divisors(int(d)))
        assert ram <= allowed, (coeffs, ram, allowed)
        count += 1
