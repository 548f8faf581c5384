import pytest

from constacodes import CapExceeded, Inapplicable, make_field, minus_one_is_square
from constacodes.ffield import canonical_modulus, is_prime, prime_factors

SMALL_Q = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
           (11, 1), (13, 1), (2, 4), (5, 2), (3, 3)]


def test_canonical_modulus_is_deterministic():
    assert canonical_modulus(2, 2) == (1, 1, 1)
    assert canonical_modulus(3, 2) == (1, 0, 1)  # x^2 + 1 irreducible over F_3
    assert canonical_modulus(2, 3) == (1, 0, 1, 1)  # x^3 + x^2 + 1
    assert canonical_modulus(5, 2) == canonical_modulus(5, 2)


def test_construction_rejects_bad_parameters():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(6, 2)
    with pytest.raises(CapExceeded):
        make_field(2, 17)


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_field_axioms_on_samples(p, r):
    F = make_field(p, r)
    elems = list(F.elements())
    assert len(elems) == p ** r
    sample = elems[:: max(1, len(elems) // 8)]
    for a in sample:
        assert a + F.zero() == a
        assert a * F.one() == a
        assert a - a == F.zero()
        if not a.is_zero():
            assert a * a.inv() == F.one()
    for a in sample:
        for b in sample:
            assert a + b == b + a
            assert a * b == b * a
            for c in sample[:3]:
                assert (a + b) * c == a * c + b * c


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_primitive_element_has_full_order(p, r):
    F = make_field(p, r)
    q = p ** r
    assert F.g ** (q - 1) == F.one()
    for k in range(1, q - 1):
        assert F.g ** k != F.one()


def test_discrete_log_inverts_exponentiation():
    F = make_field(3, 2)
    for k in range(8):
        assert F.discrete_log(F.g ** k) == k


@pytest.mark.parametrize("p,r", SMALL_Q)
def test_nth_root_matches_brute_force(p, r):
    F = make_field(p, r)
    units = [a for a in F.elements() if not a.is_zero()]
    for n in (1, 2, 3, 4, 5, 6):
        powers = {(x ** n).coeffs for x in units}
        for lam in units:
            delta = F.nth_root(lam, n)
            assert (delta is not None) == (lam.coeffs in powers)
            if delta is not None:
                assert delta ** n == lam


def test_nth_root_gcd_criterion():
    from math import gcd
    F = make_field(5, 2)
    for n in (2, 3, 4, 6, 8):
        d = gcd(n, F.q - 1)
        for lam in (F.g ** 5, F.g ** 6, F.from_int(2)):
            i = F.discrete_log(lam)
            assert (F.nth_root(lam, n) is not None) == (i % d == 0)


def test_nth_root_returns_smallest_log():
    F = make_field(7, 1)
    lam = F.from_int(2)
    roots = [x for x in F.units() if x ** 3 == lam]
    if roots:
        best = min(F.discrete_log(x) for x in roots)
        assert F.discrete_log(F.nth_root(lam, 3)) == best


def test_sqrt_minus_one_criterion_all_odd_q_to_121():
    for q in range(3, 122, 2):
        for p in range(2, q + 1):
            if q % p == 0:
                break
        r = 0
        m = q
        while m > 1 and m % p == 0:
            m //= p
            r += 1
        if m != 1:
            continue
        F = make_field(p, r)
        squares = {(x * x).coeffs for x in F.units()}
        has = (-F.one()).coeffs in squares
        assert has == minus_one_is_square(p, r)
        root = F.sqrt_minus_one()
        assert (root is not None) == has
        if root is not None:
            assert root * root == -F.one()


def test_sqrt_minus_one_rejects_characteristic_two():
    with pytest.raises(Inapplicable):
        make_field(2, 2).sqrt_minus_one()
    with pytest.raises(Inapplicable):
        minus_one_is_square(2, 3)


def test_oddly_even_exponent_solvability():
    # x^(2m) = -1 solvable (m odd, q odd) iff -1 is a square
    for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]:
        F = make_field(p, r)
        for m in (1, 3, 5):
            n = 2 * m
            solvable = any((x ** n) == -F.one() for x in F.units())
            if minus_one_is_square(p, r):
                assert F.nth_root(-F.one(), n) is not None or not solvable
            else:
                assert not solvable


def test_signed_coefficient_display():
    F5 = make_field(5, 1)
    assert F5.coeff_str(F5.from_int(4)) == "-1"
    assert F5.coeff_str(F5.from_int(2)) == "2"
    F2 = make_field(2, 1)
    assert F2.coeff_str(F2.one()) == "1"


def test_spec_string_round_trip():
    from constacodes.cli import parse_ring_spec
    F = make_field(3, 3)
    assert parse_ring_spec(F.spec_string()) is F


def test_small_number_theory_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []


def test_chain_protocol_degenerate_case():
    F = make_field(5, 1)
    a = F.from_int(3)
    assert F.valuation(a) == 0 and F.valuation(F.zero()) == 1
    assert F.is_unit(a) and not F.is_unit(F.zero())
    assert F.mu(a) == a and F.section(a) == a
    assert F.transversal(0) == [F.zero()]
    assert len(F.transversal(1)) == 5
