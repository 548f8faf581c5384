import pytest

from constacodes import (Inapplicable, hom_weight, kernel_mu_star_order,
                         lift_nth_root, make_chain_ring, make_field)

Z4 = make_chain_ring("galois", 2, 2, 1)
Z8 = make_chain_ring("galois", 2, 3, 1)
Z9 = make_chain_ring("galois", 3, 2, 1)
Z25 = make_chain_ring("galois", 5, 2, 1)
GR42 = make_chain_ring("galois", 2, 2, 2)
GR92 = make_chain_ring("galois", 3, 2, 2)
U32 = make_chain_ring("u_adic", 3, 2, 1)
U222 = make_chain_ring("u_adic", 2, 2, 2)

SMALL_RINGS = [Z4, Z8, Z9, Z25, GR42, GR92, U32, U222,
               make_chain_ring("galois", 2, 4, 1),
               make_chain_ring("u_adic", 2, 3, 1),
               make_chain_ring("galois", 2, 1, 3),
               make_chain_ring("u_adic", 5, 1, 1)]


@pytest.mark.parametrize("R", SMALL_RINGS, ids=lambda R: R.spec_string())
def test_cardinality_and_ring_axioms(R):
    elems = list(R.elements())
    assert len(elems) == R.p ** (R.e * R.r) == R.size
    sample = elems[:: max(1, len(elems) // 8)]
    for a in sample:
        assert a + R.zero() == a and a * R.one() == a
        assert a - a == R.zero()
    for a in sample:
        for b in sample:
            assert a + b == b + a and a * b == b * a
            for c in sample[:3]:
                assert (a + b) * c == a * c + b * c


@pytest.mark.parametrize("R", SMALL_RINGS, ids=lambda R: R.spec_string())
def test_ideal_lattice_is_the_gamma_chain(R):
    """Brute-force ideal lattice = {<gamma^i>} with |<gamma^i>| = q^(e-i)."""
    elems = list(R.elements())
    principal = {}
    for a in elems:
        ideal = frozenset((a * b).key() for b in elems)
        principal[ideal] = principal.get(ideal, 0) + 1
    expected = []
    for i in range(R.e + 1):
        g = R.gamma ** i if i < R.e else R.zero()
        ideal = frozenset((g * b).key() for b in elems)
        assert len(ideal) == R.q ** (R.e - i)
        expected.append(ideal)
    # every principal ideal is one of the chain ideals; sums add nothing new
    assert set(principal) == set(expected)


@pytest.mark.parametrize("R", SMALL_RINGS, ids=lambda R: R.spec_string())
def test_mu_is_a_ring_homomorphism_exhaustively(R):
    if R.size > 1 << 10:
        pytest.skip("exhaustive pair check capped at 2^10")
    elems = list(R.elements())
    for a in elems:
        for b in elems:
            assert R.mu(a + b) == R.mu(a) + R.mu(b)
            assert R.mu(a * b) == R.mu(a) * R.mu(b)
    for a in elems:
        assert R.mu(R.section(R.mu(a))) == R.mu(a)


@pytest.mark.parametrize("R", [Z4, Z9, Z25, GR42, GR92],
                         ids=lambda R: R.spec_string())
def test_teichmuller_set(R):
    ts = R.teichmuller()
    assert len(ts) == R.q
    assert len({t.key() for t in ts}) == R.q
    for t in ts:
        assert t ** (R.q) == t
    nonzero = [t for t in ts if not t.is_zero()]
    # the nonzero ones are the powers of xi, a cyclic group of order q - 1
    for k, t in enumerate(nonzero):
        assert t == R.xi ** k


def test_teichmuller_frozen_values():
    assert sorted(t.coords[0] for t in Z9.teichmuller()) == [0, 1, 8]
    assert sorted(t.coords[0] for t in Z25.teichmuller()) == [0, 1, 7, 18, 24]


@pytest.mark.parametrize("R", [Z4, Z8, Z9, Z25, GR42, GR92, U32, U222],
                         ids=lambda R: R.spec_string())
def test_p_adic_representation_round_trips(R):
    if R.family != "galois":
        pytest.skip("p-adic digits are defined for the galois family")
    ts = {t.key() for t in R.teichmuller()}
    for a in R.elements():
        digits = R.p_adic_repr(a).digits
        assert len(digits) == R.e
        assert all(d.key() in ts for d in digits)
        assert R.reconstruct(digits) == a


def test_p_adic_frozen_digits():
    assert [d.coords[0] for d in Z4.p_adic_repr(Z4.from_int(3)).digits] == [1, 1]
    assert [d.coords[0] for d in Z9.p_adic_repr(Z9.from_int(5)).digits] == [8, 8]


@pytest.mark.parametrize("R", SMALL_RINGS, ids=lambda R: R.spec_string())
def test_units_and_valuation(R):
    for a in R.elements():
        v = R.valuation(a)
        assert R.is_unit(a) == (v == 0) == (not R.mu(a).is_zero())
        if a.is_zero():
            assert v == R.e
        else:
            assert R.gamma ** v * R.divide_gamma(a, v) == a
        if R.is_unit(a):
            assert a * R.inv(a) == R.one()


def test_lift_nth_root_frozen_values():
    assert lift_nth_root(Z25, Z25.from_int(24), 2) == Z25.from_int(7)
    assert lift_nth_root(Z9, Z9.from_int(4), 2) == Z9.from_int(7)
    assert lift_nth_root(Z9, Z9.from_int(2), 2) is None


@pytest.mark.parametrize("R", [Z4, Z9, Z25, GR42, U32],
                         ids=lambda R: R.spec_string())
def test_one_unit_roots_always_lift(R):
    """lambda in 1 + <gamma> has an n-th root whenever gcd(n, q) = 1."""
    from math import gcd
    for z in R.transversal(R.e - 1):
        lam = R.one() + R.gamma * z
        for n in (1, 2, 3, 5):
            if gcd(n, R.q) != 1:
                continue
            delta = lift_nth_root(R, lam, n)
            assert delta is not None
            assert delta ** n == lam


def test_negacyclic_root_congruence_conditions():
    from constacodes import minus_one_is_square
    for R in [Z9, Z25, make_chain_ring("galois", 3, 3, 1), GR92,
              make_chain_ring("galois", 7, 2, 1), U32]:
        has = lift_nth_root(R, -R.one(), 2) is not None
        assert has == minus_one_is_square(R.p, R.r)


def test_hom_weight_frozen_values():
    assert [hom_weight(Z4, Z4.from_int(k)) for k in range(4)] == [0, 1, 2, 1]
    assert [hom_weight(Z9, Z9.from_int(k)) for k in range(9)] == \
        [0, 2, 2, 3, 2, 2, 3, 2, 2]


def test_kernel_mu_star_order_frozen_values():
    assert kernel_mu_star_order(Z25) == 5
    assert kernel_mu_star_order(GR42) == 4


def test_unit_difference_by_nilpotent_preserves_unitness():
    for R in [Z8, GR42, U32]:
        nilpotents = [a for a in R.elements() if R.valuation(a) >= 1]
        sample = [a for a in R.elements()][:: max(1, R.size // 16)]
        for a in sample:
            for z in nilpotents:
                assert R.is_unit(a) == R.is_unit(a + z)


def test_coerce_and_spec_round_trip():
    from constacodes.cli import parse_ring_spec
    for R in [Z4, GR92, U32]:
        assert parse_ring_spec(R.spec_string()).spec_string() == R.spec_string()
    with pytest.raises(ValueError):
        Z4.coerce(Z9.one())
