import random
from math import gcd

import pytest

from constacodes import (CapExceeded, ChainQuotient, ConstaCode, EquivMap,
                         Inapplicable, NoRootError, Poly, QuotientRing,
                         chain_code, chain_quotient_build,
                         code_from_generators, crt_split, enumerate_all_ideals,
                         galois_ps_root, is_constacyclic_closed, lift_nth_root,
                         make_chain_ring, make_field, shift,
                         unit_in_chain_quotient, weight_enumerator)

F5 = make_field(5, 1)
Z4 = make_chain_ring("galois", 2, 2, 1)
Z9 = make_chain_ring("galois", 3, 2, 1)
Z25 = make_chain_ring("galois", 5, 2, 1)


def test_shift_is_multiplication_by_x():
    Q = QuotientRing(F5, 3, F5.one())
    c = Q.from_ints([1, 2, 3])
    assert shift(Q, c) == Q.x() * c
    assert shift(Q, c).coeffs == Q.from_ints([3, 1, 2]).coeffs


def test_negacyclic_shift():
    Q = QuotientRing(Z25, 2, -Z25.one())
    c = Q.from_ints([3, 4])
    assert shift(Q, c) == Q.from_ints([-4, 3])


def test_length_one_quotient():
    Q = QuotientRing(Z9, 1, Z9.from_int(5))
    assert Q.x() == Q.elem([Z9.from_int(5)])
    f = Poly.from_ints(Z9, [2, 3, 1])  # x^2 + 3x + 2 -> 25 + 15 + 2
    assert Q.from_poly(f) == Q.from_ints([25 + 15 + 2])


def test_quotient_multiplication_folds_exactly():
    Q = QuotientRing(F5, 3, F5.from_int(2))
    x = Q.x()
    assert x * x * x == Q.from_ints([2])
    f = Q.from_ints([1, 1, 0])
    g = Q.from_ints([0, 1, 1])
    # (1+x)(x+x^2) = x + 2x^2 + x^3 = 2 + x + 2x^2
    assert f * g == Q.from_ints([2, 1, 2])


def test_code_canonical_matrix_and_cardinality_field():
    F2 = make_field(2, 1)
    Q = QuotientRing(F2, 7, F2.one())
    from constacodes import factor_xn_minus_one_field
    fact = factor_xn_minus_one_field(F2, 7)
    g = next(f for f, _ in fact.factors if f.degree == 3)
    C = ConstaCode(Q, [Q.from_poly(g)])
    assert C.cardinality == 2 ** 4
    assert len(C.canonical_matrix) == 4
    assert len(list(C.codewords())) == 16
    assert all(C.contains(w) for w in C.codewords())


def test_code_membership_and_equality_chain_ring():
    Q = QuotientRing(Z4, 2, -Z4.one())   # Z_4[x]/(x^2+1)
    C = ConstaCode(Q, [Q.from_ints([1, 1])])
    D = ConstaCode(Q, [Q.from_ints([1, 1]), Q.from_ints([2, 2])])
    assert C == D
    E = ConstaCode(Q, [Q.from_ints([2, 2])])
    assert E <= C and not C <= E
    assert C.contains(Q.from_ints([3, 3]))
    assert not C.contains(Q.from_ints([1, 0]))
    words = set(w.key() for w in C.codewords())
    assert len(words) == C.cardinality


def test_enumerate_all_ideals_frozen_counts():
    Q = QuotientRing(Z4, 2, -Z4.one())   # Z_4[x]/(x^2+1)
    ideals = enumerate_all_ideals(Q)
    assert [C.cardinality for C in ideals] == [16, 8, 4, 2, 1]
    # a field quotient that is a field: exactly the two trivial ideals
    F4 = make_field(2, 2)
    Qf = QuotientRing(make_field(3, 1), 2, make_field(3, 1).from_int(2))
    # x^2 - 2 irreducible over F_3, so the quotient is the field F_9
    assert [C.cardinality for C in enumerate_all_ideals(Qf)] == [9, 1]


def test_enumeration_cap():
    Q = QuotientRing(Z25, 9, Z25.one())
    with pytest.raises(CapExceeded):
        enumerate_all_ideals(Q)
    with pytest.raises(CapExceeded):
        list(Q.elements())


def test_equiv_map_frozen_example():
    # delta = 3 has 3^3 = 2, mapping cyclic length 3 onto lambda = 2
    Q1 = QuotientRing(F5, 3, F5.one())
    Q2 = QuotientRing(F5, 3, F5.from_int(2))
    psi = EquivMap(Q1, Q2, F5.from_int(3))
    img = psi.apply(Q1.from_poly(Poly.from_ints(F5, [-1, 1])))
    assert img == Q2.from_poly(Poly.from_ints(F5, [-1, 2]))


def test_equiv_map_is_weight_preserving_isomorphism():
    rng = random.Random(7)
    Q1 = QuotientRing(Z9, 4, Z9.one())
    delta = Z9.from_int(2)
    Q2 = QuotientRing(Z9, 4, delta ** 4)
    psi = EquivMap(Q1, Q2, delta)
    for _ in range(300):
        f = Q1.from_ints([rng.randrange(9) for _ in range(4)])
        g = Q1.from_ints([rng.randrange(9) for _ in range(4)])
        assert psi.apply(f + g) == psi.apply(f) + psi.apply(g)
        assert psi.apply(f * g) == psi.apply(f) * psi.apply(g)
        assert psi.unapply(psi.apply(f)) == f
        assert sum(1 for c in f.coeffs if not c.is_zero()) == \
            sum(1 for c in psi.apply(f).coeffs if not c.is_zero())


def test_equiv_map_rejects_wrong_delta():
    Q1 = QuotientRing(F5, 3, F5.one())
    Q2 = QuotientRing(F5, 3, F5.from_int(3))
    with pytest.raises(ValueError):
        EquivMap(Q1, Q2, F5.from_int(3))  # 3^3 = 2 != 3


def test_ideal_transport_preserves_shift_closure():
    from constacodes import factor_xn_minus_one_field
    F7 = make_field(7, 1)
    Q1 = QuotientRing(F7, 3, F7.one())
    delta = F7.from_int(2)
    Q2 = QuotientRing(F7, 3, delta ** 3)
    psi = EquivMap(Q1, Q2, delta)
    fact = factor_xn_minus_one_field(F7, 3)
    for f, _ in fact.factors:
        C = ConstaCode(Q1, [Q1.from_poly(f)])
        D = psi.apply_code(C)
        rowsC = [Q1.elem(list(row)) for row in C.canonical_matrix]
        rowsD = [Q2.elem(list(row)) for row in D.canonical_matrix]
        assert is_constacyclic_closed(Q1, rowsC)
        assert is_constacyclic_closed(Q2, rowsD)
        assert weight_enumerator(C) == weight_enumerator(D)


def test_is_constacyclic_closed_negative():
    Q = QuotientRing(F5, 3, F5.one())
    assert not is_constacyclic_closed(Q, [Q.from_ints([1, 2, 0])])
    assert is_constacyclic_closed(Q, [Q.from_ints([1, 1, 1])])


def test_weight_enumerator_full_ring():
    F2 = make_field(2, 1)
    Q = QuotientRing(F2, 3, F2.one())
    C = ConstaCode(Q, [Q.one()])
    assert weight_enumerator(C) == [1, 3, 3, 1]
    Qz = QuotientRing(Z4, 1, Z4.one())
    C = ConstaCode(Qz, [Qz.one()])
    assert weight_enumerator(C, kind="homogeneous") == [1, 2, 1]


def test_all_units_equivalent_when_length_coprime_to_q_minus_one():
    for q, (p, r) in [(4, (2, 2)), (8, (2, 3)), (9, (3, 2)), (25, (5, 2)),
                      (27, (3, 3)), (5, (5, 1)), (7, (7, 1))]:
        F = make_field(p, r)
        for n in range(1, 21):
            if gcd(n, q - 1) != 1:
                continue
            for lam in F.units():
                assert F.nth_root(lam, n) is not None


def test_odd_length_plus_minus_root_transfer():
    for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)]:
        F = make_field(p, r)
        for m in (1, 3, 5):
            for lam in F.units():
                if F.nth_root(lam, m) is None:
                    continue
                for s in (1, 2):
                    n = m * p ** s
                    assert F.nth_root(lam, n) is not None
                    assert F.nth_root(-lam, n) is not None


def test_even_length_root_transfer_when_q_is_1_mod_4():
    for (p, r) in [(5, 1), (13, 1), (3, 2)]:
        F = make_field(p, r)
        assert F.q % 4 == 1
        squares = {(x * x).key() for x in F.units()}
        for m in (1, 3):
            for delta in F.units():
                if delta.key() not in squares:
                    continue
                lam = delta ** (2 * m)
                for s in (1, 2):
                    n = 2 * m * p ** s
                    assert F.nth_root(lam, n) is not None
                    assert F.nth_root(-lam, n) is not None


# ---- CRT splitting ----

def test_crt_idempotents_and_roundtrip():
    rng = random.Random(11)
    sp = crt_split(Z25, 3, "cyclic")
    one = sp.cyclic.one()
    assert sp.e1 + sp.e2 == one
    assert (sp.e1 * sp.e2).is_zero()
    assert sp.e1 * sp.e1 == sp.e1 and sp.e2 * sp.e2 == sp.e2
    for _ in range(200):
        f = sp.ambient.from_ints([rng.randrange(25) for _ in range(6)])
        g = sp.ambient.from_ints([rng.randrange(25) for _ in range(6)])
        fa, fb = sp.forward(f)
        assert sp.backward(fa, fb) == f
        ga, gb = sp.forward(g)
        ha, hb = sp.forward(f * g)
        assert ha == fa * ga and hb == fb * gb


def test_crt_negacyclic_variant_needs_a_root_of_minus_one():
    sp = crt_split(Z25, 3, "negacyclic")
    assert sp.nu0 == Z25.from_int(7)
    assert sp.ambient.lam == -Z25.one()
    rng = random.Random(13)
    for _ in range(200):
        f = sp.ambient.from_ints([rng.randrange(25) for _ in range(6)])
        a, b = sp.forward(f)
        assert sp.backward(a, b) == f
    with pytest.raises(NoRootError):
        crt_split(Z9, 3, "negacyclic")
    with pytest.raises(NoRootError):
        crt_split(make_chain_ring("galois", 3, 3, 1), 5, "negacyclic")


def test_crt_rejects_bad_parameters():
    with pytest.raises(Inapplicable):
        crt_split(Z4, 3, "cyclic")       # p = 2
    with pytest.raises(Inapplicable):
        crt_split(Z9, 4, "cyclic")       # even m
    with pytest.raises(ValueError):
        crt_split(Z9, 3, "bogus")


# ---- length p^s chain quotients ----

def test_ps_root_search():
    assert galois_ps_root(Z9, Z9.from_int(8), 1) == Z9.from_int(8)
    assert galois_ps_root(Z9, Z9.from_int(1), 1) == Z9.one()
    assert galois_ps_root(Z9, Z9.from_int(4), 1) is None
    with pytest.raises(Inapplicable):
        ChainQuotient(Z9, 1, Z9.from_int(4), Z9.one())


def test_chain_quotient_z4_frozen():
    cq = chain_quotient_build(Z4, 1, Z4.one(), Z4.one())   # Z_4[x]/(x^2-3)
    assert cq.lam == Z4.from_int(3)
    assert cq.nilpotency_index() == 4
    x = cq.Q.x()
    assert unit_in_chain_quotient(cq, x)
    assert x * cq.Q.coerce(Poly.from_ints(Z4, [0, 3])) == cq.Q.one()
    assert not unit_in_chain_quotient(cq, cq.pi)
    assert not unit_in_chain_quotient(cq, cq.Q.from_ints([2]))
    rho = cq.rho()
    assert cq.pi ** 2 == rho * Z4.gamma
    assert unit_in_chain_quotient(cq, rho)


def test_chain_codes_z9_frozen():
    cq = chain_quotient_build(Z9, 1, Z9.from_int(8), Z9.one())
    assert cq.alpha0 == Z9.from_int(8)
    assert cq.max_index == 6
    cards = [chain_code(cq, i).cardinality for i in range(7)]
    assert cards == [3 ** (6 - i) for i in range(7)]
    for i in range(6):
        assert chain_code(cq, i + 1) <= chain_code(cq, i)
    ideals = enumerate_all_ideals(cq.Q)
    assert len(ideals) == 7
    chain = [chain_code(cq, i) for i in range(7)]
    assert all(any(C == D for D in chain) for C in ideals)
    with pytest.raises(ValueError):
        chain_code(cq, 7)
    with pytest.raises(ValueError):
        chain_code(cq, -1)


def test_unit_criterion_matches_brute_force_exhaustively():
    cq = chain_quotient_build(Z4, 1, Z4.one(), Z4.one())
    elems = list(cq.Q.elements())
    for f in elems:
        brute = any((f * g) == cq.Q.one() for g in elems)
        assert unit_in_chain_quotient(cq, f) == brute


def test_chain_quotient_s_zero():
    cq = chain_quotient_build(Z9, 0, Z9.from_int(2), Z9.from_int(4))
    assert cq.n == 1 and cq.max_index == 2
    assert [chain_code(cq, i).cardinality for i in range(3)] == [9, 3, 1]


def test_chain_quotient_degenerate_field_case():
    F9 = make_field(3, 2)
    R = make_chain_ring("galois", 3, 1, 2)
    alpha = R.xi
    cq = chain_quotient_build(R, 1, alpha, R.one())
    assert cq.max_index == 3
    assert cq.nilpotency_index() == 3
    ideals = enumerate_all_ideals(cq.Q)
    assert len(ideals) == 4


def test_code_serialization_shape():
    Q = QuotientRing(Z4, 2, -Z4.one())
    C = ConstaCode(Q, [Q.from_ints([1, 1])])
    data = C.to_json()
    assert set(data) == {"ring", "n", "lambda", "canonical_matrix", "cardinality"}
    assert data["cardinality"] == C.cardinality
    assert data["n"] == 2
