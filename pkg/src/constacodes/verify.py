"""Brute-force verification suites.

Every suite checks library results against an independent oracle: exhaustive
power search for root-existence criteria, full enumeration for weight axioms
and ideal structure, and batched linear algebra (numpy) for the exhaustive
classification of the length-p^s chain quotients, where quotients of up to
2^20 elements are swept element by element.

Each suite returns a list of (claim, ok, detail) records; a suite passes when
every record is ok.
"""

import random
import time
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import Inapplicable, NoRootError
from .ffield import Field, make_field, minus_one_is_square
from .chainring import hom_weight, lift_nth_root, make_chain_ring
from .poly import Poly
from .factor import (factor_xn_minus_lambda_field, factor_xn_minus_one_field,
                     hensel_lift_factorization)
from .codes import (ChainQuotient, ConstaCode, EquivMap, QuotientRing,
                    chain_code, chain_quotient_build, code_from_generators,
                    crt_split, enumerate_all_ideals, galois_ps_root,
                    is_constacyclic_closed, unit_in_chain_quotient,
                    weight_enumerator)

FIELD_SIZES = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64)


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            while q > 1:
                if q % p:
                    raise ValueError(f"{q} is not a prime power")
                q //= p
                r += 1
            return p, r
    raise ValueError("q must be >= 2")


# ---------------------------------------------------------------- lemma3.1

def suite_lemma31():
    out = []
    bad = []
    checked = 0
    for q in FIELD_SIZES:
        p, r = _prime_power(q)
        F = make_field(p, r)
        units = [a for a in F.elements() if not a.is_zero()]
        for n in range(1, 25):
            powers = {(x ** n).coeffs for x in units}
            for lam in units:
                delta = F.nth_root(lam, n)
                if (delta is not None) != (lam.coeffs in powers):
                    bad.append((q, n, lam))
                elif delta is not None and delta ** n != lam:
                    bad.append((q, n, lam))
                checked += 1
    out.append(("nth_root existence matches brute force over F_q^*",
                not bad, f"{checked} (q, n, lambda) cases" if not bad else f"counterexample {bad[0]}"))

    bad = []
    for q in range(3, 122, 2):
        try:
            p, r = _prime_power(q)
        except ValueError:
            continue
        F = make_field(p, r)
        squares = {(x * x).coeffs for x in F.elements() if not x.is_zero()}
        has = (-F.one()).coeffs in squares
        root = F.sqrt_minus_one()
        if has != minus_one_is_square(p, r) or has != (root is not None):
            bad.append(q)
        elif root is not None and root * root != -F.one():
            bad.append(q)
    out.append(("-1 is a square iff the congruence conditions hold (odd q <= 121)",
                not bad, "oracle, criterion and returned root agree" if not bad else f"q = {bad[0]}"))
    return out


# ---------------------------------------------------------------- prop4.2

def _prop42_rings():
    return [
        make_chain_ring("galois", 2, 2, 1),   # Z_4
        make_chain_ring("galois", 2, 3, 1),   # Z_8
        make_chain_ring("galois", 3, 2, 1),   # Z_9
        make_chain_ring("galois", 5, 2, 1),   # Z_25
        make_chain_ring("galois", 3, 3, 1),   # Z_27
        make_chain_ring("galois", 2, 2, 2),   # GR(4,2)
        make_chain_ring("galois", 3, 2, 2),   # GR(9,2)
        make_chain_ring("u_adic", 3, 2, 1),   # F_3[u]/(u^2)
    ]


def suite_prop42():
    bad = []
    checked = 0
    for R in _prop42_rings():
        units = list(R.units())
        for n in range(1, 13):
            if gcd(n, R.p) != 1:
                continue
            powers = {(x ** n).key() for x in units}
            for lam in units:
                delta = lift_nth_root(R, lam, n)
                exists_bf = lam.key() in powers
                exists_res = R.residue.nth_root(R.mu(lam), n) is not None
                if (delta is not None) != exists_bf or exists_bf != exists_res:
                    bad.append((R, n, lam))
                elif delta is not None and delta ** n != lam:
                    bad.append((R, n, lam))
                checked += 1
    return [("lift_nth_root existence matches brute force over R^* and residue-field existence",
             not bad, f"{checked} (R, n, lambda) cases" if not bad else f"counterexample {bad[0]}")]


# ---------------------------------------------------------------- isometry

def _isometry_rings():
    return [
        make_field(2, 1), make_field(3, 1), make_field(5, 1), make_field(7, 1),
        make_field(11, 1), make_field(13, 1), make_field(2, 2), make_field(3, 2),
        make_field(2, 3),
        make_chain_ring("galois", 2, 2, 1), make_chain_ring("galois", 3, 2, 1),
        make_chain_ring("galois", 5, 2, 1), make_chain_ring("galois", 2, 3, 1),
        make_chain_ring("galois", 2, 2, 2),
        make_chain_ring("u_adic", 2, 2, 1), make_chain_ring("u_adic", 3, 2, 1),
    ]


def _sample_ideals(Q, want=5, size_cap=1 << 10):
    """Distinct enumerable ideals of a cyclic quotient, from factor divisors
    (and gamma-multiples over chain rings)."""
    R = Q.base
    if isinstance(R, Field):
        fact = factor_xn_minus_one_field(R, Q.n)
    else:
        fact = hensel_lift_factorization(
            R, factor_xn_minus_one_field(R.residue, Q.n), R.one())
    divisors = [Poly.const(R, R.one())]
    for f, m in fact.factors:
        divisors = [d * f ** k for d in divisors for k in range(m + 1)]
    gens = []
    for d in divisors:
        gens.append(d)
        for j in range(1, getattr(R, "e", 1)):
            gens.append(d.scale(R.gamma ** j))
    out, seen = [], set()
    for g in gens:
        C = ConstaCode(Q, [Q.from_poly(g)])
        if C.cardinality > size_cap:
            continue
        k = C.key()
        if k not in seen:
            seen.add(k)
            out.append(C)
        if len(out) >= want:
            break
    return out


def suite_isometry(seed=20260824, min_instances=50, max_instances=60):
    rng = random.Random(seed)
    bad = []
    instances = 0
    for R in _isometry_rings():
        if instances >= max_instances:
            break
        p = R.p
        for n in (2, 3, 4, 5, 6, 7, 9):
            if n % p == 0 or R.size ** n > 1 << 16:
                continue
            deltas = sorted(R.units(), key=lambda a: a.key())[:2]
            for delta in deltas:
                if instances >= max_instances:
                    break
                Q1 = QuotientRing(R, n, R.one())
                lam = delta ** n
                Q2 = QuotientRing(R, n, lam)
                psi = EquivMap(Q1, Q2, delta)
                ideals = _sample_ideals(Q1)
                if len(ideals) < 5:
                    continue
                instances += 1
                tag = (R.spec_string(), n, str(delta))
                pool = list(R.elements())
                for _ in range(1000):
                    f = Q1.elem([rng.choice(pool) for _ in range(n)])
                    g = Q1.elem([rng.choice(pool) for _ in range(n)])
                    if psi.apply(f + g) != psi.apply(f) + psi.apply(g):
                        bad.append((tag, "additivity", f, g))
                    if psi.apply(f * g) != psi.apply(f) * psi.apply(g):
                        bad.append((tag, "multiplicativity", f, g))
                for f in Q1.elements():
                    img = psi.apply(f)
                    if psi.unapply(img) != f:
                        bad.append((tag, "bijectivity", f))
                    fw = sum(1 for c in f.coeffs if not c.is_zero())
                    iw = sum(1 for c in img.coeffs if not c.is_zero())
                    if fw != iw:
                        bad.append((tag, "hamming weight", f))
                for C in ideals:
                    D = psi.apply_code(C)
                    if weight_enumerator(C) != weight_enumerator(D):
                        bad.append((tag, "weight enumerator", C))
                    rowsC = [list(row) for row in C.canonical_matrix]
                    rowsD = [list(row) for row in D.canonical_matrix]
                    if not is_constacyclic_closed(Q1, [Q1.elem(r) for r in rowsC]):
                        bad.append((tag, "source ideal not shift-closed", C))
                    if not is_constacyclic_closed(Q2, [Q2.elem(r) for r in rowsD]):
                        bad.append((tag, "image ideal not shift-closed", C))
    return [
        (f"at least {min_instances} (ring, n, lambda, delta) instances sampled",
         instances >= min_instances, f"{instances} instances"),
        ("psi is a weight-preserving ring isomorphism on every instance",
         not bad, "homomorphism, bijectivity and enumerator checks all passed"
         if not bad else f"failure {bad[0]}"),
    ]


# ---------------------------------------------------------------- crt

def suite_crt(seed=20260824):
    rng = random.Random(seed)
    bad = []
    for (p, e) in ((3, 2), (5, 2), (3, 3)):
        R = make_chain_ring("galois", p, e, 1)
        pe = p ** e
        for m in (3, 5, 9):
            tag = (R.spec_string(), m)
            variants = ["cyclic"]
            try:
                crt_split(R, m, "negacyclic")
                applied = True
                variants.append("negacyclic")
            except NoRootError:
                applied = False
            if applied != minus_one_is_square(p, 1):
                bad.append((tag, "negacyclic applicability vs congruence conditions"))
            for variant in variants:
                sp = crt_split(R, m, variant)
                one = sp.cyclic.one()
                if sp.e1 + sp.e2 != one or not (sp.e1 * sp.e2).is_zero():
                    bad.append((tag, variant, "idempotent identities"))
                if sp.e1 * sp.e1 != sp.e1 or sp.e2 * sp.e2 != sp.e2:
                    bad.append((tag, variant, "idempotency"))
                for _ in range(1000):
                    f = sp.ambient.from_ints([rng.randrange(pe) for _ in range(2 * m)])
                    a, b = sp.forward(f)
                    if sp.backward(a, b) != f:
                        bad.append((tag, variant, "roundtrip", f))
                        break
                for _ in range(200):
                    f = sp.ambient.from_ints([rng.randrange(pe) for _ in range(2 * m)])
                    g = sp.ambient.from_ints([rng.randrange(pe) for _ in range(2 * m)])
                    fa, fb = sp.forward(f)
                    ga, gb = sp.forward(g)
                    ha, hb = sp.forward(f * g)
                    if ha != fa * ga or hb != fb * gb:
                        bad.append((tag, variant, "multiplicativity", f, g))
                        break
    return [("CRT split: idempotents, roundtrips and componentwise products",
             not bad, "Z_9, Z_25, Z_27 with m in {3, 5, 9}" if not bad
             else f"failure {bad[0]}")]


# ---------------------------------------------------------------- homweight

def _small_chain_rings(limit=1 << 10):
    out = []
    for family in ("galois", "u_adic"):
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            if p > limit:
                break
            e = 1
            while p ** e <= limit:
                r = 1
                while p ** (e * r) <= limit:
                    out.append(make_chain_ring(family, p, e, r))
                    r += 1
                e += 1
    return out


def suite_homweight():
    bad = []
    count = 0
    for R in _small_chain_rings():
        count += 1
        elems = list(R.elements())
        units = [u for u in elems if R.is_unit(u)]
        weights = {a.key(): hom_weight(R, a) for a in elems}
        if weights[R.zero().key()] != 0:
            bad.append((R, "w(0) != 0"))
        for u in units:
            for a in elems:
                if weights[(u * a).key()] != weights[a.key()]:
                    bad.append((R, "axiom (i)", u, a))
                    break
        ratios = set()
        for i in range(R.e):
            ideal = {(R.gamma ** i * t).key() for t in R.transversal(R.e - i)}
            total = sum(weights[k] for k in ideal)
            ratios.add(Fraction(total, len(ideal)))
        if len(ratios) != 1:
            bad.append((R, "axiom (ii)", ratios))
    return [("homogeneous weight axioms (i) and (ii) on every chain ring with |R| <= 2^10",
             not bad, f"{count} rings, both families" if not bad else f"failure {bad[0]}")]


# ---------------------------------------------------------------- section5

def _vec(qelem):
    """Flatten a quotient element over a Galois ring to Z_{p^e} coordinates."""
    out = []
    for c in qelem.coeffs:
        out.extend(c.coords)
    return out


def _structure_tensor(Q):
    """T[l, m] = coordinates of (basis_l * basis_m) in the quotient."""
    R, n = Q.base, Q.n
    k = n * R.r
    basis = []
    for j in range(n):
        for t in range(R.r):
            coords = [0] * R.r
            coords[t] = 1
            cs = [R.zero()] * n
            cs[j] = R.elem(tuple(coords))
            basis.append(Q.elem(cs))
    T = np.zeros((k, k, k), dtype=np.int64)
    for l in range(k):
        for m in range(l, k):
            v = _vec(basis[l] * basis[m])
            T[l, m] = v
            T[m, l] = v
    return T


def _valuations(x, p, e):
    v = np.full(x.shape, e, dtype=np.int64)
    rem = x.copy()
    for i in range(e):
        nz = (rem % p) != 0
        v = np.where(nz & (v == e), i, v)
        rem //= p
    return v


def _batch_unit_inv(u, p, e):
    """Inverses of units modulo p^e, elementwise."""
    pe = p ** e
    exp = p ** (e - 1) * (p - 1) - 1
    out = np.ones_like(u)
    base = u % pe
    while exp:
        if exp & 1:
            out = out * base % pe
        base = base * base % pe
        exp >>= 1
    return out


def _batch_rank_mod_p(M, p):
    """Ranks of a batch of matrices over F_p (in-place elimination).

    A per-batch row counter tracks how many pivots each matrix has found, so
    matrices whose pivots fall in different columns are handled together.
    """
    M = M % p
    B, k, _ = M.shape
    inv_table = np.array([0] + [pow(i, -1, p) for i in range(1, p)], dtype=np.int64)
    rank = np.zeros(B, dtype=np.int64)
    rowpos = np.zeros(B, dtype=np.int64)
    idx = np.arange(B)
    rowsidx = np.arange(k)[None, :]
    for col in range(k):
        avail = (M[:, :, col] != 0) & (rowsidx >= rowpos[:, None])
        has = avail.any(axis=1)
        piv = np.argmax(avail, axis=1)
        r0 = np.where(has, rowpos, 0)
        ra = M[idx, r0, :].copy()
        rb = M[idx, piv, :].copy()
        M[idx, piv, :] = np.where(has[:, None], ra, rb)
        M[idx, r0, :] = np.where(has[:, None], rb, ra)
        pivval = np.where(has, M[idx, r0, col], 1)
        norm = M[idx, r0, :] * inv_table[pivval][:, None] % p
        M[idx, r0, :] = np.where(has[:, None], norm, M[idx, r0, :])
        factor = np.where(has[:, None], M[:, :, col], 0)
        factor[idx, r0] = 0
        M = (M - factor[:, :, None] * M[idx, r0, :][:, None, :]) % p
        rank += has
        rowpos += has
    return rank


def _batch_rank_gf2(Vbool, Tpack, k):
    """Ranks over F_2 of the multiplication matrices of a batch of elements.

    Tpack[l, c] packs row c of the multiplication-by-basis_l matrix as a bit
    mask over columns; the matrix of element a = sum V[l]*basis_l is the xor
    of the masks selected by V.  Each matrix is k packed rows of an int64.
    """
    B = len(Vbool)
    M = np.zeros((B, k), dtype=np.int64)
    for l in range(k):
        M ^= np.where(Vbool[:, l:l + 1], Tpack[l][None, :], 0)
    rank = np.zeros(B, dtype=np.int64)
    rowpos = np.zeros(B, dtype=np.int64)
    idx = np.arange(B)
    rowsidx = np.arange(k)[None, :]
    for col in range(k):
        avail = ((M >> col) & 1).astype(bool) & (rowsidx >= rowpos[:, None])
        has = avail.any(axis=1)
        piv = np.argmax(avail, axis=1)
        r0 = np.where(has, rowpos, 0)
        ra = M[idx, r0].copy()
        rb = M[idx, piv].copy()
        M[idx, piv] = np.where(has, ra, rb)
        M[idx, r0] = np.where(has, rb, ra)
        prow = M[idx, r0]
        elim = ((M >> col) & 1).astype(bool) & has[:, None]
        elim[idx, r0] = False
        M ^= np.where(elim, prow[:, None], 0)
        rank += has
        rowpos += has
    return rank


def _batch_span_log(M, p, e):
    """log_p of the Z_{p^e}-column-span size for a batch of matrices."""
    pe = p ** e
    M = M % pe
    B, k, _ = M.shape
    idx = np.arange(B)
    log = np.zeros(B, dtype=np.int64)
    for t in range(k):
        sub = M[:, t:, t:]
        va = _valuations(sub, p, e).reshape(B, -1)
        pos = np.argmin(va, axis=1)
        v = va[idx, pos]
        w = k - t
        r0 = t + pos // w
        c0 = t + pos % w
        # swap pivot into position (t, t)
        ra = M[:, t, :].copy()
        rb = M[idx, r0, :].copy()
        M[idx, r0, :] = ra
        M[:, t, :] = rb
        ca = M[:, :, t].copy()
        cb = M[idx, :, c0].copy()
        M[idx, :, c0] = ca
        M[:, :, t] = cb
        alive = v < e
        pv = p ** np.minimum(v, e - 1)
        u = np.where(alive, M[:, t, t] // pv, 1)
        uinv = _batch_unit_inv(u, p, e)
        below = np.where(alive[:, None], M[:, t + 1:, t] // pv[:, None] * uinv[:, None] % pe, 0)
        M[:, t + 1:, :] = (M[:, t + 1:, :] - below[:, :, None] * M[:, t:t + 1, :]) % pe
        right = np.where(alive[:, None], M[:, t, t + 1:] // pv[:, None] * uinv[:, None] % pe, 0)
        M[:, :, t + 1:] = (M[:, :, t + 1:] - right[:, None, :] * M[:, :, t:t + 1]) % pe
        log += np.where(alive, e - v, 0)
    return log


def _int_echelon(rows, p, e):
    """One-sided echelon over Z_{p^e} with global-min-valuation pivoting."""
    pe = p ** e
    rows = [[x % pe for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    out = []
    while rows:
        best = None
        for ri, row in enumerate(rows):
            for ci, x in enumerate(row):
                if x == 0:
                    continue
                v = 0
                while x % p == 0:
                    x //= p
                    v += 1
                if best is None or (v, ci) < best[:2]:
                    best = (v, ci, ri)
        v, ci, ri = best
        row = rows.pop(ri)
        uinv = pow(row[ci] // p ** v, -1, pe)
        row = [x * uinv % pe for x in row]
        for other in rows:
            if other[ci]:
                t = other[ci] // p ** v
                for j, rj in enumerate(row):
                    other[j] = (other[j] - t * rj) % pe
        rows = [r for r in rows if any(r)]
        out.append((ci, v, row))
    return out


def _batch_member(V, ech, p, e):
    pe = p ** e
    V = V % pe
    ok = np.ones(len(V), dtype=bool)
    for ci, v, row in ech:
        x = V[:, ci]
        pv = p ** v
        ok &= (x % pv) == 0
        t = x // pv
        V = (V - t[:, None] * np.array(row, dtype=np.int64)) % pe
    return ok & (V == 0).all(axis=1)


def _exhaustive_chain_sweep(cq, bad):
    """Check, for every element a of the quotient, that <a> is the chain ideal
    of a's level and that the a0-based unit criterion matches brute-force
    invertibility of the multiplication-by-a matrix."""
    R, Q, n = cq.R, cq.Q, cq.n
    p, e, r = R.p, R.e, R.r
    pe = p ** e
    k = n * r
    tag = (R.spec_string(), cq.s, str(cq.lam))
    chain = [chain_code(cq, i) for i in range(cq.max_index + 1)]
    for i in range(cq.max_index):
        if not (chain[i + 1] <= chain[i]) or chain[i + 1].cardinality >= chain[i].cardinality:
            bad.append((tag, "chain not strictly decreasing", i))
            return
    echelons = []
    for i in range(1, cq.max_index + 1):
        gen = cq.pi ** i
        rows = []
        for j in range(n):
            base = Q.x() ** j * gen
            for t in range(r):
                scal = [0] * r
                scal[t] = 1
                rows.append(_vec(base * Q.coerce(R.elem(tuple(scal)))))
        echelons.append(_int_echelon(rows, p, e))
    T = _structure_tensor(Q)
    Tpack = None
    if p == 2 and e == 1:
        # Tpack[l, c] packs row c of the mult-by-basis_l matrix over F_2
        Tpack = np.zeros((k, k), dtype=np.int64)
        for l in range(k):
            for c in range(k):
                Tpack[l, c] = int(sum(int(T[l, m, c] & 1) << m for m in range(k)))
    G = np.zeros((n, r, r), dtype=np.int64)
    for j in range(n):
        a0j = cq.alpha0 ** j
        for t in range(r):
            coords = [0] * r
            coords[t] = 1
            G[j, :, t] = (a0j * R.elem(tuple(coords))).coords
    B = Q.size
    chunk = max(1, (1 << 23) // (k * k))
    powers = pe ** np.arange(k, dtype=np.int64)
    start = 0
    while start < B:
        stop = min(start + chunk, B)
        idx = np.arange(start, stop, dtype=np.int64)
        V = (idx[:, None] // powers[None, :]) % pe
        members = [np.ones(len(V), dtype=bool)]
        for ech in echelons:
            members.append(_batch_member(V, ech, p, e))
        for i in range(cq.max_index):
            if np.any(members[i + 1] & ~members[i]):
                bad.append((tag, "membership not nested", i))
                return
        level = np.zeros(len(V), dtype=np.int64)
        for i in range(1, cq.max_index + 1):
            level += members[i]
        if p == 2 and e == 1:
            span = _batch_rank_gf2(V.astype(bool), Tpack, k)
            brute_unit = span == k
        elif e == 1:
            M = np.einsum("bl,lmc->bcm", V, T) % pe
            span = _batch_rank_mod_p(M, p)
            brute_unit = span == k
        else:
            M = np.einsum("bl,lmc->bcm", V, T) % pe
            span = _batch_span_log(M, p, e)
            brute_unit = _batch_rank_mod_p(
                np.einsum("bl,lmc->bcm", V, T) % p, p) == k
        want = r * (cq.max_index - level)
        if not np.array_equal(span, want):
            i = int(np.nonzero(span != want)[0][0])
            bad.append((tag, "principal ideal is not the chain ideal of its level",
                        int(idx[i])))
            return
        a0 = np.einsum("bjt,jst->bs", V.reshape(len(V), n, r), G) % pe
        lemma_unit = ((a0 % p) != 0).any(axis=1)
        if not np.array_equal(brute_unit, lemma_unit):
            i = int(np.nonzero(brute_unit != lemma_unit)[0][0])
            bad.append((tag, "unit criterion disagrees with brute force",
                        int(idx[i])))
            return
        start = stop


def _chain_instances(cap=1 << 20):
    out = []
    for p in (2, 3, 5, 7, 11):
        for s in range(1, 21):
            if p ** p ** s > cap:
                break
            for e in range(1, 21):
                for r in range(1, 21):
                    if p ** (r * e * p ** s) <= cap:
                        out.append((p, e, r, s))
    return sorted(out)


def suite_section5(cap=1 << 20, sweep_cutoff=1 << 16, big_alpha_limit=2):
    bad = []
    n_alpha = n_sweep = 0
    instances = _chain_instances(cap)
    for (p, e, r, s) in instances:
        R = make_chain_ring("galois", p, e, r)
        n = p ** s
        roots = [a for a in sorted(R.units(), key=lambda u: u.key())
                 if galois_ps_root(R, a, s) is not None]
        sweep = set(roots if R.size ** n <= sweep_cutoff
                    else roots[:big_alpha_limit])
        for alpha in roots:
            n_alpha += 1
            cq = ChainQuotient(R, s, alpha, R.one())
            tag = (R.spec_string(), s, str(alpha))
            if cq.alpha0 ** n != alpha or not R.is_unit(cq.alpha0):
                bad.append((tag, "alpha0 is not a p^s-th root"))
            if cq.nilpotency_index() != e * n:
                bad.append((tag, "nilpotency index of pi != e*p^s"))
            if e >= 2:
                rho = cq.rho()
                if cq.pi ** n != rho * R.gamma:
                    bad.append((tag, "pi^(p^s) != p*rho"))
                if not unit_in_chain_quotient(cq, rho):
                    bad.append((tag, "rho is not a unit"))
            if alpha in sweep:
                n_sweep += 1
                _exhaustive_chain_sweep(cq, bad)
    return [(f"chain classification over {len(instances)} (p, e, r, s) instances",
             not bad,
             f"{n_alpha} alphas checked, {n_sweep} swept exhaustively"
             if not bad else f"failure {bad[0]}")]


# ---------------------------------------------------------------- examples

def suite_examples():
    out = []

    # ninth-power factorization of x^90 - 1 over F_27 and its transports
    F27 = make_field(3, 3)
    t0 = time.time()
    fact = factor_xn_minus_one_field(F27, 90)
    expected = sorted([
        Poly.from_ints(F27, [1, 1]),
        Poly.from_ints(F27, [-1, 1]),
        Poly.from_ints(F27, [1, 1, 1, 1, 1]),
        Poly.from_ints(F27, [1, -1, 1, -1, 1]),
    ], key=Poly.key)
    ok = ([f for f, _ in fact.factors] == expected
          and all(m == 9 for _, m in fact.factors)
          and fact.unit == F27.one())
    out.append(("x^90 - 1 over F_27 is the ninth power of four explicit factors",
                ok, f"{time.time() - t0:.2f}s"))
    ok = True
    for i in range(1, 14):
        lam = F27.g ** (2 * i)
        fa = factor_xn_minus_lambda_field(F27, 90, lam)
        delta = F27.nth_root(lam, 90)
        dinv = delta.inv()
        want = sorted((f.substitute_scale(dinv).monic() for f, _ in fact.factors),
                      key=Poly.key)
        got = sorted((f for f, _ in fa.factors), key=Poly.key)
        if got != want or fa.expand() != Poly.x_pow_minus(F27, 90, lam):
            ok = False
    out.append(("the 13 even-power transports reproduce the monic-normalized factor sets",
                ok, "exact product reconstruction for every lambda"))

    # x^9 - 1 over Z_25, nu0 = 7, and the two mixed-generator codes
    Z25 = make_chain_ring("galois", 5, 2, 1)
    F5 = make_field(5, 1)
    t0 = time.time()
    lifted = hensel_lift_factorization(
        Z25, factor_xn_minus_one_field(F5, 9), Z25.one())
    f0, f1, f2 = (f for f, _ in lifted.factors)
    ok = (str(f0), str(f1), str(f2)) == ("x + 24", "x^2 + x + 1", "x^6 + x^3 + 1")
    out.append(("x^9 - 1 over Z_25 = (x+24)(x^2+x+1)(x^6+x^3+1)", ok,
                f"got ({f0})({f1})({f2})"))
    nu0 = lift_nth_root(Z25, Z25.from_int(24), 2)
    out.append(("square root of 24 in Z_25 is 7", nu0 == Z25.from_int(7), f"got {nu0}"))
    Q9 = QuotientRing(Z25, 9, Z25.one())
    five = Z25.gamma
    C1 = code_from_generators(Q9, [Q9.from_poly(f0 * f2),
                                   Q9.from_poly((f0 * f1).scale(five))])
    C2 = code_from_generators(Q9, [Q9.from_poly(f0 * f1),
                                   Q9.from_poly((f1 * f2).scale(five))])
    sp = crt_split(Z25, 9, "negacyclic")
    neg = []
    for C, side in ((C1, "plus"), (C2, "minus")):
        gens = []
        for g in C.generators:
            if side == "plus":
                gens.append(sp.backward(sp.plus.coerce(list(g.coeffs)), sp.minus.zero()))
            else:
                gens.append(sp.backward(sp.plus.zero(), sp.minus.coerce(list(g.coeffs))))
        neg.append(code_from_generators(sp.ambient, gens))
    closed = all(
        is_constacyclic_closed(C.ambient, [C.ambient.elem(list(row))
                                           for row in C.canonical_matrix])
        for C in (C1, C2, *neg))
    stable = all(
        code_from_generators(C.ambient, C.generators).key() == C.key()
        for C in (C1, C2, *neg))
    out.append(("C_1, C_2 and their negacyclic images are shift-closed with stable "
                "canonical matrices", closed and stable, f"{time.time() - t0:.2f}s"))

    # 55-ideal chain over Z_9, and the exhaustive length-3 downscale
    Z9 = make_chain_ring("galois", 3, 2, 1)
    t0 = time.time()
    cq = chain_quotient_build(Z9, 3, Z9.from_int(8), Z9.one())
    cards = [chain_code(cq, i).cardinality for i in range(cq.max_index + 1)]
    ok = len(cards) == 55 and all(c == 3 ** (54 - i) for i, c in enumerate(cards))
    out.append(("55 chain ideals over Z_9 of length 27 with |C_i| = 3^(54-i)",
                ok, f"{time.time() - t0:.2f}s"))
    cq1 = chain_quotient_build(Z9, 1, Z9.from_int(8), Z9.one())
    ideals = enumerate_all_ideals(cq1.Q)
    chain = [chain_code(cq1, i) for i in range(cq1.max_index + 1)]
    ok = (len(ideals) == 7
          and all(any(C == D for D in chain) for C in ideals))
    out.append(("Z_9[x]/(x^3 - 2) (alpha = 8, beta = 1): exhaustive enumeration "
                "gives exactly the 7 powers of <-x - 1>", ok,
                f"{len(ideals)} ideals"))
    return out


# ---------------------------------------------------------------- runner

SUITES = {
    "lemma3.1": suite_lemma31,
    "prop4.2": suite_prop42,
    "isometry": suite_isometry,
    "crt": suite_crt,
    "section5": suite_section5,
    "examples": suite_examples,
    "homweight": suite_homweight,
}


def run_suite(name):
    """Run one suite (or 'all'); returns a list of (claim, ok, detail)."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend((f"{key}: {claim}", ok, detail)
                       for claim, ok, detail in SUITES[key]())
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    return SUITES[name]()
