"""Factorization of x^n - 1 and x^n - lambda over fields, and its Hensel lift.

x^m - 1 (m coprime to p) factors through cyclotomic cosets of q mod m: each
coset gives the minimal polynomial over F_q of the corresponding m-th root of
unity, computed in a splitting-field extension F_{q^l}, l = ord_m(q).  For
n = m * p^s every multiplicity is p^s.  x^n - lambda is obtained by the
substitution x -> delta^{-1} x for an n-th root delta of lambda, re-normalized
monic.  Over a chain ring the squarefree field factorization lifts uniquely by
quadratic Hensel steps.
"""

from itertools import product
from math import gcd

from .errors import Inapplicable, NoRootError
from .ffield import Field, prime_factors
from .poly import Factorization, Poly


def cyclotomic_cosets(q, m):
    """Cosets {j*q^i mod m} partitioning 0..m-1, each sorted, led by its minimum."""
    seen = [False] * m
    out = []
    for j in range(m):
        if seen[j]:
            continue
        coset = []
        k = j
        while not seen[k]:
            seen[k] = True
            coset.append(k)
            k = k * q % m
        out.append(sorted(coset))
    return out


def multiplicative_order(q, m):
    if m == 1:
        return 1
    if gcd(q, m) != 1:
        raise ValueError("q must be invertible mod m")
    k, acc = 1, q % m
    while acc != 1:
        acc = acc * q % m
        k += 1
    return k


class ExtFieldElem:
    __slots__ = ("ext", "coeffs")

    def __init__(self, ext, coeffs):
        self.ext = ext
        self.coeffs = coeffs

    def __add__(self, other):
        return ExtFieldElem(self.ext, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return ExtFieldElem(self.ext, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ExtFieldElem(self.ext, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        return self.ext._mul(self, other)

    def __pow__(self, k):
        out = self.ext.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return all(a.is_zero() for a in self.coeffs)

    def key(self):
        return tuple(a.key() for a in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, ExtFieldElem) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Ext{list(self.coeffs)}"


class ExtField:
    """Internal splitting-field extension F_{q^l} of a base Field.

    Deterministic: modulus is the lex-smallest monic irreducible of degree l
    over the base field (coefficient keys compared ascending from the constant
    term).  Only used to assemble minimal polynomials; not part of the API.
    """

    def __init__(self, base, l):
        self.base = base
        self.l = l
        self.size = base.q ** l
        self.modulus = self._find_modulus() if l > 1 else None

    def _find_modulus(self):
        F, l = self.base, self.l
        elems = sorted(F.elements(), key=lambda a: a.key())
        nonzero = [a for a in elems if not a.is_zero()]
        for tail in product(*([nonzero] + [elems] * (l - 1))):
            f = Poly(F, list(tail) + [F.one()])
            if f.degree != l:
                continue
            # cheap pre-screen: a root in the base field means reducible
            if any(f.eval(a).is_zero() for a in elems):
                continue
            if _is_irreducible(f):
                return f
        raise AssertionError("no irreducible modulus found")  # unreachable

    def zero(self):
        return ExtFieldElem(self, (self.base.zero(),) * self.l)

    def one(self):
        return self.embed(self.base.one())

    def coerce(self, x):
        if isinstance(x, ExtFieldElem):
            return x
        return self.embed(self.base.coerce(x))

    def embed(self, a):
        return ExtFieldElem(self, (self.base.coerce(a),) + (self.base.zero(),) * (self.l - 1))

    def retract(self, x):
        """Inverse of embed; fails if x is not in the base field."""
        if any(not c.is_zero() for c in x.coeffs[1:]):
            raise ValueError("element does not lie in the base field")
        return x.coeffs[0]

    def elements(self):
        elems = sorted(self.base.elements(), key=lambda a: a.key())
        for tup in product(*[elems] * self.l):
            yield ExtFieldElem(self, tup)

    def inv(self, a):
        a = self.coerce(a)
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return a ** (self.size - 2)

    def _mul(self, a, b):
        F, l = self.base, self.l
        if l == 1:
            return ExtFieldElem(self, (a.coeffs[0] * b.coeffs[0],))
        pa = Poly(F, a.coeffs)
        pb = Poly(F, b.coeffs)
        rem = (pa * pb) % self.modulus
        cs = list(rem.coeffs) + [F.zero()] * (l - len(rem.coeffs))
        return ExtFieldElem(self, tuple(cs))

    def root_of_unity(self, m):
        """Deterministic element of multiplicative order exactly m."""
        if m == 1:
            return self.one()
        n = self.size - 1
        assert n % m == 0
        checks = [m // t for t in prime_factors(m)]
        for z in self.elements():
            if z.is_zero():
                continue
            w = z ** (n // m)
            if all(w ** k != self.one() for k in checks):
                return w
        raise AssertionError("no element of the requested order")  # unreachable


def _is_irreducible(f):
    """Rabin's test: f irreducible over F_q of degree l."""
    F = f.ring
    l = f.degree
    x = Poly.x(F)
    xq = _poly_powmod(x, F.q ** l, f)
    if xq != x % f:
        return False
    for t in prime_factors(l):
        xd = _poly_powmod(x, F.q ** (l // t), f)
        if f.gcd(xd - x).degree != 0:
            return False
    return True


def _poly_powmod(base, k, mod):
    out = Poly.const(mod.ring, mod.ring.one())
    base = base % mod
    while k:
        if k & 1:
            out = (out * base) % mod
        base = (base * base) % mod
        k >>= 1
    return out


_EXT_CACHE = {}


def _splitting_field(F, l):
    key = (F.p, F.r, l)
    if key not in _EXT_CACHE:
        _EXT_CACHE[key] = ExtField(F, l)
    return _EXT_CACHE[key]


def split_p_part(n, p):
    """n = m * p^s with gcd(m, p) = 1; returns (m, s)."""
    s = 0
    while n % p == 0:
        n //= p
        s += 1
    return n, s


def factor_xn_minus_one_field(F, n):
    """Canonical factorization of x^n - 1 over F_q.

    Writes n = m * p^s; the distinct monic irreducible factors of x^m - 1 come
    from the cyclotomic cosets of q mod m, and every multiplicity is p^s.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m, s = split_p_part(n, F.p)
    mult = F.p ** s
    factors = []
    if m == 1:
        factors.append((Poly(F, [-F.one(), F.one()]), mult))
    else:
        l = multiplicative_order(F.q, m)
        ext = _splitting_field(F, l)
        omega = ext.root_of_unity(m)
        for coset in cyclotomic_cosets(F.q, m):
            acc = Poly.const(ext, ext.one())
            for j in coset:
                acc = acc * Poly(ext, [-(omega ** j), ext.one()])
            factors.append((Poly(F, [ext.retract(c) for c in acc.coeffs]), mult))
    fact = Factorization(F, F.one(), factors)
    assert fact.expand() == Poly.x_pow_minus(F, n, F.one()), "product check failed"
    return fact


def factor_xn_minus_lambda_field(F, n, lam):
    """Factorization of x^n - lam obtained by transporting x^n - 1 along an
    n-th root delta of lam.  Raises NoRootError when no such delta exists."""
    lam = F.coerce(lam)
    if lam.is_zero():
        raise ValueError("lambda must be nonzero")
    delta = F.nth_root(lam, n)
    if delta is None:
        raise NoRootError(f"{lam} has no {n}-th root in F_{F.q}; transport inapplicable")
    return transport_factorization(factor_xn_minus_one_field(F, n), delta,
                                   Poly.x_pow_minus(F, n, lam))


def transport_factorization(fact, delta, target):
    """Substitute x -> delta^{-1} x in every factor and re-normalize monic."""
    ring = fact.ring
    dinv = ring.inv(delta)
    factors = []
    for f, mult in fact.factors:
        g = f.substitute_scale(dinv).scale(delta ** f.degree)
        factors.append((g, mult))
    out = Factorization(ring, fact.unit, factors)
    assert out.expand() == target, "transport product check failed"
    return out


def substitute_scale(f, c):
    return f.substitute_scale(c)


def pairwise_coprime(R, fs):
    """Whether monic polynomials over a chain ring (or field) are pairwise
    coprime, decided on their residue images over K."""
    fs = list(fs)
    for f in fs:
        if not f.is_monic():
            raise ValueError("pairwise_coprime expects monic polynomials")
    K = getattr(R, "residue", R)
    imgs = [poly_mu(R, f) for f in fs]
    for i in range(len(imgs)):
        for j in range(i + 1, len(imgs)):
            if imgs[i].gcd(imgs[j]).degree != 0:
                return False
    return True


def poly_mu(R, f):
    """Coefficientwise residue map R[x] -> K[x] (identity over fields)."""
    if isinstance(R, Field):
        return f
    K = R.residue
    return Poly(K, [R.mu(c) for c in f.coeffs])


def poly_section(R, fbar):
    """Coefficientwise section K[x] -> R[x]."""
    if isinstance(R, Field):
        return fbar
    return Poly(R, [R.section(c) for c in fbar.coeffs])


def _hensel_pair(R, target, gbar, hbar):
    """Monic G, H over R with G*H = target, mu(G) = gbar, mu(H) = hbar."""
    sbar, s, t = gbar.xgcd(hbar)
    assert sbar.degree == 0, "factors are not coprime"
    H = poly_section(R, hbar)
    S = poly_section(R, s)
    T = poly_section(R, t)
    steps = 0
    while True:
        G, err = divmod(target, H)
        if err.is_zero():
            return G, H
        steps += 1
        assert steps <= R.e + 2, "Hensel iteration failed to converge"
        _, r = divmod(S * err, H)
        H = H + r
        b = S * G + T * H - Poly.const(R, R.one())
        c, d = divmod(S * b, H)
        S = S - d
        T = T - T * b - c * G


def _lift_split(R, target, fbars):
    if len(fbars) == 1:
        assert poly_mu(R, target) == fbars[0]
        return [target]
    half = len(fbars) // 2
    gbar = Poly.const(fbars[0].ring, fbars[0].ring.one())
    for f in fbars[:half]:
        gbar = gbar * f
    hbar = Poly.const(fbars[0].ring, fbars[0].ring.one())
    for f in fbars[half:]:
        hbar = hbar * f
    G, H = _hensel_pair(R, target, gbar, hbar)
    return _lift_split(R, G, fbars[:half]) + _lift_split(R, H, fbars[half:])


def hensel_lift_factorization(R, field_factors, lam):
    """Lift the factorization of x^n - mu(lam) over K to x^n - lam over R.

    Requires gcd(n, p) = 1 (all multiplicities 1).  The lifted factors are
    monic, basic irreducible and pairwise coprime; the product is exact.
    """
    if isinstance(R, Field):
        return field_factors
    lam = R.coerce(lam)
    if not R.is_unit(lam):
        raise Inapplicable("lam must be a unit")
    if any(m != 1 for _, m in field_factors.factors):
        raise Inapplicable("repeated residue factors: gcd(n, p) = 1 required")
    n = sum(f.degree for f, _ in field_factors.factors)
    if gcd(n, R.p) != 1:
        raise Inapplicable("gcd(n, p) = 1 required")
    target = Poly.x_pow_minus(R, n, lam)
    assert poly_mu(R, target) == field_factors.expand(), \
        "field factorization does not match x^n - mu(lam)"
    if R.e == 1:
        lifted = [poly_section(R, f) for f, _ in field_factors.factors]
    else:
        lifted = _lift_split(R, target, [f for f, _ in field_factors.factors])
    out = Factorization(R, R.one(), [(f, 1) for f in lifted])
    assert out.expand() == target, "lifted product check failed"
    return out
