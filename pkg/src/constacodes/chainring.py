"""Finite chain rings: Galois rings GR(p^e, r) and F_{p^r}[u]/(u^e).

Both families expose the same protocol: residue map mu onto K = F_{p^r}, a
section of mu, gamma-valuations, Teichmuller / p-adic machinery (Galois family
only), the homogeneous weight, and Newton lifting of n-th roots of units.

The Galois-ring modulus is the Hensel lift, inside y^{p^r - 1} - 1, of the
minimal polynomial of the residue field's canonical primitive element, so the
class of y is itself a primitive element of order p^r - 1 (the modulus is
basic primitive).
"""

from itertools import product
from math import gcd

from .errors import CapExceeded, Inapplicable
from .ffield import make_field, is_prime

DEFAULT_RING_CAP = 1 << 20


# ---- small exact linear algebra mod a prime ----

def _solve_mod_p(A, b, p):
    """Solve A x = b (mod p) for square invertible A given as list of rows."""
    n = len(A)
    M = [list(A[i]) + [b[i] % p] for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if M[i][col] % p)
        M[col], M[piv] = M[piv], M[col]
        inv = pow(M[col][col], -1, p)
        M[col] = [v * inv % p for v in M[col]]
        for i in range(n):
            if i != col and M[i][col]:
                c = M[i][col]
                M[i] = [(v - c * w) % p for v, w in zip(M[i], M[col])]
    return [M[i][n] for i in range(n)]


# ---- integer-coefficient polynomial helpers mod M (for the modulus lift) ----

def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_add(a, b, M):
    n = max(len(a), len(b))
    return _zp_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % M
                     for i in range(n)])


def _zp_sub(a, b, M):
    n = max(len(a), len(b))
    return _zp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % M
                     for i in range(n)])


def _zp_mul(a, b, M):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % M
    return _zp_trim(out)


def _zp_divmod(a, b, M):
    """Division by b with unit leading coefficient, coefficients mod M."""
    a = list(a)
    d = len(b) - 1
    lead_inv = pow(b[-1], -1, M)
    q = [0] * max(len(a) - d, 0)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] * lead_inv % M
        if c:
            q[i - d] = c
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * b[j]) % M
    return _zp_trim(q), _zp_trim(a[:d])


def _zp_xgcd_field(a, b, p):
    """Extended gcd over F_p; returns (g, s, t) with g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _zp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zp_sub(s0, _zp_mul(q, s1, p), p)
        t0, t1 = t1, _zp_sub(t0, _zp_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    scale = lambda u: [v * inv % p for v in u]
    return scale(r0), scale(s0), scale(t0)


def _hensel_pair_int(f, g, h, s, t, p, e):
    """Lift f = g*h from mod p to mod p^e (quadratic steps; f, h monic)."""
    k = 1
    while k < e:
        k = min(2 * k, e)
        M = p ** k
        err = _zp_sub(f, _zp_mul(g, h, M), M)
        q, r = _zp_divmod(_zp_mul(s, err, M), h, M)
        g = _zp_add(g, _zp_add(_zp_mul(t, err, M), _zp_mul(q, g, M), M), M)
        h = _zp_add(h, r, M)
        b = _zp_sub(_zp_add(_zp_mul(s, g, M), _zp_mul(t, h, M), M), [1], M)
        c, d = _zp_divmod(_zp_mul(s, b, M), h, M)
        s = _zp_sub(s, d, M)
        t = _zp_sub(t, _zp_add(_zp_mul(t, b, M), _zp_mul(c, g, M), M), M)
    return g, h


class RingElem:
    """Element of a finite chain ring, stored as its canonical coordinate tuple."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = coords

    def __add__(self, other):
        return self.ring._add(self, self.ring.coerce(other))

    def __sub__(self, other):
        return self.ring._add(self, -self.ring.coerce(other))

    def __neg__(self):
        return self.ring._neg(self)

    def __mul__(self, other):
        return self.ring._mul(self, self.ring.coerce(other))

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self):
        return self.ring.inv(self)

    def is_zero(self):
        return self == self.ring.zero()

    def key(self):
        return tuple(c.key() if hasattr(c, "key") else c for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return isinstance(other, RingElem) and self.ring is other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_json(self):
        out = [c.to_json() if hasattr(c, "to_json") else c for c in self.coords]
        return out[0] if len(out) == 1 else out

    def __str__(self):
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    __repr__ = __str__


class GaloisRing:
    """GR(p^e, r) = Z_{p^e}[y]/(basic primitive modulus of degree r)."""

    family = "galois"

    def __init__(self, p, e, r, cap=DEFAULT_RING_CAP):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1 or r < 1:
            raise ValueError("e and r must be positive")
        if p ** (e * r) > cap:
            raise CapExceeded(f"ring size {p**(e*r)} exceeds cap {cap}")
        self.p = p
        self.e = e
        self.r = r
        self.pe = p ** e
        self.q = p ** r
        self.residue = make_field(p, r)
        if r == 1:
            self.modulus = None
        else:
            self.modulus = self._build_modulus()
        self._g_pows = [self.residue.g ** i for i in range(r)]
        self._g_matrix = [[self._g_pows[j].coeffs[i] for j in range(r)] for i in range(r)]
        self.gamma = self.from_int(p)
        self.xi = self._build_xi()

    def _build_modulus(self):
        K, p, r = self.residue, self.p, self.r
        # minimal polynomial of the canonical primitive element g over F_p
        A = [[(K.g ** j).coeffs[i] for j in range(r)] for i in range(r)]
        b = (K.g ** r).coeffs
        a = _solve_mod_p(A, list(b), p)
        mbar = [(-c) % p for c in a] + [1]
        # lift inside y^(q-1) - 1 so the lifted root keeps order q - 1
        target_p = [(p - 1)] + [0] * (self.q - 2) + [1]  # y^(q-1) - 1 mod p
        cof, rem = _zp_divmod(target_p, mbar, p)
        assert not rem
        _, s, t = _zp_xgcd_field(mbar, cof, p)
        target = [-1 % self.pe] + [0] * (self.q - 2) + [1]
        m, _ = _hensel_pair_int(target, mbar, cof, s, t, p, self.e)
        # _hensel_pair_int pairs (g=mbar, h=cof) with f monic; mbar side is g
        assert len(m) == r + 1 and m[-1] == 1
        return tuple(m)

    def _build_xi(self):
        if self.r > 1:
            return self.elem((0, 1) + (0,) * (self.r - 2))
        # Teichmuller lift of the residue primitive element
        t = self.residue.g.coeffs[0] % self.pe
        while pow(t, self.p, self.pe) != t:
            t = pow(t, self.p, self.pe)
        return self.elem((t,))

    # -- element construction --

    def elem(self, coords):
        coords = tuple(c % self.pe for c in coords)
        if len(coords) != self.r:
            raise ValueError("coordinate vector has wrong length")
        return RingElem(self, coords)

    def from_int(self, n):
        return self.elem((n,) + (0,) * (self.r - 1))

    def coerce(self, x):
        if isinstance(x, RingElem):
            if x.ring is not self:
                raise ValueError("element from a different ring")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r}")

    def zero(self):
        return self.elem((0,) * self.r)

    def one(self):
        return self.from_int(1)

    @property
    def size(self):
        return self.pe ** self.r

    def elements(self):
        for tup in product(*[range(self.pe)] * self.r):
            yield RingElem(self, tup)

    def units(self):
        return (a for a in self.elements() if self.is_unit(a))

    # -- arithmetic --

    def _add(self, a, b):
        return RingElem(self, tuple((x + y) % self.pe for x, y in zip(a.coords, b.coords)))

    def _neg(self, a):
        return RingElem(self, tuple((-x) % self.pe for x in a.coords))

    def _mul(self, a, b):
        r, M = self.r, self.pe
        if r == 1:
            return RingElem(self, ((a.coords[0] * b.coords[0]) % M,))
        out = [0] * (2 * r - 1)
        for i, ai in enumerate(a.coords):
            if ai:
                for j, bj in enumerate(b.coords):
                    out[i + j] = (out[i + j] + ai * bj) % M
        m = self.modulus
        for d in range(2 * r - 2, r - 1, -1):
            c = out[d]
            if c:
                out[d] = 0
                for i in range(r):
                    out[d - r + i] = (out[d - r + i] - c * m[i]) % M
        return RingElem(self, tuple(out[:r]))

    def mu(self, a):
        """Residue map onto K = F_{p^r}."""
        a = self.coerce(a)
        K = self.residue
        out = K.zero()
        for c, gp in zip(a.coords, self._g_pows):
            if c % self.p:
                out = out + gp * K.from_int(c)
        return out

    def section(self, k):
        """A preimage of the field element k under mu (coordinatewise lift)."""
        k = self.residue.coerce(k)
        if self.r == 1:
            return self.elem((k.coeffs[0],))
        a = _solve_mod_p(self._g_matrix, list(k.coeffs), self.p)
        return self.elem(tuple(a))

    def is_unit(self, a):
        return not self.mu(a).is_zero()

    def inv(self, a):
        a = self.coerce(a)
        if not self.is_unit(a):
            raise ZeroDivisionError("inverse of a non-unit")
        x = self.section(self.mu(a).inv())
        two = self.from_int(2)
        while True:
            err = a * x
            if err == self.one():
                return x
            x = x * (two - err)

    # -- gamma-adic structure --

    def valuation(self, a):
        a = self.coerce(a)
        v = self.e
        for c in a.coords:
            if c == 0:
                continue
            w = 0
            while c % self.p == 0:
                c //= self.p
                w += 1
            v = min(v, w)
        return v

    def divide_gamma(self, a, k):
        """Exact division by gamma^k; requires valuation(a) >= k."""
        a = self.coerce(a)
        pk = self.p ** k
        if any(c % pk for c in a.coords):
            raise ValueError("element not divisible by gamma^k")
        return self.elem(tuple(c // pk for c in a.coords))

    def mod_gamma(self, a, k):
        a = self.coerce(a)
        pk = self.p ** min(k, self.e)
        return self.elem(tuple(c % pk for c in a.coords))

    def transversal(self, k):
        """Representatives of R modulo <gamma^k>."""
        k = min(k, self.e)
        return [RingElem(self, tup) for tup in product(*[range(self.p ** k)] * self.r)]

    # -- Teichmuller / p-adic representation --

    def teichmuller(self):
        """Ordered Teichmuller set {0, 1, xi, ..., xi^(p^r - 2)}."""
        out = [self.zero()]
        t = self.one()
        for _ in range(self.q - 1):
            out.append(t)
            t = t * self.xi
        return out[: self.q]

    def teich_lift(self, k):
        k = self.residue.coerce(k)
        if k.is_zero():
            return self.zero()
        return self.xi ** self.residue.discrete_log(k)

    def p_adic_repr(self, a):
        a = self.coerce(a)
        digits = []
        cur = a
        for _ in range(self.e):
            d = self.teich_lift(self.mu(cur))
            digits.append(d)
            cur = self.divide_gamma(cur - d, 1)
        return PAdicRepr(self, digits)

    def reconstruct(self, digits):
        out = self.zero()
        for i, d in enumerate(digits):
            out = out + d * self.from_int(self.p ** i)
        return out

    def spec_string(self):
        if self.r == 1:
            return f"Z:{self.p}^{self.e}"
        return f"GR:{self.p}^{self.e}:{self.r}"

    def __repr__(self):
        return f"GR({self.p}^{self.e},{self.r})" if self.r > 1 else f"Z_{self.pe}"


class UAdicRing:
    """F_{p^r}[u]/(u^e); gamma = u, residue field F_{p^r}."""

    family = "u_adic"

    def __init__(self, p, e, r, cap=DEFAULT_RING_CAP):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1 or r < 1:
            raise ValueError("e and r must be positive")
        if p ** (e * r) > cap:
            raise CapExceeded(f"ring size {p**(e*r)} exceeds cap {cap}")
        self.p = p
        self.e = e
        self.r = r
        self.q = p ** r
        self.residue = make_field(p, r)
        self.gamma = RingElem(self, self._tup([self.residue.zero(), self.residue.one()]))

    def _tup(self, prefix):
        K = self.residue
        out = list(prefix) + [K.zero()] * (self.e - len(prefix))
        return tuple(out[: self.e])

    def elem(self, coords):
        K = self.residue
        coords = tuple(K.coerce(c) for c in coords)
        if len(coords) != self.e:
            raise ValueError("coordinate vector has wrong length")
        return RingElem(self, coords)

    def from_int(self, n):
        return RingElem(self, self._tup([self.residue.from_int(n)]))

    def coerce(self, x):
        if isinstance(x, RingElem):
            if x.ring is not self:
                raise ValueError("element from a different ring")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r}")

    def zero(self):
        return RingElem(self, self._tup([]))

    def one(self):
        return self.from_int(1)

    @property
    def size(self):
        return self.q ** self.e

    def elements(self):
        K = self.residue
        for tup in product(*[list(K.elements())] * self.e):
            yield RingElem(self, tup)

    def units(self):
        return (a for a in self.elements() if self.is_unit(a))

    def _add(self, a, b):
        return RingElem(self, tuple(x + y for x, y in zip(a.coords, b.coords)))

    def _neg(self, a):
        return RingElem(self, tuple(-x for x in a.coords))

    def _mul(self, a, b):
        K, e = self.residue, self.e
        out = [K.zero()] * e
        for i, ai in enumerate(a.coords):
            if ai.is_zero():
                continue
            for j in range(e - i):
                bj = b.coords[j]
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return RingElem(self, tuple(out))

    def mu(self, a):
        return self.coerce(a).coords[0]

    def section(self, k):
        return RingElem(self, self._tup([self.residue.coerce(k)]))

    def is_unit(self, a):
        return not self.mu(a).is_zero()

    def inv(self, a):
        a = self.coerce(a)
        if not self.is_unit(a):
            raise ZeroDivisionError("inverse of a non-unit")
        x = self.section(self.mu(a).inv())
        two = self.from_int(2)
        while True:
            err = a * x
            if err == self.one():
                return x
            x = x * (two - err)

    def valuation(self, a):
        a = self.coerce(a)
        for i, c in enumerate(a.coords):
            if not c.is_zero():
                return i
        return self.e

    def divide_gamma(self, a, k):
        a = self.coerce(a)
        if any(not c.is_zero() for c in a.coords[:k]):
            raise ValueError("element not divisible by gamma^k")
        return RingElem(self, self._tup(list(a.coords[k:])))

    def mod_gamma(self, a, k):
        a = self.coerce(a)
        return RingElem(self, self._tup(list(a.coords[: min(k, self.e)])))

    def transversal(self, k):
        K = self.residue
        k = min(k, self.e)
        return [RingElem(self, self._tup(list(tup)))
                for tup in product(*[list(K.elements())] * k)]

    def spec_string(self):
        return f"U:{self.p}^{self.r}:{self.e}"

    def __repr__(self):
        return f"F_{self.q}[u]/(u^{self.e})"


class PAdicRepr:
    """p-adic digit vector over the Teichmuller set (Galois rings only)."""

    __slots__ = ("ring", "digits")

    def __init__(self, ring, digits):
        self.ring = ring
        self.digits = list(digits)

    def exponents(self):
        """Teichmuller exponent per digit; -1 encodes the digit 0."""
        out = []
        for d in self.digits:
            if d.is_zero():
                out.append(-1)
            else:
                out.append(self.ring.residue.discrete_log(self.ring.mu(d)))
        return out

    def to_json(self):
        return self.exponents()

    def value(self):
        return self.ring.reconstruct(self.digits)

    def __eq__(self, other):
        return isinstance(other, PAdicRepr) and self.ring is other.ring and self.digits == other.digits

    def __repr__(self):
        return f"PAdicRepr({self.digits})"


def make_chain_ring(family, p, e, r, cap=DEFAULT_RING_CAP):
    if family == "galois":
        return GaloisRing(p, e, r, cap=cap)
    if family == "u_adic":
        return UAdicRing(p, e, r, cap=cap)
    raise ValueError(f"unknown chain-ring family {family!r}")


def hom_weight(R, a):
    """Normalized homogeneous weight; for fields (e = 1) the Hamming weight."""
    a = R.coerce(a)
    if a.is_zero():
        return 0
    if R.e == 1:
        return 1
    if R.valuation(a) == R.e - 1:
        return R.q ** (R.e - 1)
    return (R.q - 1) * R.q ** (R.e - 2)


def kernel_mu_star_order(R):
    """|Ker of the induced map on unit groups| = q^(e-1), a p-group."""
    return R.q ** (R.e - 1)


def lift_nth_root(R, lam, n):
    """An n-th root of the unit lam in R, or None; requires gcd(n, p) = 1.

    Newton iteration from a lift of the residue-field root; existence is
    equivalent to existence of an n-th root of mu(lam) in the residue field.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, R.p) != 1:
        raise Inapplicable("n must be coprime to the characteristic p")
    lam = R.coerce(lam)
    if not R.is_unit(lam):
        raise Inapplicable("lam must be a unit")
    delta_bar = R.residue.nth_root(R.mu(lam), n)
    if delta_bar is None:
        return None
    x = R.section(delta_bar)
    n_elem = R.from_int(n)
    while True:
        fx = x ** n - lam
        if fx.is_zero():
            return x
        x = x - fx * R.inv(n_elem * x ** (n - 1))
