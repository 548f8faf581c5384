"""Arithmetic in F_{p^r} with discrete logs, n-th roots and square-root-of-minus-one.

Elements are coordinate vectors in the polynomial basis of a fixed canonical
modulus.  Construction is deterministic: the modulus is the lexicographically
smallest monic irreducible (coefficients compared ascending from the constant
term) and the primitive element is the generator with the smallest coordinate
tuple.
"""

from functools import lru_cache
from itertools import product
from math import gcd

from .errors import CapExceeded, Inapplicable, NoRootError

DEFAULT_FIELD_CAP = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    """Sorted distinct prime factors of n (trial division; desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense int-coefficient polynomial helpers over F_p (modulus search) ---

def _ip_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _ip_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_trim(out)


def _ip_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            off = len(a) - 1 - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - c * m[i]) % p
        a.pop()
    return _ip_trim(a)


def _ip_is_irreducible(f, p):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _poly_divides(g, f, p):
                continue
            return False
    return True


def _poly_divides(g, f, p):
    return not _ip_mod(f, g, p)


@lru_cache(maxsize=None)
def canonical_modulus(p, r):
    """Lex-smallest monic irreducible of degree r over F_p, ascending coeffs."""
    for tail in product(*[range(p)] * r):
        f = list(tail) + [1]
        if _ip_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __add__(self, other):
        other = self.field.coerce(other)
        p = self.field.p
        return FieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self.field.coerce(other)
        p = self.field.p
        return FieldElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self.field.coerce(other)
        return self.field._mul(self, other)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, k):
        F = self.field
        if k < 0:
            return self.inv() ** (-k)
        out = F.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        F = self.field
        return F.exp_of((F.q - 1 - F.discrete_log(self)) % (F.q - 1))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def key(self):
        """Deterministic sort key (coordinate tuple)."""
        return self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return isinstance(other, FieldElem) and self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self):
        if self.field.r == 1:
            return self.coeffs[0]
        return list(self.coeffs)

    def __str__(self):
        if self.field.r == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    __repr__ = __str__


class Field:
    """The finite field F_{p^r} with canonical modulus and primitive element."""

    def __init__(self, p, r, cap=DEFAULT_FIELD_CAP):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if r < 1:
            raise ValueError("extension degree must be positive")
        q = p ** r
        if q > cap:
            raise CapExceeded(f"field size {q} exceeds cap {cap}")
        self.p = p
        self.r = r
        self.q = q
        self.e = 1  # nilpotency index: fields are chain rings with e = 1
        self.modulus = canonical_modulus(p, r) if r > 1 else (0, 1)
        self._exp = None
        self._log = None
        self._build_tables()

    # -- construction of elements --

    def elem(self, coeffs):
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.r:
            raise ValueError("coordinate vector has wrong length")
        return FieldElem(self, coeffs)

    def from_int(self, n):
        return self.elem((n,) + (0,) * (self.r - 1))

    def coerce(self, x):
        if isinstance(x, FieldElem):
            if x.field is not self:
                raise ValueError("element from a different field")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r}")

    def zero(self):
        return self.elem((0,) * self.r)

    def one(self):
        return self.from_int(1)

    def elements(self):
        for tup in product(*[range(self.p)] * self.r):
            yield FieldElem(self, tup)

    def units(self):
        return (a for a in self.elements() if not a.is_zero())

    @property
    def size(self):
        return self.q

    # -- arithmetic --

    def _mul(self, a, b):
        p, r = self.p, self.r
        if r == 1:
            return FieldElem(self, ((a.coeffs[0] * b.coeffs[0]) % p,))
        if self._log is not None:
            la = self._log.get(a.coeffs)
            lb = self._log.get(b.coeffs)
            if la is None or lb is None:  # a zero operand
                return self.zero()
            return self._exp[(la + lb) % (self.q - 1)]
        out = [0] * (2 * r - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    out[i + j] = (out[i + j] + ai * bj) % p
        m = self.modulus
        for d in range(2 * r - 2, r - 1, -1):
            c = out[d]
            if c:
                out[d] = 0
                for i in range(r):
                    out[d - r + i] = (out[d - r + i] - c * m[i]) % p
        return FieldElem(self, tuple(out[:r]))

    # -- discrete logs --

    def _build_tables(self):
        g = self._find_primitive()
        exp = [self.one()]
        for _ in range(self.q - 2):
            exp.append(exp[-1] * g)
        self.g = g
        self._exp = exp
        self._log = {a.coeffs: i for i, a in enumerate(exp)}

    def _find_primitive(self):
        n = self.q - 1
        if n == 1:
            return self.one()
        checks = [n // t for t in prime_factors(n)]
        for a in self.elements():
            if a.is_zero():
                continue
            if all((a ** k) != self.one() for k in checks):
                return a
        raise AssertionError("no primitive element found")  # unreachable

    def exp_of(self, k):
        return self._exp[k % (self.q - 1)]

    def discrete_log(self, a):
        a = self.coerce(a)
        if a.is_zero():
            raise NoRootError("discrete log of zero is undefined")
        return self._log[a.coeffs]

    def nth_root(self, lam, n):
        """Canonical delta with delta^n = lam, or None if no n-th root exists.

        Existence criterion: gcd(n, q-1) divides discrete_log(lam).  The
        returned root is the one with smallest discrete log.
        """
        lam = self.coerce(lam)
        if lam.is_zero():
            raise NoRootError("n-th root of zero is not considered")
        if n < 1:
            raise ValueError("n must be positive")
        i = self.discrete_log(lam)
        d = gcd(n, self.q - 1)
        if i % d != 0:
            return None
        m = (self.q - 1) // d
        j = (i // d) * pow((n // d) % m, -1, m) % m if m > 1 else 0
        return self.exp_of(j)

    def sqrt_minus_one(self):
        """An element whose square is -1, or None."""
        if self.p == 2:
            raise Inapplicable("characteristic 2 excluded")
        return self.nth_root(self.from_int(-1), 2)

    # -- chain-ring protocol (e = 1 degenerate case) --

    def valuation(self, a):
        return 1 if self.coerce(a).is_zero() else 0

    def divide_gamma(self, a, k):
        if k == 0:
            return a
        if not a.is_zero():
            raise ValueError("not divisible")
        return a

    def mod_gamma(self, a, k):
        return a if k >= 1 else self.zero()

    def inv(self, a):
        return self.coerce(a).inv()

    def transversal(self, k):
        """Representatives of F mod <gamma^k>: all of F for k >= 1, {0} for k = 0."""
        if k == 0:
            return [self.zero()]
        return list(self.elements())

    def mu(self, a):
        return self.coerce(a)

    def section(self, a):
        return self.coerce(a)

    def is_unit(self, a):
        return not self.coerce(a).is_zero()

    def coeff_str(self, a):
        """Signed display representative: 4 in F_5 prints as -1."""
        a = self.coerce(a)
        if any(a.coeffs[1:]):
            return str(a)
        v = a.coeffs[0]
        if self.p > 2 and v > self.p // 2:
            return str(v - self.p)
        return str(v)

    def spec_string(self):
        return f"Fq:{self.p}^{self.r}"

    def __repr__(self):
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def make_field(p, r, cap=DEFAULT_FIELD_CAP):
    return Field(p, r, cap=cap)


def minus_one_is_square(p, r):
    """Whether -1 is a square in F_{p^r}, by the congruence conditions on p and r."""
    if p == 2:
        raise Inapplicable("odd characteristic required")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    return p % 4 == 1 or (p % 4 == 3 and r % 2 == 0)
