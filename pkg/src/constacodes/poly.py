"""Dense exact polynomial arithmetic over a field or chain ring.

Coefficients ascend by degree.  Division requires a monic divisor unless the
coefficient domain is a field.  Works over any domain whose elements support
+, -, * and whose domain object provides zero()/one()/coerce().
"""


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, ring, ints):
        return cls(ring, [ring.from_int(c) for c in ints])

    @classmethod
    def const(cls, ring, c):
        return cls(ring, [ring.coerce(c)])

    @classmethod
    def x(cls, ring):
        return cls(ring, [ring.zero(), ring.one()])

    @classmethod
    def x_pow_minus(cls, ring, n, lam):
        """x^n - lam."""
        cs = [-ring.coerce(lam)] + [ring.zero()] * (n - 1) + [ring.one()]
        return cls(ring, cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one()

    def coeff(self, i):
        return self.coeffs[i] if i <= self.degree else self.ring.zero()

    def leading(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly(self.ring, [])
            z = self.ring.zero()
            out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(self.ring, out)
        return self.scale(other)

    def scale(self, c):
        c = self.ring.coerce(c)
        return Poly(self.ring, [a * c for a in self.coeffs])

    def __pow__(self, k):
        out = Poly.const(self.ring, self.ring.one())
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        if not other.is_monic():
            # over a field, normalize; over a chain ring the divisor must be monic
            if getattr(ring, "e", None) == 1 or not hasattr(ring, "gamma"):
                lc = other.leading()
                inv = ring.inv(lc)
                q, r = divmod(self, other.scale(inv))
                return q.scale(inv), r
            raise ValueError("division by a non-monic polynomial over a chain ring")
        rem = list(self.coeffs)
        d = other.degree
        qcs = [ring.zero()] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            qcs[i - d] = c
            for j in range(d + 1):
                rem[i - d + j] = rem[i - d + j] - c * other.coeffs[j]
        return Poly(ring, qcs), Poly(ring, rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.ring.inv(self.leading()))

    def gcd(self, other):
        """Monic gcd; coefficient domain must be a field."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g, g monic; field coefficients."""
        ring = self.ring
        zero, one = Poly(ring, []), Poly.const(ring, ring.one())
        r0, r1 = self, other
        s0, s1 = one, zero
        t0, t1 = zero, one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = ring.inv(r0.leading())
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def eval(self, point):
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def substitute_scale(self, c):
        """f(c*x): coefficient i is multiplied by c^i. c must be a unit."""
        ring = self.ring
        c = ring.coerce(c)
        if hasattr(ring, "is_unit") and not ring.is_unit(c):
            raise ValueError("substitution scalar must be a unit")
        out, ck = [], ring.one()
        for i, a in enumerate(self.coeffs):
            out.append(a * ck)
            ck = ck * c
        return Poly(ring, out)

    def compose(self, other):
        """self(other(x))."""
        acc = Poly(self.ring, [])
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.const(self.ring, c)
        return acc

    def key(self):
        return (self.degree, tuple(c.key() for c in self.coeffs))

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            parts.append((i, self.ring.coeff_str(c) if hasattr(self.ring, "coeff_str") else str(c)))
        out = ""
        for k, (i, cs) in enumerate(parts):
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if i == 0:
                term = mag
            else:
                xs = "x" if i == 1 else f"x^{i}"
                term = xs if mag == "1" else f"{mag}*{xs}" if ("," in mag or "[" in mag) else f"{mag}{xs}"
            if k == 0:
                out = ("-" if neg else "") + term
            else:
                out += (" - " if neg else " + ") + term
        return out

    __repr__ = __str__


class Factorization:
    """unit * prod(factor^mult) == target, factors monic and canonically sorted."""

    __slots__ = ("ring", "unit", "factors")

    def __init__(self, ring, unit, factors):
        self.ring = ring
        self.unit = ring.coerce(unit)
        self.factors = sorted(factors, key=lambda fm: fm[0].key())

    def expand(self):
        out = Poly.const(self.ring, self.unit)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __eq__(self, other):
        return (isinstance(other, Factorization) and self.unit == other.unit
                and self.factors == other.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def to_json(self):
        return {"unit": self.unit.to_json(),
                "factors": [{"poly": f.to_json(), "mult": m} for f, m in self.factors]}

    def __str__(self):
        parts = []
        if not (self.unit == self.ring.one()):
            parts.append(str(self.unit))
        for f, m in self.factors:
            parts.append(f"({f})" + (f"^{m}" if m > 1 else ""))
        return "".join(parts) if parts else "1"

    __repr__ = __str__
