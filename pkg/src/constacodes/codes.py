"""Constacyclic codes as ideals of R[x]/(x^n - lam).

A code is stored with a canonical generator matrix obtained by row reduction
over the base ring.  Pivot selection prefers the entry of lowest
gamma-valuation, then the lowest column index, then the lexicographically
smallest row; each pivot is normalized to exactly gamma^v.  The cardinality is
the product of q^(e - v_i) over the pivot valuations, so large codes never
need enumeration.
"""

from itertools import product

from .errors import CapExceeded, Inapplicable, NoRootError
from .ffield import Field
from .chainring import hom_weight, lift_nth_root
from .poly import Poly

DEFAULT_ENUM_CAP = 1 << 20


class QElem:
    """Element of R[x]/(x^n - lam): a coefficient vector of length n."""

    __slots__ = ("quo", "coeffs")

    def __init__(self, quo, coeffs):
        self.quo = quo
        self.coeffs = coeffs

    def __add__(self, other):
        other = self.quo.coerce(other)
        return QElem(self.quo, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self.quo.coerce(other)
        return QElem(self.quo, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return QElem(self.quo, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, QElem):
            return self.quo._mul(self, other)
        c = self.quo.base.coerce(other)
        return QElem(self.quo, tuple(a * c for a in self.coeffs))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        out = self.quo.one()
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
        return isinstance(other, QElem) and self.quo is other.quo and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_poly(self):
        return Poly(self.quo.base, self.coeffs)

    def to_json(self):
        return [a.to_json() for a in self.coeffs]

    def __str__(self):
        return str(self.to_poly())

    __repr__ = __str__


class QuotientRing:
    """R[x]/(x^n - lam) for a unit lam of the base field or chain ring."""

    def __init__(self, base, n, lam, cap=DEFAULT_ENUM_CAP):
        if n < 1:
            raise ValueError("length must be positive")
        lam = base.coerce(lam)
        if not base.is_unit(lam):
            raise ValueError("lam must be a unit of the base ring")
        self.base = base
        self.n = n
        self.lam = lam
        self.cap = cap

    @property
    def size(self):
        return self.base.size ** self.n

    def elem(self, coeffs):
        coeffs = [self.base.coerce(c) for c in coeffs]
        if len(coeffs) > self.n:
            raise ValueError("coefficient vector too long")
        coeffs += [self.base.zero()] * (self.n - len(coeffs))
        return QElem(self, tuple(coeffs))

    def from_poly(self, f):
        """Reduce a polynomial over the base ring modulo x^n - lam."""
        cs = list(f.coeffs)
        while len(cs) > self.n:
            c = cs.pop()
            cs[len(cs) - self.n] = cs[len(cs) - self.n] + self.lam * c
        return self.elem(cs)

    def from_ints(self, ints):
        return self.elem([self.base.from_int(c) for c in ints])

    def coerce(self, x):
        if isinstance(x, QElem):
            if x.quo is not self:
                raise ValueError("element from a different quotient")
            return x
        if isinstance(x, Poly):
            return self.from_poly(x)
        if isinstance(x, int):
            return self.elem([self.base.from_int(x)])
        if isinstance(x, (list, tuple)):
            return self.elem(list(x))
        return self.elem([self.base.coerce(x)])

    def zero(self):
        return self.elem([])

    def one(self):
        return self.elem([self.base.one()])

    def x(self):
        if self.n == 1:
            return self.elem([self.lam])
        return self.elem([self.base.zero(), self.base.one()])

    def elements(self):
        if self.size > self.cap:
            raise CapExceeded(f"quotient size {self.size} exceeds cap {self.cap}")
        pool = list(self.base.elements())
        for tup in product(*[pool] * self.n):
            yield QElem(self, tup)

    def _mul(self, a, b):
        n, base = self.n, self.base
        z = base.zero()
        out = [z] * (2 * n - 1)
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b.coeffs):
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        for k in range(2 * n - 2, n - 1, -1):
            c = out[k]
            if not c.is_zero():
                out[k - n] = out[k - n] + self.lam * c
        return QElem(self, tuple(out[:n]))

    def __repr__(self):
        return f"{self.base!r}[x]/(x^{self.n} - {self.lam})"


def shift(Q, c):
    """The constacyclic shift (lam*c_{n-1}, c_0, ..., c_{n-2}); equals x*c."""
    c = Q.coerce(c)
    return QElem(Q, (Q.lam * c.coeffs[-1],) + c.coeffs[:-1])


# ---- canonical row reduction over the base ring ----

def _row_reduce(base, rows):
    """Reduce rows (lists of base elements) to canonical triangular form.

    Returns a list of (pivot_col, pivot_valuation, row) in elimination order:
    pivots chosen by (lowest valuation, lowest column, lex-smallest row), each
    normalized to exactly gamma^v, entries below cleared exactly and entries
    above reduced modulo gamma^v.
    """
    e = base.e
    rows = [list(r) for r in rows]
    rows = [r for r in rows if any(not c.is_zero() for c in r)]
    done = []
    while rows:
        best = None
        for ri, row in enumerate(rows):
            for ci, c in enumerate(row):
                if c.is_zero():
                    continue
                v = base.valuation(c)
                cand = (v, ci)
                if best is None or cand < best[0]:
                    best = (cand, ri)
                elif cand == best[0]:
                    if tuple(x.key() for x in row) < tuple(x.key() for x in rows[best[1]]):
                        best = (cand, ri)
        (v, ci), ri = best
        row = rows.pop(ri)
        uinv = base.inv(base.divide_gamma(row[ci], v))
        row = [uinv * c for c in row]
        for other in rows:
            c = other[ci]
            if c.is_zero():
                continue
            t = base.divide_gamma(c, v)
            for j, rj in enumerate(row):
                if not rj.is_zero():
                    other[j] = other[j] - t * rj
        rows = [r for r in rows if any(not c.is_zero() for c in r)]
        done.append((ci, v, row))
    # reduce entries above each pivot modulo gamma^v
    for i, (ci, v, row) in enumerate(done):
        for j in range(i):
            _, _, rowj = done[j]
            c = rowj[ci]
            if c.is_zero():
                continue
            t = base.divide_gamma(c - base.mod_gamma(c, v), v)
            if t.is_zero():
                continue
            for k, rk in enumerate(row):
                if not rk.is_zero():
                    rowj[k] = rowj[k] - t * rk
    return done


class ConstaCode:
    """A lam-constacyclic code: an ideal of a QuotientRing."""

    def __init__(self, ambient, generators):
        self.ambient = ambient
        self.generators = [ambient.coerce(g) for g in generators]
        rows = [(ambient.x() ** j * g).coeffs
                for g in self.generators for j in range(ambient.n)]
        self._rows = _row_reduce(ambient.base, rows)
        e = ambient.base.e
        q = ambient.base.q
        self.cardinality = 1
        for _, v, _ in self._rows:
            self.cardinality *= q ** (e - v)

    @property
    def canonical_matrix(self):
        return tuple(tuple(row) for _, _, row in
                     sorted(self._rows, key=lambda t: t[0]))

    def contains(self, w):
        """Membership by greedy reduction against the canonical rows."""
        base = self.ambient.base
        w = list(self.ambient.coerce(w).coeffs)
        for ci, v, row in self._rows:
            c = w[ci]
            if c.is_zero():
                continue
            if base.valuation(c) < v:
                return False
            t = base.divide_gamma(c, v)
            for j, rj in enumerate(row):
                if not rj.is_zero():
                    w[j] = w[j] - t * rj
        return all(c.is_zero() for c in w)

    def codewords(self, cap=DEFAULT_ENUM_CAP):
        """All codewords (requires cardinality within the cap)."""
        if self.cardinality > cap:
            raise CapExceeded(f"code size {self.cardinality} exceeds cap {cap}")
        base = self.ambient.base
        e = base.e
        pools = [base.transversal(e - v) for _, v, _ in self._rows]
        zero = self.ambient.zero()
        for combo in product(*pools):
            w = zero
            for t, (_, _, row) in zip(combo, self._rows):
                w = w + QElem(self.ambient, tuple(t * c for c in row))
            yield w

    def __eq__(self, other):
        if not isinstance(other, ConstaCode) or self.ambient is not other.ambient:
            return False
        if self.cardinality != other.cardinality:
            return False
        return all(other.contains(QElem(self.ambient, tuple(row)))
                   for _, _, row in self._rows)

    def __le__(self, other):
        return (self.cardinality <= other.cardinality and
                all(other.contains(QElem(self.ambient, tuple(row)))
                    for _, _, row in self._rows))

    def key(self):
        return tuple((ci, v, tuple(c.key() for c in row))
                     for ci, v, row in sorted(self._rows, key=lambda t: t[0]))

    def to_json(self):
        Q = self.ambient
        return {
            "ring": Q.base.spec_string(),
            "n": Q.n,
            "lambda": Q.lam.to_json(),
            "canonical_matrix": [[c.to_json() for c in row] for row in self.canonical_matrix],
            "cardinality": self.cardinality,
        }

    def __repr__(self):
        return f"ConstaCode(|C|={self.cardinality}, n={self.ambient.n})"


def code_from_generators(Q, gens):
    """The ideal of Q generated by gens, with canonical matrix and cardinality."""
    return ConstaCode(Q, list(gens))


def is_constacyclic_closed(Q, words):
    """Whether the base-ring span of words is closed under the shift."""
    words = [Q.coerce(w) for w in words]
    span = _row_reduce(Q.base, [list(w.coeffs) for w in words])
    probe = ConstaCode.__new__(ConstaCode)
    probe.ambient = Q
    probe._rows = span
    return all(probe.contains(shift(Q, w)) for w in words)


def _word_weight(word, kind):
    if kind == "hamming":
        return sum(1 for c in word.coeffs if not c.is_zero())
    if kind == "homogeneous":
        return sum(hom_weight(word.quo.base, c) for c in word.coeffs)
    raise ValueError(f"unknown weight kind {kind!r}")


def weight_enumerator(C, kind="hamming", cap=DEFAULT_ENUM_CAP):
    """Exact weight distribution as a vector indexed by weight."""
    counts = {}
    for w in C.codewords(cap=cap):
        wt = _word_weight(w, kind)
        counts[wt] = counts.get(wt, 0) + 1
    out = [0] * (max(counts) + 1)
    for wt, c in counts.items():
        out[wt] = c
    return out


class EquivMap:
    """The isomorphism f(x) -> f(delta^{-1} x) between two quotients.

    Requires delta^n = lam(dst)/lam(src); coefficient i is scaled by the unit
    delta^{-i}, so the map is a Hamming-weight-preserving ring isomorphism.
    """

    def __init__(self, src, dst, delta):
        if src.base is not dst.base or src.n != dst.n:
            raise ValueError("quotients must share base ring and length")
        base = src.base
        delta = base.coerce(delta)
        if not base.is_unit(delta):
            raise ValueError("delta must be a unit")
        if delta ** src.n * src.lam != dst.lam:
            raise ValueError("delta^n must equal lam(dst)/lam(src)")
        self.src = src
        self.dst = dst
        self.delta = delta
        self._dinv = base.inv(delta)

    def apply(self, f):
        f = self.src.coerce(f)
        out, ck = [], self.src.base.one()
        for c in f.coeffs:
            out.append(c * ck)
            ck = ck * self._dinv
        return self.dst.elem(out)

    def unapply(self, f):
        f = self.dst.coerce(f)
        out, ck = [], self.src.base.one()
        for c in f.coeffs:
            out.append(c * ck)
            ck = ck * self.delta
        return self.src.elem(out)

    def apply_code(self, C):
        return ConstaCode(self.dst, [self.apply(g) for g in C.generators])

    def unapply_code(self, C):
        return ConstaCode(self.src, [self.unapply(g) for g in C.generators])

    def __repr__(self):
        return f"EquivMap(delta={self.delta}: {self.src!r} -> {self.dst!r})"


def equiv_map_apply(m, f):
    return m.apply(f)


class CrtSplit:
    """R[x]/(x^{2m} - 1) (or + 1) split into length-m cyclic components.

    The idempotents e1 = (x^m + 1)/2 and e2 = -(x^m - 1)/2 satisfy e1 + e2 = 1
    and e1*e2 = 0, giving R[x]/(x^{2m}-1) = R[x]/(x^m-1) (+) R[x]/(x^m+1).
    The negacyclic variant first conjugates by the equivalence map with a root
    nu0 of -1; it is inapplicable when no such root exists.
    """

    def __init__(self, R, m, variant="cyclic"):
        if R.p == 2:
            raise Inapplicable("p must be odd (2 must be a unit)")
        if m % 2 == 0:
            raise Inapplicable("m must be odd")
        if variant not in ("cyclic", "negacyclic"):
            raise ValueError(f"unknown variant {variant!r}")
        self.R = R
        self.m = m
        self.variant = variant
        self.cyclic = QuotientRing(R, 2 * m, R.one())
        self.plus = QuotientRing(R, m, R.one())
        self.minus = QuotientRing(R, m, -R.one())
        half = R.inv(R.from_int(2))
        xm = [R.zero()] * m + [R.one()]
        self.e1 = self.cyclic.elem([c * half for c in
                                    (Poly(R, xm) + Poly.const(R, R.one())).coeffs])
        self.e2 = self.cyclic.elem([-(c * half) for c in
                                    (Poly(R, xm) - Poly.const(R, R.one())).coeffs])
        if variant == "negacyclic":
            if isinstance(R, Field):
                nu0 = R.sqrt_minus_one()
            else:
                nu0 = lift_nth_root(R, -R.one(), 2)
            if nu0 is None:
                raise NoRootError("no square root of -1 in R; negacyclic split inapplicable")
            self.nu0 = nu0
            self.ambient = QuotientRing(R, 2 * m, -R.one())
            self.psi = EquivMap(self.cyclic, self.ambient, nu0)
        else:
            self.ambient = self.cyclic
            self.psi = None

    def forward(self, f):
        f = self.ambient.coerce(f)
        if self.psi is not None:
            f = self.psi.unapply(f)
        fp = f.to_poly()
        a = fp % Poly.x_pow_minus(self.R, self.m, self.R.one())
        b = fp % Poly.x_pow_minus(self.R, self.m, -self.R.one())
        return self.plus.from_poly(a), self.minus.from_poly(b)

    def backward(self, a, b):
        a = self.plus.coerce(a)
        b = self.minus.coerce(b)
        lift_a = self.cyclic.elem(list(a.coeffs))
        lift_b = self.cyclic.elem(list(b.coeffs))
        out = lift_a * self.e1 + lift_b * self.e2
        if self.psi is not None:
            out = self.psi.apply(out)
        return out


def crt_split(R, m, variant="cyclic"):
    return CrtSplit(R, m, variant)


_PS_ROOT_CACHE = {}


def galois_ps_root(R, alpha, s):
    """A unit alpha0 with alpha0^(p^s) = alpha in the Galois ring R, or None.

    The Teichmuller part has an exact root since gcd(p^s, p^r - 1) = 1; the
    1-unit part is searched exhaustively (the p-power map need not be
    surjective on 1 + pR).
    """
    alpha = R.coerce(alpha)
    key = (R, alpha, s)
    if key in _PS_ROOT_CACHE:
        return _PS_ROOT_CACHE[key]
    n = R.p ** s
    t = R.teich_lift(R.mu(alpha))
    if R.q == 2:
        t0 = R.one()
    else:
        j = R.residue.discrete_log(R.mu(alpha))
        t0 = R.xi ** (j * pow(n % (R.q - 1), -1, R.q - 1) % (R.q - 1))
    w = alpha * R.inv(t)
    res = None
    for z in R.transversal(R.e - 1):
        w0 = R.one() + R.gamma * z
        if w0 ** n == w:
            res = t0 * w0
            break
    _PS_ROOT_CACHE[key] = res
    return res


class ChainQuotient:
    """The ring R[x]/(x^{p^s} - (alpha + beta*p)) with its uniformizer.

    Requires a p^s-th root alpha0 of alpha in R; then pi = alpha0^{-1}x - 1
    generates the maximal ideal, pi^{p^s} = p*rho with rho a unit, and the
    nilpotency index of pi is e*p^s.
    """

    def __init__(self, R, s, alpha, beta, cap=DEFAULT_ENUM_CAP):
        if s < 0:
            raise ValueError("s must be nonnegative")
        alpha = R.coerce(alpha)
        beta = R.coerce(beta)
        if not R.is_unit(alpha) or not R.is_unit(beta):
            raise ValueError("alpha and beta must be units")
        self.R = R
        self.s = s
        self.n = R.p ** s
        self.alpha = alpha
        self.beta = beta
        self.lam = alpha + beta * R.gamma
        self.alpha0 = galois_ps_root(R, alpha, s)
        if self.alpha0 is None:
            raise Inapplicable(
                f"alpha = {alpha} has no p^{s}-th root in {R!r}")
        self.Q = QuotientRing(R, self.n, self.lam, cap=cap)
        self.pi = self.Q.from_poly(
            Poly(R, [-R.one(), R.inv(self.alpha0)]) if self.n > 1
            else Poly(R, [R.inv(self.alpha0) * self.lam - R.one()]))

    @property
    def max_index(self):
        return self.R.e * self.n

    def nilpotency_index(self):
        """Smallest k with pi^k = 0."""
        acc = self.Q.one()
        for k in range(1, self.max_index + 1):
            acc = acc * self.pi
            if acc.is_zero():
                return k
        raise AssertionError("pi is not nilpotent")  # unreachable

    def rho(self):
        """The unit rho with pi^(p^s) = p*rho (requires e >= 2)."""
        R = self.R
        if R.e < 2:
            raise Inapplicable("rho is only determined for e >= 2")
        pp = self.pi ** self.n
        return QElem(self.Q, tuple(R.divide_gamma(c, 1) for c in pp.coeffs))


def chain_quotient_build(R, s, alpha, beta, cap=DEFAULT_ENUM_CAP):
    cq = ChainQuotient(R, s, alpha, beta, cap=cap)
    assert cq.alpha0 ** cq.n == cq.alpha
    if R.e >= 2:
        assert unit_in_chain_quotient(cq, cq.rho()), "rho is not a unit"
    assert cq.nilpotency_index() == cq.max_index, "nilpotency index mismatch"
    return cq


def chain_code(cq, i):
    """The ideal <pi^i>, of cardinality p^(r*(e*p^s - i))."""
    if not 0 <= i <= cq.max_index:
        raise ValueError(f"i must lie in [0, {cq.max_index}]")
    C = ConstaCode(cq.Q, [cq.pi ** i])
    assert C.cardinality == cq.R.p ** (cq.R.r * (cq.max_index - i))
    return C


def unit_in_chain_quotient(cq, f):
    """Unit test via the expansion f = sum a_i * pi^i: unit iff mu(a_0) != 0.

    a_0 is the value of the degree < p^s representative at x = alpha0.
    """
    f = cq.Q.coerce(f)
    a0 = f.to_poly().eval(cq.alpha0)
    return cq.R.is_unit(a0)


def enumerate_all_ideals(Q, cap=DEFAULT_ENUM_CAP):
    """All ideals of Q by exhaustive enumeration, deduplicated and sorted.

    Builds every principal ideal, then closes under ideal sums.
    """
    if Q.size > cap:
        raise CapExceeded(f"quotient size {Q.size} exceeds cap {cap}")
    ideals = []

    def add(C):
        for D in ideals:
            if C == D:
                return False
        ideals.append(C)
        return True

    for a in Q.elements():
        add(ConstaCode(Q, [a]))
    frontier = list(ideals)
    while frontier:
        fresh = []
        for C in frontier:
            for D in list(ideals):
                S = ConstaCode(Q, C.generators + D.generators)
                if add(S):
                    fresh.append(S)
        frontier = fresh
    ideals.sort(key=lambda C: (-C.cardinality, C.key()))
    return ideals
