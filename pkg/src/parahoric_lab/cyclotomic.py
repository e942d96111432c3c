"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

A value is stored as a sparse integer combination of powers zeta_m^k,
k in Z/m.  Products are cyclic convolutions (exact, since zeta_m^m = 1);
the canonical form used for equality and rationality tests reduces the
coefficient vector modulo the m-th cyclotomic polynomial.

Values from groups with different exponents combine by promotion to the
lcm order, so characters of a Levi factor and of the ambient group can be
paired without leaving exact arithmetic.
"""

from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients (low to high) of Phi_m, by exact division of x^m - 1."""
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divide_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    dd = len(den) - 1
    assert den[-1] == 1
    for shift in range(len(out) - 1, -1, -1):
        c = num[dd + shift]
        out[shift] = c
        if c:
            for i, dc in enumerate(den):
                num[shift + i] -= c * dc
    assert all(v == 0 for v in num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def _reduction_row(m, k):
    """zeta_m^k reduced mod Phi_m, as a dense tuple of length deg Phi_m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    if k < deg:
        row = [0] * deg
        row[k] = 1
        return tuple(row)
    # x^k = x * x^(k-1) reduced
    prev = _reduction_row(m, k - 1)
    row = [0] + list(prev[: deg - 1])
    lead = prev[deg - 1]
    if lead:
        for i in range(deg):
            row[i] -= lead * phi[i]
    return tuple(row)


@lru_cache(maxsize=None)
def _euler_phi(m):
    out = 1
    n = m
    d = 2
    while d * d <= n:
        if n % d == 0:
            out *= d - 1
            n //= d
            while n % d == 0:
                out *= d
                n //= d
        d += 1
    if n > 1:
        out *= n - 1
    return out


@lru_cache(maxsize=None)
def _mobius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def _trace_of_power(m, k):
    """Tr_{Q(zeta_m)/Q}(zeta_m^k), a Ramanujan sum."""
    g = gcd(k % m, m)
    n = m // g
    return _mobius(n) * (_euler_phi(m) // _euler_phi(n))


@lru_cache(maxsize=None)
def _galois_exponents(m):
    return tuple(a for a in range(1, m) if gcd(a, m) == 1)


class Cyc:
    """An element of Z[zeta_m], sparse over the power basis of zeta_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs=None):
        self.m = m
        self.coeffs = {k % m: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def integer(cls, n, m=1):
        return cls(m, {0: n} if n else {})

    @classmethod
    def zeta(cls, m, k=1, coeff=1):
        return cls(m, {k % m: coeff})

    def promote(self, m2):
        if m2 == self.m:
            return self
        assert m2 % self.m == 0
        s = m2 // self.m
        return Cyc(m2, {k * s: v for k, v in self.coeffs.items()})

    def _common(self, other):
        m = lcm(self.m, other.m)
        return self.promote(m), other.promote(m)

    def __add__(self, other):
        if isinstance(other, int):
            other = Cyc.integer(other)
        a, b = self._common(other)
        out = dict(a.coeffs)
        for k, v in b.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Cyc(a.m, out)

    def __neg__(self):
        return Cyc(self.m, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Cyc.integer(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Cyc(self.m)
            return Cyc(self.m, {k: v * other for k, v in self.coeffs.items()})
        a, b = self._common(other)
        m = a.m
        out = {}
        for k1, v1 in a.coeffs.items():
            for k2, v2 in b.coeffs.items():
                k = k1 + k2
                if k >= m:
                    k -= m
                out[k] = out.get(k, 0) + v1 * v2
        return Cyc(m, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def conjugate(self):
        """Complex conjugation zeta -> zeta^(-1)."""
        return Cyc(self.m, {(-k) % self.m: v for k, v in self.coeffs.items()})

    def reduced(self):
        """Canonical coefficient tuple modulo Phi_m (length deg Phi_m)."""
        deg = len(cyclotomic_polynomial(self.m)) - 1
        out = [0] * deg
        for k, v in self.coeffs.items():
            row = _reduction_row(self.m, k)
            for i in range(deg):
                if row[i]:
                    out[i] += v * row[i]
        return tuple(out)

    def is_zero(self):
        if not self.coeffs:
            return True
        return all(v == 0 for v in self.reduced())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyc.integer(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((1, self.as_rational_integer())) if self.is_rational_integer() \
            else hash((self.m, self.reduced()))

    def is_rational_integer(self):
        """True iff the value is Galois-invariant (hence a rational integer here)."""
        c = self.coeffs
        if not c or set(c) == {0}:
            return True
        m = self.m
        for a in _galois_exponents(m):
            if a == 1:
                continue
            moved = {(k * a) % m: v for k, v in c.items()}
            if moved != c:
                # Sparse vectors may differ while the values agree; fall back
                # to the canonical form for the honest answer.
                red = self.reduced()
                return all(v == 0 for v in red[1:])
        return True

    def as_rational_integer(self):
        """Exact integer value; raises if the element is not a rational integer."""
        if not self.coeffs:
            return 0
        if set(self.coeffs) == {0}:
            return self.coeffs[0]
        if not self.is_rational_integer():
            raise ValueError("value %r is not a rational integer" % (self,))
        m = self.m
        tr = sum(v * _trace_of_power(m, k) for k, v in self.coeffs.items())
        phi = _euler_phi(m)
        if tr % phi:
            raise ValueError("trace %d not divisible by phi(%d)" % (tr, m))
        return tr // phi

    def __repr__(self):
        if not self.coeffs:
            return "Cyc(0)"
        parts = ["%d*z%d^%d" % (v, self.m, k) for k, v in sorted(self.coeffs.items())]
        return "Cyc(" + " + ".join(parts) + ")"


def exact_nonneg_ratio(total, denom):
    """total / denom as a non-negative integer; total is a Cyc, denom a positive int."""
    n = total.as_rational_integer()
    if n % denom:
        raise ValueError("inner product %d/%d is not an integer" % (n, denom))
    n //= denom
    if n < 0:
        raise ValueError("inner product %d is negative" % n)
    return n
