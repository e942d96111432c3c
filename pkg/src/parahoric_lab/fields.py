"""Exact arithmetic over F_q and over the truncated ring F_q[pi]/(pi^M).

Elements of F_q (q = p^k) are integers in [0, q) whose base-p digits are the
coefficients of a polynomial in the generator, reduced modulo a fixed
irreducible modulus.  The modulus is the lexicographically least monic
irreducible of degree k (smallest integer encoding), so representations are
identical across runs.

Elements of the truncated ring are integers in [0, q^M) whose base-q digits
are the pi-adic coefficients.  All operations are exact; nothing ever
extends the truncation level silently.
"""

from functools import lru_cache

from .errors import NotAUnit

DEFAULT_Q_BOUND = 16


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_mod(a, m, p):
    # a, m lists of coefficients, m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and len(a) > 0:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - c * m[i]) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _irreducible(poly, p):
    """Trial factorization: no monic factor of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            cand = _decode_poly(enc, p, d) + [1]
            if _poly_divides(cand, poly, p):
                return False
    return True


def _poly_divides(d, a, p):
    a = list(a)
    dd = len(d) - 1
    inv_lead = pow(d[-1], p - 2, p)
    while len(a) - 1 >= dd:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dd
        for i in range(dd + 1):
            a[shift + i] = (a[shift + i] - c * d[i]) % p
        a.pop()
        while a and a[-1] == 0 and len(a) - 1 >= dd:
            a.pop()
    while a and a[-1] == 0:
        a.pop()
    return not a


def _decode_poly(enc, p, length):
    out = []
    for _ in range(length):
        out.append(enc % p)
        enc //= p
    return out


class FieldSpec:
    """The finite field F_q with full add/mul tables.

    Attributes:
        p, k, q: characteristic, degree, order.
        modulus: coefficient tuple (low to high) of the defining polynomial.
    """

    def __init__(self, p, k, q_bound=DEFAULT_Q_BOUND):
        if not _is_prime(p):
            raise ValueError("p = %r is not prime" % (p,))
        if k < 1:
            raise ValueError("k must be >= 1")
        q = p ** k
        if q > q_bound:
            raise ValueError("q = %d exceeds the bound %d" % (q, q_bound))
        self.p = p
        self.k = k
        self.q = q
        self.modulus = self._least_irreducible(p, k)
        self._build_tables()

    @staticmethod
    def _least_irreducible(p, k):
        for enc in range(p ** k):
            cand = _decode_poly(enc, p, k) + [1]
            if _irreducible(cand, p):
                return tuple(cand)
        raise RuntimeError("no irreducible modulus found (internal error)")

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        mod = list(self.modulus)
        add = []
        mul = []
        for a in range(q):
            pa = _decode_poly(a, p, k)
            arow = []
            mrow = []
            for b in range(q):
                pb = _decode_poly(b, p, k)
                s = [(x + y) % p for x, y in zip(pa, pb)]
                arow.append(self._encode(s))
                pr = _poly_mod(_poly_mul_mod_p(pa, pb, p), mod, p)
                mrow.append(self._encode(pr))
            add.append(tuple(arow))
            mul.append(tuple(mrow))
        self.add_table = tuple(add)
        self.mul_table = tuple(mul)
        self.neg_table = tuple(self._encode([(-c) % p for c in _decode_poly(a, p, k)])
                               for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise RuntimeError("modulus is not irreducible (internal error)")
        self.inv_table = tuple(inv)

    def _encode(self, coeffs):
        v = 0
        for c in reversed(coeffs[: self.k]):
            v = v * self.p + c
        return v

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 has no inverse in F_%d" % self.q)
        return self.inv_table[a]

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def __repr__(self):
        return "FieldSpec(p=%d, k=%d)" % (self.p, self.k)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))


@lru_cache(maxsize=None)
def make_field(p, k, q_bound=DEFAULT_Q_BOUND):
    """Build (and cache) the field with p^k elements."""
    return FieldSpec(p, k, q_bound=q_bound)


class TruncRing:
    """F_q[pi]/(pi^M).  Elements are ints in [0, q^M), base-q digits = coefficients."""

    def __init__(self, field, level):
        if level < 1:
            raise ValueError("truncation level must be >= 1")
        self.field = field
        self.level = level
        self.q = field.q
        self.size = field.q ** level
        self._pow = tuple(field.q ** i for i in range(level + 1))

    def digits(self, x):
        q = self.q
        return tuple((x // self._pow[i]) % q for i in range(self.level))

    def from_digits(self, ds):
        v = 0
        for d in reversed(ds[: self.level]):
            v = v * self.q + d
        return v

    def digit(self, x, i):
        if i < 0 or i >= self.level:
            return 0
        return (x // self._pow[i]) % self.q

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def pi(self):
        return self.q  # the element with digit 1 at pi^1

    def add(self, x, y):
        f = self.field
        return self.from_digits([f.add(a, b) for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x):
        f = self.field
        return self.from_digits([f.neg(a) for a in self.digits(x)])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        f = self.field
        dx, dy = self.digits(x), self.digits(y)
        out = [0] * self.level
        for i, a in enumerate(dx):
            if a:
                for j, b in enumerate(dy):
                    if b and i + j < self.level:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return self.from_digits(out)

    def scalar(self, c, x):
        """Multiply by a residue-field scalar c."""
        f = self.field
        return self.from_digits([f.mul(c, a) for a in self.digits(x)])

    def shift(self, x, n):
        """Multiply by pi^n (n >= 0), truncating."""
        ds = self.digits(x)
        out = [0] * self.level
        for i, a in enumerate(ds):
            if a and 0 <= i + n < self.level:
                out[i + n] = a
        return self.from_digits(out)

    def unshift_exact(self, x, n):
        """Divide by pi^n; requires the low n digits to vanish."""
        ds = self.digits(x)
        if any(ds[i] for i in range(min(n, self.level))):
            raise ValueError("element is not divisible by pi^%d" % n)
        out = list(ds[n:]) + [0] * n
        return self.from_digits(out)

    def is_unit(self, x):
        return self.digit(x, 0) != 0

    def inv(self, x):
        """Unit inverse by lifting the residue inverse through pi-adic corrections."""
        if not self.is_unit(x):
            raise NotAUnit("element %r has zero residue" % (x,))
        b = self.field.inv(self.digit(x, 0))
        # Newton iteration b <- b(2 - xb) doubles the valid precision each step.
        prec = 1
        while prec < self.level:
            two_minus = self.sub(self.from_digits([self._two()]), self.mul(x, b))
            b = self.mul(b, two_minus)
            prec *= 2
        return b

    def _two(self):
        return self.field.add(1, 1)

    def valuation(self, x):
        """Least index with nonzero coefficient; M for zero."""
        ds = self.digits(x)
        for i, d in enumerate(ds):
            if d:
                return i
        return self.level

    def elements(self):
        return range(self.size)

    def __repr__(self):
        return "TruncRing(F_%d, M=%d)" % (self.q, self.level)

    def __eq__(self, other):
        return isinstance(other, TruncRing) and (self.field, self.level) == (other.field, other.level)

    def __hash__(self):
        return hash((self.field, self.level))


def valuation(ring, x):
    return ring.valuation(x)


class TruncMatrix:
    """Square matrix over a TruncRing.  Immutable; rows is a tuple of tuples."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[ring.one if i == j else 0 for j in range(n)] for i in range(n)])

    def mul(self, other):
        R = self.ring
        n = self.n
        a, b = self.rows, other.rows
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = R.add(acc, R.mul(a[i][k], b[k][j]))
                row.append(acc)
            out.append(row)
        return TruncMatrix(R, out)

    def add(self, other):
        R = self.ring
        return TruncMatrix(R, [[R.add(x, y) for x, y in zip(r, s)]
                               for r, s in zip(self.rows, other.rows)])

    def sub(self, other):
        R = self.ring
        return TruncMatrix(R, [[R.sub(x, y) for x, y in zip(r, s)]
                               for r, s in zip(self.rows, other.rows)])

    def residue(self):
        """Reduction mod pi as a tuple-of-tuples over F_q."""
        R = self.ring
        return tuple(tuple(R.digit(x, 0) for x in r) for r in self.rows)

    def is_residue_invertible(self):
        return _fq_invert(self.ring.field, self.residue()) is not None

    def invert(self):
        """Inverse at the ring's truncation level; raises NotAUnit if the residue is singular."""
        R = self.ring
        res_inv = _fq_invert(R.field, self.residue())
        if res_inv is None:
            raise NotAUnit("matrix residue is singular over F_%d" % R.q)
        b = TruncMatrix(R, res_inv)
        ident = TruncMatrix.identity(R, self.n)
        two_i = ident.add(ident)
        prec = 1
        while prec < R.level:
            b = b.mul(two_i.sub(self.mul(b)))
            prec *= 2
        return b

    def __eq__(self, other):
        return isinstance(other, TruncMatrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return "TruncMatrix(%r, %r)" % (self.ring, [list(r) for r in self.rows])


def _fq_invert(field, rows):
    """Invert a matrix over F_q by Gaussian elimination; None if singular."""
    n = len(rows)
    a = [list(r) for r in rows]
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        c = field.inv(a[col][col])
        a[col] = [field.mul(c, x) for x in a[col]]
        inv[col] = [field.mul(c, x) for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(a[r], a[col])]
                inv[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(r) for r in inv)


def mat_invert(mat):
    """Module-level alias kept for the public operation name."""
    return mat.invert()
