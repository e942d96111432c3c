"""Hereditary orders as valuation patterns and affine Weyl representatives.

A pattern is an R x R integer matrix v; it stands for the set of matrices
whose (i,j) entry has pi-valuation >= v(i,j).  Standard orders, radicals,
conjugates and intersections are all min/max arithmetic on patterns, so
this layer never materializes ring elements.
"""

import itertools

from .errors import ShapeMismatch


class BlockShape:
    """Composition n = (n_0,...,n_{e-1}) of R, with the cuspidal block size f."""

    def __init__(self, parts, f=1):
        self.parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in self.parts):
            raise ShapeMismatch("composition parts must be positive")
        self.f = f
        self.R = sum(self.parts)
        self.e = len(self.parts)
        if any(p % f for p in self.parts):
            raise ShapeMismatch("parts %r not multiples of f=%d" % (self.parts, f))
        self.e0 = self.R // f
        blocks = []
        for b, p in enumerate(self.parts):
            blocks.extend([b] * p)
        self.block_of = tuple(blocks)  # expanded coordinate -> n-block index
        starts = []
        s = 0
        for p in self.parts:
            starts.append(s)
            s += p
        self.starts = tuple(starts)

    @classmethod
    def principal(cls, e0, f):
        return cls((f,) * e0, f=f)

    def fblock_of(self, i):
        return i // self.f

    def fblocks_in_part(self, b):
        """Indices of the f-blocks making up the b-th composition part."""
        lo = self.starts[b] // self.f
        return range(lo, lo + self.parts[b] // self.f)

    def refines_into(self, other):
        """True iff other's parts merge consecutive parts of self."""
        if self.R != other.R:
            return False
        edges_self = set(itertools.accumulate(self.parts))
        edges_other = set(itertools.accumulate(other.parts))
        return edges_other <= edges_self

    def __repr__(self):
        return "BlockShape(%r, f=%d)" % (self.parts, self.f)

    def __eq__(self, other):
        return isinstance(other, BlockShape) and (self.parts, self.f) == (other.parts, other.f)

    def __hash__(self):
        return hash((self.parts, self.f))


class OrderPattern:
    """Entry-valuation floor matrix for a set of R x R matrices over o_E."""

    __slots__ = ("R", "v")

    def __init__(self, v):
        self.v = tuple(tuple(int(x) for x in row) for row in v)
        self.R = len(self.v)
        for row in self.v:
            assert len(row) == self.R

    def entry(self, i, j):
        return self.v[i][j]

    def intersect(self, other):
        """Pattern of the intersection: entrywise maximum."""
        assert self.R == other.R
        return OrderPattern([[max(a, b) for a, b in zip(r, s)]
                             for r, s in zip(self.v, other.v)])

    def contains(self, other):
        """Set containment: self's floors are everywhere <= other's."""
        return all(a <= b for r, s in zip(self.v, other.v) for a, b in zip(r, s))

    def is_multiplicatively_closed(self):
        R = self.R
        v = self.v
        for i in range(R):
            for j in range(R):
                if v[i][j] > min(v[i][k] + v[k][j] for k in range(R)):
                    return False
        return True

    def conjugate(self, x):
        """Pattern of x * S * x^(-1) for this set S, x an AffineWeylElem."""
        w, a = x.expanded(self.R)
        winv = [0] * self.R
        for i, wi in enumerate(w):
            winv[wi] = i
        out = []
        for i in range(self.R):
            row = []
            for j in range(self.R):
                row.append(self.v[winv[i]][winv[j]] + a[winv[i]] - a[winv[j]])
            out.append(row)
        return OrderPattern(out)

    def __eq__(self, other):
        return isinstance(other, OrderPattern) and self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return "OrderPattern(%r)" % (list(map(list, self.v)),)


def standard_order(shape):
    """Hereditary order of the shape: 0 on and above the block diagonal, 1 below."""
    blk = shape.block_of
    R = shape.R
    pat = OrderPattern([[0 if blk[i] <= blk[j] else 1 for j in range(R)] for i in range(R)])
    assert pat.is_multiplicatively_closed()
    return pat


def radical_pattern(shape):
    """Jacobson radical of the standard order: 1 when block(i) >= block(j)."""
    blk = shape.block_of
    R = shape.R
    return OrderPattern([[1 if blk[i] >= blk[j] else 0 for j in range(R)] for i in range(R)])


def intersect_patterns(p, q):
    return p.intersect(q)


def conjugate_pattern(p, x):
    return p.conjugate(x)


class AffineWeylElem:
    """A representative x = w * d: w permutes the e_0 f-blocks, d is the
    diagonal matrix with pi^{b_j} on the j-th f-block.

    As a matrix, x e_col = pi^{a_col} e_{w(col)} in expanded coordinates.
    """

    __slots__ = ("w", "b", "f")

    def __init__(self, w, b, f=1):
        self.w = tuple(w)
        self.b = tuple(int(x) for x in b)
        self.f = f
        assert sorted(self.w) == list(range(len(self.w)))
        assert len(self.w) == len(self.b)

    @property
    def e0(self):
        return len(self.w)

    @classmethod
    def identity(cls, e0, f=1):
        return cls(tuple(range(e0)), (0,) * e0, f)

    @classmethod
    def diagonal(cls, b, f=1):
        return cls(tuple(range(len(b))), b, f)

    def expanded(self, R):
        """(w, a) in expanded coordinates: a_i = b_{fblock(i)}, w moves f-blocks."""
        f = self.f
        assert R == self.e0 * f
        w = [0] * R
        a = [0] * R
        for blk in range(self.e0):
            for t in range(f):
                w[blk * f + t] = self.w[blk] * f + t
                a[blk * f + t] = self.b[blk]
        return tuple(w), tuple(a)

    def is_diagonal(self):
        return self.w == tuple(range(self.e0))

    def inverse(self):
        winv = [0] * self.e0
        for i, wi in enumerate(self.w):
            winv[wi] = i
        # x = w d  =>  x^-1 = d^-1 w^-1 = w^-1 (w d^-1 w^-1)
        b_inv = tuple(-self.b[winv[i]] for i in range(self.e0))
        # as w^-1 * diag with exponent c: x^-1 e_col = pi^{c_col} e_{w^-1(col)}
        # c_col must satisfy: x^-1 x = 1; verify in tests
        return AffineWeylElem(tuple(winv), tuple(-self.b[w] for w in winv), self.f)

    def right_multiply_block_permutation(self, gamma):
        """x * P_gamma, gamma a permutation of f-blocks; exponents get permuted."""
        new_w = tuple(self.w[gamma[i]] for i in range(self.e0))
        new_b = tuple(self.b[gamma[i]] for i in range(self.e0))
        return AffineWeylElem(new_w, new_b, self.f)

    def spread(self):
        return max(self.b) - min(self.b) if self.b else 0

    def height(self):
        return max(abs(x) for x in self.b) if self.b else 0

    def key(self):
        return (self.w, self.b, self.f)

    def __eq__(self, other):
        return isinstance(other, AffineWeylElem) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "AffineWeylElem(w=%r, b=%r, f=%d)" % (list(self.w), list(self.b), self.f)


def weyl_representatives(e0, f, bound):
    """All (w, b) with w in Sym(e0), |b_i| <= bound and b_{e0} = 0.

    The last exponent is pinned to 0 to quotient out the center; the b-box
    is the height-bound slice around that normalization.
    """
    assert bound >= 0
    out = []
    for w in itertools.permutations(range(e0)):
        ranges = [range(-bound, bound + 1)] * (e0 - 1)
        for head in itertools.product(*ranges):
            out.append(AffineWeylElem(w, tuple(head) + (0,), f))
    return out


def condition_D_normalize(x, shape):
    """Right-multiply by a block permutation in W(B0) cap U(B) so the exponents
    are non-increasing inside every composition part.  Stable on ties."""
    if shape.f != x.f or shape.R != x.e0 * x.f:
        raise ShapeMismatch("shape %r does not fit %r" % (shape, x))
    gamma = list(range(x.e0))
    for part in range(shape.e):
        idxs = list(shape.fblocks_in_part(part))
        idxs_sorted = sorted(idxs, key=lambda i: (-x.b[i], i))
        for pos, src in zip(idxs, idxs_sorted):
            gamma[pos] = src
    return x.right_multiply_block_permutation(tuple(gamma))
