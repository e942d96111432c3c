"""Finite general linear groups GL_n(F_q) by full enumeration, their exact
character tables, cuspidality tests and Hom-dimension pairings.

Tables are computed by the class-algebra eigenvector method: the class
multiplication coefficients are integers, their simultaneous eigenvectors
are found over a prime field F_l with l = 1 (mod exponent), and the
eigenvalue data is lifted exactly to Z[zeta_m] through discrete logarithms
against a fixed primitive root.  Everything downstream is exact.

Groups are stored by full element enumeration with hashed lookup; the
default size bound (25,000, override with PARAHORIC_LAB_MAX_GROUP) keeps
this desk-scale.
"""

import os
import warnings
from functools import lru_cache
from math import gcd, isqrt, lcm

from .cyclotomic import Cyc, exact_nonneg_ratio
from .errors import SizeLimit
from .fields import make_field
from . import fields as _fields

DEFAULT_GROUP_BOUND = 25_000


def group_bound():
    v = os.environ.get("PARAHORIC_LAB_MAX_GROUP")
    return int(v) if v else DEFAULT_GROUP_BOUND


def gl_order(n, q):
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def compositions(n, min_parts=1):
    """All ordered compositions of n, lexicographic."""
    if n == 0:
        return [()] if min_parts <= 0 else []
    out = []

    def rec(rest, acc):
        if rest == 0:
            if len(acc) >= min_parts:
                out.append(tuple(acc))
            return
        for part in range(1, rest + 1):
            rec(rest - part, acc + [part])

    rec(n, [])
    return out


class MatGroup:
    """GL_n(F_q), fully enumerated.

    Elements are tuples of n row codes; a row code is an integer in [0, q^n)
    whose base-q digits are the row entries.  Multiplication uses precomputed
    row addition/scaling tables, so products cost O(n^2) lookups.
    """

    def __init__(self, n, field, bound=None):
        bound = group_bound() if bound is None else bound
        self.n = n
        self.field = field
        self.q = field.q
        self.order = gl_order(n, field.q)
        if self.order > bound:
            raise SizeLimit("|GL_%d(F_%d)| = %d exceeds bound %d"
                            % (n, field.q, self.order, bound))
        self._build_row_tables()
        self._enumerate()
        assert len(self.elements) == self.order
        self._inv_cache = {}
        self._gens = self._generators()
        self._check_generation()
        self._conjugacy_classes()
        self._table = None
        self._cuspidal = None
        self._parabolic_cache = {}

    # -- row level -----------------------------------------------------

    def _build_row_tables(self):
        f = self.field
        q, n = self.q, self.n
        size = q ** n
        digits = []
        for r in range(size):
            v, ds = r, []
            for _ in range(n):
                ds.append(v % q)
                v //= q
            digits.append(tuple(ds))
        self.row_digits = tuple(digits)
        add = [[0] * size for _ in range(size)]
        for a in range(size):
            da = digits[a]
            for b in range(a, size):
                db = digits[b]
                enc = 0
                for i in range(n - 1, -1, -1):
                    enc = enc * q + f.add(da[i], db[i])
                add[a][b] = enc
                add[b][a] = enc
        self.row_add = [tuple(r) for r in add]
        scal = []
        for c in range(q):
            row = []
            for r in range(size):
                enc = 0
                ds = digits[r]
                for i in range(n - 1, -1, -1):
                    enc = enc * q + f.mul(c, ds[i])
                row.append(enc)
            scal.append(tuple(row))
        self.row_scal = scal

    def encode_rows(self, rows):
        q = self.q
        out = []
        for row in rows:
            enc = 0
            for x in reversed(row):
                enc = enc * q + x
            out.append(enc)
        return tuple(out)

    def decode(self, el):
        return tuple(self.row_digits[r] for r in el)

    def mul(self, a, b):
        add, scal, dig = self.row_add, self.row_scal, self.row_digits
        out = []
        for arow in a:
            acc = 0
            da = dig[arow]
            for k, c in enumerate(da):
                if c:
                    acc = add[acc][scal[c][b[k]]]
            out.append(acc)
        return tuple(out)

    def inv(self, a):
        cached = self._inv_cache.get(a)
        if cached is None:
            rows = _fields._fq_invert(self.field, self.decode(a))
            cached = self.encode_rows(rows)
            self._inv_cache[a] = cached
        return cached

    @property
    def identity(self):
        return self.encode_rows([[1 if i == j else 0 for j in range(self.n)]
                                 for i in range(self.n)])

    # -- enumeration and classes ---------------------------------------

    def _enumerate(self):
        n, q = self.n, self.q
        f = self.field
        size = q ** n
        elements = []
        rows = []

        def span(chosen):
            out = {0}
            for r in chosen:
                new = set()
                for s in out:
                    for c in range(1, q):
                        new.add(self.row_add[s][self.row_scal[c][r]])
                out |= new
            return out

        def rec(depth, spanned):
            if depth == n:
                elements.append(tuple(rows))
                return
            for r in range(1, size):
                if r in spanned:
                    continue
                rows.append(r)
                new_span = set(spanned)
                for s in spanned:
                    for c in range(1, q):
                        new_span.add(self.row_add[s][self.row_scal[c][r]])
                rec(depth + 1, new_span)
                rows.pop()

        rec(0, {0})
        self.elements = elements
        self.index = {el: i for i, el in enumerate(elements)}
        assert f.q == q

    def _generators(self):
        n, q = self.n, self.q
        gens = []
        if q > 2:
            gamma = self._multiplicative_generator()
            diag = [[gamma if i == j == 0 else (1 if i == j else 0) for j in range(n)]
                    for i in range(n)]
            gens.append(self.encode_rows(diag))
        if n >= 2:
            cyc = [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)]
            gens.append(self.encode_rows(cyc))
            trans = [[1 if i == j else (1 if (i, j) == (0, 1) else 0) for j in range(n)]
                     for i in range(n)]
            gens.append(self.encode_rows(trans))
        return gens

    def _multiplicative_generator(self):
        f = self.field
        for g in range(1, self.q):
            x, seen = g, set()
            while x not in seen:
                seen.add(x)
                x = f.mul(x, g)
            if len(seen) == self.q - 1:
                return g
        raise RuntimeError("no multiplicative generator (internal error)")

    def _check_generation(self):
        if not self._gens:
            assert self.order == 1
            return
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self._gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        assert len(seen) == self.order, "generators do not generate the group"

    def _conjugacy_classes(self):
        gens = self._gens
        inv_gens = [self.inv(g) for g in gens]
        class_of = {}
        classes = []
        for el in self.elements:
            if el in class_of:
                continue
            idx = len(classes)
            orbit = [el]
            class_of[el] = idx
            frontier = [el]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in zip(gens, inv_gens):
                        y = self.mul(self.mul(g, x), gi)
                        if y not in class_of:
                            class_of[y] = idx
                            orbit.append(y)
                            nxt.append(y)
                frontier = nxt
            classes.append(orbit)
        self.classes = classes
        self.class_of = class_of
        self.class_reps = [c[0] for c in classes]
        self.class_sizes = [len(c) for c in classes]
        assert sum(self.class_sizes) == self.order
        self.num_classes = len(classes)
        ident = self.identity
        assert self.class_reps[0] == ident
        orders = []
        power_classes = []
        for rep in self.class_reps:
            pcs = []
            x = ident
            while True:
                pcs.append(self.class_of[x])
                x = self.mul(x, rep)
                if x == ident:
                    break
            orders.append(len(pcs))
            power_classes.append(pcs)
        # power_classes[j][s] = class of rep_j^s for 0 <= s < order(rep_j)
        self.class_element_orders = orders
        self.power_classes = power_classes
        self.exponent = lcm(*orders) if orders else 1
        self.inverse_class = [self.class_of[self.inv(rep)] for rep in self.class_reps]
        self.center = [el for el in self.elements
                       if all(self.mul(el, g) == self.mul(g, el) for g in self._gens)]

    def class_index(self, el):
        return self.class_of[el]

    def __repr__(self):
        return "MatGroup(GL_%d(F_%d), order=%d, classes=%d)" % (
            self.n, self.q, self.order, self.num_classes)

    # -- character tables ----------------------------------------------

    def character_table(self):
        if self._table is None:
            self._table = _dixon_table(self)
        return self._table

    def cuspidal_indices(self):
        if self._cuspidal is None:
            tab = self.character_table()
            self._cuspidal = tuple(i for i, chi in enumerate(tab) if is_cuspidal(chi))
        return self._cuspidal

    # -- parabolic machinery --------------------------------------------

    def parabolic(self, parts):
        """Standard block-upper parabolic subgroup for a composition of n."""
        parts = tuple(parts)
        if parts in self._parabolic_cache:
            return self._parabolic_cache[parts]
        assert sum(parts) == self.n
        starts = []
        s = 0
        for p in parts:
            starts.append(s)
            s += p
        blk = []
        for i in range(self.n):
            b = 0
            while not (starts[b] <= i < starts[b] + parts[b]):
                b += 1
            blk.append(b)
        members = [el for el in self.elements if self._in_parabolic(el, blk)]
        self._parabolic_cache[parts] = (tuple(members), tuple(blk), tuple(starts))
        return self._parabolic_cache[parts]

    def _in_parabolic(self, el, blk):
        dig = self.row_digits
        for i in range(self.n):
            row = dig[el[i]]
            for j in range(self.n):
                if blk[i] > blk[j] and row[j]:
                    return False
        return True

    def unipotent_radical(self, parts):
        """All elements of the unipotent radical of the standard parabolic."""
        parts = tuple(parts)
        starts = []
        s = 0
        for p in parts:
            starts.append(s)
            s += p
        blk = []
        for i in range(self.n):
            b = 0
            while not (starts[b] <= i < starts[b] + parts[b]):
                b += 1
            blk.append(b)
        free = [(i, j) for i in range(self.n) for j in range(self.n) if blk[i] < blk[j]]
        out = []

        def rec(pos, rows):
            if pos == len(free):
                out.append(self.encode_rows([list(r) for r in rows]))
                return
            i, j = free[pos]
            for c in range(self.q):
                rows[i][j] = c
                rec(pos + 1, rows)
            rows[i][j] = 0

        rows = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        rec(0, rows)
        return out

    def block_submatrix(self, el, start, size, subgroup):
        """The (start..start+size) diagonal block, encoded in `subgroup`'s rows."""
        dig = self.row_digits
        rows = [[dig[el[start + i]][start + j] for j in range(size)] for i in range(size)]
        return subgroup.encode_rows(rows)


@lru_cache(maxsize=None)
def general_linear(n, p, k, bound=None):
    return MatGroup(n, make_field(p, k), bound=bound)


def conjugacy_classes(n, field, bound=None):
    """Public constructor mirroring the operation name."""
    return general_linear(n, field.p, field.k, bound=bound)


class ClassFunction:
    """Exact class function: one Cyc value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        self.group = group
        self.values = tuple(values)
        assert len(self.values) == group.num_classes

    def degree(self):
        return self.values[0].as_rational_integer()

    def value_on(self, el):
        return self.values[self.group.class_of[el]]

    def inner(self, other):
        """<self, other> as an exact rational integer (raises otherwise)."""
        assert self.group is other.group
        total = Cyc.integer(0)
        for size, a, b in zip(self.group.class_sizes, self.values, other.values):
            total = total + (a * b.conjugate()) * size
        n = total.as_rational_integer()
        if n % self.group.order:
            raise ValueError("inner product %d/%d not integral" % (n, self.group.order))
        return n // self.group.order

    def __eq__(self, other):
        return self.group is other.group and all(a == b for a, b in zip(self.values, other.values))

    def __repr__(self):
        return "ClassFunction(%r, deg=%s)" % (self.group, self.values[0])


# -- Dixon-Schneider ----------------------------------------------------

def _dixon_prime(order, exponent):
    l = max(2 * isqrt(order), exponent, 2)
    l -= l % exponent
    l += 1
    while True:
        if l * l > 4 * order and _is_prime_small(l) and l % exponent == 1 % exponent:
            return l
        l += exponent


def _is_prime_small(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _primitive_root(l):
    fact = []
    n = l - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            fact.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fact.append(n)
    for r in range(2, l):
        if all(pow(r, (l - 1) // p, l) != 1 for p in fact):
            return r
    raise RuntimeError("no primitive root (internal error)")


def _rref(rows, l):
    """Row-reduce over F_l; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] % l:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], l - 2, l)
        rows[r] = [(x * inv) % l for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % l:
                f = rows[i][c]
                rows[i] = [(x - f * y) % l for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(r_) for r_ in rows[:r]], pivots


def _charpoly_mod(mat, l):
    """Faddeev-LeVerrier characteristic polynomial coefficients mod l (monic, low to high)."""
    s = len(mat)
    if s == 0:
        return [1]
    M = [[x % l for x in row] for row in mat]
    coeffs = [0] * (s + 1)
    coeffs[s] = 1
    A = [[M[i][j] for j in range(s)] for i in range(s)]
    inv_int = [0] * (s + 1)
    for k in range(1, s + 1):
        inv_int[k] = pow(k, l - 2, l)
    for k in range(1, s + 1):
        tr = sum(A[i][i] for i in range(s)) % l
        c = (-tr * inv_int[k]) % l
        coeffs[s - k] = c
        if k == s:
            break
        for i in range(s):
            A[i][i] = (A[i][i] + c) % l
        A = [[sum(M[i][t] * A[t][j] for t in range(s)) % l for j in range(s)] for i in range(s)]
    return coeffs


def _nullspace(mat, l):
    """Nullspace basis (list of tuples) of a square matrix over F_l."""
    s = len(mat)
    rows, pivots = _rref(mat, l)
    free = [c for c in range(s) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * s
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][fc]) % l
        basis.append(tuple(v))
    return basis


def _dixon_table(group):
    r = group.num_classes
    order = group.order
    m = group.exponent
    l = _dixon_prime(order, m)
    z = pow(_primitive_root(l), (l - 1) // m, l)

    # class multiplication coefficients a[i][j][k]: #(x in C_i) with x^-1 z_k in C_j
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    reps = group.class_reps
    for i in range(r):
        for x in group.classes[i]:
            xi = group.inv(x)
            for k in range(r):
                j = group.class_of[group.mul(xi, reps[k])]
                a[i][j][k] += 1

    # simultaneous right eigenvectors of N_i[j][k] = a[i][j][k]
    spaces = [[tuple(1 if t == s else 0 for t in range(r)) for s in range(r)]]
    spaces = [_rref(spaces[0], l)[0]]
    mat_order = sorted(range(1, r), key=lambda i: -group.class_sizes[i])
    for mi in mat_order:
        if all(len(S) == 1 for S in spaces):
            break
        Ni = a[mi]
        new_spaces = []
        for S in spaces:
            if len(S) == 1:
                new_spaces.append(S)
                continue
            basis, pivots = _rref(S, l)
            dim = len(basis)
            images = []
            for b in basis:
                w = tuple(sum(Ni[j][k] * b[k] for k in range(r)) % l for j in range(r))
                images.append(w)
            T = []
            for w in images:
                coords = [w[pc] for pc in pivots]
                # invariance check: residual must vanish
                resid = list(w)
                for cval, brow in zip(coords, basis):
                    resid = [(x - cval * y) % l for x, y in zip(resid, brow)]
                assert all(v == 0 for v in resid), "class algebra space not invariant"
                T.append(coords)
            Tm = [[T[t][sidx] for t in range(dim)] for sidx in range(dim)]
            cp = _charpoly_mod(Tm, l)
            roots = [lam for lam in range(l)
                     if sum(c * pow(lam, e, l) for e, c in enumerate(cp)) % l == 0]
            split_total = 0
            for lam in sorted(roots):
                shifted = [[(Tm[s][t] - (lam if s == t else 0)) % l for t in range(dim)]
                           for s in range(dim)]
                null = _nullspace(shifted, l)
                if not null:
                    continue
                piece = []
                for v in null:
                    amb = [0] * r
                    for cval, brow in zip(v, basis):
                        for idx in range(r):
                            amb[idx] = (amb[idx] + cval * brow[idx]) % l
                    piece.append(tuple(amb))
                split_total += len(piece)
                new_spaces.append(_rref(piece, l)[0])
            assert split_total == dim, "eigenspaces do not fill the space"
        spaces = new_spaces
    assert all(len(S) == 1 for S in spaces), "eigenspace refinement incomplete"

    inv_cls = group.inverse_class
    sizes = group.class_sizes
    size_inv = [pow(s % l, l - 2, l) for s in sizes]
    characters = []
    for S in spaces:
        u = list(S[0])
        assert u[0] % l, "eigenvector vanishes on the identity class"
        norm = pow(u[0], l - 2, l)
        u = [(x * norm) % l for x in u]
        s_val = sum(u[j] * u[inv_cls[j]] * size_inv[j] for j in range(r)) % l
        chi1sq = (order % l) * pow(s_val, l - 2, l) % l
        deg = None
        for d in range(1, isqrt(order) + 1):
            if (d * d) % l == chi1sq:
                deg = d
                break
        assert deg is not None, "no integer degree matches"
        chi_mod = [(deg * u[j] * size_inv[j]) % l for j in range(r)]
        values = []
        for j in range(r):
            o = group.class_element_orders[j]
            pcs = group.power_classes[j]
            zo = pow(z, m // o, l)
            inv_o = pow(o, l - 2, l)
            coeffs = {}
            for t in range(o):
                acc = 0
                for s in range(o):
                    acc = (acc + chi_mod[pcs[s]] * pow(zo, (-t * s) % o, l)) % l
                nt = (acc * inv_o) % l
                assert nt <= deg, "eigenvalue multiplicity out of range"
                if nt:
                    coeffs[(t * (m // o)) % m] = nt
            assert sum(coeffs.values()) == deg, "multiplicities do not sum to the degree"
            values.append(Cyc(m, coeffs))
        characters.append(ClassFunction(group, values))

    assert len(characters) == r, "wrong number of irreducibles"
    assert sum(ch.degree() ** 2 for ch in characters) == order
    characters.sort(key=lambda ch: (ch.degree(), tuple(v.reduced() for v in ch.values)))
    _verify_orthogonality(group, characters)
    return tuple(characters)


def _verify_orthogonality(group, characters):
    r = group.num_classes
    for i, chi in enumerate(characters):
        for j in range(i, r):
            expect = 1 if i == j else 0
            assert chi.inner(characters[j]) == expect, "row orthogonality fails"
    sizes = group.class_sizes
    for i in range(r):
        for j in range(r):
            total = Cyc.integer(0)
            for chi in characters:
                total = total + chi.values[i] * chi.values[j].conjugate()
            val = total.as_rational_integer()
            expect = group.order // sizes[i] if i == j else 0
            assert val == expect, "column orthogonality fails"


def character_table(group):
    return group.character_table()


# -- cuspidality ---------------------------------------------------------

def is_cuspidal(chi, group=None):
    """True iff chi has no fixed vectors under any standard proper unipotent radical."""
    group = chi.group if group is None else group
    if not _looks_irreducible(chi):
        warnings.warn("is_cuspidal called on a non-irreducible class function")
    n = group.n
    for parts in compositions(n, min_parts=2):
        total = Cyc.integer(0)
        for u in group.unipotent_radical(parts):
            total = total + chi.values[group.class_of[u]]
        size = group.q ** _radical_dim(parts)
        avg = total.as_rational_integer()
        assert avg % size == 0, "fixed-vector average is not integral"
        if avg // size != 0:
            return False
    return True


def _radical_dim(parts):
    dim = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            dim += parts[i] * parts[j]
    return dim


def _looks_irreducible(chi):
    try:
        return chi.inner(chi) == 1
    except ValueError:
        return False


def cuspidal_characters(group):
    tab = group.character_table()
    return [tab[i] for i in group.cuspidal_indices()]


# -- product (Levi) groups ------------------------------------------------

class LeviCharacter:
    """Character of a product of GL factors; value on a class tuple is the product."""

    def __init__(self, factor_groups, factor_chars):
        self.factor_groups = tuple(factor_groups)
        self.factor_chars = tuple(factor_chars)
        assert len(self.factor_groups) == len(self.factor_chars)
        for g, ch in zip(self.factor_groups, self.factor_chars):
            assert ch.group is g

    def value(self, class_tuple):
        out = Cyc.integer(1)
        for ch, c in zip(self.factor_chars, class_tuple):
            out = out * ch.values[c]
        return out

    def degree(self):
        out = 1
        for ch in self.factor_chars:
            out *= ch.degree()
        return out

    def class_tuples(self):
        import itertools
        ranges = [range(g.num_classes) for g in self.factor_groups]
        return itertools.product(*ranges)

    def __repr__(self):
        return "LeviCharacter(%s)" % (", ".join("GL_%d(F_%d)" % (g.n, g.q)
                                                for g in self.factor_groups))


def hom_dim(pair_counts, order, chi_value, psi_value):
    """dim Hom over an enumerated group H given a tally of projection class pairs.

    pair_counts: iterable of (key0, key1, count); chi_value/psi_value: callables
    returning Cyc values.  The result (1/|H|) sum chi(pr0 h) conj(psi(pr1 h)) is
    asserted to be a non-negative rational integer, never rounded.
    """
    total = Cyc.integer(0)
    for k0, k1, cnt in pair_counts:
        total = total + (chi_value(k0) * psi_value(k1).conjugate()) * cnt
    return exact_nonneg_ratio(total, order)


# -- induced characters and cuspidal support -----------------------------

def induced_character_values(group, members, value_of_member):
    """Character of Ind_H^G (chi) by the coset-sum formula with exact coset enumeration.

    members: frozenset of H's elements; value_of_member: element -> Cyc.
    Returns one Cyc per conjugacy class of `group`.
    """
    member_set = members if isinstance(members, (set, frozenset)) else frozenset(members)
    reps = []
    covered = set()
    for el in group.elements:
        if el in covered:
            continue
        reps.append(el)
        for h in member_set:
            covered.add(group.mul(el, h))
    assert len(reps) * len(member_set) == group.order
    values = []
    for g in group.class_reps:
        total = Cyc.integer(0)
        for y in reps:
            conj = group.mul(group.mul(group.inv(y), g), y)
            if conj in member_set:
                total = total + value_of_member(conj)
        values.append(total)
    return values


@lru_cache(maxsize=None)
def parabolically_induced_character(n, p, k, f, rho_index):
    """Character of GL_n(F_q) induced from the (f,...,f) parabolic inflating
    the rho_index-th cuspidal of GL_f tensored across the blocks."""
    group = general_linear(n, p, k)
    sub = general_linear(f, p, k)
    rho = cuspidal_characters(sub)[rho_index]
    assert n % f == 0
    parts = tuple([f] * (n // f))
    members, _, starts = group.parabolic(parts)

    def chi_p(el):
        out = Cyc.integer(1)
        for s in starts:
            blk_el = group.block_submatrix(el, s, f, sub)
            out = out * rho.values[sub.class_of[blk_el]]
        return out

    values = induced_character_values(group, frozenset(members), chi_p)
    return ClassFunction(group, values)


def cuspidal_support_matches(tau, rho0_index, f):
    """True iff every factor of the Levi character tau occurs in the parabolic
    induction of the block-diagonal cuspidal datum (rho0 across all f-blocks)."""
    for g, chi in zip(tau.factor_groups, tau.factor_chars):
        if g.n % f != 0:
            from .errors import ShapeMismatch
            raise ShapeMismatch("factor size %d not a multiple of f=%d" % (g.n, f))
        ind = parabolically_induced_character(g.n, g.field.p, g.field.k, f, rho0_index)
        if ind.inner(chi) <= 0:
            return False
    return True
