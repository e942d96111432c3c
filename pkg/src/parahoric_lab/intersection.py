"""Finite models of U(B0) cap U(B)^x and the dimension identity engine.

The group H(x) = U(B0) cap x U(B) x^{-1} is cut down by the joint kernel
K = H(x) cap U^1(B0) cap x U^1(B) x^{-1}.  Both are described by valuation
patterns, so the quotient H(x)/K is enumerated coordinate-wise: each matrix
coordinate contributes the pi-adic digits between its H-floor and its
K-cutoff, and invertibility is imposed only on the residue Levi blocks
(the remaining block residues are then invertible automatically, which is
asserted, never assumed).

Both Levi projections are evaluated per element and tallied by class pair,
so sweeping representations over a fixed (shape, x) cell costs one
enumeration regardless of how many characters are paired.
"""

import itertools
from dataclasses import dataclass

from .cyclotomic import Cyc
from .errors import ShapeMismatch, SizeLimit
from .fields import TruncRing, TruncMatrix
from .glq import (LeviCharacter, cuspidal_characters, general_linear, hom_dim)
from .orders import (AffineWeylElem, BlockShape, condition_D_normalize,
                     radical_pattern, standard_order, weyl_representatives)

DEFAULT_CELL_BOUND = 10_000_000


def intermediate_shapes(e0, f):
    """All hereditary shapes between the principal (f,...,f) and the maximal order."""
    out = []
    for comp in _compositions(e0):
        out.append(BlockShape(tuple(m * f for m in comp), f=f))
    return out


def _compositions(n):
    if n == 0:
        return [()]
    out = []

    def rec(rest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(1, rest + 1):
            rec(rest - part, acc + [part])

    rec(n, [])
    return out


class IntersectionModel:
    """Enumerated H(x)/K with its two Levi projections and their joint tally."""

    def __init__(self, shape_b, x, fld, unit_scaling=None, cell_bound=DEFAULT_CELL_BOUND):
        f = shape_b.f
        e0 = shape_b.e0
        if x.f != f or x.e0 != e0:
            raise ShapeMismatch("representative %r does not match shape %r" % (x, shape_b))
        self.shape0 = BlockShape.principal(e0, f)
        self.shape_b = shape_b
        self.x = x
        self.field = fld
        self.q = fld.q
        R = shape_b.R
        self.R = R

        ord0 = standard_order(self.shape0)
        rad0 = radical_pattern(self.shape0)
        ord_b = standard_order(shape_b)
        rad_b = radical_pattern(shape_b)
        cord = ord_b.conjugate(x)
        crad = rad_b.conjugate(x)
        self.pattern = ord0.intersect(cord)
        self.kernel_pattern = rad0.intersect(crad)
        vH, vK = self.pattern.v, self.kernel_pattern.v
        assert all(vK[i][j] >= vH[i][j] for i in range(R) for j in range(R))

        w, a = x.expanded(R)
        self._w, self._a = w, a
        fb = [i // f for i in range(R)]
        for i in range(R):
            for j in range(R):
                if fb[i] == fb[j]:
                    assert vH[i][j] == 0, "principal block floor must be zero"

        self.glf = general_linear(f, fld.p, fld.k)
        self.levi_groups = tuple(general_linear(nb, fld.p, fld.k) for nb in shape_b.parts)
        self.level = max(max(row) for row in vK) + 1

        # digit slots: diag f-block coords carry levels [1, vK), others [vH, vK)
        slots = []
        for i in range(R):
            for j in range(R):
                lo = 1 if fb[i] == fb[j] else vH[i][j]
                for lvl in range(lo, vK[i][j]):
                    slots.append((i, j, lvl))
        self._slots = slots

        # where each Levi-of-B residue entry comes from
        winv = [0] * R
        for i, wi in enumerate(w):
            winv[wi] = i
        scale = unit_scaling
        if scale is not None:
            assert len(scale) == R and all(1 <= c < fld.q for c in scale)
        read = {}
        sources = []  # per n-block: matrix of source descriptors
        for b, nb in enumerate(shape_b.parts):
            start = shape_b.starts[b]
            grid = []
            for ii in range(nb):
                row = []
                for jj in range(nb):
                    I, J = start + ii, start + jj
                    if scale is None:
                        factor = 1
                    else:
                        factor = fld.mul(scale[I], fld.inv(scale[J]))
                    if fb[I] == fb[J]:
                        row.append(("levi", fb[I], I % f, J % f, factor))
                    else:
                        lvl = a[I] - a[J]
                        ri, rj = w[I], w[J]
                        if lvl < vH[ri][rj]:
                            row.append(("zero", factor))
                        else:
                            assert lvl == vH[ri][rj] and lvl < vK[ri][rj]
                            read[(ri, rj, lvl)] = None
                            row.append(("slot", (ri, rj, lvl), factor))
                grid.append(row)
            sources.append(grid)
        self._sources = sources
        self._read_slots = [s for s in slots if s in read]
        self._free_slots = [s for s in slots if s not in read]
        assert len(self._read_slots) == len(read), "projection reads a missing digit slot"

        self.order = (self.glf.order ** e0) * (self.q ** len(slots))
        if self.order > cell_bound:
            raise SizeLimit("quotient order %d exceeds cell bound %d"
                            % (self.order, cell_bound))
        self.multiplier = self.q ** len(self._free_slots)
        self._tally = None

    # -- tally ------------------------------------------------------------

    def tally(self):
        """Counts of (pr0 class tuple, prB class tuple) over H(x)/K."""
        if self._tally is not None:
            return self._tally
        glf = self.glf
        e0 = self.shape0.e0
        q = self.q
        counts = {}
        levi_class = [g.class_of for g in self.levi_groups]
        glf_elements = glf.elements
        glf_class = glf.class_of
        read = self._read_slots
        mult = self.multiplier
        for combo in itertools.product(glf_elements, repeat=e0):
            key0 = tuple(glf_class[el] for el in combo)
            for digits in itertools.product(range(q), repeat=len(read)):
                slot_val = dict(zip(read, digits))
                keyb = self._levi_b_key(combo, slot_val, levi_class)
                pair = (key0, keyb)
                counts[pair] = counts.get(pair, 0) + mult
        assert sum(counts.values()) == self.order
        self._tally = counts
        return counts

    def _levi_b_key(self, combo, slot_val, levi_class):
        f = self.shape0.f
        fld = self.field
        keyb = []
        for b, grid in enumerate(self._sources):
            g = self.levi_groups[b]
            rows = []
            for row in grid:
                out = []
                for src in row:
                    kind = src[0]
                    if kind == "levi":
                        _, blk, ii, jj, factor = src
                        val = self.glf.row_digits[combo[blk][ii]][jj]
                    elif kind == "slot":
                        _, slot, factor = src
                        val = slot_val[slot]
                    else:
                        _, factor = src
                        val = 0
                    if val and factor != 1:
                        val = fld.mul(factor, val)
                    out.append(val)
                rows.append(out)
            el = g.encode_rows(rows)
            cls = levi_class[b].get(el)
            assert cls is not None, "Levi residue unexpectedly singular"
            keyb.append(cls)
        return tuple(keyb)

    # -- explicit elements (desk-scale checks) ------------------------------

    def ring(self):
        return TruncRing(self.field, self.level)

    def enumerate_matrices(self, limit=None):
        """Full coset representatives as TruncMatrix values (small models only)."""
        ring = self.ring()
        e0, f, q, R = self.shape0.e0, self.shape0.f, self.q, self.R
        count = 0
        for combo in itertools.product(self.glf.elements, repeat=e0):
            for digits in itertools.product(range(q), repeat=len(self._slots)):
                slot_val = dict(zip(self._slots, digits))
                rows = []
                for i in range(R):
                    row = []
                    for j in range(R):
                        ds = [0] * self.level
                        if i // f == j // f:
                            ds[0] = self.glf.row_digits[combo[i // f][i % f]][j % f]
                        for lvl in range(self.level):
                            v = slot_val.get((i, j, lvl))
                            if v:
                                ds[lvl] = v
                        row.append(ring.from_digits(ds))
                    rows.append(row)
                yield TruncMatrix(ring, rows)
                count += 1
                if limit is not None and count >= limit:
                    return

    def project_levi0(self, mat):
        """pr0: tuple of GL_f class indices from the diagonal f-block residues."""
        f = self.shape0.f
        ring = mat.ring
        out = []
        for blk in range(self.shape0.e0):
            rows = [[ring.digit(mat.rows[blk * f + ii][blk * f + jj], 0) for jj in range(f)]
                    for ii in range(f)]
            out.append(self.glf.class_of[self.glf.encode_rows(rows)])
        return tuple(out)

    def project_levi_b(self, mat):
        """prB: tuple of GL_{n_b} class indices read through x-conjugation."""
        ring = mat.ring
        w, a = self._w, self._a
        out = []
        for b, nb in enumerate(self.shape_b.parts):
            start = self.shape_b.starts[b]
            g = self.levi_groups[b]
            rows = []
            for ii in range(nb):
                row = []
                for jj in range(nb):
                    I, J = start + ii, start + jj
                    row.append(ring.digit(mat.rows[w[I]][w[J]], a[I] - a[J]))
                rows.append(row)
            out.append(g.class_of[g.encode_rows(rows)])
        return tuple(out)

    def conjugated_in_pattern(self, mat):
        """Check x^{-1} (mat) x lies in the standard order of shape_b."""
        ring = mat.ring
        w, a = self._w, self._a
        ord_b = standard_order(self.shape_b).v
        for i in range(self.R):
            for j in range(self.R):
                floor = ord_b[i][j] + a[i] - a[j]
                for lvl in range(max(0, 0), min(floor, self.level)):
                    if ring.digit(mat.rows[w[i]][w[j]], lvl):
                        return False
        return True


def build_intersection(shape_b, x, fld, unit_scaling=None, cell_bound=DEFAULT_CELL_BOUND):
    return IntersectionModel(shape_b, x, fld, unit_scaling=unit_scaling, cell_bound=cell_bound)


# -- hom dimensions -------------------------------------------------------


def levi_character(shape_b, fld, tau_indices):
    """Irreducible of prod GL_{n_b}(F_q) from per-factor table indices."""
    groups = [general_linear(nb, fld.p, fld.k) for nb in shape_b.parts]
    chars = [g.character_table()[i] for g, i in zip(groups, tau_indices)]
    return LeviCharacter(groups, chars)


def principal_character(e0, f, fld, rho_index):
    glf = general_linear(f, fld.p, fld.k)
    rho0 = cuspidal_characters(glf)[rho_index]
    return LeviCharacter([glf] * e0, [rho0] * e0)


def hom_dim_over_model(model, rho, tau):
    """dim Hom over H(x)/K of (rho composed with pr0, tau composed with prB)."""
    tally = model.tally()
    rho_cache = {}
    tau_cache = {}

    def val0(key):
        v = rho_cache.get(key)
        if v is None:
            v = rho.value(key)
            rho_cache[key] = v
        return v

    def valb(key):
        v = tau_cache.get(key)
        if v is None:
            v = tau.value(key)
            tau_cache[key] = v
        return v

    return hom_dim(((k0, kb, c) for (k0, kb), c in tally.items()),
                   model.order, val0, valb)


def collapse_tally(model, rho):
    """Partial pairing: prB class tuple -> sum of count * rho(pr0) as Cyc."""
    out = {}
    cache = {}
    for (k0, kb), cnt in model.tally().items():
        v = cache.get(k0)
        if v is None:
            v = rho.value(k0)
            cache[k0] = v
        cur = out.get(kb)
        out[kb] = (v * cnt) if cur is None else cur + v * cnt
    return out


def hom_dim_from_collapsed(collapsed, order, tau):
    total = Cyc.integer(0)
    for kb, v in collapsed.items():
        total = total + v * tau.value(kb).conjugate()
    from .cyclotomic import exact_nonneg_ratio
    return exact_nonneg_ratio(total, order)


# -- lemma cells ----------------------------------------------------------


@dataclass
class LemmaReport:
    params: dict
    left: int = None
    right: int = None
    equal: bool = None
    status: str = "ok"
    reason: str = None
    wall_ms: int = None

    def to_json(self):
        return {"params": self.params, "left": self.left, "right": self.right,
                "equal": self.equal, "status": self.status, "reason": self.reason,
                "wall_ms": self.wall_ms}


def lemma_check(fld, f, e0, shape_b, rho_index, tau_indices, x,
                cell_bound=DEFAULT_CELL_BOUND):
    """One cell: left = dim Hom_{U(B0) cap U(B)^x}(rho, tau^x), right at x = 1."""
    rho = principal_character(e0, f, fld, rho_index)
    tau = levi_character(shape_b, fld, tau_indices)
    model_x = build_intersection(shape_b, x, fld, cell_bound=cell_bound)
    model_1 = build_intersection(shape_b, AffineWeylElem.identity(e0, f), fld,
                                 cell_bound=cell_bound)
    left = hom_dim_over_model(model_x, rho, tau)
    right = hom_dim_over_model(model_1, rho, tau)
    params = cell_params(fld, f, e0, shape_b, rho_index, tau_indices, x)
    return LemmaReport(params=params, left=left, right=right, equal=(left == right))


def cell_params(fld, f, e0, shape_b, rho_index, tau_indices, x):
    return {"q": fld.q, "f": f, "e0": e0, "shape": list(shape_b.parts),
            "rho": rho_index, "tau": list(tau_indices),
            "w": list(x.w), "b": list(x.b)}


def normalized_representatives(e0, f, shape_b, bound):
    """Deterministic, duplicate-free condition-(D) normalized representatives."""
    seen = {}
    for x in weyl_representatives(e0, f, bound):
        nx = condition_D_normalize(x, shape_b)
        if nx.key() not in seen:
            seen[nx.key()] = nx
    return [seen[k] for k in sorted(seen)]


def sweep_tasks(fld, f, e0, bound, shape_filter=None, tau_filter="all"):
    """Cell descriptors grouped by (shape, x); the unit of parallel work.

    Returns a list of task dicts; cells inside a task share one enumeration.
    """
    tasks = []
    for shape in intermediate_shapes(e0, f):
        if shape_filter is not None and tuple(shape.parts) not in shape_filter:
            continue
        try:
            glf = general_linear(f, fld.p, fld.k)
            rho_indices = list(range(len(cuspidal_characters(glf))))
            levi_groups = [general_linear(nb, fld.p, fld.k) for nb in shape.parts]
        except SizeLimit as exc:
            tasks.append({"shape": shape.parts, "x": None, "skip": str(exc), "cells": []})
            continue
        tau_lists = list(itertools.product(*[range(g.num_classes) for g in levi_groups]))
        if tau_filter == "support-only":
            from .glq import cuspidal_support_matches
            keep = []
            for ti in tau_lists:
                tau = levi_character(shape, fld, ti)
                if any(cuspidal_support_matches(tau, ri, f) for ri in rho_indices):
                    keep.append(ti)
            tau_lists = keep
        for x in normalized_representatives(e0, f, shape, bound):
            tasks.append({"shape": shape.parts, "x": x.key(), "skip": None,
                          "cells": [(ri, ti) for ri in rho_indices for ti in tau_lists]})
    return tasks


def run_sweep_task(fld, f, e0, task, cell_bound=DEFAULT_CELL_BOUND,
                   right_cache=None, unit_scaling=None):
    """All reports for one (shape, x) enumeration."""
    shape = BlockShape(task["shape"], f=f)
    reports = []
    if task["skip"] is not None:
        rep = LemmaReport(params={"q": fld.q, "f": f, "e0": e0,
                                  "shape": list(shape.parts)},
                          status="skipped", reason=task["skip"])
        return [rep]
    w, b, _ = task["x"]
    x = AffineWeylElem(w, b, f)
    try:
        model_x = build_intersection(shape, x, fld, cell_bound=cell_bound,
                                     unit_scaling=unit_scaling)
        ident = AffineWeylElem.identity(e0, f)
        model_1 = build_intersection(shape, ident, fld, cell_bound=cell_bound)
    except SizeLimit as exc:
        rep = LemmaReport(params={"q": fld.q, "f": f, "e0": e0,
                                  "shape": list(shape.parts), "w": list(w), "b": list(b)},
                          status="skipped", reason=str(exc))
        return [rep]
    rho_collapsed_x = {}
    rho_collapsed_1 = {}
    for rho_index, tau_indices in task["cells"]:
        rho = principal_character(e0, f, fld, rho_index)
        if rho_index not in rho_collapsed_x:
            rho_collapsed_x[rho_index] = collapse_tally(model_x, rho)
            rho_collapsed_1[rho_index] = collapse_tally(model_1, rho)
        tau = levi_character(shape, fld, tau_indices)
        left = hom_dim_from_collapsed(rho_collapsed_x[rho_index], model_x.order, tau)
        key = (rho_index, tau_indices)
        if right_cache is not None and (shape.parts, key) in right_cache:
            right = right_cache[(shape.parts, key)]
        else:
            right = hom_dim_from_collapsed(rho_collapsed_1[rho_index], model_1.order, tau)
            if right_cache is not None:
                right_cache[(shape.parts, key)] = right
        params = cell_params(fld, f, e0, shape, rho_index, tau_indices, x)
        reports.append(LemmaReport(params=params, left=left, right=right,
                                   equal=(left == right)))
    return reports


def lemma_sweep(fld, f, e0, bound, shape_filter=None, tau_filter="all",
                cell_bound=DEFAULT_CELL_BOUND):
    """Sequential sweep over every (shape, rho, tau, x) cell in the grid."""
    tasks = sweep_tasks(fld, f, e0, bound, shape_filter=shape_filter,
                        tau_filter=tau_filter)
    reports = []
    right_cache = {}
    for task in tasks:
        reports.extend(run_sweep_task(fld, f, e0, task, cell_bound=cell_bound,
                                      right_cache=right_cache))
    return reports


def summarize(reports):
    cells = sum(1 for r in reports if r.status == "ok")
    skipped = sum(1 for r in reports if r.status == "skipped")
    failures = [r for r in reports if r.status == "ok" and not r.equal]
    return {"cells": cells, "skipped": skipped, "passes": cells - len(failures),
            "failures": len(failures)}


# -- proof-identity checks --------------------------------------------------


def proof_identity_checks(fld, f, e0, shape_b, x):
    """The three internal claims used by the dimension identity's proof.

    (a) pattern containment of the conjugated one-unit intersection;
    (b) the two one-unit quotients have equal cardinality with the canonical
        digit-slot bijection (checked by enumeration at desk scale);
    (c) the principal-datum character is invariant under every block permutation.
    Requires x normalized to condition (D); (a) and (b) are stated for the
    diagonal part, which is what the normalization produces block-wise.
    """
    shape0 = BlockShape.principal(e0, f)
    ord_b = standard_order(shape_b)
    rad_b = radical_pattern(shape_b)
    rad0 = radical_pattern(shape0)
    crad0 = rad0.conjugate(x)
    inter = crad0.intersect(ord_b)

    containment = rad0.contains(inter)

    kernel = crad0.intersect(rad_b)
    R = shape_b.R
    left_slots = []
    for i in range(R):
        for j in range(R):
            for lvl in range(inter.v[i][j], kernel.v[i][j]):
                left_slots.append((i, j, lvl))
    fb = [i // f for i in range(R)]
    blk = shape_b.block_of
    right_slots = [(i, j, 0) for i in range(R) for j in range(R)
                   if fb[i] < fb[j] and blk[i] == blk[j]]
    w, a = x.expanded(R)
    expected_left = sorted((w[i], w[j], a[i] - a[j]) for (i, j, _) in right_slots)
    quotient_sizes_equal = (len(left_slots) == len(right_slots))
    bijective = (sorted(left_slots) == expected_left)
    # enumeration of both digit boxes: cardinalities must agree value for value
    q = fld.q
    left_box = list(itertools.product(range(q), repeat=len(left_slots)))
    right_box = list(itertools.product(range(q), repeat=len(right_slots)))
    enumerated_equal = len(left_box) == len(right_box)

    glf = general_linear(f, fld.p, fld.k)
    invariant = True
    for rho_index in range(len(cuspidal_characters(glf))):
        rho = principal_character(e0, f, fld, rho_index)
        for perm in itertools.permutations(range(e0)):
            for key in itertools.product(range(glf.num_classes), repeat=e0):
                permuted = tuple(key[perm[i]] for i in range(e0))
                if not (rho.value(key) == rho.value(permuted)):
                    invariant = False
    return {
        "containment": containment,
        "quotient_identity": quotient_sizes_equal and bijective and enumerated_equal,
        "weyl_invariance": invariant,
    }
