"""Comodule algebras over a quasitriangular Hopf algebra: K-matrices and the
braidings they induce, the end space E(H,B), the factorizability map and
copairing, weak factorizability, costable ideals and H-simplicity, and
symmetric-center membership."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import StructAlgebra, check_algebra, _dicts_equal
from .errors import HopffactError, ImageEscapesEndSpace, SpaceMismatch
from .fields import Field, PrimeField
from .hopf import (
    HModule,
    HopfAlgebra,
    check_module,
    check_representation,
    kron_matrix,
    trivial_module,
)
from .linalg import (
    BasedSpace,
    GFBatchSpan,
    IncrementalSpan,
    MapMatrix,
    echelonize,
    kernel_basis,
)
from .rmatrix import RMatrix
from .tensors import TensorElement, coapply_leg, leg_embed, tensor_invert, tensor_mult
from .verdicts import Verdict

BModule = HModule  # same data: one endomorphism per algebra basis element


class ComoduleAlgebra:
    """An algebra B with a coaction δ: B → H⊗B, stored sparsely."""

    __slots__ = ("host", "algebra", "coaction", "_ops")

    def __init__(self, host: HopfAlgebra, algebra: StructAlgebra, coaction):
        if algebra.field != host.field:
            raise SpaceMismatch("comodule algebra must share the host's field")
        clean = {}
        f = host.field
        for b, terms in coaction.items():
            entry = {hb: c for hb, c in terms.items() if not f.is_zero(c)}
            clean[b] = entry
        for b in range(algebra.dim):
            clean.setdefault(b, {})
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coaction", clean)
        object.__setattr__(self, "_ops", None)

    def __setattr__(self, *a):
        raise AttributeError("ComoduleAlgebra is immutable")

    @property
    def field(self) -> Field:
        return self.host.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def coaction_basis(self, b: int) -> dict:
        return self.coaction.get(b, {})

    def coaction_of(self, x: dict) -> dict:
        f = self.field
        out = {}
        for b, cb in x.items():
            for hb, c in self.coaction_basis(b).items():
                val = f.add(out.get(hb, f.zero), f.mul(cb, c))
                if f.is_zero(val):
                    out.pop(hb, None)
                else:
                    out[hb] = val
        return out

    def coaction_element(self, b: int) -> TensorElement:
        return TensorElement(
            self.field,
            (self.host.space, self.algebra.space),
            dict(self.coaction_basis(b)),
        )

    def coaction_matrix(self) -> MapMatrix:
        """δ as a dense MapMatrix B → H⊗B."""
        f = self.field
        dom = self.algebra.space
        cod = self.host.space.tensor(self.algebra.space)
        nb = self.dim
        rows = [[f.zero] * nb for _ in range(cod.dim)]
        for b in range(nb):
            for (hh, bb), c in self.coaction_basis(b).items():
                rows[hh * nb + bb][b] = c
        return MapMatrix(f, dom, cod, rows)

    def coefficient_matrix(self, i: int) -> MapMatrix:
        """The coaction coefficient operator b ↦ (h^i ⊗ id) δ(b)."""
        f = self.field
        n = self.dim
        rows = [[f.zero] * n for _ in range(n)]
        for b in range(n):
            for (hh, bb), c in self.coaction_basis(b).items():
                if hh == i:
                    rows[bb][b] = f.add(rows[bb][b], c)
        return MapMatrix(f, self.algebra.space, self.algebra.space, rows)

    def __repr__(self):
        return f"ComoduleAlgebra(dim B={self.dim}, dim H={self.host.dim})"


def check_comodule_algebra(c: ComoduleAlgebra) -> Verdict:
    """δ is an algebra map, coassociative, and counital."""
    f = c.field
    h = c.host
    nb = c.dim
    v = check_algebra(c.algebra)
    if not v:
        return v
    # δ(1_B) = 1_H ⊗ 1_B and multiplicativity
    unit_b = c.algebra.unit_dict()
    target = {}
    for i, ci in h.unit_dict().items():
        for b, cb in unit_b.items():
            target[(i, b)] = f.mul(ci, cb)
    if not _dicts_equal(f, c.coaction_of(unit_b), target):
        return Verdict.failed("coaction-algebra-map", None, "δ(1) ≠ 1⊗1")
    for i in range(nb):
        di = c.coaction_basis(i)
        for j in range(nb):
            lhs = c.coaction_of(c.algebra.mult_basis(i, j))
            rhs = {}
            for (a1, b1), c1 in di.items():
                for (a2, b2), c2 in c.coaction_basis(j).items():
                    c12 = f.mul(c1, c2)
                    for x, cx in h.algebra.mult_basis(a1, a2).items():
                        for y, cy in c.algebra.mult_basis(b1, b2).items():
                            key = (x, y)
                            rhs[key] = f.add(
                                rhs.get(key, f.zero), f.mul(c12, f.mul(cx, cy))
                            )
            rhs = {k: v2 for k, v2 in rhs.items() if not f.is_zero(v2)}
            if not _dicts_equal(f, lhs, rhs):
                return Verdict.failed("coaction-algebra-map", (i, j))
    # coassociativity (Δ⊗id)δ = (id⊗δ)δ and counit law
    for b in range(nb):
        lhs = {}
        rhs = {}
        eps = {}
        for (hh, bb), cv in c.coaction_basis(b).items():
            for (a1, a2), dc in h.comult_basis(hh).items():
                key = (a1, a2, bb)
                lhs[key] = f.add(lhs.get(key, f.zero), f.mul(cv, dc))
            for (h2, b2), dc in c.coaction_basis(bb).items():
                key = (hh, h2, b2)
                rhs[key] = f.add(rhs.get(key, f.zero), f.mul(cv, dc))
            e = h.coalgebra.counit[hh]
            if not f.is_zero(e):
                eps[bb] = f.add(eps.get(bb, f.zero), f.mul(e, cv))
        lhs = {k: v2 for k, v2 in lhs.items() if not f.is_zero(v2)}
        rhs = {k: v2 for k, v2 in rhs.items() if not f.is_zero(v2)}
        if not _dicts_equal(f, lhs, rhs):
            return Verdict.failed("coaction-coassociativity", (b,))
        eps = {k: v2 for k, v2 in eps.items() if not f.is_zero(v2)}
        if not _dicts_equal(f, eps, {b: f.one}):
            return Verdict.failed("coaction-counit", (b,))
    return Verdict.passed()


class KMatrix:
    """An invertible element of H⊗B with its verified inverse and host data."""

    __slots__ = ("comodule", "rmatrix", "element", "inverse")

    def __init__(self, comodule: ComoduleAlgebra, rmatrix: RMatrix,
                 element: TensorElement, inverse: TensorElement | None = None):
        if rmatrix.host is not comodule.host and \
                rmatrix.host.space.labels != comodule.host.space.labels:
            raise SpaceMismatch("R-matrix and comodule algebra host differ")
        expected = (comodule.host.space.labels, comodule.algebra.space.labels)
        if tuple(sp.labels for sp in element.factors) != expected:
            raise SpaceMismatch("element must live in H⊗B")
        if inverse is None:
            inverse = tensor_invert(element, [comodule.host.algebra, comodule.algebra])
        object.__setattr__(self, "comodule", comodule)
        object.__setattr__(self, "rmatrix", rmatrix)
        object.__setattr__(self, "element", element)
        object.__setattr__(self, "inverse", inverse)

    def __setattr__(self, *a):
        raise AttributeError("KMatrix is immutable")

    @property
    def host(self) -> HopfAlgebra:
        return self.comodule.host

    def __repr__(self):
        return f"KMatrix(dim H={self.host.dim}, dim B={self.comodule.dim})"


def check_k_matrix(k: KMatrix) -> Verdict:
    """The three K-matrix axioms, entrywise in H⊗H⊗B and H⊗B."""
    c = k.comodule
    h = k.host
    f = h.field
    halg = h.algebra
    balg = c.algebra
    algs2 = [halg, balg]
    algs3 = [halg, halg, balg]
    spaces3 = (h.space, h.space, balg.space)
    tensor_invert(k.element, algs2)
    r = k.rmatrix
    r21 = leg_embed(r.element.swap(), (0, 1), spaces3, algs3)
    r21_inv = leg_embed(r.inverse.swap(), (0, 1), spaces3, algs3)
    r12 = leg_embed(r.element, (0, 1), spaces3, algs3)
    k13 = leg_embed(k.element, (0, 2), spaces3, algs3)
    k23 = leg_embed(k.element, (1, 2), spaces3, algs3)
    lhs_i = coapply_leg(k.element, 0, h.coalgebra.comult)
    rhs_i = tensor_mult(
        tensor_mult(tensor_mult(k23, r21, algs3), k13, algs3), r21_inv, algs3
    )
    if lhs_i != rhs_i:
        return Verdict.failed("kmatrix-i", None, "(Δ⊗id)K ≠ K23 R21 K13 R21⁻¹")
    lhs_ii = _coapply_coaction(k.element, c)
    rhs_ii = tensor_mult(tensor_mult(r21, k13, algs3), r12, algs3)
    if lhs_ii != rhs_ii:
        return Verdict.failed("kmatrix-ii", None, "(id⊗δ)K ≠ R21 K13 R12")
    for b in range(c.dim):
        db = c.coaction_element(b)
        if tensor_mult(k.element, db, algs2) != tensor_mult(db, k.element, algs2):
            return Verdict.failed("kmatrix-iii", (b,), "Kδ(b) ≠ δ(b)K")
    return Verdict.passed()


def _coapply_coaction(t: TensorElement, c: ComoduleAlgebra) -> TensorElement:
    """(id_H ⊗ δ) applied to an element of H⊗B, landing in H⊗H⊗B."""
    f = t.field
    factors = (t.factors[0], c.host.space, c.algebra.space)
    out = {}
    for (i, b), cv in t.coeffs.items():
        for (hh, bb), dc in c.coaction_basis(b).items():
            key = (i, hh, bb)
            out[key] = f.add(out.get(key, f.zero), f.mul(cv, dc))
    return TensorElement(f, factors, out)


def k_matrix(comodule: ComoduleAlgebra, rmatrix: RMatrix,
             element: TensorElement) -> KMatrix:
    """Checked constructor: verifies the K-matrix axioms before wrapping."""
    k = KMatrix(comodule, rmatrix, element)
    v = check_k_matrix(k)
    if not v:
        raise HopffactError(f"not a K-matrix: {v.describe()}")
    return k


def regular_bmodule(c: ComoduleAlgebra) -> BModule:
    f = c.field
    return BModule(
        c.algebra.space,
        [c.algebra.left_mult_matrix({i: f.one}) for i in range(c.dim)],
    )


def check_bmodule(c: ComoduleAlgebra, m: BModule) -> Verdict:
    """Algebra-representation laws for a B-module."""
    return check_representation(c.algebra, m)


def module_braiding(k: KMatrix, x: HModule, m: BModule) -> MapMatrix:
    """e_{X,M}: X⊗M → X⊗M, x⊗m ↦ (first leg · x) ⊗ (second leg ∗ m)."""
    f = k.host.field
    sp = x.space.tensor(m.space)
    out = MapMatrix.zero(f, sp, sp)
    for (a, b), cv in k.element.coeffs.items():
        out = out + kron_matrix(x.action[a], m.action[b]).scale(cv)
    return out


# ---------------------------------------------------------------------------
# Columnwise sparse verification of the braided-module axioms
# ---------------------------------------------------------------------------

def _sparse_cols(mats):
    """Per-basis sparse columns of a family of action matrices."""
    out = []
    for mat in mats:
        f = mat.field
        cols = []
        for j in range(mat.domain.dim):
            col = {}
            for i, row in enumerate(mat.rows):
                if not f.is_zero(row[j]):
                    col[i] = row[j]
            cols.append(col)
        out.append(cols)
    return out


def _add_term(f, acc, key, val):
    cur = f.add(acc.get(key, f.zero), val)
    if f.is_zero(cur):
        acc.pop(key, None)
    else:
        acc[key] = cur


def _apply_two_leg(f, vec, terms, cols_a, cols_b, legs, out_order=None):
    """Σ_terms coeff · (op_a on leg0) ⊗ (op_b on leg1), other legs fixed.

    ``vec`` maps index tuples to scalars; ``legs`` names the two positions
    acted on; ``out_order`` optionally permutes the full index tuple after
    acting (used for braidings that swap legs).
    """
    la, lb = legs
    out = {}
    for idx, cv in vec.items():
        for (a, b), tc in terms.items():
            ca = cols_a[a][idx[la]]
            if not ca:
                continue
            cb = cols_b[b][idx[lb]]
            if not cb:
                continue
            base = f.mul(cv, tc)
            for ia, va in ca.items():
                fa = f.mul(base, va)
                for ib, vb in cb.items():
                    new = list(idx)
                    new[la] = ia
                    new[lb] = ib
                    if out_order is not None:
                        new = [new[p] for p in out_order]
                    _add_term(f, out, tuple(new), f.mul(fa, vb))
    return out


def _nonzero_index(cols):
    """For each carrier column j, the list of basis indices acting nonzero."""
    dim = len(cols[0]) if cols else 0
    out = [[] for _ in range(dim)]
    for i, percol in enumerate(cols):
        for j in range(dim):
            if percol[j]:
                out[j].append(i)
    return out


def check_braided_module(k: KMatrix, x: HModule, y: HModule, m: BModule) -> Verdict:
    """Both braided-module identities on a concrete (X, Y, M), columnwise.

    Dense composite matrices on X⊗Y⊗M are never formed, so this scales to
    the largest corpus instances.
    """
    f = k.host.field
    c = k.comodule
    h = k.host
    r = k.rmatrix
    xa = _sparse_cols(x.action)
    ya = _sparse_cols(y.action)
    ma = _sparse_cols(m.action)
    kt = dict(k.element.coeffs)
    rt = dict(r.element.coeffs)
    rinv = dict(r.inverse.coeffs)
    # Δ applied to the first K-leg (for e_{X⊗Y,M}), grouped by the leg that
    # acts on X so columns only visit terms that can survive
    k_split_by_a1: dict = {}
    for (a, b), cv in kt.items():
        for (a1, a2), dc in h.comult_basis(a).items():
            k_split_by_a1.setdefault(a1, []).append((a2, b, f.mul(cv, dc)))
    # δ applied to the second K-leg (for e_{X, Y▷M}), grouped likewise
    k_coact_by_a: dict = {}
    for (a, b), cv in kt.items():
        for (hh, bb), dc in c.coaction_basis(b).items():
            k_coact_by_a.setdefault(a, []).append((hh, bb, f.mul(cv, dc)))
    x_nz = _nonzero_index(xa)

    for jx in range(x.dim):
        a_live = x_nz[jx]
        for jy in range(y.dim):
            for jm in range(m.dim):
                start = {(jx, jy, jm): f.one}
                # identity (1) left side: e_{X⊗Y,M} via Δ on the first K-leg
                lhs = {}
                for a1 in a_live:
                    cx = xa[a1][jx]
                    for a2, b, cv in k_split_by_a1.get(a1, ()):
                        cy = ya[a2][jy]
                        if not cy:
                            continue
                        cm = ma[b][jm]
                        if not cm:
                            continue
                        for ix, vx in cx.items():
                            for iy, vy in cy.items():
                                vxy = f.mul(f.mul(vx, vy), cv)
                                for im, vm in cm.items():
                                    _add_term(f, lhs, (ix, iy, im), f.mul(vxy, vm))
                # right side, step by step (input legs (x, y, m)):
                # c_{Y,X}^{-1} ▷ id: output legs (y, x, m); the inverse braiding
                # puts the first leg of R^{-1} on Y and the second on X
                vec = _apply_two_leg(f, start, rinv, ya, xa, (1, 0), (1, 0, 2))
                # id_Y ▷ e_{X,M}: first K-leg on X, second on M
                vec = _apply_two_leg(f, vec, kt, xa, ma, (1, 2))
                # c_{Y,X} ▷ id: (y, x, m) → (x, y, m); lower R-leg on Y, upper on X
                vec = _apply_two_leg(f, vec, rt, ya, xa, (0, 1), (1, 0, 2))
                # id_X ▷ e_{Y,M}
                vec = _apply_two_leg(f, vec, kt, ya, ma, (1, 2))
                if not _dicts_equal(f, lhs, vec):
                    return Verdict.failed("braided-module-1", (jx, jy, jm))
                # identity (2) left side: e_{X,Y▷M} via δ on the second K-leg
                lhs2 = {}
                for a in a_live:
                    cx = xa[a][jx]
                    for hh, bb, cv in k_coact_by_a.get(a, ()):
                        cy = ya[hh][jy]
                        if not cy:
                            continue
                        cm = ma[bb][jm]
                        if not cm:
                            continue
                        for ix, vx in cx.items():
                            for iy, vy in cy.items():
                                vxy = f.mul(f.mul(vx, vy), cv)
                                for im, vm in cm.items():
                                    _add_term(f, lhs2, (ix, iy, im), f.mul(vxy, vm))
                # right side: c_{X,Y} ▷ id: (x, y, m) → (y, x, m);
                # lower R-leg on X, upper on Y
                vec = _apply_two_leg(f, start, rt, xa, ya, (0, 1), (1, 0, 2))
                # id_Y ▷ e_{X,M}
                vec = _apply_two_leg(f, vec, kt, xa, ma, (1, 2))
                # c_{Y,X} ▷ id: (y, x, m) → (x, y, m)
                vec = _apply_two_leg(f, vec, rt, ya, xa, (0, 1), (1, 0, 2))
                if not _dicts_equal(f, lhs2, vec):
                    return Verdict.failed("braided-module-2", (jx, jy, jm))
    # unit law e_{1,M} = id
    triv = trivial_module(h)
    if not module_braiding(k, triv, m).is_identity():
        return Verdict.failed("braided-module-unit", None, "e_{1,M} ≠ id")
    return Verdict.passed()


def z2_membership(k: KMatrix, x: HModule) -> bool:
    """Symmetric-center membership against the regular B-module.

    Naturality reduces the quantifier over all modules to the regular one:
    every finite-dimensional module is a quotient of a free one and the
    braiding commutes with surjections.
    """
    reg = regular_bmodule(k.comodule)
    return module_braiding(k, x, reg).is_identity()


# ---------------------------------------------------------------------------
# End space E(H,B)
# ---------------------------------------------------------------------------

class EndSpace:
    """Span of the intertwiners ξ: H → B, with the induced H-action."""

    __slots__ = ("comodule", "space", "basis_maps", "h_action", "_coord")

    def __init__(self, comodule, space, basis_maps, h_action, coord):
        object.__setattr__(self, "comodule", comodule)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "basis_maps", tuple(basis_maps))
        object.__setattr__(self, "h_action", tuple(h_action))
        object.__setattr__(self, "_coord", coord)

    def __setattr__(self, *a):
        raise AttributeError("EndSpace is immutable")

    @property
    def dim(self) -> int:
        return self.space.dim

    def coords_many(self, vectors):
        """Coordinates of flattened Hom(H,B) vectors in the ξ-basis.

        Raises ImageEscapesEndSpace when a vector is outside the span.
        """
        return self._coord.coords_many(vectors)

    def evaluation_at_unit(self) -> MapMatrix:
        """The map ξ ↦ ξ(1_H) from the span to B."""
        c = self.comodule
        f = c.field
        u = c.host.unit_dict()
        cols = []
        for mat in self.basis_maps:
            vec = [f.zero] * c.dim
            for j, cj in u.items():
                piece = [row[j] for row in mat.rows]
                vec = [f.add(a, f.mul(cj, b)) for a, b in zip(vec, piece)]
            cols.append(tuple(vec))
        return MapMatrix.from_columns(f, self.space, c.algebra.space, cols)

    def __repr__(self):
        return f"EndSpace(dim={self.dim})"


class _Coordinatizer:
    """Exact coordinates w.r.t. a fixed independent column family."""

    def __init__(self, field: Field, columns, length: int):
        self.field = field
        self.columns = [tuple(col) for col in columns]
        self.length = length
        k = len(self.columns)
        if k == 0:
            self.pivots = []
            self.inv = None
            return
        ech, piv = echelonize(self.columns, length, field)
        if len(piv) != k:
            raise HopffactError("span columns are not independent")
        self.pivots = piv
        sq_space = BasedSpace(tuple(f"p{i}" for i in range(k)))
        rows = [[self.columns[j][p] for j in range(k)] for p in piv]
        self.inv = MapMatrix(field, sq_space, sq_space, rows).inverse()

    def coords_many(self, vectors):
        f = self.field
        k = len(self.columns)
        vectors = [tuple(v) for v in vectors]
        if k == 0:
            if any(any(not f.is_zero(x) for x in v) for v in vectors):
                raise ImageEscapesEndSpace("vector outside the zero span")
            return [() for _ in vectors]
        coords = [
            self.inv.apply(tuple(v[p] for p in self.pivots)) for v in vectors
        ]
        # exact membership verification, batched
        if isinstance(f, PrimeField):
            p = f.p
            colmat = np.array(self.columns, dtype=np.float64).T % p
            cmat = np.array(coords, dtype=np.float64).T % p
            recon = _chunked_mod_matmul(colmat, cmat, p)
            target = np.array(vectors, dtype=np.float64).T % p
            if not np.array_equal(recon, target):
                raise ImageEscapesEndSpace("vector outside the span")
        else:
            for v, co in zip(vectors, coords):
                recon = [f.zero] * self.length
                for j, cj in enumerate(co):
                    if f.is_zero(cj):
                        continue
                    col = self.columns[j]
                    recon = [f.add(a, f.mul(cj, b)) for a, b in zip(recon, col)]
                if tuple(recon) != v:
                    raise ImageEscapesEndSpace("vector outside the span")
        return [tuple(co) for co in coords]


def _chunked_mod_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) % p in float64, chunking the inner dimension if needed."""
    inner = a.shape[1]
    max_block = max(1, int((2**52) // max(1, (p - 1) ** 2)))
    if inner <= max_block:
        return ((a % p) @ (b % p)) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.float64)
    for s in range(0, inner, max_block):
        out += (a[:, s:s + max_block] % p) @ (b[s:s + max_block] % p)
        out %= p
    return out


def compute_end_space(c: ComoduleAlgebra) -> EndSpace:
    """Kernel of the intertwiner constraints on Hom(H,B), plus the H-action.

    A map ξ (as a dim B × dim H coefficient matrix, flattened row-major)
    lies in the space iff for every algebra basis element b:
    Σ_{δ(b)} (right-mult by b_[0]) ξ (left-mult by b_[-1]) = (left-mult by b) ξ.
    The kernel is intersected constraint block by constraint block.
    """
    f = c.field
    h = c.host
    nb, nh = c.dim, h.dim
    n = nb * nh
    left_h = [h.algebra.left_mult_matrix({i: f.one}) for i in range(nh)]
    kernel_cols = None  # columns spanning the current kernel, or None = all
    for b in range(nb):
        block = _end_constraint_block(c, b, left_h)
        kernel_cols = _refine_kernel(f, block, kernel_cols, n)
        if _kernel_count(kernel_cols) == 0:
            break
    if isinstance(kernel_cols, np.ndarray):
        kernel_cols = [
            tuple(int(x) for x in kernel_cols[:, j])
            for j in range(kernel_cols.shape[1])
        ]
    kernel_cols = kernel_cols or []
    sp = BasedSpace(tuple(f"ξ{i}" for i in range(len(kernel_cols))))
    hom_dom = h.space
    basis_maps = []
    for vec in kernel_cols:
        rows = [tuple(vec[r * nh + s] for s in range(nh)) for r in range(nb)]
        basis_maps.append(MapMatrix(f, hom_dom, c.algebra.space, rows))
    coord = _Coordinatizer(f, kernel_cols, n)
    # H-action (h·ξ)(h') = ξ(h'h): precompose with right multiplication
    right_h = [h.algebra.right_mult_matrix({i: f.one}) for i in range(nh)]
    h_action = []
    for i in range(nh):
        targets = []
        for mat in basis_maps:
            moved = mat @ right_h[i]
            targets.append(_flatten_map(moved))
        try:
            cols = coord.coords_many(targets)
        except ImageEscapesEndSpace as exc:
            raise HopffactError("end space is not action-stable (bug)") from exc
        rows = [tuple(cols[j][r] for j in range(len(cols))) for r in range(len(kernel_cols))]
        h_action.append(MapMatrix(f, sp, sp, rows))
    es = EndSpace(c, sp, basis_maps, h_action, coord)
    if es.dim:
        v = check_module(h, HModule(sp, h_action))
        if not v:
            raise HopffactError(f"end-space action is not a module: {v.describe()}")
    return es


def _flatten_map(m: MapMatrix):
    return tuple(x for row in m.rows for x in row)


def _kernel_count(kernel_cols) -> int:
    if kernel_cols is None:
        return -1
    if isinstance(kernel_cols, np.ndarray):
        return kernel_cols.shape[1]
    return len(kernel_cols)


def _end_constraint_block(c: ComoduleAlgebra, b: int, left_h):
    """Rows of the constraint operator for one algebra basis element."""
    f = c.field
    nb, nh = c.dim, c.host.dim
    lb = c.algebra.left_mult_matrix({b: f.one})
    if isinstance(f, PrimeField):
        p = f.p
        acc = np.zeros((nb * nh, nb * nh), dtype=np.float64)
        for (hh, bb), cv in c.coaction_basis(b).items():
            rb = c.algebra.right_mult_matrix({bb: f.one}).numpy()
            lh_t = left_h[hh].numpy().T
            acc = (acc + float(cv) * np.kron(rb, lh_t)) % p
        eye = np.eye(nh)
        acc = (acc - np.kron(lb.numpy(), eye)) % p
        return acc
    rows = [[f.zero] * (nb * nh) for _ in range(nb * nh)]
    for (hh, bb), cv in c.coaction_basis(b).items():
        rb = c.algebra.right_mult_matrix({bb: f.one})
        lh = left_h[hh]
        for r2 in range(nb):
            for r in range(nb):
                a = rb.rows[r2][r]
                if f.is_zero(a):
                    continue
                a = f.mul(cv, a)
                for s2 in range(nh):
                    for s in range(nh):
                        q = lh.rows[s][s2]
                        if not f.is_zero(q):
                            rows[r2 * nh + s2][r * nh + s] = f.add(
                                rows[r2 * nh + s2][r * nh + s], f.mul(a, q)
                            )
    for r2 in range(nb):
        for r in range(nb):
            a = lb.rows[r2][r]
            if f.is_zero(a):
                continue
            for s in range(nh):
                rows[r2 * nh + s][r * nh + s] = f.sub(rows[r2 * nh + s][r * nh + s], a)
    return [tuple(row) for row in rows]


def _refine_kernel(f, block_rows, kernel_cols, n):
    """Intersect the current kernel with ker(block)."""
    if isinstance(f, PrimeField):
        from .linalg import kernel_basis_array

        p = f.p
        if kernel_cols is None:
            return kernel_basis_array(block_rows, n, f)
        if kernel_cols.shape[1] == 0:
            return kernel_cols
        prod = _chunked_mod_matmul(block_rows, kernel_cols, p)
        coeffs = kernel_basis_array(prod, kernel_cols.shape[1], f)
        return _chunked_mod_matmul(kernel_cols, coeffs, p)
    if kernel_cols is None:
        return kernel_basis(block_rows, n, f)
    if not kernel_cols:
        return []
    k = len(kernel_cols)
    rows = []
    for brow in block_rows:
        nzs = [(j, x) for j, x in enumerate(brow) if not f.is_zero(x)]
        row = []
        for col in kernel_cols:
            s = f.zero
            for j, x in nzs:
                if not f.is_zero(col[j]):
                    s = f.add(s, f.mul(x, col[j]))
            row.append(s)
        rows.append(tuple(row))
    coeffs = kernel_basis(rows, k, f)
    out = []
    for co in coeffs:
        vec = [f.zero] * n
        for j, cj in enumerate(co):
            if f.is_zero(cj):
                continue
            col = kernel_cols[j]
            vec = [f.add(a, f.mul(cj, b)) for a, b in zip(vec, col)]
        out.append(tuple(vec))
    return out


# ---------------------------------------------------------------------------
# The factorizability map, copairing, and weak factorizability
# ---------------------------------------------------------------------------

def _theta_elements(k: KMatrix, double_antipode: bool):
    """For each basis h_t: Σ S(h_(1)) K_i h_(2) ⊗ K^i  (optionally with an
    outer antipode on the first leg) as a dict {(hh, bb): coeff}."""
    h = k.host
    f = h.field
    out = []
    for t in range(h.dim):
        acc: dict = {}
        for (a1, a2), dc in h.comult_basis(t).items():
            s1 = h.s_dict({a1: dc})
            for (u, v), cv in k.element.coeffs.items():
                left = h.multiply(h.multiply(s1, {u: f.one}), {a2: f.one})
                if double_antipode:
                    left = h.s_dict(left)
                for hh, ch in left.items():
                    _add_term(f, acc, (hh, v), f.mul(ch, cv))
        out.append(acc)
    return out


def _theta_matrix_from_elements(k: KMatrix, es: EndSpace, elements) -> MapMatrix:
    h = k.host
    f = h.field
    nb, nh = k.comodule.dim, h.dim
    targets = []
    for a in range(nh):
        vec = [f.zero] * (nb * nh)
        for t in range(nh):
            for (hh, bb), cv in elements[t].items():
                if hh == a:
                    vec[bb * nh + t] = f.add(vec[bb * nh + t], cv)
        targets.append(tuple(vec))
    coords = es.coords_many(targets)
    rows = [tuple(coords[a][r] for a in range(nh)) for r in range(es.dim)]
    return MapMatrix(f, h.space.dual(), es.space, rows)


def theta_comodule(k: KMatrix, es: EndSpace | None = None) -> MapMatrix:
    """The factorizability map H* → E(H,B): f ↦ [h ↦ ⟨f, S(h_(1))K_i h_(2)⟩K^i].

    Columns are expressed in the end-space basis; a component outside the
    span raises ImageEscapesEndSpace.
    """
    es = es if es is not None else compute_end_space(k.comodule)
    return _theta_matrix_from_elements(k, es, _theta_elements(k, False))


def theta_module_category(k: KMatrix, es: EndSpace | None = None) -> MapMatrix:
    """The module-category variant f ↦ [h ↦ ⟨f, S(S(h_(1))K_i h_(2))⟩K^i]."""
    es = es if es is not None else compute_end_space(k.comodule)
    return _theta_matrix_from_elements(k, es, _theta_elements(k, True))


def is_factorizable_comodule(k: KMatrix, es: EndSpace | None = None) -> bool:
    """True iff the factorizability map has rank dim H."""
    theta = theta_comodule(k, es)
    return theta.rank() == k.host.dim


def omega_copairing(k: KMatrix, es: EndSpace | None = None) -> TensorElement:
    """The copairing in H ⊗ E(H,B), with invariance verified.

    Built as Σ_i h_i ⊗ [h ↦ ⟨h^i, S(S(h_(1))K_j h_(2))⟩ K^j]; the second leg
    must land in the end space and the whole element must be H-invariant
    (adjoint action on the first leg, right-translation action on the span).
    """
    h = k.host
    f = h.field
    es = es if es is not None else compute_end_space(k.comodule)
    theta_mod = _theta_matrix_from_elements(k, es, _theta_elements(k, True))
    coeffs = {}
    for i in range(h.dim):
        for j in range(es.dim):
            c = theta_mod.rows[j][i]
            if not f.is_zero(c):
                coeffs[(i, j)] = c
    omega = TensorElement(f, (h.space, es.space), coeffs)
    _verify_omega_invariance(k, es, omega)
    return omega


def _verify_omega_invariance(k: KMatrix, es: EndSpace, omega: TensorElement):
    """h·ω = ε(h)ω for every basis h, with the adjoint action on the H-leg."""
    h = k.host
    f = h.field
    nh, ne = h.dim, es.dim
    w = [[f.zero] * ne for _ in range(nh)]
    for (i, j), c in omega.coeffs.items():
        w[i][j] = c
    hsp, esp = omega.factors
    wmat = MapMatrix(f, esp, hsp, w)
    for t in range(nh):
        acc = MapMatrix.zero(f, esp, hsp)
        for (a, mid), dc in h.comult_basis(t).items():
            for (a1, a2), dc2 in h.comult_basis(a).items():
                coeff = f.mul(dc, dc2)
                adj = _left_right_matrix(h, a1, a2)
                term = (adj @ wmat) @ es.h_action[mid].transpose()
                acc = acc + term.scale(coeff)
        eps = h.coalgebra.counit[t]
        if acc != wmat.scale(eps):
            raise HopffactError(f"copairing is not invariant at basis {t}")


def _left_right_matrix(h: HopfAlgebra, a1: int, a2: int) -> MapMatrix:
    """Matrix of ℓ ↦ h_{a1} · ℓ · S(h_{a2}) on H."""
    f = h.field
    s2 = h.s_basis(a2)
    rmat = h.algebra.right_mult_matrix(s2)
    lmat = h.algebra.left_mult_matrix({a1: f.one})
    return lmat @ rmat


@dataclass(frozen=True)
class WeakFactorizability:
    source_dim: int
    target_dim: int
    rank: int
    bijective: bool


def weak_factorizability(k: KMatrix, es: EndSpace | None = None) -> WeakFactorizability:
    """Bijectivity data of Ω: Hom(E_C, 1) → Hom(1, E_M), f ↦ (f⊗id)ω.

    The source is the space of adjoint-invariant functionals on H, the
    target the space of invariants of the end-space action.
    """
    h = k.host
    f = h.field
    nh = h.dim
    es = es if es is not None else compute_end_space(k.comodule)
    omega = omega_copairing(k, es)
    # source: f with f(h_(1) h' S(h_(2))) = ε(h) f(h')
    rows = []
    for t in range(nh):
        adj = _sum_adjoint(h, t)
        eps = h.coalgebra.counit[t]
        for s in range(nh):
            row = [adj.rows[a][s] for a in range(nh)]
            row[s] = f.sub(row[s], eps)
            rows.append(tuple(row))
    source = kernel_basis(rows, nh, f)
    # target: invariants of the end-space action
    ne = es.dim
    rows_t = []
    for t in range(nh):
        eps = h.coalgebra.counit[t]
        act = es.h_action[t]
        for r in range(ne):
            row = list(act.rows[r])
            row[r] = f.sub(row[r], eps)
            rows_t.append(tuple(row))
    target = kernel_basis(rows_t, ne, f) if ne else []
    # Ω on the source basis
    w = [[f.zero] * ne for _ in range(nh)]
    for (i, j), c in omega.coeffs.items():
        w[i][j] = c
    images = []
    for fvec in source:
        img = [f.zero] * ne
        for i, ci in enumerate(fvec):
            if f.is_zero(ci):
                continue
            img = [f.add(a, f.mul(ci, b)) for a, b in zip(img, w[i])]
        images.append(tuple(img))
    # images must land in the invariant target subspace
    if images and ne:
        span = IncrementalSpan(f, ne)
        for tv in target:
            span.add(tv)
        for img in images:
            if not span.contains(img):
                raise HopffactError("Ω image leaves the invariant subspace")
    rank = rank_of_rows(images, ne, f)
    bij = rank == len(source) == len(target)
    return WeakFactorizability(len(source), len(target), rank, bij)


def rank_of_rows(rows, ncols, field):
    if not rows or ncols == 0:
        return 0
    return len(echelonize(rows, ncols, field)[1])


def _sum_adjoint(h: HopfAlgebra, t: int) -> MapMatrix:
    f = h.field
    acc = MapMatrix.zero(f, h.space, h.space)
    for (a1, a2), dc in h.comult_basis(t).items():
        acc = acc + _left_right_matrix(h, a1, a2).scale(dc)
    return acc


# ---------------------------------------------------------------------------
# Costable ideals and H-simplicity
# ---------------------------------------------------------------------------

def _operator_family(c: ComoduleAlgebra):
    """Left/right multiplications and coaction coefficient operators on B
    (cached on the comodule algebra)."""
    if c._ops is not None:
        return c._ops
    f = c.field
    ops = []
    for i in range(c.dim):
        ops.append(c.algebra.left_mult_matrix({i: f.one}))
    for i in range(c.dim):
        ops.append(c.algebra.right_mult_matrix({i: f.one}))
    for i in range(c.host.dim):
        ops.append(c.coefficient_matrix(i))
    object.__setattr__(c, "_ops", tuple(ops))
    return c._ops


def costable_closure(c: ComoduleAlgebra, generators):
    """Smallest subspace containing ``generators`` that is closed under left
    and right multiplication and every coaction coefficient map.

    In finite dimension this is exactly the costable ideal generated by the
    given vectors; the result is an echelon basis (possibly empty).
    """
    f = c.field
    n = c.dim
    ops = _operator_family(c)
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != n:
            raise SpaceMismatch("generator length does not match B")
        gens.append(g)
    if isinstance(f, PrimeField):
        return _costable_closure_gf(c, ops, gens)
    span = IncrementalSpan(f, n)
    work = [g for g in gens if span.add(g)]
    while work:
        vec = work.pop()
        for op in ops:
            img = op.apply(vec)
            if span.add(img):
                work.append(img)
    # idempotence: one more sweep must add nothing
    for row in list(span.basis_vectors()):
        for op in ops:
            if span.add(op.apply(row)):
                raise HopffactError("closure not idempotent (bug)")
    return span.basis_vectors()


def _costable_closure_gf(c: ComoduleAlgebra, ops, gens):
    f = c.field
    p = f.p
    n = c.dim
    stack = np.stack([op.numpy().astype(np.float64) for op in ops])
    span = GFBatchSpan(p, n)
    if gens:
        span.add_batch(np.array(gens, dtype=np.float64))
    frontier = span.rows.copy()
    while frontier.shape[0]:
        start = span.dim
        imgs = np.einsum("oab,vb->ova", stack, frontier) % p
        span.add_batch(imgs.reshape(-1, n))
        frontier = span.rows[start:].copy()
    if span.dim:
        imgs = np.einsum("oab,vb->ova", stack, span.rows) % p
        if span.add_batch(imgs.reshape(-1, n)):
            raise HopffactError("closure not idempotent (bug)")
    return [tuple(int(x) for x in row) for row in span.rows]


@dataclass(frozen=True)
class SimplicityVerdict:
    status: str                 # "simple" | "not-simple" | "inconclusive"
    certificate: str | None
    witness: tuple | None       # basis of a proper nonzero costable ideal
    field_tag: str

    @property
    def is_simple(self):
        return self.status == "simple"


_BURNSIDE_DENSE_CAP = 48  # dim B above this would need dim^4 memory; corpus max is 36


def h_simplicity(c: ComoduleAlgebra) -> SimplicityVerdict:
    """Decide H-simplicity of B where an exact certificate exists.

    Simple: the operator algebra generated by left/right multiplications and
    coaction coefficients saturates all of End(B) (dimension count), which
    certifies absolute simplicity.  NotSimple: a verified proper nonzero
    costable ideal, found by basis spinning, by the trace-form ideal of the
    operator algebra, or by kernels of commutant elements at base-field
    eigenvalues.  Anything else is reported Inconclusive together with the
    field of computation.
    """
    f = c.field
    n = c.dim
    tag = f.tag
    # refutation by basis spinning
    for i in range(n):
        gen = tuple(f.one if j == i else f.zero for j in range(n))
        closure = costable_closure(c, [gen])
        if 0 < len(closure) < n:
            return SimplicityVerdict("not-simple", f"spin(basis {i})", tuple(closure), tag)
    ops = _operator_family(c)
    op_basis = _saturate_operator_algebra(c, ops)
    if op_basis is not None and len(op_basis) == n * n:
        return SimplicityVerdict("simple", "burnside", None, tag)
    if op_basis is not None and n <= _BURNSIDE_DENSE_CAP and len(op_basis) <= 256:
        witness = _trace_ideal_witness(c, op_basis)
        if witness is not None:
            return SimplicityVerdict("not-simple", "trace-ideal", tuple(witness), tag)
        witness = _commutant_witness(c, ops)
        if witness is not None:
            return SimplicityVerdict("not-simple", "commutant-kernel", tuple(witness), tag)
    return SimplicityVerdict("inconclusive", None, None, tag)


def _saturate_operator_algebra(c: ComoduleAlgebra, ops):
    """Basis of the unital algebra generated by ``ops`` inside End(B).

    Returns a list of matrices (as MapMatrix) or None when the iteration cap
    is hit (it cannot be for correct inputs; the cap guarantees termination).
    """
    f = c.field
    n = c.dim
    cap = n * n + 1
    if isinstance(f, PrimeField):
        return _saturate_gf(c, ops, cap)
    span = IncrementalSpan(f, n * n)
    ident = MapMatrix.identity(f, c.algebra.space)
    mats = []
    work = []
    for m in [ident, *ops]:
        if span.add(_flatten_map(m)):
            mats.append(m)
            work.append(m)
    rounds = 0
    while work and rounds < cap:
        rounds += 1
        nxt = []
        for m in work:
            for g in ops:
                prod = g @ m
                if span.add(_flatten_map(prod)):
                    mats.append(prod)
                    nxt.append(prod)
                if span.dim == n * n:
                    return mats
        work = nxt
    return mats if not work else None


def _saturate_gf(c: ComoduleAlgebra, ops, cap):
    f = c.field
    p = f.p
    n = c.dim
    gens = np.stack([op.numpy().astype(np.float64) for op in ops])
    span = GFBatchSpan(p, n * n)
    eye = np.eye(n, dtype=np.float64)
    seed = np.vstack([eye.reshape(1, -1), gens.reshape(len(ops), -1)])
    span.add_batch(seed)
    frontier = _rows_to_mats(span.rows, n)
    rounds = 0
    while frontier.shape[0] and rounds < cap:
        rounds += 1
        before = span.dim
        prods = np.einsum("gab,mbc->gmac", gens, frontier) % p
        batch = prods.reshape(-1, n * n)
        new_count = 0
        chunk = max(1, (1 << 22) // (n * n))
        start_row = span.dim
        for s in range(0, batch.shape[0], chunk):
            new_count += span.add_batch(batch[s:s + chunk])
            if span.dim == n * n:
                break
        if span.dim == n * n or new_count == 0:
            break
        frontier = _rows_to_mats(span.rows[start_row:], n)
        if span.dim == before:
            break
    sp = c.algebra.space
    mats = []
    for row in span.rows:
        rows = [tuple(int(x) for x in row[i * n:(i + 1) * n]) for i in range(n)]
        mats.append(MapMatrix(f, sp, sp, rows))
    return mats


def _rows_to_mats(rows: np.ndarray, n: int) -> np.ndarray:
    return rows.reshape(-1, n, n).astype(np.float64)


def _trace_ideal_witness(c: ComoduleAlgebra, op_basis):
    """Witness from the trace-form ideal T = {x : tr(x y) = 0 ∀y} of the
    operator algebra: T·B is always a costable ideal; in characteristic 0,
    T is the radical, so a nonzero T on a faithful module forces T·B to be
    proper and nonzero."""
    f = c.field
    n = c.dim
    k = len(op_basis)
    gram = []
    for a in op_basis:
        row = []
        at = list(zip(*a.rows))
        for b in op_basis:
            s = f.zero
            for i in range(n):
                for x, y in zip(at[i], b.rows[i]):
                    if not f.is_zero(x) and not f.is_zero(y):
                        s = f.add(s, f.mul(x, y))
            row.append(s)
        gram.append(tuple(row))
    null = kernel_basis(gram, k, f)
    if not null:
        return None
    span = IncrementalSpan(f, n)
    for co in null:
        mat = MapMatrix.zero(f, c.algebra.space, c.algebra.space)
        for j, cj in enumerate(co):
            if not f.is_zero(cj):
                mat = mat + op_basis[j].scale(cj)
        for col in range(n):
            vec = tuple(row[col] for row in mat.rows)
            span.add(vec)
    if 0 < span.dim < n:
        basis = span.basis_vectors()
        closed = costable_closure(c, basis)
        if len(closed) == span.dim:
            return closed
    return None


def _commutant_witness(c: ComoduleAlgebra, ops):
    """Witness from ker(z - λ) for commutant elements z and base-field λ."""
    f = c.field
    n = c.dim
    # solve z·op = op·z for all operators
    rows = []
    for op in ops:
        m = op.rows
        for i in range(n):
            for j in range(n):
                row = [f.zero] * (n * n)
                for t in range(n):
                    row[i * n + t] = f.add(row[i * n + t], m[t][j])
                    row[t * n + j] = f.sub(row[t * n + j], m[i][t])
                rows.append(tuple(row))
    comm = kernel_basis(rows, n * n, f)
    for co in comm:
        mat_rows = [tuple(co[i * n + j] for j in range(n)) for i in range(n)]
        z = MapMatrix(f, c.algebra.space, c.algebra.space, mat_rows)
        for lam in _eigenvalue_candidates(f, z):
            shifted = z - MapMatrix.identity(f, c.algebra.space).scale(lam)
            ker = shifted.kernel()
            if 0 < len(ker) < n:
                closed = costable_closure(c, ker)
                if 0 < len(closed) < n:
                    return closed
    return None


def _eigenvalue_candidates(f, z: MapMatrix):
    """Base-field eigenvalues of z: exhaustive over GF(p), rational roots of
    the characteristic polynomial over Q."""
    n = z.domain.dim
    if isinstance(f, PrimeField):
        return [f.scalar(v) for v in range(f.p)]
    from fractions import Fraction
    from math import lcm as _lcm

    den = 1
    for row in z.rows:
        for x in row:
            den = _lcm(den, Fraction(x).denominator)
    a = [[Fraction(x) * den for x in row] for row in z.rows]
    # Faddeev–LeVerrier char poly of the (integer) matrix den·z
    mk = [row[:] for row in a]
    cs = [Fraction(1)]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        ck = -tr / k
        cs.append(ck)
        if k == n:
            break
        for i in range(n):
            mk[i][i] += ck
        mk = [
            [sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    const = cs[-1]
    cands = {Fraction(0)} if const == 0 else set()
    if const != 0:
        cnum = abs(int(const))
        for d in range(1, min(cnum, 100000) + 1):
            if cnum % d == 0:
                cands.add(Fraction(d))
                cands.add(Fraction(-d))
                cands.add(Fraction(cnum // d))
                cands.add(Fraction(-(cnum // d)))
    roots = []
    for lam in sorted(cands):
        val = Fraction(0)
        for ck in cs:
            val = val * lam + ck
        if val == 0:
            roots.append(lam / den)
    return roots
