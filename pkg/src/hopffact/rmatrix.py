"""Universal R-matrices: axiom checking, braidings on modules, the map from
functionals to elements induced by the double braiding, and factorizability
of the host Hopf algebra."""

from __future__ import annotations

from .errors import HopffactError, SpaceMismatch
from .hopf import HModule, HopfAlgebra, kron_matrix
from .linalg import MapMatrix
from .tensors import (
    TensorElement,
    coapply_leg,
    leg_embed,
    tensor_invert,
    tensor_mult,
    tensor_unit,
)
from .verdicts import Verdict


class RMatrix:
    """An invertible element of H⊗H together with its verified inverse."""

    __slots__ = ("host", "element", "inverse")

    def __init__(self, host: HopfAlgebra, element: TensorElement,
                 inverse: TensorElement | None = None):
        if tuple(f.labels for f in element.factors) != (host.space.labels,) * 2:
            raise SpaceMismatch("element must live in H⊗H")
        if inverse is None:
            inverse = tensor_invert(element, [host.algebra, host.algebra])
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "element", element)
        object.__setattr__(self, "inverse", inverse)

    def __setattr__(self, *a):
        raise AttributeError("RMatrix is immutable")

    def monodromy(self) -> TensorElement:
        """R_21 R, the double-braiding element."""
        algs = [self.host.algebra, self.host.algebra]
        return tensor_mult(self.element.swap(), self.element, algs)

    def __repr__(self):
        return f"RMatrix(dim H = {self.host.dim}, {len(self.element.coeffs)} terms)"


def trivial_r_matrix(host: HopfAlgebra) -> RMatrix:
    """R = 1⊗1 (an R-matrix exactly when H is cocommutative)."""
    algs = [host.algebra, host.algebra]
    unit = tensor_unit(host.field, (host.space, host.space), algs)
    return RMatrix(host, unit, unit)


def check_r_matrix(host: HopfAlgebra, element: TensorElement) -> Verdict:
    """The three quasitriangularity axioms, checked entrywise in H⊗H⊗H.

    Invertibility is a precondition: NotInvertible propagates to the caller.
    """
    alg = host.algebra
    algs2 = [alg, alg]
    algs3 = [alg, alg, alg]
    spaces3 = (host.space,) * 3
    tensor_invert(element, algs2)
    comult = host.coalgebra.comult_basis
    r13 = leg_embed(element, (0, 2), spaces3, algs3)
    r23 = leg_embed(element, (1, 2), spaces3, algs3)
    r12 = leg_embed(element, (0, 1), spaces3, algs3)
    lhs_i = coapply_leg(element, 0, host.coalgebra.comult)
    if lhs_i != tensor_mult(r13, r23, algs3):
        return Verdict.failed("quasitriangular-i", None, "(Δ⊗id)R ≠ R13 R23")
    lhs_ii = coapply_leg(element, 1, host.coalgebra.comult)
    if lhs_ii != tensor_mult(r13, r12, algs3):
        return Verdict.failed("quasitriangular-ii", None, "(id⊗Δ)R ≠ R13 R12")
    f = host.field
    for i in range(host.dim):
        delta = TensorElement(f, (host.space, host.space), dict(comult(i)))
        delta_op = delta.swap()
        if tensor_mult(element, delta, algs2) != tensor_mult(delta_op, element, algs2):
            return Verdict.failed("quasitriangular-iii", (i,), "RΔ(h) ≠ Δop(h)R")
    return Verdict.passed()


def r_matrix(host: HopfAlgebra, element: TensorElement) -> RMatrix:
    """Checked constructor: verifies the axioms before wrapping."""
    v = check_r_matrix(host, element)
    if not v:
        raise HopffactError(f"not an R-matrix: {v.describe()}")
    return RMatrix(host, element)


def braiding_matrix(r: RMatrix, x: HModule, y: HModule) -> MapMatrix:
    """c_{X,Y}: X⊗Y → Y⊗X, x⊗y ↦ (second leg · y) ⊗ (first leg · x)."""
    f = r.host.field
    dom = x.space.tensor(y.space)
    cod = y.space.tensor(x.space)
    out = MapMatrix.zero(f, dom, cod)
    for (a, b), c in r.element.coeffs.items():
        out = out + _cross_kron(y.action[b], x.action[a], dom, cod).scale(c)
    return out


def braiding_inverse_matrix(r: RMatrix, x: HModule, y: HModule) -> MapMatrix:
    """c_{X,Y}^{-1}: Y⊗X → X⊗Y via the inverse element acting componentwise."""
    f = r.host.field
    dom = y.space.tensor(x.space)
    cod = x.space.tensor(y.space)
    out = MapMatrix.zero(f, dom, cod)
    for (a, b), c in r.inverse.coeffs.items():
        out = out + _cross_kron(x.action[a], y.action[b], dom, cod).scale(c)
    return out


def _cross_kron(m_left: MapMatrix, m_right: MapMatrix, dom, cod) -> MapMatrix:
    """Matrix of v⊗w ↦ (m_left·w) ⊗ (m_right·v) from dom to cod."""
    k = kron_matrix(m_left, m_right)
    # reindex: dom orders (v, w); k expects (w, v)
    f = m_left.field
    dl = m_right.domain.dim  # v-range
    dw = m_left.domain.dim   # w-range
    rows = []
    for row in k.rows:
        rows.append(
            tuple(row[(j % dw) * dl + (j // dw)] for j in range(dl * dw))
        )
    return MapMatrix(f, dom, cod, rows)


def check_hexagon(r: RMatrix, x: HModule, y: HModule, z: HModule) -> Verdict:
    """Both hexagon identities on a concrete module triple."""
    f = r.host.field
    idx = MapMatrix.identity(f, x.space)
    idy = MapMatrix.identity(f, y.space)
    idz = MapMatrix.identity(f, z.space)
    xy = _tensor_of(r.host, x, y)
    yz = _tensor_of(r.host, y, z)
    lhs1 = braiding_matrix(r, xy, z)
    rhs1 = kron_matrix(braiding_matrix(r, x, z), idy) @ kron_matrix(
        idx, braiding_matrix(r, y, z)
    )
    if lhs1.rows != rhs1.rows:
        return Verdict.failed("hexagon-1", None, "c_{X⊗Y,Z} ≠ (c_XZ⊗id)(id⊗c_YZ)")
    lhs2 = braiding_matrix(r, x, yz)
    rhs2 = kron_matrix(idy, braiding_matrix(r, x, z)) @ kron_matrix(
        braiding_matrix(r, x, y), idz
    )
    if lhs2.rows != rhs2.rows:
        return Verdict.failed("hexagon-2", None, "c_{X,Y⊗Z} ≠ (id⊗c_XZ)(c_XY⊗id)")
    return Verdict.passed()


def _tensor_of(host, x, y):
    from .hopf import module_tensor

    return module_tensor(host, x, y)


class DrinfeldMap:
    """The matrix of f ↦ (f ⊗ id)(monodromy) on dual bases, monodromy kept."""

    __slots__ = ("matrix", "monodromy")

    def __init__(self, matrix: MapMatrix, monodromy: TensorElement):
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "monodromy", monodromy)

    def __setattr__(self, *a):
        raise AttributeError("DrinfeldMap is immutable")

    def rank(self) -> int:
        return self.matrix.rank()


def drinfeld_map(r: RMatrix) -> DrinfeldMap:
    """Contract functionals against the first leg of the monodromy."""
    host = r.host
    f = host.field
    mono = r.monodromy()
    n = host.dim
    rows = [[f.zero] * n for _ in range(n)]
    for (a, b), c in mono.coeffs.items():
        rows[b][a] = f.add(rows[b][a], c)
    matrix = MapMatrix(f, host.space.dual(), host.space, rows)
    return DrinfeldMap(matrix, mono)


def is_factorizable_hopf(r: RMatrix) -> bool:
    return drinfeld_map(r).matrix.rank() == r.host.dim


def is_triangular(r: RMatrix) -> bool:
    """R_21 equals the stored inverse, entrywise."""
    return r.element.swap() == r.inverse
