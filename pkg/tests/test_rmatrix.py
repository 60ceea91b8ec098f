"""R-matrix axioms, braidings, and Hopf-level factorizability."""

import pytest

from hopffact.constructions import (
    drinfeld_double_group,
    group_algebra,
    sweedler_h4,
    sweedler_r_matrix,
)
from hopffact.fields import QQ
from hopffact.groups import cyclic_group, symmetric_group
from hopffact.hopf import module_tensor, regular_module, trivial_module
from hopffact.rmatrix import (
    RMatrix,
    braiding_inverse_matrix,
    braiding_matrix,
    check_hexagon,
    check_r_matrix,
    drinfeld_map,
    is_factorizable_hopf,
    is_triangular,
    r_matrix,
    trivial_r_matrix,
)
from hopffact.tensors import TensorElement, tensor_mult, tensor_unit


def test_trivial_r_on_group_algebra_passes():
    for g in (cyclic_group(2), symmetric_group(3)):
        h, r = group_algebra(g)
        assert check_r_matrix(h, r.element)


def test_e_tensor_g_fails_first_axiom():
    # (Δ⊗id)(e⊗g) = e⊗e⊗g but R13 R23 = e⊗e⊗e
    h, _ = group_algebra(cyclic_group(2))
    cand = TensorElement(QQ, (h.space, h.space), {(0, 1): QQ.one})
    v = check_r_matrix(h, cand)
    assert not v and v.axiom == "quasitriangular-i"


def test_double_r_matrices_pass():
    for g in (cyclic_group(2), cyclic_group(3)):
        h, r = drinfeld_double_group(g)
        assert check_r_matrix(h, r.element)


def test_r_matrix_counit_consequence():
    # (ε⊗id)R = 1 and (id⊗ε)R = 1
    cases = [
        drinfeld_double_group(cyclic_group(2)),
        drinfeld_double_group(cyclic_group(3)),
        group_algebra(symmetric_group(3)),
    ]
    h4 = sweedler_h4()
    cases.append((h4, sweedler_r_matrix(h4, 1)))
    for h, r in cases:
        eps = h.coalgebra.counit
        unit = h.unit_dict()
        for leg in (0, 1):
            contracted = r.element.contract_leg(leg, eps)
            got = {i: c for (i,), c in contracted.coeffs.items()}
            assert got == unit


def test_braiding_of_unit_module_is_identity():
    h, r = drinfeld_double_group(cyclic_group(2))
    x = regular_module(h)
    triv = trivial_module(h)
    c1 = braiding_matrix(r, triv, x)
    c2 = braiding_matrix(r, x, triv)
    ident = [
        tuple(QQ.one if i == j else QQ.zero for j in range(x.dim))
        for i in range(x.dim)
    ]
    assert [tuple(row) for row in c1.rows] == ident
    assert [tuple(row) for row in c2.rows] == ident


def test_trivial_r_braiding_is_flip():
    h, r = group_algebra(cyclic_group(2))
    x = regular_module(h)
    c = braiding_matrix(r, x, x)
    n = x.dim
    for a in range(n):
        for b in range(n):
            col = a * n + b
            out = [row[col] for row in c.rows]
            expect = [QQ.zero] * (n * n)
            expect[b * n + a] = QQ.one
            assert out == expect


def test_braiding_inverse_is_inverse():
    h, r = drinfeld_double_group(cyclic_group(2))
    x = regular_module(h)
    c = braiding_matrix(r, x, x)
    cinv = braiding_inverse_matrix(r, x, x)
    assert (cinv @ c).is_identity()
    assert (c @ cinv).is_identity()


def test_hexagons_on_double_c2():
    h, r = drinfeld_double_group(cyclic_group(2))
    x = regular_module(h)
    c = braiding_matrix(r, x, x)
    assert c.domain.dim == 16
    assert check_hexagon(r, x, x, x)
    triv = trivial_module(h)
    assert check_hexagon(r, x, triv, x)


def test_double_braiding_is_monodromy_action():
    from hopffact.hopf import kron_matrix
    from hopffact.linalg import MapMatrix

    h4 = sweedler_h4()
    r = sweedler_r_matrix(h4, 1)
    x = regular_module(h4)
    y = module_tensor(h4, x, trivial_module(h4))
    c_xy = braiding_matrix(r, x, y)
    c_yx = braiding_matrix(r, y, x)
    comp = c_yx @ c_xy
    mono = r.monodromy()
    acc = MapMatrix.zero(QQ, comp.domain, comp.codomain)
    for (a, b), cv in mono.coeffs.items():
        acc = acc + kron_matrix(x.action[a], y.action[b]).scale(cv)
    assert comp == acc


def test_drinfeld_map_trivial_r_has_rank_one():
    h, r = group_algebra(symmetric_group(3))
    dm = drinfeld_map(r)
    assert dm.matrix.rank() == 1
    assert not is_factorizable_hopf(r)


def test_dim_one_hopf_is_factorizable():
    h, r = group_algebra(cyclic_group(1))
    assert is_factorizable_hopf(r)


def test_doubles_are_factorizable():
    for g in (cyclic_group(2), cyclic_group(3)):
        h, r = drinfeld_double_group(g)
        assert is_factorizable_hopf(r)
        assert drinfeld_map(r).matrix.rank() == h.dim


def test_triangularity():
    h, r = group_algebra(cyclic_group(2))
    assert is_triangular(r)
    hd, rd = drinfeld_double_group(cyclic_group(2))
    assert not is_triangular(rd)
    # any R with R21 R = 1⊗1 is triangular by definition
    h4 = sweedler_h4()
    r0 = sweedler_r_matrix(h4, 0)
    algs = [h4.algebra, h4.algebra]
    mono = tensor_mult(r0.element.swap(), r0.element, algs)
    assert mono == tensor_unit(QQ, (h4.space, h4.space), algs)
    assert is_triangular(r0)


def test_triangular_hosts_have_rank_one_drinfeld_map():
    h4 = sweedler_h4()
    for lam in ("0", "1"):
        r = sweedler_r_matrix(h4, QQ.parse(lam))
        assert drinfeld_map(r).matrix.rank() == 1


def test_mirror_r_matrix_has_same_rank():
    cases = [
        drinfeld_double_group(cyclic_group(2)),
        drinfeld_double_group(cyclic_group(3)),
        group_algebra(cyclic_group(2)),
    ]
    h4 = sweedler_h4()
    cases.append((h4, sweedler_r_matrix(h4, 1)))
    for h, r in cases:
        mirror_element = r.inverse.swap()
        assert check_r_matrix(h, mirror_element)
        mirror = RMatrix(h, mirror_element)
        assert drinfeld_map(mirror).matrix.rank() == drinfeld_map(r).matrix.rank()


def test_checked_constructor_rejects_non_r_matrix():
    h, _ = group_algebra(cyclic_group(2))
    cand = TensorElement(QQ, (h.space, h.space), {(0, 1): QQ.one})
    with pytest.raises(Exception):
        r_matrix(h, cand)
    good = r_matrix(h, trivial_r_matrix(h).element)
    assert is_triangular(good)
