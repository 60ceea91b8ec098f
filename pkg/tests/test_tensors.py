"""Sparse tensor elements: embeddings, slotwise products, inversion."""

import pytest

from hopffact.constructions import group_algebra
from hopffact.errors import HopffactError, NotInvertible, SpaceMismatch
from hopffact.fields import GF, QQ
from hopffact.groups import cyclic_group
from hopffact.tensors import (
    TensorElement,
    leg_embed,
    tensor_invert,
    tensor_mult,
    tensor_unit,
)


@pytest.fixture(scope="module")
def kc2():
    h, _ = group_algebra(cyclic_group(2))
    return h


def elt(h, coeffs, legs=2):
    return TensorElement(h.field, (h.space,) * legs, coeffs)


def test_leg_embed_r13(kc2):
    # R ∈ H⊗H into slots (0, 2) of H⊗H⊗H places units in the middle slot
    h = kc2
    one = h.field.one
    r = elt(h, {(0, 1): one})  # e ⊗ g
    algs = [h.algebra] * 3
    r13 = leg_embed(r, (0, 2), (h.space,) * 3, algs)
    assert r13.coeffs == {(0, 0, 1): one}


def test_leg_embed_unit_is_unit(kc2):
    h = kc2
    algs = [h.algebra] * 2
    u = tensor_unit(h.field, (h.space, h.space), algs)
    embedded = leg_embed(u, (0, 1), (h.space, h.space), algs)
    assert embedded == u


def test_leg_embed_multi_term_unit():
    # the unit of (kC2)* has two nonzero coordinates; embedding must expand
    from hopffact.constructions import dual_group_algebra

    hd = dual_group_algebra(cyclic_group(2))
    one = hd.field.one
    t = TensorElement(hd.field, (hd.space,), {(0,): one})
    out = leg_embed(t, (0,), (hd.space, hd.space), [hd.algebra, hd.algebra])
    assert out.coeffs == {(0, 0): one, (0, 1): one}


def test_leg_embed_errors(kc2):
    h = kc2
    r = elt(h, {(0, 1): h.field.one})
    with pytest.raises(HopffactError):
        leg_embed(r, (2, 0), (h.space,) * 3, [h.algebra] * 3)
    with pytest.raises(SpaceMismatch):
        leg_embed(r, (0,), (h.space,) * 3, [h.algebra] * 3)


def test_tensor_mult_unit_law(kc2):
    h = kc2
    algs = [h.algebra, h.algebra]
    u = tensor_unit(h.field, (h.space, h.space), algs)
    t = elt(h, {(0, 1): h.field.one, (1, 1): h.field.parse(3)})
    assert tensor_mult(u, t, algs) == t
    assert tensor_mult(t, u, algs) == t


def test_tensor_mult_group_relation(kc2):
    # (e⊗g)(e⊗g) = e⊗e since g² = e
    h = kc2
    algs = [h.algebra, h.algebra]
    t = elt(h, {(0, 1): h.field.one})
    sq = tensor_mult(t, t, algs)
    assert sq.coeffs == {(0, 0): h.field.one}


def test_tensor_invert_self_inverse(kc2):
    h = kc2
    algs = [h.algebra, h.algebra]
    t = elt(h, {(0, 1): h.field.one})  # e ⊗ g
    assert tensor_invert(t, algs) == t
    u = tensor_unit(h.field, (h.space, h.space), algs)
    assert tensor_invert(u, algs) == u


def test_tensor_invert_zero_divisor_fails_everywhere():
    # e+g is a zero divisor in kC2 over every field: (e+g)(e-g) = 0
    for field in (QQ, GF(2)):
        h, _ = group_algebra(cyclic_group(2), field)
        algs = [h.algebra, h.algebra]
        t = TensorElement(field, (h.space, h.space),
                          {(0, 0): field.one, (0, 1): field.one})
        with pytest.raises(NotInvertible):
            tensor_invert(t, algs)


def test_tensor_invert_field_sensitivity():
    # e ⊗ (e + 2g): eigenvalues 1 ± 2, invertible over Q, singular over GF(3)
    hq, _ = group_algebra(cyclic_group(2), QQ)
    t = TensorElement(QQ, (hq.space, hq.space),
                      {(0, 0): QQ.one, (0, 1): QQ.parse(2)})
    inv = tensor_invert(t, [hq.algebra, hq.algebra])
    assert tensor_mult(inv, t, [hq.algebra, hq.algebra]) == tensor_unit(
        QQ, (hq.space, hq.space), [hq.algebra, hq.algebra]
    )
    f3 = GF(3)
    h3, _ = group_algebra(cyclic_group(2), f3)
    t3 = TensorElement(f3, (h3.space, h3.space),
                       {(0, 0): f3.one, (0, 1): f3.parse(2)})
    with pytest.raises(NotInvertible):
        tensor_invert(t3, [h3.algebra, h3.algebra])


def test_leg_embed_commutes_with_tensor_mult(kc2):
    h = kc2
    algs2 = [h.algebra] * 2
    algs3 = [h.algebra] * 3
    a = elt(h, {(0, 1): h.field.one, (1, 0): h.field.parse(2)})
    b = elt(h, {(1, 1): h.field.one})
    for slots in ((0, 1), (0, 2), (1, 2)):
        lhs = leg_embed(tensor_mult(a, b, algs2), slots, (h.space,) * 3, algs3)
        rhs = tensor_mult(
            leg_embed(a, slots, (h.space,) * 3, algs3),
            leg_embed(b, slots, (h.space,) * 3, algs3),
            algs3,
        )
        assert lhs == rhs


def test_permute_and_contract(kc2):
    h = kc2
    one = h.field.one
    t = elt(h, {(0, 1): one})
    assert t.swap().coeffs == {(1, 0): one}
    f_e = (one, h.field.zero)  # the functional dual to basis 0
    c = t.contract_leg(0, f_e)
    assert c.coeffs == {(1,): one}
    assert t.contract_leg(1, f_e).is_zero()


def test_no_zero_coefficients_stored(kc2):
    h = kc2
    t = elt(h, {(0, 0): h.field.zero, (0, 1): h.field.one})
    assert (0, 0) not in t.coeffs
    s = t - t
    assert s.is_zero()
