"""Exact linear algebra: eliminations, kernels, solves, spans."""

import random
from fractions import Fraction as Fr

import pytest

from hopffact.errors import HopffactError, NotInvertible, SpaceMismatch
from hopffact.fields import GF, QQ
from hopffact.linalg import (
    LINALG_STATS,
    BasedSpace,
    GFBatchSpan,
    IncrementalSpan,
    MapMatrix,
    kernel_basis,
    solve_columns,
    space,
)


def mat(field, rows, dom=None, cod=None):
    rows = [tuple(field.parse(x) for x in r) for r in rows]
    m = len(rows[0]) if rows else 0
    dom = dom or space("d", m)
    cod = cod or space("c", len(rows))
    return MapMatrix(field, dom, cod, rows)


def test_kernel_identity_is_empty():
    assert mat(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).kernel() == []


def test_kernel_zero_map_is_standard_basis():
    ker = mat(QQ, [[0, 0, 0], [0, 0, 0]]).kernel()
    assert ker == [
        (Fr(1), Fr(0), Fr(0)),
        (Fr(0), Fr(1), Fr(0)),
        (Fr(0), Fr(0), Fr(1)),
    ]


def test_kernel_rank_one_matrix():
    # hand Gaussian elimination: [[1,1],[1,1]] -> row echelon [[1,1]],
    # free column 1, kernel spanned by (-1, 1) ∝ (1, -1)
    ker = mat(QQ, [[1, 1], [1, 1]]).kernel()
    assert len(ker) == 1
    v = ker[0]
    assert v[0] == -v[1] and v[1] != 0


def test_rank_equals_transpose_rank():
    rng = random.Random(7)
    for field in (QQ, GF(101)):
        for _ in range(12):
            rows = [
                [field.parse(rng.randint(-4, 4)) for _ in range(5)]
                for _ in range(3)
            ]
            m = mat(field, rows)
            assert m.rank() == m.transpose().rank()


def test_qq_and_gf_ranks_agree_on_small_integer_matrices():
    # random integer matrices with entries in [-3, 3]: over GF(101) there is
    # no accidental rank drop for determinants this small
    rng = random.Random(123)
    for _ in range(20):
        rows = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
        mq = mat(QQ, rows)
        mp = mat(GF(101), rows)
        assert mq.rank() == mp.rank()
        assert len(mq.kernel()) == len(mp.kernel())


def test_kernel_vectors_are_in_kernel():
    rng = random.Random(99)
    for field in (QQ, GF(101)):
        for _ in range(10):
            rows = [
                [field.parse(rng.randint(-5, 5)) for _ in range(6)]
                for _ in range(4)
            ]
            m = mat(field, rows)
            for v in m.kernel():
                assert all(field.is_zero(x) for x in m.apply(v))


def test_solve_exact():
    m = mat(QQ, [[2, 1, 0], [0, 1, 4], [1, 0, 1]])
    sol = m.solve((QQ.parse(1), QQ.parse(2), QQ.parse(3)))
    assert sol == (Fr(11, 6), Fr(-8, 3), Fr(7, 6))
    with pytest.raises(HopffactError):
        mat(QQ, [[1, 1], [1, 1]]).solve((QQ.parse(0), QQ.parse(1)))


def test_solve_gf_matches_q():
    rng = random.Random(5)
    for _ in range(10):
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        mq = mat(QQ, rows)
        try:
            inv = mq.inverse()
        except NotInvertible:
            continue
        rhs = tuple(QQ.parse(rng.randint(-3, 3)) for _ in range(3))
        solq = mq.solve(rhs)
        mp = mat(GF(101), rows)
        solp = mp.solve(tuple(GF(101).parse(int(x * 1)) for x in rhs) if all(
            Fr(x).denominator == 1 for x in rhs) else rhs)
        for a, b in zip(solq, solp):
            assert GF(101).scalar(a) == b
        del inv


def test_inverse_round_trip_and_singular():
    m = mat(QQ, [[1, 2], [3, 4]])
    inv = m.inverse()
    assert (inv @ m).is_identity()
    assert (m @ inv).is_identity()
    with pytest.raises(NotInvertible):
        mat(QQ, [[1, 1], [1, 1]]).inverse()
    with pytest.raises(NotInvertible):
        mat(GF(5), [[1, 1], [1, 1]]).inverse()


def test_composition_requires_matching_labels():
    a = mat(QQ, [[1, 0], [0, 1]])
    b = MapMatrix(QQ, space("x", 2), space("other", 2), a.rows)
    with pytest.raises(SpaceMismatch):
        a.compose(b)


def test_mixed_field_composition_rejected():
    from hopffact.errors import FieldMismatch

    dom = space("d", 2)
    a = MapMatrix(QQ, dom, dom, [(Fr(1), Fr(0)), (Fr(0), Fr(1))])
    b = MapMatrix(GF(5), dom, dom, [(1, 0), (0, 1)])
    with pytest.raises(FieldMismatch):
        a.compose(b)
    with pytest.raises(FieldMismatch):
        a + b


def test_rank_nullity_counter_increases():
    before = LINALG_STATS["rank_nullity_checks"]
    kernel_basis([(Fr(1), Fr(1))], 2, QQ)
    kernel_basis([(1, 1)], 2, GF(7))
    assert LINALG_STATS["rank_nullity_checks"] == before + 2


def test_based_space_label_identity():
    s1 = BasedSpace(("a", "b"))
    s2 = BasedSpace(("a", "b"))
    s3 = BasedSpace(("a", "c"))
    assert s1 == s2 and s1 != s3
    with pytest.raises(HopffactError):
        BasedSpace(("a", "a"))
    assert s1.tensor(s3).labels == ("a⊗a", "a⊗c", "b⊗a", "b⊗c")


def test_incremental_span_q_and_gf():
    for field in (QQ, GF(7)):
        sp = IncrementalSpan(field, 3)
        one = field.one
        zero = field.zero
        assert sp.add((one, zero, one))
        assert not sp.add((field.add(one, one), zero, field.add(one, one)))
        assert sp.add((zero, one, zero))
        assert sp.dim == 2
        assert sp.contains((one, one, one))
        assert not sp.contains((one, zero, zero))


def test_gf_batch_span():
    import numpy as np

    span = GFBatchSpan(101, 4)
    batch = np.array([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1]], dtype=np.float64)
    assert span.add_batch(batch) == 2
    assert span.dim == 2
    assert span.add_batch(np.array([[1, 0, 0, 0]], dtype=np.float64)) == 1
    assert span.add_batch(batch) == 0


def test_solve_columns_multiple_rhs():
    rows = [(Fr(1), Fr(2)), (Fr(3), Fr(5))]
    sols = solve_columns(rows, [(Fr(1), Fr(0)), (Fr(0), Fr(1))], 2, QQ)
    assert sols[0] == (Fr(-5), Fr(3))
    assert sols[1] == (Fr(2), Fr(-1))
