import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compound_magic import (
    BlockGrid,
    IntSquareMatrix,
    addition_table,
    block_compose,
    block_decompose,
    kronecker,
    ones_matrix,
)
from compound_magic.construction import M3, catalog
from compound_magic.errors import InvalidOrderError, ShapeError


def square(n, lo=-50, hi=50):
    return st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n).map(
        lambda xs: IntSquareMatrix.from_entries(n, xs)
    )


small_square = st.integers(1, 3).flatmap(square)


def test_construct_from_lists_and_array():
    a = IntSquareMatrix([[1, 2], [3, 4]])
    b = IntSquareMatrix(np.array([[1, 2], [3, 4]]))
    assert a == b
    assert hash(a) == hash(b)
    assert a[1, 0] == 3
    assert a.entries == (1, 2, 3, 4)


def test_array_is_read_only():
    with pytest.raises(ValueError):
        M3.array[0, 0] = 0


@pytest.mark.parametrize("rows", [[], [[1, 2]], [[1, 2], [3]]])
def test_non_square_rejected(rows):
    with pytest.raises((ShapeError, ValueError)):
        IntSquareMatrix(rows)


def test_from_entries_checks_length():
    with pytest.raises(ShapeError):
        IntSquareMatrix.from_entries(2, [1, 2, 3])
    with pytest.raises(InvalidOrderError):
        IntSquareMatrix.from_entries(0, [])


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        IntSquareMatrix(np.array([[1.5]]))


def test_big_integers_stay_exact():
    big = ones_matrix(2) * (2**62)
    doubled = big + big
    assert doubled[0, 0] == 2**63
    assert (doubled * 2**40)[1, 1] == 2**103
    assert kronecker(big, big)[0, 0] == 2**124


def test_gram_is_exact():
    g = M3.gram()
    assert g.tolist() == [[101, 71, 53], [71, 83, 71], [53, 71, 101]]


def test_ones_and_addition_table():
    assert ones_matrix(3).entries == (1,) * 9
    assert addition_table(3).tolist() == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    with pytest.raises(InvalidOrderError):
        addition_table(0)


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_addition_table_row_difference(n):
    a = addition_table(n).array
    assert (np.diff(a, axis=0) == n).all()


def test_kronecker_scalar_case():
    assert kronecker(IntSquareMatrix([[2]]), M3) == M3 * 2


def test_kronecker_offset_block():
    from compound_magic.construction import frierson_block

    top_left = kronecker(frierson_block((27, 9)), ones_matrix(3))
    assert block_decompose(top_left, 3)[0, 0] == ones_matrix(3) * 63


@settings(max_examples=40, deadline=None)
@given(small_square, small_square, small_square)
def test_kronecker_associative(a, b, c):
    assert kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([1, 2, 3, 6]).flatmap(lambda m: st.tuples(st.just(m), square(6))))
def test_decompose_compose_round_trip(args):
    m, mat = args
    grid = block_decompose(mat, m)
    assert grid.m == m and grid.block_order == 6 // m
    assert block_compose(grid) == mat
    assert block_decompose(block_compose(grid), m) == grid


def test_compose_single_block():
    assert block_compose(BlockGrid(((M3,),))) == M3


def test_decompose_center_block_of_t9a():
    t9a = catalog("t9a")
    assert block_decompose(t9a, 3)[1, 1] == M3 + 36


def test_decompose_f27a_top_middle_is_t9a():
    assert block_decompose(catalog("f27a"), 3)[0, 1] == catalog("t9a")


def test_decompose_non_divisor():
    with pytest.raises(ShapeError):
        block_decompose(M3, 2)


def test_block_grid_validation():
    with pytest.raises(ShapeError):
        BlockGrid(((M3, M3),))
    with pytest.raises(ShapeError):
        BlockGrid(((M3, ones_matrix(2)), (M3, M3)))


@settings(max_examples=30, deadline=None)
@given(small_square, st.integers(-1000, 1000))
def test_arithmetic_identities(a, k):
    assert (a + k) - k == a
    assert a - a == a * 0
    assert -(-a) == a
    assert a.T.T == a
