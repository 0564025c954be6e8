import numpy as np
import pytest

from conftest import rand_array, rand_vector
from oracles import recombine_direct

from cfft import (
    InterleavedSet,
    NdFactors,
    Tensor,
    Vector,
    arrays_equal,
    choose_factors_nd,
    deinterleave_1d,
    dft_naive,
    dft_nd,
    interleave_1d,
    interleave_nd,
    recombine_1d,
    recombine_nd,
    sub_dft,
)
from cfft.errors import IndivisibleLength, NoFactorization, ShapeMismatch


def test_interleave_examples(C):
    x = Vector([10, 11, 12, 13], C)
    parts = interleave_1d(x, 2)
    assert arrays_equal(C, parts.parts, [[10, 12], [11, 13]])
    assert arrays_equal(C, interleave_1d(x, 1).parts, [[10, 11, 12, 13]])
    six = Vector([1, 2, 3, 4, 5, 6], C)
    assert arrays_equal(C, interleave_1d(six, 3).parts, [[1, 4], [2, 5], [3, 6]])


def test_interleave_is_a_bijection(GF):
    rng = np.random.default_rng(21)
    for s, m in ((12, 3), (64, 8), (30, 5)):
        x = rand_vector(GF, s, rng)
        parts = interleave_1d(x, m)
        assert sorted(parts.parts.reshape(-1).tolist()) == sorted(x.elems.tolist())
        assert np.array_equal(deinterleave_1d(parts).elems, x.elems)


def test_indivisible_length(C):
    with pytest.raises(IndivisibleLength):
        interleave_1d(Vector([1, 2, 3, 4], C), 3)


def test_sub_dft_examples(C):
    parts = InterleavedSet([[1, 3], [2, 4]], 4, 2, C)
    got = sub_dft(parts)
    assert np.array_equal(got.parts, np.array([[4, -2], [6, -2]], dtype=complex))
    zeros = InterleavedSet(np.zeros((2, 2)), 4, 2, C)
    assert np.array_equal(sub_dft(zeros).parts, np.zeros((2, 2), dtype=complex))


def test_sub_dft_m1_is_plain_dft(GF97):
    rng = np.random.default_rng(22)
    x = rand_vector(GF97, 12, rng)
    got = sub_dft(interleave_1d(x, 1))
    assert np.array_equal(got.parts[0], dft_naive(x).elems)


def test_recombine_example(C):
    c = InterleavedSet([[4, -2], [6, -2]], 4, 2, C)
    got = recombine_1d(c)
    assert np.array_equal(got.elems, np.array([10, -2 + 2j, -2, -2 - 2j]))
    assert np.array_equal(got.elems, dft_naive(Vector([1, 2, 3, 4], C)).elems)


def test_recombine_trivia(C):
    single = InterleavedSet([[5, 6, 7]], 3, 1, C)
    assert np.array_equal(recombine_1d(single).elems, np.array([5, 6, 7], dtype=complex))
    zeros = InterleavedSet(np.zeros((2, 3)), 6, 2, C)
    assert np.array_equal(recombine_1d(zeros).elems, np.zeros(6, dtype=complex))


@pytest.mark.parametrize("field_name,s,m", [
    ("C", 8, 2), ("C", 60, 5), ("C", 256, 8),
    ("GF", 64, 4), ("GF", 256, 16), ("GF97", 96, 12),
])
def test_split_transform_recombine_equals_dft(field_name, s, m, request):
    field = request.getfixturevalue(field_name)
    rng = np.random.default_rng(s * m)
    x = rand_vector(field, s, rng)
    got = recombine_1d(sub_dft(interleave_1d(x, m)))
    assert arrays_equal(field, got.elems, dft_naive(x).elems)


def test_both_recombination_forms_agree(C, GF):
    rng = np.random.default_rng(23)
    for field, s, m in ((C, 24, 4), (GF, 32, 8)):
        x = rand_vector(field, s, rng)
        c = sub_dft(interleave_1d(x, m))
        direct = recombine_direct([row for row in c.parts], s, m, field)
        assert arrays_equal(field, recombine_1d(c).elems, direct)


def test_metadata_validation(C):
    with pytest.raises(ShapeMismatch):
        InterleavedSet(np.zeros((2, 3)), 8, 2, C)  # 8/2 != 3
    with pytest.raises(ShapeMismatch):
        InterleavedSet(np.zeros((2, 2)), 5, 2, C)  # 2 does not divide 5


def test_choose_factors_examples():
    assert choose_factors_nd((4, 4), 4).factors == (4, 1)
    assert choose_factors_nd((4, 4), 1).factors == (1, 1)
    assert choose_factors_nd((2, 3), 6).factors == (2, 3)
    assert choose_factors_nd((4, 9), 6).factors == (2, 3)
    with pytest.raises(NoFactorization):
        choose_factors_nd((2, 3), 4)  # 4 does not divide 6


def test_interleave_nd_degenerate_axis_matches_1d(C):
    rng = np.random.default_rng(24)
    arr = rand_array(C, (4, 1), rng)
    parts = interleave_nd(Tensor(arr, C), NdFactors((2, 1)))
    flat = interleave_1d(Vector(arr[:, 0], C), 2)
    for i in range(2):
        assert np.array_equal(parts[i].elems[:, 0], flat.parts[i])


def test_interleave_nd_identity_and_indexing(GF):
    rng = np.random.default_rng(25)
    arr = rand_array(GF, (4, 6), rng)
    t = Tensor(arr, GF)
    only = interleave_nd(t, NdFactors((1, 1)))
    assert len(only) == 1 and np.array_equal(only[0].elems, arr)

    iota = Tensor(np.arange(16).reshape(4, 4), GF)
    parts = interleave_nd(iota, NdFactors((2, 2)))
    # part for index tuple (1, 0) sits at row-major position 1*2+0 = 2
    assert int(parts[2].elems[1, 1]) == int(iota.elems[3, 2])
    # full index law: part (i0,i1) element (j0,j1) = t[i0+2*j0, i1+2*j1]
    for i0 in range(2):
        for i1 in range(2):
            part = parts[i0 * 2 + i1].elems
            for j0 in range(2):
                for j1 in range(2):
                    assert part[j0, j1] == iota.elems[i0 + 2 * j0, i1 + 2 * j1]


def test_interleave_nd_shape_mismatch(C):
    with pytest.raises(ShapeMismatch):
        interleave_nd(Tensor(np.zeros((4, 4)), C), NdFactors((3, 1)))


def test_recombine_nd_trivia(C):
    rng = np.random.default_rng(26)
    arr = rand_array(C, (4, 6), rng)
    t = Tensor(arr, C)
    out = recombine_nd([t], (4, 6), NdFactors((1, 1)))
    assert np.array_equal(out.elems, arr)


def test_recombine_nd_collapses_to_1d(C):
    rng = np.random.default_rng(27)
    arr = rand_array(C, (8,), rng)
    x = Vector(arr, C)
    c = sub_dft(interleave_1d(x, 2))
    nd = recombine_nd([Tensor(c.parts[0], C), Tensor(c.parts[1], C)], (8,), NdFactors((2,)))
    assert np.array_equal(nd.elems, recombine_1d(c).elems)


@pytest.mark.parametrize("field_name,shape,factors", [
    ("GF", (4, 4), (2, 2)),
    ("GF", (8, 4), (4, 1)),
    ("GF", (2, 4, 8), (2, 2, 2)),
    ("C", (6, 4), (3, 2)),
    ("C", (4, 4), (1, 4)),
])
def test_nd_pipeline_equals_dft_nd(field_name, shape, factors, request):
    field = request.getfixturevalue(field_name)
    rng = np.random.default_rng(sum(shape))
    t = Tensor(rand_array(field, shape, rng), field)
    parts = interleave_nd(t, NdFactors(factors))
    transformed = [dft_nd(p) for p in parts]
    got = recombine_nd(transformed, shape, NdFactors(factors))
    assert arrays_equal(field, got.elems, dft_nd(t).elems)


def test_nd_pipeline_all_factorizations_small(GF):
    rng = np.random.default_rng(28)
    shape = (4, 4)
    t = Tensor(rand_array(GF, shape, rng), GF)
    want = dft_nd(t).elems
    for f0 in (1, 2, 4):
        for f1 in (1, 2, 4):
            factors = NdFactors((f0, f1))
            parts = interleave_nd(t, factors)
            got = recombine_nd([dft_nd(p) for p in parts], shape, factors)
            assert np.array_equal(got.elems, want), (f0, f1)


def test_recombine_nd_validation(C):
    with pytest.raises(ShapeMismatch):
        recombine_nd([Tensor(np.zeros((2, 2)), C)], (4, 4), NdFactors((2, 2)))
    bad = [Tensor(np.zeros((2, 3)), C)] * 4
    with pytest.raises(ShapeMismatch):
        recombine_nd(bad, (4, 4), NdFactors((2, 2)))
