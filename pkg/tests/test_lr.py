import pytest
from hypothesis import given, settings, strategies as st

from sodverify.lr import WeightMultiset, hom_decompose, lr_coefficient, lr_expand, tensor_decompose
from sodverify.partitions import Partition, enumerate_box
from sodverify.weights import GLWeight, dim

from oracles import all_partitions, schur_product_jacobi_trudi

P = Partition
W = GLWeight


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        ((1,), (1,), (2,), 1),
        ((1,), (1,), (1, 1), 1),
        ((2, 1), (2, 1), (3, 2, 1), 2),
        ((2, 1), (1,), (2, 1), 0),  # size mismatch
        ((3,), (1,), (2, 2), 0),  # a not inside c
    ],
)
def test_lr_coefficient_examples(a, b, c, expected):
    assert lr_coefficient(P(a), P(b), P(c)) == expected


def test_lr_expand_matches_jacobi_trudi_small():
    for m in range(5):
        for n in range(5):
            for a in all_partitions(m):
                for b in all_partitions(n):
                    assert lr_expand(a, b) == schur_product_jacobi_trudi(a, b), (a, b)


def test_tensor_examples():
    assert tensor_decompose(W((1,)), W((1,))).as_dict() == {(2,): 1}
    assert tensor_decompose(W((1, 0)), W((1, 0))).as_dict() == {(2, 0): 1, (1, 1): 1}
    assert tensor_decompose(W((1, 1)), W((2, 0))).as_dict() == {(3, 1): 1}


def test_tensor_rank_mismatch():
    with pytest.raises(ValueError):
        tensor_decompose(W((1,)), W((1, 0)))


def test_hom_examples():
    assert hom_decompose(P((1, 0)), P((1, 0)), 2).as_dict() == {(1, -1): 1, (0, 0): 1}
    assert hom_decompose(P((0,)), P((1,)), 1).as_dict() == {(1,): 1}
    assert hom_decompose(P((1, 1)), P((2, 0)), 2).as_dict() == {(1, -1): 1}
    with pytest.raises(ValueError):
        hom_decompose(P((1, 1, 1)), P((0,)), 2)


def test_hom_dimension_audit_example():
    ms = hom_decompose(P((1, 0)), P((1, 0)), 2)
    assert ms.total_dimension() == 2 * 2 == dim(W((1, -1))) + dim(W((0, 0)))


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("b", [1, 2, 3])
def test_dimension_audit_exhaustive(k, b):
    box = enumerate_box(k, b)
    for u in box:
        for v in box:
            ms = tensor_decompose(W(u.parts), W(v.parts))
            assert ms.total_dimension() == dim(u) * dim(v)
            hm = hom_decompose(u, v, k)
            assert hm.total_dimension() == dim(u) * dim(v)
            # entry-range bound for box partitions
            assert all(-b <= e <= b for w, _ in hm.items() for e in w)
        assert hom_decompose(u, u, k)[W.zero(k)] == 1


@st.composite
def small_partition(draw):
    m = draw(st.integers(0, 5))
    parts = all_partitions(m)
    return P(draw(st.sampled_from(parts)))


@settings(max_examples=60, deadline=None)
@given(small_partition(), small_partition())
def test_lr_symmetric(a, b):
    for c in all_partitions(sum(a) + sum(b)):
        assert lr_coefficient(a, b, P(c)) == lr_coefficient(b, a, P(c))


def test_mixed_sign_tensor():
    # (0,-1) (x) (1,0) = End(std) = sl_2 + trivial
    ms = tensor_decompose(W((0, -1)), W((1, 0)))
    assert ms.as_dict() == {(1, -1): 1, (0, 0): 1}


def test_weight_multiset_validation_and_json():
    with pytest.raises(ValueError):
        WeightMultiset(2, {W((1,)): 1})
    with pytest.raises(ValueError):
        WeightMultiset(1, {W((1,)): 0})
    ms = tensor_decompose(W((1, 0)), W((1, 0)))
    assert ms.to_json() == [{"weight": [2, 0], "mult": 1}, {"weight": [1, 1], "mult": 1}]
