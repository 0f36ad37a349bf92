from math import comb

import pytest

from sodverify.decomposition import (
    blocks,
    diagonal_resolution_summary,
    k_rank_audit,
    verify_semiorthogonality,
)
from sodverify.partitions import Partition, lex_compare

P = Partition


def test_blocks_examples():
    bl = blocks(1, 2)
    assert [(b.alpha.parts, b.twist, b.position) for b in bl] == [((1,), 1, 0), ((0,), 0, 1)]
    assert [b.alpha.parts for b in blocks(2, 4)] == [(2, 2), (2, 1), (2, 0), (1, 1), (1, 0), (0, 0)]
    assert [b.alpha.parts for b in blocks(1, 5)] == [(4,), (3,), (2,), (1,), (0,)]


def test_blocks_period_and_order():
    assert [b.twist for b in blocks(2, 4, period=2)] == [0, 1, 0, 0, 1, 0]
    assert [b.alpha.parts for b in blocks(1, 3, order="asc")] == [(0,), (1,), (2,)]
    with pytest.raises(ValueError):
        blocks(1, 3, order="sideways")
    with pytest.raises(ValueError):
        blocks(3, 3)


def test_block_positions_consistent_with_lex():
    bl = blocks(3, 6)
    for x in bl:
        for y in bl:
            assert (x.position < y.position) == (lex_compare(x.alpha, y.alpha) == 1)


def test_p1_passes():
    rep = verify_semiorthogonality(1, 2)
    assert rep.verdict == "pass"
    assert rep.matrix[(1, 0)].is_acyclic  # Hom(O, O(-1))


def test_gr24():
    rep = verify_semiorthogonality(2, 4)
    assert rep.passed and rep.required_vanishings == 15
    assert rep.exceptional
    assert (P((1, 0)), P((0, 0))) in rep.informational
    i = [b.alpha for b in rep.blocks].index(P((1, 0)))
    j = [b.alpha for b in rep.blocks].index(P((0, 0)))
    [s] = rep.matrix[(i, j)].nonzero()
    assert (s.result.degree, s.result.dimension) == (0, 4)


def test_ascending_order_fails_on_p1():
    rep = verify_semiorthogonality(1, 2, order="asc")
    assert rep.verdict == "fail"
    assert rep.violations == [(P((1,)), P((0,)))]
    i, j = 1, 0
    [s] = rep.matrix[(i, j)].nonzero()
    assert (s.result.degree, s.result.dimension) == (0, 2)  # H^0(O(1))


@pytest.mark.parametrize("n", range(2, 6))
def test_relabeling_symmetry(n):
    for k in range(1, n):
        a = verify_semiorthogonality(k, n)
        b = verify_semiorthogonality(k, n, order="asc", reverse_hom=True)
        assert a.verdict == b.verdict == "pass"
        assert set(a.informational) == set(b.informational)
        c = verify_semiorthogonality(k, n, order="asc")
        d = verify_semiorthogonality(k, n, reverse_hom=True)
        assert c.verdict == d.verdict
        assert set(c.violations) == set(d.violations)


@pytest.mark.parametrize("k, n, expected", [(2, 4, 6), (1, 7, 7), (3, 6, 20)])
def test_rank_audit(k, n, expected):
    audit = k_rank_audit(k, n)
    assert (audit.block_count, audit.expected, audit.equal) == (expected, expected, True)


@pytest.mark.parametrize("k, n, length, count", [(1, 2, 1, 2), (2, 4, 4, 6), (2, 5, 6, 10)])
def test_diagonal_summary(k, n, length, count):
    s = diagonal_resolution_summary(k, n)
    assert (s.length, s.generator_count, s.bijection) == (length, count, True)
    assert sum(len(t.pairs) for t in s.terms) == comb(n, k)


def test_report_json_shape():
    js = verify_semiorthogonality(1, 2, order="asc").to_json()
    assert js["verdict"] == "fail"
    assert js["violations"] == [[[1], [0]]]
    assert len(js["matrix"]) == 4
    assert {"source", "target", "alpha", "alpha_prime", "acyclic", "summands"} <= set(js["matrix"][0])
    assert "generation" in js["note"]
