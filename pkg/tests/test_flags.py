from itertools import combinations
from math import comb, factorial, prod

import pytest

from sodverify.decomposition import blocks, verify_semiorthogonality
from sodverify.flags import flag_blocks, flag_rank_audit, relative_semiorth_check, verify_flag


def test_two_step_flag():
    bl = flag_blocks([1, 2], 3)
    assert len(bl) == 6
    assert [tuple(a.parts for a in b.alphas) for b in bl] == [
        ((1,), (1, 1)), ((1,), (1, 0)), ((1,), (0, 0)),
        ((0,), (1, 1)), ((0,), (1, 0)), ((0,), (0, 0)),
    ]
    assert [b.twist for b in bl] == [3, 2, 1, 2, 1, 0]


def test_full_flag_on_four():
    assert len(flag_blocks([1, 2, 3], 4)) == 24


@pytest.mark.parametrize("k, n", [(1, 2), (2, 4), (3, 6), (2, 5)])
def test_single_level_matches_grassmannian(k, n):
    fb = flag_blocks([k], n, period=3)
    gb = blocks(k, n, period=3)
    assert [(f.alphas[0], f.position, f.twist) for f in fb] == [(g.alpha, g.position, g.twist) for g in gb]


@pytest.mark.parametrize(
    "ks, n, expected", [([1, 2], 3, 6), ([2], 5, 10), ([1, 3], 4, 12)]
)
def test_flag_rank_audit(ks, n, expected):
    a = flag_rank_audit(ks, n)
    assert (a.count, a.expected, a.equal) == (expected, expected, True)


@pytest.mark.parametrize("n", range(2, 7))
def test_flag_counts_all(n):
    for m in range(1, n):
        for ks in combinations(range(1, n), m):
            a = flag_rank_audit(ks, n)
            assert a.equal
            assert a.expected == prod(comb(t, k) for k, t in zip(ks, list(ks[1:]) + [n]))
    assert flag_rank_audit(list(range(1, n)), n).count == factorial(n)


def test_bad_flags():
    with pytest.raises(ValueError):
        flag_blocks([2, 1], 4)
    with pytest.raises(ValueError):
        flag_blocks([1, 4], 4)
    with pytest.raises(ValueError):
        flag_blocks([0, 1], 4)
    with pytest.raises(ValueError):
        relative_semiorth_check([1, 2], 3, 3)


def test_relative_levels():
    r1 = relative_semiorth_check([1, 2], 3, 1)
    r2 = relative_semiorth_check([1, 2], 3, 2)
    assert (r1.k, r1.n, r1.verdict) == (1, 2, "pass")
    assert (r2.k, r2.n, r2.verdict) == (2, 3, "pass")
    r = relative_semiorth_check([2], 5, 1)
    assert r.to_json() == verify_semiorthogonality(2, 5).to_json()


@pytest.mark.parametrize("n", range(2, 6))
def test_flag_verdict_is_conjunction(n):
    for m in range(1, n):
        for ks in combinations(range(1, n), m):
            rep = verify_flag(ks, n)
            assert rep.passed == all(r.passed for r in rep.levels)
            assert rep.passed
    assert verify_flag([1, 2], 3, order="asc").verdict == "fail"


def test_flag_json():
    js = verify_flag([1, 2], 3).to_json()
    assert js["ks"] == [1, 2] and js["n"] == 3
    assert js["blocks"][0] == {"alphas": [[1], [1, 1]], "position": 0, "twist": 3}
    assert [lv["verdict"] for lv in js["levels"]] == ["pass", "pass"]
