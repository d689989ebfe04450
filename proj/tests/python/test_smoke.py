import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import retword

TRIBONACCI = "a->ab;b->ac;c->a"
EX44 = "a->aab;b->acb;c->ba"


def fixed_point(rules, n):
    images = dict(r.split("->") for r in rules.split(";"))
    w = "a"
    while len(w) < n:
        w = "".join(images[c] for c in w)
    return w


def brute_returns(x, u):
    starts = [i for i in range(len(x) - len(u) + 1) if x.startswith(u, i)]
    found = {x[i:j] for i, j in zip(starts, starts[1:])}
    return sorted(found, key=lambda w: (len(w), w))


def test_language_and_returns():
    s = retword.Shift(TRIBONACCI)
    assert s.language(2) == ["aa", "ab", "ac", "ba", "ca"]
    assert s.returns("aba") == ["ab", "aba", "abac"]
    assert s.return_group_rank("aba") == 3
    assert not s.is_periodic()
    assert s.point_prefix(7) == "abacaba"


@pytest.mark.parametrize("rules", [TRIBONACCI, EX44])
def test_returns_match_brute_force(rules):
    s = retword.Shift(rules)
    x = fixed_point(rules, 50000)
    for n in range(1, 5):
        for u in s.language(n):
            assert s.returns(u) == brute_returns(x, u)


def test_derive_and_stability():
    s = retword.Shift(EX44)
    d = s.derive()
    assert (d["i"], d["j"]) == (2, 3)
    assert d["psi"] == "1->aab; 2->aabacb; 3->aabb; 4->aacb; 5->aabacbacb"
    assert s.constants() == {"L": 4, "M": 6, "K": 6}
    report = s.stability("bifix")
    assert report["schema"] == "retword-report/1"
    assert report["result"]["verdict"] == "not-eventually-stable"
    finite = s.stability("finite", "perm: a->(1 2 3); b->(1 2); c->(1 2 3)")
    assert finite["result"]["verdict"] == "eventually-stable"
    assert s.stability("abelian")["result"]["verdict"] == "stable"


def test_automatic_and_errors():
    tm = retword.Shift("0->01;1->10")
    assert tm.returns("0") == ["0", "01", "011"]
    assert tm.automatic(1)["modulus"] == 2
    with pytest.raises(retword.RetwordError):
        retword.Shift("a->ab;b->b")
    with pytest.raises(ValueError):
        retword.Shift(TRIBONACCI).automatic(1)


def test_free_group_helpers():
    assert retword.reduce("abb'a'c", "abc") == "c"
    assert retword.subgroup_equal(["baa", "ba", "baca"], ["a", "b", "c"], "abc")
    assert retword.contains(["ab", "ba"], "abba", "abc")
    assert not retword.contains(["ab", "ba"], "a", "abc")
    assert retword.rank(["aa", "ab", "ac", "ba", "ca"], "abc") == 5


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sampled_from(["a", "b", "a'", "b'"]), max_size=12))
def test_reduction_is_idempotent(letters):
    w = "".join(letters)
    r = retword.reduce(w, "ab")
    assert retword.reduce(r, "ab") == r
    assert retword.contains(["a", "b"], w, "ab")
