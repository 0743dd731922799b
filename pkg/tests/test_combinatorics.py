import itertools

import pytest
from hypothesis import given, strategies as st

from peterson.combinatorics import (
    Permutation, Subset, Substring, all_subsets, decompose_substrings,
    fixed_point_permutation, head, stirling2, subset_of_fixed_point, tail, v_permutation,
)
from peterson.errors import DomainError, ParseError, ResourceCapExceeded


def set_partitions(items):
    """Brute-force enumeration of all set partitions of ``items``."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def bell_triangle(k):
    row = [1]
    bells = [1]
    for _ in range(k):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        bells.append(row[0])
    return bells


subsets_strategy = st.integers(min_value=1, max_value=10).flatmap(
    lambda n: st.builds(Subset, st.just(n), st.integers(0, (1 << (n - 1)) - 1)))


def test_subset_members_and_str():
    A = Subset.of(5, [4, 1, 2])
    assert A.members == (1, 2, 4)
    assert str(A) == "{1,2,4}"
    assert Subset.parse(5, "{1, 2,4}") == A
    assert Subset.parse(5, "{}") == Subset.empty(5)


@pytest.mark.parametrize("bad", ["{0}", "{5}", "{1,1}", "{a}", "{1,2"])
def test_subset_parse_rejects(bad):
    with pytest.raises((DomainError, ParseError)):
        Subset.parse(5, bad)


def test_decompose_three_runs():
    A = Subset.of(9, [1, 2, 3, 5, 6, 8])
    assert decompose_substrings(A) == [Substring(1, 3), Substring(5, 6), Substring(8, 8)]


def test_decompose_small_cases():
    assert decompose_substrings(Subset.empty(6)) == []
    assert decompose_substrings(Subset.of(6, [2, 4])) == [Substring(2, 2), Substring(4, 4)]


@given(subsets_strategy)
def test_decompose_partitions_subset(A):
    runs = decompose_substrings(A)
    flat = [j for r in runs for j in range(r.lo, r.hi + 1)]
    assert tuple(flat) == A.members
    for r in runs:
        assert r.lo <= r.hi
        assert r.lo - 1 not in A and r.hi + 1 not in A


@pytest.mark.parametrize("members, j, h, tl", [
    ([1, 2, 4], 1, 2, 1),
    ([1, 2, 4], 2, 2, 1),
    ([1, 2, 4], 4, 4, 4),
    ([1, 2, 3], 2, 3, 1),
    ([1, 2, 3], 3, 3, 1),
])
def test_head_tail(members, j, h, tl):
    A = Subset.of(5, members)
    assert head(A, j) == h
    assert tail(A, j) == tl


def test_head_outside_subset():
    with pytest.raises(DomainError):
        head(Subset.of(5, [1, 2]), 3)
    with pytest.raises(DomainError):
        tail(Subset.of(5, [1, 2]), 4)


@given(subsets_strategy)
def test_head_tail_constant_on_runs(A):
    for r in decompose_substrings(A):
        for j in range(r.lo, r.hi + 1):
            assert head(A, j) == r.hi >= j >= tail(A, j) == r.lo


@pytest.mark.parametrize("n, members, expected", [
    (5, [1, 2, 4], "32154"),
    (4, [], "1234"),
    (9, [1, 2, 4, 5, 6, 8], "321765498"),
])
def test_fixed_point_known_values(n, members, expected):
    assert str(fixed_point_permutation(Subset.of(n, members))) == expected


def test_fixed_point_large_rank_rendering():
    w = fixed_point_permutation(Subset.of(11, [9, 10]))
    assert str(w) == "1,2,3,4,5,6,7,8,11,10,9"
    assert Permutation.parse(str(w)) == w


@pytest.mark.parametrize("n", range(1, 11))
def test_fixed_points_are_involutions_and_recover_subset(n):
    for A in all_subsets(n):
        w = fixed_point_permutation(A)
        assert w * w == Permutation.identity(n)
        assert subset_of_fixed_point(w) == A


def test_v_permutation():
    word, v = v_permutation(Subset.of(4, [1, 2]))
    assert word == (1, 2)
    # s1(s2(j)) for j = 1..4, evaluated by hand: 1->1->2, 2->3->3, 3->2->1, 4->4
    assert str(v) == "2314"
    word, v = v_permutation(Subset.empty(4))
    assert word == () and v == Permutation.identity(4)


@given(subsets_strategy)
def test_v_length_equals_cardinality(A):
    _, v = v_permutation(A)
    assert v.length() == len(A)


def test_stirling_values():
    assert stirling2(3, 2) == 3
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(2, 3) == 0
    for k in range(1, 12):
        assert stirling2(k, k) == 1
        assert stirling2(k, 1) == 1


def test_stirling_against_partition_enumeration():
    for k in range(0, 8):
        counts = {}
        for p in set_partitions(list(range(k))):
            counts[len(p)] = counts.get(len(p), 0) + 1
        for j in range(0, k + 2):
            assert stirling2(k, j) == counts.get(j, 0), (k, j)
    assert stirling2(4, 2) == 7


def test_stirling_recurrence_and_bell_rows():
    bells = bell_triangle(10)
    for k in range(0, 11):
        assert sum(stirling2(k, j) for j in range(k + 1)) == bells[k]
        for j in range(1, k + 2):
            assert stirling2(k + 1, j) == j * stirling2(k, j) + stirling2(k, j - 1)


def test_all_subsets_order():
    assert [A.members for A in all_subsets(1)] == [()]
    assert [A.members for A in all_subsets(2)] == [(), (1,)]
    four = all_subsets(4)
    assert len(four) == 8
    assert [str(A) for A in four] == [
        "{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
    for a, b in itertools.combinations(range(len(four)), 2):
        assert not four[b].issubset(four[a]) or four[a] == four[b]


def test_all_subsets_cap(monkeypatch):
    monkeypatch.setenv("PETERSON_MAX_RANK", "5")
    with pytest.raises(ResourceCapExceeded):
        all_subsets(6)


def test_operations_accept_large_rank():
    A = Subset.of(40, [37, 38, 39])
    assert head(A, 37) == 39
    assert fixed_point_permutation(A)(37) == 40


def test_permutation_validation():
    with pytest.raises(DomainError):
        Permutation((1, 1, 2))
    with pytest.raises(ParseError):
        Permutation.parse("3x1")
