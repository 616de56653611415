from itertools import product

import pytest

from liegsb import words as wd
from liegsb.errors import InvalidWordError, OccurrenceError
from liegsb.words import (
    chibrikov_bracketing,
    double_bracketing,
    enumerate_alsw,
    expand_z,
    foliage,
    is_alsw,
    is_nlsw,
    lead_z,
    lyndon_factorize,
    special_bracketing,
    std_bracketing,
    subtree_at,
)

from oracles import all_factorizations, alsw_oracle, expand_tree, witt


def words_upto(q, n):
    for length in range(1, n + 1):
        yield from product(range(1, q + 1), repeat=length)


def test_lex_prefix_greater():
    # a proper prefix is greater than any of its extensions
    assert wd.lex_key((2,)) > wd.lex_key((2, 1))
    assert wd.lex_key((2, 2)) > wd.lex_key((2, 1))
    assert wd.lex_key((1,)) < wd.lex_key((2, 1))
    # deglex puts longer words on top
    assert wd.deglex_key((1, 1)) > wd.deglex_key((2,))
    assert wd.deglex_key((2, 1)) > wd.deglex_key((1, 2))


def test_is_alsw_matches_rotation_oracle():
    mismatches = 0
    for w in words_upto(2, 10):
        if is_alsw(w) != alsw_oracle(w):
            mismatches += 1
    assert mismatches == 0
    for w in words_upto(3, 6):
        assert is_alsw(w) == alsw_oracle(w)


def test_is_alsw_rejects_empty():
    with pytest.raises(InvalidWordError):
        is_alsw(())


def test_enumerate_alsw_counts_are_witt_numbers():
    for q in (2, 3):
        ws = enumerate_alsw(q, 8)
        by_len = {}
        for w in ws:
            by_len[len(w)] = by_len.get(len(w), 0) + 1
        for n in range(1, 9):
            assert by_len.get(n, 0) == witt(q, n)
    assert [witt(2, n) for n in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]


def test_enumerate_alsw_sorted_and_complete():
    ws = enumerate_alsw(2, 6)
    keys = [wd.deglex_key(w) for w in ws]
    assert keys == sorted(keys)
    assert set(ws) == {w for w in words_upto(2, 6) if alsw_oracle(w)}


def test_factorization_unique_and_correct():
    for q, n in ((2, 7), (3, 5)):
        for w in words_upto(q, n):
            fac = lyndon_factorize(w)
            assert tuple(x for f in fac for x in f) == w
            assert all(is_alsw(f) for f in fac)
            for a, b in zip(fac, fac[1:]):
                assert wd.lex_key(a) <= wd.lex_key(b)
            # brute force finds exactly one valid factorization
            assert all_factorizations(w) == [tuple(fac)]


def all_trees(q, n):
    if n == 1:
        for i in range(1, q + 1):
            yield i
        return
    for k in range(1, n):
        for left in all_trees(q, k):
            for right in all_trees(q, n - k):
                yield (left, right)


def test_std_bracketing_foliage_and_nlsw():
    for w in enumerate_alsw(2, 7) + enumerate_alsw(3, 5):
        t = std_bracketing(w)
        assert foliage(t) == w
        assert is_nlsw(t)


def test_nlsw_iff_standard_bracketing():
    for n in range(1, 6):
        for t in all_trees(2, n):
            w = foliage(t)
            if is_nlsw(t):
                assert is_alsw(w) and std_bracketing(w) == t
            else:
                assert not is_alsw(w) or std_bracketing(w) != t


def test_expansion_triangular_with_unit_lead():
    for w in enumerate_alsw(2, 6) + enumerate_alsw(3, 4):
        t = std_bracketing(w)
        d = expand_z(t)
        assert dict(d) == expand_tree(t)
        c, lw = lead_z(d)
        assert (c, lw) == (1, w)
        for v in d:
            assert wd.deglex_key(v) <= wd.deglex_key(w)


def test_std_bracketing_known_values():
    assert std_bracketing((2, 1)) == (2, 1)
    assert std_bracketing((2, 2, 1)) == (2, (2, 1))
    assert std_bracketing((2, 1, 1)) == ((2, 1), 1)
    assert std_bracketing((3, 1, 2)) == ((3, 1), 2)
    # note the difference from the special bracketing of 2211 rel 221
    assert std_bracketing((2, 2, 1, 1)) == (2, ((2, 1), 1))


def occurrences(w, u):
    return [p for p in range(len(w) - len(u) + 1) if w[p : p + len(u)] == u]


def test_special_bracketing_known_cases():
    t, path = special_bracketing((2, 2, 1, 1), (2, 2, 1), 0)
    assert (t, path) == (((2, (2, 1)), 1), (0,))
    t, path = special_bracketing((2, 2, 1), (2, 1), 1)
    assert (t, path) == ((2, (2, 1)), (1,))
    t, path = special_bracketing((3, 1, 2), (3,), 0)
    assert (t, path) == (((3, 1), 2), (0, 0))


def test_special_bracketing_marks_u_and_leads_at_w():
    for w in enumerate_alsw(2, 6):
        for u in enumerate_alsw(2, len(w)):
            for pos in occurrences(w, u):
                t, path = special_bracketing(w, u, pos)
                assert foliage(t) == w
                assert foliage(subtree_at(t, path)) == u
                d = expand_tree(t)
                top = max(d, key=wd.deglex_key)
                assert top == w and d[top] == 1


def test_special_bracketing_rejects_bad_occurrence():
    with pytest.raises(OccurrenceError):
        special_bracketing((2, 2, 1), (2, 1), 0)  # w[0:2] = 22 != 21
    with pytest.raises(InvalidWordError):
        special_bracketing((2, 2, 1), (1, 2), 1)  # u not an ALSW


def test_chibrikov_bracketing():
    t = chibrikov_bracketing((2, 1), (1,))
    assert t == ((2, 1), 1)
    t = chibrikov_bracketing((2,), (1, 1))
    assert t == ((2, 1), 1)
    t = chibrikov_bracketing((3,), (2, 2))
    assert t == ((3, 2), 2)
    for w in enumerate_alsw(2, 6):
        for cut in range(1, len(w)):
            u, c = w[:cut], w[cut:]
            if not is_alsw(u):
                continue
            if any(wd.lex_key(f) > wd.lex_key(u) for f in lyndon_factorize(c)):
                continue
            t = chibrikov_bracketing(u, c)
            assert foliage(t) == w
            d = expand_tree(t)
            top = max(d, key=wd.deglex_key)
            assert top == w and d[top] == 1


def test_double_bracketing_marks_both_and_leads_at_w():
    for w in enumerate_alsw(2, 6):
        alsws = enumerate_alsw(2, len(w))
        for u in alsws:
            for v in alsws:
                for pu in occurrences(w, u):
                    for pv in occurrences(w, v):
                        if pu + len(u) > pv:
                            continue
                        t, mu, mv = double_bracketing(w, u, pu, v, pv)
                        assert foliage(t) == w
                        assert foliage(subtree_at(t, mu)) == u
                        assert foliage(subtree_at(t, mv)) == v
                        d = expand_tree(t)
                        top = max(d, key=wd.deglex_key)
                        assert top == w and d[top] == 1


def test_double_bracketing_rejects_overlap():
    with pytest.raises(OccurrenceError):
        double_bracketing((2, 2, 1, 1), (2, 2, 1), 0, (2, 1), 1)
