"""Words over a finite alphabet and Lyndon-Shirshov combinatorics.

Letters are positive ints (generator indices, higher index = greater
letter); a word is a tuple of letters.  The lexicographic order used
throughout makes a proper prefix GREATER than any word extending it, so
the empty word is lex-greatest.  Deg-lex compares length first (longer
wins), then lex; on words of equal length that is plain tuple order.

An ALSW (associative Lyndon-Shirshov word) is a nonempty word strictly
greater than all of its proper cyclic rotations.  Bracketings are binary
trees: a leaf is a letter, an inner node is a pair (left, right).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import InvalidWordError, OccurrenceError

_INF = float("inf")


def lex_key(w: tuple):
    """Sort key realizing the prefix-greater lexicographic order."""
    return tuple(w) + (_INF,)


def lex_cmp(u: tuple, v: tuple) -> int:
    ku, kv = lex_key(u), lex_key(v)
    return (ku > kv) - (ku < kv)


def deglex_key(w: tuple):
    return (len(w), tuple(w))


def deglex_cmp(u: tuple, v: tuple) -> int:
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


@lru_cache(maxsize=None)
def is_alsw(w: tuple) -> bool:
    """True when w is strictly greater than all its proper cyclic rotations."""
    if not w:
        raise InvalidWordError("the empty word is not a Lyndon-Shirshov word")
    for i in range(1, len(w)):
        if w <= w[i:] + w[:i]:
            return False
    return True


def lyndon_factorize(w: tuple) -> list:
    """Unique factorization of w into a lex-nondecreasing product of ALSWs.

    The next factor is always the longest ALSW prefix of what remains.
    """
    if not w:
        raise InvalidWordError("cannot factorize the empty word")
    out = []
    i, n = 0, len(w)
    while i < n:
        j = n
        while j > i + 1 and not is_alsw(w[i:j]):
            j -= 1
        out.append(w[i:j])
        i = j
    return out


def enumerate_alsw(q: int, maxlen: int) -> list:
    """All ALSWs over the alphabet {1..q} of length <= maxlen, deg-lex ascending."""
    out = []
    for n in range(1, maxlen + 1):
        for w in product(range(1, q + 1), repeat=n):
            if w[0] == max(w) and is_alsw(w):
                out.append(w)
    return out


@lru_cache(maxsize=None)
def foliage(t) -> tuple:
    """The word read off the leaves of a bracketing tree."""
    if isinstance(t, int):
        return (t,)
    return foliage(t[0]) + foliage(t[1])


@lru_cache(maxsize=None)
def std_bracketing(w: tuple):
    """The standard bracketing of an ALSW: split off the longest proper ALSW suffix."""
    if not is_alsw(w):
        raise InvalidWordError("standard bracketing needs an ALSW, got %r" % (w,))
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        if is_alsw(w[i:]):
            return (std_bracketing(w[:i]), std_bracketing(w[i:]))
    raise AssertionError("ALSW of length >= 2 must have a proper ALSW suffix")


@lru_cache(maxsize=None)
def is_nlsw(t) -> bool:
    """Shirshov's normality conditions for a bracketing tree."""
    if isinstance(t, int):
        return t >= 1
    t1, t2 = t
    if not (is_nlsw(t1) and is_nlsw(t2)):
        return False
    if lex_cmp(foliage(t1), foliage(t2)) <= 0:
        return False
    if not isinstance(t1, int) and lex_cmp(foliage(t1[1]), foliage(t2)) > 0:
        return False
    return True


@lru_cache(maxsize=None)
def expand_z(t) -> dict:
    """Expansion of a tree as an integer combination of words.  Treat as read-only."""
    if isinstance(t, int):
        return {(t,): 1}
    left, right = expand_z(t[0]), expand_z(t[1])
    acc: dict = {}
    for u, a in left.items():
        for v, b in right.items():
            ab = a * b
            w1 = u + v
            c = acc.get(w1, 0) + ab
            if c:
                acc[w1] = c
            else:
                acc.pop(w1, None)
            w2 = v + u
            c = acc.get(w2, 0) - ab
            if c:
                acc[w2] = c
            else:
                acc.pop(w2, None)
    return acc


def lead_z(d: dict):
    """(coefficient, word) of the deg-lex greatest word in an expansion."""
    w = max(d, key=deglex_key)
    return d[w], w


def subtree_at(t, path: tuple):
    for step in path:
        if isinstance(t, int):
            raise InvalidWordError("path %r descends below a leaf" % (path,))
        t = t[step]
    return t


def replace_at(t, path: tuple, new):
    if not path:
        return new
    if isinstance(t, int):
        raise InvalidWordError("path %r descends below a leaf" % (path,))
    left, right = t
    if path[0] == 0:
        return (replace_at(left, path[1:], new), right)
    return (left, replace_at(right, path[1:], new))


def _spans(t, path=(), start=0):
    """Yield (path, start, length) for every subtree, in preorder."""
    yield (path, start, len(foliage(t)))
    if not isinstance(t, int):
        nl = len(foliage(t[0]))
        yield from _spans(t[0], path + (0,), start)
        yield from _spans(t[1], path + (1,), start + nl)


def _check_occurrence(w: tuple, u: tuple, pos: int):
    if not is_alsw(u):
        raise InvalidWordError("subword %r is not an ALSW" % (u,))
    if pos < 0 or w[pos : pos + len(u)] != u:
        raise OccurrenceError("%r does not occur at position %d of %r" % (u, pos, w))


def _candidates(base, pos: int, minlen: int) -> list:
    """Subtrees whose foliage starts at pos and covers at least minlen letters.

    Subtrees sharing a start position are nested, so this is a chain;
    returned innermost first.
    """
    found = [
        (length, path)
        for (path, start, length) in _spans(base)
        if start == pos and length >= minlen
    ]
    found.sort()
    return found


def _left_normed(head, factor_trees):
    t = head
    for f in factor_trees:
        t = (t, f)
    return t


def _special_parts(w: tuple, u: tuple, pos: int):
    """(candidate path, replacement tree, factor count) for the occurrence of u at pos.

    The replacement hangs the standard bracketings of the Lyndon factors of
    the leftover context onto [u] in left-normed fashion; it is accepted only
    if its expansion leads with the candidate's foliage, coefficient one.
    """
    if not is_alsw(w):
        raise InvalidWordError("ambient word %r is not an ALSW" % (w,))
    _check_occurrence(w, u, pos)
    base = std_bracketing(w)
    for length, path in _candidates(base, pos, len(u)):
        c = foliage(subtree_at(base, path))[len(u) :]
        factors = lyndon_factorize(c) if c else []
        rep = _left_normed(std_bracketing(u), [std_bracketing(f) for f in factors])
        coeff, lead = lead_z(expand_z(rep))
        if lead == u + c and coeff == 1:
            return path, rep, len(factors)
    raise OccurrenceError(
        "no special bracketing of %r at position %d of %r" % (u, pos, w)
    )


@lru_cache(maxsize=None)
def special_bracketing(w: tuple, u: tuple, pos: int):
    """A bracketing of w whose expansion leads with w and which carries [u] as
    a subtree over the given occurrence.  Returns (tree, path to [u])."""
    path, rep, nfac = _special_parts(w, u, pos)
    tree = replace_at(std_bracketing(w), path, rep)
    return tree, path + (0,) * nfac


def chibrikov_bracketing(u: tuple, c: tuple):
    """Left-normed bracketing of u*c from [u] and the Lyndon factors of c."""
    if not is_alsw(u):
        raise InvalidWordError("head %r is not an ALSW" % (u,))
    factors = lyndon_factorize(c) if c else []
    t = _left_normed(std_bracketing(u), [std_bracketing(f) for f in factors])
    coeff, lead = lead_z(expand_z(t))
    if lead != u + c or coeff != 1:
        raise InvalidWordError("context %r is not valid for head %r" % (c, u))
    return t


@lru_cache(maxsize=None)
def double_bracketing(w: tuple, u: tuple, pu: int, v: tuple, pv: int):
    """A bracketing of w carrying [u] and [v] over two disjoint occurrences,
    u to the left of v.  Returns (tree, path to [u], path to [v])."""
    if not is_alsw(w):
        raise InvalidWordError("ambient word %r is not an ALSW" % (w,))
    _check_occurrence(w, u, pu)
    _check_occurrence(w, v, pv)
    if pu + len(u) > pv:
        raise OccurrenceError(
            "occurrences of %r at %d and %r at %d overlap" % (u, pu, v, pv)
        )
    base = std_bracketing(w)
    for length, path in _candidates(base, pu, len(u)):
        cand_word = foliage(subtree_at(base, path))
        c = cand_word[len(u) :]
        if pv >= pu + length:
            # v lies outside this candidate: two independent replacements
            factors = lyndon_factorize(c) if c else []
            rep_u = _left_normed(
                std_bracketing(u), [std_bracketing(f) for f in factors]
            )
            coeff, lead = lead_z(expand_z(rep_u))
            if lead != cand_word or coeff != 1:
                continue
            path_v, rep_v, nfac_v = _special_parts(w, v, pv)
            tree = replace_at(base, path, rep_u)
            tree = replace_at(tree, path_v, rep_v)
            return tree, path + (0,) * len(factors), path_v + (0,) * nfac_v
        # v lies inside this candidate's context part
        factors = lyndon_factorize(c) if c else []
        off = pu + len(u)
        hit = None
        for idx, f in enumerate(factors):
            if off <= pv and pv + len(v) <= off + len(f):
                hit = (idx, f, pv - off)
                break
            off += len(f)
        if hit is None:
            continue
        idx, f, rel = hit
        try:
            sub_path, sub_rep, sub_nfac = _special_parts(f, v, rel)
        except OccurrenceError:
            continue
        f_tree = replace_at(std_bracketing(f), sub_path, sub_rep)
        parts = [std_bracketing(g) for g in factors]
        parts[idx] = f_tree
        rep = _left_normed(std_bracketing(u), parts)
        coeff, lead = lead_z(expand_z(rep))
        if lead != cand_word or coeff != 1:
            continue
        n = len(factors)
        tree = replace_at(base, path, rep)
        path_u = path + (0,) * n
        path_v = path + (0,) * (n - 1 - idx) + (1,) + sub_path + (0,) * sub_nfac
        return tree, path_u, path_v
    raise OccurrenceError(
        "no double bracketing of %r for %r at %d and %r at %d" % (w, u, pu, v, pv)
    )
