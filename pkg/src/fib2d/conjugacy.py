"""Cyclic rotations of grids and the conjugation enumerations.

Rotating rows and columns of a Fibonacci grid cyclically ranges over its
conjugacy class.  One distinguished conjugate has the property that the
top-left prefixes of its successive inverse rotations run through all
factors of a given size; a second enumeration reads prefixes of positive
rotations of the next larger grid.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import EmptyWord, OutOfRange
from .word1d import fib
from .word2d import Grid, dims, fib_array, subblock


def rotate2d(w: Grid, i: int, j: int) -> Grid:
    """Send the first i rows to the bottom and the first j columns to the
    right; negative exponents rotate the other way."""
    if not w:
        raise EmptyWord("cannot rotate the empty grid")
    rows, cols = dims(w)
    i %= rows
    j %= cols
    return tuple(row[j:] + row[:j] for row in w[i:] + w[:i])


def conjugacy_class(w: Grid) -> tuple[Grid, ...]:
    """All distinct row/column rotations of w; rows*cols of them iff w is
    primitive."""
    if not w:
        raise ValueError("conjugacy class needs a non-empty grid")
    rows, cols = dims(w)
    return tuple(sorted({rotate2d(w, i, j)
                         for i in range(rows) for j in range(cols)}))


def special_conjugate2d(m: int, n: int) -> Grid:
    """The conjugate of fib_array(m,n) whose inverse rotations enumerate
    factors by prefixes; exponents depend on the parities of m and n."""
    if m < 2 or n < 2:
        raise ValueError("m and n must be >= 2")
    i = fib(m, "F11") - 1 if m % 2 == 0 else fib(m - 1, "F11") - 1
    j = fib(n, "F11") - 1 if n % 2 == 0 else fib(n - 1, "F11") - 1
    return rotate2d(fib_array(m, n), i, j)


def _cover_index(k: int) -> int:
    # least m >= 2 with k < fib(m, "F11")
    m = 2
    while fib(m, "F11") <= k:
        m += 1
    return m


@lru_cache(maxsize=None)
def enumerate_conjugation(k: int, l: int) -> tuple[Grid, ...]:
    """All (k+1)(l+1) subwords of size (k,l) as prefixes of the inverse
    rotations of the special conjugate."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    q = special_conjugate2d(_cover_index(k), _cover_index(l))
    out = {subblock(rotate2d(q, -i, -j), (1, 1), (k, l))
           for i in range(k + 1) for j in range(l + 1)}
    assert len(out) == (k + 1) * (l + 1)
    return tuple(sorted(out))


def _floor_index(k: int) -> int:
    # the m >= 2 with fib(m) <= k < fib(m+1)
    m = 2
    while fib(m + 1, "F11") <= k:
        m += 1
    return m


def _prefix_rotations(k: int, m: int) -> tuple[int, ...]:
    # {0..F(m)-1} plus the tail {F(m+2)-k-1..F(m+1)-1}: k+1 exponents
    lo = tuple(range(fib(m, "F11")))
    hi = tuple(range(fib(m + 2, "F11") - k - 1, fib(m + 1, "F11")))
    assert len(set(lo + hi)) == k + 1
    return lo + hi


@lru_cache(maxsize=None)
def enumerate_prefix_conjugates(k: int, l: int) -> tuple[Grid, ...]:
    """The same (k+1)(l+1) subwords, read from positive rotations of the
    one-larger grid; needs k, l >= 2."""
    if k < 2 or l < 2:
        raise OutOfRange("prefix-conjugate enumeration needs k, l >= 2")
    m = _floor_index(k)
    n = _floor_index(l)
    base = fib_array(m + 1, n + 1)
    out = {subblock(rotate2d(base, i, j), (1, 1), (k, l))
           for i in _prefix_rotations(k, m) for j in _prefix_rotations(l, n)}
    assert len(out) == (k + 1) * (l + 1)
    return tuple(sorted(out))
