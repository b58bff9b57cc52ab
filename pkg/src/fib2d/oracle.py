"""Brute-force ground truth and the cross-method verification report.

Everything here works by materializing an explicit prefix of the infinite
grid and scanning windows, so it is independent of the DAWG, extension and
conjugation machinery it is used to check.
"""

from __future__ import annotations

from . import conjugacy, dawg, frames
from .errors import BadBounds
from .word1d import fib
from .word2d import Grid, dims, mu_prefix


def sufficient_bounds(k: int, l: int) -> tuple[int, int]:
    """A prefix size that contains every (k,l) subword.

    With m minimal such that k < fib(m) the conjugates of the (m,m') grid
    carry all subwords, and they all sit inside the (fib(m+2), fib(m'+2))
    prefix.  verify() re-checks this at double the bound on every run.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    m = 2
    while fib(m, "F11") <= k:
        m += 1
    n = 2
    while fib(n, "F11") <= l:
        n += 1
    return fib(m + 2, "F11"), fib(n + 2, "F11")


def oracle_subwords(k: int, l: int, R: int, C: int) -> tuple[Grid, ...]:
    """All distinct (k,l) windows of the (R,C) prefix, sorted."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    if R < k or C < l:
        raise BadBounds(f"prefix ({R},{C}) smaller than window ({k},{l})")
    g = mu_prefix(R, C)
    out = {tuple(row[j:j + l] for row in g[i:i + k])
           for i in range(R - k + 1) for j in range(C - l + 1)}
    return tuple(sorted(out))


def oracle_occurrences(w: Grid, R: int, C: int) -> tuple[tuple[int, int], ...]:
    """All 0-based offsets where w matches inside the (R,C) prefix,
    row-major ascending.  Naive letter-by-letter matching."""
    rows, cols = dims(w)
    if not w:
        raise ValueError("pattern must be non-empty")
    if R < rows or C < cols:
        raise BadBounds(f"prefix ({R},{C}) smaller than pattern ({rows},{cols})")
    g = mu_prefix(R, C)
    return tuple((i, j)
                 for i in range(R - rows + 1)
                 for j in range(C - cols + 1)
                 if all(g[i + r][j:j + cols] == w[r] for r in range(rows)))


def verify(k: int, l: int) -> dict:
    """Run every enumeration method for size (k,l) and compare.

    The report carries per-method sizes, set agreement, the (k+1)(l+1)
    count check and the double-bound oracle stability check; "ok" is True
    iff everything passes.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    R, C = sufficient_bounds(k, l)
    sets = {
        "conjugate": conjugacy.enumerate_conjugation(k, l),
        "dawg": dawg.enumerate_dawg(k, l),
        "extend": frames.enumerate_extension(k, l),
        "oracle": oracle_subwords(k, l, R, C),
    }
    if k >= 2 and l >= 2:
        sets["prefix"] = conjugacy.enumerate_prefix_conjugates(k, l)
    names = sorted(sets)
    expected = (k + 1) * (l + 1)
    agree = all(sets[a] == sets[b] for a, b in zip(names, names[1:]))
    stable = oracle_subwords(k, l, 2 * R, 2 * C) == sets["oracle"]
    sizes = {name: len(sets[name]) for name in names}
    return {
        "k": k,
        "l": l,
        "expected": expected,
        "sizes": sizes,
        "methods_agree": agree,
        "oracle_stable": stable,
        "ok": agree and stable and all(s == expected for s in sizes.values()),
    }
