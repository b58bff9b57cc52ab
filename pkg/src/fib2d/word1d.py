"""One-dimensional Fibonacci words over two-letter alphabets.

Words are plain strings.  An alphabet is a pair of distinct letters from
{a, b, c, d}, given as a 2-tuple or a 2-character string; the first letter is
the one the infinite word starts with (the more frequent letter).

Two Fibonacci numberings are in play and both are exposed through fib():
"F11" has F(0) = F(1) = 1 and sizes the classic words, "F12" has F(0) = 1,
F(1) = 2 and drives the occurrence arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import EmptyWord, NotAFactor, TooShort

LETTERS = "abcd"


def _pair(alphabet) -> tuple[str, str]:
    # accepts ("b", "a") or "ba"
    first, second = alphabet
    if first == second or first not in LETTERS or second not in LETTERS:
        raise ValueError("alphabet must be two distinct letters from 'abcd'")
    return first, second


# ---------------------------------------------------------------- numbers --

@lru_cache(maxsize=None)
def fib(n: int, numbering: str = "F11") -> int:
    """n-th Fibonacci number; F11: 1,1,2,3,5,...  F12: 1,2,3,5,8,..."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if numbering == "F11":
        a, b = 1, 1
    elif numbering == "F12":
        a, b = 1, 2
    else:
        raise ValueError("numbering must be 'F11' or 'F12'")
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def zeck_repr(x: int, numbering: str = "F12") -> tuple[int, ...]:
    """Zeckendorf index set of x, ascending, no two consecutive indices.

    Under F11 the indices start at 1 (F(0) = F(1) would break uniqueness).
    zeck_repr(0) is the empty tuple.
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    lowest = 1 if numbering == "F11" else 0
    n = lowest
    while fib(n + 1, numbering) <= x:
        n += 1
    out = []
    rem = x
    while rem:
        while fib(n, numbering) > rem:
            n -= 1
        out.append(n)
        rem -= fib(n, numbering)
        n -= 2
    for i, j in zip(out, out[1:]):
        assert i - j >= 2
    return tuple(reversed(out))


def z_stream(n: int, bound: int) -> tuple[int, ...]:
    """All x in [0, bound) whose Zeckendorf form (F12) avoids indices < n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    return tuple(x for x in range(bound)
                 if all(i >= n for i in zeck_repr(x, "F12")))


# ------------------------------------------------------------------ words --

@lru_cache(maxsize=None)
def fib_word(n: int, f0: str, f1: str) -> str:
    """w_n where w_0 = f0, w_1 = f1 and w_n = w_{n-1} w_{n-2}.

    The two usual seedings are call patterns: fib_word(n, second, first)
    gives the classic words with |w_n| = fib(n, "F11"), and
    fib_word(n, first, first + second) gives |w_n| = fib(n, "F12") with
    every w_n a prefix of the infinite word.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not f0 or not f1:
        raise ValueError("seed words must be non-empty")
    if n == 0:
        return f0
    if n == 1:
        return f1
    return fib_word(n - 1, f0, f1) + fib_word(n - 2, f0, f1)


def fib_prefix(alphabet, length: int) -> str:
    """Length-len prefix of the infinite Fibonacci word over the alphabet."""
    first, second = _pair(alphabet)
    if length < 0:
        raise ValueError("length must be >= 0")
    n = 1
    while fib(n, "F12") < length:
        n += 1
    return fib_word(n, first, first + second)[:length]


def truncated(n: int, alphabet) -> str:
    """The prefix word of length fib(n, "F12") - 2: w_n minus its last two letters."""
    first, second = _pair(alphabet)
    if n < 2:
        raise TooShort("truncated word needs n >= 2")
    return fib_word(n, first, first + second)[:-2]


# ---------------------------------------------------------------- factors --

@lru_cache(maxsize=None)
def _factors(k: int, first: str, second: str) -> tuple[str, ...]:
    length = 4 * k + 8
    while True:
        w = fib_prefix((first, second), length)
        seen = {w[i:i + k] for i in range(len(w) - k + 1)}
        assert len(seen) <= k + 1  # Sturmian complexity
        if len(seen) == k + 1:
            order = {first: 0, second: 1}
            return tuple(sorted(seen, key=lambda u: [order[c] for c in u]))
        length *= 2


def factors1d(k: int, alphabet) -> tuple[str, ...]:
    """The k+1 length-k factors of the infinite word, first < second lexicographic."""
    first, second = _pair(alphabet)
    if k < 1:
        raise ValueError("k must be >= 1")
    return _factors(k, first, second)


def right_extensions(u: str, alphabet) -> tuple[str, ...]:
    """Letters x with u + x still a factor; two letters only for the special factor."""
    first, second = _pair(alphabet)
    if not u:
        return (first, second)
    if u not in _factors(len(u), first, second):
        raise NotAFactor(f"{u!r} does not occur in the infinite word")
    longer = set(_factors(len(u) + 1, first, second))
    return tuple(x for x in (first, second) if u + x in longer)


@lru_cache(maxsize=None)
def _special(k: int, first: str, second: str) -> str:
    longer = set(_factors(k + 1, first, second))
    hits = [u for u in _factors(k, first, second)
            if u + first in longer and u + second in longer]
    assert len(hits) == 1  # exactly one right-special factor per length
    return hits[0]


def special_factor(k: int, alphabet) -> str:
    """The unique length-k factor extendable on the right by both letters."""
    first, second = _pair(alphabet)
    if k < 1:
        raise ValueError("k must be >= 1")
    return _special(k, first, second)


# ------------------------------------------------------------- conjugates --

def rotate1d(w: str, p: int) -> str:
    """Cyclic shift sending w[0] to the end, iterated p times (p may be negative)."""
    if not w:
        raise EmptyWord("cannot rotate the empty word")
    p %= len(w)
    return w[p:] + w[:p]


def special_conjugate1d(n: int, alphabet) -> str:
    """The conjugate q_n of the classic word w_n whose backward rotations
    T^0(q_n), ..., T^{-k}(q_n) start with the k+1 length-k factors, k < fib(n, "F11").
    """
    first, second = _pair(alphabet)
    if n < 2:
        raise ValueError("n must be >= 2")
    w = fib_word(n, second, first)
    shift = fib(n, "F11") - 1 if n % 2 == 0 else fib(n - 1, "F11") - 1
    return rotate1d(w, shift)


# ------------------------------------------------------------ occurrences --

def shortest_truncated_index(u: str, alphabet) -> int:
    """Smallest n >= 2 with u a factor of truncated(n, alphabet)."""
    first, second = _pair(alphabet)
    if not u:
        raise ValueError("u must be non-empty")
    if u not in _factors(len(u), first, second):
        raise NotAFactor(f"{u!r} does not occur in the infinite word")
    n = 2
    while u not in truncated(n, alphabet):
        n += 1
    return n


def first_occ1d(u: str, alphabet) -> int:
    """0-based offset of the first occurrence of u in the infinite word."""
    n = shortest_truncated_index(u, alphabet)
    w = fib_prefix(alphabet, fib(n + 2, "F12"))
    i = w.find(u)
    assert i >= 0  # guaranteed by the scan bound
    return i


def occ1d(u: str, alphabet, bound: int) -> tuple[int, ...]:
    """Every occurrence offset of the factor u below bound, ascending.

    Computed arithmetically: the occurrence set of u is the occurrence set of
    the shortest truncated word containing u, shifted by first_occ1d(u).
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    n = shortest_truncated_index(u, alphabet)
    fo = first_occ1d(u, alphabet)
    if bound <= fo:
        return ()
    return tuple(z + fo for z in z_stream(n - 1, bound - fo))
