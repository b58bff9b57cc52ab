"""Suffix DAWGs of the abstract line words and their products.

Reading across the infinite grid, each column is one of two words, so a row
is a word over two column-classes: {d,b} (written "d,b") and {c,a}.  Going
down, each row is one of two words, giving the classes {d,c} and {b,a}.
The two truncated DAWGs recognize factors of those abstract words; hanging
the column DAWG at every node of the row DAWG gives a graph whose root paths
of shape (l across, then k down) are exactly the size-(k,l) subwords.

Node arithmetic uses fib(n, "F12"): spine edges i-1 -> i carry the i-th
abstract letter, and shortcut edges F(j)-2 -> F(j+1)-1 carry the dominant
class when j is even, the other class when j is odd.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InconsistentJoint
from .word1d import fib, fib_prefix
from .word2d import Grid, column, swap_row_alphabet

# abstract classes per orientation, dominant first
_CLASSES = {"rows": ("db", "ca"), "cols": ("dc", "ba")}


class Digraph:
    """Rooted digraph with frozenset edge labels and hashable node ids."""

    def __init__(self, root):
        self.root = root
        self.nodes = {root}
        self.edges = []
        self._out = {}

    def add_node(self, v) -> None:
        self.nodes.add(v)

    def add_edge(self, u, v, label) -> None:
        lab = frozenset(label)
        self.nodes.add(u)
        self.nodes.add(v)
        self.edges.append((u, v, lab))
        self._out.setdefault(u, []).append((v, lab))

    def out(self, u):
        return self._out.get(u, [])


# -------------------------------------------------------------- line DAWG --

def build_line_dawg(orientation: str, max_len: int) -> Digraph:
    """Truncated DAWG of the abstract line word, keeping every root path
    of length <= max_len intact.
    """
    if orientation not in _CLASSES:
        raise ValueError("orientation must be 'rows' or 'cols'")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    dominant, other = (frozenset(s) for s in _CLASSES[orientation])
    m = 0
    while fib(m + 1, "F12") <= max_len:
        m += 1
    # with F(m) <= L < F(m+1), length-L root paths reach F(m+2)-1 + L - F(m)
    top = fib(m + 2, "F12") - 1 + max_len - fib(m, "F12")
    # 'd' stands in for the dominant class in the abstract spine word
    spine = fib_prefix("dc", top)
    g = Digraph(0)
    for i in range(1, top + 1):
        g.add_edge(i - 1, i, dominant if spine[i - 1] == "d" else other)
    j = 1
    while fib(j + 1, "F12") - 1 <= top:
        g.add_edge(fib(j, "F12") - 2, fib(j + 1, "F12") - 1,
                   dominant if j % 2 == 0 else other)
        j += 1
    return g


def root_paths(g: Digraph, length: int) -> tuple[tuple[frozenset, ...], ...]:
    """Label sequences of all root paths with `length` edges."""
    out = []

    def walk(node, labels):
        if len(labels) == length:
            out.append(tuple(labels))
            return
        for dst, lab in g.out(node):
            walk(dst, labels + [lab])

    walk(g.root, [])
    return tuple(out)


# ---------------------------------------------------------------- products --

def cartesian_product(g1: Digraph, g2: Digraph) -> Digraph:
    g = Digraph((g1.root, g2.root))
    for u in g1.nodes:
        for v in g2.nodes:
            g.add_node((u, v))
    for u, u2, lab in g1.edges:
        for v in g2.nodes:
            g.add_edge((u, v), (u2, v), lab)
    for v, v2, lab in g2.edges:
        for u in g1.nodes:
            g.add_edge((u, v), (u, v2), lab)
    return g


def rooted_product(base: Digraph, hung: Digraph, *,
                   keep_root_copy: bool = False) -> Digraph:
    """Hang a copy of `hung` at every node of `base`.

    Base edges run between the copy roots; within a copy only hung edges
    exist, so root paths take all their base steps first.  No root path of
    positive base length enters the copy at the base root, so that copy is
    dropped unless keep_root_copy is set.
    """
    g = Digraph((base.root, hung.root))
    for u in base.nodes:
        g.add_node((u, hung.root))
    for u, u2, lab in base.edges:
        g.add_edge((u, hung.root), (u2, hung.root), lab)
    for u in base.nodes:
        if u == base.root and not keep_root_copy:
            continue
        for v, v2, lab in hung.edges:
            g.add_edge((u, v), (u, v2), lab)
    return g


def _shaped_paths(prod: Digraph, base_len: int, hung_len: int):
    """(base labels, hung labels) of root paths: base_len base edges, then
    hung_len edges inside one copy."""
    out = []

    def walk(node, labels):
        depth = len(labels)
        if depth == base_len + hung_len:
            out.append((tuple(labels[:base_len]), tuple(labels[base_len:])))
            return
        for dst, lab in prod.out(node):
            base_step = dst[0] != node[0]
            if base_step != (depth < base_len):
                continue
            walk(dst, labels + [lab])

    walk(prod.root, [])
    return out


# ------------------------------------------------------- path to subword --

def _pick(label: frozenset, alphabet: str) -> str:
    hits = [ch for ch in alphabet if ch in label]
    if not hits:
        raise InconsistentJoint(
            f"label {set(label)} has no letter in alphabet {alphabet!r}")
    if len(hits) > 1:
        raise ValueError(f"label {set(label)} is ambiguous over {alphabet!r}")
    return hits[0]


def _label_seq(labels):
    out = []
    for x in labels:
        if isinstance(x, str) and len(x) != 1:
            raise ValueError("a concrete label is a single letter")
        out.append(frozenset(x))
    return out


def subword_from_path(h_labels, v_labels) -> Grid:
    """The subword determined by an (across, down) root path pair.

    h_labels spell the first row, v_labels the last column; they overlap in
    the top right corner, so the last h-label and the first v-label must
    agree on exactly one letter.  That corner letter fixes the alphabet of
    every line and the whole grid follows.  Labels may be abstract classes
    or single letters.
    """
    hs = _label_seq(h_labels)
    vs = _label_seq(v_labels)
    if not hs or not vs:
        raise ValueError("both paths must be non-empty")
    joint = hs[-1] & vs[0]
    if not joint:
        raise InconsistentJoint(
            f"row end {set(hs[-1])} and column start {set(vs[0])} disagree")
    if len(joint) > 1:
        raise ValueError("corner letter is ambiguous")
    s = next(iter(joint))
    row_alph = "dc" if s in "dc" else "ba"
    col_alph = "db" if s in "db" else "ca"
    top = "".join(_pick(x, row_alph) for x in hs)
    side = "".join(_pick(x, col_alph) for x in vs)
    grid = tuple(top if ch == s else swap_row_alphabet(top) for ch in side)
    assert column(grid, len(top)) == side  # the grid really ends in the v path
    return grid


# ------------------------------------------------------------- enumeration --

@lru_cache(maxsize=None)
def enumerate_dawg(k: int, l: int, base: str = "rows") -> tuple[Grid, ...]:
    """All (k+1)(l+1) subwords of size (k,l), sorted row-major.

    base picks which line DAWG carries the other: "rows" walks l across then
    k down, "cols" the reverse.  Both give the same set.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    if base == "rows":
        prod = rooted_product(build_line_dawg("rows", l),
                              build_line_dawg("cols", k))
        pairs = _shaped_paths(prod, l, k)
    elif base == "cols":
        prod = rooted_product(build_line_dawg("cols", k),
                              build_line_dawg("rows", l))
        pairs = [(h, v) for v, h in _shaped_paths(prod, k, l)]
    else:
        raise ValueError("base must be 'rows' or 'cols'")
    words = {subword_from_path(h, v) for h, v in pairs}
    assert len(words) == (k + 1) * (l + 1)  # distinct paths, distinct words
    return tuple(sorted(words))


# ----------------------------------------------------------------- export --

def _fmt_node(v) -> str:
    if isinstance(v, tuple):
        return f"({v[0]},{v[1]})"
    return str(v)


def _fmt_label(lab) -> str:
    return ",".join(sorted(lab, reverse=True))


def export_dot(g: Digraph) -> str:
    """Deterministic DOT text; class labels are comma joined, dominant first."""
    lines = ["digraph {", "  rankdir=LR;"]
    for v in sorted(g.nodes):
        shape = "doublecircle" if v == g.root else "circle"
        lines.append(f'  "{_fmt_node(v)}" [shape={shape}];')
    for u, v, lab in sorted(g.edges, key=lambda e: (e[0], e[1], _fmt_label(e[2]))):
        lines.append(f'  "{_fmt_node(u)}" -> "{_fmt_node(v)}" [label="{_fmt_label(lab)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: Digraph) -> dict:
    nodes = [_fmt_node(v) for v in sorted(g.nodes)]
    edges = [{"from": _fmt_node(u), "to": _fmt_node(v), "label": _fmt_label(lab)}
             for u, v, lab in sorted(g.edges,
                                     key=lambda e: (e[0], e[1], _fmt_label(e[2])))]
    return {"root": _fmt_node(g.root), "nodes": nodes, "edges": edges}
