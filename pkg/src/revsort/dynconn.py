"""Fully dynamic connectivity (Holm, de Lichtenberg, Thorup).

Every edge has a level, starting at 0 and only ever raised.  Forest ``F_i``
holds the tree edges of level ``>= i`` and is stored as Euler tours in splay
trees.  Deleting a tree edge searches for a replacement from its level
downwards, always scanning the smaller of the two halves and raising what
it scans, which gives ``O(log^2 N)`` amortized updates.

Two shortcuts keep the constant down without touching the amortization:
a level whose smaller half has no non-tree edges is skipped outright, and a
handful of non-tree edges near the cut are probed before the full scan.

Changes of the level-0 spanning forest are reported through ``on_link`` and
``on_cut`` callbacks, synchronously and in the order they happen.
"""

from __future__ import annotations

from typing import Callable, Hashable, Optional

from .perm import ContractViolation


TREE, NONTREE = 1, 2  # mark bits: level tree edge (on one arc), non-tree adjacency


class _ETNode:
    __slots__ = ("left", "right", "parent", "vertex", "label", "nv", "cnt", "mark", "agg")

    def __init__(self, vertex: int = -1, label=None):
        self.left = self.right = self.parent = None
        self.vertex = vertex
        self.label = label
        self.nv = self.cnt = 1 if vertex >= 0 else 0
        self.mark = self.agg = 0  # agg: OR of marks over the subtree


def _update(x: _ETNode) -> None:
    l, r = x.left, x.right
    cnt, agg = x.nv, x.mark
    if l is not None:
        cnt += l.cnt
        agg |= l.agg
    if r is not None:
        cnt += r.cnt
        agg |= r.agg
    x.cnt = cnt
    x.agg = agg


def _rotate(x: _ETNode, p: _ETNode, g: Optional[_ETNode]) -> None:
    """Lift ``x`` over its parent ``p``; ``g`` is p's parent.  No aggregates."""
    if p.left is x:
        c = x.right
        p.left = c
        x.right = p
    else:
        c = x.left
        p.right = c
        x.left = p
    if c is not None:
        c.parent = p
    p.parent = x
    x.parent = g
    if g is not None:
        if g.left is p:
            g.left = x
        else:
            g.right = x


def _splay(x: _ETNode) -> _ETNode:
    # Only demoted nodes need fresh aggregates after each step; x gets its
    # own once it has reached the top.
    p = x.parent
    if p is None:
        return x
    while p is not None:
        g = p.parent
        if g is None:
            _rotate(x, p, None)
            _update(p)
            break
        gg = g.parent
        if (g.left is p) == (p.left is x):
            _rotate(p, g, gg)
            _update(g)
            _rotate(x, p, gg)
            _update(p)
        else:
            _rotate(x, p, g)
            _update(p)
            _rotate(x, g, gg)
            _update(g)
        p = gg
    _update(x)
    return x


def _join(a: Optional[_ETNode], b: Optional[_ETNode]) -> Optional[_ETNode]:
    if a is None:
        return b
    if b is None:
        return a
    x = a
    while x.right is not None:
        x = x.right
    _splay(x)
    x.right = b
    b.parent = x
    _update(x)
    return x


def _top(x: _ETNode) -> _ETNode:
    while x.parent is not None:
        x = x.parent
    return x


class EulerTourForest:
    """Euler tours of one level's forest; vertex nodes are created lazily."""

    def __init__(self, n: int):
        self.vnode: list[Optional[_ETNode]] = [None] * n
        self.arcs: dict[Hashable, tuple[_ETNode, _ETNode]] = {}

    def _vertex(self, v: int) -> _ETNode:
        x = self.vnode[v]
        if x is None:
            x = self.vnode[v] = _ETNode(v)
        return x

    def _reroot(self, v: int) -> _ETNode:
        x = _splay(self._vertex(v))
        l = x.left
        if l is None:
            return x
        x.left = None
        l.parent = None
        _update(x)
        return _join(x, l)

    def connected(self, u: int, w: int) -> bool:
        if u == w:
            return True
        a, b = self.vnode[u], self.vnode[w]
        if a is None or b is None:
            return False
        _splay(a)
        _splay(b)
        return _top(a) is b

    def tree_size(self, v: int) -> int:
        x = self.vnode[v]
        if x is None:
            return 1
        return _splay(x).cnt

    def link(self, u: int, w: int, label, mark: bool) -> None:
        a = self._reroot(u)
        b = self._reroot(w)
        uw, wu = _ETNode(label=label), _ETNode(label=label)
        if mark:
            uw.mark = uw.agg = TREE
        self.arcs[label] = (uw, wu)
        _join(_join(_join(a, uw), b), wu)

    def cut(self, label) -> None:
        a1, a2 = self.arcs.pop(label)
        _splay(a1)
        l, r = a1.left, a1.right
        if l is not None:
            l.parent = None
        if r is not None:
            r.parent = None
        a1.left = a1.right = None
        if r is not None and _top(a2) is r:
            _splay(a2)
            inner, outer = a2.left, a2.right
            a2.right = None
            if outer is not None:
                outer.parent = None
                _join(l, outer)
        else:
            _splay(a2)
            outer, inner = a2.left, a2.right
            a2.left = None
            if outer is not None:
                outer.parent = None
                _join(outer, r)
        a2.left = a2.right = None
        if inner is not None:
            inner.parent = None

    def set_edge_mark(self, label, flag: bool) -> None:
        x = _splay(self.arcs[label][0])
        x.mark = TREE if flag else 0
        _update(x)

    def set_vertex_mark(self, v: int, flag: bool) -> None:
        x = self.vnode[v]
        if x is None:
            if not flag:
                return
            x = self._vertex(v)
        _splay(x)
        x.mark = NONTREE if flag else 0
        _update(x)

    def _find_marked(self, v: int, bit: int) -> Optional[_ETNode]:
        x = self.vnode[v]
        if x is None:
            return None
        x = _splay(x)
        if not x.agg & bit:
            return None
        while True:
            l = x.left
            if l is not None and l.agg & bit:
                x = l
            elif x.mark & bit:
                break
            else:
                x = x.right
        return _splay(x)

    def find_marked_edge(self, v: int):
        """Label of some level tree edge in v's tree, or None."""
        x = self._find_marked(v, TREE)
        return None if x is None else x.label

    def find_marked_vertex(self, v: int) -> int:
        """Some vertex in v's tree with level non-tree edges, or -1."""
        x = self._find_marked(v, NONTREE)
        return -1 if x is None else x.vertex

    def tour(self, v: int) -> list:
        """Euler tour of v's tree as vertices and arc labels (debug)."""
        x = self.vnode[v]
        if x is None:
            return [v]
        out, stack, cur = [], [], _top(x)
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            out.append(cur.vertex if cur.vertex >= 0 else ("arc", cur.label))
            cur = cur.right
        return out


Callback = Callable[[int, int, Hashable], None]


class DynamicConnectivity:
    def __init__(self, n: int, on_link: Optional[Callback] = None,
                 on_cut: Optional[Callback] = None, sample_size: int = 8):
        self.n = n
        self.sample_size = sample_size
        self.max_level = max(1, n.bit_length())
        self.forests = [EulerTourForest(n) for _ in range(self.max_level + 1)]
        # per level: vertex -> labels of incident non-tree edges
        self.adj: list[dict[int, set]] = [{} for _ in range(self.max_level + 1)]
        # label -> [u, w, level, is_tree]
        self.edges: dict[Hashable, list] = {}
        self.on_link = on_link
        self.on_cut = on_cut

    def __contains__(self, label) -> bool:
        return label in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def connected(self, u: int, w: int) -> bool:
        return self.forests[0].connected(u, w)

    def is_tree_edge(self, label) -> bool:
        return self.edges[label][3]

    def tree_edges(self) -> dict:
        return {lab: (r[0], r[1]) for lab, r in self.edges.items() if r[3]}

    def level(self, label) -> int:
        return self.edges[label][2]

    def _adj_add(self, level: int, v: int, label) -> None:
        s = self.adj[level].get(v)
        if s is None:
            s = self.adj[level][v] = set()
        if not s:
            self.forests[level].set_vertex_mark(v, True)
        s.add(label)

    def _adj_remove(self, level: int, v: int, label) -> None:
        s = self.adj[level][v]
        s.discard(label)
        if not s:
            self.forests[level].set_vertex_mark(v, False)

    def insert_edge(self, u: int, w: int, label) -> None:
        if u == w:
            raise ContractViolation("self-loops are not supported")
        if label in self.edges:
            raise ContractViolation(f"edge label {label!r} already present")
        f0 = self.forests[0]
        if f0.connected(u, w):
            self.edges[label] = [u, w, 0, False]
            self._adj_add(0, u, label)
            self._adj_add(0, w, label)
        else:
            self.edges[label] = [u, w, 0, True]
            f0.link(u, w, label, True)
            if self.on_link:
                self.on_link(u, w, label)

    def delete_edge(self, label) -> None:
        rec = self.edges.pop(label, None)
        if rec is None:
            raise ContractViolation(f"unknown edge label {label!r}")
        u, w, lvl, tree = rec
        if not tree:
            self._adj_remove(lvl, u, label)
            self._adj_remove(lvl, w, label)
            return
        for i in range(lvl + 1):
            self.forests[i].cut(label)
        if self.on_cut:
            self.on_cut(u, w, label)
        for i in range(lvl, -1, -1):
            if self._replace(i, u, w):
                return

    def _use_replacement(self, i: int, g) -> None:
        rec = self.edges[g]
        a, b = rec[0], rec[1]
        self._adj_remove(i, a, g)
        self._adj_remove(i, b, g)
        rec[3] = True
        for j in range(i + 1):
            self.forests[j].link(a, b, g, j == i)
        if self.on_link:
            self.on_link(a, b, g)

    def _sample(self, i: int, starts: tuple[int, ...]) -> bool:
        """Probe a few level-i non-tree edges at ``starts`` without raising anything.

        A probe succeeds when the edge leaves the tree of the vertex it was
        found at; the two halves of a cut edge are always in different trees.
        """
        forest, adj, budget = self.forests[i], self.adj[i], self.sample_size
        for v in starts:
            for g in adj.get(v, ()):
                if budget == 0:
                    return False
                budget -= 1
                rec = self.edges[g]
                other = rec[1] if rec[0] == v else rec[0]
                if not forest.connected(other, v):
                    self._use_replacement(i, g)
                    return True
        return False

    def _replace(self, i: int, u: int, w: int) -> bool:
        forest = self.forests[i]
        x = u if forest.tree_size(u) <= forest.tree_size(w) else w
        # Tree edges are pushed up only so that scanned non-tree edges can
        # follow; with nothing to scan at this level the push is skipped.
        v = forest.find_marked_vertex(x)
        if v < 0:
            return False
        if self.sample_size and self._sample(i, (u, w, v)):
            return True
        up = self.forests[i + 1]
        edges = self.edges
        while True:
            f = forest.find_marked_edge(x)
            if f is None:
                break
            rec = edges[f]
            rec[2] = i + 1
            forest.set_edge_mark(f, False)
            up.link(rec[0], rec[1], f, True)
        adj = self.adj[i]
        while True:
            v = forest.find_marked_vertex(x)
            if v < 0:
                return False
            labels = adj[v]
            while labels:
                g = next(iter(labels))
                rec = edges[g]
                a, b = rec[0], rec[1]
                other = b if a == v else a
                if not forest.connected(other, x):
                    self._use_replacement(i, g)
                    return True
                self._adj_remove(i, a, g)
                self._adj_remove(i, b, g)
                rec[2] = i + 1
                self._adj_add(i + 1, a, g)
                self._adj_add(i + 1, b, g)
