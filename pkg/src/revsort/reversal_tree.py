"""Signed permutation under reversals, stored in a join-based AVL tree.

Every node carries a lazy ``tag``: the number of reversals applied to its
whole subtree that have not been pushed further down.  An odd tag means the
subtree reads right-to-left with flipped signs.  Pushing a tag adds it to the
children's tags and to the node's own ``base`` counter, so for any element

    flip_count(m) = base(m) + sum of tags from m's node up to the root.

Shortcut links speed up that sum.  Each node points ``k`` levels up
(``k = floor(eps * log2 log2 n)``, at least 1, capped at the root) and stores
the sum of tags on the path from the node itself (included) to the target
(excluded).  After every reversal the shortcuts of all nodes within ``k``
levels below a modified node are recomputed.
"""

from __future__ import annotations

import math
from typing import Sequence

from .perm import InvalidInput


class _Node:
    __slots__ = ("val", "left", "right", "parent", "height", "size",
                 "tag", "base", "sc", "scsum")

    def __init__(self, val: int):
        self.val = val
        self.left = self.right = self.parent = None
        self.height = 1
        self.size = 1
        self.tag = 0
        self.base = 0
        self.sc = None
        self.scsum = 0


def _height(t):
    return t.height if t is not None else 0


def _size(t):
    return t.size if t is not None else 0


def shortcut_length(n: int, epsilon: float) -> int:
    return max(1, int(epsilon * math.log2(math.log2(max(n, 4)))))


class ReversalTree:
    def __init__(self, perm: Sequence[int], epsilon: float = 0.5, debug: bool = False):
        if not 0 < epsilon < 1:
            raise InvalidInput("epsilon must lie in (0, 1)")
        self.n = len(perm) - 2
        self.epsilon = epsilon
        self.k = shortcut_length(len(perm), epsilon)
        self.debug = debug
        self.nodes: list[_Node] = [None] * len(perm)  # type: ignore[list-item]
        self.initial_sign = [1] * len(perm)
        for x in perm:
            self.nodes[abs(x)] = _Node(x)
            self.initial_sign[abs(x)] = -1 if x < 0 else 1
        self._dirty: set[_Node] = set()
        self.root = self._build([self.nodes[abs(x)] for x in perm], 0, len(perm))
        self._dirty.clear()
        for node in self.nodes:
            self._set_shortcut(node)

    def _build(self, items, lo, hi):
        if lo >= hi:
            return None
        mid = (lo + hi) // 2
        x = items[mid]
        x.left = self._build(items, lo, mid)
        x.right = self._build(items, mid + 1, hi)
        self._update(x)
        return x

    # -- structural primitives -------------------------------------------

    def _push(self, x: _Node) -> None:
        t = x.tag
        if not t:
            return
        x.base += t
        l, r = x.left, x.right
        if t & 1:
            x.val = -x.val
            x.left, x.right = r, l
        dirty = self._dirty
        if l is not None:
            l.tag += t
            dirty.add(l)
        if r is not None:
            r.tag += t
            dirty.add(r)
        x.tag = 0
        dirty.add(x)

    def _update(self, x: _Node) -> None:
        l, r = x.left, x.right
        hl = hr = 0
        s = 1
        if l is not None:
            l.parent = x
            hl = l.height
            s += l.size
        if r is not None:
            r.parent = x
            hr = r.height
            s += r.size
        x.height = (hl if hl > hr else hr) + 1
        x.size = s
        self._dirty.add(x)

    def _rot_left(self, x: _Node) -> _Node:
        y = x.right
        self._push(y)
        x.right = y.left
        y.left = x
        self._update(x)
        self._update(y)
        return y

    def _rot_right(self, x: _Node) -> _Node:
        y = x.left
        self._push(y)
        x.left = y.right
        y.right = x
        self._update(x)
        self._update(y)
        return y

    def _mk(self, l, k: _Node, r) -> _Node:
        k.left, k.right = l, r
        self._update(k)
        return k

    def _join_right(self, l: _Node, k: _Node, r) -> _Node:
        self._push(l)
        c = l.right
        if _height(c) <= _height(r) + 1:
            t = self._mk(c, k, r)
            if t.height <= _height(l.left) + 1:
                l.right = t
                self._update(l)
                return l
            l.right = self._rot_right(t)
            self._update(l)
            return self._rot_left(l)
        t = self._join_right(c, k, r)
        l.right = t
        self._update(l)
        if t.height <= _height(l.left) + 1:
            return l
        return self._rot_left(l)

    def _join_left(self, l, k: _Node, r: _Node) -> _Node:
        self._push(r)
        c = r.left
        if _height(c) <= _height(l) + 1:
            t = self._mk(l, k, c)
            if t.height <= _height(r.right) + 1:
                r.left = t
                self._update(r)
                return r
            r.left = self._rot_left(t)
            self._update(r)
            return self._rot_right(r)
        t = self._join_left(l, k, c)
        r.left = t
        self._update(r)
        if t.height <= _height(r.right) + 1:
            return r
        return self._rot_right(r)

    def _join(self, l, k: _Node, r) -> _Node:
        hl, hr = _height(l), _height(r)
        if hl > hr + 1:
            return self._join_right(l, k, r)
        if hr > hl + 1:
            return self._join_left(l, k, r)
        return self._mk(l, k, r)

    def _split(self, t, i: int):
        """Split into the first ``i`` elements and the rest."""
        if t is None:
            return None, None
        self._push(t)
        l, r = t.left, t.right
        if l is not None:
            l.parent = None
        if r is not None:
            r.parent = None
        ls = _size(l)
        if i <= ls:
            a, b = self._split(l, i)
            return a, self._join(b, t, r)
        a, b = self._split(r, i - ls - 1)
        return self._join(l, t, a), b

    def _join2(self, l, r):
        if l is None:
            return r
        if r is None:
            return l
        rest, last = self._split(l, l.size - 1)
        last.parent = None
        return self._join(rest, last, r)

    # -- shortcuts ---------------------------------------------------------

    def _set_shortcut(self, y: _Node) -> None:
        z, s = y, 0
        for _ in range(self.k):
            p = z.parent
            if p is None:
                break
            s += z.tag
            z = p
        if z is y:
            y.sc, y.scsum = None, 0
        else:
            y.sc, y.scsum = z, s

    def _repair(self) -> None:
        dirty, self._dirty = self._dirty, set()
        k = self.k
        affected: dict[_Node, int] = {}
        for x in dirty:
            stack = [(x, 0)]
            while stack:
                y, d = stack.pop()
                seen = affected.get(y)
                if seen is not None and seen <= d:
                    continue
                affected[y] = d
                if d < k:
                    if y.left is not None:
                        stack.append((y.left, d + 1))
                    if y.right is not None:
                        stack.append((y.right, d + 1))
        for y in affected:
            self._set_shortcut(y)

    # -- public operations ---------------------------------------------------

    def reverse(self, a: int, b: int) -> None:
        if not (1 <= a <= b <= self.n):
            raise InvalidInput(f"interval [{a},{b}] outside 1..{self.n}")
        left, rest = self._split(self.root, a)
        mid, right = self._split(rest, b - a + 1)
        mid.tag += 1
        self._dirty.add(mid)
        root = self._join2(self._join2(left, mid), right)
        root.parent = None
        self._dirty.add(root)
        self.root = root
        self._repair()
        if self.debug:
            self.check_invariants()

    def element_at(self, i: int) -> int:
        if not 0 <= i <= self.n + 1:
            raise InvalidInput(f"position {i} outside 0..{self.n + 1}")
        x, par = self.root, 0
        while True:
            par ^= x.tag & 1
            if par:
                left, right = x.right, x.left
            else:
                left, right = x.left, x.right
            ls = _size(left)
            if i < ls:
                x = left
            elif i == ls:
                return -x.val if par else x.val
            else:
                i -= ls + 1
                x = right

    def _locate(self, m: int) -> tuple[int, int]:
        """Position and current signed value of magnitude ``m``."""
        x = self.nodes[m]
        path = []
        while x is not None:
            path.append(x)
            x = x.parent
        pos = par = 0
        for idx in range(len(path) - 1, -1, -1):
            y = path[idx]
            par ^= y.tag & 1
            if par:
                left, right = y.right, y.left
            else:
                left, right = y.left, y.right
            if idx == 0:
                pos += _size(left)
                break
            if path[idx - 1] is right:
                pos += _size(left) + 1
        v = path[0].val
        return pos, -v if par else v

    def position_of(self, m: int) -> int:
        if not 0 <= m <= self.n + 1:
            raise InvalidInput(f"magnitude {m} outside 0..{self.n + 1}")
        return self._locate(m)[0]

    def flip_count(self, m: int) -> int:
        if not 0 <= m <= self.n + 1:
            raise InvalidInput(f"magnitude {m} outside 0..{self.n + 1}")
        x = self.nodes[m]
        total = x.base
        while x.sc is not None:
            total += x.scsum
            x = x.sc
        return total + x.tag

    def naive_flip_count(self, m: int) -> int:
        x = self.nodes[m]
        total = x.base
        while x is not None:
            total += x.tag
            x = x.parent
        return total

    def sign_of(self, m: int) -> int:
        """+1 or -1, from the initial sign and the parity of ``flip_count``."""
        if not 0 <= m <= self.n + 1:
            raise InvalidInput(f"magnitude {m} outside 0..{self.n + 1}")
        s = self.initial_sign[m]
        return -s if self.flip_count(m) & 1 else s

    def to_list(self) -> list[int]:
        out: list[int] = []
        stack = [(self.root, 0, False)]
        while stack:
            x, par, emit = stack.pop()
            if x is None:
                continue
            if emit:
                out.append(-x.val if par else x.val)
                continue
            par ^= x.tag & 1
            left, right = (x.right, x.left) if par else (x.left, x.right)
            stack.append((right, par, False))
            stack.append((x, par, True))
            stack.append((left, par, False))
        return out

    def height(self) -> int:
        return self.root.height

    def check_invariants(self) -> None:
        """Exhaustive structural check; linear time, debug use only."""
        assert self.root.parent is None
        stack = [self.root]
        count = 0
        while stack:
            x = stack.pop()
            count += 1
            hl, hr = _height(x.left), _height(x.right)
            assert x.height == max(hl, hr) + 1
            assert abs(hl - hr) <= 1, "AVL balance"
            assert x.size == _size(x.left) + _size(x.right) + 1
            for c in (x.left, x.right):
                if c is not None:
                    assert c.parent is x
                    stack.append(c)
            sc, scsum = x.sc, x.scsum
            self._set_shortcut(x)
            assert (sc, scsum) == (x.sc, x.scsum), "stale shortcut"
        assert count == self.n + 2
        for m in range(self.n + 2):
            assert self.flip_count(m) == self.naive_flip_count(m)
