"""Link-cut forest over a fixed node universe ``0..N-1``.

Preferred paths are kept in splay trees ordered by depth (shallow to deep,
left to right).  ``evert`` is provided because the spanning-forest mirror
receives unrooted edges; the path search itself never needs it.
"""

from __future__ import annotations

from typing import Callable

from .perm import ContractViolation

NIL = -1


class LinkCutForest:
    def __init__(self, n: int):
        self.n = n
        self.left = [NIL] * n
        self.right = [NIL] * n
        self.parent = [NIL] * n  # splay parent, or path-parent at a splay root
        self.rev = [False] * n

    def _is_splay_root(self, x: int) -> bool:
        p = self.parent[x]
        return p == NIL or (self.left[p] != x and self.right[p] != x)

    def _push(self, x: int) -> None:
        if self.rev[x]:
            left, right, rev = self.left, self.right, self.rev
            l, r = left[x], right[x]
            left[x], right[x] = r, l
            if l != NIL:
                rev[l] = not rev[l]
            if r != NIL:
                rev[r] = not rev[r]
            rev[x] = False

    def _rotate(self, x: int) -> None:
        left, right, parent = self.left, self.right, self.parent
        p = parent[x]
        g = parent[p]
        if not self._is_splay_root(p):
            if left[g] == p:
                left[g] = x
            else:
                right[g] = x
        parent[x] = g
        if left[p] == x:
            c = right[x]
            left[p] = c
            right[x] = p
        else:
            c = left[x]
            right[p] = c
            left[x] = p
        if c != NIL:
            parent[c] = p
        parent[p] = x

    def _splay(self, x: int) -> None:
        chain = [x]
        y = x
        while not self._is_splay_root(y):
            y = self.parent[y]
            chain.append(y)
        for y in reversed(chain):
            self._push(y)
        parent, left = self.parent, self.left
        while not self._is_splay_root(x):
            p = parent[x]
            if not self._is_splay_root(p):
                g = parent[p]
                if (left[g] == p) == (left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def access(self, x: int) -> int:
        """Make root..x a preferred path; returns the last path-parent jump target."""
        last = NIL
        y = x
        while y != NIL:
            self._splay(y)
            self.right[y] = last
            last = y
            y = self.parent[y]
        self._splay(x)
        return last

    def evert(self, x: int) -> None:
        self.access(x)
        self.rev[x] = not self.rev[x]

    def find_root(self, x: int) -> int:
        self.access(x)
        y = x
        while True:
            self._push(y)
            if self.left[y] == NIL:
                break
            y = self.left[y]
        self._splay(y)
        return y

    def connected_in_forest(self, u: int, w: int) -> bool:
        return u == w or self.find_root(u) == self.find_root(w)

    def is_root(self, v: int) -> bool:
        self.access(v)
        return self.left[v] == NIL

    def link(self, v: int, w: int) -> None:
        """Make root ``v`` a child of ``w``."""
        self.access(v)
        if self.left[v] != NIL:
            raise ContractViolation(f"{v} is not a root")
        if self.find_root(w) == v:
            raise ContractViolation(f"{v} and {w} already share a tree")
        self.access(v)
        self.parent[v] = w

    def cut(self, v: int) -> None:
        """Detach ``v`` from its parent."""
        self.access(v)
        l = self.left[v]
        if l == NIL:
            raise ContractViolation(f"{v} is a root")
        self.parent[l] = NIL
        self.left[v] = NIL

    def link_edge(self, x: int, y: int) -> None:
        self.evert(x)
        self.link(x, y)

    def cut_edge(self, x: int, y: int) -> None:
        self.evert(x)
        self.access(y)
        if self.left[y] != x or self.right[x] != NIL:
            raise ContractViolation(f"no tree edge {x}-{y}")
        self.cut(y)

    # -- path search ---------------------------------------------------------

    def _first(self, x: int) -> int:
        """Shallowest node of the splay tree containing ``x`` (splayed)."""
        self._splay(x)
        y = x
        while True:
            self._push(y)
            if self.left[y] == NIL:
                break
            y = self.left[y]
        self._splay(y)
        return y

    def _search(self, a: int, zero_a: bool, side_of: Callable[[int], bool]) -> tuple[int, int]:
        """Boundary between ``a`` and the deepest node of its splay tree.

        ``a`` must be shallowest-so-far with side ``zero_a`` and the deepest
        node must have the other side.  Returns ``(lo, hi)`` adjacent on the
        path, ``lo`` shallower, ``side(lo) == zero_a != side(hi)``.
        """
        self._splay(a)
        self._push(a)
        lo, hi = a, NIL
        cur = self.right[a]
        last = a
        while cur != NIL:
            self._push(cur)
            last = cur
            if side_of(cur) == zero_a:
                lo = cur
                cur = self.right[cur]
            else:
                hi = cur
                cur = self.left[cur]
        if hi == NIL:
            raise ContractViolation("sides of the path endpoints agree")
        self._splay(last)
        return lo, hi

    def locate_boundary(self, u: int, w: int,
                        side_of: Callable[[int], bool]) -> tuple[int, int]:
        """Adjacent ``(x, y)`` on the u-w tree path with ``side_of(x)`` true and ``side_of(y)`` false.

        ``side_of`` returns True for the ZERO side; ``u`` must be ZERO and
        ``w`` PRIME.  After ``access(u)`` and ``access(w)`` the path is the
        splay tree of ``u`` (from the child of the LCA down to ``u``)
        followed by the part of ``w``'s splay tree from the LCA down to ``w``.
        """
        if u == w:
            raise ContractViolation("endpoints coincide")
        if self.find_root(u) != self.find_root(w):
            raise ContractViolation(f"{u} and {w} are disconnected")
        self.access(u)
        lca = self.access(w)
        if lca == u or side_of(lca):
            lo, hi = self._search(lca, True, side_of)
            return lo, hi
        c = self._first(u)
        if side_of(c):
            return c, lca
        lo, hi = self._search(c, False, side_of)
        return hi, lo

    # -- debug helpers -------------------------------------------------------

    def _inorder(self, x: int) -> list[int]:
        """In-order of the splay tree rooted at ``x`` honoring pending flips."""
        out: list[int] = []
        stack = [(x, False, False)]
        while stack:
            y, flip, emit = stack.pop()
            if y == NIL:
                continue
            if emit:
                out.append(y)
                continue
            flip ^= self.rev[y]
            l, r = self.left[y], self.right[y]
            if flip:
                l, r = r, l
            stack.append((r, flip, False))
            stack.append((y, flip, True))
            stack.append((l, flip, False))
        return out

    def _splay_root_of(self, x: int) -> int:
        while not self._is_splay_root(x):
            x = self.parent[x]
        return x

    def tree_parent(self, x: int) -> int:
        """Represented parent of ``x``; does not restructure."""
        r = self._splay_root_of(x)
        order = self._inorder(r)
        i = order.index(x)
        if i > 0:
            return order[i - 1]
        return self.parent[r]

    def path_fragments(self, u: int, w: int) -> int:
        """Number of preferred paths met by the u-w tree path (no restructuring)."""
        up = [u]
        while self.tree_parent(up[-1]) != NIL:
            up.append(self.tree_parent(up[-1]))
        index = {x: i for i, x in enumerate(up)}
        down = [w]
        while down[-1] not in index:
            down.append(self.tree_parent(down[-1]))
        path = up[:index[down[-1]]] + down[::-1]
        return len({self._splay_root_of(x) for x in path})

    def tree_edges(self) -> set[tuple[int, int]]:
        out = set()
        for x in range(self.n):
            p = self.tree_parent(x)
            if p != NIL:
                out.add((min(x, p), max(x, p)))
        return out
