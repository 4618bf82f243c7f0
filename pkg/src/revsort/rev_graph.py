"""The blue/red graph whose connectivity exposes oriented candidates.

Every element ``e`` of the framed permutation has two copies, ``e`` (PLAIN)
and ``e'`` (PRIMED).  Blue edges join the copies of elements at consecutive
positions, so they form two paths: the one starting at ``0`` reads the
current permutation left to right.  A PLAIN copy sits on that path exactly
when its element has been inside an even number of reversals.

For each candidate index ``i`` a pair of red edges joins ``i`` with ``i+1``:
straight (``{i, i+1}``, ``{i', (i+1)'}``) when the two signs agreed at build
time, crossed (``{i, (i+1)'}``, ``{i', i+1}``) otherwise.  A red edge whose
ends lie on different blue paths certifies that ``v_i`` is black, and one
exists iff ``0`` and ``0'`` are connected.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .dynconn import DynamicConnectivity
from .link_cut import LinkCutForest
from .perm import ContractViolation, Interval
from .reversal_tree import ReversalTree

PLAIN, PRIMED = 0, 1


def node(element: int, side: int) -> int:
    return 2 * element + side


def element_of(x: int) -> int:
    return x >> 1


def side_of(x: int) -> int:
    return x & 1


def complement(x: int) -> int:
    return x ^ 1


def _key(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


class RevGraph:
    def __init__(self, tree: ReversalTree, candidates: Iterable[int]):
        self.tree = tree
        self.n = tree.n
        size = 2 * (self.n + 2)
        self.mirror = LinkCutForest(size)
        mirror = self.mirror
        self.dyn = DynamicConnectivity(
            size,
            on_link=lambda u, w, _: mirror.link_edge(u, w),
            on_cut=lambda u, w, _: mirror.cut_edge(u, w),
        )
        self.blue: dict[tuple[int, int], int] = {}
        self.red_index: dict[tuple[int, int], int] = {}
        self.red_present: set[int] = set()
        self._next_label = 2 * (self.n + 1)  # labels below are red

        order = tree.to_list()
        for j in range(len(order) - 1):
            x, y = abs(order[j]), abs(order[j + 1])
            self._add_blue(node(x, PLAIN), node(y, PLAIN))
            self._add_blue(node(x, PRIMED), node(y, PRIMED))
        sign = {abs(v): v < 0 for v in order}
        for i in sorted(candidates):
            if not 0 <= i <= self.n:
                raise ContractViolation(f"candidate {i} outside 0..{self.n}")
            cross = PRIMED if sign[i] != sign[i + 1] else PLAIN
            self._add_red(i, node(i, PLAIN), node(i + 1, cross), 2 * i)
            self._add_red(i, node(i, PRIMED), node(i + 1, cross ^ 1), 2 * i + 1)
            self.red_present.add(i)

    # -- edge bookkeeping ------------------------------------------------------

    def _add_blue(self, x: int, y: int) -> None:
        label = self._next_label
        self._next_label += 1
        self.blue[_key(x, y)] = label
        self.dyn.insert_edge(x, y, label)

    def _drop_blue(self, x: int, y: int) -> None:
        label = self.blue.pop(_key(x, y), None)
        if label is None:
            raise ContractViolation(f"missing blue edge {x}-{y}")
        self.dyn.delete_edge(label)

    def _add_red(self, i: int, x: int, y: int, label: int) -> None:
        self.red_index[_key(x, y)] = i
        self.dyn.insert_edge(x, y, label)

    # -- public operations -----------------------------------------------------

    def zero_copy(self, element: int) -> int:
        """The copy of ``element`` on the path that starts at ``0``."""
        return node(element, self.tree.flip_count(element) & 1)

    def is_zero_side(self, x: int) -> bool:
        return (self.tree.flip_count(x >> 1) ^ x) & 1 == 0

    def apply_reversal(self, a: int, b: int) -> None:
        tree = self.tree
        if not 1 <= a <= b <= self.n:
            raise ContractViolation(f"interval [{a},{b}] outside 1..{self.n}")
        x0 = self.zero_copy(abs(tree.element_at(a - 1)))
        y0 = self.zero_copy(abs(tree.element_at(a)))
        p0 = y0 if a == b else self.zero_copy(abs(tree.element_at(b)))
        t0 = self.zero_copy(abs(tree.element_at(b + 1)))
        cx, cy, cp, ct = x0 ^ 1, y0 ^ 1, p0 ^ 1, t0 ^ 1
        # New edges go in first so the deletions find them as replacements.
        self._add_blue(x0, cp)
        self._add_blue(cx, p0)
        self._add_blue(cy, t0)
        self._add_blue(y0, ct)
        self._drop_blue(x0, y0)
        self._drop_blue(cx, cy)
        self._drop_blue(p0, t0)
        self._drop_blue(cp, ct)
        tree.reverse(a, b)

    def remove_red(self, i: int) -> None:
        if i not in self.red_present:
            raise ContractViolation(f"no red pair for {i}")
        self.red_present.remove(i)
        self.dyn.delete_edge(2 * i)
        self.dyn.delete_edge(2 * i + 1)

    def find_active(self) -> Optional[int]:
        """Index of a red pair whose edges join the two blue paths, if any."""
        if not self.dyn.connected(0, 1):
            return None
        x, y = self.mirror.locate_boundary(0, 1, self.is_zero_side)
        i = self.red_index.get(_key(x, y))
        if i is None or i not in self.red_present:
            raise ContractViolation(f"boundary edge {x}-{y} is not a live red edge")
        return i

    # -- inspection --------------------------------------------------------------

    def blue_edges(self) -> set[tuple[int, int]]:
        return set(self.blue)

    def blue_paths(self) -> tuple[list[int], list[int]]:
        """The two blue paths, walked from ``0`` and from ``0'``."""
        adj: dict[int, list[int]] = {}
        for x, y in self.blue:
            adj.setdefault(x, []).append(y)
            adj.setdefault(y, []).append(x)
        out = []
        for start in (0, 1):
            path, prev, cur = [start], -1, start
            while True:
                nxt = [z for z in adj.get(cur, ()) if z != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                path.append(cur)
            out.append(path)
        return out[0], out[1]

    def check_invariants(self) -> None:
        """Path shape, mirror symmetry, path order and mirror coherence (linear, debug only)."""
        zero, prime = self.blue_paths()
        size = 2 * (self.n + 2)
        if len(zero) + len(prime) != size or len(set(zero) | set(prime)) != size:
            raise ContractViolation("blue edges do not form two spanning paths")
        for x, y in self.blue:
            if _key(x ^ 1, y ^ 1) not in self.blue:
                raise ContractViolation(f"blue edge {x}-{y} has no mirror")
        order = [abs(v) for v in self.tree.to_list()]
        if [element_of(x) for x in zero] != order:
            raise ContractViolation("0-path does not follow the permutation")
        for x in zero:
            if not self.is_zero_side(x):
                raise ContractViolation(f"parity law broken at node {x}")
        tree_pairs = {_key(u, w) for u, w in self.dyn.tree_edges().values()}
        if tree_pairs != self.mirror.tree_edges():
            raise ContractViolation("link-cut mirror out of sync")
