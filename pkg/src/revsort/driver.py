"""The sorting driver: hurdle clearing, then the split-and-undo toggle loop.

Nodes of the overlap graph are never materialised.  Toggling ``v_i`` is the
reversal ``rho(v_i)`` applied to the tree and the blue/red graph, a black
candidate is any red pair found by :meth:`RevGraph.find_active`, and undoing
a toggle re-applies the stored interval.

The toggle sequence is kept as ``s1`` (applied) followed by ``s2``
(committed, replayed at the end).  Nodes only ever move from the end of
``s1`` to the front of ``s2``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .hurdles import clear_white_components
from .perm import ContractViolation, Interval, frame, initial_candidates
from .rev_graph import RevGraph
from .reversal_tree import ReversalTree


@dataclass
class Counters:
    toggles: int = 0
    undos: int = 0
    find_active: int = 0


class Sorter:
    """One sort of one permutation; not reusable."""

    def __init__(self, perm: Sequence[int], epsilon: float = 0.5, debug: bool = False):
        self.prefix, cleared = clear_white_components(perm)
        self.start = cleared
        self.n = len(cleared) - 2
        self.tree = ReversalTree(cleared, epsilon=epsilon)
        self.v_set = initial_candidates(cleared)
        self.graph = RevGraph(self.tree, self.v_set)
        self.s1: list[tuple[int, Interval]] = []
        self.s2: deque[int] = deque()
        self.counters = Counters()
        self.debug = debug
        self._pending: Optional[int] = None

    # -- permutation queries -------------------------------------------------

    def _rho(self, i: int) -> Interval:
        tree = self.tree
        pa, pb = tree.position_of(i), tree.position_of(i + 1)
        sa, sb = tree.sign_of(i), tree.sign_of(i + 1)
        if sa == sb:
            raise ContractViolation(f"node {i} is white")
        va, vb = sa * i, sb * (i + 1)
        if pa > pb:
            pa, pb, va, vb = pb, pa, vb, va
        if va + vb == 1:
            return Interval(pa, pb - 1)
        return Interval(pa + 1, pb)

    def _adjacency_at(self, j: int) -> int:
        """Node index of the adjacency at positions (j, j+1), or -1."""
        if j < 0 or j > self.n:
            return -1
        x, y = self.tree.element_at(j), self.tree.element_at(j + 1)
        if x + 1 != y:
            return -1
        return x if x >= 0 else -y

    def _find(self) -> Optional[int]:
        self.counters.find_active += 1
        return self.graph.find_active()

    # -- loop steps -------------------------------------------------------------

    def step_find_and_toggle(self) -> bool:
        i, self._pending = self._pending, None
        if i is None:
            i = self._find()
        if i is None:
            return False
        iv = self._rho(i)
        self.graph.apply_reversal(*iv)
        self.counters.toggles += 1
        self.s1.append((i, iv))
        self.v_set.discard(i)
        self.graph.remove_red(i)
        for j in (iv.a - 1, iv.b):
            k = self._adjacency_at(j)
            if k in self.v_set:
                self.v_set.remove(k)
                self.graph.remove_red(k)
        if self.debug:
            self.check_invariants()
        return True

    def step_undo(self) -> int:
        if not self.s1:
            raise ContractViolation("nothing to undo")
        w, iv = self.s1.pop()
        self.graph.apply_reversal(*iv)
        self.counters.undos += 1
        if self.debug:
            self.check_invariants()
        return w

    def s2_first_is_white(self) -> bool:
        if not self.s2:
            raise ContractViolation("s2 is empty")
        w = self.s2[0]
        return self.tree.sign_of(w) == self.tree.sign_of(w + 1)

    def replay_s2(self) -> list[Interval]:
        if self.v_set:
            raise ContractViolation("replay before the main loop finished")
        out = []
        for w in self.s2:
            iv = self._rho(w)
            self.tree.reverse(*iv)
            out.append(iv)
        return out

    def run(self) -> list[Interval]:
        while True:
            while self.step_find_and_toggle():
                pass
            if self.s2 and self.s2_first_is_white():
                self.step_undo()
            if not self.v_set:
                break
            before = len(self.s2)
            while True:
                i = self._find()
                if i is not None:
                    self._pending = i
                    break
                self.s2.appendleft(self.step_undo())
            if self.debug and len(self.s2) < before:
                raise ContractViolation("s2 shrank")
        applied = [iv for _, iv in self.s1]
        tail = self.replay_s2()
        return list(self.prefix) + applied + tail

    def toggle_sequence(self) -> list[int]:
        """Node sequence ``s1, s2`` (valid once :meth:`run` has returned)."""
        return [i for i, _ in self.s1] + list(self.s2)

    def check_invariants(self) -> None:
        self.tree.check_invariants()
        self.graph.check_invariants()
        if self.graph.red_present != self.v_set:
            raise ContractViolation("red pairs and candidates diverged")
        seen = [i for i, _ in self.s1] + list(self.s2)
        if len(seen) != len(set(seen)) or set(seen) & self.v_set:
            raise ContractViolation("a node index appears twice")


def sort(raw: Sequence[int], epsilon: float = 0.5, debug: bool = False) -> list[Interval]:
    """A shortest reversal script for ``raw`` (unframed, signed)."""
    sorter = Sorter(frame(raw), epsilon=epsilon, debug=debug)
    return sorter.run()
