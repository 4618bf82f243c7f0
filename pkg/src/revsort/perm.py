"""Signed permutations, reversals and overlap graphs.

A framed permutation is a plain tuple ``(0, p1, ..., pn, n+1)``.  Positions
are 0-based inside the tuple, so position ``i`` of the user-facing
permutation is index ``i`` of the framed tuple and the frame occupies
indices ``0`` and ``n+1``.  Reversal intervals are therefore 1-based
inclusive ranges that never touch the frame.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class InvalidInput(ValueError):
    """Raised for malformed permutations or out-of-range arguments."""


class ContractViolation(RuntimeError):
    """Raised when an operation's precondition is not met."""


class Interval(NamedTuple):
    a: int
    b: int


def frame(raw: Iterable[int]) -> tuple[int, ...]:
    values = [int(x) for x in raw]
    n = len(values)
    seen = [False] * (n + 1)
    for x in values:
        m = abs(x)
        if x == 0 or m > n:
            raise InvalidInput(f"value {x} out of range for n={n}")
        if seen[m]:
            raise InvalidInput(f"magnitude {m} repeated")
        seen[m] = True
    return (0, *values, n + 1)


def size(perm: Sequence[int]) -> int:
    return len(perm) - 2


def check_interval(perm: Sequence[int], a: int, b: int) -> Interval:
    n = len(perm) - 2
    if not (1 <= a <= b <= n):
        raise InvalidInput(f"interval [{a},{b}] outside 1..{n}")
    return Interval(a, b)


def apply_reversal(perm: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    check_interval(perm, a, b)
    p = list(perm)
    p[a:b + 1] = [-x for x in reversed(p[a:b + 1])]
    return tuple(p)


def apply_script(perm: Sequence[int], script: Iterable[Sequence[int]]) -> tuple[int, ...]:
    p = tuple(perm)
    for a, b in script:
        p = apply_reversal(p, a, b)
    return p


def is_identity(perm: Sequence[int]) -> bool:
    return all(x == i for i, x in enumerate(perm))


def positions(perm: Sequence[int]) -> list[int]:
    """Inverse permutation on magnitudes."""
    pos = [0] * len(perm)
    for j, x in enumerate(perm):
        pos[abs(x)] = j
    return pos


def adjacency_positions(perm: Sequence[int]) -> set[int]:
    return {j for j in range(len(perm) - 1) if perm[j] + 1 == perm[j + 1]}


def adjacency_node(perm: Sequence[int], j: int) -> int:
    if not (0 <= j < len(perm) - 1) or perm[j] + 1 != perm[j + 1]:
        raise ContractViolation(f"position {j} is not an adjacency")
    return max(perm[j], -perm[j + 1])


def initial_candidates(perm: Sequence[int]) -> set[int]:
    """Node indices of the non-isolated overlap-graph nodes."""
    isolated = {adjacency_node(perm, j) for j in adjacency_positions(perm)}
    return set(range(len(perm) - 1)) - isolated


def is_black(perm: Sequence[int], i: int, pos: Sequence[int] | None = None) -> bool:
    if pos is None:
        pos = positions(perm)
    return (perm[pos[i]] < 0) != (perm[pos[i + 1]] < 0)


def point_coordinates(perm: Sequence[int]) -> tuple[list[int], list[int]]:
    """Coordinates of the points ``m+`` and ``m-`` for every magnitude ``m``.

    Position ``p`` owns coordinates ``2p`` and ``2p+1``; a positive value
    puts its minus point first.  The frame's missing points (``0-`` and
    ``(n+1)+``) still get a coordinate but no arc uses them.
    """
    plus = [0] * len(perm)
    minus = [0] * len(perm)
    for p, x in enumerate(perm):
        m = abs(x)
        if x >= 0:
            minus[m], plus[m] = 2 * p, 2 * p + 1
        else:
            plus[m], minus[m] = 2 * p, 2 * p + 1
    return plus, minus


def arc_spans(perm: Sequence[int]) -> list[tuple[int, int]]:
    """Span ``(lo, hi)`` of arc ``v_i`` joining ``i+`` and ``(i+1)-``."""
    plus, minus = point_coordinates(perm)
    spans = []
    for i in range(len(perm) - 1):
        x, y = plus[i], minus[i + 1]
        spans.append((x, y) if x < y else (y, x))
    return spans


@dataclass
class OverlapGraph:
    black: list[bool]
    adj: list[set[int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.black)

    def copy(self) -> OverlapGraph:
        return OverlapGraph(list(self.black), [set(s) for s in self.adj])

    def edges(self) -> set[tuple[int, int]]:
        return {(u, w) for u, nb in enumerate(self.adj) for w in nb if u < w}

    def is_isolated(self, v: int) -> bool:
        return not self.adj[v]

    def all_white_isolated(self) -> bool:
        return not any(self.black) and not any(self.adj)

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.black)
        out = []
        for s in range(len(self.black)):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def unoriented_components(self) -> list[list[int]]:
        return [c for c in self.components()
                if len(c) > 1 and not any(self.black[v] for v in c)]


def build_overlap_graph(perm: Sequence[int]) -> OverlapGraph:
    # quadratic on purpose: used by oracles and small-n checks only
    spans = arc_spans(perm)
    pos = positions(perm)
    k = len(spans)
    black = [is_black(perm, i, pos) for i in range(k)]
    adj: list[set[int]] = [set() for _ in range(k)]
    for u in range(k):
        lu, ru = spans[u]
        for w in range(u + 1, k):
            lw, rw = spans[w]
            if lu < lw < ru < rw or lw < lu < rw < ru:
                adj[u].add(w)
                adj[w].add(u)
    return OverlapGraph(black, adj)


def toggle(g: OverlapGraph, v: int) -> OverlapGraph:
    """Local complementation of the closed neighbourhood of black node ``v``."""
    if not g.black[v]:
        raise ContractViolation(f"node {v} is white")
    out = g.copy()
    closed = sorted(g.adj[v] | {v})
    for x in closed:
        out.black[x] = not out.black[x]
    for i, x in enumerate(closed):
        for y in closed[i + 1:]:
            if y in out.adj[x]:
                out.adj[x].discard(y)
                out.adj[y].discard(x)
            else:
                out.adj[x].add(y)
                out.adj[y].add(x)
    return out


def toggle_sequence(g: OverlapGraph, seq: Iterable[int]) -> OverlapGraph:
    for v in seq:
        g = toggle(g, v)
    return g


def rho(perm: Sequence[int], i: int, pos: Sequence[int] | None = None) -> Interval:
    """The reversal realising the toggle of black node ``v_i``."""
    if pos is None:
        pos = positions(perm)
    if not is_black(perm, i, pos):
        raise ContractViolation(f"node {i} is white")
    a, b = sorted((pos[i], pos[i + 1]))
    if perm[a] + perm[b] == 1:
        return Interval(a, b - 1)
    return Interval(a + 1, b)
