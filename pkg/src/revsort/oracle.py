"""Brute-force references used to check the fast pipeline at desk scale."""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .perm import (
    ContractViolation,
    InvalidInput,
    OverlapGraph,
    apply_reversal,
    frame,
    is_identity,
    toggle,
)

MAX_BFS_N = 8


class StateSpaceIndex:
    """Bijection between signed permutations of size ``n`` and ``0..2^n*n!-1``.

    The rank is ``lehmer(magnitudes) * 2^n + mask`` where bit ``j`` of the
    mask is set when the value at (unframed, 0-based) position ``j`` is
    negative.  Lexicographic order of the magnitudes matches Lehmer order.
    """

    def __init__(self, n: int):
        self.n = n
        self.size = factorial(n) << n

    def encode(self, values: Sequence[int]) -> int:
        n = self.n
        if len(values) == n + 2:
            values = values[1:-1]
        mags = [abs(x) for x in values]
        rank = 0
        for i, m in enumerate(mags):
            smaller = sum(1 for y in mags[i + 1:] if y < m)
            rank += smaller * factorial(n - 1 - i)
        mask = sum(1 << j for j, x in enumerate(values) if x < 0)
        return (rank << n) | mask

    def decode(self, code: int) -> tuple[int, ...]:
        n = self.n
        if not 0 <= code < self.size:
            raise InvalidInput(f"code {code} outside state space")
        mask, rank = code & ((1 << n) - 1), code >> n
        pool = list(range(1, n + 1))
        out = []
        for i in range(n):
            f = factorial(n - 1 - i)
            out.append(pool.pop(rank // f))
            rank %= f
        return tuple(-m if mask >> j & 1 else m for j, m in enumerate(out))


def _rank_rows(vals: np.ndarray, fact: np.ndarray) -> np.ndarray:
    n = vals.shape[1]
    mags = np.abs(vals)
    rank = np.zeros(len(vals), dtype=np.int64)
    for i in range(n - 1):
        smaller = (mags[:, i + 1:] < mags[:, i:i + 1]).sum(axis=1)
        rank += smaller * fact[n - 1 - i]
    neg = (vals < 0).astype(np.int64)
    mask = (neg << np.arange(n, dtype=np.int64)).sum(axis=1)
    return (rank << n) | mask


@lru_cache(maxsize=None)
def distance_table(n: int) -> np.ndarray:
    """Reversal distance of every ranked state, by BFS from the identity.

    Reversals are involutions, so the state graph is undirected and the
    distance from the identity equals the sorting distance.
    """
    if not 0 <= n <= MAX_BFS_N:
        raise InvalidInput(f"BFS oracle limited to n <= {MAX_BFS_N}, got {n}")
    index = StateSpaceIndex(n)
    dist = np.full(index.size, -1, dtype=np.int8)
    dist[0] = 0
    if n == 0:
        return dist
    perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int8)
    signs = np.array([[-1 if m >> j & 1 else 1 for j in range(n)]
                      for m in range(1 << n)], dtype=np.int8)
    fact = np.array([factorial(k) for k in range(n + 1)], dtype=np.int64)
    low = (1 << n) - 1
    intervals = [(a, b) for a in range(n) for b in range(a, n)]
    frontier = np.array([0], dtype=np.int64)
    level = 0
    chunk = 1 << 16
    while len(frontier):
        level += 1
        found = []
        for start in range(0, len(frontier), chunk):
            part = frontier[start:start + chunk]
            vals = perms[part >> n] * signs[part & low]
            for a, b in intervals:
                nxt = vals.copy()
                nxt[:, a:b + 1] = -vals[:, a:b + 1][:, ::-1]
                codes = _rank_rows(nxt, fact)
                codes = codes[dist[codes] < 0]
                if len(codes):
                    codes = np.unique(codes)
                    dist[codes] = level
                    found.append(codes)
        frontier = np.concatenate(found) if found else np.array([], dtype=np.int64)
    return dist


def bfs_distance(perm: Sequence[int]) -> int:
    """Exact reversal distance of a framed permutation (``n <= 8``)."""
    n = len(perm) - 2
    if n > MAX_BFS_N:
        raise InvalidInput(f"BFS oracle limited to n <= {MAX_BFS_N}, got {n}")
    return int(distance_table(n)[StateSpaceIndex(n).encode(perm)])


def all_signed_permutations(n: int) -> Iterable[tuple[int, ...]]:
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, p))


def verify_script(raw: Sequence[int], script: Iterable[Sequence[int]]) -> bool:
    perm = frame(raw)
    n = len(perm) - 2
    for iv in script:
        if len(iv) != 2:
            raise InvalidInput(f"malformed interval {iv!r}")
        a, b = int(iv[0]), int(iv[1])
        if not (1 <= a <= b <= n):
            raise InvalidInput(f"interval [{a},{b}] outside 1..{n}")
        perm = apply_reversal(perm, a, b)
    return is_identity(perm)


# -- reference toggle loop on explicit graphs --------------------------------

def _black_component_nodes(g: OverlapGraph) -> set[int]:
    out: set[int] = set()
    for comp in g.components():
        if any(g.black[v] for v in comp):
            out.update(comp)
    return out


def _white_nonsingleton_nodes(g: OverlapGraph) -> set[int]:
    return {v for comp in g.unoriented_components() for v in comp}


def _apply(g: OverlapGraph, seq: Sequence[int]) -> OverlapGraph:
    for v in seq:
        g = toggle(g, v)
    return g


def alg2_reference(g: OverlapGraph) -> list[int]:
    """Total toggle sequence by the slow split-and-extend procedure.

    Every graph state is recomputed from ``g`` by replaying the sequence, so
    nothing here shares logic with the incremental driver.
    """
    if g.unoriented_components():
        raise ContractViolation("graph has a non-singleton all-white component")
    seq: list[int] = []
    cur = g
    while True:
        black = [v for v in range(len(cur)) if cur.black[v]]
        if not black:
            break
        cur = toggle(cur, black[0])
        seq.append(black[0])
    while True:
        final = _apply(g, seq)
        U = _white_nonsingleton_nodes(final)
        if not U:
            return seq
        split = None
        for k in range(len(seq), -1, -1):
            if U & _black_component_nodes(_apply(g, seq[:k])):
                split = k
                break
        if split is None:
            raise ContractViolation("no valid split point")
        s1, s2 = seq[:split], seq[split:]
        g1 = _apply(g, s1)
        s3: list[int] = []
        while True:
            cand = sorted(v for v in U if g1.black[v])
            if not cand:
                break
            g1 = toggle(g1, cand[0])
            s3.append(cand[0])
        if not g1.black[s2[0]]:
            s3.pop()
        seq = s1 + s3 + s2


def is_valid_toggle_sequence(g: OverlapGraph, seq: Sequence[int]) -> bool:
    for v in seq:
        if not g.black[v]:
            return False
        g = toggle(g, v)
    return g.all_white_isolated()


# -- naive structure mirrors --------------------------------------------------

def naive_connectivity(ops: Iterable[tuple]) -> list[bool]:
    """Answer ``("connected", u, w)`` queries by recomputing reachability."""
    edges: dict[object, tuple[int, int]] = {}
    answers = []
    for op in ops:
        kind = op[0]
        if kind == "insert":
            _, u, w, label = op
            edges[label] = (u, w)
        elif kind == "delete":
            del edges[op[1]]
        elif kind == "connected":
            _, u, w = op
            answers.append(_reachable(edges.values(), u, w))
        else:
            raise InvalidInput(f"unknown op {kind!r}")
    return answers


def _reachable(edges: Iterable[tuple[int, int]], u: int, w: int) -> bool:
    if u == w:
        return True
    adj = defaultdict(list)
    for x, y in edges:
        adj[x].append(y)
        adj[y].append(x)
    seen, stack = {u}, [u]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y == w:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Component label per node (smallest member)."""
    label = list(range(n))

    def find(x):
        while label[x] != x:
            label[x] = label[label[x]]
            x = label[x]
        return x

    for x, y in edges:
        rx, ry = find(x), find(y)
        if rx != ry:
            label[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(n)]


class NaiveForest:
    """Parent-array rooted forest."""

    def __init__(self, n: int):
        self.parent = [-1] * n

    def link(self, v: int, w: int) -> None:
        assert self.parent[v] == -1 and self.find_root(w) != v
        self.parent[v] = w

    def cut(self, v: int) -> None:
        assert self.parent[v] != -1
        self.parent[v] = -1

    def find_root(self, v: int) -> int:
        while self.parent[v] != -1:
            v = self.parent[v]
        return v

    def evert(self, v: int) -> None:
        prev, cur = -1, v
        while cur != -1:
            nxt = self.parent[cur]
            self.parent[cur] = prev
            prev, cur = cur, nxt

    def path(self, u: int, w: int) -> list[int]:
        up = [u]
        while self.parent[up[-1]] != -1:
            up.append(self.parent[up[-1]])
        index = {x: i for i, x in enumerate(up)}
        down = [w]
        while down[-1] not in index:
            down.append(self.parent[down[-1]])
        return up[:index[down[-1]]] + down[::-1]


class NaiveReversalModel:
    """Array permutation with per-magnitude reversal counters."""

    def __init__(self, perm: Sequence[int]):
        self.perm = list(perm)
        self.flips = [0] * len(perm)

    def reverse(self, a: int, b: int) -> None:
        seg = self.perm[a:b + 1]
        self.perm[a:b + 1] = [-x for x in reversed(seg)]
        for x in seg:
            self.flips[abs(x)] += 1

    def element_at(self, i: int) -> int:
        return self.perm[i]

    def position_of(self, m: int) -> int:
        for j, x in enumerate(self.perm):
            if abs(x) == m:
                return j
        raise InvalidInput(m)
