"""Unoriented components, hurdles and the preprocessing that clears them.

Components of the overlap graph are found with a single sweep over the arc
endpoints, so inputs without unoriented components cost ``O(n a(n))``.  When
unoriented components exist, each clearing move recomputes everything from
scratch, which is quadratic in the worst case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Interval, apply_reversal, arc_spans, positions


def overlap_components(perm: Sequence[int]) -> list[int]:
    """Component representative of every arc ``v_0..v_n``."""
    spans = arc_spans(perm)
    k = len(spans)
    at = [-1] * (2 * len(perm) + 2)
    for i, (lo, hi) in enumerate(spans):
        at[lo] = i
        at[hi] = i
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # stack of [representative, open arcs] blocks, contiguous in opening order
    stack: list[list[int]] = []
    for c, i in enumerate(at):
        if i < 0:
            continue
        if spans[i][0] == c:
            stack.append([i, 1])
            continue
        root = find(i)
        carried = 0
        while find(stack[-1][0]) != root:
            rep, count = stack.pop()
            parent[find(rep)] = root
            carried += count
        top = stack[-1]
        top[1] += carried - 1
        if top[1] == 0:
            stack.pop()
    return [find(i) for i in range(k)]


def cycle_count(perm: Sequence[int]) -> int:
    """Number of cycles of the breakpoint graph, trivial ones included."""
    spans = arc_spans(perm)
    top = 2 * len(perm) - 2  # coordinate of (n+1)-
    gray = [-1] * (top + 1)
    for lo, hi in spans:
        gray[lo], gray[hi] = hi, lo
    seen = [False] * (top + 1)
    cycles = 0
    for start in range(1, top + 1):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = x + 1 if x & 1 else x - 1  # black mate
            seen[y] = True
            x = gray[y]
    return cycles


@dataclass
class HurdleInfo:
    comp: list[int]                 # representative per arc
    unoriented: dict[int, list[int]]  # representative -> arcs
    hurdles: list[int]              # representatives in circular order
    super_hurdles: set[int]
    fortress: bool

    @property
    def simple_hurdles(self) -> list[int]:
        return [h for h in self.hurdles if h not in self.super_hurdles]


def analyse(perm: Sequence[int]) -> HurdleInfo:
    comp = overlap_components(perm)
    pos = positions(perm)
    members: dict[int, list[int]] = {}
    for i, r in enumerate(comp):
        members.setdefault(r, []).append(i)
    unoriented = {}
    for r, arcs in members.items():
        if len(arcs) < 2:
            continue
        if all((perm[pos[i]] < 0) == (perm[pos[i + 1]] < 0) for i in arcs):
            unoriented[r] = arcs
    if not unoriented:
        return HurdleInfo(comp, {}, [], set(), False)

    spans = arc_spans(perm)
    at = [-1] * (2 * len(perm) + 2)
    for i, (lo, hi) in enumerate(spans):
        at[lo] = at[hi] = i
    seq: list[int] = []
    for i in at:
        if i >= 0 and comp[i] in unoriented:
            r = comp[i]
            if not seq or seq[-1] != r:
                seq.append(r)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq.pop()
    runs: dict[int, int] = {}
    for r in seq:
        runs[r] = runs.get(r, 0) + 1
    m = len(seq)
    hurdles = [r for r in seq if runs[r] == 1]
    supers = set()
    for idx, r in enumerate(seq):
        if runs[r] != 1 or m < 3:
            continue
        before, after = seq[idx - 1], seq[(idx + 1) % m]
        if before == after and runs[before] == 2:
            supers.add(r)
    h = len(hurdles)
    fortress = h % 2 == 1 and h >= 3 and len(supers) == h
    return HurdleInfo(comp, unoriented, hurdles, supers, fortress)


def reversal_distance(perm: Sequence[int]) -> int:
    """Distance by the hurdle formula ``(n+1) - cycles + hurdles + fortress``."""
    info = analyse(perm)
    return len(perm) - 1 - cycle_count(perm) + len(info.hurdles) + int(info.fortress)


def _black_edge(perm: Sequence[int], arc: int) -> int:
    """Index ``p`` of a black edge (between positions p, p+1) on the arc's cycle."""
    lo, _ = arc_spans(perm)[arc]
    return (lo - 1) // 2


def merge_move(perm: Sequence[int], arc_a: int, arc_b: int) -> Interval:
    p, q = sorted((_black_edge(perm, arc_a), _black_edge(perm, arc_b)))
    return Interval(p + 1, q)


def cut_move(perm: Sequence[int], arc: int) -> Interval:
    """Reversal between the two black edges flanking a white arc."""
    pos = positions(perm)
    lo, hi = sorted((pos[arc], pos[arc + 1]))
    if perm[hi] == perm[lo] + 1:
        return Interval(lo + 1, hi - 1)
    return Interval(lo, hi)


def _candidates(perm: Sequence[int], info: HurdleInfo):
    hs = info.hurdles
    h = len(hs)
    first = {r: info.unoriented[r][0] for r in hs}
    if h % 2 == 0:
        yield merge_move(perm, first[hs[0]], first[hs[h // 2]])
    elif info.simple_hurdles:
        yield cut_move(perm, first[info.simple_hurdles[0]])
    elif h >= 3:
        yield merge_move(perm, first[hs[0]], first[hs[h // 2]])
    # fallbacks, all still gated by the distance check
    for x in range(h):
        for y in range(x + 1, h):
            yield merge_move(perm, first[hs[x]], first[hs[y]])
    for r in hs:
        for arc in info.unoriented[r]:
            yield cut_move(perm, arc)


def clear_white_components(perm: Sequence[int]) -> tuple[list[Interval], tuple[int, ...]]:
    """Reversals removing every non-singleton all-white component, each lowering d by one."""
    perm = tuple(perm)
    prefix: list[Interval] = []
    info = analyse(perm)
    while info.unoriented:
        d = len(perm) - 1 - cycle_count(perm) + len(info.hurdles) + int(info.fortress)
        for iv in _candidates(perm, info):
            nxt = apply_reversal(perm, *iv)
            if reversal_distance(nxt) == d - 1:
                break
        else:
            raise RuntimeError(f"no distance-decreasing clearing move for {perm}")
        prefix.append(iv)
        perm = nxt
        info = analyse(perm)
    return prefix, perm
