"""Exhaustive small-case Ramsey search, construction verification, and a
seeded generator of rainbow-triangle-free colorings.

The search decides whether some red/blue coloring of K_n avoids a
monochromatic target pattern in both colors.  Vertices are added one at a
time; each new vertex's edge-color vector is enumerated in lexicographic
order (color 1 before color 2), and a branch dies as soon as either color
class contains the pattern on the already-colored prefix.  Containment checks
are incremental: adding a vertex only changes the neighborhoods of that
vertex and of its new neighbors, so only those centers are re-tested.

Symmetry breaking is deliberately lightweight and loses no outcomes: swapping
the two colors and permuting vertices preserve pattern-freeness, so edge
{0, 1} may be fixed to color 1 and vertex 0's edge colors forced monotone
(its color-1 block first).  Every coloring is isomorphic to one satisfying
both constraints, hence a completed search proves nonexistence for all
colorings, not just the enumerated ones.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional

from gallai_ramsey.colored_graph import (
    ColoredCompleteGraph,
    ParameterError,
    lsb_index,
)
from gallai_ramsey.patterns import (
    RainbowTriangle,
    SPattern,
    SWitness,
    find_mono_S,
    find_rainbow_triangle,
    matching_edges_at_least,
)

WITNESS_FOUND = "witness_found"
EXHAUSTED_NONE = "exhausted_none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits for the exhaustive search."""

    max_nodes: int = 10**9
    max_time: float = 3600.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_time <= 0:
            raise ParameterError("budget limits must be positive")


@dataclass
class SearchOutcome:
    status: str
    witness: Optional[ColoredCompleteGraph]
    nodes_explored: int
    elapsed: float


def _nu_at_least(rows: list[int], members: int, need: int) -> bool:
    """Does the subgraph induced on the `members` bitset have `need` disjoint edges?

    Specialized for the tiny thresholds the search needs; falls back to the
    general kernel routine for larger ones.
    """
    if need <= 0:
        return True
    if need == 1:
        mm = members
        while mm:
            v = lsb_index(mm)
            mm &= mm - 1
            if rows[v] & mm:
                return True
        return False
    if need == 2:
        # greedy maximal matching; one stalled edge leaves only the swap case
        first = None
        avail = members
        while avail:
            v = lsb_index(avail)
            avail &= avail - 1
            cand = rows[v] & avail
            if cand:
                w = lsb_index(cand)
                if first is not None:
                    return True
                first = (v, w)
                avail &= ~(1 << w)
        if first is None:
            return False
        a, b = first
        na = rows[a] & members & ~(1 << b)
        nb = rows[b] & members & ~(1 << a)
        if not na or not nb:
            return False
        union = na | nb
        return union & (union - 1) != 0
    return matching_edges_at_least(rows.__getitem__, members, need) is not None


def exhaustive_witness_search(
    n: int,
    p: SPattern,
    budget: SearchBudget | None = None,
    *,
    prune: bool = True,
    break_symmetry: bool = True,
    collect: Optional[list[ColoredCompleteGraph]] = None,
) -> SearchOutcome:
    """Search all 2-colorings of K_n for one avoiding the pattern in both colors.

    Returns the first witness in the deterministic enumeration order, or
    exhausted_none when the (symmetry-reduced) tree is fully explored, or
    budget_exceeded.  ``prune`` and ``break_symmetry`` exist so tests can
    compare against the unpruned/unreduced search on tiny inputs; `collect`
    gathers every surviving leaf instead of stopping at the first.
    """
    if n < 2:
        raise ParameterError(f"search needs n >= 2, got n={n}")
    if n > 60:
        raise ParameterError(f"search supports n <= 60, got n={n}")
    if budget is None:
        budget = SearchBudget()
    t, r = p.t, p.r
    start = time.perf_counter()
    deadline = start + budget.max_time
    rows = ([0] * n, [0] * n)
    state = {"nodes": 0, "status": EXHAUSTED_NONE, "witness": None}

    def prefix_contains(v: int) -> bool:
        # after adding vertex v only v and its new neighbors gained neighbors
        for rc in rows:
            mv = rc[v]
            if mv.bit_count() >= t - 1 and _nu_at_least(rc, mv, r):
                return True
            mm = mv
            while mm:
                u = lsb_index(mm)
                mm &= mm - 1
                mu = rc[u]
                if mu.bit_count() >= t - 1 and _nu_at_least(rc, mu, r):
                    return True
        return False

    def whole_graph_contains(count: int) -> bool:
        for rc in rows:
            for u in range(count):
                mu = rc[u]
                if mu.bit_count() >= t - 1 and _nu_at_least(rc, mu, r):
                    return True
        return False

    def snapshot() -> ColoredCompleteGraph:
        buf = bytearray()
        for u in range(n):
            for v in range(u + 1, n):
                buf.append(2 if (rows[1][u] >> v) & 1 else 1)
        return ColoredCompleteGraph(n, 2, buf)

    def dfs(v: int) -> bool:
        """Extend vertex v; True aborts the whole search (witness or budget)."""
        if v == n:
            if not prune and whole_graph_contains(n):
                return False
            g = snapshot()
            if collect is not None:
                collect.append(g)
                return False
            state["status"] = WITNESS_FOUND
            state["witness"] = g
            return True
        hi = 1 << v
        e = 0
        if break_symmetry:
            if v == 1:
                hi = 1  # color swap: edge {0,1} is color 1
            elif v >= 2 and (rows[1][0] >> (v - 1)) & 1:
                # vertex 0's colors are monotone: once color 2 appears, it stays
                e = 1 << (v - 1)
        # assign vector e: bit j of e gives edge {v-1-j, v}, set = color 2
        bit_v = 1 << v
        for i in range(v):
            ci = (e >> (v - 1 - i)) & 1
            rows[ci][i] |= bit_v
            rows[ci][v] |= 1 << i
        try:
            while True:
                state["nodes"] += 1
                if state["nodes"] >= budget.max_nodes or (
                    state["nodes"] & 1023 == 0 and time.perf_counter() > deadline
                ):
                    state["status"] = BUDGET_EXCEEDED
                    return True
                if not prune or not prefix_contains(v):
                    if dfs(v + 1):
                        return True
                nxt = e + 1
                if nxt >= hi:
                    return False
                diff = e ^ nxt
                while diff:
                    j = lsb_index(diff)
                    diff &= diff - 1
                    i = v - 1 - j
                    # toggle edge {i, v} in both color rows
                    rows[0][i] ^= bit_v
                    rows[1][i] ^= bit_v
                    rows[0][v] ^= 1 << i
                    rows[1][v] ^= 1 << i
                e = nxt
        finally:
            mask_v = ~bit_v
            for i in range(v):
                rows[0][i] &= mask_v
                rows[1][i] &= mask_v
            rows[0][v] = 0
            rows[1][v] = 0

    dfs(1)
    return SearchOutcome(
        status=state["status"],
        witness=state["witness"],
        nodes_explored=state["nodes"],
        elapsed=time.perf_counter() - start,
    )


def all_pattern_free_colorings(
    n: int, p: SPattern, *, break_symmetry: bool = True
) -> list[ColoredCompleteGraph]:
    """Every pattern-free 2-coloring the search enumerates (test instrumentation)."""
    leaves: list[ColoredCompleteGraph] = []
    exhaustive_witness_search(
        n,
        p,
        SearchBudget(max_nodes=10**12, max_time=3600.0),
        break_symmetry=break_symmetry,
        collect=leaves,
    )
    return leaves


# -- construction verification --------------------------------------------------


@dataclass
class VerificationReport:
    """Per-color verdicts for rainbow-freeness and pattern-freeness."""

    ok: bool
    pattern: SPattern
    rainbow: Optional[RainbowTriangle]
    mono_witnesses: dict[int, SWitness]
    elapsed: float

    def lines(self) -> list[str]:
        out = [f"rainbow: {'none' if self.rainbow is None else self.rainbow.vertices}"]
        for c, w in sorted(self.mono_witnesses.items()):
            out.append(f"color {c}: pattern at center {w.center}")
        if not self.mono_witnesses:
            out.append("pattern: none in any color")
        out.append(f"elapsed: {self.elapsed:.2f}s")
        return out


def verify_construction(g: ColoredCompleteGraph, p: SPattern) -> VerificationReport:
    """Run the rainbow scan plus the pattern detector in every color of g."""
    start = time.perf_counter()
    rainbow = find_rainbow_triangle(g)
    mono: dict[int, SWitness] = {}
    for c in range(1, g.k + 1):
        w = find_mono_S(g, c, p)
        if w is not None:
            mono[c] = w
    return VerificationReport(
        ok=rainbow is None and not mono,
        pattern=p,
        rainbow=rainbow,
        mono_witnesses=mono,
        elapsed=time.perf_counter() - start,
    )


# -- random Gallai colorings -----------------------------------------------------


def _blowup_general(
    template: list[list[int]], parts: list[ColoredCompleteGraph], k: int
) -> ColoredCompleteGraph:
    """Blow-up of an arbitrary template coloring (template[i][j] = color)."""
    m = len(parts)
    sizes = [q.n for q in parts]
    buf = bytearray()
    for i, part in enumerate(parts):
        tails = []
        for j in range(i + 1, m):
            tails.append(bytes([template[i][j]]) * sizes[j])
        tail = b"".join(tails)
        for u in range(part.n):
            buf += part.row_bytes(u)
            buf += tail
    return ColoredCompleteGraph(sum(sizes), k, buf)


def random_gallai_sampler(k: int, n_target: int, seed: int) -> ColoredCompleteGraph:
    """Random rainbow-triangle-free coloring of K_{n_target} with colors in 1..k.

    Built by recursive substitution: a random template on 2..5 vertices using
    at most two colors has its vertices replaced by smaller recursively built
    colorings.  Any triangle is therefore either inside one part (free by
    recursion), or touches at least two parts and repeats a color (two of its
    edges leave the same part, or all three edges use the template's two
    colors).  Deterministic for a fixed seed.
    """
    if k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    if n_target < 1:
        raise ParameterError(f"need n_target >= 1, got {n_target}")
    rng = random.Random(seed)

    def build(size: int) -> ColoredCompleteGraph:
        if size == 1:
            return ColoredCompleteGraph(1, k)
        m = rng.randint(2, min(5, size))
        if k >= 2:
            c1, c2 = rng.sample(range(1, k + 1), 2)
        else:
            c1 = c2 = 1
        cuts = sorted(rng.sample(range(1, size), m - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        template = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                template[i][j] = template[j][i] = rng.choice((c1, c2))
        parts = [build(s) for s in sizes]
        return _blowup_general(template, parts, k)

    return build(n_target)
