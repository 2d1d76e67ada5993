"""Gallai partitions: extraction, verification, and reduced graphs.

Every edge coloring of a complete graph without a rainbow triangle admits a
nontrivial vertex partition in which at most two colors appear between parts
and every pair of parts is joined monochromatically.  ``find_gallai_partition``
computes one such partition; when the input does contain a rainbow triangle,
it returns that triangle as a structured failure instead.

The extraction strategy: for each candidate set C of at most two colors, the
edges colored outside C are forced inside parts, so the connected components
of those edges form the finest possible partition with between-colors inside
C.  Part pairs joined by more than one color are then merged to a fixpoint;
a candidate succeeds when at least two parts survive.  If a valid partition
with between-colors inside C exists at all, the component partition refines it
and merging never crosses it, so the fixpoint is nontrivial; candidates cover
all singletons and pairs of used colors, which suffices for every rainbow-free
coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from gallai_ramsey.colored_graph import ColoredCompleteGraph, ParameterError
from gallai_ramsey.patterns import RainbowTriangle, find_rainbow_triangle


@dataclass
class GallaiPartition:
    """Nontrivial partition with monochromatic part pairs in at most 2 colors."""

    parts: tuple[tuple[int, ...], ...]
    between_colors: frozenset[int]
    part_pair_color: dict[tuple[int, int], int]


@dataclass
class PartitionCheck:
    """Outcome of verifying a partition against a graph."""

    ok: bool
    problems: tuple[str, ...]
    first_violation: Optional[tuple[int, int]] = None


@dataclass
class ReducedGraph:
    """One representative vertex per part, keeping the between-part colors."""

    graph: ColoredCompleteGraph
    representatives: tuple[int, ...]


def _candidate_color_sets(g: ColoredCompleteGraph) -> list[frozenset[int]]:
    used = g.used_colors()
    singles = [frozenset({c}) for c in used]
    pairs = [
        frozenset({used[i], used[j]})
        for i in range(len(used))
        for j in range(i + 1, len(used))
    ]
    return singles + pairs


def _components_outside(g: ColoredCompleteGraph, cand: frozenset[int]) -> Optional[list[int]]:
    """Component ids after contracting every edge colored outside `cand`.

    Returns None as soon as everything collapses into a single component.
    """
    n = g.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ncomp = n
    keep = bytes(1 if 1 <= c <= g.k and c in cand else 0 for c in range(256))
    for u in range(n - 1):
        rb = g.row_bytes(u)
        for dv, c in enumerate(rb):
            if not keep[c]:
                ru, rv = find(u), find(u + 1 + dv)
                if ru != rv:
                    parent[ru] = rv
                    ncomp -= 1
                    if ncomp == 1:
                        return None
    roots = {}
    pid = []
    for v in range(n):
        r = find(v)
        if r not in roots:
            roots[r] = len(roots)
        pid.append(roots[r])
    return pid


def _merge_to_fixpoint(
    g: ColoredCompleteGraph, pid: list[int]
) -> tuple[Optional[list[int]], dict[tuple[int, int], int]]:
    """Merge part pairs seeing more than one color until every pair is clean.

    Returns (part ids, pair color map), or (None, {}) if merging collapses the
    partition to a single part.
    """
    n = g.n
    while True:
        pair_color: dict[tuple[int, int], int] = {}
        conflicts: set[tuple[int, int]] = set()
        for u in range(n - 1):
            pu = pid[u]
            rb = g.row_bytes(u)
            for dv, c in enumerate(rb):
                pv = pid[u + 1 + dv]
                if pu == pv:
                    continue
                key = (pu, pv) if pu < pv else (pv, pu)
                prev = pair_color.get(key)
                if prev is None:
                    pair_color[key] = c
                elif prev != c:
                    conflicts.add(key)
        if not conflicts:
            return pid, pair_color
        m = max(pid) + 1
        parent = list(range(m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in conflicts:
            ra, rb_ = find(a), find(b)
            if ra != rb_:
                parent[ra] = rb_
        relabel: dict[int, int] = {}
        new_pid = []
        for v in range(n):
            r = find(pid[v])
            if r not in relabel:
                relabel[r] = len(relabel)
            new_pid.append(relabel[r])
        if len(relabel) == 1:
            return None, {}
        pid = new_pid


def _build_partition(
    pid: list[int], pair_color: dict[tuple[int, int], int]
) -> GallaiPartition:
    m = max(pid) + 1
    groups: list[list[int]] = [[] for _ in range(m)]
    for v, p in enumerate(pid):
        groups[p].append(v)
    order = sorted(range(m), key=lambda p: groups[p][0])
    rank = {p: i for i, p in enumerate(order)}
    parts = tuple(tuple(groups[p]) for p in order)
    remapped: dict[tuple[int, int], int] = {}
    for (a, b), c in pair_color.items():
        i, j = rank[a], rank[b]
        remapped[(i, j) if i < j else (j, i)] = c
    return GallaiPartition(
        parts=parts,
        between_colors=frozenset(remapped.values()),
        part_pair_color=remapped,
    )


def find_gallai_partition(
    g: ColoredCompleteGraph,
) -> Union[GallaiPartition, RainbowTriangle]:
    """A nontrivial Gallai partition, or the rainbow triangle obstructing one.

    Candidates are tried deterministically: singleton color sets in ascending
    order, then pairs in lexicographic order; the first candidate whose merge
    fixpoint keeps at least two parts wins.
    """
    if g.n < 2:
        raise ParameterError(f"partition needs n >= 2, got n={g.n}")
    for cand in _candidate_color_sets(g):
        pid = _components_outside(g, cand)
        if pid is None:
            continue
        pid, pair_color = _merge_to_fixpoint(g, pid)
        if pid is None:
            continue
        return _build_partition(pid, pair_color)
    tri = find_rainbow_triangle(g)
    if tri is None:
        raise AssertionError("no partition and no rainbow triangle; unreachable")
    return tri


def coarsest_partition_over_pairs(
    g: ColoredCompleteGraph,
) -> Union[GallaiPartition, RainbowTriangle]:
    """Valid result with the fewest parts among all candidate color sets.

    This is a heuristic minimizer: it examines the same candidates as
    ``find_gallai_partition`` and keeps the best fixpoint.  When the winner
    uses a single between color and still has more than two parts, any
    bipartition of its parts is also valid, so the result is coarsened to two
    parts (first part versus the rest) to make "fewest" sharp in that case.
    """
    if g.n < 2:
        raise ParameterError(f"partition needs n >= 2, got n={g.n}")
    best: Optional[GallaiPartition] = None
    for cand in _candidate_color_sets(g):
        pid = _components_outside(g, cand)
        if pid is None:
            continue
        pid, pair_color = _merge_to_fixpoint(g, pid)
        if pid is None:
            continue
        result = _build_partition(pid, pair_color)
        if best is None or len(result.parts) < len(best.parts):
            best = result
    if best is None:
        tri = find_rainbow_triangle(g)
        if tri is None:
            raise AssertionError("no partition and no rainbow triangle; unreachable")
        return tri
    if len(best.between_colors) == 1 and len(best.parts) > 2:
        c = next(iter(best.between_colors))
        head = best.parts[0]
        rest = tuple(sorted(v for part in best.parts[1:] for v in part))
        best = GallaiPartition(
            parts=(head, rest),
            between_colors=frozenset({c}),
            part_pair_color={(0, 1): c},
        )
    return best


def verify_gallai_partition(g: ColoredCompleteGraph, p: GallaiPartition) -> PartitionCheck:
    """Re-check the partition invariants by direct edge scans."""
    seen: set[int] = set()
    for part in p.parts:
        if not part:
            raise ParameterError("empty part")
        for v in part:
            if v in seen:
                raise ParameterError(f"vertex {v} appears in two parts")
            seen.add(v)
    if seen != set(range(g.n)):
        raise ParameterError("parts do not cover the vertex set exactly")

    problems: list[str] = []
    first_violation: Optional[tuple[int, int]] = None
    if len(p.parts) < 2:
        problems.append("partition is trivial (fewer than 2 parts)")
    if len(p.between_colors) > 2:
        problems.append(
            f"{len(p.between_colors)} between-part colors, at most 2 allowed"
        )
    bad_recorded = [c for c in p.part_pair_color.values() if c not in p.between_colors]
    if bad_recorded:
        problems.append(
            f"recorded pair color {bad_recorded[0]} missing from between_colors"
        )
    for i in range(len(p.parts)):
        for j in range(i + 1, len(p.parts)):
            recorded = p.part_pair_color.get((i, j))
            if recorded is None:
                problems.append(f"no recorded color for part pair ({i}, {j})")
                continue
            for u in p.parts[i]:
                for v in p.parts[j]:
                    c = g.color(u, v)
                    if c != recorded:
                        problems.append(
                            f"edge ({u}, {v}) has color {c}, part pair ({i}, {j}) "
                            f"is recorded as color {recorded}"
                        )
                        if first_violation is None:
                            first_violation = (u, v)
                        break
                else:
                    continue
                break
    return PartitionCheck(
        ok=not problems, problems=tuple(problems), first_violation=first_violation
    )


def reduced_graph(g: ColoredCompleteGraph, p: GallaiPartition) -> ReducedGraph:
    """Complete graph on the smallest vertex of each part, between colors kept."""
    check = verify_gallai_partition(g, p)
    if not check.ok:
        raise ParameterError(f"invalid partition: {check.problems[0]}")
    m = len(p.parts)
    reps = tuple(min(part) for part in p.parts)
    buf = bytearray()
    for i in range(m):
        for j in range(i + 1, m):
            buf.append(p.part_pair_color[(i, j)])
    return ReducedGraph(
        graph=ColoredCompleteGraph(m, g.k, buf), representatives=reps
    )


def format_partition_report(p: GallaiPartition) -> str:
    """Text report: header with part count and colors, one line per part."""
    colors = ",".join(str(c) for c in sorted(p.between_colors))
    lines = [f"parts={len(p.parts)} colors={colors}"]
    for part in p.parts:
        lines.append(" ".join(str(v) for v in part))
    return "\n".join(lines) + "\n"
