"""Exact detection of induced paths, induced cycles, small induced patterns,
girth and chordal-bipartiteness.

All searches are complete: a negative answer means the pattern does not occur.
The engines work on adjacency bitmasks, so a "closed" mask (vertices that are
used or adjacent to the interior of the current partial path) makes the
induced condition a single AND per extension.

Witness conventions: path and cycle witnesses are the lexicographically least
vertex sequences (the DFS explores starts and extensions in ascending order);
pattern embeddings are deterministic but follow a constraint-driven variable
order rather than pattern-id order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graphs import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_from_edges,
    path_graph,
)

MAX_PATTERN_VERTICES = 16


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# -- induced paths -----------------------------------------------------------


def find_induced_path(g: Graph, t: int) -> tuple[int, ...] | None:
    """Lexicographically least induced path on exactly t vertices, or None."""
    if t < 1:
        raise ValueError("path order must be at least 1")
    if t == 1:
        return (0,) if g.n else None
    masks = g.neighbour_masks
    for s in range(g.n):
        path = [s]
        closed = [1 << s]
        cand = [masks[s] & ~closed[0]]
        while path:
            c = cand[-1]
            if c:
                b = c & -c
                cand[-1] = c ^ b
                w = b.bit_length() - 1
                if len(path) + 1 == t:
                    return tuple(path) + (w,)
                ncl = closed[-1] | masks[path[-1]] | b
                path.append(w)
                closed.append(ncl)
                cand.append(masks[w] & ~ncl)
            else:
                path.pop()
                closed.pop()
                cand.pop()
    return None


def has_induced_path(g: Graph, t: int) -> bool:
    return find_induced_path(g, t) is not None


def constrained_induced_paths(
    g: Graph,
    endpoints_in: Iterable[int],
    mode: str = "both_ends",
    bound: int | None = None,
) -> tuple[int, tuple[int, ...] | None]:
    """Maximum vertex count over induced paths whose endpoints meet a constraint.

    mode 'both_ends': both endpoints must lie in ``endpoints_in``;
    mode 'one_end': at least one endpoint must (paths are grown from the set,
    which covers the reversed orientation).

    Returns (max_found, witness).  When ``bound`` is given the search stops as
    soon as a qualifying path on bound+1 vertices appears and reports that;
    max_found > bound therefore refutes "at most bound".
    """
    if mode not in ("both_ends", "one_end"):
        raise ValueError(f"unknown mode {mode!r}")
    targets = set(endpoints_in)
    for v in targets:
        g._check_vertex(v)
    if bound is not None and bound < 1:
        raise ValueError("bound must be at least 1")
    masks = g.neighbour_masks
    best = 0
    best_witness: tuple[int, ...] | None = None
    for s in sorted(targets):
        path = [s]
        closed = [1 << s]
        cand = [masks[s] & ~closed[0]]
        if best < 1:
            best, best_witness = 1, (s,)
        while path:
            c = cand[-1]
            if not c:
                path.pop()
                closed.pop()
                cand.pop()
                continue
            b = c & -c
            cand[-1] = c ^ b
            w = b.bit_length() - 1
            ncl = closed[-1] | masks[path[-1]] | b
            path.append(w)
            closed.append(ncl)
            cand.append(masks[w] & ~ncl)
            if (mode == "one_end" or w in targets) and len(path) > best:
                best = len(path)
                best_witness = tuple(path)
                if bound is not None and best > bound:
                    return best, best_witness
    return best, best_witness


# -- induced cycles ----------------------------------------------------------


def find_induced_cycle(g: Graph, s: int) -> tuple[int, ...] | None:
    """Lexicographically least induced cycle on exactly s vertices, or None."""
    if s < 3:
        raise ValueError("cycle order must be at least 3")
    found = _cycle_search(g, exact=s)
    return found


def has_induced_cycle(g: Graph, s: int) -> bool:
    return find_induced_cycle(g, s) is not None


def find_long_induced_cycle(g: Graph, min_len: int) -> tuple[int, ...] | None:
    """Some induced cycle on at least min_len vertices, or None."""
    if min_len < 3:
        raise ValueError("cycle order must be at least 3")
    return _cycle_search(g, at_least=min_len)


def _cycle_search(g: Graph, exact: int | None = None, at_least: int | None = None):
    # Grow induced paths rooted at the least cycle vertex; interior vertices
    # must avoid the root's neighbourhood, the closing vertex must hit it.
    masks = g.neighbour_masks
    for base in range(g.n):
        high = -1 << (base + 1)
        base_mask = masks[base]
        start = base_mask & high
        for c1 in _bits(start):
            path = [base, c1]
            closed = [(1 << base) | (1 << c1)]
            grow, close = _cycle_cands(masks, path, closed[-1], base_mask, high, exact, at_least)
            stack = [(grow, close)]
            while stack:
                grow, close = stack[-1]
                if close:
                    b = close & -close
                    w = b.bit_length() - 1
                    return tuple(path) + (w,)
                if not grow:
                    stack.pop()
                    path.pop()
                    closed.pop()
                    continue
                b = grow & -grow
                stack[-1] = (grow ^ b, 0)
                w = b.bit_length() - 1
                ncl = closed[-1] | masks[path[-1]] | b
                path.append(w)
                closed.append(ncl)
                stack.append(_cycle_cands(masks, path, ncl, base_mask, high, exact, at_least))
    return None


def _cycle_cands(masks, path, closed, base_mask, high, exact, at_least):
    last = path[-1]
    cands = masks[last] & ~closed & high
    depth = len(path)
    if exact is not None:
        if depth == exact - 1:
            return 0, cands & base_mask
        return cands & ~base_mask, 0
    close = cands & base_mask if depth + 1 >= at_least else 0
    return cands & ~base_mask, close


def girth(g: Graph) -> int | float:
    """Number of vertices on a shortest cycle; ``math.inf`` for forests."""
    adj = g.adj
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if 2 * dist[v] >= best - 1:
                break
            for u in adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[v] + dist[u] + 1)
    return best


# -- generic induced pattern matching -----------------------------------------


def find_induced_embedding(
    g: Graph,
    pattern: Graph,
    allowed: Mapping[int, Iterable[int]] | None = None,
) -> tuple[int, ...] | None:
    """An injective map taking the pattern to an induced copy in g.

    The result maps pattern vertex i to host vertex result[i]; adjacency is
    preserved exactly (edges and non-edges).  ``allowed`` optionally restricts
    candidate host vertices for individual pattern vertices.
    """
    p = pattern.n
    if p > MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern on {p} vertices exceeds the cap of {MAX_PATTERN_VERTICES}")
    if p == 0:
        return ()
    if p > g.n:
        return None
    masks = g.neighbour_masks
    pmasks = pattern.neighbour_masks
    full = (1 << g.n) - 1
    host_deg = [m.bit_count() for m in masks]
    pat_deg = [m.bit_count() for m in pmasks]

    allowed_masks = []
    for i in range(p):
        m = full
        if allowed is not None and i in allowed:
            m = 0
            for v in allowed[i]:
                g._check_vertex(v)
                m |= 1 << v
        dm = 0
        for v in _bits(m):
            if host_deg[v] >= pat_deg[i]:
                dm |= 1 << v
        allowed_masks.append(dm)

    order = _match_order(pmasks, allowed_masks)
    pos_of = {pv: idx for idx, pv in enumerate(order)}
    # per position: (earlier position, adjacent?) constraints
    constraints: list[list[tuple[int, bool]]] = []
    for idx, pv in enumerate(order):
        cons = []
        for jdx in range(idx):
            qv = order[jdx]
            cons.append((jdx, bool(pmasks[pv] >> qv & 1)))
        constraints.append(cons)

    assigned: list[int] = []
    used = 0

    def candidates(idx: int) -> int:
        c = allowed_masks[order[idx]] & ~used
        for jdx, adjacent in constraints[idx]:
            hm = masks[assigned[jdx]]
            c &= hm if adjacent else ~hm
        return c

    stack = [candidates(0)]
    while stack:
        c = stack[-1]
        if not c:
            stack.pop()
            if assigned:
                used ^= 1 << assigned.pop()
            continue
        b = c & -c
        stack[-1] = c ^ b
        w = b.bit_length() - 1
        assigned.append(w)
        used |= b
        if len(assigned) == p:
            out = [0] * p
            for idx, pv in enumerate(order):
                out[pv] = assigned[idx]
            return tuple(out)
        stack.append(candidates(len(assigned)))
    return None


def _match_order(pmasks: Sequence[int], allowed_masks: Sequence[int]) -> list[int]:
    """Most-constrained-first order: start at the vertex with the fewest host
    candidates, then greedily prefer vertices touching the placed ones."""
    p = len(pmasks)
    remaining = set(range(p))
    key0 = min(remaining, key=lambda v: (allowed_masks[v].bit_count(), -pmasks[v].bit_count(), v))
    order = [key0]
    placed_mask = 1 << key0
    remaining.remove(key0)
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (
                -(pmasks[v] & placed_mask).bit_count(),
                allowed_masks[v].bit_count(),
                -pmasks[v].bit_count(),
                v,
            ),
        )
        order.append(nxt)
        placed_mask |= 1 << nxt
        remaining.remove(nxt)
    return order


def contains_induced(
    g: Graph,
    pattern: Graph,
    allowed: Mapping[int, Iterable[int]] | None = None,
) -> bool:
    return find_induced_embedding(g, pattern, allowed) is not None


# -- bipartiteness and chordal bipartite --------------------------------------


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A 2-colouring by BFS, or None when an odd cycle exists."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    left = tuple(v for v in range(g.n) if side[v] == 0)
    right = tuple(v for v in range(g.n) if side[v] == 1)
    return left, right


def _odd_cycle_witness(g: Graph) -> tuple[int, ...]:
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    pv = [v]
                    while pv[-1] != -1 and parent[pv[-1]] != -1:
                        pv.append(parent[pv[-1]])
                    pu = [u]
                    while pu[-1] != -1 and parent[pu[-1]] != -1:
                        pu.append(parent[pu[-1]])
                    common = set(pv) & set(pu)
                    iv = next(i for i, x in enumerate(pv) if x in common)
                    iu = next(i for i, x in enumerate(pu) if x in common)
                    return tuple(pv[: iv + 1] + pu[:iu][::-1])
    raise AssertionError("no odd cycle in a bipartite graph")


def is_chordal_bipartite(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Bipartite with every induced cycle on exactly four vertices.

    Returns (verdict, witness); the witness is an odd cycle when bipartiteness
    fails, or an induced cycle on >= 6 vertices otherwise."""
    if bipartition(g) is None:
        return False, _odd_cycle_witness(g)
    long_cycle = find_long_induced_cycle(g, 6)
    if long_cycle is not None:
        return False, long_cycle
    return True, None


# -- named patterns and freeness specs ----------------------------------------


def wheel5() -> Graph:
    """Complement of P1 + 2P2: a 4-cycle plus a dominating hub."""
    return complement(disjoint_union(path_graph(1), disjoint_union(path_graph(2), path_graph(2))))


def gem() -> Graph:
    """Complement of P1 + P4: a 4-vertex path plus a dominating hub."""
    return complement(disjoint_union(path_graph(1), path_graph(4)))


@dataclass(frozen=True)
class PatternSpec:
    """One forbidden pattern: a path/cycle/clique size or an explicit graph."""

    kind: str  # 'path' | 'cycle' | 'clique' | 'named'
    order: int = 0
    graph: Graph | None = None
    name: str = ""

    def label(self) -> str:
        if self.kind == "path":
            return f"P{self.order}"
        if self.kind == "cycle":
            return f"C{self.order}"
        if self.kind == "clique":
            return f"K{self.order}"
        return self.name or f"pattern<{self.graph.n}>"


def path_on(t: int) -> PatternSpec:
    if t < 1:
        raise ValueError("path order must be at least 1")
    return PatternSpec("path", order=t)


def cycle_on(s: int) -> PatternSpec:
    if s < 3:
        raise ValueError("cycle order must be at least 3")
    return PatternSpec("cycle", order=s)


def clique_on(r: int) -> PatternSpec:
    if r < 1:
        raise ValueError("clique order must be at least 1")
    return PatternSpec("clique", order=r)


def named_pattern(graph: Graph, name: str) -> PatternSpec:
    if graph.n > MAX_PATTERN_VERTICES:
        raise ValueError(f"named patterns are capped at {MAX_PATTERN_VERTICES} vertices")
    return PatternSpec("named", graph=graph, name=name)


_NAMED = {
    "wheel": wheel5,
    "gem": gem,
}


def parse_pattern(text: str) -> PatternSpec:
    """Parse 'P6', 'C5', 'K4', 'wheel', 'gem' into a pattern spec."""
    text = text.strip()
    low = text.lower()
    if low in _NAMED:
        return named_pattern(_NAMED[low](), low)
    if len(text) >= 2 and text[0] in "PCK" and text[1:].isdigit():
        order = int(text[1:])
        return {"P": path_on, "C": cycle_on, "K": clique_on}[text[0]](order)
    raise ValueError(f"cannot parse pattern {text!r}")


@dataclass(frozen=True)
class FreenessSpec:
    forbidden: tuple[PatternSpec, ...]

    @staticmethod
    def parse(text: str) -> "FreenessSpec":
        return FreenessSpec(tuple(parse_pattern(p) for p in text.split(",") if p.strip()))


def find_pattern(g: Graph, spec: PatternSpec) -> tuple[int, ...] | None:
    if spec.kind == "path":
        return find_induced_path(g, spec.order)
    if spec.kind == "cycle":
        return find_induced_cycle(g, spec.order)
    if spec.kind == "clique":
        return find_induced_embedding(g, complete_graph(spec.order))
    return find_induced_embedding(g, spec.graph)


def check_freeness(g: Graph, spec: FreenessSpec) -> list[dict]:
    """One record per forbidden pattern: pass when the pattern is absent."""
    records = []
    for pat in spec.forbidden:
        witness = find_pattern(g, pat)
        records.append(
            {
                "pattern": pat.label(),
                "status": "pass" if witness is None else "fail",
                "witness": None if witness is None else list(witness),
            }
        )
    return records
