"""Exact decision procedures for list colouring, k-colourability, chromatic
number, precolouring extension, and the forced-equality / forced-distinctness
queries the gadget contracts are phrased in.

The core search is backtracking over vertices (most-constrained first, ties by
degree then id) with unit propagation on singleton lists.  Colour domains are
bitmasks.  When every list has at most two colours the instance is decided by
the classic implication-graph procedure instead; both routes are exposed so
they can be cross-checked.

Every returned colouring is re-validated (proper, respects lists or
precolouring) before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, ListAssignment, Precolouring, identify_vertices


class CapExceededError(ValueError):
    """No admissible colour count at or below the requested cap."""


@dataclass(frozen=True)
class Colouring:
    """A total proper colour map, colours[v] in 1..k."""

    colours: tuple[int, ...]

    def colour(self, v: int) -> int:
        return self.colours[v]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.colours))


def _full_mask(k: int) -> int:
    return (1 << k) - 1


def _lists_to_masks(lists: ListAssignment) -> list[int]:
    return [sum(1 << (c - 1) for c in lst) for lst in lists.lists]


def _masks_to_colours(dom: list[int]) -> tuple[int, ...]:
    return tuple(d.bit_length() for d in dom)


def validate_colouring(
    g: Graph,
    colouring: Colouring,
    k: int | None = None,
    lists: ListAssignment | None = None,
    pre: Precolouring | None = None,
) -> None:
    """Independent re-check; raises AssertionError on any violation."""
    cols = colouring.colours
    assert len(cols) == g.n, "colouring must cover every vertex"
    for u, v in g.edges:
        assert cols[u] != cols[v], f"edge ({u},{v}) monochromatic"
    if k is not None:
        assert all(1 <= c <= k for c in cols), "colour outside 1..k"
    if lists is not None:
        assert all(cols[v] in lists.lists[v] for v in range(g.n)), "list violated"
    if pre is not None:
        assert all(cols[v] == c for v, c in pre.assignment), "precolouring violated"


# -- backtracking core --------------------------------------------------------


class _Budget(Exception):
    """Node budget of one portfolio attempt exhausted."""


_INITIAL_BUDGET = 30_000
_BUDGET_GROWTH = 4


def _search(adj, dom: list[int], symmetric: bool) -> list[int] | None:
    """Backtracking with unit propagation over colour-domain bitmasks.

    Returns singleton domains for a solution, else None.  ``symmetric``
    restricts the very first branching vertex to its least colour (sound only
    under full colour-permutation symmetry).

    Two complementary branching orders are alternated under geometrically
    growing node budgets.  'local' is most-constrained-first with a degree
    tie-break: it keeps the search inside one gadget block until the block is
    decided.  'hub' ranks by domain/degree ratio: it colours high-degree
    interface vertices first so the graph decomposes.  Either order alone
    degenerates on some gadget family; the alternation is deterministic and
    complete (the last budget always covers the full tree).
    """
    n = len(adj)
    for d in dom:
        if d == 0:
            return None
    nbr = [0] * n
    for v, row in enumerate(adj):
        m = 0
        for u in row:
            m |= 1 << u
        nbr[v] = m
    budget = _INITIAL_BUDGET
    while True:
        for mode in ("local", "hub"):
            try:
                return _attempt(adj, nbr, list(dom), symmetric, mode, budget)
            except _Budget:
                continue
        budget *= _BUDGET_GROWTH
        if budget > 1 << 62:  # effectively unbounded; keeps the loop finite
            return _attempt(adj, nbr, list(dom), symmetric, "hub", None)


def _attempt(adj, nbr, dom, symmetric, mode, budget) -> list[int] | None:
    """One budgeted search pass: unit propagation, component decomposition,
    and conflict-directed backjumping.

    Every domain prune is blamed on the decision levels that caused it
    (``blame`` masks); a dead end returns the union of the levels that could
    repair it, and the unwind skips decisions outside that set.  This stops
    the search from re-refuting an unrelated gadget block after a deep
    conflict between two interface vertices."""
    import sys

    n = len(adj)
    fixed = bytearray(n)
    # per vertex: levels whose assignments pruned its domain, and the levels
    # responsible for its own (propagated) assignment
    blame = [0] * n
    cause = [0] * n
    trail: list[tuple[int, int, int]] = []
    fstack: list[tuple[int, int]] = []
    colour_use: dict[int, int] = {}
    nodes = 0
    max_width = max((d.bit_count() for d in dom), default=1)
    max_deg = max((len(a) for a in adj), default=0)
    if mode == "local":
        key_tab = [
            [(size * (max_deg + 1) + max_deg - len(adj[v])) * n + v for v in range(n)]
            for size in range(max_width + 1)
        ]
    else:
        key_tab = [
            [((size << 20) // (len(adj[v]) + 1)) * n + v for v in range(n)]
            for size in range(max_width + 1)
        ]

    def propagate(queue: list[int]) -> int | None:
        """None on success, else the conflict level-set of a wiped vertex."""
        while queue:
            v = queue.pop()
            if fixed[v]:
                continue
            fixed[v] = 1
            c = dom[v]
            fstack.append((v, c))
            colour_use[c] = colour_use.get(c, 0) + 1
            reason = cause[v]
            for u in adj[v]:
                if fixed[u]:
                    continue
                d = dom[u]
                if d & c:
                    trail.append((u, d, blame[u]))
                    d &= ~c
                    dom[u] = d
                    blame[u] |= reason
                    if d == 0:
                        return blame[u]
                    if d & (d - 1) == 0:
                        cause[u] = blame[u]
                        queue.append(u)
        return None

    def components(vertices: list[int]) -> list[list[int]]:
        rem = 0
        for v in vertices:
            if not fixed[v]:
                rem |= 1 << v
        comps = []
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                grow = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    grow |= nbr[b.bit_length() - 1]
                frontier = grow & rem & ~comp
                comp |= frontier
            rem &= ~comp
            members = []
            m = comp
            while m:
                b = m & -m
                m ^= b
                members.append(b.bit_length() - 1)
            comps.append(members)
        return comps

    first_branch = [symmetric]
    # re-splitting into components pays off only after a propagation cascade
    split_threshold = 4

    def solve_comp(comp: list[int], level: int):
        """True on success, else the conflict level-set (an int mask)."""
        nonlocal nodes
        v = -1
        best = -1
        for u in comp:
            if fixed[u]:
                continue
            key = key_tab[dom[u].bit_count()][u]
            if best < 0 or key < best:
                best = key
                v = u
        if v < 0:
            return True
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        cands = dom[v]
        if first_branch[0]:
            cands &= -cands
            first_branch[0] = False
        # least-used colours first: spreads colours across mutually
        # constrained hubs before their shared forcers are explored
        order = sorted(
            ((1 << i) for i in range(cands.bit_length()) if cands >> i & 1),
            key=lambda b: (colour_use.get(b, 0), b),
        )
        here = 1 << level
        conflict = blame[v]
        for b in order:
            tl, fl = len(trail), len(fstack)
            trail.append((v, dom[v], blame[v]))
            dom[v] = b
            cause[v] = here
            result = propagate([v])
            if result is None:
                if len(fstack) - fl >= split_threshold:
                    result = True
                    for c in components(comp):
                        sub = solve_comp(c, level + 1)
                        if sub is not True:
                            result = sub
                            break
                else:
                    result = solve_comp(comp, level + 1)
                if result is True:
                    return True
            while len(trail) > tl:
                u, old_dom, old_blame = trail.pop()
                dom[u] = old_dom
                blame[u] = old_blame
            while len(fstack) > fl:
                w, c = fstack.pop()
                fixed[w] = 0
                colour_use[c] -= 1
            if not result & here:
                # this decision is not part of the conflict: jump past it
                return result
            conflict |= result & ~here
        return conflict

    limit = max(sys.getrecursionlimit(), 4 * n + 200)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(limit)
    try:
        if propagate([v for v in range(n) if dom[v] & (dom[v] - 1) == 0]) is not None:
            return None
        for comp in components(list(range(n))):
            if solve_comp(comp, 0) is not True:
                return None
        return dom
    finally:
        sys.setrecursionlimit(old_limit)


# -- two-list implication route ------------------------------------------------


def _solve_two_list(g: Graph, lists: ListAssignment) -> Colouring | None:
    """Implication-graph decision for instances whose lists have <= 2 colours."""
    import networkx as nx

    dom = _lists_to_masks(lists)
    adj = g.adj
    # exhaust forced (singleton) vertices first
    queue = [v for v in range(g.n) if dom[v].bit_count() == 1]
    fixed = bytearray(g.n)
    while queue:
        v = queue.pop()
        if fixed[v]:
            continue
        fixed[v] = 1
        for u in adj[v]:
            if fixed[u]:
                continue
            if dom[u] & dom[v]:
                dom[u] &= ~dom[v]
                if dom[u] == 0:
                    return None
                if dom[u].bit_count() == 1:
                    queue.append(u)
    free = [v for v in range(g.n) if not fixed[v]]
    if not free:
        cols = _masks_to_colours(dom)
        return Colouring(cols)
    # literal 2*i encodes "v takes its lower colour", 2*i+1 the higher one
    index = {v: i for i, v in enumerate(free)}
    lo = {}
    hi = {}
    for v in free:
        bits = [b + 1 for b in range(lists.k) if dom[v] >> b & 1]
        lo[v], hi[v] = bits[0], bits[1]

    def lit(v: int, colour: int) -> int:
        return 2 * index[v] + (0 if colour == lo[v] else 1)

    def neg(literal: int) -> int:
        return literal ^ 1

    imp = nx.DiGraph()
    imp.add_nodes_from(range(2 * len(free)))
    for u, v in g.edges:
        if fixed[u] or fixed[v]:
            continue
        for colour in (lo[u], hi[u]):
            if colour in (lo[v], hi[v]):
                a, b = lit(u, colour), lit(v, colour)
                # not (a and b)
                imp.add_edge(a, neg(b))
                imp.add_edge(b, neg(a))
    cond = nx.condensation(imp)
    comp_of = cond.graph["mapping"]
    for v in free:
        if comp_of[2 * index[v]] == comp_of[2 * index[v] + 1]:
            return None
    topo_pos = {c: i for i, c in enumerate(nx.topological_sort(cond))}
    for v in free:
        take_lo = topo_pos[comp_of[lit(v, lo[v])]] > topo_pos[comp_of[neg(lit(v, lo[v]))]]
        dom[v] = 1 << ((lo[v] if take_lo else hi[v]) - 1)
    return Colouring(_masks_to_colours(dom))


# -- public operations ---------------------------------------------------------


def solve_list_colouring(
    g: Graph, lists: ListAssignment, method: str = "auto"
) -> Colouring | None:
    """A proper colouring respecting the lists, or None when none exists.

    method 'auto' uses the implication-graph route when every list has at most
    two colours and backtracking otherwise; 'backtracking' and 'two_list'
    force a route (the latter rejects wider lists)."""
    if len(lists) != g.n:
        raise ValueError(f"lists cover {len(lists)} vertices, graph has {g.n}")
    if method not in ("auto", "backtracking", "two_list"):
        raise ValueError(f"unknown method {method!r}")
    width = max((len(l) for l in lists.lists), default=0)
    if method == "two_list" and width > 2:
        raise ValueError("two_list route requires lists of at most two colours")
    if method == "auto":
        method = "two_list" if width <= 2 else "backtracking"
    if method == "two_list":
        result = _solve_two_list(g, lists)
    else:
        dom = _lists_to_masks(lists)
        full = _full_mask(lists.k)
        symmetric = all(d == full for d in dom)
        sol = _search(g.adj, dom, symmetric)
        result = None if sol is None else Colouring(_masks_to_colours(sol))
    if result is not None:
        validate_colouring(g, result, k=lists.k, lists=lists)
    return result


def is_k_colourable(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return True
    return solve_list_colouring(g, ListAssignment.full(g.n, k)) is not None


def chromatic_number(g: Graph, cap: int) -> int:
    """Least k <= cap with a proper k-colouring."""
    if cap < 1:
        raise ValueError("cap must be positive")
    for k in range(1, cap + 1):
        if is_k_colourable(g, k):
            return k
    raise CapExceededError(f"chromatic number exceeds cap {cap}")


def extend_precolouring(g: Graph, k: int, pre: Precolouring) -> Colouring | None:
    """A k-colouring agreeing with ``pre`` on its domain, or None."""
    if pre.k != k:
        raise ValueError(f"precolouring bound {pre.k} != requested {k}")
    cmap = pre.as_dict()
    for v in cmap:
        g._check_vertex(v)
    if not pre.proper_on(g):
        raise ValueError("precolouring is improper on its own domain")
    allc = frozenset(range(1, k + 1))
    lists = ListAssignment(
        k, tuple(frozenset((cmap[v],)) if v in cmap else allc for v in range(g.n))
    )
    result = solve_list_colouring(g, lists, method="backtracking")
    if result is not None:
        validate_colouring(g, result, k=k, pre=pre)
    return result


def forced_equal(g: Graph, k: int, u: int, v: int) -> bool:
    """True when every proper k-colouring gives u and v the same colour.

    Decided by one existential call: add the edge uv and test infeasibility.
    Requires g to be k-colourable and u, v non-adjacent."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("forced_equal needs two distinct vertices")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent; they can never agree")
    if not is_k_colourable(g, k):
        raise ValueError(f"graph is not {k}-colourable; forced_equal is undefined")
    augmented = Graph(g.n, g.edges | {(min(u, v), max(u, v))}, g.tags)
    return not is_k_colourable(augmented, k)


def forced_distinct(g: Graph, k: int, u: int, v: int) -> bool:
    """True when no proper k-colouring gives u and v the same colour.

    Adjacent pairs are forced distinct outright; otherwise the pair is merged
    and the quotient tested for k-colourability."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("forced_distinct needs two distinct vertices")
    if not is_k_colourable(g, k):
        raise ValueError(f"graph is not {k}-colourable; forced_distinct is undefined")
    if g.has_edge(u, v):
        return True
    return not is_k_colourable(identify_vertices(g, u, v), k)
