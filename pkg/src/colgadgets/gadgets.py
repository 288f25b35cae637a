"""Deterministic builders for the reduction gadgets.

Every builder consumes a positive-literal NAE-3SAT instance (or a size
parameter) and returns a :class:`GadgetArtifact`: the graph, an optional list
assignment or precolouring, and a landmark map naming the vertices the test
suites need to address.  Vertex ids are assigned in a documented construction
order so witnesses are reproducible.

The builders form two families.  The list/precolouring family encodes
satisfiability directly: a clause contributes two 5-vertex clause paths whose
admissible colours interact with the variable vertices.  The plain-colouring
family removes lists and precolourings by grafting rainbow-forcing graphs
(an edge-deleted Mycielski graph, or inequality forcers spliced into edges)
so that plain k-colourability carries the same information.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graphs import (
    A_VERTEX,
    B_VERTEX,
    C_VERTEX,
    PLAIN,
    X_VERTEX,
    Graph,
    ListAssignment,
    Precolouring,
    Tag,
    add_pendant,
    disjoint_union,
    graph_from_edges,
    induced_subgraph_with_map,
    mycielski_level,
    pendant_of,
    subdivide_edge,
    t_index,
)
from .nae import NaeInstance


@dataclass(frozen=True)
class GadgetArtifact:
    """A built gadget: graph plus at most one of lists/precolouring, the source
    instance or parameters, and named landmark vertices."""

    graph: Graph
    lists: ListAssignment | None = None
    precolouring: Precolouring | None = None
    source: object = None
    landmarks: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.lists is not None and self.precolouring is not None:
            raise ValueError("an artifact carries lists or a precolouring, not both")
        if self.lists is not None and len(self.lists) != self.graph.n:
            raise ValueError("lists must cover the gadget's vertices")
        if self.precolouring is not None:
            for v in self.precolouring.domain:
                self.graph._check_vertex(v)
            if not self.precolouring.proper_on(self.graph):
                raise ValueError("gadget precolouring is improper")
        for name, v in self.landmarks.items():
            if not 0 <= v < self.graph.n:
                raise ValueError(f"landmark {name!r} points outside the graph")


# Admissible colours of the two clause paths, in path order a1,b1,a2,b2,a3.
_CLAUSE_LISTS = ({2, 4}, {3, 4}, {2, 3, 4}, {3, 4}, {2, 3})
_CLAUSE_LISTS_PRIMED = ({1, 4}, {3, 4}, {1, 3, 4}, {3, 4}, {1, 3})
_VARIABLE_LIST = {1, 2}


def list_gadget(inst: NaeInstance) -> GadgetArtifact:
    """The base list-4-colouring gadget.

    Vertex order: variable vertices x_1..x_n first (ids 0..n-1), then per
    clause j a block of ten ids: the clause path a_{j,1}, b_{j,1}, a_{j,2},
    b_{j,2}, a_{j,3} followed by its primed twin.  Each a-vertex is joined to
    its clause variable, and every b-vertex to every variable vertex.

    A colouring respecting the lists exists iff the instance has a
    not-all-equal assignment (variable colour 2 = true, 1 = false).
    """
    n, m = inst.n, inst.m
    edges: list[tuple[int, int]] = []
    tags: list[Tag] = [X_VERTEX] * n
    lists: list[frozenset[int]] = [frozenset(_VARIABLE_LIST)] * n
    landmarks: dict[str, int] = {f"x{i}": i - 1 for i in range(1, n + 1)}
    b_vertices: list[int] = []
    for j, clause in enumerate(inst.clauses, start=1):
        base = n + 10 * (j - 1)
        for primed, offset, clause_lists in (
            (False, base, _CLAUSE_LISTS),
            (True, base + 5, _CLAUSE_LISTS_PRIMED),
        ):
            p = "ap" if primed else "a"
            q = "bp" if primed else "b"
            ids = [offset + r for r in range(5)]
            edges.extend((ids[r], ids[r + 1]) for r in range(4))
            tags.extend([A_VERTEX, B_VERTEX, A_VERTEX, B_VERTEX, A_VERTEX])
            lists.extend(frozenset(l) for l in clause_lists)
            landmarks[f"{p}{j}_1"] = ids[0]
            landmarks[f"{q}{j}_1"] = ids[1]
            landmarks[f"{p}{j}_2"] = ids[2]
            landmarks[f"{q}{j}_2"] = ids[3]
            landmarks[f"{p}{j}_3"] = ids[4]
            for h, var in enumerate(clause, start=1):
                edges.append((ids[2 * (h - 1)], var - 1))
            b_vertices.extend((ids[1], ids[3]))
    edges.extend((b, x) for b in b_vertices for x in range(n))
    g = graph_from_edges(n + 10 * m, edges, tags)
    return GadgetArtifact(
        graph=g,
        lists=ListAssignment(4, tuple(lists)),
        source=inst,
        landmarks=landmarks,
    )


def subdivided_list_gadget(inst: NaeInstance) -> GadgetArtifact:
    """The chordal-bipartite variant: every edge between an a-vertex and its
    variable vertex is subdivided, and the new c-vertices get list {1,2}.

    The c-vertices are appended after the base gadget, clause by clause,
    unprimed positions 1..3 then primed 1..3 (landmarks c{j}_{h}, cp{j}_{h}).
    """
    base = list_gadget(inst)
    g = base.graph
    lists = list(base.lists.lists)
    landmarks = dict(base.landmarks)
    for j in range(1, inst.m + 1):
        for p in ("", "p"):
            for h in range(1, 4):
                a = landmarks[f"a{p}{j}_{h}"]
                x = landmarks[f"x{inst.clauses[j - 1][h - 1]}"]
                g, w = subdivide_edge(g, (a, x), C_VERTEX)
                lists.append(frozenset(_VARIABLE_LIST))
                landmarks[f"c{p}{j}_{h}"] = w
    return GadgetArtifact(
        graph=g,
        lists=ListAssignment(4, tuple(lists)),
        source=inst,
        landmarks=landmarks,
    )


def pendant_precolouring_gadget(inst: NaeInstance, k: int) -> GadgetArtifact:
    """Precolouring-extension form of the subdivided gadget, for k >= 4.

    Lists are replaced by precoloured pendants: a vertex whose list misses a
    colour c <= k receives one pendant precoloured c, so an extension must keep
    the vertex inside its former list.  Pendants are appended in base-vertex
    order, colours ascending (landmark w{u}c{c} for the pendant of u coloured c).
    """
    if k < 4:
        raise ValueError("the pendant construction needs k >= 4")
    base = subdivided_list_gadget(inst)
    g = base.graph
    landmarks = dict(base.landmarks)
    colours: dict[int, int] = {}
    all_colours = set(range(1, k + 1))
    for u in range(base.graph.n):
        for c in sorted(all_colours - set(base.lists.lists[u])):
            g, w = add_pendant(g, u)
            colours[w] = c
            landmarks[f"w{u}c{c}"] = w
    return GadgetArtifact(
        graph=g,
        precolouring=Precolouring.from_dict(k, colours),
        source=inst,
        landmarks=landmarks,
    )


def guarded_precolouring_gadget(inst: NaeInstance) -> GadgetArtifact:
    """4-precolouring-extension gadget whose precoloured guard vertices force
    the base lists; no original vertex is precoloured.

    Per clause path, five guards: s on a1 (colour 3), t on a3 (colour 4) and
    one u per a-vertex (colour 1 on the unprimed path, 2 on the primed one).
    Two global guards c1, c2 (colours 3, 4) cover every variable vertex and two
    guards y1, y2 (colours 1, 2) cover every b-vertex.  Guard ids follow the
    base block, clause by clause (s, t, u1, u2, u3, then the primed five), and
    c1, c2, y1, y2 come last.
    """
    base = list_gadget(inst)
    n, m = inst.n, inst.m
    edges = set(base.graph.edges)
    tags = list(base.graph.tags)
    landmarks = dict(base.landmarks)
    colours: dict[int, int] = {}
    nxt = base.graph.n
    for j in range(1, m + 1):
        for p, fill in (("", 1), ("p", 2)):
            a1 = landmarks[f"a{p}{j}_1"]
            a3 = landmarks[f"a{p}{j}_3"]
            guard_plan = [
                (f"s{p}{j}", a1, 3),
                (f"t{p}{j}", a3, 4),
                (f"u{p}{j}_1", a1, fill),
                (f"u{p}{j}_2", landmarks[f"a{p}{j}_2"], fill),
                (f"u{p}{j}_3", a3, fill),
            ]
            for name, anchor, colour in guard_plan:
                edges.add((anchor, nxt))
                tags.append(pendant_of(anchor))
                colours[nxt] = colour
                landmarks[name] = nxt
                nxt += 1
    b_vertices = [v for v in range(base.graph.n) if tags[v] == B_VERTEX]
    for name, targets, colour, tag in (
        ("c1", range(n), 3, B_VERTEX),
        ("c2", range(n), 4, B_VERTEX),
        ("y1", b_vertices, 1, X_VERTEX),
        ("y2", b_vertices, 2, X_VERTEX),
    ):
        edges.update((t, nxt) for t in targets)
        tags.append(tag)
        colours[nxt] = colour
        landmarks[name] = nxt
        nxt += 1
    g = graph_from_edges(nxt, edges, tags)
    return GadgetArtifact(
        graph=g,
        precolouring=Precolouring.from_dict(4, colours),
        source=inst,
        landmarks=landmarks,
    )


# 0-based edge list of the 23-vertex member of the Mycielski family, used as a
# known-good self-check of the iterative construction.
_REFERENCE_M5_EDGES = frozenset(
    (u - 1, v - 1) if u < v else (v - 1, u - 1)
    for u, v in [
        (5, 15), (1, 2), (3, 2), (4, 1), (5, 4), (6, 2), (7, 1), (7, 3), (8, 2),
        (8, 5), (9, 1), (9, 5), (10, 4), (10, 3), (11, 6), (11, 7), (11, 8), (11, 10),
        (12, 2), (3, 13), (4, 12), (5, 14), (6, 13), (6, 15), (7, 12), (7, 14),
        (8, 13), (8, 16), (9, 12), (9, 16), (10, 15), (10, 14), (11, 17), (11, 18),
        (11, 19), (11, 20), (11, 21),
        (1, 13), (14, 2), (15, 1), (16, 4), (16, 3), (17, 2), (17, 4), (18, 1),
        (18, 3), (19, 2), (19, 5), (20, 1), (20, 5), (21, 4), (21, 3), (22, 6),
        (22, 7), (22, 8), (22, 9), (22, 10),
        (23, 12), (23, 13), (23, 14), (23, 15), (23, 16), (23, 17), (23, 18),
        (23, 19), (23, 20), (23, 22),
        (3, 5), (21, 23), (4, 6), (9, 11),
    ]
)

MYCIELSKI_MAX_LEVEL = 8


def mycielski(k: int) -> GadgetArtifact:
    """The k-th member of the Mycielski family: triangle-free with chromatic
    number exactly k, on 3*2^(k-2) - 1 vertices.

    Level 2 is a single edge on ids 0, 1.  Each later level adds a shadow of
    every existing vertex v (id v + size, adjacent to v's neighbours) and one
    apex (last id) adjacent to all new shadows.  The level-5 graph is checked
    against a frozen reference edge list and construction fails loudly on any
    mismatch.
    """
    if not 2 <= k <= MYCIELSKI_MAX_LEVEL:
        raise ValueError(f"supported levels are 2..{MYCIELSKI_MAX_LEVEL}")
    edges: set[tuple[int, int]] = {(0, 1)}
    tags: list[Tag] = [mycielski_level(2), mycielski_level(2)]
    size = 2
    for level in range(3, k + 1):
        shadow_edges = set()
        for u, v in edges:
            shadow_edges.add((min(u, v + size), max(u, v + size)))
            shadow_edges.add((min(v, u + size), max(v, u + size)))
        apex = 2 * size
        edges |= shadow_edges
        edges.update((s + size, apex) for s in range(size))
        tags.extend([mycielski_level(level)] * (size + 1))
        size = 2 * size + 1
        if size == 23 and edges != _REFERENCE_M5_EDGES:
            raise RuntimeError("Mycielski construction diverged from the reference edge list")
    g = graph_from_edges(size, edges, tags)
    landmarks = {"apex": size - 1} if k >= 3 else {}
    return GadgetArtifact(graph=g, source={"k": k}, landmarks=landmarks)


def mycielski_size(k: int) -> int:
    return 3 * 2 ** (k - 2) - 1


# Landmarks of the rainbow quartet inside the 23-vertex equaliser, 0-based.
_EQUALISER_T = (1, 3, 10, 22)
_EQUALISER_EQ = (16, 22)


def mycielski_equaliser() -> GadgetArtifact:
    """The 23-vertex level-5 Mycielski graph with one edge removed.

    The result is 4-colourable, every 4-colouring gives the two former edge
    endpoints (landmarks eq_a, eq_b) the same colour, and the quartet t1..t4
    receives four distinct colours in every 4-colouring.  These forced-colour
    facts are what the triangle-free gadget splices in.
    """
    m5 = mycielski(5).graph
    eq_a, eq_b = _EQUALISER_EQ
    edges = m5.edges - {(eq_a, eq_b)}
    g = Graph(m5.n, edges, m5.tags)
    g = g.with_tags({v: t_index(i) for i, v in enumerate(_EQUALISER_T, start=1)})
    landmarks = {f"t{i}": v for i, v in enumerate(_EQUALISER_T, start=1)}
    landmarks["eq_a"] = eq_a
    landmarks["eq_b"] = eq_b
    return GadgetArtifact(graph=g, source={"k": 5}, landmarks=landmarks)


def triangle_free_gadget(inst: NaeInstance) -> GadgetArtifact:
    """Plain 4-colouring gadget, triangle-free, built from the k=4 pendant
    gadget by replacing precoloured pendants of b- and c-vertices with edges
    into the equaliser's rainbow quartet.

    Steps: drop every pendant anchored at a b- or c-vertex (ids relabelled
    order-preservingly); append the 23-vertex equaliser; join each surviving
    pendant (anchored at an a- or variable vertex, precoloured i) to the three
    t_j with j != i; join every b-vertex to t1 and t2 and every c-vertex to t3
    and t4.  4-colourable iff the instance is NAE-satisfiable.
    """
    base = pendant_precolouring_gadget(inst, 4)
    g = base.graph
    pre = base.precolouring.as_dict()
    drop = {
        v
        for v in range(g.n)
        if g.tags[v].kind == "pendant" and g.tags[g.tags[v].value].kind in ("b", "c")
    }
    sub, remap = induced_subgraph_with_map(g, set(range(g.n)) - drop)
    eq = mycielski_equaliser()
    merged = disjoint_union(sub, eq.graph)
    off = sub.n
    t = {i: eq.landmarks[f"t{i}"] + off for i in (1, 2, 3, 4)}
    edges = set(merged.edges)
    for v_old, c in pre.items():
        if v_old in remap:  # surviving pendants anchor at a- or variable vertices
            v = remap[v_old]
            edges.update((min(v, t[j]), max(v, t[j])) for j in (1, 2, 3, 4) if j != c)
    for v in range(sub.n):
        kind = sub.tags[v].kind
        if kind == "b":
            edges.update((min(v, t[j]), max(v, t[j])) for j in (1, 2))
        elif kind == "c":
            edges.update((min(v, t[j]), max(v, t[j])) for j in (3, 4))
    landmarks = {
        name: remap[v] for name, v in base.landmarks.items() if v in remap
    }
    landmarks.update({name: v + off for name, v in eq.landmarks.items()})
    return GadgetArtifact(
        graph=graph_from_edges(merged.n, edges, merged.tags),
        source=inst,
        landmarks=landmarks,
    )


def inequality_forcer(k: int) -> GadgetArtifact:
    """A k-colourable graph with two terminals that never share a colour.

    Take the level-(k+1) Mycielski graph (chromatic number k+1, every proper
    subgraph k-colourable), delete its lexicographically least edge (0,1) --
    the endpoints then agree in every k-colouring -- and hang a new pendant
    (landmark qstar) off vertex 1.  The pendant disagrees with vertex 0
    (landmark p) in every k-colouring.
    """
    if not 3 <= k <= 6:
        raise ValueError("supported forcer strengths are 3..6")
    m = mycielski(k + 1).graph
    g = Graph(m.n, m.edges - {(0, 1)}, m.tags)
    g, qstar = add_pendant(g, 1)
    return GadgetArtifact(
        graph=g,
        source={"k": k},
        landmarks={"p": 0, "q": 1, "qstar": qstar},
    )


FORCER_GADGET_MAX_CLAUSES = 2
FORCER_GADGET_MAX_VARIABLES = 8


def forcer_identified_gadget(inst: NaeInstance, k: int) -> GadgetArtifact:
    """Plain k-colouring gadget (k in {4, 5}), triangle-free apart from
    four-cycles, built from the k-pendant gadget.

    A rank-k rainbow clique r_1..r_k is wired to the precoloured pendant set
    (r_i joined to pendant u iff u's colour is not i), then every clique edge
    and every r-pendant edge is replaced by a copy of the inequality forcer:
    the edge is deleted and the copy's terminals p, qstar are identified with
    its endpoints, so the endpoints still never agree.  The identifications
    leave the graph triangle-free and k-colourability becomes equivalent to
    NAE-satisfiability.

    Ids: the pendant gadget, then r_1..r_k, then the interior of one forcer
    copy per replaced edge (clique edges first, then r-pendant edges, both in
    sorted order; interiors keep the forcer's own vertex order).
    """
    if k not in (4, 5):
        raise ValueError("supported colour counts are 4 and 5")
    if inst.m > FORCER_GADGET_MAX_CLAUSES or inst.n > FORCER_GADGET_MAX_VARIABLES:
        raise ValueError(
            f"size guard: at most {FORCER_GADGET_MAX_CLAUSES} clauses and "
            f"{FORCER_GADGET_MAX_VARIABLES} variables"
        )
    base = pendant_precolouring_gadget(inst, k)
    pre = base.precolouring.as_dict()
    n0 = base.graph.n
    r = {i: n0 + i - 1 for i in range(1, k + 1)}
    landmarks = dict(base.landmarks)
    landmarks.update({f"r{i}": v for i, v in r.items()})
    spliced = [(r[i], r[j]) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    spliced += sorted(
        (r[i], u) for u, c in pre.items() for i in range(1, k + 1) if c != i
    )
    forcer = inequality_forcer(k)
    fg = forcer.graph
    p, qstar = forcer.landmarks["p"], forcer.landmarks["qstar"]
    interior = [v for v in range(fg.n) if v not in (p, qstar)]
    edges = set(base.graph.edges)
    tags = list(base.graph.tags) + [PLAIN] * k
    nxt = n0 + k
    for end_p, end_q in spliced:
        mapping = {p: end_p, qstar: end_q}
        for v in interior:
            mapping[v] = nxt
            nxt += 1
        edges.update(
            (min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in fg.edges
        )
        tags.extend(
            fg.tags[v] if fg.tags[v].kind != "pendant" else PLAIN for v in interior
        )
    return GadgetArtifact(
        graph=graph_from_edges(nxt, edges, tags),
        source={"instance": inst, "k": k},
        landmarks=landmarks,
    )


def remark_bound(k: int) -> int:
    """Upper bound on the path order needed for k-colouring hardness on
    triangle-free classes, via the forcer construction: k + (k+1)(3*2^(k-1)-1)."""
    if k < 5:
        raise ValueError("the bound applies for k >= 5")
    return k + (k + 1) * (3 * 2 ** (k - 1) - 1)
