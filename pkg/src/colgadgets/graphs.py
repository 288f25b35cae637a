"""Immutable simple graphs with role tags, plus the construction primitives
(subdivision, pendants, identification, union, induced subgraphs) that the
gadget builders are made of.

Vertices are dense integers 0..n-1.  Edges are canonical ``(min, max)`` pairs
and iteration order is always sorted, so that everything downstream (files,
witnesses, reports) is deterministic.  All operations are pure: they return
new graphs and never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tag:
    """Role marker for a vertex.

    Tags are metadata only: no graph operation changes its behaviour based on
    them.  Gadget builders use them to record which construction role a vertex
    plays ('a', 'b', 'c', 'x', pendant-of, rainbow index, growth level).
    """

    kind: str
    value: int | None = None

    _KINDS = ("plain", "a", "b", "c", "x", "pendant", "tindex", "level")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown tag kind {self.kind!r}")
        if self.kind in ("plain", "a", "b", "c", "x") and self.value is not None:
            raise ValueError(f"tag {self.kind!r} carries no value")
        if self.kind in ("pendant", "tindex", "level") and self.value is None:
            raise ValueError(f"tag {self.kind!r} needs a value")
        if self.kind == "tindex" and self.value not in (1, 2, 3, 4):
            raise ValueError("tindex must be in 1..4")

    def __str__(self) -> str:
        return self.kind if self.value is None else f"{self.kind} {self.value}"

    @staticmethod
    def parse(text: str) -> "Tag":
        parts = text.split()
        if len(parts) == 1:
            return Tag(parts[0])
        if len(parts) == 2:
            return Tag(parts[0], int(parts[1]))
        raise ValueError(f"cannot parse tag {text!r}")


PLAIN = Tag("plain")
A_VERTEX = Tag("a")
B_VERTEX = Tag("b")
C_VERTEX = Tag("c")
X_VERTEX = Tag("x")


def pendant_of(u: int) -> Tag:
    return Tag("pendant", u)


def t_index(i: int) -> Tag:
    return Tag("tindex", i)


def mycielski_level(k: int) -> Tag:
    return Tag("level", k)


def _remap_tag(tag: Tag, mapping: Mapping[int, int]) -> Tag:
    """Follow a vertex relabelling inside reference-carrying tags.

    A pendant tag whose anchor disappears degrades to plain."""
    if tag.kind != "pendant":
        return tag
    new = mapping.get(tag.value)
    return PLAIN if new is None else Tag("pendant", new)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1 with one tag per vertex."""

    n: int
    edges: frozenset[Edge]
    tags: tuple[Tag, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        if not self.tags:
            object.__setattr__(self, "tags", (PLAIN,) * self.n)
        if len(self.tags) != self.n:
            raise ValueError("tag tuple must cover every vertex")
        seen_t = set()
        for tag in self.tags:
            if tag.kind == "tindex":
                if tag.value in seen_t:
                    raise ValueError(f"duplicate tindex {tag.value}")
                seen_t.add(tag.value)
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) is not canonical within 0..{self.n - 1}")

    # -- accessors ---------------------------------------------------------

    @cached_property
    def neighbour_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(a)) for a in lists)

    def neighbours(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices_tagged(self, kind: str) -> list[int]:
        return [v for v in range(self.n) if self.tags[v].kind == kind]

    def with_tags(self, updates: Mapping[int, Tag]) -> "Graph":
        tags = list(self.tags)
        for v, tag in updates.items():
            self._check_vertex(v)
            tags[v] = tag
        return Graph(self.n, self.edges, tuple(tags))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"unknown vertex {v}")

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


# -- constructors -----------------------------------------------------------


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], tags: Iterable[Tag] = ()) -> Graph:
    return Graph(n, frozenset(canonical_edge(u, v) for u, v in edges), tuple(tags))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(t: int) -> Graph:
    """Path on t vertices, 0-1-...-(t-1)."""
    if t < 1:
        raise ValueError("a path needs at least one vertex")
    return graph_from_edges(t, ((i, i + 1) for i in range(t - 1)))


def cycle_graph(s: int) -> Graph:
    if s < 3:
        raise ValueError("a cycle needs at least three vertices")
    return graph_from_edges(s, [(i, (i + 1) % s) for i in range(s)])


def complete_graph(r: int) -> Graph:
    if r < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return graph_from_edges(r, [(i, j) for i in range(r) for j in range(i + 1, r)])


# -- operations --------------------------------------------------------------


def subdivide_edge(g: Graph, e: tuple[int, int], tag: Tag = PLAIN) -> tuple[Graph, int]:
    """Replace edge e by a two-edge path through a new vertex (the last id)."""
    e = canonical_edge(*e)
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    w = g.n
    u, v = e
    edges = set(g.edges)
    edges.remove(e)
    edges.add((u, w))
    edges.add((v, w))
    return Graph(g.n + 1, frozenset(edges), g.tags + (tag,)), w


def add_pendant(g: Graph, u: int) -> tuple[Graph, int]:
    """Attach a new degree-one vertex to u; the new vertex is tagged pendant-of-u."""
    g._check_vertex(u)
    w = g.n
    return Graph(g.n + 1, g.edges | {(u, w)}, g.tags + (pendant_of(u),)), w


def identify_vertices(g: Graph, u: int, v: int) -> Graph:
    """Merge two non-adjacent vertices; the merged vertex keeps id min(u, v)
    (after the order-preserving relabelling that keeps ids dense) and the tag
    of min(u, v)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent; identification would create a loop")
    keep, drop = min(u, v), max(u, v)
    mapping = {}
    for w in range(g.n):
        if w == drop:
            mapping[w] = keep
        else:
            mapping[w] = w if w < drop else w - 1
    edges = set()
    for a, b in g.edges:
        a2, b2 = mapping[a], mapping[b]
        if a2 != b2:
            edges.add(canonical_edge(a2, b2))
    tags = [g.tags[w] for w in range(g.n) if w != drop]
    tags = tuple(_remap_tag(t, mapping) for t in tags)
    return Graph(g.n - 1, frozenset(edges), tags)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place g2 next to g1, re-basing g2's vertex ids by g1.n."""
    off = g1.n
    shift = {v: v + off for v in range(g2.n)}
    edges = set(g1.edges)
    edges.update((u + off, v + off) for u, v in g2.edges)
    tags = g1.tags + tuple(_remap_tag(t, shift) for t in g2.tags)
    return Graph(g1.n + g2.n, frozenset(edges), tags)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    return induced_subgraph_with_map(g, keep)[0]


def induced_subgraph_with_map(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, relabelled order-preservingly to 0..|keep|-1.

    Returns the graph together with the old-id -> new-id mapping."""
    kept = sorted(set(keep))
    for v in kept:
        g._check_vertex(v)
    mapping = {v: i for i, v in enumerate(kept)}
    edges = frozenset(
        (mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping
    )
    tags = tuple(_remap_tag(g.tags[v], mapping) for v in kept)
    return Graph(len(kept), edges, tags), mapping


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    )
    return Graph(g.n, edges, g.tags)


# -- list assignments and precolourings --------------------------------------


@dataclass(frozen=True)
class ListAssignment:
    """One non-empty set of admissible colours per vertex, all within 1..k."""

    k: int
    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("colour bound k must be positive")
        for v, lst in enumerate(self.lists):
            if not lst:
                raise ValueError(f"vertex {v} has an empty list")
            if not lst <= set(range(1, self.k + 1)):
                raise ValueError(f"list of vertex {v} is not within 1..{self.k}")

    @staticmethod
    def from_dict(k: int, lists: Mapping[int, Iterable[int]], n: int) -> "ListAssignment":
        if sorted(lists) != list(range(n)):
            raise ValueError("list assignment must cover exactly the vertices 0..n-1")
        return ListAssignment(k, tuple(frozenset(lists[v]) for v in range(n)))

    @staticmethod
    def full(n: int, k: int) -> "ListAssignment":
        allc = frozenset(range(1, k + 1))
        return ListAssignment(k, (allc,) * n)

    def __len__(self) -> int:
        return len(self.lists)


@dataclass(frozen=True)
class Precolouring:
    """A partial colour map on a subset of the vertices, colours within 1..k.

    Properness on its domain depends on a graph, so it is checked where a graph
    is available (gadget builders, the precolouring-extension solver)."""

    k: int
    assignment: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("colour bound k must be positive")
        seen = set()
        for v, c in self.assignment:
            if v in seen:
                raise ValueError(f"vertex {v} precoloured twice")
            seen.add(v)
            if not 1 <= c <= self.k:
                raise ValueError(f"colour {c} of vertex {v} outside 1..{self.k}")
        object.__setattr__(self, "assignment", tuple(sorted(self.assignment)))

    @staticmethod
    def from_dict(k: int, colours: Mapping[int, int]) -> "Precolouring":
        return Precolouring(k, tuple(sorted(colours.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.assignment)

    def proper_on(self, g: Graph) -> bool:
        cmap = self.as_dict()
        for v in cmap:
            g._check_vertex(v)
        return all(
            cmap[u] != cmap[v]
            for u, v in g.edges
            if u in cmap and v in cmap
        )
