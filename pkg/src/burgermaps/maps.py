"""Rooted planar maps from perfect words.

A map is encoded as a rotation system on darts: edge i owns darts 2i and
2i+1 (the involution flips the low bit), and rotation[d] is the next dart
counterclockwise around d's vertex.  Edges are numbered by the word position
of their produce letter; the root dart is dart 0, created by the first
letter.  Faces are the orbits of d -> rotation[d ^ 1].

Construction: hamburger pairs trace the contour of a plane tree (produce
descends to a new vertex, order returns to the parent); each cheeseburger
pair attaches a non-tree edge between the two corners at which its letters
occur.  Darts attached at a vertex in temporal order are consecutive in its
rotation, which is what makes the embedding planar.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .errors import InvalidInputError, InternalInvariantError
from .sandpiles import MultiGraph
from . import words as W


@dataclass(frozen=True)
class CombinatorialMap:
    """Rotation system with a root dart.  Darts of edge i are 2i, 2i+1."""

    n_edges: int
    rotation: tuple[int, ...]
    root_dart: int = 0

    @property
    def n_darts(self) -> int:
        return 2 * self.n_edges

    def check(self):
        nd = self.n_darts
        if len(self.rotation) != nd or sorted(self.rotation) != list(range(nd)):
            raise InternalInvariantError("rotation is not a permutation of the darts")
        # connectivity: rotation and involution act transitively
        seen = [False] * nd
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for e in (self.rotation[d], d ^ 1):
                if not seen[e]:
                    seen[e] = True
                    count += 1
                    stack.append(e)
        if count != nd:
            raise InternalInvariantError("dart group does not act transitively")

    def vertex_orbits(self) -> list[tuple[int, ...]]:
        return _orbits(self.rotation)

    def vertex_of_darts(self) -> list[int]:
        return _orbit_labels(self.rotation)

    def n_vertices(self) -> int:
        return len(self.vertex_orbits())


def _orbits(perm) -> list[tuple[int, ...]]:
    n = len(perm)
    seen = [False] * n
    out = []
    for d0 in range(n):
        if seen[d0]:
            continue
        orbit = []
        d = d0
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]
        out.append(tuple(orbit))
    return out


def _orbit_labels(perm) -> list[int]:
    labels = [-1] * len(perm)
    nxt = 0
    for d0 in range(len(perm)):
        if labels[d0] >= 0:
            continue
        d = d0
        while labels[d] < 0:
            labels[d] = nxt
            d = perm[d]
        nxt += 1
    return labels


def faces(cmap: CombinatorialMap) -> list[tuple[int, ...]]:
    """Face orbits: d -> rotation[d ^ 1]."""
    rot = cmap.rotation
    face_perm = [rot[d ^ 1] for d in range(cmap.n_darts)]
    return _orbits(face_perm)


def face_of_darts(cmap: CombinatorialMap) -> list[int]:
    rot = cmap.rotation
    face_perm = [rot[d ^ 1] for d in range(cmap.n_darts)]
    return _orbit_labels(face_perm)


def outer_face(cmap: CombinatorialMap) -> int:
    """The face on the root dart's side: its orbit under d -> rotation[d ^ 1]."""
    return face_of_darts(cmap)[cmap.root_dart]


@dataclass(frozen=True)
class FKConfig:
    """Distinguished edge subset: tree edges (hamburger pairs) plus the extra
    edges closed by fresh orders on cheeseburgers."""

    tree_edges: tuple[int, ...]
    extra_edges: tuple[int, ...]

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.tree_edges + self.extra_edges))


@dataclass(frozen=True)
class MapWithSubgraph:
    cmap: CombinatorialMap
    config: FKConfig
    order: int
    n_fresh: int


def build_map(word: str, pairing: W.MatchPairing | None = None) -> MapWithSubgraph:
    """Build the rooted map and its edge subset for a perfect word whose fresh
    orders all match cheeseburgers."""
    if pairing is None:
        pairing = W.validate(word)
    n_cheese_f, n_ham_f = W.classify_f_matches(word, pairing)
    if n_ham_f:
        raise InvalidInputError("word has a fresh order fulfilled by a hamburger")
    n = len(word) // 2
    edge_of_pos = {}
    eid = 0
    for i, letter in enumerate(word):
        if letter in W.PRODUCE_LETTERS:
            edge_of_pos[i] = eid
            eid += 1
    # temporal attachment events (vertex, dart); rotation at a vertex is its
    # event subsequence
    events: list[tuple[int, int]] = []
    vertex_count = 1
    cur = 0
    parents: list[int] = []
    tree_edges: list[int] = []
    extra_edges: list[int] = []
    for i, letter in enumerate(word):
        if letter == W.HAMBURGER:
            e = edge_of_pos[i]
            tree_edges.append(e)
            events.append((cur, 2 * e))
            events.append((vertex_count, 2 * e + 1))
            parents.append(cur)
            cur = vertex_count
            vertex_count += 1
        elif letter == W.CHEESEBURGER:
            events.append((cur, 2 * edge_of_pos[i]))
        elif letter == W.HAM_ORDER:
            cur = parents.pop()
        else:  # c or F: close the cheeseburger edge at the current corner
            e = edge_of_pos[pairing.match[i]]
            events.append((cur, 2 * e + 1))
            if letter == W.FRESH_ORDER:
                extra_edges.append(e)
    per_vertex: list[list[int]] = [[] for _ in range(vertex_count)]
    for v, d in events:
        per_vertex[v].append(d)
    rotation = [0] * (2 * n)
    for darts in per_vertex:
        for a, b in zip(darts, darts[1:] + darts[:1]):
            rotation[a] = b
    cmap = CombinatorialMap(n_edges=n, rotation=tuple(rotation), root_dart=0)
    config = FKConfig(tree_edges=tuple(tree_edges), extra_edges=tuple(sorted(extra_edges)))
    return MapWithSubgraph(cmap=cmap, config=config, order=n, n_fresh=len(pairing.f_matches))


def _component_count(n_nodes: int, edges) -> int:
    parent = list(range(n_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n_nodes
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def subgraph_components(cmap: CombinatorialMap, edge_subset) -> int:
    """Components of the spanning subgraph (all vertices, given edges)."""
    vert = cmap.vertex_of_darts()
    nv = max(vert) + 1
    return _component_count(nv, ((vert[2 * e], vert[2 * e + 1]) for e in edge_subset))


def dual_components(cmap: CombinatorialMap, edge_subset) -> int:
    """Components of the dual subgraph spanned by duals of the complement."""
    face = face_of_darts(cmap)
    nf = max(face) + 1
    subset = set(edge_subset)
    complement = (e for e in range(cmap.n_edges) if e not in subset)
    return _component_count(nf, ((face[2 * e], face[2 * e + 1]) for e in complement))


def unicycle_geometry(mws: MapWithSubgraph) -> tuple[int, int]:
    """Length and area of the unique cycle of a spanning unicycle.

    The cycle is what survives stripping degree-one vertices from the edge
    subset; the inside is the side of it not reachable from the outer face in
    the dual without crossing cycle edges.  Area is twice the number of edges
    strictly inside plus the cycle length.
    """
    cmap = mws.cmap
    sub = list(mws.config.edges)
    if len(sub) != cmap.n_edges - cmap.n_vertices() + 1 + 1 - 1 or mws.n_fresh != 1:
        # spanning unicycle means exactly one excess edge over a spanning tree
        if mws.n_fresh != 1:
            raise InvalidInputError("unicycle geometry requires exactly one fresh order")
    vert = cmap.vertex_of_darts()
    nv = max(vert) + 1
    deg = [0] * nv
    incident: list[list[int]] = [[] for _ in range(nv)]
    alive = {e: True for e in sub}
    for e in sub:
        for d in (2 * e, 2 * e + 1):
            deg[vert[d]] += 1
            incident[vert[d]].append(e)
    queue = deque(v for v in range(nv) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        if deg[v] != 1:
            continue
        for e in incident[v]:
            if alive.get(e):
                alive[e] = False
                for d in (2 * e, 2 * e + 1):
                    deg[vert[d]] -= 1
                for u in (vert[2 * e], vert[2 * e + 1]):
                    if deg[u] == 1:
                        queue.append(u)
                break
    cycle = {e for e, ok in alive.items() if ok}
    if not cycle:
        raise InternalInvariantError("edge subset has no cycle")
    length = len(cycle)
    face = face_of_darts(cmap)
    nf = max(face) + 1
    adj: list[list[int]] = [[] for _ in range(nf)]
    for e in range(cmap.n_edges):
        if e in cycle:
            continue
        f1, f2 = face[2 * e], face[2 * e + 1]
        adj[f1].append(f2)
        adj[f2].append(f1)
    outer = face[cmap.root_dart]
    reach = [False] * nf
    reach[outer] = True
    stack = [outer]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if not reach[g]:
                reach[g] = True
                stack.append(g)
    inside_edges = sum(1 for e in range(cmap.n_edges)
                       if e not in cycle and not reach[face[2 * e]])
    return length, 2 * inside_edges + length


def to_multigraph(cmap: CombinatorialMap, sink: int | None = None) -> MultiGraph:
    """Vertex set and edge multiset of the map, loops preserved.

    The default sink is the root dart's vertex.
    """
    vert = cmap.vertex_of_darts()
    nv = max(vert) + 1
    edges = [(vert[2 * e], vert[2 * e + 1]) for e in range(cmap.n_edges)]
    if sink is None:
        sink = vert[cmap.root_dart]
    return MultiGraph(n_vertices=nv, edges=tuple(edges), sink=sink)


def map_to_dict(mws: MapWithSubgraph) -> dict:
    """JSON-ready encoding; dart d belongs to edge d // 2."""
    return {
        "n_edges": mws.cmap.n_edges,
        "root_dart": mws.cmap.root_dart,
        "rotation": list(mws.cmap.rotation),
        "fk_edges": list(mws.config.edges),
        "tree_edges": list(mws.config.tree_edges),
    }
