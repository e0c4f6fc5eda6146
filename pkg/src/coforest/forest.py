"""Per-attribute distance structures over categorical values.

For each attribute, pairwise value weights are the 2-norm distances
between the values' across-cluster distributions. A minimum spanning
tree over those weights is the attribute's order tree; the unique tree
path between two values is their order trace, and the sum of the weights
on it is their trace distance. The collection of trees (one per
attribute) with precomputed all-pairs trace distances is the order
forest.

Line graphs, fully connected graphs and random connected graphs are also
provided; they back the ablation variants and the structure-comparison
experiment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class WeightedValueGraph:
    """Dense symmetric pairwise-weight matrix over one attribute's values."""

    attribute: int
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        object.__setattr__(self, "weights", w)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        w.setflags(write=False)

    @property
    def n_nodes(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class OrderTree:
    """Spanning tree over one attribute's values; exactly n_nodes - 1 edges."""

    attribute: int
    n_nodes: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        if len(self.edges) != self.n_nodes - 1:
            raise ValueError(
                f"tree over {self.n_nodes} nodes needs {self.n_nodes - 1} edges, "
                f"got {len(self.edges)}"
            )
        uf = _UnionFind(self.n_nodes)
        for u, s, _ in self.edges:
            if not uf.union(u, s):
                raise ValueError("edge list contains a cycle or duplicate edge")

    @cached_property
    def adjacency(self) -> list[list[tuple[int, float]]]:
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n_nodes)]
        for u, s, w in self.edges:
            adj[u].append((s, w))
            adj[s].append((u, w))
        return adj

    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))


def build_weight_graph(
    value_cluster: list[np.ndarray], r: int, p: float = 2.0
) -> WeightedValueGraph:
    """Pairwise p-norm distances between the attribute's value distributions.

    `value_cluster` is the per-attribute list of o_r x k matrices whose
    rows are p(cluster | value). Broadcasting keeps the result exactly
    symmetric with a zero diagonal.
    """
    m = value_cluster[r]
    diff = m[:, None, :] - m[None, :, :]
    if p == 2.0:
        w = np.sqrt((diff * diff).sum(axis=2))
    else:
        w = (np.abs(diff) ** p).sum(axis=2) ** (1.0 / p)
    np.fill_diagonal(w, 0.0)
    return WeightedValueGraph(attribute=r, weights=w)


def hamming_weight_graph(r: int, cardinality: int) -> WeightedValueGraph:
    """Boolean weights: 0 on the diagonal, 1 between distinct values."""
    w = np.ones((cardinality, cardinality)) - np.eye(cardinality)
    return WeightedValueGraph(attribute=r, weights=w)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def minimum_spanning_tree(g: WeightedValueGraph) -> OrderTree:
    """Kruskal over the dense weight matrix.

    Edges are taken in (weight, smaller index, larger index) order, so
    runs are reproducible even when many weights tie (e.g. the all-zero
    graph of a degenerate partition). A single-node graph yields an
    empty edge list.
    """
    o = g.n_nodes
    if o == 1:
        return OrderTree(attribute=g.attribute, n_nodes=1, edges=())
    iu, is_ = np.triu_indices(o, k=1)
    order = np.lexsort((is_, iu, g.weights[iu, is_]))
    uf = _UnionFind(o)
    edges = []
    for idx in order:
        u, s = int(iu[idx]), int(is_[idx])
        if uf.union(u, s):
            edges.append((u, s, float(g.weights[u, s])))
            if len(edges) == o - 1:
                break
    return OrderTree(attribute=g.attribute, n_nodes=o, edges=tuple(edges))


def order_trace(t: OrderTree, u: int, s: int) -> list[float]:
    """Weights along the unique tree path between u and s; empty when u == s."""
    if not (0 <= u < t.n_nodes and 0 <= s < t.n_nodes):
        raise ValueError(f"node index outside tree of {t.n_nodes} nodes")
    if u == s:
        return []
    parent: dict[int, tuple[int, float]] = {u: (u, 0.0)}
    stack = [u]
    while stack:
        node = stack.pop()
        if node == s:
            break
        for nbr, w in t.adjacency[node]:
            if nbr not in parent:
                parent[nbr] = (node, w)
                stack.append(nbr)
    trace = []
    node = s
    while node != u:
        node, w = parent[node]
        trace.append(w)
    trace.reverse()
    return trace


def trace_distance_matrix(t: OrderTree) -> np.ndarray:
    """All-pairs path-length sums, one tree traversal per source node."""
    o = t.n_nodes
    d = np.zeros((o, o))
    adj = t.adjacency
    for src in range(o):
        row = d[src]
        stack = [src]
        visited = [False] * o
        visited[src] = True
        while stack:
            node = stack.pop()
            for nbr, w in adj[node]:
                if not visited[nbr]:
                    visited[nbr] = True
                    row[nbr] = row[node] + w
                    stack.append(nbr)
    return d


def line_structure(o: int, seed: int) -> OrderTree:
    """Path graph over a seeded random permutation of the o nodes.

    Edge weights are zero placeholders; use apply_graph_weights to fill
    them from a weight graph.
    """
    if o < 1:
        raise ValueError("need at least one node")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(o)
    edges = tuple(
        (int(perm[i]), int(perm[i + 1]), 0.0) for i in range(o - 1)
    )
    return OrderTree(attribute=-1, n_nodes=o, edges=edges)


def apply_graph_weights(t: OrderTree, g: WeightedValueGraph) -> OrderTree:
    """Copy of the tree with each edge weighted by the graph's entry."""
    edges = tuple((u, s, float(g.weights[u, s])) for u, s, _ in t.edges)
    return OrderTree(attribute=g.attribute, n_nodes=t.n_nodes, edges=edges)


def random_connected_structure(o: int, seed: int) -> list[tuple[int, int]]:
    """Connected edge set: a seeded random spanning tree plus each
    remaining pair included independently with probability 0.5."""
    if o < 1:
        raise ValueError("need at least one node")
    rng = np.random.default_rng(seed)
    edges: set[tuple[int, int]] = set()
    if o >= 2:
        # spanning tree: attach each node to a random earlier one, under a
        # random node ordering
        perm = rng.permutation(o)
        for i in range(1, o):
            j = int(rng.integers(0, i))
            a, b = int(perm[i]), int(perm[j])
            edges.add((min(a, b), max(a, b)))
        for u in range(o):
            for s in range(u + 1, o):
                if (u, s) not in edges and rng.random() < 0.5:
                    edges.add((u, s))
    return sorted(edges)


def fully_connected_distances(g: WeightedValueGraph) -> np.ndarray:
    """Distances of the fully connected structure: the weights themselves."""
    return g.weights.copy()


def graph_distance_matrix(
    g: WeightedValueGraph, edge_set: list[tuple[int, int]]
) -> np.ndarray:
    """Shortest-path distances over an arbitrary connected edge subset,
    with edge lengths taken from the weight graph."""
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import dijkstra

    o = g.n_nodes
    if o == 1:
        return np.zeros((1, 1))
    rows, cols, vals = [], [], []
    for u, s in edge_set:
        w = float(g.weights[u, s])
        rows += [u, s]
        cols += [s, u]
        vals += [w, w]
    sparse = csr_matrix((vals, (rows, cols)), shape=(o, o))
    d = dijkstra(sparse, directed=False)
    if np.isinf(d).any():
        raise ValueError("edge set does not connect all nodes")
    return d


@dataclass(frozen=True)
class OrderForest:
    """One distance structure per attribute.

    `trees` holds the order trees when the structure is tree-shaped
    (the learned forest, line-graph variants); it is None for structures
    defined directly by a distance matrix (fully connected, random
    graphs). `distances` always holds one o_r x o_r matrix per attribute.
    """

    distances: tuple[np.ndarray, ...]
    trees: tuple[OrderTree, ...] | None = None

    def __post_init__(self):
        for d in self.distances:
            d.setflags(write=False)
        if self.trees is not None and len(self.trees) != len(self.distances):
            raise ValueError("one tree per attribute required")

    @property
    def n_attributes(self) -> int:
        return len(self.distances)


def forest_to_json(forest: OrderForest, schemas) -> dict:
    """JSON document: per attribute its vocabulary, weighted edge list
    and distance matrix. Only tree-backed forests serialize."""
    if forest.trees is None:
        raise ValueError("forest has no trees to serialize")
    attributes = []
    for schema, tree, dist in zip(schemas, forest.trees, forest.distances):
        attributes.append(
            {
                "name": schema.name,
                "vocabulary": list(schema.vocabulary),
                "edges": [
                    {"u": u, "s": s, "weight": w} for u, s, w in tree.edges
                ],
                "distances": dist.tolist(),
            }
        )
    return {"format": "coforest.forest", "version": 1, "attributes": attributes}


def forest_from_json(doc: dict) -> OrderForest:
    if doc.get("format") != "coforest.forest":
        raise ValueError("not a forest document")
    trees = []
    distances = []
    for r, attr in enumerate(doc["attributes"]):
        edges = tuple(
            (int(e["u"]), int(e["s"]), float(e["weight"])) for e in attr["edges"]
        )
        trees.append(
            OrderTree(attribute=r, n_nodes=len(attr["vocabulary"]), edges=edges)
        )
        distances.append(np.asarray(attr["distances"], dtype=np.float64))
    return OrderForest(distances=tuple(distances), trees=tuple(trees))


def forest_to_dot(forest: OrderForest, schemas) -> str:
    """One DOT graph block per attribute; edge labels carry the weight
    to six decimal places."""
    if forest.trees is None:
        raise ValueError("forest has no trees to serialize")
    blocks = []
    for schema, tree in zip(schemas, forest.trees):
        lines = [f'graph "{schema.name}" {{']
        for idx, value in enumerate(schema.vocabulary):
            lines.append(f'  n{idx} [label="{value}"];')
        for u, s, w in tree.edges:
            lines.append(f'  n{u} -- n{s} [label="{w:.6f}"];')
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


def save_forest_json(forest: OrderForest, schemas, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(forest_to_json(forest, schemas), fh, indent=2)
