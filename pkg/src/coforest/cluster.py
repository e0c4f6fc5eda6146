"""Clustering engines.

`kmodes` is the classic frequency-mode baseline and also provides the
initial partition for the joint learner. `coforest` alternates between
two phases until the partition reproduces itself: an inner loop that
reassigns samples under a frozen forest (only the cluster-conditional
value distributions refresh between passes), and an outer step that
rebuilds the forest from the converged partition. Four ablation
variants swap out the learning loop, the tree structure, or the
probability-based weights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .forest import (
    OrderForest,
    apply_graph_weights,
    build_weight_graph,
    fully_connected_distances,
    hamming_weight_graph,
    line_structure,
    minimum_spanning_tree,
    trace_distance_matrix,
)
from .stats import (
    ClusterStats,
    Partition,
    compute_cluster_stats,
    value_cluster_distributions,
)

VARIANTS = ("coforest", "kmodes", "cof1", "cof2", "cof3", "cof4")


@dataclass(frozen=True)
class ClusteringConfig:
    k: int
    seed: int = 0
    max_inner: int = 100
    max_outer: int = 50
    variant: str = "coforest"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.max_inner < 1 or self.max_outer < 1:
            raise ValueError("iteration caps must be >= 1")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")


@dataclass
class ClusteringResult:
    """Final state of one clustering run.

    `objective_trace` holds (iteration, objective, forest_rebuilt)
    triples: one entry per inner iteration plus one entry per forest
    (re)construction, including the initial one. `outer_iterations`
    counts forest-construction rounds including the initial one;
    `inner_iterations` is the cumulative reassignment-pass count.
    `converged` is True iff the natural stopping rule fired (the inner
    loop's fixed point equals the partition the current forest was built
    from), never when an iteration cap cut the run short.
    """

    partition: Partition
    forest: OrderForest | None
    objective_trace: list[tuple[int, float, bool]]
    inner_iterations: int
    outer_iterations: int
    converged: bool


def _score_matrix(ds, stats: ClusterStats, distances) -> np.ndarray:
    """n x k matrix of sample-cluster distances under the given structure.

    Entry (i, j) sums, over attributes, the cluster-j-expected distance
    from sample i's value to the attribute's values.
    """
    k = stats.cluster_value[0].shape[0]
    scores = np.zeros((ds.n, k))
    for r in range(ds.l):
        val_scores = distances[r] @ stats.cluster_value[r].T  # o_r x k
        scores += val_scores[ds.rows[:, r], :]
    return scores


def _objective_value(ds, stats: ClusterStats, distances, assignment) -> float:
    total = 0.0
    for r in range(ds.l):
        val_scores = distances[r] @ stats.cluster_value[r].T
        total += float(val_scores[ds.rows[:, r], assignment].sum())
    return total


def _repair_empty(assignment: np.ndarray, scores: np.ndarray, k: int) -> np.ndarray:
    """Keep all k clusters nonempty.

    For each empty cluster (lowest index first), the not-yet-moved sample
    with maximal distance to its own cluster — among clusters that can
    spare a member — is moved in. Ties break on the lowest sample index.
    """
    sizes = np.bincount(assignment, minlength=k)
    if (sizes > 0).all():
        return assignment
    assignment = assignment.copy()
    moved = np.zeros(len(assignment), dtype=bool)
    for j in np.flatnonzero(sizes == 0):
        self_dist = scores[np.arange(len(assignment)), assignment]
        eligible = (~moved) & (sizes[assignment] >= 2)
        if not eligible.any():
            raise ValueError("cannot repair empty cluster: no movable sample")
        self_dist = np.where(eligible, self_dist, -np.inf)
        i = int(np.argmax(self_dist))
        sizes[assignment[i]] -= 1
        assignment[i] = j
        sizes[j] += 1
        moved[i] = True
    return assignment


def assign_step(ds, stats: ClusterStats, forest: OrderForest) -> Partition:
    """Batch reassignment: every sample scored against the same frozen
    stats, assigned to its argmin cluster (ties to the lowest index).

    The raw argmin result is returned; callers that need all k clusters
    alive must repair afterwards.
    """
    k = stats.cluster_value[0].shape[0]
    scores = _score_matrix(ds, stats, forest.distances)
    return Partition(assignment=scores.argmin(axis=1), k=k)


def objective(ds, part: Partition, forest: OrderForest) -> float:
    """Objective value of a (partition, forest) state: total distance of
    samples to their own clusters, with cluster stats taken from the
    given partition."""
    if part.n != ds.n:
        raise ValueError("partition does not cover the dataset")
    if forest.n_attributes != ds.l:
        raise ValueError("forest does not match the dataset's attributes")
    stats = compute_cluster_stats(ds, part)
    return _objective_value(ds, stats, forest.distances, part.assignment)


def reconstruct_forest(ds, part: Partition) -> OrderForest:
    """Order forest for a partition: per attribute, probability-distance
    weights, a minimum spanning tree over them, and the tree's all-pairs
    trace distances."""
    vcd = value_cluster_distributions(ds, part)
    trees = []
    dists = []
    for r in range(ds.l):
        g = build_weight_graph(vcd, r)
        t = minimum_spanning_tree(g)
        trees.append(t)
        dists.append(trace_distance_matrix(t))
    return OrderForest(distances=tuple(dists), trees=tuple(trees))


def _structure_forest(ds, part: Partition, structure: str, weights: str, seed: int) -> OrderForest:
    """Distance structure for the ablation variants: line graphs or fully
    connected graphs, with probability or boolean edge weights."""
    if weights == "prob":
        vcd = value_cluster_distributions(ds, part)
    attr_seeds = np.random.SeedSequence(seed).generate_state(ds.l)
    trees: list = []
    dists = []
    tree_backed = structure == "line"
    for r, card in enumerate(ds.cardinalities):
        if weights == "prob":
            g = build_weight_graph(vcd, r)
        else:
            g = hamming_weight_graph(r, card)
        if structure == "line":
            t = apply_graph_weights(line_structure(card, int(attr_seeds[r])), g)
            trees.append(t)
            dists.append(trace_distance_matrix(t))
        elif structure == "fcg":
            dists.append(fully_connected_distances(g))
        else:
            raise ValueError(f"unknown structure {structure!r}")
    return OrderForest(
        distances=tuple(dists), trees=tuple(trees) if tree_backed else None
    )


def kmodes(ds, k: int, seed: int = 0, max_iter: int = 100) -> ClusteringResult:
    """Batch k-modes under Hamming distance.

    Modes start from k distinct row patterns drawn by seed (row draw with
    possible duplicate patterns when fewer distinct patterns exist);
    assignment and mode updates alternate until the assignment repeats.
    Mode ties resolve to the lowest value index, assignment ties to the
    lowest cluster index, and emptied clusters are repaired by moving in
    the sample farthest from its own mode.
    """
    if k > ds.n:
        raise ValueError(f"k={k} exceeds the {ds.n} samples")
    rng = np.random.default_rng(seed)
    patterns = np.unique(ds.rows, axis=0)
    if len(patterns) >= k:
        modes = patterns[rng.choice(len(patterns), size=k, replace=False)]
    else:
        modes = ds.rows[rng.choice(ds.n, size=k, replace=False)]
    modes = modes.copy()

    cards = ds.cardinalities

    def _assign():
        scores = np.zeros((ds.n, k))
        for j in range(k):
            scores[:, j] = (ds.rows != modes[j][None, :]).sum(axis=1)
        assignment = _repair_empty(scores.argmin(axis=1), scores, k)
        return assignment, float(scores[np.arange(ds.n), assignment].sum())

    def _update_modes(assignment):
        for j in range(k):
            members = ds.rows[assignment == j]
            for r in range(ds.l):
                counts = np.bincount(members[:, r], minlength=cards[r])
                modes[j, r] = counts.argmax()

    # initialization pass (uncounted), then iterate to a fixed point
    assignment, _ = _assign()
    _update_modes(assignment)
    trace = []
    converged = False
    iterations = 0
    for _ in range(max_iter):
        new_assignment, cost = _assign()
        iterations += 1
        trace.append((iterations, cost, False))
        if np.array_equal(new_assignment, assignment):
            converged = True
            assignment = new_assignment
            break
        assignment = new_assignment
        _update_modes(assignment)

    return ClusteringResult(
        partition=Partition(assignment=assignment, k=k),
        forest=None,
        objective_trace=trace,
        inner_iterations=iterations,
        outer_iterations=0,
        converged=converged,
    )


def _inner_loop(ds, part: Partition, forest: OrderForest, max_inner: int,
                trace: list, start_iteration: int, trace_hook=None):
    """Reassign under a frozen forest until the partition repeats.

    Returns (partition, iterations_used, converged). Appends one trace
    entry per pass; the pass that confirms the fixed point counts.
    """
    q = part
    for step in range(max_inner):
        stats = compute_cluster_stats(ds, q)
        scores = _score_matrix(ds, stats, forest.distances)
        new_assignment = _repair_empty(scores.argmin(axis=1), scores, q.k)
        q_new = Partition(assignment=new_assignment, k=q.k)
        iteration = start_iteration + step + 1
        stats_new = compute_cluster_stats(ds, q_new)
        value = _objective_value(ds, stats_new, forest.distances, q_new.assignment)
        trace.append((iteration, value, False))
        if trace_hook is not None:
            trace_hook(iteration, value, False, q_new, forest)
        if q_new == q:
            return q_new, step + 1, True
        q = q_new
    return q, max_inner, False


def coforest(ds, config: ClusteringConfig, trace_hook=None) -> ClusteringResult:
    """Joint learning of the order forest and the partition.

    Starts from a k-modes partition, builds the forest for it, and then
    alternates inner reassignment loops with forest rebuilds until the
    inner fixed point matches the partition the forest was built from.
    """
    km = kmodes(ds, config.k, config.seed, max_iter=config.max_inner)
    q = km.partition
    forest = reconstruct_forest(ds, q)
    trace: list[tuple[int, float, bool]] = []
    value = objective(ds, q, forest)
    trace.append((0, value, True))
    if trace_hook is not None:
        trace_hook(0, value, True, q, forest)

    total_inner = 0
    outer_rounds = 0
    converged = False
    anchor = q
    for _ in range(config.max_outer):
        outer_rounds += 1
        q, used, _inner_ok = _inner_loop(
            ds, q, forest, config.max_inner, trace, total_inner, trace_hook
        )
        total_inner += used
        if q == anchor:
            converged = True
            break
        if outer_rounds == config.max_outer:
            break
        anchor = q
        forest = reconstruct_forest(ds, q)
        value = objective(ds, q, forest)
        trace.append((total_inner, value, True))
        if trace_hook is not None:
            trace_hook(total_inner, value, True, q, forest)

    return ClusteringResult(
        partition=q,
        forest=forest,
        objective_trace=trace,
        inner_iterations=total_inner,
        outer_iterations=outer_rounds,
        converged=converged,
    )


def ablation_variant(ds, config: ClusteringConfig, trace_hook=None) -> ClusteringResult:
    """Single-construction variants: build one distance structure from the
    k-modes partition, then run the inner loop alone to its fixed point.

    cof1 keeps the order forest; cof2 swaps each tree for a seeded random
    line; cof3 uses the fully connected weights directly; cof4 is cof3
    with boolean same/different weights.
    """
    km = kmodes(ds, config.k, config.seed, max_iter=config.max_inner)
    q = km.partition
    if config.variant == "cof1":
        forest = reconstruct_forest(ds, q)
    elif config.variant == "cof2":
        forest = _structure_forest(ds, q, "line", "prob", config.seed)
    elif config.variant == "cof3":
        forest = _structure_forest(ds, q, "fcg", "prob", config.seed)
    elif config.variant == "cof4":
        forest = _structure_forest(ds, q, "fcg", "hamming", config.seed)
    else:
        raise ValueError(f"not an ablation variant: {config.variant!r}")

    trace: list[tuple[int, float, bool]] = []
    value = objective(ds, q, forest)
    trace.append((0, value, True))
    if trace_hook is not None:
        trace_hook(0, value, True, q, forest)
    q, used, inner_ok = _inner_loop(
        ds, q, forest, config.max_inner, trace, 0, trace_hook
    )
    return ClusteringResult(
        partition=q,
        forest=forest,
        objective_trace=trace,
        inner_iterations=used,
        outer_iterations=1,
        converged=inner_ok,
    )


def run(ds, config: ClusteringConfig, trace_hook=None) -> ClusteringResult:
    """Dispatch a clustering run by configured variant."""
    if config.k > ds.n:
        raise ValueError(f"k={config.k} exceeds the {ds.n} samples")
    if config.variant == "coforest":
        return coforest(ds, config, trace_hook)
    if config.variant == "kmodes":
        return kmodes(ds, config.k, config.seed, max_iter=config.max_inner)
    return ablation_variant(ds, config, trace_hook)
