"""Multi-restart benchmark harness and the graph-structure experiment.

Every algorithm runs on every labeled dataset with k set to the number
of ground-truth classes, once per seed. Cells aggregate CA/ARI/NMI as
mean and population standard deviation (divisor R); per-metric average
ranks are computed across datasets with ties sharing the mean rank.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import rankdata

from . import cluster as _cluster
from .cluster import ClusteringConfig
from .forest import (
    OrderForest,
    OrderTree,
    apply_graph_weights,
    build_weight_graph,
    fully_connected_distances,
    graph_distance_matrix,
    line_structure,
    random_connected_structure,
    trace_distance_matrix,
)
from .metrics import (
    adjusted_rand_index,
    clustering_accuracy,
    normalized_mutual_information,
)
from .stats import value_cluster_distributions

METRICS = ("CA", "ARI", "NMI")

STRUCTURE_KINDS = ("rgg", "rglg", "fcg", "slg")


@dataclass
class BenchmarkReport:
    """Aggregated scores per (dataset, algorithm) cell plus rank footers."""

    datasets: list[str]
    algorithms: list[str]
    restarts: int
    base_seed: int
    cells: dict = field(default_factory=dict)  # dataset -> algorithm -> metric -> stats
    average_ranks: dict = field(default_factory=dict)  # metric -> algorithm -> rank
    metadata: dict = field(default_factory=dict)

    def mean(self, dataset: str, algorithm: str, metric: str) -> float:
        return self.cells[dataset][algorithm][metric]["mean"]

    def to_json(self) -> dict:
        return {
            "format": "coforest.benchmark",
            "version": 1,
            "datasets": self.datasets,
            "algorithms": self.algorithms,
            "restarts": self.restarts,
            "base_seed": self.base_seed,
            "cells": self.cells,
            "average_ranks": self.average_ranks,
            "metadata": self.metadata,
        }


def score_partition(assignment, labels) -> dict[str, float]:
    return {
        "CA": clustering_accuracy(assignment, labels),
        "ARI": adjusted_rand_index(assignment, labels),
        "NMI": normalized_mutual_information(assignment, labels),
    }


def run_benchmark(
    datasets,
    algorithms,
    restarts: int = 10,
    base_seed: int = 0,
    jobs: int = 1,
    max_inner: int = 100,
    max_outer: int = 50,
) -> BenchmarkReport:
    """Run each algorithm on each labeled dataset over shared seeds.

    Seeds are base_seed..base_seed+restarts-1 for every cell, so variants
    share their k-modes initializations. Datasets must carry labels.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    for ds in datasets:
        if ds.labels is None:
            raise ValueError(f"dataset {ds.name!r} has no labels")

    tasks = [
        (ds, alg, base_seed + t)
        for ds in datasets
        for alg in algorithms
        for t in range(restarts)
    ]

    def _one(task):
        ds, alg, seed = task
        k_star = len(np.unique(ds.labels))
        config = ClusteringConfig(
            k=k_star, seed=seed, variant=alg,
            max_inner=max_inner, max_outer=max_outer,
        )
        result = _cluster.run(ds, config)
        return task, score_partition(result.partition.assignment, ds.labels)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_one, tasks))
    else:
        outcomes = [_one(t) for t in tasks]

    values: dict = {
        ds.name: {alg: {m: [] for m in METRICS} for alg in algorithms}
        for ds in datasets
    }
    for (ds, alg, _seed), scores in outcomes:
        for m in METRICS:
            values[ds.name][alg][m].append(scores[m])

    report = BenchmarkReport(
        datasets=[ds.name for ds in datasets],
        algorithms=list(algorithms),
        restarts=restarts,
        base_seed=base_seed,
        metadata={
            "std_divisor": "R (population)",
            "nmi_normalization": "arithmetic mean of entropies",
        },
    )
    for ds in datasets:
        report.cells[ds.name] = {}
        for alg in algorithms:
            cell = {}
            for m in METRICS:
                vals = np.array(values[ds.name][alg][m])
                cell[m] = {
                    "mean": float(vals.mean()),
                    "std": float(vals.std()),  # population, divisor R
                    "values": [float(v) for v in vals],
                }
            report.cells[ds.name][alg] = cell

    for m in METRICS:
        per_dataset_ranks = []
        for ds in datasets:
            means = np.array([report.mean(ds.name, alg, m) for alg in algorithms])
            # higher is better for all three metrics; ties share the mean rank
            per_dataset_ranks.append(rankdata(-means, method="average"))
        avg = np.mean(per_dataset_ranks, axis=0)
        report.average_ranks[m] = {
            alg: float(avg[i]) for i, alg in enumerate(algorithms)
        }
    return report


def render_text_table(report: BenchmarkReport) -> str:
    """Aligned text tables, one per metric: mean±std cells and an
    average-rank footer row."""
    blocks = []
    name_w = max(len("dataset"), *(len(d) for d in report.datasets), len("avg-rank"))
    col_w = max(14, *(len(a) + 2 for a in report.algorithms))
    for m in METRICS:
        lines = [m]
        header = "dataset".ljust(name_w) + "".join(
            a.rjust(col_w) for a in report.algorithms
        )
        lines.append(header)
        for d in report.datasets:
            row = d.ljust(name_w)
            for a in report.algorithms:
                stats = report.cells[d][a][m]
                row += f"{stats['mean']:.4f}±{stats['std']:.2f}".rjust(col_w)
            lines.append(row)
        footer = "avg-rank".ljust(name_w) + "".join(
            f"{report.average_ranks[m][a]:.4f}".rjust(col_w)
            for a in report.algorithms
        )
        lines.append(footer)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def structure_experiment(
    ds,
    structure_kind: str,
    trials: int = 50,
    base_seed: int = 0,
    ordering=None,
    k: int | None = None,
    max_inner: int = 100,
) -> list[float]:
    """Cluster under alternative per-attribute distance structures.

    One shared k-modes initialization (seeded by base_seed) fixes the
    weight graphs; each trial then draws its own structure where the kind
    is randomized (rgg, rglg), runs the frozen-structure reassignment
    loop to its fixed point, and records the accuracy. The returned
    accuracies are sorted ascending. Deterministic kinds (fcg, slg)
    repeat the same run each trial.

    slg needs `ordering`: one list of raw values per attribute giving the
    semantic node order.
    """
    if structure_kind not in STRUCTURE_KINDS:
        raise ValueError(f"unknown structure kind {structure_kind!r}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if ds.labels is None:
        raise ValueError("structure experiment needs a labeled dataset")
    if structure_kind == "slg":
        if ordering is None:
            raise ValueError("slg requires a user-supplied value ordering")
        if len(ordering) != ds.l:
            raise ValueError("ordering must cover every attribute")

    if k is None:
        k = len(np.unique(ds.labels))
    init = _cluster.kmodes(ds, k, seed=base_seed, max_iter=max_inner)
    q0 = init.partition
    vcd = value_cluster_distributions(ds, q0)
    graphs = [build_weight_graph(vcd, r) for r in range(ds.l)]

    accuracies = []
    for t in range(trials):
        attr_seeds = np.random.SeedSequence([base_seed, t]).generate_state(ds.l)
        dists = []
        for r, g in enumerate(graphs):
            o = g.n_nodes
            if structure_kind == "rgg":
                edges = random_connected_structure(o, int(attr_seeds[r]))
                dists.append(graph_distance_matrix(g, edges))
            elif structure_kind == "rglg":
                tree = apply_graph_weights(line_structure(o, int(attr_seeds[r])), g)
                dists.append(trace_distance_matrix(tree))
            elif structure_kind == "fcg":
                dists.append(fully_connected_distances(g))
            else:  # slg
                order = [ds.schemas[r].index_of(v) for v in ordering[r]]
                if sorted(order) != list(range(o)):
                    raise ValueError(
                        f"ordering for attribute {ds.schemas[r].name!r} is not a "
                        "permutation of its vocabulary"
                    )
                edges = tuple(
                    (order[i], order[i + 1], 0.0) for i in range(o - 1)
                )
                tree = apply_graph_weights(
                    OrderTree(attribute=r, n_nodes=o, edges=edges), g
                )
                dists.append(trace_distance_matrix(tree))
        forest = OrderForest(distances=tuple(dists))
        final_q, _used, _ok = _cluster._inner_loop(
            ds, q0, forest, max_inner, trace=[], start_iteration=0
        )
        accuracies.append(clustering_accuracy(final_q.assignment, ds.labels))
    return sorted(accuracies)
