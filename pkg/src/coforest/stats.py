"""Partition representation and cluster-conditional value statistics.

Two probability families are derived from a partition:

* per value, its distribution across clusters  p(cluster | value)
  (rows of the value/cluster matrix; these feed the edge weights), and
* per cluster, its distribution over an attribute's values
  p(value | cluster) (these weight the per-value distance vectors when
  scoring samples against clusters).

Both are exact counting ratios. All functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Partition:
    """Hard assignment of each sample to exactly one of k clusters."""

    assignment: np.ndarray
    k: int

    def __post_init__(self):
        assignment = np.asarray(self.assignment, dtype=np.int64)
        object.__setattr__(self, "assignment", assignment)
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if assignment.ndim != 1:
            raise ValueError("assignment must be one-dimensional")
        if assignment.size and ((assignment < 0).any() or (assignment >= self.k).any()):
            raise ValueError("cluster index outside [0, k)")
        assignment.setflags(write=False)

    @property
    def n(self) -> int:
        return self.assignment.shape[0]

    def cluster_sizes(self) -> np.ndarray:
        return np.bincount(self.assignment, minlength=self.k)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.k == other.k
            and np.array_equal(self.assignment, other.assignment)
        )


def value_cluster_counts(ds, part: Partition) -> list[np.ndarray]:
    """Per attribute r, the o_r x k matrix of counts |{rows with value u in cluster j}|."""
    if part.n != ds.n:
        raise ValueError(
            f"partition covers {part.n} samples but dataset has {ds.n}"
        )
    k = part.k
    counts = []
    for r, card in enumerate(ds.cardinalities):
        flat = ds.rows[:, r] * k + part.assignment
        c = np.bincount(flat, minlength=card * k).reshape(card, k)
        counts.append(c.astype(np.float64))
    return counts


def value_cluster_distributions(ds, part: Partition) -> list[np.ndarray]:
    """Rows u of the r-th matrix: p(cluster j | value u), an o_r x k stochastic matrix.

    Every observed value has support >= 1 by dataset construction, so rows
    always sum to one.
    """
    out = []
    for c in value_cluster_counts(ds, part):
        out.append(c / c.sum(axis=1, keepdims=True))
    return out


def cluster_value_distributions(ds, part: Partition) -> list[np.ndarray]:
    """Per attribute r, the k x o_r matrix whose row j is p(value u | cluster j).

    Raises ValueError on an empty cluster; callers must repair the
    partition before asking for cluster-conditional distributions.
    """
    sizes = part.cluster_sizes()
    if (sizes == 0).any():
        empty = int(np.flatnonzero(sizes == 0)[0])
        raise ValueError(f"cluster {empty} is empty")
    out = []
    for c in value_cluster_counts(ds, part):
        out.append(c.T / sizes[:, None])
    return out


@dataclass(frozen=True)
class ClusterStats:
    """Both probability families for one (dataset, partition) state."""

    value_cluster: list[np.ndarray]  # per attribute: o_r x k
    cluster_value: list[np.ndarray]  # per attribute: k x o_r


def compute_cluster_stats(ds, part: Partition) -> ClusterStats:
    sizes = part.cluster_sizes()
    if (sizes == 0).any():
        empty = int(np.flatnonzero(sizes == 0)[0])
        raise ValueError(f"cluster {empty} is empty")
    vc = []
    cv = []
    for c in value_cluster_counts(ds, part):
        vc.append(c / c.sum(axis=1, keepdims=True))
        cv.append(c.T / sizes[:, None])
    return ClusterStats(value_cluster=vc, cluster_value=cv)


def weight(u_dist: np.ndarray, s_dist: np.ndarray, p: float = 2.0) -> float:
    """p-norm distance between two across-cluster value distributions.

    p defaults to 2 and is kept as a parameter for ablation experiments
    only. Symmetric, zero iff the distributions coincide, and bounded by
    2**(1/p) for probability-vector inputs.
    """
    u = np.asarray(u_dist, dtype=np.float64)
    s = np.asarray(s_dist, dtype=np.float64)
    if u.shape != s.shape:
        raise ValueError("distribution vectors differ in length")
    return float(np.linalg.norm(u - s, ord=p))
