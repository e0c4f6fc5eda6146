"""Cluster validity metrics against ground-truth labels.

Clustering accuracy maximizes the matched fraction over injective
cluster-to-class mappings (optimal assignment on the confusion matrix),
so it is invariant to any relabeling of either side. ARI is the
pair-counting agreement corrected for chance; NMI normalizes mutual
information by the arithmetic mean of the two label entropies.
"""

from __future__ import annotations

from math import comb, log

import numpy as np
from scipy.optimize import linear_sum_assignment


def _check_pair(pred, truth):
    pred = np.asarray(pred, dtype=np.int64)
    truth = np.asarray(truth, dtype=np.int64)
    if pred.shape != truth.shape or pred.ndim != 1:
        raise ValueError("label vectors must be one-dimensional and equal length")
    if pred.size == 0:
        raise ValueError("empty label vectors")
    return pred, truth


def confusion_matrix(pred, truth) -> np.ndarray:
    """k_pred x k_true count matrix; entries sum to n."""
    pred, truth = _check_pair(pred, truth)
    kp = int(pred.max()) + 1
    kt = int(truth.max()) + 1
    flat = pred * kt + truth
    return np.bincount(flat, minlength=kp * kt).reshape(kp, kt)


def clustering_accuracy(pred, truth) -> float:
    """Matched fraction under the best injective cluster-to-class mapping.

    Solved by optimal assignment on the confusion matrix; rectangular
    matrices behave as if padded with zero rows/columns.
    """
    cm = confusion_matrix(pred, truth)
    rows, cols = linear_sum_assignment(cm, maximize=True)
    return float(cm[rows, cols].sum()) / cm.sum()


def adjusted_rand_index(pred, truth) -> float:
    """Pair-counting agreement corrected for chance, in [-1, 1]."""
    pred, truth = _check_pair(pred, truth)
    if pred.size < 2:
        raise ValueError("need at least two samples for pair counting")
    cm = confusion_matrix(pred, truth)
    n = int(cm.sum())
    index = sum(comb(int(c), 2) for c in cm.ravel())
    sum_rows = sum(comb(int(c), 2) for c in cm.sum(axis=1))
    sum_cols = sum(comb(int(c), 2) for c in cm.sum(axis=0))
    expected = sum_rows * sum_cols / comb(n, 2)
    max_index = (sum_rows + sum_cols) / 2.0
    if max_index == expected:
        # both partitions degenerate in the same way; identical by convention
        return 1.0
    return (index - expected) / (max_index - expected)


def _entropy(counts: np.ndarray, n: int) -> float:
    probs = counts[counts > 0] / n
    return float(-(probs * np.log(probs)).sum())


def normalized_mutual_information(pred, truth) -> float:
    """Mutual information over the arithmetic mean of the two entropies.

    1.0 for identical partitions (including the doubly-constant case),
    0.0 for independent ones; 0 log 0 terms are dropped.
    """
    pred, truth = _check_pair(pred, truth)
    cm = confusion_matrix(pred, truth)
    n = int(cm.sum())
    h_pred = _entropy(cm.sum(axis=1), n)
    h_truth = _entropy(cm.sum(axis=0), n)
    if h_pred == 0.0 and h_truth == 0.0:
        return 1.0
    mi = 0.0
    row_tot = cm.sum(axis=1)
    col_tot = cm.sum(axis=0)
    for i in range(cm.shape[0]):
        for j in range(cm.shape[1]):
            c = cm[i, j]
            if c > 0:
                mi += (c / n) * log(n * c / (row_tot[i] * col_tot[j]))
    mi = max(mi, 0.0)
    return mi / ((h_pred + h_truth) / 2.0)
