"""Dataset model, CSV ingestion and synthetic data generation.

A categorical dataset is an n x l matrix of value indices. Each attribute
carries its own vocabulary of raw string values; the index of a value is
its position in that vocabulary. Vocabularies are built from observed data
only, so every value index is supported by at least one row (which keeps
all conditional-probability denominators nonzero downstream).
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass

import numpy as np


class DatasetError(Exception):
    """Raised for unreadable, ragged, empty or otherwise malformed input data."""


@dataclass(frozen=True)
class AttributeSchema:
    """Name plus the ordered vocabulary of one categorical attribute."""

    name: str
    vocabulary: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.vocabulary)) != len(self.vocabulary):
            raise DatasetError(f"duplicate values in vocabulary of {self.name!r}")
        if not self.vocabulary:
            raise DatasetError(f"empty vocabulary for attribute {self.name!r}")

    @property
    def cardinality(self) -> int:
        return len(self.vocabulary)

    def index_of(self, value: str) -> int:
        return self.vocabulary.index(value)

    def value_at(self, index: int) -> str:
        return self.vocabulary[index]


@dataclass(frozen=True)
class CategoricalDataset:
    """Encoded samples with per-attribute schemas and optional ground-truth labels.

    `rows` is an n x l integer array of vocabulary indices. `labels`, when
    present, holds class indices into `label_names`; labels are evaluation
    ground truth only and are never consulted by the clustering engines.
    """

    schemas: tuple[AttributeSchema, ...]
    rows: np.ndarray
    labels: np.ndarray | None = None
    label_names: tuple[str, ...] | None = None
    name: str = "dataset"

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.int64)
        object.__setattr__(self, "rows", rows)
        if rows.ndim != 2 or rows.shape[0] < 1 or rows.shape[1] < 1:
            raise DatasetError("dataset needs at least one row and one attribute")
        if rows.shape[1] != len(self.schemas):
            raise DatasetError("row width does not match number of schemas")
        cards = np.array([s.cardinality for s in self.schemas])
        if (rows < 0).any() or (rows >= cards[None, :]).any():
            raise DatasetError("cell index outside its attribute vocabulary")
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=np.int64)
            object.__setattr__(self, "labels", labels)
            if labels.shape != (rows.shape[0],):
                raise DatasetError("labels length does not match number of rows")
        rows.setflags(write=False)
        if self.labels is not None:
            self.labels.setflags(write=False)

    @property
    def n(self) -> int:
        return self.rows.shape[0]

    @property
    def l(self) -> int:
        return self.rows.shape[1]

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(s.cardinality for s in self.schemas)

    def decode_row(self, i: int) -> list[str]:
        """Raw string values of row i (round-trip of the encoding)."""
        return [s.value_at(v) for s, v in zip(self.schemas, self.rows[i])]


@dataclass(frozen=True)
class SyntheticSpec:
    """Sizes and seed for a planted-cluster synthetic dataset."""

    n: int
    l: int
    values_per_attribute: int = 5
    k_true: int = 5
    seed: int = 0

    def __post_init__(self):
        for fname in ("n", "l", "values_per_attribute", "k_true"):
            if getattr(self, fname) < 1:
                raise DatasetError(f"synthetic spec field {fname} must be >= 1")


def load_csv(
    path,
    label_column: str | None = None,
    missing_token: str = "?",
    has_header: bool = True,
    delimiter: str = ",",
    name: str | None = None,
) -> CategoricalDataset:
    """Load a delimited text file into an encoded categorical dataset.

    Rows containing `missing_token` in any non-label cell are dropped.
    Vocabularies are built from the surviving rows in first-appearance
    order. Without a header, columns are named c0..c{l-1}.
    """
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh, delimiter=delimiter)
            raw = [row for row in reader if row]
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc

    if not raw:
        raise DatasetError(f"{path} is empty")

    if has_header:
        header = [c.strip() for c in raw[0]]
        body = raw[1:]
    else:
        header = [f"c{i}" for i in range(len(raw[0]))]
        body = raw

    width = len(header)
    label_idx = None
    if label_column is not None:
        if label_column not in header:
            raise DatasetError(f"label column {label_column!r} not found in {path}")
        label_idx = header.index(label_column)

    kept_rows: list[list[str]] = []
    kept_labels: list[str] = []
    for lineno, row in enumerate(body, start=2 if has_header else 1):
        if len(row) != width:
            raise DatasetError(f"{path}:{lineno}: ragged row of width {len(row)}")
        cells = [c.strip() for c in row]
        feature_cells = [c for i, c in enumerate(cells) if i != label_idx]
        if missing_token in feature_cells:
            continue
        kept_rows.append(feature_cells)
        if label_idx is not None:
            kept_labels.append(cells[label_idx])

    if not kept_rows:
        raise DatasetError(f"{path}: no rows left after missing-value removal")

    n_attrs = width - (1 if label_idx is not None else 0)
    attr_names = [h for i, h in enumerate(header) if i != label_idx]

    vocabs: list[list[str]] = [[] for _ in range(n_attrs)]
    lookup: list[dict[str, int]] = [{} for _ in range(n_attrs)]
    encoded = np.empty((len(kept_rows), n_attrs), dtype=np.int64)
    for i, cells in enumerate(kept_rows):
        for r, cell in enumerate(cells):
            idx = lookup[r].get(cell)
            if idx is None:
                idx = len(vocabs[r])
                vocabs[r].append(cell)
                lookup[r][cell] = idx
            encoded[i, r] = idx

    labels = None
    label_names = None
    if label_idx is not None:
        label_vocab: list[str] = []
        label_lookup: dict[str, int] = {}
        labels = np.empty(len(kept_labels), dtype=np.int64)
        for i, cell in enumerate(kept_labels):
            idx = label_lookup.get(cell)
            if idx is None:
                idx = len(label_vocab)
                label_vocab.append(cell)
                label_lookup[cell] = idx
            labels[i] = idx
        label_names = tuple(label_vocab)

    schemas = tuple(
        AttributeSchema(attr_names[r], tuple(vocabs[r])) for r in range(n_attrs)
    )
    return CategoricalDataset(
        schemas=schemas,
        rows=encoded,
        labels=labels,
        label_names=label_names,
        name=name or os.path.splitext(os.path.basename(str(path)))[0],
    )


def generate_synthetic(spec: SyntheticSpec) -> CategoricalDataset:
    """Planted-cluster sampler: deterministic for a fixed seed.

    Every cluster gets, per attribute, a categorical distribution obtained
    by normalizing iid uniform(0,1) weights raised to the 3rd power (the
    sharpening keeps the planted clusters recoverable). Each sample draws
    its cluster uniformly, then one value per attribute from that cluster's
    distribution. Values never drawn anywhere are dropped from the
    vocabulary, so the realized cardinality can fall below
    values_per_attribute on small n.
    """
    rng = np.random.default_rng(spec.seed)
    m = spec.values_per_attribute
    weights = rng.random((spec.k_true, spec.l, m)) ** 3
    dists = weights / weights.sum(axis=2, keepdims=True)

    clusters = rng.integers(0, spec.k_true, size=spec.n)
    u = rng.random((spec.n, spec.l))
    cum = np.cumsum(dists, axis=2)
    cum[:, :, -1] = 1.0

    # inverse-CDF draw per cell against the sample's cluster distribution
    raw = np.empty((spec.n, spec.l), dtype=np.int64)
    for j in range(spec.k_true):
        mask = clusters == j
        if not mask.any():
            continue
        uj = u[mask]
        for r in range(spec.l):
            raw[mask, r] = np.searchsorted(cum[j, r], uj[:, r], side="right")
    np.minimum(raw, m - 1, out=raw)

    schemas = []
    encoded = np.empty_like(raw)
    for r in range(spec.l):
        vals, first_pos, inverse = np.unique(
            raw[:, r], return_index=True, return_inverse=True
        )
        order = np.argsort(first_pos, kind="stable")  # first-appearance order
        rank = np.empty(len(order), dtype=np.int64)
        rank[order] = np.arange(len(order))
        encoded[:, r] = rank[inverse]
        schemas.append(
            AttributeSchema(f"c{r}", tuple(f"v{g}" for g in vals[order]))
        )

    return CategoricalDataset(
        schemas=tuple(schemas),
        rows=encoded,
        labels=clusters,
        label_names=tuple(f"k{j}" for j in range(spec.k_true)),
        name=f"synthetic-n{spec.n}-l{spec.l}-s{spec.seed}",
    )


def dataset_summary(ds: CategoricalDataset) -> dict:
    """Read-only size summary; serializable with json.dumps."""
    cards = list(ds.cardinalities)
    summary = {
        "name": ds.name,
        "n": ds.n,
        "l": ds.l,
        "cardinalities": cards,
        "max_cardinality": max(cards),
    }
    if ds.labels is not None:
        summary["label_count"] = int(len(np.unique(ds.labels)))
    return summary


def summary_json(ds: CategoricalDataset) -> str:
    return json.dumps(dataset_summary(ds), indent=2)
