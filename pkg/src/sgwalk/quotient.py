"""Equitable partitions and signed quotient graphs.

A partition of the vertices is equitable when every vertex of a cell j
sees the same number of positive and of negative neighbours inside each
cell k.  The signed cell degrees d[j,k] = d+ - d- then define a quotient
matrix B with

    B[j,k] = sign(d[j,k]) * sqrt(|d[j,k] * d[k,j]|)

(zero when the signed degree vanishes), which equals Q^T A Q for the
normalised partition indicator Q.  Walks commute with Q Q^T, so
amplitudes between singleton cells survive the quotient exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import SIMPLE, SignedGraph, WeightedGraph
from .spectral import WalkAmplitude, amplitude

__all__ = [
    "Partition",
    "partition_from_cells",
    "partition_from_cell_of",
    "discrete_partition",
    "single_cell_partition",
    "read_partition",
    "write_partition",
    "format_partition",
    "EquitableProfile",
    "is_equitable",
    "normalized_partition_matrix",
    "QuotientGraph",
    "quotient",
    "coarsest_equitable",
    "TransferCheck",
    "quotient_transfer_check",
]


@dataclass(frozen=True, eq=False)
class Partition:
    """Ordered partition of 0..n-1 into non-empty cells."""

    cells: tuple
    cell_of: np.ndarray

    def __post_init__(self):
        self.cell_of.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.cell_of)

    @property
    def m(self) -> int:
        return len(self.cells)

    def sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.cells], dtype=np.int64)


def partition_from_cells(cells: Iterable[Sequence[int]], n: Optional[int] = None) -> Partition:
    """Build a partition from explicit cells (kept in the given order)."""
    normalized = tuple(tuple(sorted(int(v) for v in cell)) for cell in cells)
    if any(len(cell) == 0 for cell in normalized):
        raise ValueError("cells must be non-empty")
    flat = [v for cell in normalized for v in cell]
    if n is None:
        n = max(flat) + 1 if flat else 0
    if sorted(flat) != list(range(n)):
        raise ValueError(f"cells must partition 0..{n - 1} exactly")
    cell_of = np.zeros(n, dtype=np.int64)
    for j, cell in enumerate(normalized):
        for v in cell:
            cell_of[v] = j
    return Partition(normalized, cell_of)


def partition_from_cell_of(cell_of: Sequence[int]) -> Partition:
    """Build a partition from a cell-index vector; cells are numbered as
    their smallest vertices appear."""
    vec = [int(c) for c in cell_of]
    order: dict = {}
    for v, c in enumerate(vec):
        order.setdefault(c, []).append(v)
    cells = tuple(tuple(vs) for vs in order.values())
    return partition_from_cells(cells, n=len(vec))


def discrete_partition(n: int) -> Partition:
    return partition_from_cells([[v] for v in range(n)], n=n)


def single_cell_partition(n: int) -> Partition:
    return partition_from_cells([list(range(n))], n=n)


def format_partition(p: Partition) -> str:
    return "\n".join(" ".join(str(v) for v in cell) for cell in p.cells) + "\n"


def write_partition(p: Partition, path) -> None:
    Path(path).write_text(format_partition(p))


def read_partition(path, n: Optional[int] = None) -> Partition:
    """Read a partition file: one cell per line, vertices space-separated."""
    cells = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            cells.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad vertex index") from None
    return partition_from_cells(cells, n=n)


@dataclass(frozen=True, eq=False)
class EquitableProfile:
    """Cell-to-cell edge counts of an equitable partition.

    ``d_plus[j, k]`` / ``d_minus[j, k]`` count positive / negative
    neighbours in cell k of any vertex in cell j; they satisfy the
    double-counting identity d[j,k] * |cell j| = d[k,j] * |cell k|
    layer by layer.
    """

    d_plus: np.ndarray
    d_minus: np.ndarray

    def __post_init__(self):
        self.d_plus.setflags(write=False)
        self.d_minus.setflags(write=False)

    @property
    def d_signed(self) -> np.ndarray:
        return self.d_plus - self.d_minus


def _indicator(p: Partition) -> np.ndarray:
    mat = np.zeros((p.n, p.m), dtype=np.int64)
    mat[np.arange(p.n), p.cell_of] = 1
    return mat


def is_equitable(g: SignedGraph, p: Partition):
    """Check equitability for both edge layers at once.

    Returns (True, profile) or (False, None).
    """
    if p.n != g.n:
        raise ValueError("partition size does not match the graph")
    ind = _indicator(p)
    counts_pos = g.pos @ ind
    counts_neg = g.neg @ ind
    d_plus = np.zeros((p.m, p.m), dtype=np.int64)
    d_minus = np.zeros((p.m, p.m), dtype=np.int64)
    for j, cell in enumerate(p.cells):
        rows_pos = counts_pos[list(cell)]
        rows_neg = counts_neg[list(cell)]
        if np.any(rows_pos != rows_pos[0]) or np.any(rows_neg != rows_neg[0]):
            return False, None
        d_plus[j] = rows_pos[0]
        d_minus[j] = rows_neg[0]
    return True, EquitableProfile(d_plus, d_minus)


def normalized_partition_matrix(p: Partition) -> np.ndarray:
    """Column-orthonormal indicator: column k is 1/sqrt(|cell k|) on cell k."""
    return _indicator(p) / np.sqrt(p.sizes())


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    """Weighted quotient matrix with its partition and exact cell degrees.

    ``matrix`` holds the floating-point quotient entries; the integer
    profile is kept alongside so every entry can be reproduced exactly
    as sign(d[j,k]) * sqrt(|d[j,k] d[k,j]|).
    """

    matrix: np.ndarray
    partition: Partition
    profile: EquitableProfile

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self.matrix


def quotient(g: SignedGraph, p: Partition) -> QuotientGraph:
    """Quotient of a signed graph over an equitable partition.

    The conjugated matrix Q^T A Q is verified against the closed-form
    entry rule to 1e-12 before being returned.
    """
    ok, profile = is_equitable(g, p)
    if not ok:
        raise ValueError("partition is not equitable")
    q = normalized_partition_matrix(p)
    conjugated = q.T @ g.adjacency @ q
    ds = profile.d_signed
    closed = np.sign(ds) * np.sqrt(np.abs(ds * ds.T).astype(float))
    if np.abs(conjugated - closed).max() > 1e-12:
        raise RuntimeError("quotient entry rule mismatch beyond 1e-12")
    return QuotientGraph(closed, p, profile)


def coarsest_equitable(g: SignedGraph, seed: Optional[Partition] = None) -> Partition:
    """Coarsest equitable partition refining ``seed`` (default: one cell).

    Cells are split by their (positive, negative) neighbour-count
    signatures against the current cells; new cell indices follow the
    order in which each signature first appears along the vertex list,
    so the refinement is deterministic.
    """
    part = seed if seed is not None else single_cell_partition(g.n)
    if part.n != g.n:
        raise ValueError("seed partition size does not match the graph")
    while True:
        ind = _indicator(part)
        counts_pos = g.pos @ ind
        counts_neg = g.neg @ ind
        first_seen: dict = {}
        new_cell_of = np.zeros(g.n, dtype=np.int64)
        for v in range(g.n):
            sig = (
                int(part.cell_of[v]),
                tuple(int(x) for x in counts_pos[v]),
                tuple(int(x) for x in counts_neg[v]),
            )
            if sig not in first_seen:
                first_seen[sig] = len(first_seen)
            new_cell_of[v] = first_seen[sig]
        refined = partition_from_cell_of(new_cell_of)
        if refined.m == part.m:
            return refined
        part = refined


@dataclass(frozen=True)
class TransferCheck:
    """Full-graph versus quotient amplitude between singleton cells."""

    full: WalkAmplitude
    reduced: WalkAmplitude
    agree: bool


def quotient_transfer_check(g: SignedGraph, p: Partition, a: int, b: int,
                            t: float, tol: float = 1e-10) -> TransferCheck:
    """Compare the walk on the graph with the walk on its quotient.

    The start and target vertices must form singleton cells; then the
    two amplitudes agree exactly and the check simply confirms the
    numerics to ``tol``.
    """
    ca, cb = int(p.cell_of[a]), int(p.cell_of[b])
    if len(p.cells[ca]) != 1 or len(p.cells[cb]) != 1:
        raise ValueError("transfer endpoints must be singleton cells")
    full = amplitude(g, a, b, t)
    reduced = amplitude(quotient(g, p), ca, cb, t)
    agree = abs(full.value - reduced.value) <= tol
    return TransferCheck(full, reduced, agree)
