"""Partitions of a matrix index set into classes labeled by graph vertices."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph


@dataclass(frozen=True)
class HPartition:
    """Assignment of matrix indices to vertices of a target graph.

    class_of[i] is the target vertex owning index i. Every index gets
    exactly one class by construction; classes may be empty.
    """

    source_size: int
    class_of: tuple = field(repr=False)
    target: Graph = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(self.class_of))
        if self.source_size < 1:
            raise ValueError("partition needs at least one index")
        if len(self.class_of) != self.source_size:
            raise ValueError(
                f"class_of has {len(self.class_of)} entries for "
                f"{self.source_size} indices"
            )
        for i, c in enumerate(self.class_of):
            if not 0 <= c < self.target.n:
                raise ValueError(f"index {i} mapped to invalid vertex {c}")

    def indices_of(self, vertex):
        return [i for i, c in enumerate(self.class_of) if c == vertex]

    def sizes(self):
        counts = [0] * self.target.n
        for c in self.class_of:
            counts[c] += 1
        return counts


def identity_partition(target):
    """One index per vertex, index i owned by vertex i."""
    return HPartition(target.n, tuple(range(target.n)), target)


def partition_from_sizes(target, sizes):
    """Contiguous blocks: sizes[v] indices assigned to vertex v."""
    if len(sizes) != target.n:
        raise ValueError(
            f"expected {target.n} block sizes, got {len(sizes)}"
        )
    class_of = []
    for v, s in enumerate(sizes):
        if s < 0:
            raise ValueError(f"block size for vertex {v} is negative")
        class_of.extend([v] * s)
    if not class_of:
        raise ValueError("all blocks are empty")
    return HPartition(len(class_of), tuple(class_of), target)
