"""Bundled worked examples with independently known expected values.

These small matrices exercise every corner of the library: rank-one
recovery, half-integer normalization shifts, clique-cover bounds that beat
the generic dimension bound, an empty-pattern matrix whose CP-rank exceeds
its dimension, a star extension that preserves rank under vertex join, and
a bowtie witness separating CP-rank from the edge clique cover number.
"""

from __future__ import annotations

from .core import SymTropMatrix
from .graphs import PatternGraph


def rank_one_shifted_3x3() -> SymTropMatrix:
    """Outer product of [0, 1, 2]: CP-rank one, normalizes to the zero matrix."""
    return SymTropMatrix.from_rows([[0, 1, 2], [1, 2, 3], [2, 3, 4]])


def flat_3x3() -> SymTropMatrix:
    """All-ones with one zero corner: CP-rank two, half-integer shifts."""
    return SymTropMatrix.from_rows([[0, 1, 1], [1, 1, 1], [1, 1, 1]])


def flat_3x3_normalized() -> SymTropMatrix:
    return SymTropMatrix.from_rows(
        [
            [0, "1/2", "1/2"],
            ["1/2", 0, 0],
            ["1/2", 0, 0],
        ]
    )


def paw_graph() -> PatternGraph:
    """Triangle 0-1-2 with pendant vertex 3 attached to 2."""
    return PatternGraph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def paw_matrix(a="1", b="2") -> SymTropMatrix:
    """Paw-pattern matrix with free positive entries a, b; CP-rank two."""
    return SymTropMatrix.from_rows(
        [
            [0, 0, 0, a],
            [0, 0, 0, b],
            [0, 0, 0, 0],
            [a, b, 0, 0],
        ]
    )


def rank_six_5x5() -> SymTropMatrix:
    """Empty-pattern 5x5 whose CP-rank is 6, one more than its dimension."""
    return SymTropMatrix.from_rows(
        [
            [0, 1, 1, 3, 3],
            [1, 0, 3, 1, 1],
            [1, 3, 0, 1, 1],
            [3, 1, 1, 0, 3],
            [3, 1, 1, 3, 0],
        ]
    )


def star6_matrix() -> SymTropMatrix:
    """rank_six_5x5 extended by one all-zero-coupled vertex (star pattern).

    Joining a vertex adjacent to everything preserves CP-rank, so this 6x6
    matrix keeps rank 6 while its star pattern has edge clique cover number 5.
    """
    B = rank_six_5x5()

    def entry(i: int, j: int):
        if i == 5 or j == 5:
            return 0
        return B[i, j]

    return SymTropMatrix.from_upper_func(6, entry)


def bowtie_graph() -> PatternGraph:
    """Two triangles sharing vertex 0."""
    return PatternGraph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def bowtie_witness_5x5() -> SymTropMatrix:
    """Bowtie-pattern witness whose CP-rank strictly exceeds cc = 2."""
    return SymTropMatrix.from_rows(
        [
            [0, 0, 0, 0, 0],
            [0, 0, 0, 1, 2],
            [0, 0, 0, 2, 2],
            [0, 1, 2, 0, 0],
            [0, 2, 2, 0, 0],
        ]
    )


def p3_matrix(a="1") -> SymTropMatrix:
    """Canonical path-pattern 3x3: edges {0,2} and {1,2}, free entry a > 0 at {0,1}.

    Every normalized CP matrix with a path pattern on three vertices has
    this form up to relabeling; its CP-rank is two.
    """
    return SymTropMatrix.from_rows(
        [
            [0, a, 0],
            [a, 0, 0],
            [0, 0, 0],
        ]
    )
