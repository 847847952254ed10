"""Constructive rank-one decompositions from a vertex clique cover.

Given a normalized CP matrix and a clique cover of its pattern graph, the
factors split into four blocks after relabeling the vertices so cliques
occupy consecutive positions:

  1. one all-zero-on-its-clique indicator per clique (intra-clique entries),
  2. per ordered clique pair (i < j) and vertex of clique j, a vector that
     copies that vertex's column over clique i (inter-clique entries),
  3. per clique and singleton, a vector copying the singleton's column over
     the clique (clique-to-singleton entries and singleton diagonals),
  4. a tail covering entries between singletons.

The tail has closed forms for two or three singletons (when a clique of
size >= 2 exists to supply singleton diagonals, and the involved entries
are finite); otherwise a per-pair construction plus a greedy merge pass is
always sound, and an optional exact-search pass restores the floor(l^2/4)
factor count when the merge alone does not reach it.  Counts are whatever
was actually achieved and the result is verified exactly on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .analysis import require_normalized
from .core import (
    INF,
    Decomposition,
    SymTropMatrix,
    TropScalar,
    TropVector,
)
from .graphs import CliqueCover, min_cover_bound, pattern_graph

TAIL_EMPTY = "empty"
TAIL_CLOSED = "closed-form"
TAIL_PAIRS = "pairs"
TAIL_SEARCH = "search"


@dataclass(frozen=True)
class BlockPlan:
    """Relabeling bookkeeping for the block construction.

    ``perm[new] = original``: cliques of size >= 2 occupy consecutive new
    positions (sizes descending), singletons come last.  ``counts`` are the
    per-block factor budgets (k, sum_i (i-1) q_i, k*l, floor(l^2/4)).
    """

    cover: CliqueCover
    perm: tuple[int, ...]
    sizes: tuple[int, ...]
    singleton_count: int

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return len(self.perm)

    def clique_span(self, i: int) -> range:
        start = sum(self.sizes[:i])
        return range(start, start + self.sizes[i])

    @property
    def singleton_positions(self) -> range:
        start = sum(self.sizes)
        return range(start, start + self.singleton_count)

    @property
    def counts(self) -> tuple[int, int, int, int]:
        l = self.singleton_count
        return (
            self.k,
            sum(i * q for i, q in enumerate(self.sizes)),
            self.k * l,
            (l * l) // 4,
        )


def reduce_to_partition(cover: CliqueCover, n: int) -> CliqueCover:
    """Keep each vertex only in its canonically first clique.

    Shrinking a cover this way never increases its rank bound, and the
    block construction needs disjoint cliques.
    """
    seen: set[int] = set()
    parts = []
    for clique in cover.cliques:
        kept = tuple(v for v in clique if v not in seen)
        seen.update(kept)
        if kept:
            parts.append(kept)
    if seen != set(range(n)):
        missing = sorted(set(range(n)) - seen)
        raise ValueError(f"cover misses vertices {missing}")
    return CliqueCover(parts)


def make_block_plan(A: SymTropMatrix, cover: CliqueCover) -> BlockPlan:
    G = pattern_graph(A)
    if not cover.covers(G):
        raise ValueError("not a valid vertex clique cover of the pattern graph")
    partition = reduce_to_partition(cover, A.n)
    cliques = [c for c in partition.cliques if len(c) >= 2]
    singles = [c[0] for c in partition.cliques if len(c) == 1]
    perm = tuple(v for c in cliques for v in c) + tuple(singles)
    return BlockPlan(
        cover=partition,
        perm=perm,
        sizes=tuple(len(c) for c in cliques),
        singleton_count=len(singles),
    )


def _permute_matrix(A: SymTropMatrix, perm: Sequence[int]) -> SymTropMatrix:
    return SymTropMatrix.from_upper_func(
        A.n, lambda i, j: A[perm[i], perm[j]]
    )


def _unpermute_vector(v: Sequence[TropScalar], perm: Sequence[int]) -> TropVector:
    entries: list[TropScalar] = [INF] * len(perm)
    for new_pos, orig in enumerate(perm):
        entries[orig] = v[new_pos]
    return TropVector(entries)


def clique_block(B: SymTropMatrix, plan: BlockPlan) -> list[list[TropScalar]]:
    """One indicator vector per clique: zero on the clique, infinite elsewhere."""
    out = []
    for i in range(plan.k):
        vec: list[TropScalar] = [INF] * plan.n
        for t in plan.clique_span(i):
            vec[t] = TropScalar(0)
        out.append(vec)
    return out


def cross_block(B: SymTropMatrix, plan: BlockPlan) -> list[list[TropScalar]]:
    """Vectors matching B between distinct cliques.

    For cliques i < j and each position p of clique j: zero at p, the
    column entries B[t, p] over clique i, infinite elsewhere.
    """
    out = []
    for i in range(plan.k - 1):
        for j in range(i + 1, plan.k):
            for p in plan.clique_span(j):
                vec: list[TropScalar] = [INF] * plan.n
                vec[p] = TropScalar(0)
                for t in plan.clique_span(i):
                    vec[t] = B[t, p]
                out.append(vec)
    return out


def singleton_link_block(B: SymTropMatrix, plan: BlockPlan) -> list[list[TropScalar]]:
    """Vectors matching B between each clique and each singleton.

    Zero at the singleton (covering its diagonal), the singleton's column
    over the clique, infinite elsewhere.
    """
    out = []
    for i in range(plan.k):
        for p in plan.singleton_positions:
            vec: list[TropScalar] = [INF] * plan.n
            vec[p] = TropScalar(0)
            for t in plan.clique_span(i):
                vec[t] = B[t, p]
            out.append(vec)
    return out


def _dominates(B: SymTropMatrix, vec: Sequence[TropScalar]) -> bool:
    """No undercut: vec's outer product is >= B wherever vec is finite."""
    finite = [t for t, e in enumerate(vec) if not e.is_inf]
    for a in range(len(finite)):
        for b in range(a, len(finite)):
            s, t = finite[a], finite[b]
            target = B[s, t]
            if target.is_inf:
                return False
            if vec[s].finite + vec[t].finite < target.finite:
                return False
    return True


def _merge_pass(
    B: SymTropMatrix, vectors: list[list[TropScalar]]
) -> list[list[TropScalar]]:
    """Greedily fuse vector pairs while the fused vector still dominates B.

    Entrywise minimum keeps every entry the originals attained (it can only
    attain more), so domination is the only condition to recheck.
    """
    vecs = [list(v) for v in vectors]
    changed = True
    while changed:
        changed = False
        for a in range(len(vecs)):
            for b in range(a + 1, len(vecs)):
                merged = [x + y for x, y in zip(vecs[a], vecs[b])]
                if _dominates(B, merged):
                    vecs[a] = merged
                    del vecs[b]
                    changed = True
                    break
            if changed:
                break
    return vecs


def singleton_tail_block(
    B: SymTropMatrix,
    plan: BlockPlan,
    G_empty: bool,
    search_nodes: int,
) -> tuple[list[list[TropScalar]], str]:
    """Factors covering entries between singleton positions (block 4)."""
    singles = list(plan.singleton_positions)
    l = len(singles)
    k = plan.k
    zero = TropScalar(0)

    finite_pairs = [
        (p, q)
        for a, p in enumerate(singles)
        for q in singles[a + 1 :]
        if not B[p, q].is_inf
    ]
    need_diagonals = k == 0

    if not finite_pairs and not need_diagonals:
        return [], TAIL_EMPTY

    if k >= 1 and l == 2 and len(finite_pairs) == 1:
        p, q = finite_pairs[0]
        vec: list[TropScalar] = [INF] * plan.n
        vec[p] = zero
        vec[q] = B[p, q]
        return [vec], TAIL_CLOSED

    if k >= 1 and l == 3 and len(finite_pairs) == 3:
        # roles: w free, (u, v) the maximal pair; ties pick the
        # lexicographically last position pair
        best = max(finite_pairs, key=lambda pq: (B[pq[0], pq[1]].finite, pq))
        u, v = best
        (w,) = [s for s in singles if s not in best]
        a_vec: list[TropScalar] = [INF] * plan.n
        a_vec[w] = zero
        a_vec[u] = B[w, u]
        b_vec: list[TropScalar] = [INF] * plan.n
        b_vec[w] = B[w, v]
        b_vec[u] = B[u, v]
        b_vec[v] = zero
        return [a_vec, b_vec], TAIL_CLOSED

    # Per-pair fallback, always sound.
    vectors: list[list[TropScalar]] = []
    for p, q in finite_pairs:
        vec = [INF] * plan.n
        vec[p] = zero
        vec[q] = B[p, q]
        vectors.append(vec)
    if need_diagonals:
        for s in singles:
            if not any(v[s] == zero for v in vectors):
                vec = [INF] * plan.n
                vec[s] = zero
                vectors.append(vec)
    vectors = _merge_pass(B, vectors)
    mode = TAIL_PAIRS

    if G_empty and plan.n <= 4:
        target = plan.n
    else:
        target = (l * l) // 4
    if len(vectors) > target and l >= 2:
        found = _tail_exact_search(B, singles, target, search_nodes)
        if found is not None:
            vectors = found
            mode = TAIL_SEARCH
    return vectors, mode


def _tail_exact_search(
    B: SymTropMatrix, singles: list[int], target: int, search_nodes: int
) -> Optional[list[list[TropScalar]]]:
    """Decompose the singleton principal submatrix with at most `target` factors.

    Uses the exact rank search with a node budget; on success the factors
    are embedded back with infinity outside the singleton positions.
    """
    from .rank import cp_rank_leq

    sub = SymTropMatrix.from_upper_func(
        len(singles), lambda i, j: B[singles[i], singles[j]]
    )
    outcome = cp_rank_leq(sub, target, node_limit=search_nodes, timeout_s=60.0)
    if not outcome.found:
        return None
    embedded = []
    for factor in outcome.decomposition.factors:
        vec: list[TropScalar] = [INF] * B.n
        for pos, s in enumerate(singles):
            vec[s] = factor[pos]
        embedded.append(vec)
    return embedded


def construct_decomposition(
    A: SymTropMatrix,
    cover: CliqueCover,
    tail_search_nodes: int = 200_000,
) -> Decomposition:
    """Build and verify the clique-cover decomposition of a normalized CP matrix."""
    dec, _ = construct_decomposition_detailed(A, cover, tail_search_nodes)
    return dec


def construct_decomposition_detailed(
    A: SymTropMatrix,
    cover: CliqueCover,
    tail_search_nodes: int = 200_000,
) -> tuple[Decomposition, tuple[BlockPlan, tuple[int, int, int, int], str]]:
    """As construct_decomposition, also reporting the plan, block counts, and tail mode."""
    require_normalized(A)
    plan = make_block_plan(A, cover)
    B = _permute_matrix(A, plan.perm)
    G_empty = not pattern_graph(A).edges
    b1 = clique_block(B, plan)
    b2 = cross_block(B, plan)
    b3 = singleton_link_block(B, plan)
    b4, tail_mode = singleton_tail_block(B, plan, G_empty, tail_search_nodes)
    factors = [
        _unpermute_vector(v, plan.perm) for v in (*b1, *b2, *b3, *b4)
    ]
    dec = Decomposition(A, factors)
    achieved = (len(b1), len(b2), len(b3), len(b4))
    return dec, (plan, achieved, tail_mode)


def empty_pattern_01_decomposition(n: int) -> Decomposition:
    """The n-factor decomposition of the 0/1 matrix with zero diagonal.

    Factor i is zero at position i and one elsewhere; no decomposition with
    fewer factors exists for this matrix.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    zero, one = TropScalar(0), TropScalar(1)
    target = SymTropMatrix.from_upper_func(
        n, lambda i, j: zero if i == j else one
    )
    factors = [
        TropVector([zero if j == i else one for j in range(n)]) for i in range(n)
    ]
    return Decomposition(target, factors)


def decompose_cp(
    A: SymTropMatrix, cover: Optional[CliqueCover] = None
) -> Decomposition:
    """Convenience wrapper: normalize, decompose, and lift back to the input.

    Uses the cover minimizing the rank bound when none is given.  The input
    only needs to be CP, not normalized.
    """
    from .analysis import lift_decomposition, normalize

    C, record = normalize(A)
    if cover is None:
        cover, _ = min_cover_bound(pattern_graph(C))
    dec = construct_decomposition(C, cover)
    return lift_decomposition(dec, record)
