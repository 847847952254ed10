"""Exact CP-rank of small tropical matrices by complete search.

Deciding whether a normalized CP matrix is a tropical sum of r rank-one
outer products reduces to a finite search: every finite entry must be
attained exactly by at least one summand, so each entry can be assigned a
designated "achiever" factor.  Given an assignment, a factor only needs
finite coordinates where its assigned entries touch it (infinity elsewhere
relaxes everything), and its coordinate values form a small exact rational
feasibility problem:

    b_i + b_j  = a_ij   for each assigned entry,
    b_s + b_t >= a_st   for every finite entry inside the support,
    b_t       >= 0      (diagonal domination; the diagonal is zero),
    b_z        = 0      on the factor's designated zero set,

solved by substitution along equality components followed by
Fourier-Motzkin elimination.  Diagonal entries are assigned first as a
"zero-set skeleton": a partition of the vertices into cliques of the
pattern graph, one part per factor that holds zeros.  Branch and bound
over skeletons and entry assignments is complete, so a fully exhausted
search is a proof of CP-rank > r; resource-guard interruptions are
reported as undetermined, never as refutation.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .analysis import (
    is_completely_positive,
    normalize,
    lift_decomposition,
    require_normalized,
)
from .core import (
    INF,
    Decomposition,
    SymTropMatrix,
    TropScalar,
    TropVector,
)
from .graphs import (
    _cliques_containing,
    edge_clique_cover_number,
    min_clique_cover_size,
    pattern_graph,
)

FOUND = "found"
REFUTED = "refuted"
UNDETERMINED = "undetermined"

DEFAULT_NODE_LIMIT = 10_000_000
DEFAULT_TIMEOUT_S = 300.0


# ---------------------------------------------------------------------------
# Per-factor feasibility
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorConstraintSystem:
    """Exact rational constraints on one factor's finite coordinates.

    Pairs may repeat a coordinate: (t, t, c) encodes 2*b_t >= c (or = c).
    Coordinates outside `support` are infinite and unconstrained.
    """

    n: int
    support: frozenset[int]
    zeros: frozenset[int]
    equalities: tuple[tuple[int, int, Fraction], ...]
    inequalities: tuple[tuple[int, int, Fraction], ...]


class _Infeasible(Exception):
    pass


class _SignedUnionFind:
    """Tracks b_v = sign * x_root + offset relations induced by equalities."""

    def __init__(self, variables: Sequence[int]):
        self.parent = {v: v for v in variables}
        self.sign = {v: 1 for v in variables}
        self.offset = {v: Fraction(0) for v in variables}
        self.pin: dict[int, Fraction] = {}

    def find(self, v: int) -> tuple[int, int, Fraction]:
        if self.parent[v] == v:
            return v, self.sign[v], self.offset[v]
        root, s, o = self.find(self.parent[v])
        s_total = self.sign[v] * s
        o_total = self.sign[v] * o + self.offset[v]
        self.parent[v], self.sign[v], self.offset[v] = root, s_total, o_total
        return root, s_total, o_total

    def pin_root(self, root: int, value: Fraction) -> None:
        if root in self.pin:
            if self.pin[root] != value:
                raise _Infeasible
        else:
            self.pin[root] = value

    def add_equality(self, i: int, j: int, c: Fraction) -> None:
        ri, si, oi = self.find(i)
        rj, sj, oj = self.find(j)
        if ri == rj:
            coeff = si + sj
            if coeff == 0:
                if oi + oj != c:
                    raise _Infeasible
            else:
                self.pin_root(ri, (c - oi - oj) / coeff)
            return
        # express x_rj through x_ri and attach
        self.parent[rj] = ri
        self.sign[rj] = -si * sj
        self.offset[rj] = sj * (c - oi - oj)
        if rj in self.pin:
            pinned = self.pin.pop(rj)
            # pinned = sign[rj] * x_ri + offset[rj]
            self.pin_root(ri, (pinned - self.offset[rj]) * self.sign[rj])

    def value_expr(self, v: int) -> tuple[Optional[int], int, Fraction]:
        """(free_root or None, sign, offset); root None means b_v is pinned."""
        root, s, o = self.find(v)
        if root in self.pin:
            return None, 0, s * self.pin[root] + o
        return root, s, o


def _fm_solve(
    constraints: list[tuple[dict[int, Fraction], Fraction]],
    roots: list[int],
) -> Optional[dict[int, Fraction]]:
    """Feasibility + witness for linear constraints sum(coef*x) >= rhs.

    Eliminates roots in order by Fourier-Motzkin, then back-substitutes,
    taking each variable at its lowest feasible value for determinism.
    Returns None when infeasible.
    """
    layers: list[tuple[int, list[tuple[dict[int, Fraction], Fraction]]]] = []
    current = constraints
    for x in roots:
        with_x = [c for c in current if c[0].get(x)]
        rest = [c for c in current if not c[0].get(x)]
        layers.append((x, with_x))
        lowers = [c for c in with_x if c[0][x] > 0]
        uppers = [c for c in with_x if c[0][x] < 0]
        for cl in lowers:
            for cu in uppers:
                a = cl[0][x]
                b = -cu[0][x]
                coeffs: dict[int, Fraction] = {}
                for k, v in cl[0].items():
                    coeffs[k] = coeffs.get(k, Fraction(0)) + b * v
                for k, v in cu[0].items():
                    coeffs[k] = coeffs.get(k, Fraction(0)) + a * v
                coeffs = {k: v for k, v in coeffs.items() if k != x and v != 0}
                rest.append((coeffs, b * cl[1] + a * cu[1]))
        current = rest
    for coeffs, rhs in current:
        if not coeffs and rhs > 0:
            return None
    values: dict[int, Fraction] = {}
    for x, with_x in reversed(layers):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, rhs in with_x:
            cx = coeffs[x]
            rest_val = rhs
            for k, v in coeffs.items():
                if k != x:
                    rest_val -= v * values[k]
            bound = rest_val / cx
            if cx > 0:
                if lo is None or bound > lo:
                    lo = bound
            else:
                if hi is None or bound < hi:
                    hi = bound
        if lo is not None:
            values[x] = lo
        elif hi is not None:
            values[x] = hi if hi < 0 else Fraction(0)
        else:
            values[x] = Fraction(0)
    return values


def solve_factor_system(system: FactorConstraintSystem) -> Optional[TropVector]:
    """An exact solution of the factor system, or None when refuted.

    The witness extends to infinity outside the support and is deterministic
    (each eliminated variable takes its smallest feasible value).
    """
    variables = sorted(system.support)
    uf = _SignedUnionFind(variables)
    try:
        for z in system.zeros:
            root, s, o = uf.find(z)
            uf.pin_root(root, (Fraction(0) - o) * s)
        for i, j, c in system.equalities:
            uf.add_equality(i, j, c)
    except _Infeasible:
        return None

    constraints: list[tuple[dict[int, Fraction], Fraction]] = []
    free_roots: set[int] = set()
    for i, j, rhs in system.inequalities:
        coeffs: dict[int, Fraction] = {}
        const = Fraction(0)
        for t in (i, j):
            root, s, o = uf.value_expr(t)
            const += o
            if root is not None:
                coeffs[root] = coeffs.get(root, Fraction(0)) + s
                free_roots.add(root)
        coeffs = {k: v for k, v in coeffs.items() if v != 0}
        if not coeffs:
            if const < rhs:
                return None
        else:
            constraints.append((coeffs, rhs - const))

    # equality-pinned components might violate inequalities only through the
    # constraints above; also collect any remaining free roots so they get
    # values during back-substitution
    for v in variables:
        root, _, _ = uf.value_expr(v)
        if root is not None:
            free_roots.add(root)

    values = _fm_solve(constraints, sorted(free_roots))
    if values is None:
        return None

    entries: list[TropScalar] = [INF] * system.n
    assignment: dict[int, Fraction] = {}
    for v in variables:
        root, s, o = uf.value_expr(v)
        assignment[v] = o if root is None else s * values[root] + o
        entries[v] = TropScalar(assignment[v])

    # exact safety recheck of the raw system
    for z in system.zeros:
        if assignment[z] != 0:
            return None
    for i, j, c in system.equalities:
        if assignment[i] + assignment[j] != c:
            return None
    for i, j, c in system.inequalities:
        if assignment[i] + assignment[j] < c:
            return None
    return TropVector(entries)


# ---------------------------------------------------------------------------
# Search bookkeeping
# ---------------------------------------------------------------------------

@dataclass
class SearchStats:
    nodes: int = 0
    skeletons: int = 0
    refuted_branches: int = 0
    wall_time: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.skeletons += other.skeletons
        self.refuted_branches += other.refuted_branches
        self.wall_time = max(self.wall_time, other.wall_time)


@dataclass(frozen=True)
class CoverAssignment:
    """Designated achiever factor per finite entry of the target matrix."""

    entries: tuple[tuple[tuple[int, int], int], ...]


@dataclass
class RankSearchOutcome:
    """Result of one cp_rank_leq(A, r) decision."""

    status: str  # found / refuted / undetermined
    r: int
    decomposition: Optional[Decomposition]
    assignment: Optional[CoverAssignment]
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED


@dataclass
class RankCertificate:
    """Outcome of an exact rank computation.

    Either an exact rank with a verified decomposition and the list of
    completely refuted smaller values, or a marker that the matrix is not
    CP, or an honest "undetermined" report when a resource guard or the
    r cap interrupted the sweep.
    """

    status: str  # exact / not_cp / undetermined
    rank: Optional[int]
    decomposition: Optional[Decomposition]
    refuted: tuple[int, ...]
    undetermined_at: Optional[int]
    stats: SearchStats


class _Guard(Exception):
    pass


class _Budget:
    def __init__(self, node_limit: int, timeout_s: float):
        self.node_limit = node_limit
        self.deadline = time.monotonic() + timeout_s
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _Guard
        if self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _Guard


def _finite_offdiag_requirements(A: SymTropMatrix) -> list[tuple[int, int, Fraction]]:
    reqs = [
        (v.finite, i, j)
        for i, j, v in A.upper_entries()
        if i != j and not v.is_inf
    ]
    reqs.sort()
    return [(i, j, val) for val, i, j in reqs]


def _clique_partitions(
    masks: list[int], n: int, max_parts: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of {0..n-1} into at most max_parts cliques, canonically."""
    parts: list[tuple[int, ...]] = []

    def rec(uncovered: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if uncovered == 0:
            yield tuple(parts)
            return
        if len(parts) >= max_parts:
            return
        v = (uncovered & -uncovered).bit_length() - 1
        for clique in _cliques_containing(v, uncovered, masks):
            mask = 0
            for u in clique:
                mask |= 1 << u
            parts.append(clique)
            yield from rec(uncovered & ~mask)
            parts.pop()

    yield from rec((1 << n) - 1)


class _FactorBuild:
    """Mutable factor state during the assignment search."""

    __slots__ = ("zeros", "support", "equalities")

    def __init__(self, zeros: frozenset[int]):
        self.zeros = zeros
        self.support: set[int] = set(zeros)
        self.equalities: list[tuple[int, int, Fraction]] = []

    def touched(self) -> bool:
        return bool(self.support) or bool(self.equalities)


def _factor_system(A: SymTropMatrix, f: _FactorBuild) -> Optional[FactorConstraintSystem]:
    """Build the factor's full system; None when the support holds an inf entry."""
    support = sorted(f.support)
    inequalities: list[tuple[int, int, Fraction]] = []
    for a_idx, s in enumerate(support):
        for t in support[a_idx:]:
            v = A[s, t]
            if v.is_inf:
                return None
            inequalities.append((s, t, v.finite))
    return FactorConstraintSystem(
        n=A.n,
        support=frozenset(support),
        zeros=f.zeros,
        equalities=tuple(f.equalities),
        inequalities=tuple(inequalities),
    )


def _search_skeleton(
    A: SymTropMatrix,
    r: int,
    parts: Sequence[tuple[int, ...]],
    reqs: Sequence[tuple[int, int, Fraction]],
    budget: _Budget,
    stats: SearchStats,
) -> Optional[tuple[list[TropVector], list[int]]]:
    """DFS over requirement assignments for one zero-set skeleton.

    Returns (factors, achiever-per-requirement) or None when this skeleton
    is exhausted.  Raises _Guard on budget exhaustion.
    """
    factors = [_FactorBuild(frozenset(p)) for p in parts]
    factors += [_FactorBuild(frozenset()) for _ in range(r - len(parts))]
    n_fixed = len(parts)
    achiever: list[int] = []

    def feasible(f: _FactorBuild) -> bool:
        system = _factor_system(A, f)
        return system is not None and solve_factor_system(system) is not None

    def rec(depth: int) -> Optional[list[TropVector]]:
        if depth == len(reqs):
            out: list[TropVector] = []
            for f in factors:
                if not f.touched():
                    continue
                system = _factor_system(A, f)
                assert system is not None
                witness = solve_factor_system(system)
                if witness is None:
                    return None
                out.append(witness)
            return out
        i, j, value = reqs[depth]
        touched_spares = sum(
            1 for f in factors[n_fixed:] if f.touched()
        )
        limit = min(r, n_fixed + touched_spares + 1)
        for f_idx in range(limit):
            f = factors[f_idx]
            budget.tick()
            added = [t for t in (i, j) if t not in f.support]
            f.support.update(added)
            f.equalities.append((i, j, value))
            if feasible(f):
                result = rec(depth + 1)
                if result is not None:
                    achiever.append(f_idx)
                    f.equalities.pop()
                    for t in added:
                        f.support.discard(t)
                    return result
            else:
                stats.refuted_branches += 1
            f.equalities.pop()
            for t in added:
                f.support.discard(t)
        return None

    solution = rec(0)
    if solution is None:
        return None
    achiever.reverse()
    return solution, achiever


def cp_rank_leq(
    A: SymTropMatrix,
    r: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    timeout_s: float = DEFAULT_TIMEOUT_S,
    threads: int = 1,
) -> RankSearchOutcome:
    """Decide whether a normalized CP matrix has CP-rank at most r.

    Returns a verified decomposition on success (padding factors that stay
    all-infinite are dropped), a complete refutation after exhausting every
    zero-set skeleton and assignment, or an undetermined report when the
    node limit or timeout was hit first.
    """
    require_normalized(A)
    if r < 1:
        raise ValueError("r must be >= 1")
    if threads > 1:
        return _cp_rank_leq_parallel(A, r, node_limit, timeout_s, threads)
    G = pattern_graph(A)
    masks = G.adjacency_masks()
    reqs = _finite_offdiag_requirements(A)
    budget = _Budget(node_limit, timeout_s)
    stats = SearchStats()
    start = time.monotonic()
    try:
        for parts in _clique_partitions(masks, A.n, r):
            stats.skeletons += 1
            found = _search_skeleton(A, r, parts, reqs, budget, stats)
            if found is not None:
                vectors, achiever = found
                dec = Decomposition(A, vectors)
                assignment = CoverAssignment(
                    tuple(
                        (((i, j)), f_idx)
                        for (i, j, _), f_idx in zip(reqs, achiever)
                    )
                )
                stats.nodes = budget.nodes
                stats.wall_time = time.monotonic() - start
                return RankSearchOutcome(FOUND, r, dec, assignment, stats)
    except _Guard:
        stats.nodes = budget.nodes
        stats.wall_time = time.monotonic() - start
        return RankSearchOutcome(UNDETERMINED, r, None, None, stats)
    stats.nodes = budget.nodes
    stats.wall_time = time.monotonic() - start
    return RankSearchOutcome(REFUTED, r, None, None, stats)


def _skeleton_worker(args) -> tuple[int, str, Optional[list[list[str]]], SearchStats]:
    rows, r, parts, node_limit, timeout_s, index = args
    A = SymTropMatrix.from_rows(rows)
    reqs = _finite_offdiag_requirements(A)
    budget = _Budget(node_limit, timeout_s)
    stats = SearchStats(skeletons=1)
    start = time.monotonic()
    try:
        found = _search_skeleton(A, r, parts, reqs, budget, stats)
    except _Guard:
        stats.nodes = budget.nodes
        stats.wall_time = time.monotonic() - start
        return index, UNDETERMINED, None, stats
    stats.nodes = budget.nodes
    stats.wall_time = time.monotonic() - start
    if found is None:
        return index, REFUTED, None, stats
    vectors, _ = found
    serial = [[str(e) for e in vec] for vec in vectors]
    return index, FOUND, serial, stats


def _cp_rank_leq_parallel(
    A: SymTropMatrix, r: int, node_limit: int, timeout_s: float, threads: int
) -> RankSearchOutcome:
    import multiprocessing

    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return cp_rank_leq(A, r, node_limit, timeout_s, threads=1)

    G = pattern_graph(A)
    masks = G.adjacency_masks()
    skeletons = list(_clique_partitions(masks, A.n, r))
    if len(skeletons) <= 1:
        return cp_rank_leq(A, r, node_limit, timeout_s, threads=1)
    rows = [[str(e) for e in row] for row in A.rows()]
    per_branch_nodes = max(1, node_limit // max(1, len(skeletons)))
    jobs = [
        (rows, r, parts, per_branch_nodes, timeout_s, idx)
        for idx, parts in enumerate(skeletons)
    ]
    stats = SearchStats()
    start = time.monotonic()
    results: dict[int, tuple[str, Optional[list[list[str]]]]] = {}
    with ctx.Pool(processes=threads) as pool:
        for index, status, serial, branch_stats in pool.imap_unordered(
            _skeleton_worker, jobs
        ):
            stats.merge(branch_stats)
            results[index] = (status, serial)
    stats.wall_time = time.monotonic() - start
    # Deterministic reduction: the canonically first successful skeleton wins.
    for idx in sorted(results):
        status, serial = results[idx]
        if status == FOUND:
            factors = [TropVector(entries) for entries in serial]
            dec = Decomposition(A, factors)
            return RankSearchOutcome(FOUND, r, dec, None, stats)
    if any(status == UNDETERMINED for status, _ in results.values()):
        return RankSearchOutcome(UNDETERMINED, r, None, None, stats)
    return RankSearchOutcome(REFUTED, r, None, None, stats)


# ---------------------------------------------------------------------------
# Bounds and the exact rank sweep
# ---------------------------------------------------------------------------

def rank_lower_bound(A: SymTropMatrix) -> int:
    """Sound combinatorial lower bound for a normalized CP matrix.

    The max of the edge clique cover number of the pattern graph (the
    support's CP-rank) and the minimum cardinality of a vertex clique
    cover: every factor's zero coordinates form a clique, and every vertex
    needs a zero somewhere.
    """
    require_normalized(A)
    G = pattern_graph(A)
    cc, _ = edge_clique_cover_number(G)
    return max(cc, min_clique_cover_size(G), 1)


def default_rank_cap(n: int) -> int:
    """max(n, floor(n^2/4)): the known tight upper bound for tropical CP-rank."""
    return max(n, (n * n) // 4)


def cp_rank_exact(
    A: SymTropMatrix,
    r_max: Optional[int] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
    timeout_s: float = DEFAULT_TIMEOUT_S,
    threads: int = 1,
) -> tuple[Optional[int | float], RankCertificate]:
    """Smallest r admitting a verified r-factor decomposition.

    Normalization is applied internally (it preserves CP-rank) and the
    certificate is lifted back to the input matrix.  Returns (inf, cert)
    for a non-CP input.  When the sweep is interrupted by a resource guard
    or exceeds r_max, the result is an explicit undetermined report with
    the range already refuted; it is never a guess.
    """
    stats = SearchStats()
    if all(v.is_inf for _, _, v in A.upper_entries()):
        dec = Decomposition(A, [])
        cert = RankCertificate("exact", 0, dec, (), None, stats)
        return 0, cert
    if not is_completely_positive(A):
        cert = RankCertificate("not_cp", None, None, (), None, stats)
        return float("inf"), cert
    C, record = normalize(A)
    if r_max is None:
        r_max = default_rank_cap(C.n)
    refuted: list[int] = []
    r = rank_lower_bound(C)
    while r <= r_max:
        outcome = cp_rank_leq(
            C, r, node_limit=node_limit, timeout_s=timeout_s, threads=threads
        )
        stats.merge(outcome.stats)
        if outcome.found:
            lifted = lift_decomposition(outcome.decomposition, record)
            if lifted.target != A:
                raise AssertionError("lifted certificate does not match the input")
            cert = RankCertificate("exact", r, lifted, tuple(refuted), None, stats)
            return r, cert
        if outcome.refuted:
            refuted.append(r)
            r += 1
            continue
        cert = RankCertificate(
            "undetermined", None, None, tuple(refuted), r, stats
        )
        return None, cert
    cert = RankCertificate(
        "undetermined", None, None, tuple(refuted), r_max + 1, stats
    )
    return None, cert


def zero_one_rank(A: SymTropMatrix) -> int:
    """Exact CP-rank of a normalized 0/1 matrix, combinatorially.

    Equals the edge clique cover number of the pattern graph plus one
    factor per isolated vertex (an isolated vertex's diagonal zero cannot
    share a factor with any other zero).  For the empty pattern this is n.
    """
    require_normalized(A)
    zero, one = TropScalar(0), TropScalar(1)
    for i, j, v in A.upper_entries():
        if i != j and v != zero and v != one:
            raise ValueError(f"entry ({i + 1},{j + 1}) = {v} is not 0 or 1")
    G = pattern_graph(A)
    cc, _ = edge_clique_cover_number(G)
    isolated = sum(1 for v in range(G.n) if not G.neighbors(v))
    return cc + isolated


def threads_from_env(default: int = 1) -> int:
    """Default worker count for searches, from TROPCP_THREADS."""
    raw = os.environ.get("TROPCP_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default
