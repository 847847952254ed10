#!/usr/bin/env python3
"""Complete positivity, rank-one structure, and zero-diagonal normalization.

A symmetric tropical matrix is completely positive exactly when twice each
entry dominates the sum of its diagonal entries.  Subtracting half of each
diagonal entry from its row and column produces a zero-diagonal matrix
with the same CP-rank, and the record of shifts inverts the transform.
"""

from tropcp import (
    SymTropMatrix,
    cp_rank_is_one,
    extract_rank_one_factor,
    is_completely_positive,
    normalize,
    pattern_graph,
    rank_one_product,
    support,
)

A = SymTropMatrix.from_rows([[0, 1, 2], [1, 2, 3], [2, 3, 4]])
print("A:")
for row in A.rows():
    print("  ", " ".join(str(e) for e in row))
print("completely positive:", is_completely_positive(A))
print("CP-rank one:", cp_rank_is_one(A))

b = extract_rank_one_factor(A)
print("recovered factor:", b)
print("reconstructs A exactly:", rank_one_product(b) == A)

C, record = normalize(A)
print("normalized form is the zero matrix:", C == SymTropMatrix.zeros(3))
print("shifts:", {i + 1: str(s) for i, s in record.shifts})
print("record restores A:", record.restore_matrix(C) == A)

print()
B = SymTropMatrix.from_rows([[0, 1, 1], [1, 1, 1], [1, 1, 1]])
print("B differs from A only in its nonzero entries, but its rank is 2:")
CB, _ = normalize(B)
print("normalized B:")
for row in CB.rows():
    print("  ", " ".join(str(e) for e in row))
print("rank one?", cp_rank_is_one(B))
print("zero pattern of normalized B:", sorted(pattern_graph(CB).edges))
print("support matrix (0 where zero, 1 elsewhere):")
for row in support(CB).rows():
    print("  ", " ".join(str(e) for e in row))

print()
bad = SymTropMatrix.from_rows([[0, -1], [-1, 0]])
print("a negative off-diagonal under a zero diagonal is not CP:",
      not is_completely_positive(bad))
