#!/usr/bin/env python3
"""Tour of exact min-plus arithmetic: scalars, vectors, rank-one matrices.

In the min-plus semiring, "addition" takes the minimum of two values and
"multiplication" adds them; infinity is the additive identity.  Everything
below is exact rational arithmetic, so 1/2 is really one half.
"""

from fractions import Fraction

from tropcp import (
    INF,
    SymTropMatrix,
    TropVector,
    rank_one_product,
    trop_add,
    trop_matrix_sum,
    trop_mul,
)

print("== scalars ==")
print("1 (+) 2        =", trop_add(1, 2), "   (minimum)")
print("inf (+) 3      =", trop_add(INF, 3), "   (infinity is the identity)")
print("1 (*) 2        =", trop_mul(1, 2), "   (rational addition)")
print("inf (*) 0      =", trop_mul(INF, 0), " (infinity absorbs)")
print("-1/2 (*) 1/2   =", trop_mul(Fraction(-1, 2), Fraction(1, 2)))

print()
print("== a rank-one matrix ==")
b = TropVector([0, 1, 2])
M = rank_one_product(b)
print("b =", b)
print("b (x) b^T:")
for row in M.rows():
    print("  ", " ".join(str(e) for e in row))

print()
print("== tropical matrix sums are entrywise minima ==")
half = Fraction(1, 2)
m1 = rank_one_product(TropVector([0, half, half]))
m2 = rank_one_product(TropVector([INF, 0, 0]))
total = trop_matrix_sum([m1, m2])
print("min of the two outer products:")
for row in total.rows():
    print("  ", " ".join(str(e) for e in row))

print()
print("adding the all-infinity matrix changes nothing:")
same = trop_matrix_sum([total, SymTropMatrix.filled(3, INF)])
print("  unchanged:", same == total)
