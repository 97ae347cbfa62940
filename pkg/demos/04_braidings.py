"""Enumerate braidings per cohomology class and cross-check the oracle."""

from grcat import (CocycleParams, Group, braiding_exists,
                   brute_force_braidings, enumerate_braidings, eval_R,
                   verify_hexagons)

z3 = Group((3,))
ok, reason = braiding_exists(CocycleParams(z3, (1,), (), ()))
print("Z_3, a=1:", reason)

z2 = Group((2,))
a = CocycleParams(z2, (1,), (), ())
found = enumerate_braidings(a)
print("Z_2, a=1:", [str(R.r[0][0]) for R in found])  # the two square roots of -1

four = Group((2, 2))
trivial = CocycleParams(four, (0, 0), (0,), ())
braidings = enumerate_braidings(trivial)
print(f"Z_2 x Z_2, a=0: {len(braidings)} braidings")
for R in braidings:
    assert verify_hexagons(trivial, R) is None

R = braidings[-1]  # all entries -1: the full symmetric nontrivial case
both = four.element((1, 1))
print("R((1,1),(1,1)) =", eval_R(R, both, both))

# independent confirmation: exhaust the candidate grid
oracle = brute_force_braidings(trivial)
print("oracle agrees:", set(oracle) == set(braidings))
