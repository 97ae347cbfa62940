"""Search every function R: G x G -> mu_N against the hexagon identities.

No product form is assumed; the search confirms that the generator-pair
values really determine a braiding.
"""

from grcat import (CocycleParams, Group, braiding_function_table,
                   brute_force_full_function_space, enumerate_braidings)

z2 = Group((2,))
g = z2.generator(0)
for v in (0, 1):
    a = CocycleParams(z2, (v,), (), ())
    sols = brute_force_full_function_space(a, 8, max_candidates=8 ** 4,
                                           prune_identity=False)
    product = [braiding_function_table(R) for R in enumerate_braidings(a)]
    print(f"Z_2, a={v}: {len(sols)} solutions among 4096 functions, "
          f"values at (g,g): {[str(t[(g, g)]) for t in sols]}, "
          f"all product-form: {all(t in product for t in sols)}")

z3 = Group((3,))
a = CocycleParams(z3, (0,), (), ())
sols = brute_force_full_function_space(a, 9, max_candidates=9 ** 4)
print(f"Z_3, a=0: {len(sols)} solutions over mu_9")
