"""Differentials on both resolutions and the comparison maps between them."""

from grcat import (Group, GroupRingElement, bar_differential, bar_generator,
                   chain_map, phi, single, tensor_differential,
                   verify_chain_map)

group = Group((4,))
g = group.generator(0)
one = GroupRingElement.unit(group.identity())

d = bar_differential(single(bar_generator([g, g ** 2]), one))
print("d[g|g^2] =", d)

dphi = tensor_differential(single(phi((2,)), one))
print("d Phi(2) =", dphi)  # norm coefficient, the even-exponent case

print("F1[g^2]        =", chain_map(group, bar_generator([g ** 2])))
print("F2[g^2|g^3]    =", chain_map(group, bar_generator([g ** 2, g ** 3])))
print("F3[g^2|g^3|g^3] =", chain_map(group, bar_generator([g ** 2, g ** 3, g ** 3])))

for orders in ((2,), (4,), (2, 2), (4, 3), (2, 2, 2)):
    result = verify_chain_map(Group(orders))
    status = "ok" if all(v is None for v in result.values()) else result
    print(f"chain map squares on {orders}: {status}")
