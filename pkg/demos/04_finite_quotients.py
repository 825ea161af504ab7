"""Counting maps onto finite groups, and what they prove.

A nilpotent group that surjects onto a non-abelian finite subgroup of G
has disconnected representation and character varieties.  The engine is
a pruned depth-first enumeration of generator images; its counts are
cross-checkable by elementary means.
"""

from nilrep import (FreeAbelian, FreeNilpotent, Heisenberg,
                    central_image_order_bound, connectivity_verdict,
                    cyclic, dihedral, enumerate_homs, parse_reductive_spec,
                    q8)

Q = q8()
print("The quaternion group:", ", ".join(Q.labels))
print("i*j =", Q.labels[Q.mul(2, 4)], " but  j*i =", Q.labels[Q.mul(4, 2)])
print()

print("Counting homomorphisms into Q8:")
for group in (FreeAbelian(1), FreeAbelian(2), Heisenberg(),
              FreeNilpotent(2, 3)):
    result = enumerate_homs(group, Q)
    print("  %-8s total %4d  surjective %3d" %
          (group, result.total, result.surjective))
print()

result = enumerate_homs(Heisenberg(), Q)
names = result.presentation.generator_names()
print("First non-abelian witness from H3:",
      ", ".join("%s -> %s" % (names[k], Q.labels[v])
                for k, v in enumerate(result.witness)))
print()

print("Other finite targets work the same way:")
for target in (dihedral(4), cyclic(8)):
    result = enumerate_homs(FreeAbelian(2), target)
    print("  commuting pairs in %-4s: %d" % (target.name, result.total))
print()

print("Verdict ladder on a few pairs:")
for group, target in [(Heisenberg(), "SL2"), (Heisenberg(), "PGL2"),
                      (Heisenberg(), "T2"), (FreeNilpotent(2, 3), "Sp4"),
                      (FreeAbelian(3), "SL2")]:
    verdict = connectivity_verdict(group, parse_reductive_spec(target))
    print("  %-8s into %-5s: %-12s [%s]" %
          (group, target, verdict.status, verdict.reason_code))
print()

print("Uniform bound on the top lower-central image inside SU_m:")
for m in range(1, 7):
    print("  m = %d: order at most %d" % (m, central_image_order_bound(m)))
