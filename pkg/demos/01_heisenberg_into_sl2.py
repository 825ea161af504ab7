"""Walkthrough: representations of the Heisenberg group in SL2(C).

The discrete Heisenberg group H3 is the smallest non-abelian nilpotent
group.  Its representation variety in SL2(C) splits into several
components; everything about the component of the trivial representation
is determined by the abelianization H_1(H3) = Z^2.
"""

from nilrep import (Heisenberg, abelianize, analyze, connectivity_verdict,
                    parse_reductive_spec, q8)

group = Heisenberg()
target = parse_reductive_spec("SL2")

print("The group:", group)
print("Abelianization:", abelianize(group))
print()

report = analyze(group, target)
print(report.to_text())
print()

# The disconnection is witnessed by an explicit finite quotient: H3 maps
# onto the quaternion group inside SL2.
verdict = connectivity_verdict(group, target)
labels = q8().labels
print("Quaternion witness:",
      ", ".join("generator %d -> %s" % (k + 1, labels[v])
                for k, v in enumerate(verdict.witness)))
print()

# Contrast with a torus target, where everything is connected.
torus = parse_reductive_spec("T2")
print("Same group into T2:", connectivity_verdict(group, torus))
