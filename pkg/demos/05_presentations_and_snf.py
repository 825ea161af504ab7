"""Presentations, abelianization by Smith normal form, and Witt ranks.

The DSL accepts catalog names and raw presentations with commutator
brackets.  Abelianization is the cokernel of the relator exponent
matrix, diagonalized exactly over the integers.
"""

from nilrep import (abelianize, free_nilpotent_lcs_ranks, lower_central_data,
                    parse_group_spec, quotient_by_lcs, smith_normal_form)

print("Abelianizations through the parser:")
for text in ("H3", "F(3,2)", "Z^2 x Z/6", "<x,y | [x,y]>",
             "<x | x^3>", "<x,y | x^2y^-2, [x,[x,y]]>"):
    print("  %-28s -> %s" % (text, abelianize(parse_group_spec(text))))
print()

print("A Smith normal form with its transforms (U * M * V = D):")
m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
d, u, v = smith_normal_form(m)
for label, mat in (("M", m), ("D", d), ("U", u), ("V", v)):
    print("  %s = %s" % (label, mat))
print()

print("Lower-central layers of free nilpotent groups (Witt ranks):")
for n in (2, 3):
    print("  %d generators, classes 1..6: %s"
          % (n, free_nilpotent_lcs_ranks(n, 6)))
print()

g = parse_group_spec("F(2,4)")
print("Lower-central data of %s: layer ranks %s" % (
    g, [a.rank for a in lower_central_data(g).per_layer]))
print("Quotients of %s by successive lower-central terms:" % g)
for i in (2, 3, 4, 5):
    print("  step %d -> %s" % (i, quotient_by_lcs(g, i)))
print()
print("Abelianization never changes along those quotients:",
      all(abelianize(quotient_by_lcs(g, i)) == abelianize(g)
          for i in (2, 3, 4, 5)))
