"""
From topologies to fuzzy topologies and back
============================================

A topology on a finite set can be turned into a fuzzy topology by taking
every lower semicontinuous function with values on a grid.  Going back is
done by collecting the strict level sets of the members.  This script walks
through both directions on the two-point Sierpinski space.
"""
from fractions import Fraction

from fuzzytop import Topology, chi, chi_star, classify, iota, omega

# %%
# The Sierpinski space has opens {}, {1} and {0, 1}.  Subsets are stored as
# bitmasks, so {1} is 0b10.
tau = Topology.sierpinski()
print(tau)

# %%
# On the grid {0, 1/2, 1} the induced fuzzy topology consists of every
# function f with f(0) <= f(1).
delta = omega(tau, 2)
for f in delta.members:
    print([str(v) for v in f])

# %%
# Collecting strict level sets gives the original topology back.
assert iota(delta) == tau

# %%
# The characteristic functions of the opens also form a fuzzy topology.  It
# has the same level topology, but it misses the constant 1/2, so it is not
# laminated.
crisp = chi(tau, 2)
report = classify(crisp)
print("laminated:", report.is_laminated, "witness:", report.witnesses["laminated"])
assert chi_star(crisp) == tau and report.witnesses["laminated"] == Fraction(1, 2)

# %%
# The induced one passes every test.
print(classify(delta).signature())
