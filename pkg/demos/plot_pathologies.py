"""
Fuzzy topologies that are not induced
=====================================

Restricting the admissible values, or the admissible level sets, gives
fuzzy topologies whose level topology is ordinary while the fuzzy structure
is not.  Two such constructions are shown here.
"""
from fractions import Fraction

from fuzzytop import SupClosedSubgrid, Topology, chi_star, classify, iota, omega
from fuzzytop.gallery import IntervalFamily, omega_J

tau = Topology.sierpinski()

# %%
# Allowing only the values {0, 1/4, 1} keeps every level set open but drops
# most constants.
levels = SupClosedSubgrid.of([0, Fraction(1, 4), 1], 4)
small = omega(tau, 4, levels)
report = classify(small)
print("weakly induced:", report.is_weakly_induced, "laminated:", report.is_laminated)

# %%
# Allowing only lower semicontinuous functions with values in [0, 1/2] (plus
# the constant 1) keeps the level topology but no characteristic function of
# a proper open survives.
interval = omega_J(tau, IntervalFamily.of((0, Fraction(1, 2))), 2)
print("level topology:", iota(interval))
print("indicator topology:", chi_star(interval))
