"""
A census of small fuzzy topologies
==================================

Every fuzzy topology on two points with values in {0, 1/2, 1} is enumerated
and classified.  A fuzzy topology is induced exactly when it is laminated and
weakly induced; the census checks that on every instance.
"""
from fuzzytop import enumerate_fuzzy_topologies, enumerate_topologies, run_equivalence_census

# %%
# Labeled topologies on up to four points.
for n in range(1, 5):
    print(n, len(enumerate_topologies(n)))

# %%
# Fuzzy topologies on the 2-point carrier over the 3-element grid.
print(len(enumerate_fuzzy_topologies(2, 2)))

# %%
# Signatures and one smallest example for each.
report = run_equivalence_census(2, 2)
for signature, count in report.to_dict()["counts"].items():
    print(f"{count:3d}  {signature}")
assert not report.violations
