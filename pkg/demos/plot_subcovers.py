"""
Finite subcovers of fuzzy covers
================================

On a finite carrier every weak level set is compact, so any fuzzy open cover
of a fuzzy set admits a finite subfamily that covers it up to any positive
slack.  The extraction below returns the indices of such a subfamily.
"""
from fractions import Fraction

from fuzzytop import CoverInstance, FuzzySet, Topology, extract_subcover

tau = Topology(3, frozenset({0, 0b100, 0b110, 0b111}))
target = FuzzySet([Fraction(1, 2), Fraction(3, 4), 1])

# %%
# A redundant cover made of open (lower semicontinuous) fuzzy sets.
family = [
    FuzzySet([0, 0, 1]),
    FuzzySet([0, Fraction(3, 4), 1]),
    FuzzySet([Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)]),
    FuzzySet([Fraction(1, 2), 1, 1]),
]
cover = CoverInstance(target, family, Fraction(1, 8), tau)
cert = extract_subcover(cover)
print("kept:", cert.indices)

# %%
# The subfamily still covers the target up to the slack.
for x in range(3):
    best = max(family[i][x] for i in cert.indices)
    assert best >= target[x] - cover.epsilon
    print(x, target[x], best)
