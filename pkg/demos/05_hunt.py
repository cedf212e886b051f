"""Desk-scale run of the counterexample hunt.

Wanted: a sequentially Cohen-Macaulay complex with no weak shelling order.
Any complex with at least 2*dim + 3 vertices is weakly shellable for free,
and shellable complexes with small facets are too, so the pipeline first
discards everything trivial, then searches the survivors.  Nobody has found
a hit; the interesting output is where the candidates die.
"""

import shellcert as sc
from shellcert.hunt import hunt_counterexample, screen_candidate
from shellcert import catalog

report = hunt_counterexample(seed=2024, budget=400)
print(report.as_text())
print()

# the classical near-misses are filtered exactly as expected
for name in ("dunce-hat", "projective-plane"):
    c = catalog.FIXTURES[name]()
    print("%-18s -> %s" % (name, screen_candidate(c)))
