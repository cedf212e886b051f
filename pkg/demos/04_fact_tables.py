"""The four-condition fact table and its inference rules.

Three catalog complexes realize three distinct truth patterns, which shows
every one-way implication in the square is strict.  Golodness is never
computed algebraically: it is either inferred from a true premise or marked
out of scope (for flag complexes all four conditions coincide, so there the
whole row is settled by whichever leg is cheapest).
"""

import shellcert as sc
from shellcert import catalog

for name in ("strong-gcd-witness", "dunce-hat-dual", "gcd-violator"):
    c = catalog.FIXTURES[name]()
    table = sc.build_fact_table(c)
    print("== %s" % name)
    print(table.as_text())
    if name in catalog.CLAIMS:
        print("catalog claim:", catalog.CLAIMS[name])
    print()

# a flag complex: one decided leg settles all four slots
flag = sc.random_flag_complex(12, 6, 0.55)
table = sc.build_fact_table(flag)
print("== random flag complex on 6 vertices")
print(table.as_text())
