"""Build complexes, move between facets and minimal non-faces, take duals.

A complex lives on a fixed labelled vertex universe.  You can hand it the
generating faces, or the minimal non-faces, and convert freely: the facets of
the Alexander dual are the complements of the minimal non-faces.
"""

import shellcert as sc

u = sc.VertexSet.of(range(1, 7))

# generated complex: non-maximal candidates are absorbed
c = sc.from_facets(u, [{1, 2, 3}, {3, 4, 5}, {4, 5, 6}, {4, 5}])
print("facets:           ", c.facet_members())
print("dimension:        ", c.dim, " pure:", c.is_pure)

# the same complex described by what is forbidden
nf = sc.minimal_nonfaces(c)
print("minimal non-faces:", [u.members(m) for m in nf])
again = sc.from_minimal_nonfaces(u, [u.members(m) for m in nf])
print("round trip works: ", again == c)

# Alexander duality is an involution
d = sc.alexander_dual(c)
print("dual facets:      ", d.facet_members())
print("dual of dual:     ", sc.alexander_dual(d) == c)

# links and skeleta
print("link of vertex 3: ", sc.link(c, {3}).facet_members())
print("pure 1-skeleton:  ", sc.pure_skeleton(c, 1).facet_members())

# flag means: every minimal non-face is a pair
pentagon = sc.from_minimal_nonfaces(
    sc.VertexSet.of(range(5)), [{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}])
print("pentagon is flag: ", sc.is_flag(pentagon))
print("c is flag:        ", sc.is_flag(c))

# degenerate corners are distinct values, and duality still behaves
void = sc.from_facets(u, [])
full = sc.from_facets(u, [set(range(1, 7))])
print("dual of full simplex is void:", sc.alexander_dual(full).is_void)
print("dual of void is full simplex:", sc.alexander_dual(void) == full)
