"""Spaces, their simplicial sets, and exact homology.

Every space is a finite ordered simplicial complex given by maximal
simplices.  Generating the simplicial set lists, per level, all monotone
vertex tuples spanning a simplex; the nondegenerate cells are the ordered
simplices themselves, and normalized chains recover textbook homology.
"""

from finsub import (builtin_space, from_ordered_complex, homology_of_sset,
                    load_complex, normalized_chains, euler_characteristic)

# a space can come from JSON text ...
circle = load_complex('{"name":"circle3","vertices":3,"simplices":[[0,1],[0,2],[1,2]]}')
print("parsed:", circle.name, "dimension", circle.dimension)

# ... or from the built-in catalog
for name in ["interval", "circle3", "sphere2", "torus", "rp2", "wedge_circles2"]:
    spec = builtin_space(name)
    sset = from_ordered_complex(spec, spec.dimension + 1)
    h = homology_of_sset(sset)
    chi = euler_characteristic(normalized_chains(sset))
    groups = ", ".join(f"H_{g.degree}={g}" for g in h.groups)
    print(f"{name:<16} cells/level {sset.counts}  chi={chi:+d}  {groups}")

# a closer look at the circle: 3 vertices, 3 edges, and at level 2 the
# nine monotone triples, all degenerate
sset = from_ordered_complex(circle, 2)
print("\ncells of the triangulated circle:")
sset.dump()
