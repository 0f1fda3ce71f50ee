"""
=========================================
Hexagonal tori and their Petrie switches
=========================================

A k x k honeycomb on the torus is bipartite.  Reversing the rotation at
every black vertex turns each face into a zig-zag walk of the original
map; the result has 3k faces of length 2k and a much higher genus.
"""

# %%

from polyembed import (enumerate_polyhedral, genus, hex_torus, hex_torus_classes, is_polyhedral,
                       max_genus_bound, petrie_switch, trace_faces)

for k in (3, 4, 5, 6):
    r = hex_torus(k)
    black, _ = hex_torus_classes(k)
    s = petrie_switch(r, black)
    fs = trace_faces(s)
    print(f"k={k}: n={r.n}, torus faces={len(trace_faces(r))}, "
          f"switched faces={len(fs)} of length {set(fs.lengths())}, genus {genus(s)}, "
          f"polyhedral {is_polyhedral(s)}, bound {max_genus_bound(r.n)}")

# %%
# For k = 4 these two are the only polyhedral embeddings
# ------------------------------------------------------

embeddings, summary = enumerate_polyhedral(hex_torus(4).graph)
print(summary.per_genus)
