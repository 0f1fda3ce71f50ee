"""
=====================================
The Heawood graph on the torus
=====================================

The Heawood graph has girth 6, so no short cycle ties vertices together
and every vertex starts in its own class.  The search still finds its
polyhedral embeddings quickly, and the canonical codes show they are all
the same map up to relabelling.
"""

# %%
# Enumerate
# ---------

from polyembed import enumerate_polyhedral, named_graph, write_rot
from polyembed.embedding import mirror
from polyembed.iso import canon_embedded, group_isomorphic

g = named_graph("heawood")
embeddings, summary = enumerate_polyhedral(g)
print(summary.per_genus)  # {1: 8}

# %%
# Count up to isomorphism
# -----------------------
#
# With mirror images identified all eight fall into one class.  Keeping the
# orientation splits them into a map and its mirror image: the embedding is
# chiral.

print(len(group_isomorphic(embeddings, include_mirror=True)))
both = embeddings + [mirror(r) for r in embeddings]
print(len({canon_embedded(r, include_mirror=False) for r in both}))

# %%
# One of them in the text format
# ------------------------------

print(write_rot(embeddings[0], "Heawood graph, torus"))
