"""
=============
Star products
=============

Cut a vertex out of each of two cubic graphs and join the three loose
edges across.  Polyhedral embeddings of the factors combine into
polyhedral embeddings of the product, with genera adding, and the counts
multiply.
"""

# %%

from polyembed import SearchConfig, StarSpec, enumerate_polyhedral, named_graph, star_product


def counts(g):
    return enumerate_polyhedral(g, SearchConfig(count_only=True))[1].per_genus


h = named_graph("heawood")
k4 = named_graph("k4")
print("H", counts(h), "K4", counts(k4))

# %%
# A planar factor leaves the counts alone:

print("H*K4", counts(star_product(StarSpec(h, 0, k4, 0))))

# %%
# Two Heawood factors give 8 * 8 embeddings, all in genus 2, on 26 vertices:

hh = star_product(StarSpec(h, 0, h, 0))
print(hh.n, counts(hh))

# %%
# Embedded products
# -----------------
#
# The embedded version glues two given rotation systems.

from polyembed import genus, is_polyhedral, star_product_embedded

a = enumerate_polyhedral(h)[0][0]
p = star_product_embedded(a, 0, a, 0)
print(genus(p), is_polyhedral(p))
