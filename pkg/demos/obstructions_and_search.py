"""
=====================================
Why a rotation system is not polyhedral
=====================================

An embedding fails to be polyhedral when a face walk meets a vertex twice
or two faces share three or more vertices.  Such a witness, an
obstruction, tells the search which vertices must change.
"""

# %%
# K4 with every rotation ascending
# -------------------------------

from polyembed import RotationSystem, dual_is_simple, find_obstruction, named_graph, trace_faces

k4 = named_graph("k4")
r = RotationSystem.from_rotations(k4, [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)])
fs = trace_faces(r)
print(fs.lengths(), "genus", fs.genus)
print(find_obstruction(r))
print("dual simple:", dual_is_simple(r))

# %%
# The tetrahedron
# ---------------

t = RotationSystem.from_rotations(k4, [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])
print(trace_faces(t).lengths(), find_obstruction(t))

# %%
# Against brute force
# -------------------
#
# On every 12-vertex cubic graph the search and the exhaustive scan over
# all 2^11 rotation systems agree.  Only 14 of the 85 graphs embed at all.

from polyembed import brute_force_polyhedral, enumerate_polyhedral, gen_cubic, mirror

agree = embeddable = 0
for g in gen_cubic(12):
    found = {min(x.mask, mirror(x).mask) for x in enumerate_polyhedral(g)[0]}
    brute = {min(x.mask, mirror(x).mask) for x in brute_force_polyhedral(g)}
    agree += found == brute
    embeddable += bool(found)
print(agree, embeddable)
