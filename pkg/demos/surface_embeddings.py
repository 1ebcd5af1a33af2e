"""Rotation systems, face tracing and cutting a surface along an induced subgraph.

Run with ``python3 demos/surface_embeddings.py``.
"""

from robustconn.embedding import (
    augment_with_component_vertices,
    cut_components,
    edge_maximal_completion,
    euler_genus,
    format_embedding,
    is_edge_maximal_embedding,
    m_value,
    trace_faces,
)
from robustconn.generators import (
    cycle_graph,
    k4_planar,
    k5_minus_e_projective,
    k7_torus,
    planar_embedding,
    torus_diamond,
)

# %% K4 on the sphere: four triangles, and any facial triangle cuts the sphere in two.
k4 = k4_planar().embedding
print("K4 faces:", [trace_faces(k4).walk(i) for i in range(4)], "genus", euler_genus(k4))
print("cut along triangle 0,1,2:", cut_components(k4, {0, 1, 2}), "pieces")
print("m(K4) =", m_value(k4))

# %% K7 triangulates the torus; any four vertices separate it.
k7 = k7_torus().embedding
print("K7 torus genus:", euler_genus(k7), "faces:", len(trace_faces(k7)), "m =", m_value(k7))

# %% A nonorientable example: K5 minus an edge in the projective plane.
pp = k5_minus_e_projective().embedding
print("K5-e: genus", euler_genus(pp), "orientable", pp.is_orientable(), "edge-maximal", is_edge_maximal_embedding(pp))
print(format_embedding(pp))

# %% On the torus, cutting along one triangle leaves the surface connected; cutting along another separates it.
td = torus_diamond().embedding
print("torus diamond: cut {4,0,3} ->", cut_components(td, {4, 0, 3}), "; cut {0,1,3} ->", cut_components(td, {0, 1, 3}))

# %% Completing a cycle to an edge-maximal embedding, then adding a vertex per face.
c5 = edge_maximal_completion(planar_embedding(cycle_graph(5)))
print("C5 completed:", c5.base.m, "edges")
aug, original = augment_with_component_vertices(k4)
print("K4 augmented:", aug.n, "vertices,", aug.base.m, "edges; original vertices", sorted(original))
