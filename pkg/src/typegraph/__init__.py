"""Type graphs of edge-colored complete graphs over Z and Z_n.

Vertices are equivalence classes of multicolored K3 or K4 subgraphs of the
complete Cayley graph of a cyclic group; adjacency is sharing of colored
faces.  The package builds these graphs, their planar chart coverings with
symmetry-axis folding, and the circulant comparison family, and ships a CLI
with deterministic text outputs.
"""

__version__ = "0.1.0"
