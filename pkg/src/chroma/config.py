"""Default resource caps.

Every expensive routine takes an explicit cap/budget argument; these are the
defaults.  They bound memory (materialized bitmaps), CPU (brute-force scans),
and exact-solver size, so that desk-scale runs stay interactive and anything
larger fails loudly instead of hanging.
"""

from __future__ import annotations

# Largest group order for which an ElementSet bitmap may be materialized.
MATERIALIZE_CAP = 1 << 26

# Largest modulus accepted by the discrete Fourier transform helpers.
DFT_CAP = 1 << 20

# Largest vertex count accepted by the exact chromatic / independence solvers.
EXACT_SOLVER_CAP = 2000

# Largest vertex count for which Cayley adjacency rows are materialized.
ADJACENCY_CAP = 1 << 16

# Work budget (number of tuples) for brute-force solution scans.
BRUTE_TUPLE_CAP = 40_000_000

# Group order must fit the platform index type.
INDEX_TYPE_MAX = (1 << 63) - 1
