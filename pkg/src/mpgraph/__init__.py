"""mpgraph: exact Moore-Penrose pseudo-inversion and signability of graphs.

Core layers:

- :mod:`mpgraph.ratmath` exact rational matrices (rank, det, inverse, pinv)
- :mod:`mpgraph.spectral` floating symmetric eigensolver and spectral gap tools
- :mod:`mpgraph.signability` signature search and pseudo-inverse graphs
- :mod:`mpgraph.blockops` generalized Schur complements and block pseudo-inverses
- :mod:`mpgraph.constructions` pendant-vertex / pendant-path graph families
- :mod:`mpgraph.graphio` graph6 codec and exporters
- :mod:`mpgraph.census` classification census over graph6 streams
- :mod:`mpgraph.service` FastAPI app exposing everything over HTTP
- :mod:`mpgraph.cli` thin HTTP client for the service
"""

__version__ = "0.1.0"
