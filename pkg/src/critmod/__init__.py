"""Critical modules of multigraphs: orientations, divisors, Tutte polynomials and GF(2) algebra."""

from .errors import CritModError
from .multigraph import Multigraph, parse_graph, read_graph
from .tutte import tutte_polynomial

__version__ = "0.1.0"

__all__ = ["CritModError", "Multigraph", "parse_graph", "read_graph", "tutte_polynomial",
           "__version__"]
