"""Signless-Laplacian spectral radius: numerical enclosures, exact family
spectra, classical bounds and certified comparisons."""

from stlab.spectral.bounds import (
    BoundChain,
    DegenerateGraphError,
    edge_degree_bound,
    f_chain,
    f_quadratic,
    merris_bound,
    s_chain,
    size_order_bound,
)
from stlab.spectral.compare import Certificate, Order, Undecided, certified_compare, compare_root_to_rational, compare_roots
from stlab.spectral.poly import RootInterval, charpoly, largest_root
from stlab.spectral.power import ConvergenceError, SpectralEnclosure, perron_vector, q_matrix, q_max
from stlab.spectral.quotient import ExactSpectrum, NotEquitableError, QuotientMatrix, family_quotient, q_exact

lemma_bound_chain = s_chain

__all__ = [
    "BoundChain",
    "Certificate",
    "ConvergenceError",
    "DegenerateGraphError",
    "ExactSpectrum",
    "NotEquitableError",
    "Order",
    "QuotientMatrix",
    "RootInterval",
    "SpectralEnclosure",
    "Undecided",
    "certified_compare",
    "charpoly",
    "compare_root_to_rational",
    "compare_roots",
    "edge_degree_bound",
    "f_chain",
    "f_quadratic",
    "family_quotient",
    "largest_root",
    "lemma_bound_chain",
    "merris_bound",
    "perron_vector",
    "q_exact",
    "q_matrix",
    "q_max",
    "s_chain",
    "size_order_bound",
]
