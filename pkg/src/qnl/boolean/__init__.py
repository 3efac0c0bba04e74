"""Boolean functions: truth tables, spectra, autocorrelations, APC/EPC, PAR."""

from qnl.boolean.autocorrelation import (
    aperiodic_autocorrelation,
    fixed_aperiodic_autocorrelation,
    fixed_extended_autocorrelation,
    modified_autocorrelation,
    periodic_autocorrelation,
)
from qnl.boolean.distance import (
    DistancePair,
    apc_distance,
    epc_distance,
    graph_apc_distance,
    graph_epc_distance,
)
from qnl.boolean.models import GaussianInt, Mask, MaskError, NotQuadraticError
from qnl.boolean.spectra import (
    ih_spectra,
    ih_spectrum,
    ihn_rows,
    ihn_spectrum,
    par_bound,
    par_ih,
    par_ihn,
    power_spectrum_from_v,
    wht,
    wht_rows,
)
from qnl.boolean.truth_table import TruthTable, from_graph, quadratic_graph

__all__ = [
    "DistancePair",
    "GaussianInt",
    "Mask",
    "MaskError",
    "NotQuadraticError",
    "TruthTable",
    "aperiodic_autocorrelation",
    "apc_distance",
    "epc_distance",
    "fixed_aperiodic_autocorrelation",
    "fixed_extended_autocorrelation",
    "from_graph",
    "graph_apc_distance",
    "graph_epc_distance",
    "ih_spectra",
    "ih_spectrum",
    "ihn_rows",
    "ihn_spectrum",
    "modified_autocorrelation",
    "par_bound",
    "par_ih",
    "par_ihn",
    "periodic_autocorrelation",
    "power_spectrum_from_v",
    "quadratic_graph",
    "wht",
    "wht_rows",
]
