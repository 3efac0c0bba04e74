"""Graphs: model, constructors, random regular sampling, independence number."""

from qnl.graphs.compare import AlphaComparison, AlphaValue, compare_alpha
from qnl.graphs.constructors import (
    NESTED_CLIQUE_9,
    SIGMA_RULES,
    NestedCliqueSpec,
    affine_sigma,
    canonical_pairs,
    circulant,
    clique,
    k2k3,
    nested_clique,
    nested_clique_9,
    nested_clique_order,
    two_circulant,
)
from qnl.graphs.mis import IndependentSet, SearchTimeoutError, alpha_asymptotic, independence_number
from qnl.graphs.models import Graph, GraphError
from qnl.graphs.random_regular import SamplingError, random_regular

__all__ = [
    "AlphaComparison",
    "AlphaValue",
    "Graph",
    "GraphError",
    "IndependentSet",
    "NESTED_CLIQUE_9",
    "NestedCliqueSpec",
    "SIGMA_RULES",
    "SamplingError",
    "SearchTimeoutError",
    "affine_sigma",
    "alpha_asymptotic",
    "canonical_pairs",
    "circulant",
    "clique",
    "compare_alpha",
    "independence_number",
    "k2k3",
    "nested_clique",
    "nested_clique_9",
    "nested_clique_order",
    "random_regular",
    "two_circulant",
]
