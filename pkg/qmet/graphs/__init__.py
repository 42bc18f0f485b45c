from .digraph import (
    Digraph,
    GraphWeightReport,
    path_qmetric,
    strongly_connected_components,
    is_non_directed,
    ww_iff_undirected,
    all_digraphs,
    exhaustive_graph_check,
)

__all__ = [
    'Digraph',
    'GraphWeightReport',
    'path_qmetric',
    'strongly_connected_components',
    'is_non_directed',
    'ww_iff_undirected',
    'all_digraphs',
    'exhaustive_graph_check',
]
