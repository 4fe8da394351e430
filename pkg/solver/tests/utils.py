from pathlib import Path

import networkx as nx

from solver.exact import ExactConfig
from solver.generators import from_networkx

FIXTURES = Path(__file__).resolve().parent / 'fixtures'


def atlas_instances(max_n, connected=True, min_n=1):
    """Every graph of the networkx atlas with ``min_n`` to ``max_n`` vertices, as instances."""
    instances = []
    for index, graph in enumerate(nx.graph_atlas_g()):
        n = graph.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        if connected and not nx.is_connected(graph):
            continue
        instances.append(from_networkx(graph, f'atlas-{index}'))
    return instances


def fast_config(**overrides):
    """Small local-search budgets so exhaustive sweeps stay quick."""
    values = {'batch_size': 4, 'ub_max_batches': 2, 'component_batches': 1, 'lb_max_samples': 4}
    values.update(overrides)
    return ExactConfig.from_settings(**values)


def fixture_bytes(name):
    return (FIXTURES / name).read_bytes()
