"""Graph families for tests and benchmark corpora, as PACE instances."""
import random

import networkx as nx

from solver.pace_io import Instance


def from_networkx(graph, source_name=''):
    """Relabel nodes to 1..n in sorted order and build an Instance."""
    nodes = sorted(graph.nodes)
    label = {v: i for i, v in enumerate(nodes, start=1)}
    edges = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in graph.edges))
    return Instance(n=len(nodes), edges=edges, source_name=source_name)


def to_networkx(instance):
    graph = nx.Graph()
    graph.add_nodes_from(range(1, instance.n + 1))
    graph.add_edges_from(instance.edges)
    return graph


def path(n):
    return from_networkx(nx.path_graph(n), f'path-{n}')


def cycle(n):
    return from_networkx(nx.cycle_graph(n), f'cycle-{n}')


def complete(n):
    return from_networkx(nx.complete_graph(n), f'complete-{n}')


def complete_bipartite(a, b):
    return from_networkx(nx.complete_bipartite_graph(a, b), f'complete-bipartite-{a}-{b}')


def star(leaves):
    return from_networkx(nx.star_graph(leaves), f'star-{leaves}')


def gnp(n, p, seed):
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed), f'gnp-{n}-{p}-{seed}')


def disjoint_union(*instances):
    graph = nx.disjoint_union_all([to_networkx(inst) for inst in instances])
    return from_networkx(graph, '+'.join(inst.source_name for inst in instances))


def _cograph(n, rng):
    if n == 1:
        graph = nx.Graph()
        graph.add_node(0)
        return graph
    split = rng.randint(1, n - 1)
    left, right = _cograph(split, rng), _cograph(n - split, rng)
    graph = nx.disjoint_union(left, right)
    if rng.random() < 0.5:
        # series composition joins every left vertex to every right vertex
        graph.add_edges_from((u, split + v) for u in left.nodes for v in right.nodes)
    return graph


def random_cograph(n, seed):
    """Random cograph built by series and parallel composition."""
    return from_networkx(_cograph(n, random.Random(seed)), f'cograph-{n}-{seed}')


def petersen():
    return from_networkx(nx.petersen_graph(), 'petersen')
