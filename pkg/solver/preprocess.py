"""
Twin elimination, connected components, and reassembly of per-component answers.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx

from solver.exceptions import PartitionError
from solver.pace_io import ContractionSequence
from solver.trigraph import ContractionPair, first_free_pair, induced_subtrigraph

logger = logging.getLogger(__name__)


@dataclass
class Component:
    vertices: frozenset
    graph: object

    def __len__(self):
        return len(self.vertices)

    @property
    def label(self):
        return min(self.vertices)


@dataclass
class ComponentPlan:
    components: list = field(default_factory=list)
    prelude: ContractionSequence = field(default_factory=ContractionSequence)


def eliminate_twins(g):
    """Contract free pairs, first in canonical order, until none is left."""
    reduced = g.copy()
    prelude = []
    while len(reduced) > 1:
        pair = first_free_pair(reduced)
        if pair is None:
            break
        reduced.contract(pair.survivor, pair.removed)
        prelude.append(pair)
    logger.info('twin elimination: %d contractions, %d vertices left', len(prelude), len(reduced))
    return reduced, ContractionSequence(prelude)


def split_components(g, prelude=None):
    """Connected components over black and red edges, largest first, ties by smallest label."""
    parts = [frozenset(part) for part in nx.connected_components(g.to_networkx())]
    parts.sort(key=lambda part: (-len(part), min(part)))
    components = [Component(part, induced_subtrigraph(g, part)) for part in parts]
    return ComponentPlan(components=components, prelude=prelude or ContractionSequence())


def assemble_solution(prelude, per_component, survivors):
    """
    One sequence for the whole instance: prelude, every component's sequence,
    then the component representatives folded onto the smallest of them.
    """
    if len(per_component) != len(survivors):
        raise PartitionError(f'{len(per_component)} component sequences but {len(survivors)} survivors')
    removed = set()
    for seq, survivor in zip(per_component, survivors):
        gone = {pair.removed for pair in seq}
        if survivor in gone:
            raise PartitionError(f'survivor {survivor} is removed by its own component sequence')
        if seq and survivor not in {pair.survivor for pair in seq}:
            raise PartitionError(f'survivor {survivor} takes no part in its component sequence')
        removed |= gone
    stray = removed & set(survivors)
    if stray:
        raise PartitionError(f'survivors {sorted(stray)} are removed by another component')

    pairs = list(prelude)
    for seq in per_component:
        pairs.extend(seq)
    if survivors:
        root = min(survivors)
        pairs.extend(ContractionPair(root, s) for s in sorted(survivors) if s != root)
    return ContractionSequence(pairs)


def restrict_sequence(seq, keep):
    """
    Project a contraction sequence onto the induced subgraph on ``keep``.

    Each group tracks its representative inside ``keep``; a pair survives the
    projection only when both groups have one. The projected width never
    exceeds the original width.
    """
    keep = set(keep)
    rep = {}
    pairs = []
    for x, y in seq:
        rx = rep.get(x, x if x in keep else None)
        ry = rep.get(y, y if y in keep else None)
        if rx is not None and ry is not None:
            pairs.append(ContractionPair(rx, ry))
        rep[x] = rx if rx is not None else ry
        rep.pop(y, None)
    return ContractionSequence(pairs)
