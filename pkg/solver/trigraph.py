"""
Trigraphs and the contraction rule.

A trigraph carries black and red edges on a set of positive integer labels.
Contracting ``(survivor, removed)`` deletes ``removed``; the survivor keeps
its label, stays black-adjacent to the common black neighbors of both
vertices and becomes red-adjacent to every other former neighbor.
"""
import enum
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from solver.exceptions import InvalidContraction, InvalidTrigraph, PartitionError

logger = logging.getLogger(__name__)


class EdgeColor(enum.Enum):
    BLACK = 'black'
    RED = 'red'


@dataclass(frozen=True, order=True, slots=True)
class ContractionPair:
    survivor: int
    removed: int

    def __post_init__(self):
        if self.survivor == self.removed:
            raise InvalidContraction(f'cannot contract vertex {self.survivor} with itself')

    def __iter__(self):
        yield self.survivor
        yield self.removed

    @classmethod
    def canonical(cls, u, v):
        """Smaller label survives."""
        return cls(u, v) if u < v else cls(v, u)


class Trigraph:
    """
    Mutable trigraph over positive integer labels.

    Neighbor sets are exposed read-only through ``black_neighbors`` and
    ``red_neighbors``; the only mutation is ``contract``. A histogram of red
    degrees keeps ``max_red_degree`` current after every contraction.
    """

    __slots__ = ('_black', '_red', '_degree_counts', '_max_red')

    def __init__(self, vertices, black_edges=(), red_edges=()):
        vertices = list(vertices)
        if not vertices:
            raise InvalidTrigraph('a trigraph needs at least one vertex')
        self._black = {}
        self._red = {}
        for v in vertices:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidTrigraph(f'vertex labels must be positive integers, got {v!r}')
            if v in self._black:
                raise InvalidTrigraph(f'duplicate vertex {v}')
            self._black[v] = set()
            self._red[v] = set()
        for color, edges, table in ((EdgeColor.BLACK, black_edges, self._black),
                                    (EdgeColor.RED, red_edges, self._red)):
            for u, v in edges:
                if u == v:
                    raise InvalidTrigraph(f'self-loop at {u}')
                if u not in self._black or v not in self._black:
                    raise InvalidTrigraph(f'{color.value} edge {u}-{v} has an endpoint outside the vertex set')
                if v in self._black[u] or v in self._red[u]:
                    raise InvalidTrigraph(f'duplicate edge {u}-{v}')
                table[u].add(v)
                table[v].add(u)
        self._rebuild_degree_index()

    @classmethod
    def from_instance(cls, instance):
        return cls(range(1, instance.n + 1), black_edges=instance.edges)

    @classmethod
    def _from_tables(cls, black, red):
        g = cls.__new__(cls)
        g._black = black
        g._red = red
        g._rebuild_degree_index()
        return g

    def _rebuild_degree_index(self):
        self._degree_counts = Counter(len(reds) for reds in self._red.values())
        self._max_red = max((d for d, c in self._degree_counts.items() if c), default=0)

    # ---- queries ----

    def __len__(self):
        return len(self._black)

    def __contains__(self, v):
        return v in self._black

    def __eq__(self, other):
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self._black == other._black and self._red == other._red

    def __repr__(self):
        return f'<Trigraph n={len(self)} black={self.edge_count(EdgeColor.BLACK)} red={self.edge_count(EdgeColor.RED)}>'

    @property
    def live(self):
        return self._black.keys()

    def vertices(self):
        return sorted(self._black)

    def black_neighbors(self, v):
        return self._black[v]

    def red_neighbors(self, v):
        return self._red[v]

    def neighbors(self, v):
        return self._black[v] | self._red[v]

    def color(self, u, v):
        """Color of the pair ``{u, v}``, or None when they are not adjacent."""
        if v in self._black[u]:
            return EdgeColor.BLACK
        if v in self._red[u]:
            return EdgeColor.RED
        return None

    def red_degree(self, v):
        return len(self._red[v])

    @property
    def max_red_degree(self):
        return self._max_red

    def edges(self, color):
        table = self._black if color is EdgeColor.BLACK else self._red
        for u in sorted(table):
            for v in sorted(table[u]):
                if u < v:
                    yield u, v

    def edge_count(self, color):
        table = self._black if color is EdgeColor.BLACK else self._red
        return sum(len(nbrs) for nbrs in table.values()) // 2

    def has_red_edges(self):
        return any(self._red.values())

    def copy(self):
        g = Trigraph.__new__(Trigraph)
        g._black = {v: set(nbrs) for v, nbrs in self._black.items()}
        g._red = {v: set(nbrs) for v, nbrs in self._red.items()}
        g._degree_counts = Counter(self._degree_counts)
        g._max_red = self._max_red
        return g

    def to_networkx(self):
        """Undirected networkx view of black and red edges, colors kept as an edge attribute."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        for color in EdgeColor:
            graph.add_edges_from(self.edges(color), color=color.value)
        return graph

    # ---- contraction ----

    def _merged_neighborhoods(self, x, y):
        bx, by = self._black[x], self._black[y]
        merged_black = (bx & by) - {x, y}
        merged_red = (bx | by | self._red[x] | self._red[y]) - merged_black - {x, y}
        return merged_black, merged_red

    def _check_pair(self, x, y):
        if x == y:
            raise InvalidContraction(f'cannot contract vertex {x} with itself')
        for v in (x, y):
            if v not in self._black:
                raise InvalidContraction(f'vertex {v} is not live')

    def contract(self, survivor, removed):
        """Contract ``removed`` into ``survivor`` in place and return the new max red degree."""
        x, y = survivor, removed
        self._check_pair(x, y)
        merged_black, merged_red = self._merged_neighborhoods(x, y)
        touched = merged_black | merged_red
        old_degrees = {u: len(self._red[u]) for u in touched}

        for u in touched:
            for table in (self._black, self._red):
                table[u].discard(x)
                table[u].discard(y)
            if u in merged_black:
                self._black[u].add(x)
            else:
                self._red[u].add(x)

        counts = self._degree_counts
        counts[len(self._red[x])] -= 1
        counts[len(self._red[y])] -= 1
        for u, old in old_degrees.items():
            counts[old] -= 1
            counts[len(self._red[u])] += 1
        counts[len(merged_red)] += 1

        del self._black[y]
        del self._red[y]
        self._black[x] = merged_black
        self._red[x] = merged_red

        top = max(self._max_red + 1, len(merged_red))
        while top > 0 and counts[top] <= 0:
            top -= 1
        self._max_red = top
        return top

    def simulate_contract(self, survivor, removed):
        """
        Outcome of a contraction without applying it.

        Returns ``(new_max_red_degree, survivor_red_degree)``.
        """
        x, y = survivor, removed
        self._check_pair(x, y)
        merged_black, merged_red = self._merged_neighborhoods(x, y)
        delta = Counter()
        delta[len(self._red[x])] -= 1
        delta[len(self._red[y])] -= 1
        for u in merged_black | merged_red:
            reds = self._red[u]
            old = len(reds)
            new = old - (x in reds) - (y in reds) + (u in merged_red)
            if new != old:
                delta[old] -= 1
                delta[new] += 1
        delta[len(merged_red)] += 1

        top = max(self._max_red + 1, len(merged_red))
        while top > 0 and self._degree_counts[top] + delta[top] <= 0:
            top -= 1
        return top, len(merged_red)

    def check(self):
        """Recompute every cached index and verify the structural invariants."""
        for v in self._black:
            if v in self._black[v] or v in self._red[v]:
                raise InvalidTrigraph(f'self-loop at {v}')
            if self._black[v] & self._red[v]:
                raise InvalidTrigraph(f'vertex {v} has a pair colored both black and red')
            for table in (self._black, self._red):
                for u in table[v]:
                    if u not in table or v not in table[u]:
                        raise InvalidTrigraph(f'asymmetric adjacency between {v} and {u}')
        expected = Counter(len(reds) for reds in self._red.values())
        if +expected != +self._degree_counts:
            raise InvalidTrigraph('red degree index out of date')
        if self._max_red != max(expected, default=0):
            raise InvalidTrigraph(f'cached max red degree {self._max_red} is stale')


def contract(g, pair):
    """Return a contracted copy of ``g`` and its max red degree; ``g`` is left untouched."""
    h = g.copy()
    new_max = h.contract(pair.survivor, pair.removed)
    return h, new_max


def max_red_degree(g):
    return g.max_red_degree


def candidate_pairs(g):
    """Pairs at distance at most two (either color), smaller label surviving, sorted."""
    pairs = []
    for v in g.vertices():
        near = set(g.neighbors(v))
        for w in list(near):
            near |= g.neighbors(w)
        pairs.extend(ContractionPair(v, u) for u in sorted(near) if u > v)
    return pairs


def _twin_groups(g):
    # Open keys group pairs that are not black-adjacent, closed keys pairs that are.
    groups = {}
    for v in g.vertices():
        blacks = g.black_neighbors(v)
        groups.setdefault(('open', frozenset(blacks)), []).append(v)
        groups.setdefault(('closed', frozenset(blacks | {v})), []).append(v)
    return [members for members in groups.values() if len(members) > 1]


def _red_compatible(g, x, y):
    return g.red_neighbors(x) - {y} == g.red_neighbors(y) - {x}


def free_pairs(g, strict=False):
    """
    Pairs whose black neighborhoods, each excluding the pair, coincide.

    With ``strict`` the red neighborhoods must coincide as well; only then is
    the contracted trigraph an induced subtrigraph of ``g``.
    """
    pairs = set()
    for members in _twin_groups(g):
        for x, y in combinations(members, 2):
            if not strict or _red_compatible(g, x, y):
                pairs.add(ContractionPair(x, y))
    return sorted(pairs)


def first_free_pair(g, strict=False):
    """First pair of ``free_pairs(g, strict)`` in canonical order, or None."""
    best = None
    for members in _twin_groups(g):
        for x, y in combinations(members, 2):
            if best is not None and (x, y) >= (best.survivor, best.removed):
                break
            if not strict or _red_compatible(g, x, y):
                best = ContractionPair(x, y)
                break
    return best


def induced_subtrigraph(g, keep):
    keep = set(keep)
    missing = [v for v in keep if v not in g]
    if missing:
        raise InvalidTrigraph(f'vertices {sorted(missing)} are not live')
    if not keep:
        raise InvalidTrigraph('a trigraph needs at least one vertex')
    black = {v: g.black_neighbors(v) & keep for v in keep}
    red = {v: g.red_neighbors(v) & keep for v in keep}
    return Trigraph._from_tables(black, red)


def _normalize_partition(partition):
    if hasattr(partition, 'items'):
        return {survivor: frozenset(group) for survivor, group in partition.items()}
    normalized = {}
    for group in partition:
        group = frozenset(group)
        if not group:
            raise PartitionError('empty group')
        normalized[min(group)] = group
    return normalized


def quotient_trigraph(base, partition):
    """
    Trigraph obtained by merging each group of ``partition`` in the black-only ``base``.

    ``partition`` is either a list of groups (the smallest label survives) or a
    mapping from survivor label to group.
    """
    if base.has_red_edges():
        raise PartitionError('quotients are only defined over black-only graphs')
    groups = _normalize_partition(partition)
    owner = {}
    for survivor, group in groups.items():
        if survivor not in group:
            raise PartitionError(f'survivor {survivor} is not in its group')
        for v in group:
            if v in owner:
                raise PartitionError(f'vertex {v} appears in two groups')
            if v not in base:
                raise PartitionError(f'vertex {v} is not live')
            owner[v] = survivor
    if len(owner) != len(base):
        uncovered = sorted(set(base.live) - owner.keys())
        raise PartitionError(f'partition does not cover vertices {uncovered}')

    between = Counter()
    for v in base.live:
        p = owner[v]
        for w in base.black_neighbors(v):
            q = owner[w]
            if p < q:
                between[p, q] += 1

    black = {p: set() for p in groups}
    red = {p: set() for p in groups}
    for (p, q), count in between.items():
        table = black if count == len(groups[p]) * len(groups[q]) else red
        table[p].add(q)
        table[q].add(p)
    return Trigraph._from_tables(black, red)


def live_pairs(g):
    """Every unordered live pair, smaller label surviving, sorted."""
    return [ContractionPair(u, v) for u, v in combinations(g.vertices(), 2)]
