"""
Exact twin-width by a layered search over partial contraction sequences.

States are keyed by the vertex partition their sequence induces. A layer
holds every surviving state with ``l`` contractions and is fully expanded
before layer ``l + 1``. Pruning, in order:

1. children as wide as the best known solution are dropped;
2. among states with the same partition only the narrowest is kept
   (ties keep the first one seen);
3. a child at least as wide as the lower bound is closed when the greedy
   completion of its quotient does not widen it;
4. a solution no wider than ``accept_width`` ends the component early;
5. the search ends as soon as the best solution meets the lower bound.
"""
import logging
import random
import time
from dataclasses import dataclass, field
from itertools import count

import networkx as nx

from solver import conf
from solver.budget import Deadline
from solver.exceptions import BudgetExpired, InvalidTrigraph, SolverFailure, StateBudgetExceeded
from solver.heuristic import HeuristicSolution, PerturbParams, greedy_extend, hill_climb
from solver.pace_io import ContractionSequence
from solver.preprocess import assemble_solution, eliminate_twins, restrict_sequence, split_components
from solver.reference import replay_width, verify_sequence
from solver.trigraph import (Trigraph, candidate_pairs, first_free_pair, induced_subtrigraph, live_pairs,
                             quotient_trigraph)

logger = logging.getLogger(__name__)


@dataclass
class Bounds:
    lower: int
    upper: int
    upper_witness: ContractionSequence

    def __post_init__(self):
        if self.lower > self.upper:
            raise SolverFailure(f'lower bound {self.lower} exceeds upper bound {self.upper}')


@dataclass
class ComponentResult:
    width: int
    seq: ContractionSequence
    optimal: bool = True
    provenance: str = 'dp'


@dataclass(frozen=True)
class PruningRules:
    upper_bound: bool = True
    dominance: bool = True
    closure: bool = True
    forced_twins: bool = True


@dataclass
class SolveResult:
    width: int
    seq: ContractionSequence
    stage_provenance: str
    elapsed: float = 0.0
    optimal: bool = True
    components: list = field(default_factory=list)


@dataclass
class ExactConfig:
    seed: int = 0
    lb_budget_fraction: float = 0.1
    ub_budget_fraction: float = 0.1
    lb_size_cap: int = 20
    lb_max_samples: int = 16
    batch_size: int = 32
    ub_max_batches: int = 50
    component_batches: int = 8
    memory_cap: int = 8 * 1024 ** 3
    state_bytes_per_vertex: int = 256
    rules: PruningRules = field(default_factory=PruningRules)

    @classmethod
    def from_settings(cls, **overrides):
        values = {
            'seed': conf.get('DEFAULT_SEED'),
            'lb_budget_fraction': conf.get('LB_BUDGET_FRACTION'),
            'ub_budget_fraction': conf.get('UB_BUDGET_FRACTION'),
            'lb_size_cap': conf.get('LB_SIZE_CAP'),
            'lb_max_samples': conf.get('LB_MAX_SAMPLES'),
            'batch_size': conf.get('HILL_CLIMB_BATCH_SIZE'),
            'ub_max_batches': conf.get('UB_MAX_BATCHES'),
            'component_batches': conf.get('COMPONENT_HILL_CLIMB_BATCHES'),
            'memory_cap': conf.get('MEMORY_CAP'),
            'state_bytes_per_vertex': conf.get('STATE_BYTES_PER_VERTEX'),
        }
        values.update(overrides)
        return cls(**values)

    def state_cap(self, n):
        return max(1, self.memory_cap // (self.state_bytes_per_vertex * max(n, 1)))


def canonical_key(partition):
    """Groups sorted by smallest member, members ascending; independent of contraction order."""
    groups = sorted(sorted(group) for group in partition)
    return '|'.join(','.join(map(str, group)) for group in groups).encode('ascii')


class _Step:
    """One contraction in the shared arena; states point at the last step of their sequence."""

    __slots__ = ('pair', 'parent')

    def __init__(self, pair, parent):
        self.pair = pair
        self.parent = parent

    def unwind(self):
        pairs = []
        step = self
        while step is not None:
            pairs.append(step.pair)
            step = step.parent
        pairs.reverse()
        return pairs


class _State:
    __slots__ = ('width', 'quotient', 'groups', 'tail')

    def __init__(self, width, quotient, groups, tail):
        self.width = width
        self.quotient = quotient
        self.groups = groups
        self.tail = tail


def _transitions(quotient, rules):
    if rules.forced_twins:
        twin = first_free_pair(quotient, strict=True)
        if twin is not None:
            return [twin]
    return candidate_pairs(quotient) or live_pairs(quotient)


class _ComponentSearch:
    def __init__(self, component, bounds, accept_width, rules, deadline, state_cap):
        self.component = component
        self.lower = bounds.lower
        self.best_width = bounds.upper
        self.best_seq = bounds.upper_witness
        self.accept_width = accept_width
        self.rules = rules
        self.deadline = deadline
        self.state_cap = state_cap
        self.provenance = 'bounds'
        self.check = conf.get('CHECK_INVARIANTS')
        self.closures = 0

    def record(self, width, pairs):
        if width < self.best_width:
            logger.debug('component %d: solution of width %d', min(self.component.live), width)
            self.best_width = width
            self.best_seq = ContractionSequence(list(pairs))
            self.provenance = 'dp'

    def finished(self):
        """ComponentResult when rule 4 or 5 ends the search, else None."""
        if self.best_width <= self.lower:
            return ComponentResult(self.best_width, self.best_seq, True, self.provenance)
        if self.best_width <= self.accept_width:
            return ComponentResult(self.best_width, self.best_seq, False, 'accepted')
        return None

    def _cross_check(self, quotient, groups):
        quotient.check()
        if quotient != quotient_trigraph(self.component, groups):
            raise InvalidTrigraph('incremental quotient differs from its reconstruction')

    def run(self):
        done = self.finished()
        if done is not None:
            return done
        rules = self.rules
        groups = {v: frozenset([v]) for v in self.component.live}
        layer = [_State(self.component.max_red_degree, self.component.copy(), groups, None)]
        serial = count()
        depth = 0
        while layer:
            depth += 1
            frontier = {}
            for state in layer:
                if self.deadline.expired():
                    raise BudgetExpired(f'exact search, layer {depth}')
                if rules.upper_bound and state.width >= self.best_width:
                    continue
                for pair in _transitions(state.quotient, rules):
                    quotient = state.quotient.copy()
                    width = max(state.width, quotient.contract(pair.survivor, pair.removed))
                    if rules.upper_bound and width >= self.best_width:
                        continue
                    tail = _Step(pair, state.tail)
                    if len(quotient) == 1:
                        self.record(width, tail.unwind())
                        done = self.finished()
                        if done is not None:
                            return done
                        continue

                    child_groups = dict(state.groups)
                    child_groups[pair.survivor] = child_groups[pair.survivor] | child_groups.pop(pair.removed)
                    if self.check:
                        self._cross_check(quotient, child_groups)
                    key = canonical_key(child_groups.values()) if rules.dominance else next(serial)
                    incumbent = frontier.get(key)
                    if incumbent is not None and incumbent.width <= width:
                        continue

                    if rules.closure and width >= self.lower:
                        completion = greedy_extend(quotient, width)
                        if completion.width <= width:
                            self.closures += 1
                            self.record(width, tail.unwind() + list(completion.seq))
                            done = self.finished()
                            if done is not None:
                                return done
                            frontier.pop(key, None)
                            continue

                    frontier[key] = _State(width, quotient, child_groups, tail)
                    if self.state_cap is not None and len(frontier) + len(layer) > self.state_cap:
                        raise StateBudgetExceeded(depth, len(frontier) + len(layer), self.state_cap)
            layer = list(frontier.values())
            logger.debug('layer %d: %d states, best width %d', depth, len(layer), self.best_width)
        return ComponentResult(self.best_width, self.best_seq, True, self.provenance)


def solve_component(component, bounds, accept_width=0, rules=None, deadline=None, state_cap=None):
    """
    Twin-width of a connected trigraph, given a proven lower bound and a witnessed upper bound.

    ``optimal`` is False only when rule 4 accepted a solution no wider than
    ``accept_width``.
    """
    if len(component) == 1:
        return ComponentResult(component.max_red_degree, ContractionSequence(), True, 'trivial')
    search = _ComponentSearch(component, bounds, accept_width, rules or PruningRules(),
                              deadline or Deadline.unlimited(), state_cap)
    result = search.run()
    logger.info('component of %d vertices: width %d (%s, %d closures)',
                len(component), result.width, result.provenance, search.closures)
    return result


def _sample_vertex_sets(component, size_cap, max_samples, seed):
    graph = component.to_networkx()
    nodes = sorted(graph.nodes)
    samples, seen = [], set()

    def offer(vertices):
        vertices = frozenset(vertices)
        if len(vertices) >= 4 and vertices not in seen and len(samples) < max_samples:
            seen.add(vertices)
            samples.append(vertices)

    by_degree = sorted(nodes, key=lambda v: (-graph.degree(v), v))
    for centre in by_degree:
        for radius in (2, 3):
            ball = nx.single_source_shortest_path_length(graph, centre, cutoff=radius)
            offer(list(ball)[:size_cap])
        if len(samples) >= max_samples // 2:
            break

    rng = random.Random(seed)
    for _ in range(max_samples):
        if len(samples) >= max_samples:
            break
        start = rng.choice(nodes)
        grown, boundary = {start}, set(graph[start])
        while boundary and len(grown) < size_cap:
            v = rng.choice(sorted(boundary))
            grown.add(v)
            boundary |= set(graph[v])
            boundary -= grown
        offer(grown)

    if len(nodes) <= size_cap:
        offer(nodes)
    return samples


def lower_bound(component, budget, size_cap=20, max_samples=16, seed=0, ceiling=None, state_cap=None):
    """
    Largest exact twin-width found among sampled induced subgraphs.

    Samples are BFS balls of radius 2 and 3 around high-degree vertices and
    randomly grown connected subgraphs, all truncated to ``size_cap``
    vertices. A sample whose search does not finish within ``budget`` is
    skipped, and so is one that outgrows ``state_cap`` live states. Stops
    early once ``ceiling`` is reached.
    """
    deadline = budget if isinstance(budget, Deadline) else Deadline(budget)
    best = 0
    if deadline.expired():
        return best
    for vertices in _sample_vertex_sets(component, size_cap, max_samples, seed):
        if deadline.expired() or (ceiling is not None and best >= ceiling):
            break
        sub = induced_subtrigraph(component, vertices)
        seed_solution = greedy_extend(sub)
        if seed_solution.width <= best:
            continue
        try:
            result = solve_component(sub, Bounds(best, seed_solution.width, seed_solution.seq), deadline=deadline,
                                     state_cap=state_cap)
        except SolverFailure as exc:
            logger.debug('lower bound sample of %d vertices skipped: %s', len(vertices), exc)
            continue
        best = max(best, result.width)
    logger.info('lower bound %d for component of %d vertices', best, len(component))
    return best


def _component_upper_bound(component, global_seq, config, deadline):
    params = PerturbParams(config.batch_size, config.seed, None, config.component_batches)
    local = hill_climb(component.graph, params, deadline=deadline)
    restricted = restrict_sequence(global_seq, component.vertices)
    report, remaining = replay_width(component.graph, restricted)
    if len(remaining) == 1:
        projected = HeuristicSolution.from_steps(restricted, report.per_step_max)
        if projected.rank < local.rank:
            return projected
    return local


def solve_exact(instance, config=None, deadline=None):
    """
    Stage 1 twin elimination, stage 2 upper bounds, stage 3 subgraph lower
    bounds, stage 4 the layered search per component, largest first.
    """
    config = config or ExactConfig.from_settings()
    deadline = deadline or Deadline.unlimited()
    started = time.monotonic()

    g = Trigraph.from_instance(instance)
    reduced, prelude = eliminate_twins(g)
    plan = split_components(reduced, prelude)
    nontrivial = [c for c in plan.components if len(c) > 1]

    global_seq = ContractionSequence()
    if nontrivial:
        params = PerturbParams(config.batch_size, config.seed, None, config.ub_max_batches)
        global_seq = hill_climb(reduced, params, deadline=deadline.slice(config.ub_budget_fraction)).seq

    results, survivors = [], []
    provenance, width = 'preprocess', 0
    for index, component in enumerate(plan.components):
        if len(component) == 1:
            results.append(ComponentResult(0, ContractionSequence(), True, 'preprocess'))
            survivors.append(component.label)
            continue
        if deadline.expired():
            raise BudgetExpired('upper bounds')
        upper = _component_upper_bound(component, global_seq, config, deadline.slice(config.ub_budget_fraction))
        share = config.lb_budget_fraction / max(1, len(nontrivial) - index)
        lower = lower_bound(component.graph, deadline.slice(share), config.lb_size_cap, config.lb_max_samples,
                            config.seed, ceiling=upper.width, state_cap=config.state_cap(config.lb_size_cap))
        lower = min(lower, upper.width)
        result = solve_component(component.graph, Bounds(lower, upper.width, upper.seq), accept_width=width,
                                 rules=config.rules, deadline=deadline, state_cap=config.state_cap(len(component)))
        results.append(result)
        removed = {pair.removed for pair in result.seq}
        survivors.append(min(component.vertices - removed))
        if result.width > width or provenance == 'preprocess':
            provenance = result.provenance
        width = max(width, result.width)

    seq = assemble_solution(prelude, [r.seq for r in results], survivors)
    report = verify_sequence(instance, seq)
    if report.width != width:
        raise SolverFailure(f'assembled sequence replays to width {report.width}, expected {width}')
    elapsed = time.monotonic() - started
    logger.info('solved %s: width %d in %.3fs (%s)', instance.source_name or 'instance', width, elapsed, provenance)
    return SolveResult(width, seq, provenance, elapsed, True, results)
