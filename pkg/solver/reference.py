"""
Ground truth for everything the solvers emit.

``verify_sequence`` replays a contraction sequence and reports its width;
``oracle_twinwidth`` computes the exact twin-width of small graphs by
exhausting every contraction order, memoized on the vertex partition.
Neither function shares search code with the solvers.
"""
import logging
from dataclasses import dataclass, field
from typing import NamedTuple

from solver import conf
from solver.exceptions import InvalidContraction, OracleCapExceeded
from solver.pace_io import ContractionSequence, Instance
from solver.trigraph import Trigraph, candidate_pairs, live_pairs

logger = logging.getLogger(__name__)


@dataclass
class WidthReport:
    width: int
    per_step_max: list = field(default_factory=list)


class OracleResult(NamedTuple):
    width: int
    witness: ContractionSequence


def replay_width(base, seq, n=None):
    """
    Replay ``seq`` on a copy of ``base`` and collect the running maxima.

    Every pair must have two distinct live endpoints, with labels in
    ``[1, n]`` when ``n`` is given; the sequence may stop before a single
    vertex is left. Steps are reported 1-based.
    """
    g = base.copy()
    running = g.max_red_degree
    per_step = []
    for step, pair in enumerate(seq, start=1):
        x, y = pair
        for v in (x, y):
            if n is not None and not 1 <= v <= n:
                raise InvalidContraction(f'label {v} out of range [1, {n}]', step=step)
            if v not in g:
                raise InvalidContraction(f'vertex {v} is not live', step=step)
        if x == y:
            raise InvalidContraction(f'cannot contract vertex {x} with itself', step=step)
        running = max(running, g.contract(x, y))
        per_step.append(running)
    return WidthReport(width=running, per_step_max=per_step), g


def verify_sequence(instance, seq):
    """Width of ``seq`` on ``instance``; invalid or incomplete sequences raise InvalidContraction."""
    report, remaining = replay_width(Trigraph.from_instance(instance), seq, n=instance.n)
    if len(remaining) != 1:
        raise InvalidContraction(
            f'sequence has {len(seq)} pairs, {instance.n - 1} needed; {len(remaining)} vertices remain',
            step=len(seq) + 1,
        )
    return report


def _graph_of(source):
    if isinstance(source, Instance):
        return Trigraph.from_instance(source)
    return source


def oracle_twinwidth(source, cap=None, distance_two=False):
    """
    Exact twin-width by exhaustive search over every contraction order.

    ``source`` is an Instance or a Trigraph. With ``distance_two`` only pairs
    at distance at most two are tried (all live pairs once none is left),
    which is how the solvers restrict their transitions.
    """
    base = _graph_of(source)
    cap = conf.get('ORACLE_CAP') if cap is None else cap
    if len(base) > cap:
        raise OracleCapExceeded(f'oracle is capped at {cap} vertices, instance has {len(base)}')

    # partition -> (best width of any completion, first pair of such a completion)
    memo = {}

    def completion(g, groups):
        key = frozenset(groups.values())
        if key in memo:
            return memo[key][0]
        if len(g) == 1:
            memo[key] = (0, None)
            return 0
        pairs = candidate_pairs(g) if distance_two else []
        if not pairs:
            pairs = live_pairs(g)
        best, best_pair = None, None
        for pair in pairs:
            child = g.copy()
            step_width = child.contract(pair.survivor, pair.removed)
            child_groups = dict(groups)
            child_groups[pair.survivor] = groups[pair.survivor] | child_groups.pop(pair.removed)
            width = max(step_width, completion(child, child_groups))
            if best is None or width < best:
                best, best_pair = width, pair
        memo[key] = (best, best_pair)
        return best

    groups = {v: frozenset([v]) for v in base.live}
    width = max(base.max_red_degree, completion(base, groups))

    witness = []
    while len(groups) > 1:
        pair = memo[frozenset(groups.values())][1]
        witness.append(pair)
        groups[pair.survivor] = groups[pair.survivor] | groups.pop(pair.removed)
    logger.debug('oracle: n=%d width=%d partitions=%d', len(base), width, len(memo))
    return OracleResult(width, ContractionSequence(witness))
