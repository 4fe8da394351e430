"""
Upper bounds: the greedy constructor and plateau-driven hill climbing.

Both run from any trigraph, including the quotient trigraphs the exact
search hands over when it tries to close a state.
"""
import logging
import random
from dataclasses import dataclass, field

from solver.budget import Deadline
from solver.exceptions import TwinWidthError
from solver.pace_io import ContractionSequence, Instance
from solver.trigraph import ContractionPair, Trigraph, candidate_pairs, first_free_pair, live_pairs

logger = logging.getLogger(__name__)


@dataclass
class HeuristicSolution:
    seq: ContractionSequence
    width: int
    per_step_max: list = field(default_factory=list)
    plateau_start: int = 0

    @classmethod
    def from_steps(cls, pairs, per_step_max, floor=0):
        if not per_step_max:
            return cls(ContractionSequence(list(pairs)), floor, [], 0)
        return cls(ContractionSequence(list(pairs)), per_step_max[-1], list(per_step_max),
                   plateau_start(per_step_max))

    @property
    def rank(self):
        """Lower is better: narrower first, then a later plateau."""
        return self.width, -self.plateau_start


@dataclass(frozen=True)
class PerturbParams:
    batch_size: int = 32
    rng_seed: int = 0
    time_budget: float = 0.0
    max_batches: int = None

    def __post_init__(self):
        if self.batch_size < 1:
            raise TwinWidthError(f'batch_size must be at least 1, got {self.batch_size}')


def plateau_start(per_step_max):
    """1-based index of the first step at which the running maximum reaches its final value."""
    if not per_step_max:
        raise TwinWidthError('an empty sequence has no plateau')
    width = per_step_max[-1]
    for index, value in enumerate(per_step_max, start=1):
        if value == width:
            return index


def _greedy_choice(g):
    free = first_free_pair(g)
    if free is not None:
        new_max, _ = g.simulate_contract(free.survivor, free.removed)
        if new_max <= g.max_red_degree:
            return free
    best, best_key = None, None
    for pair in candidate_pairs(g) or live_pairs(g):
        key = g.simulate_contract(pair.survivor, pair.removed)
        if best_key is None or key < best_key:
            best, best_key = pair, key
    return best


def greedy_extend(g, prefix_width=0):
    """
    Contract ``g`` down to one vertex, each time committing the pair whose
    contraction leaves the smallest max red degree (then the smallest red
    degree at the survivor, then canonical order).
    """
    h = g.copy()
    running = max(prefix_width, h.max_red_degree)
    pairs, per_step = [], []
    while len(h) > 1:
        pair = _greedy_choice(h)
        running = max(running, h.contract(pair.survivor, pair.removed))
        pairs.append(pair)
        per_step.append(running)
    return HeuristicSolution.from_steps(pairs, per_step, floor=running)


def complete_from_prefix(base, prefix):
    """Replay ``prefix`` on ``base``, skipping pairs that are no longer valid, then finish greedily."""
    h = base.copy()
    running = h.max_red_degree
    kept, per_step = [], []
    for x, y in prefix:
        if x == y or x not in h or y not in h:
            continue
        running = max(running, h.contract(x, y))
        kept.append(ContractionPair(x, y))
        per_step.append(running)
    tail = greedy_extend(h, running)
    return HeuristicSolution.from_steps(kept + list(tail.seq), per_step + tail.per_step_max, floor=running)


def _live_after(base, pairs, step):
    removed = {pair.removed for pair in pairs[:step]}
    return sorted(v for v in base.live if v not in removed)


def perturb(primary, base, rng):
    """
    Derive a neighbor of ``primary`` within its first ``plateau_start`` steps.

    Draw steps a, b in [1, p] and vertices u, v live after those steps; u
    becomes the survivor of pair a, then y_b and v trade places in every pair
    from b on. The first p pairs of the result are replayed (invalid ones
    dropped) and completed greedily.
    """
    pairs = list(primary.seq)
    if not pairs:
        return primary
    p = primary.plateau_start
    a = rng.randint(1, p)
    b = rng.randint(1, p)
    u = rng.choice(_live_after(base, pairs, a))
    v = rng.choice(_live_after(base, pairs, b))

    pairs[a - 1] = ContractionPair(u, pairs[a - 1].removed)
    y_b = pairs[b - 1].removed
    if v != y_b:
        swap = {y_b: v, v: y_b}
        for i in range(b - 1, len(pairs)):
            x, y = pairs[i]
            pairs[i] = ContractionPair(swap.get(x, x), swap.get(y, y))
    return complete_from_prefix(base, pairs[:p])


def _as_trigraph(source):
    if isinstance(source, Instance):
        return Trigraph.from_instance(source)
    return source


def hill_climb(source, params, initial=None, deadline=None, on_improve=None):
    """
    Local search from a greedy seed.

    Every batch derives ``params.batch_size`` solutions from the primary one.
    A narrower derived solution replaces the primary at once; otherwise the
    equally wide one with the latest plateau does, if its plateau is not
    earlier. The run stops when the time budget, ``params.max_batches`` or
    the external ``deadline`` is spent.
    """
    if params.time_budget is None and params.max_batches is None and deadline is None:
        raise TwinWidthError('hill climbing needs a time budget, a batch count or a deadline')
    base = _as_trigraph(source)
    rng = random.Random(params.rng_seed)
    primary = initial if initial is not None else greedy_extend(base)
    if on_improve is not None:
        on_improve(primary)
    budget = Deadline(params.time_budget, parent=deadline)

    batches = 0
    while len(base) > 1 and not budget.expired():
        if params.max_batches is not None and batches >= params.max_batches:
            break
        batches += 1
        best_equal = None
        narrowed = False
        for _ in range(params.batch_size):
            if budget.expired():
                break
            derived = perturb(primary, base, rng)
            if derived.width < primary.width:
                logger.info('hill climbing: width %d -> %d after %d batches', primary.width, derived.width, batches)
                primary = derived
                narrowed = True
                break
            if derived.width == primary.width and (
                    best_equal is None or derived.plateau_start > best_equal.plateau_start):
                best_equal = derived
        if not narrowed:
            if best_equal is None or best_equal.plateau_start < primary.plateau_start:
                continue
            primary = best_equal
        if on_improve is not None:
            on_improve(primary)
    logger.debug('hill climbing finished: width %d, plateau %d, %d batches', primary.width, primary.plateau_start, batches)
    return primary
