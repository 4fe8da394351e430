import random

from django.test import SimpleTestCase

from solver import generators
from solver.exceptions import TwinWidthError
from solver.heuristic import (HeuristicSolution, PerturbParams, complete_from_prefix, greedy_extend, hill_climb,
                              perturb, plateau_start)
from solver.pace_io import ContractionSequence
from solver.reference import oracle_twinwidth, replay_width, verify_sequence
from solver.tests.utils import atlas_instances
from solver.trigraph import Trigraph


def graph(instance):
    return Trigraph.from_instance(instance)


def batches(count, seed=0, batch_size=8):
    return PerturbParams(batch_size=batch_size, rng_seed=seed, time_budget=None, max_batches=count)


class ScriptedRandom:
    """Stands in for random.Random and replays fixed draws."""

    def __init__(self, ints, choices):
        self.ints = list(ints)
        self.choices = list(choices)

    def randint(self, low, high):
        return self.ints.pop(0)

    def choice(self, options):
        return self.choices.pop(0)


class PlateauStartTests(SimpleTestCase):
    def test_known_values(self):
        self.assertEqual(plateau_start([1, 2, 2, 2]), 2)
        self.assertEqual(plateau_start([3, 3, 3]), 1)
        self.assertEqual(plateau_start([0, 1, 2]), 3)

    def test_empty(self):
        with self.assertRaises(TwinWidthError):
            plateau_start([])


class GreedyExtendTests(SimpleTestCase):
    def test_k4(self):
        self.assertEqual(greedy_extend(graph(generators.complete(4))).width, 0)

    def test_p4(self):
        solution = greedy_extend(graph(generators.path(4)))
        self.assertEqual(solution.width, 1)
        self.assertEqual(len(solution.seq), 3)

    def test_single_vertex_keeps_the_prefix_width(self):
        solution = greedy_extend(Trigraph([1]), prefix_width=3)
        self.assertEqual(solution.width, 3)
        self.assertEqual(len(solution.seq), 0)

    def test_input_is_not_modified(self):
        g = graph(generators.cycle(6))
        greedy_extend(g)
        self.assertEqual(g, graph(generators.cycle(6)))

    def test_paths_and_cycles(self):
        for n in range(4, 17):
            self.assertEqual(greedy_extend(graph(generators.path(n))).width, 1)
        for n in range(5, 17):
            self.assertEqual(greedy_extend(graph(generators.cycle(n))).width, 2)

    def test_replays_to_the_reported_maxima(self):
        for seed in range(30):
            instance = generators.gnp(12, 0.3, seed)
            solution = greedy_extend(graph(instance))
            report = verify_sequence(instance, solution.seq)
            self.assertEqual(report.width, solution.width)
            self.assertEqual(report.per_step_max, solution.per_step_max)

    def test_works_from_a_trigraph_with_red_edges(self):
        g = Trigraph(range(1, 5), black_edges=[(1, 2)], red_edges=[(2, 3), (3, 4)])
        solution = greedy_extend(g)
        report, remaining = replay_width(g, solution.seq)
        self.assertEqual(len(remaining), 1)
        self.assertEqual(report.width, solution.width)
        self.assertGreaterEqual(solution.width, 1)

    def test_disconnected_input_falls_back_to_all_pairs(self):
        g = graph(generators.disjoint_union(generators.complete(1), generators.complete(1), generators.complete(1)))
        self.assertEqual(len(greedy_extend(g).seq), 2)


class CompleteFromPrefixTests(SimpleTestCase):
    def test_drops_invalid_pairs(self):
        base = graph(generators.path(4))
        solution = complete_from_prefix(base, ContractionSequence.of((1, 2), (2, 3)))
        self.assertEqual(solution.seq[0], ContractionSequence.of((1, 2))[0])
        self.assertEqual(replay_width(base, solution.seq)[0].width, solution.width)
        self.assertEqual(len(solution.seq), 3)


class PerturbTests(SimpleTestCase):
    def test_k4_stays_at_zero(self):
        base = graph(generators.complete(4))
        primary = greedy_extend(base)
        rng = random.Random(1)
        for _ in range(20):
            self.assertEqual(perturb(primary, base, rng).width, 0)

    def test_never_below_the_oracle(self):
        base = graph(generators.path(4))
        primary = greedy_extend(base)
        rng = random.Random(2)
        for _ in range(50):
            derived = perturb(primary, base, rng)
            self.assertGreaterEqual(derived.width, 1)
            self.assertEqual(replay_width(base, derived.seq)[0].width, derived.width)

    def test_identity_draws_reproduce_the_primary(self):
        base = graph(generators.gnp(9, 0.5, 4))
        primary = greedy_extend(base)
        first = primary.seq[0]
        derived = perturb(primary, base, ScriptedRandom([1, 1], [first.survivor, first.removed]))
        self.assertEqual(derived.seq, primary.seq)
        self.assertEqual(derived.width, primary.width)

    def test_derived_solutions_are_complete(self):
        base = graph(generators.gnp(10, 0.4, 8))
        primary = greedy_extend(base)
        rng = random.Random(5)
        for _ in range(30):
            derived = perturb(primary, base, rng)
            report, remaining = replay_width(base, derived.seq)
            self.assertEqual(len(remaining), 1)
            self.assertEqual(report.per_step_max, derived.per_step_max)


class HillClimbTests(SimpleTestCase):
    def test_known_values(self):
        self.assertEqual(hill_climb(generators.path(4), batches(5)).width, 1)
        self.assertEqual(hill_climb(generators.cycle(5), batches(5)).width, 2)

    def test_zero_budget_returns_the_greedy_seed(self):
        instance = generators.gnp(10, 0.5, 3)
        seed_solution = greedy_extend(graph(instance))
        result = hill_climb(instance, PerturbParams(time_budget=0.0))
        self.assertEqual(result.seq, seed_solution.seq)

    def test_needs_some_budget(self):
        with self.assertRaises(TwinWidthError):
            hill_climb(generators.path(4), PerturbParams(time_budget=None))

    def test_batch_size_must_be_positive(self):
        with self.assertRaises(TwinWidthError):
            PerturbParams(batch_size=0)

    def test_same_seed_same_answer(self):
        instance = generators.gnp(14, 0.35, 6)
        first = hill_climb(instance, batches(6, seed=9))
        second = hill_climb(instance, batches(6, seed=9))
        self.assertEqual(first.seq, second.seq)

    def test_progress_is_monotone(self):
        for seed in range(5):
            ranks = []
            hill_climb(generators.gnp(14, 0.4, seed), batches(10, seed=seed), on_improve=lambda s: ranks.append(s.rank))
            self.assertEqual(ranks, sorted(ranks, reverse=True))

    def test_never_worse_than_the_seed(self):
        for seed in range(10):
            instance = generators.gnp(12, 0.4, seed)
            self.assertLessEqual(hill_climb(instance, batches(4, seed=seed)).width,
                                 greedy_extend(graph(instance)).width)

    def test_valid_upper_bounds(self):
        instances = atlas_instances(6) + [generators.gnp(8, p, seed) for p in (0.3, 0.5) for seed in range(3)]
        for instance in instances:
            result = hill_climb(instance, batches(2, batch_size=4))
            report = verify_sequence(instance, result.seq)
            self.assertEqual(report.width, result.width, instance.source_name)
            self.assertEqual(report.per_step_max, result.per_step_max)
            self.assertGreaterEqual(result.width, oracle_twinwidth(instance).width, instance.source_name)

    def test_initial_solution_is_the_start(self):
        base = graph(generators.path(5))
        initial = HeuristicSolution.from_steps(ContractionSequence.of((1, 5), (1, 2), (1, 3), (1, 4)),
                                               replay_width(base, ContractionSequence.of(
                                                   (1, 5), (1, 2), (1, 3), (1, 4)))[0].per_step_max)
        result = hill_climb(base, PerturbParams(time_budget=0.0), initial=initial)
        self.assertIs(result, initial)
