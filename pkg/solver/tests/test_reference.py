from django.test import SimpleTestCase, override_settings

from solver import generators
from solver.exceptions import InvalidContraction, OracleCapExceeded
from solver.pace_io import ContractionSequence, Instance
from solver.reference import oracle_twinwidth, replay_width, verify_sequence
from solver.tests.utils import atlas_instances
from solver.trigraph import Trigraph, induced_subtrigraph


class VerifySequenceTests(SimpleTestCase):
    def test_p4(self):
        report = verify_sequence(generators.path(4), ContractionSequence.of((1, 2), (1, 3), (1, 4)))
        self.assertEqual(report.width, 1)
        self.assertEqual(report.per_step_max, [1, 1, 1])

    def test_k2(self):
        self.assertEqual(verify_sequence(generators.complete(2), ContractionSequence.of((1, 2))).width, 0)

    def test_single_vertex(self):
        report = verify_sequence(Instance(n=1), ContractionSequence())
        self.assertEqual(report.width, 0)
        self.assertEqual(report.per_step_max, [])

    def test_running_maximum_never_drops(self):
        report = verify_sequence(generators.cycle(5), ContractionSequence.of((1, 2), (1, 3), (1, 4), (1, 5)))
        self.assertEqual(report.per_step_max, sorted(report.per_step_max))
        self.assertEqual(report.width, 2)

    def test_too_short(self):
        with self.assertRaises(InvalidContraction) as ctx:
            verify_sequence(generators.path(4), ContractionSequence.of((1, 2), (1, 3)))
        self.assertEqual(ctx.exception.step, 3)

    def test_dead_vertex_names_the_step(self):
        with self.assertRaises(InvalidContraction) as ctx:
            verify_sequence(generators.path(4), ContractionSequence.of((1, 2), (2, 3), (1, 4)))
        self.assertEqual(ctx.exception.step, 2)

    def test_out_of_range_label(self):
        with self.assertRaises(InvalidContraction) as ctx:
            verify_sequence(generators.path(3), ContractionSequence.of((1, 2), (1, 7)))
        self.assertEqual(ctx.exception.step, 2)

    def test_first_bad_step_wins(self):
        with self.assertRaises(InvalidContraction) as ctx:
            verify_sequence(generators.path(4), ContractionSequence.of((1, 2), (2, 3), (1, 9)))
        self.assertEqual(ctx.exception.step, 2)
        self.assertIn('not live', str(ctx.exception))

    def test_replay_accepts_partial_sequences(self):
        report, remaining = replay_width(Trigraph.from_instance(generators.path(4)), ContractionSequence.of((1, 2)))
        self.assertEqual(report.width, 1)
        self.assertEqual(remaining.vertices(), [1, 3, 4])


class OracleTests(SimpleTestCase):
    def test_small_examples(self):
        self.assertEqual(oracle_twinwidth(generators.path(3)).width, 0)
        self.assertEqual(oracle_twinwidth(generators.path(4)).width, 1)
        self.assertEqual(oracle_twinwidth(generators.cycle(5)).width, 2)
        self.assertEqual(oracle_twinwidth(Instance(n=1)).width, 0)

    def test_cap(self):
        with self.assertRaises(OracleCapExceeded):
            oracle_twinwidth(generators.path(9))
        self.assertEqual(oracle_twinwidth(generators.path(9), cap=9).width, 1)

    @override_settings(TWINWIDTH={'ORACLE_CAP': 5})
    def test_cap_comes_from_settings(self):
        with self.assertRaises(OracleCapExceeded):
            oracle_twinwidth(generators.cycle(6))

    def test_witness_replays_to_the_reported_width(self):
        for instance in atlas_instances(6, connected=False, min_n=2):
            width, witness = oracle_twinwidth(instance)
            self.assertEqual(verify_sequence(instance, witness).width, width, instance.source_name)

    def test_distance_two_restriction_loses_nothing(self):
        for instance in atlas_instances(6):
            self.assertEqual(oracle_twinwidth(instance).width,
                             oracle_twinwidth(instance, distance_two=True).width, instance.source_name)

    def test_trigraph_source_counts_existing_red_edges(self):
        g = Trigraph(range(1, 5), red_edges=[(1, 2), (1, 3), (1, 4)])
        self.assertEqual(oracle_twinwidth(g).width, 3)

    def test_vertex_deletion_never_widens(self):
        # monotonicity under every single deletion gives it for every induced subgraph
        instances = atlas_instances(5, connected=False, min_n=2) + atlas_instances(6, min_n=6)[::4]
        for instance in instances:
            base = Trigraph.from_instance(instance)
            width = oracle_twinwidth(base).width
            for v in base.vertices():
                sub = induced_subtrigraph(base, set(base.live) - {v})
                self.assertLessEqual(oracle_twinwidth(sub).width, width, f'{instance.source_name} minus {v}')
