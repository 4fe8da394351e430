from django.test import SimpleTestCase

from solver.exceptions import InstanceFormatError, SequenceFormatError
from solver.pace_io import (ContractionSequence, Instance, parse_instance, parse_sequence, render_instance,
                            render_sequence)
from solver.tests.utils import FIXTURES, fixture_bytes


class ParseInstanceTests(SimpleTestCase):
    def test_comment_header_and_edges(self):
        instance = parse_instance('c hi\np tww 3 2\n1 2\n2 3\n')
        self.assertEqual(instance, Instance(n=3, edges=((1, 2), (2, 3))))

    def test_single_vertex_without_edges(self):
        self.assertEqual(parse_instance('p tww 1 0\n'), Instance(n=1))

    def test_lenient_whitespace(self):
        instance = parse_instance(b'c tabs and CRLF\r\np\ttww 3  2\r\n\r\n1\t2\r\n2 3')
        self.assertEqual(instance.edges, ((1, 2), (2, 3)))

    def test_comments_between_edges(self):
        instance = parse_instance('p tww 3 2\n1 2\nc in between\n2 3\n')
        self.assertEqual(instance.m, 2)

    def test_keeps_source_name(self):
        self.assertEqual(parse_instance('p tww 1 0\n', source_name='one.gr').source_name, 'one.gr')

    def test_corrupt_fixtures_name_the_line(self):
        expected = {
            'missing-header.gr': 1,
            'wrong-problem.gr': 1,
            'short-header.gr': 1,
            'too-few-edges.gr': 3,
            'too-many-edges.gr': 3,
            'label-out-of-range.gr': 3,
            'self-loop.gr': 3,
            'duplicate-edge.gr': 3,
            'duplicate-reversed.gr': 4,
            'non-integer.gr': 3,
            'three-tokens.gr': 2,
        }
        self.assertEqual(sorted(expected), sorted(p.name for p in (FIXTURES / 'corrupt').glob('*.gr')))
        for name, line in expected.items():
            with self.subTest(name=name):
                with self.assertRaises(InstanceFormatError) as ctx:
                    parse_instance(fixture_bytes(f'corrupt/{name}'))
                self.assertEqual(ctx.exception.line, line)
                self.assertTrue(str(ctx.exception).startswith(f'line {line}: '))

    def test_empty_input(self):
        with self.assertRaises(InstanceFormatError):
            parse_instance('')

    def test_zero_vertices(self):
        with self.assertRaises(InstanceFormatError):
            parse_instance('p tww 0 0\n')

    def test_non_ascii(self):
        with self.assertRaises(InstanceFormatError):
            parse_instance('p tww 2 1\n1 2 é\n'.encode('utf-8'))


class RenderInstanceTests(SimpleTestCase):
    def test_canonical_text(self):
        self.assertEqual(render_instance(Instance(n=3, edges=((1, 2), (2, 3)))), b'p tww 3 2\n1 2\n2 3\n')

    def test_fixtures_are_reproduced_bit_exact(self):
        paths = sorted(FIXTURES.glob('*.gr'))
        self.assertGreaterEqual(len(paths), 20)
        for path in paths:
            with self.subTest(fixture=path.name):
                raw = path.read_bytes()
                self.assertEqual(render_instance(parse_instance(raw)), raw)


class SequenceTests(SimpleTestCase):
    def test_render(self):
        self.assertEqual(render_sequence(ContractionSequence.of((1, 2), (1, 3))), b'1 2\n1 3\n')
        self.assertEqual(render_sequence(ContractionSequence()), b'')

    def test_parse(self):
        self.assertEqual(parse_sequence('1 2\n1 3\n1 4\n', 4), ContractionSequence.of((1, 2), (1, 3), (1, 4)))
        self.assertEqual(parse_sequence('', 1), ContractionSequence())

    def test_solution_fixtures_are_reproduced_bit_exact(self):
        for name in ('p4', 'k2', 'single-vertex', 'c5'):
            with self.subTest(fixture=name):
                n = parse_instance(fixture_bytes(f'{name}.gr')).n
                raw = fixture_bytes(f'{name}.sol')
                self.assertEqual(render_sequence(parse_sequence(raw, n)), raw)

    def test_non_ascii_solution_is_a_sequence_error(self):
        with self.assertRaises(SequenceFormatError):
            parse_sequence('1 2\n1 é\n'.encode('utf-8'), 3)

    def test_wrong_length(self):
        with self.assertRaises(SequenceFormatError):
            parse_sequence('1 2\n', 4)

    def test_bad_lines_name_the_line(self):
        for text, line in (('1 2\n1 9\n1 4\n', 2), ('1 2\n3 3\n1 4\n', 2), ('1 2\n1 3\n1 x\n', 3),
                           ('1 2 3\n1 3\n1 4\n', 1)):
            with self.subTest(text=text):
                with self.assertRaises(SequenceFormatError) as ctx:
                    parse_sequence(text, 4)
                self.assertEqual(ctx.exception.line, line)

    def test_concatenation(self):
        combined = ContractionSequence.of((1, 2)) + ContractionSequence.of((1, 3))
        self.assertEqual(combined, ContractionSequence.of((1, 2), (1, 3)))
        self.assertEqual(len(combined), 2)
