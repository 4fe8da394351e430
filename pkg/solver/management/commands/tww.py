from dataclasses import fields

from django.core.management.base import BaseCommand, CommandError

from solver.exceptions import SolverFailure, TwinWidthError
from solver.runner import RunConfig, run


class Command(BaseCommand):
    help = 'Twin-width solver suite: exact and heuristic tracks, verifier, oracle and bench harness'
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='mode', required=True)

        def common(sub):
            sub.add_argument('--input', default='-', help='instance file (default: standard input)')
            sub.add_argument('--seed', type=int, default=None)
            return sub

        def solving(sub):
            sub.add_argument('--time-limit', type=float, default=None, dest='time_limit', help='seconds')
            sub.add_argument('--lb-budget', type=float, default=None, dest='lb_budget_fraction',
                             help='share of the time limit spent on lower bounds, in [0, 0.5]')
            sub.add_argument('--memory-cap', type=int, default=None, dest='memory_cap', help='bytes')
            sub.add_argument('--iterations', type=int, default=None,
                             help='hill-climbing batch budget; fixes the output for a given seed')
            sub.add_argument('--batch-size', type=int, default=None, dest='batch_size')
            sub.add_argument('--emit-width', action='store_true', dest='emit_width',
                             help='report the width on standard error')
            return sub

        solving(common(subparsers.add_parser('exact', help='exact track: optimal contraction sequence')))
        solving(common(subparsers.add_parser('heuristic', help='heuristic track: best sequence within the time limit')))

        verify = common(subparsers.add_parser('verify', help='replay a solution and print its width'))
        verify.add_argument('--solution', required=True, help='solution file, one "survivor removed" pair per line')

        oracle = common(subparsers.add_parser('oracle', help='brute-force twin-width of a small graph'))
        oracle.add_argument('--oracle-cap', type=int, default=None, dest='oracle_cap')

        bench = solving(common(subparsers.add_parser('bench', help='solve and verify every .gr file of a directory')))
        bench.add_argument('--dir', required=True, dest='directory')
        bench.add_argument('--csv', default=None, dest='csv_path', help='CSV output file (default: standard output)')
        bench.add_argument('--track', choices=['exact', 'heuristic'], default='exact')
        bench.add_argument('--record', action='store_true', help='store the run in the database')
        bench.add_argument('--compare', action='store_true',
                           help='heuristic track: also solve exactly and report how often the widths match')

    def handle(self, *args, **options):
        names = [f.name for f in fields(RunConfig)]
        values = {name: options[name] for name in names if options.get(name) is not None}
        try:
            config = RunConfig(**values)
            outcome = run(config, stdin=options.get('stdin'))
        except SolverFailure as exc:
            raise CommandError(str(exc), returncode=3)
        except TwinWidthError as exc:
            raise CommandError(str(exc), returncode=2)

        for line in outcome.diagnostics:
            self.stderr.write(line)
        if outcome.payload:
            self.stdout.write(outcome.payload, ending='')
        if outcome.status:
            raise CommandError(f'{config.mode} finished with status {outcome.status}', returncode=outcome.status)
