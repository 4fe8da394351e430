from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from solver import generators
from solver.pace_io import render_instance

FAMILIES = ('paths', 'cycles', 'cographs', 'random')


class Command(BaseCommand):
    help = 'Writes a benchmark corpus of PACE .gr instances (paths, cycles, cographs, random graphs)'

    def add_arguments(self, parser):
        parser.add_argument('--dir', required=True, dest='directory')
        parser.add_argument('--family', action='append', choices=FAMILIES, dest='families',
                            help='repeatable; default: every family')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--count', type=int, default=10, help='instances per random family')
        parser.add_argument('--max-n', type=int, default=16, dest='max_n')

    def handle(self, *args, **options):
        directory = Path(options['directory'])
        directory.mkdir(parents=True, exist_ok=True)
        families = options['families'] or FAMILIES
        seed, count, max_n = options['seed'], options['count'], options['max_n']
        if max_n < 4:
            raise CommandError('--max-n must be at least 4')

        instances = []
        if 'paths' in families:
            instances += [generators.path(n) for n in range(4, max_n + 1)]
        if 'cycles' in families:
            instances += [generators.cycle(n) for n in range(5, max_n + 1)]
        if 'cographs' in families:
            instances += [generators.random_cograph(max_n, seed + i) for i in range(count)]
        if 'random' in families:
            for i in range(count):
                p = (0.2, 0.5, 0.8)[i % 3]
                instances.append(generators.gnp(min(max_n, 8), p, seed + i))

        for instance in instances:
            target = directory / f'{instance.source_name}.gr'
            target.write_bytes(render_instance(instance))
            if options['verbosity'] > 1:
                self.stdout.write(f'Wrote {target}')

        self.stdout.write(self.style.SUCCESS(f'Wrote {len(instances)} instances to {directory}'))
