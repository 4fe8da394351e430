"""
Track drivers behind the ``tww`` management command.

Every mode returns a ``RunOutcome``: the exit status and the exact standard
output payload. Diagnostics travel separately so the command can keep
standard output clean for PACE-style evaluation.
"""
import csv
import io
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from solver import conf
from solver.budget import Deadline, TerminationWatcher
from solver.exact import ExactConfig, SolveResult, solve_exact
from solver.exceptions import SolverFailure, TwinWidthError
from solver.heuristic import PerturbParams, hill_climb
from solver.pace_io import parse_instance, parse_sequence, render_sequence
from solver.preprocess import eliminate_twins
from solver.reference import oracle_twinwidth, verify_sequence
from solver.trigraph import Trigraph

logger = logging.getLogger(__name__)

MODES = ('exact', 'heuristic', 'verify', 'oracle', 'bench')
CSV_HEADER = ['name', 'n', 'm', 'width', 'optimal', 'elapsed_ms', 'stage']


@dataclass
class RunConfig:
    mode: str
    input: str = '-'
    solution: str = None
    time_limit: float = None
    seed: int = None
    lb_budget_fraction: float = None
    memory_cap: int = None
    emit_width: bool = False
    oracle_cap: int = None
    iterations: int = None
    batch_size: int = None
    directory: str = None
    csv_path: str = None
    track: str = 'exact'
    record: bool = False
    compare: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise TwinWidthError(f'unknown mode {self.mode!r}')
        if self.time_limit is None:
            track = self.track if self.mode == 'bench' else self.mode
            key = 'HEURISTIC_TIME_LIMIT' if track == 'heuristic' else 'EXACT_TIME_LIMIT'
            self.time_limit = conf.get(key)
        if self.time_limit < 0 or (self.time_limit == 0 and self.mode != 'heuristic'):
            raise TwinWidthError(f'time limit must be positive, got {self.time_limit}')
        if self.seed is None:
            self.seed = conf.get('DEFAULT_SEED')
        if self.lb_budget_fraction is None:
            self.lb_budget_fraction = conf.get('LB_BUDGET_FRACTION')
        if not 0.0 <= self.lb_budget_fraction <= 0.5:
            raise TwinWidthError(f'lower-bound budget fraction must lie in [0, 0.5], got {self.lb_budget_fraction}')
        if self.memory_cap is None:
            self.memory_cap = conf.get('MEMORY_CAP')
        if self.batch_size is None:
            self.batch_size = conf.get('HILL_CLIMB_BATCH_SIZE')

    def deadline(self):
        return Deadline(self.time_limit, margin=conf.get('TIME_SAFETY_MARGIN'))

    def exact_config(self):
        overrides = {
            'seed': self.seed,
            'lb_budget_fraction': self.lb_budget_fraction,
            'memory_cap': self.memory_cap,
            'batch_size': self.batch_size,
        }
        if self.iterations is not None:
            overrides['ub_max_batches'] = self.iterations
            overrides['component_batches'] = self.iterations
        return ExactConfig.from_settings(**overrides)

    def perturb_params(self):
        return PerturbParams(self.batch_size, self.seed, None, self.iterations)


@dataclass
class RunOutcome:
    status: int
    payload: str = ''
    diagnostics: list = field(default_factory=list)


class _BestSoFar:
    """Holds the latest complete hill-climbing solution; replaced whole, never edited."""

    def __init__(self):
        self.solution = None

    def update(self, solution):
        self.solution = solution


def _read(path, stdin=None):
    if path in (None, '-'):
        stream = stdin if stdin is not None else sys.stdin
        return getattr(stream, 'buffer', stream).read()
    return Path(path).read_bytes()


def load_instance(path, stdin=None):
    name = 'stdin' if path in (None, '-') else Path(path).name
    return parse_instance(_read(path, stdin), source_name=name)


def solve_heuristic(instance, config, deadline):
    """Greedy seed at once, then hill climbing until the deadline; always holds a complete answer."""
    started = time.monotonic()
    reduced, prelude = eliminate_twins(Trigraph.from_instance(instance))
    best = _BestSoFar()
    hill_climb(reduced, config.perturb_params(), deadline=deadline, on_improve=best.update)
    seq = prelude + best.solution.seq
    width = best.solution.width
    stage = 'preprocess' if len(reduced) == 1 else 'hill-climb'
    return SolveResult(width, seq, stage, time.monotonic() - started, optimal=width == 0)


def _solve(instance, config, track, deadline):
    if track == 'heuristic':
        return solve_heuristic(instance, config, deadline)
    return solve_exact(instance, config.exact_config(), deadline)


def _checked(instance, result):
    report = verify_sequence(instance, result.seq)
    if report.width != result.width:
        raise SolverFailure(f'sequence replays to width {report.width}, solver reported {result.width}')
    return result


def run_track(config, stdin=None):
    instance = load_instance(config.input, stdin)
    deadline = config.deadline()
    with TerminationWatcher(deadline):
        result = _checked(instance, _solve(instance, config, config.mode, deadline))
    diagnostics = []
    if config.emit_width:
        diagnostics.append(f'c width {result.width} ({result.stage_provenance}, {result.elapsed:.3f}s)')
    return RunOutcome(0, render_sequence(result.seq).decode('ascii'), diagnostics)


def run_verify(config, stdin=None):
    if not config.solution:
        raise TwinWidthError('verify needs --solution PATH')
    instance = load_instance(config.input, stdin)
    seq = parse_sequence(_read(config.solution, stdin), instance.n)
    report = verify_sequence(instance, seq)
    return RunOutcome(0, f'{report.width}\n')


def run_oracle(config, stdin=None):
    instance = load_instance(config.input, stdin)
    width, witness = oracle_twinwidth(instance, cap=config.oracle_cap)
    return RunOutcome(0, f'{width}\n' + render_sequence(witness).decode('ascii'))


def _bench_row(path, config, track):
    instance = parse_instance(path.read_bytes(), source_name=path.name)
    deadline = config.deadline()
    started = time.monotonic()
    try:
        with TerminationWatcher(deadline):
            result = _solve(instance, config, track, deadline)
    except SolverFailure as exc:
        logger.warning('%s: %s', path.name, exc)
        elapsed_ms = round((time.monotonic() - started) * 1000)
        return {'name': path.name, 'n': instance.n, 'm': instance.m, 'width': None, 'optimal': False,
                'elapsed_ms': elapsed_ms, 'stage': 'failed', 'verified': False}
    report = verify_sequence(instance, result.seq)
    return {'name': path.name, 'n': instance.n, 'm': instance.m, 'width': result.width,
            'optimal': result.optimal, 'elapsed_ms': round(result.elapsed * 1000),
            'stage': result.stage_provenance, 'verified': report.width == result.width}


def run_bench(config, stdin=None):
    """Solve every ``*.gr`` file of a directory, verify each answer, one CSV row per instance."""
    if not config.directory:
        raise TwinWidthError('bench needs --dir PATH')
    directory = Path(config.directory)
    paths = sorted(directory.glob('*.gr'))
    if not paths:
        raise TwinWidthError(f'no .gr instances in {directory}')

    rows = [_bench_row(path, config, config.track) for path in paths]
    diagnostics = []
    fraction = None
    if config.compare and config.track == 'heuristic':
        exact_rows = [_bench_row(path, config, 'exact') for path in paths]
        matched = [h['width'] == e['width'] for h, e in zip(rows, exact_rows)
                   if h['width'] is not None and e['width'] is not None]
        if matched:
            fraction = sum(matched) / len(matched)
            diagnostics.append(f'c heuristic matched the exact width on {sum(matched)}/{len(matched)} instances')

    if config.record:
        _record(config, rows, fraction)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        width = '' if row['width'] is None else row['width']
        writer.writerow([row['name'], row['n'], row['m'], width, int(row['optimal']), row['elapsed_ms'], row['stage']])
    table = buffer.getvalue()

    unverified = [row['name'] for row in rows if row['width'] is not None and not row['verified']]
    if unverified:
        raise SolverFailure(f'sequences failed verification: {", ".join(unverified)}')

    if config.csv_path:
        Path(config.csv_path).write_text(table)
        diagnostics.append(f'c wrote {len(rows)} rows to {config.csv_path}')
        return RunOutcome(0, '', diagnostics)
    return RunOutcome(0, table, diagnostics)


def _record(config, rows, fraction):
    from solver.models import BenchResult, BenchRun

    run = BenchRun.objects.create(
        track=config.track,
        directory=str(config.directory),
        seed=config.seed,
        time_limit=config.time_limit,
        heuristic_optimal_fraction=fraction,
    )
    BenchResult.objects.bulk_create(BenchResult(run=run, **row) for row in rows)
    return run


def run(config, stdin=None):
    handlers = {
        'exact': run_track,
        'heuristic': run_track,
        'verify': run_verify,
        'oracle': run_oracle,
        'bench': run_bench,
    }
    return handlers[config.mode](config, stdin)
