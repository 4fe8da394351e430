"""
PACE 2023 twin-width exchange formats.

Instances: ``c`` comment lines, a ``p tww <n> <m>`` header, then ``m`` edge
lines ``<u> <v>`` with 1-based labels. Solutions: ``n - 1`` lines
``<survivor> <removed>``. Input is read leniently (tabs, CRLF, blank
lines); output is written bit-exact.
"""
from dataclasses import dataclass, field

from solver.exceptions import InstanceFormatError, SequenceFormatError
from solver.trigraph import ContractionPair


@dataclass(frozen=True)
class Instance:
    n: int
    edges: tuple = ()
    source_name: str = ''

    def __post_init__(self):
        if self.n < 1:
            raise InstanceFormatError(f'instances need at least one vertex, got n={self.n}')
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InstanceFormatError(f'self-loop at {u}')
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InstanceFormatError(f'edge {u} {v} out of range [1, {self.n}]')
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceFormatError(f'duplicate edge {u} {v}')
            seen.add(key)

    @property
    def m(self):
        return len(self.edges)


@dataclass
class ContractionSequence:
    pairs: list = field(default_factory=list)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, index):
        return self.pairs[index]

    def __add__(self, other):
        return ContractionSequence(list(self.pairs) + list(other))

    @classmethod
    def of(cls, *pairs):
        """Build from plain ``(survivor, removed)`` tuples."""
        return cls([ContractionPair(x, y) for x, y in pairs])


def _lines(text, error_cls=InstanceFormatError):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode('ascii')
        except UnicodeDecodeError as exc:
            raise error_cls(f'input is not ASCII: {exc}') from None
    for number, raw in enumerate(text.splitlines(), start=1):
        yield number, raw.split()


def _int_tokens(tokens, number, error_cls):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise error_cls(f'expected integers, got {" ".join(tokens)!r}', line=number) from None


def parse_instance(text, source_name=''):
    """Parse a ``.gr`` instance given as bytes or str."""
    n = m = None
    edges = []
    seen = set()
    last = 1
    for number, tokens in _lines(text):
        last = number
        if not tokens or tokens[0].startswith('c'):
            continue
        if n is None:
            if len(tokens) != 4 or tokens[0] != 'p' or tokens[1] != 'tww':
                raise InstanceFormatError('expected header "p tww <n> <m>"', line=number)
            n, m = _int_tokens(tokens[2:], number, InstanceFormatError)
            if n < 1 or m < 0:
                raise InstanceFormatError(f'invalid header counts n={n} m={m}', line=number)
            continue
        if len(tokens) != 2:
            raise InstanceFormatError(f'expected an edge "<u> <v>", got {len(tokens)} tokens', line=number)
        u, v = _int_tokens(tokens, number, InstanceFormatError)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InstanceFormatError(f'label out of range [1, {n}] in edge {u} {v}', line=number)
        if u == v:
            raise InstanceFormatError(f'self-loop at {u}', line=number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InstanceFormatError(f'duplicate edge {u} {v}', line=number)
        seen.add(key)
        edges.append((u, v))
        if len(edges) > m:
            raise InstanceFormatError(f'more than the {m} edges announced in the header', line=number)
    if n is None:
        raise InstanceFormatError('missing "p tww <n> <m>" header', line=last)
    if len(edges) != m:
        raise InstanceFormatError(f'header announces {m} edges, found {len(edges)}', line=last)
    return Instance(n=n, edges=tuple(edges), source_name=source_name)


def render_instance(instance):
    lines = [f'p tww {instance.n} {instance.m}\n']
    lines.extend(f'{u} {v}\n' for u, v in instance.edges)
    return ''.join(lines).encode('ascii')


def render_sequence(seq):
    return ''.join(f'{pair.survivor} {pair.removed}\n' for pair in seq).encode('ascii')


def parse_sequence(text, n):
    """Parse a solution for an ``n``-vertex instance; exactly ``n - 1`` pairs are required."""
    pairs = []
    for number, tokens in _lines(text, SequenceFormatError):
        if not tokens or tokens[0].startswith('c'):
            continue
        if len(tokens) != 2:
            raise SequenceFormatError(f'expected "<survivor> <removed>", got {len(tokens)} tokens', line=number)
        x, y = _int_tokens(tokens, number, SequenceFormatError)
        for label in (x, y):
            if not 1 <= label <= n:
                raise SequenceFormatError(f'label {label} out of range [1, {n}]', line=number)
        if x == y:
            raise SequenceFormatError(f'cannot contract vertex {x} with itself', line=number)
        pairs.append(ContractionPair(x, y))
    if len(pairs) != n - 1:
        raise SequenceFormatError(f'expected {n - 1} contraction lines, found {len(pairs)}')
    return ContractionSequence(pairs)
