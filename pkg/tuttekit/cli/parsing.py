"""Readers for the graph and matroid text formats.

Graph files::

    graph <n> <m>
    <u> <v>            # m lines, 0-indexed endpoints, in ground-set order

Matroid files::

    matroid <n>
    uniform <r>

or::

    matroid <n>
    bases
    0 1                # one base per line; '-' is the empty base

Blank lines and anything after `#` are ignored.
"""
import sys
from typing import List, Tuple, Union

from tuttekit.errors import ParseError
from tuttekit.graphs import Multigraph
from tuttekit.helpers import mask_of
from tuttekit.matroid import Matroid, make_from_bases, make_uniform

Line = Tuple[int, List[str]]


def _content_lines(text: str) -> List[Line]:
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if tokens:
            result.append((number, tokens))
    return result


def _integer(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError as ex:
        raise ParseError(f'{what} must be an integer, got {token!r}',
                         line) from ex
    if value < 0:
        raise ParseError(f'{what} must be nonnegative, got {value}', line)
    return value


def _expect_arity(tokens: List[str], count: int, line: int, shape: str):
    if len(tokens) != count:
        raise ParseError(f'expected "{shape}", got {" ".join(tokens)!r}',
                         line)


def _parse_graph(lines: List[Line]) -> Multigraph:
    line, header = lines[0]
    _expect_arity(header, 3, line, 'graph <n> <m>')
    n = _integer(header[1], line, 'vertex count')
    m = _integer(header[2], line, 'edge count')
    body = lines[1:]
    if len(body) < m:
        last = body[-1][0] if body else line
        raise ParseError(f'expected {m} edges, found {len(body)}', last)
    if len(body) > m:
        raise ParseError(f'more than the declared {m} edges', body[m][0])

    edges = []
    for line, tokens in body:
        _expect_arity(tokens, 2, line, '<u> <v>')
        u = _integer(tokens[0], line, 'endpoint')
        v = _integer(tokens[1], line, 'endpoint')
        for w in (u, v):
            if w >= n:
                raise ParseError(
                    f'endpoint {w} out of range for {n} vertices', line
                )
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def _parse_base(tokens: List[str], n: int, line: int) -> int:
    if tokens == ['-']:
        return 0
    items = [_integer(t, line, 'element') for t in tokens]
    for e in items:
        if e >= n:
            raise ParseError(f'element {e} out of range for {n} elements',
                             line)
    if len(set(items)) != len(items):
        raise ParseError(f'repeated element in base {" ".join(tokens)}',
                         line)
    return mask_of(items)


def _parse_matroid(lines: List[Line]) -> Matroid:
    line, header = lines[0]
    _expect_arity(header, 2, line, 'matroid <n>')
    n = _integer(header[1], line, 'ground set size')
    if len(lines) < 2:
        raise ParseError('expected "uniform <r>" or "bases"', line)

    line, kind = lines[1]
    if kind[0] == 'uniform':
        _expect_arity(kind, 2, line, 'uniform <r>')
        if len(lines) > 2:
            raise ParseError('unexpected content after uniform', lines[2][0])
        return make_uniform(_integer(kind[1], line, 'rank'), n)
    if kind[0] == 'bases':
        _expect_arity(kind, 1, line, 'bases')
        bases = [_parse_base(tokens, n, number)
                 for number, tokens in lines[2:]]
        return make_from_bases(n, bases)
    raise ParseError(f'expected "uniform <r>" or "bases", got {kind[0]!r}',
                     line)


def parse_text(text: str) -> Union[Multigraph, Matroid]:
    """Parses a graph or matroid description.

    Raises:
        ParseError: Malformed input; the message names the line.
        InvalidBases: The bases do not define a matroid.

    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError('empty input')
    keyword = lines[0][1][0]
    if keyword == 'graph':
        return _parse_graph(lines)
    if keyword == 'matroid':
        return _parse_matroid(lines)
    raise ParseError(f'expected "graph" or "matroid", got {keyword!r}',
                     lines[0][0])


def parse_input(path: str) -> Union[Multigraph, Matroid]:
    """Reads and parses `path`; `-` reads standard input."""
    if path == '-':
        return parse_text(sys.stdin.read())
    try:
        with open(path, 'r') as fh:
            text = fh.read()
    except OSError as ex:
        raise ParseError(f'cannot read {path}: {ex.strerror}') from ex
    return parse_text(text)
