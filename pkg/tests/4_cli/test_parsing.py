import pytest

from tuttekit.cli import parse_input, parse_text
from tuttekit.errors import InvalidBases, ParseError
from tuttekit.graphs import Multigraph
from tuttekit.matroid import make_uniform

K3_TEXT = """\
# a triangle
graph 3 3
0 1
0 2
1 2   # last edge
"""


def test_graph():
    assert parse_text(K3_TEXT) == Multigraph(3, ((0, 1), (0, 2), (1, 2)))


def test_graph_with_loops_and_parallel_edges():
    graph = parse_text('graph 2 3\n0 1\n1 0\n1 1\n')
    assert graph.edges == ((0, 1), (1, 0), (1, 1))


def test_uniform():
    matroid = parse_text('matroid 4\nuniform 2\n')
    assert matroid.same_as(make_uniform(2, 4))


def test_bases():
    matroid = parse_text('matroid 3\nbases\n0 1\n0 2\n1 2\n')
    assert matroid.same_as(make_uniform(2, 3))


def test_empty_base():
    matroid = parse_text('matroid 2\nbases\n-\n')
    assert matroid.r == 0


def test_invalid_bases_are_not_parse_errors():
    with pytest.raises(InvalidBases):
        parse_text('matroid 4\nbases\n0 1\n2 3\n')


@pytest.mark.parametrize('text, line', [
    ('graph 3 2\n0 1\n', 2),
    ('graph 3 1\n0 1\n1 2\n', 3),
    ('graph 2 1\n0 5\n', 2),
    ('graph 2 1\n0 x\n', 2),
    ('graph 2 1\n0 1 1\n', 2),
    ('graph -1 0\n', 1),
    ('matroid 3\nuniform 2 1\n', 2),
    ('matroid 3\nbases\n0 3\n', 3),
    ('matroid 3\nbases\n0 0\n', 3),
    ('matroid 3\nrandom\n', 2),
    ('\n\nhypergraph 3\n', 3),
])
def test_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_text(text)
    assert info.value.line == line
    assert str(info.value).startswith(f'line {line}:')


def test_empty_input():
    with pytest.raises(ParseError):
        parse_text('# nothing here\n')


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        parse_input(str(tmp_path / 'absent.txt'))


def test_stdin(monkeypatch):
    import io
    monkeypatch.setattr('sys.stdin', io.StringIO(K3_TEXT))
    assert parse_input('-').m == 3
