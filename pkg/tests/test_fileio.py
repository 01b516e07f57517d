"""Gain-graph text format: parsing, writing, diagnostics."""
import cmath
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gainspectra import fileio
from gainspectra.gains import random_gains
from gainspectra.graphs import random_connected_graph


def test_example_document():
    phi = fileio.loads("graph 3\nedge 0 1 i\nedge 1 2 i\nedge 0 2 rect:0,-1\n")
    assert phi.gain(0, 1) == 1j and phi.gain(1, 2) == 1j
    assert phi.gain(0, 2) == -1j


def test_symbolic_round_trip_exact():
    text = "graph 3\nedge 0 1 i\nedge 0 2 -i\nedge 1 2 -1\n"
    assert fileio.dumps(fileio.loads(text)) == text


def test_round_trip_random_gains():
    rng = random.Random(14)
    for s in range(40):
        g = random_connected_graph(rng, rng.randrange(1, 10), rng.randrange(0, 6))
        phi = random_gains(g, s)
        back = fileio.loads(fileio.dumps(phi))
        assert back.graph == phi.graph
        for u, v in g.edge_list:
            assert abs(back.gain(u, v) - phi.gain(u, v)) < 1e-12


def test_comments_and_blank_lines():
    phi = fileio.loads("\n# header\ngraph 2\n\nedge 0 1 polar:0.5 # tail\n")
    assert abs(phi.gain(0, 1) - cmath.exp(0.5j)) < 1e-15


@pytest.mark.parametrize("text,fragment", [
    ("graph 2\nedge 0 5 1\n", "line 2"),
    ("edge 0 1 1\n", "line 1"),
    ("graph 2\nedge 0 1 2\n", "unrecognized gain"),
    ("graph 2\nedge 0 1 rect:0.6,0.7\n", "modulus"),
    ("graph 2\nedge 0 1 1\nedge 1 0 1\n", "duplicate edge"),
    ("graph 2\ngraph 3\n", "duplicate graph"),
    ("graph 2\nedge 0 0 1\n", "loop"),
    ("graph 2\nbogus 1\n", "unknown directive"),
    ("", "missing graph"),
    ("graph 2\nedge 0 1 polar:abc\n", "bad polar"),
    ("graph 2\nedge 0 1\n", "expected"),
    ("graph -1\n", "nonnegative"),
])
def test_error_diagnostics(text, fragment):
    with pytest.raises(fileio.FileFormatError, match=fragment):
        fileio.loads(text)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-3.15, 3.15), min_size=1, max_size=6))
def test_polar_gains_round_trip(angles):
    lines = [f"graph {len(angles) + 1}"]
    for i, theta in enumerate(angles):
        lines.append(f"edge {i} {i + 1} polar:{theta!r}")
    phi = fileio.loads("\n".join(lines))
    back = fileio.loads(fileio.dumps(phi))
    for i, theta in enumerate(angles):
        assert abs(back.gain(i, i + 1) - cmath.exp(1j * theta)) < 1e-12
