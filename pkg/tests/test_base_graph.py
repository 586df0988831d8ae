"""Unit tests for base-graph geometry, weights, and marked nodes.

The three frozen instances were laid out fully by hand: tile positions,
2-coloring, side classes, weight labels, and marked corners.  [DERIVED]
unless noted.
"""

import pytest

from dimercluster.base_graph import BW, WB, BaseGraph, edge_key
from dimercluster.quiver_core import Quiver, all_orientations

from frozen import D5, D6, QA, QB, QC


def E(p, q):
    return edge_key(tuple(p), tuple(q))


@pytest.fixture(scope="module")
def ga():
    return BaseGraph(QA)


@pytest.fixture(scope="module")
def gc():
    return BaseGraph(QC)


# ---- frozen rank-5 geometry ---------------------------------------------------


def test_rank5_tile_layout(gc):
    kinds = [t.kind for t in gc.tiles]
    assert kinds == ["square", "square", "hexagon", "square", "square"]
    cells = [list(t.cells) for t in gc.tiles]
    assert cells[0] == [(0, 0)]
    assert cells[1] == [(1, 0)]
    assert cells[2] == [(1, 1), (1, 2)]  # vertical brick
    assert cells[3] == [(1, 3)]  # north of the brick
    assert cells[4] == [(2, 2)]  # east-high of the brick
    assert gc.sigma == 1


def test_rank5_weights(gc):
    expected = {
        E((0, 0), (1, 0)): 1,  # south of tile 0
        E((2, 0), (1, 0)): 0,  # south of tile 1
        E((2, 1), (2, 0)): 2,  # east of tile 1
        E((1, 1), (1, 2)): 1,  # brick west-low
        E((1, 2), (1, 3)): 3,  # brick west-high
        E((2, 2), (2, 1)): 4,  # brick east-low
        E((1, 3), (1, 4)): 2,  # west of tile 3
        E((2, 3), (3, 3)): 2,  # north of tile 4
    }
    assert gc.edge_weights == expected


def test_rank5_marked_nodes(gc):
    assert gc.red_nodes == {(3, 2), (3, 3)}
    assert gc.blue_nodes == {(1, 4), (2, 4)}
    assert gc.green_nodes(D5) == {(1, 0), (0, 1)}  # zig-zag case
    assert gc.green_nodes((0, 1, 1, 0, 1)) == frozenset()


# ---- frozen rank-6 geometry -----------------------------------------------------


def test_rank6_tile_layout(ga):
    cells = [list(t.cells) for t in ga.tiles]
    assert cells[0] == [(0, 0)]
    assert cells[1] == [(1, 0)]
    assert cells[2] == [(1, 1)]
    assert cells[3] == [(2, 1), (3, 1)]  # horizontal brick
    assert cells[4] == [(2, 2)]  # upper-left of the brick
    assert cells[5] == [(3, 0)]  # lower-right of the brick
    assert ga.sigma == 1
    assert ga.tiles[3].kind == "hexagon"


def test_rank6_weights(ga):
    expected = {
        E((0, 0), (1, 0)): 1,  # south of tile 0
        E((2, 0), (1, 0)): 0,  # south of tile 1
        E((2, 1), (2, 0)): 2,  # east of tile 1
        E((1, 1), (1, 2)): 1,  # west of tile 2
        E((1, 2), (2, 2)): 3,  # north of tile 2
        E((4, 2), (4, 1)): 2,  # brick right side
        E((3, 2), (4, 2)): 4,  # brick upper-right side
        E((3, 1), (2, 1)): 5,  # brick lower-left side
        E((2, 2), (2, 3)): 3,  # west of tile 4
        E((4, 1), (4, 0)): 3,  # east of tile 5
    }
    assert ga.edge_weights == expected


def test_rank6_marked_nodes(ga):
    assert ga.red_nodes == {(3, 0), (4, 0)}
    assert ga.blue_nodes == {(2, 3), (3, 3)}
    assert ga.green_nodes(D6) == {(1, 0), (0, 1)}


def test_rank6_branch_heavy_variant():
    g = BaseGraph(QB)
    # first arrow 0 <- 1 flips the coloring relative to the diagram start
    assert g.sigma == 1
    # same staircase length, but the fork tiles land on different brick sides
    assert [t.kind for t in g.tiles] == ["square"] * 3 + ["hexagon", "square", "square"]


# ---- structural invariants across all orientations -------------------------------


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_structure_all_orientations(n):
    for q in all_orientations(n):
        g = BaseGraph(q)  # constructor runs the class/adjacency validations
        assert len(g.vertices) == 2 * n + 4
        # every tile alternates side classes around its boundary
        for tile in g.tiles:
            sides = tile.sides()
            classes = [g.side_class(p, qq) for p, qq in sides]
            assert all(
                classes[i] != classes[(i + 1) % len(classes)]
                for i in range(len(classes))
            )
        # every arrow contributed two weight labels
        assert len(g.edge_weights) == 2 * len(q.arrows)
        # weights sit on boundary edges only
        for e in g.edge_weights:
            assert len(g.edge_tiles[e]) == 1
        # marked corners are disjoint and live on the graph
        labels = g.node_labels(tuple(2 if i == n - 3 else 1 for i in range(n)))
        assert set(labels) <= g.vertices


def test_hexagon_class_counts():
    # the brick always offers exactly 3 bw and 3 wb sides
    for q in all_orientations(5):
        g = BaseGraph(q)
        hexa = g.tiles[2]
        classes = [g.side_class(p, qq) for p, qq in hexa.sides()]
        assert classes.count(BW) == 3 and classes.count(WB) == 3


def test_describe_and_dot_render(gc):
    text = gc.describe()
    assert "hexagon" in text and "weight=x3" in text
    dot = gc.to_dot(D5)
    assert dot.startswith("graph basegraph {")
    assert "color=green" in dot and "color=red" in dot
