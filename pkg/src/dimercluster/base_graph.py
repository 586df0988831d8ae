"""Planar weighted base graph attached to an orientation of the rank-n diagram.

Construction
------------
Each vertex ``i`` of the diagram becomes a *tile*: vertices ``0..n-4`` are unit
squares forming a monotone staircase (steps East/North), vertex ``n-3`` (the
branch node) becomes a 2x1 hexagonal brick, and the fork tips ``n-2``, ``n-1``
become unit squares attached to two of the brick's outer sides.  Adjacent
diagram vertices share exactly one graph edge; non-adjacent tiles share
nothing.

The staircase turns between consecutive tiles exactly when the two incident
diagram edges are oriented the same way along the path (both up-index or both
down-index); it runs straight when they oppose.  Corners are 2-colored by
parity, with the global color choice pinned by the orientation of the first
diagram edge.  Every tile's boundary then alternates between two classes of
sides — "bw" and "wb", read clockwise — and the defining compatibility holds:
the edge shared by an arrow ``i -> j`` is a bw-side of tile ``i`` and a
wb-side of tile ``j``.  The constructor verifies this invariant, the expected
vertex count ``2n + 4``, and the tile adjacency structure.

Weights
-------
Each arrow ``i -> j`` labels one boundary edge of tile ``i`` (a wb-side) with
the variable index ``j``, and one boundary edge of tile ``j`` (a bw-side)
with ``i``.  Sides are claimed clockwise starting from the side shared with
the tile's lowest-indexed neighbor; unlabeled edges weigh 1.  Boundary sides
of a tile in the same class always carry equal multiplicity in any
configuration, so the residual freedom in this rule cannot affect weights of
configurations.

Marked nodes
------------
Two corners of each fork tile are marked ("red" for ``n-1``, "blue" for
``n-2``), and for roots with a doubled entry two further corners are marked
"green" near the tile of the first doubled coordinate.  Configurations whose
support joins differently-marked corners are excluded from the flip lattice.
"""

from __future__ import annotations

BLACK = "black"
WHITE = "white"
BW = "bw"
WB = "wb"

EAST = (1, 0)
NORTH = (0, 1)


def edge_key(p, q):
    return (p, q) if p <= q else (q, p)


class Tile:
    __slots__ = ("index", "kind", "cells", "corners")

    def __init__(self, index, kind, cells, corners):
        self.index = index
        self.kind = kind  # "square" | "hexagon"
        self.cells = tuple(cells)
        self.corners = tuple(corners)  # clockwise, interior on the right

    def sides(self):
        """Directed sides (P, Q) in clockwise order."""
        c = self.corners
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]

    def edges(self):
        return [edge_key(p, q) for p, q in self.sides()]

    def center_doubled(self):
        """Interior point in doubled coordinates (never on an edge line)."""
        if self.kind == "square":
            a, b = self.cells[0]
            return (2 * a + 1, 2 * b + 1)
        (a, b), (a2, b2) = self.cells
        if a2 == a + 1:  # horizontal brick
            return (2 * a + 2, 2 * b + 1)
        return (2 * a + 1, 2 * b + 2)


def _square_corners(cell):
    a, b = cell
    return [(a, b), (a, b + 1), (a + 1, b + 1), (a + 1, b)]


def _hexagon_corners(cell, horizontal):
    a, b = cell
    if horizontal:
        # cells (a,b),(a+1,b); clockwise from the lower-left corner
        return [(a, b), (a, b + 1), (a + 1, b + 1), (a + 2, b + 1), (a + 2, b), (a + 1, b)]
    # cells (a,b),(a,b+1)
    return [(a, b), (a, b + 1), (a, b + 2), (a + 1, b + 2), (a + 1, b + 1), (a + 1, b)]


class BaseGraph:
    def __init__(self, quiver):
        self.quiver = quiver
        self.n = quiver.n
        # the first diagram edge pins the 2-coloring
        self.sigma = 0 if quiver.arrow_sign(0, 1) == 1 else 1
        self._build_tiles()
        self._index_edges()
        self._validate()
        self._assign_weights()
        self._mark_nodes()

    # ---- colors and classes -------------------------------------------------

    def color(self, v):
        return BLACK if (v[0] + v[1]) % 2 == self.sigma else WHITE

    def side_class(self, p, q):
        """Class of the directed side (p -> q) of whichever tile lists it CW."""
        return BW if self.color(p) == BLACK else WB

    def edge_class(self, edge, tile_index):
        return self._edge_class[(edge, tile_index)]

    # ---- construction ---------------------------------------------------------

    def _staircase_directions(self):
        """Step direction into tile i, for i = 1..n-3 (the last enters the brick)."""
        q = self.quiver
        dirs = {1: EAST}
        for i in range(2, self.n - 2):
            s_prev = q.arrow_sign(i - 2, i - 1)
            s_here = q.arrow_sign(i - 1, i)
            turn = s_prev == s_here
            prev = dirs[i - 1]
            dirs[i] = (NORTH if prev == EAST else EAST) if turn else prev
        return dirs

    def _build_tiles(self):
        n = self.n
        q = self.quiver
        dirs = self._staircase_directions()
        cells = {0: (0, 0)}
        for i in range(1, n - 3):
            dx, dy = dirs[i]
            cells[i] = (cells[i - 1][0] + dx, cells[i - 1][1] + dy)
        tiles = [Tile(i, "square", [cells[i]], _square_corners(cells[i])) for i in range(n - 3)]

        # the branch tile: a 2x1 brick entered by the final staircase step
        hex_dir = dirs[n - 3]
        last = cells[n - 4] if n > 4 else cells[0]
        h0 = (last[0] + hex_dir[0], last[1] + hex_dir[1])
        horizontal = hex_dir == EAST
        h1 = (h0[0] + 1, h0[1]) if horizontal else (h0[0], h0[1] + 1)
        hexagon = Tile(n - 3, "hexagon", [h0, h1], _hexagon_corners(h0, horizontal))
        tiles.append(hexagon)

        # fork tiles sit across hexagon sides chosen by arrow compatibility:
        # candidate (side index, outward cell) pairs, one pair per fork tile
        a, b = h0
        if horizontal:
            candidates = {
                n - 2: [(1, (a, b + 1)), (2, (a + 1, b + 1))],  # upper-left, upper-right
                n - 1: [(3, (a + 2, b)), (4, (a + 1, b - 1))],  # right, lower-right
            }
        else:
            candidates = {
                n - 2: [(1, (a - 1, b + 1)), (2, (a, b + 2))],  # west-high, north
                n - 1: [(3, (a + 1, b + 1)), (4, (a + 1, b))],  # east-high, east-low
            }
        hex_sides = hexagon.sides()
        for t in (n - 2, n - 1):
            sign = q.arrow_sign(n - 3, t)
            needed = BW if sign == 1 else WB  # class w.r.t. the brick (arrow tail: bw)
            chosen = None
            for side_index, cell in candidates[t]:
                if self.side_class(*hex_sides[side_index]) == needed:
                    chosen = cell
                    break
            if chosen is None:  # the two candidates have opposite classes
                raise AssertionError("no compatible brick side for fork tile %d" % t)
            tiles.append(Tile(t, "square", [chosen], _square_corners(chosen)))
        self.tiles = tiles

    def _index_edges(self):
        self.vertices = set()
        self.edge_tiles = {}
        self._edge_class = {}
        self._side_of = {}
        for tile in self.tiles:
            for p, q in tile.sides():
                self.vertices.add(p)
                self.vertices.add(q)
                e = edge_key(p, q)
                self.edge_tiles.setdefault(e, []).append(tile.index)
                self._edge_class[(e, tile.index)] = self.side_class(p, q)
        self.edges = sorted(self.edge_tiles)

    def _validate(self):
        n = self.n
        if len(self.vertices) != 2 * n + 4:
            raise AssertionError(
                "expected %d corners, built %d" % (2 * n + 4, len(self.vertices))
            )
        # tiles sharing an edge must be exactly the diagram adjacencies
        shared = {}
        for e, tiles in self.edge_tiles.items():
            if len(tiles) > 2:
                raise AssertionError("edge %r lies on %d tiles" % (e, len(tiles)))
            if len(tiles) == 2:
                pair = tuple(sorted(tiles))
                if pair in shared:
                    raise AssertionError("tiles %r share two edges" % (pair,))
                shared[pair] = e
        diagram = {tuple(sorted(a)) for a in self.quiver.arrows}
        if set(shared) != diagram:
            raise AssertionError(
                "tile adjacencies %s do not match the diagram %s"
                % (sorted(shared), sorted(diagram))
            )
        self._shared = shared
        # the defining class compatibility: arrow i -> j meets its shared edge
        # as a bw-side of tile i and a wb-side of tile j
        for t, h in self.quiver.arrows:
            e = shared[tuple(sorted((t, h)))]
            if self.edge_class(e, t) != BW or self.edge_class(e, h) != WB:
                raise AssertionError("arrow %d->%d violates side classes" % (t, h))

    def shared_edge(self, i, j):
        return self._shared[tuple(sorted((i, j)))]

    def boundary_edges(self, tile_index):
        return [e for e in self.tiles[tile_index].edges() if len(self.edge_tiles[e]) == 1]

    def tile_class_edges(self, tile_index, cls):
        """All edges of the tile (interior and boundary) with the given class."""
        return [
            e
            for e in self.tiles[tile_index].edges()
            if self._edge_class[(e, tile_index)] == cls
        ]

    # ---- weights ---------------------------------------------------------------

    def _assign_weights(self):
        weights = {}
        for tile in self.tiles:
            i = tile.index
            neighbors = self.quiver.neighbors(i)
            if not neighbors:
                continue
            start_edge = self.shared_edge(i, neighbors[0])
            tile_edges = tile.edges()
            start = tile_edges.index(start_edge)
            ring = tile_edges[start:] + tile_edges[:start]
            for j in neighbors:
                needed = WB if self.quiver.arrow_sign(i, j) == 1 else BW
                for e in ring:
                    if len(self.edge_tiles[e]) != 1:
                        continue
                    if self._edge_class[(e, i)] != needed or e in weights:
                        continue
                    weights[e] = j
                    break
                else:
                    raise AssertionError(
                        "no free %s-side on tile %d for neighbor %d" % (needed, i, j)
                    )
        self.edge_weights = weights

    # ---- marked nodes ------------------------------------------------------------

    def _mark_nodes(self):
        hex_corners = set(self.tiles[self.n - 3].corners)
        self.red_nodes = frozenset(
            v for v in self.tiles[self.n - 1].corners if v not in hex_corners
        )
        self.blue_nodes = frozenset(
            v for v in self.tiles[self.n - 2].corners if v not in hex_corners
        )

    def green_nodes(self, d):
        """Marked corners for the first doubled coordinate of d (empty if none)."""
        doubled = [i for i, x in enumerate(d) if x == 2]
        if not doubled:
            return frozenset()
        j = min(doubled)
        tiles = self.tiles
        if j == 1:
            drop = set(tiles[1].corners)
            return frozenset(v for v in tiles[0].corners if v not in drop)
        dirs = self._staircase_directions()
        if dirs[j - 1] == dirs[j]:  # straight: the side facing away from tile j
            drop = set(tiles[j].corners)
            return frozenset(v for v in tiles[j - 1].corners if v not in drop)
        # zig-zag: the end of the (j-2, j-1) shared edge that avoids tile j, plus
        # its diagonal opposite within tile j-2
        shared = set(tiles[j - 2].corners) & set(tiles[j - 1].corners)
        away = shared - set(tiles[j].corners)
        if len(away) != 1:
            raise AssertionError("zig-zag at %d has no unique corner away from tile j" % j)
        (y,) = away
        (a, b) = tiles[j - 2].cells[0]
        z = (2 * a + 1 - y[0], 2 * b + 1 - y[1])
        return frozenset({y, z})

    def node_labels(self, d):
        labels = {}
        for v in self.red_nodes:
            labels[v] = "red"
        for v in self.blue_nodes:
            labels[v] = "blue"
        for v in self.green_nodes(d):
            if v in labels:
                raise AssertionError("corner %r marked twice" % (v,))
            labels[v] = "green"
        return labels

    # ---- rendering -----------------------------------------------------------------

    def describe(self):
        lines = ["tiles:"]
        for tile in self.tiles:
            lines.append(
                "  %d %s cells=%s corners=%s"
                % (tile.index, tile.kind, list(tile.cells), list(tile.corners))
            )
        lines.append("edges (weight 1 unless noted):")
        for e in self.edges:
            tiles = ",".join(str(t) for t in self.edge_tiles[e])
            w = self.edge_weights.get(e)
            note = " weight=x%d" % w if w is not None else ""
            lines.append("  %s -- %s  tiles=%s%s" % (e[0], e[1], tiles, note))
        lines.append(
            "marked: red=%s blue=%s" % (sorted(self.red_nodes), sorted(self.blue_nodes))
        )
        return "\n".join(lines)

    def to_dot(self, d=None):
        labels = self.node_labels(d) if d is not None else {}
        out = ["graph basegraph {"]
        for v in sorted(self.vertices):
            color = labels.get(v)
            attrs = ' [color=%s, style=filled]' % color if color else ""
            out.append('  "%s,%s"%s;' % (v[0], v[1], attrs))
        for e in self.edges:
            w = self.edge_weights.get(e)
            label = ' [label="x%d"]' % w if w is not None else ""
            out.append('  "%s,%s" -- "%s,%s"%s;' % (e[0][0], e[0][1], e[1][0], e[1][1], label))
        out.append("}")
        return "\n".join(out)
