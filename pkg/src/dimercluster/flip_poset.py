"""The poset of monochromatic configurations under flips.

Elements are exponent vectors (each standing for its configuration), built by
breadth-first search upward from the minimal matching: a flip at tile i moves
from e to e + unit_i when every bw-side of the tile is present, and the
resulting configuration joins the poset only if its support keeps
differently-marked corners apart.  Excluded configurations are remembered but
never expanded.

The order is the reflexive-transitive closure of the recorded covers, which
coincides with coordinatewise comparison of exponent vectors.  Meets and joins
are computed order-theoretically (principal-ideal comparison over bitmasks);
they equal coordinatewise min/max exactly when those vectors are themselves
members, and drop past them otherwise (the source of pentagon sublattices).
"""

from __future__ import annotations

from dimercluster.base_graph import BaseGraph
from dimercluster.mixed_dimer import (
    config_from_e,
    count_cycles,
    flip,
    is_flippable,
    is_monochromatic,
    minimal_matching,
)


def _graded(e):
    return (sum(e), e)


class FlipPoset:
    def __init__(self, quiver, d, graph=None):
        self.quiver = quiver
        self.d = tuple(int(x) for x in d)
        self.graph = graph if graph is not None else BaseGraph(quiver)
        self._build()
        self._close_order()

    # ---- construction -------------------------------------------------------

    def _build(self):
        graph, d = self.graph, self.d
        n = graph.n
        bottom = (0,) * n
        start = minimal_matching(graph, d)
        if not is_monochromatic(graph, d, start):
            raise AssertionError("minimal matching joins marked corners")
        self.configs = {bottom: start}
        self.excluded = set()
        cover_sets = {bottom: set()}
        frontier = [bottom]
        while frontier:
            nxt = []
            for e in frontier:
                config = self.configs[e]
                for i in range(n):
                    if not is_flippable(graph, d, config, i):
                        continue
                    e2 = tuple(x + (k == i) for k, x in enumerate(e))
                    if e2 in self.excluded:
                        continue
                    if e2 not in self.configs:
                        config2 = flip(graph, config, i)
                        # the flip result must match the closed form
                        if config2 != config_from_e(graph, d, e2):
                            raise AssertionError(
                                "flip at %d from %r disagrees with the closed form" % (i, e)
                            )
                        if not is_monochromatic(graph, d, config2):
                            self.excluded.add(e2)
                            continue
                        self.configs[e2] = config2
                        cover_sets[e2] = set()
                        nxt.append(e2)
                    cover_sets[e].add(e2)
            frontier = nxt
        self.elements = sorted(self.configs, key=_graded)
        self.covers = {e: sorted(cover_sets[e], key=_graded) for e in self.elements}
        self.bottom = bottom

    def _close_order(self):
        index = {e: k for k, e in enumerate(self.elements)}
        self._index = index
        m = len(self.elements)
        parents = {e: [] for e in self.elements}
        for u, ups in self.covers.items():
            for v in ups:
                parents[v].append(u)
        down = [0] * m
        for k, e in enumerate(self.elements):  # ascending rank order
            mask = 1 << k
            for u in parents[e]:
                mask |= down[index[u]]
            down[k] = mask
        up = [0] * m
        for k in range(m - 1, -1, -1):
            mask = 1 << k
            for v in self.covers[self.elements[k]]:
                mask |= up[index[v]]
            up[k] = mask
        self._down = down
        self._up = up

    # ---- order queries ---------------------------------------------------------

    def index(self, e):
        return self._index[tuple(e)]

    def leq(self, u, v):
        return bool(self._down[self.index(v)] >> self.index(u) & 1)

    def rank(self, e):
        return sum(e)

    def _bound(self, masks, u, v):
        common = masks[self.index(u)] & masks[self.index(v)]
        k = common
        while k:
            low = (k & -k).bit_length() - 1
            if masks[low] == common:
                return self.elements[low]
            k &= k - 1
        return None

    def meet(self, u, v):
        """Greatest common lower bound, or None."""
        return self._bound(self._down, u, v)

    def join(self, u, v):
        """Least common upper bound, or None."""
        return self._bound(self._up, u, v)

    def is_lattice(self):
        """(True, None) or (False, offending pair)."""
        for a in self.elements:
            for b in self.elements:
                if a < b and (self.meet(a, b) is None or self.join(a, b) is None):
                    return False, (a, b)
        return True, None

    def require_lattice(self):
        ok, pair = self.is_lattice()
        if not ok:
            raise ValueError("not a lattice: %r and %r have no meet or join" % pair)

    def is_distributive(self):
        self.require_lattice()
        for x in self.elements:
            for y in self.elements:
                for z in self.elements:
                    lhs = self.meet(x, self.join(y, z))
                    rhs = self.join(self.meet(x, y), self.meet(x, z))
                    if lhs != rhs:
                        return False
        return True

    # ---- forbidden-sublattice witnesses ------------------------------------------

    def n5_witness(self):
        """A pentagon: u < v, w incomparable to both, equal meets and joins."""
        self.require_lattice()
        for u in self.elements:
            for v in self.elements:
                if u == v or not self.leq(u, v):
                    continue
                for w in self.elements:
                    if self.leq(w, u) or self.leq(u, w) or self.leq(w, v) or self.leq(v, w):
                        continue
                    if self.meet(u, w) == self.meet(v, w) and self.join(u, w) == self.join(v, w):
                        return {
                            "u": u,
                            "v": v,
                            "w": w,
                            "meet": self.meet(u, w),
                            "join": self.join(u, w),
                        }
        return None

    def m3_witness(self):
        """A diamond: three pairwise-incomparable elements with one common
        meet and one common join."""
        self.require_lattice()
        els = self.elements
        for i, x in enumerate(els):
            for j in range(i + 1, len(els)):
                y = els[j]
                if self.leq(x, y) or self.leq(y, x):
                    continue
                mxy, jxy = self.meet(x, y), self.join(x, y)
                for k in range(j + 1, len(els)):
                    z = els[k]
                    if self.leq(x, z) or self.leq(z, x) or self.leq(y, z) or self.leq(z, y):
                        continue
                    if (
                        self.meet(x, z) == mxy
                        and self.meet(y, z) == mxy
                        and self.join(x, z) == jxy
                        and self.join(y, z) == jxy
                    ):
                        return {"x": x, "y": y, "z": z, "meet": mxy, "join": jxy}
        return None

    # ---- derived data ---------------------------------------------------------------

    def coefficients(self):
        """e -> 2^(number of cycle components of its configuration)."""
        return {e: 2 ** count_cycles(cfg) for e, cfg in self.configs.items()}

    def hasse_dot(self):
        out = ["digraph hasse {", "  rankdir=BT;"]
        for e in self.elements:
            out.append('  "%s";' % ",".join(map(str, e)))
        for u, ups in self.covers.items():
            for v in ups:
                out.append(
                    '  "%s" -> "%s";'
                    % (",".join(map(str, u)), ",".join(map(str, v)))
                )
        out.append("}")
        return "\n".join(out)
