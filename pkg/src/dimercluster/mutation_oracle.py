"""Cluster variables by direct seed mutation with principal coefficients.

This module is one of two independent routes to every F-polynomial, g-vector,
and Laurent expansion in the package; it never consults the dimer model.

A seed holds the current cluster (n Laurent polynomials in the initial
variables ``x0..x{n-1}`` and coefficients ``y0..y{n-1}``) together with the
extended exchange matrix: a ``2n x n`` integer matrix whose top square block
describes the current quiver and whose bottom block tracks coefficients
(initially the identity).  The top block of the *initial* seed is chosen so
that mutating at a sink ``k`` of the quiver produces
``(y_k + prod_{j->k} x_j) / x_k``; with the package-wide sign convention
``b[i][j] = +1 for i -> j`` that means the top block starts as ``-B``.

Extraction of invariants from a Laurent expansion ``L`` is
convention-independent: the g-vector is the x-exponent of the unique
coefficient-free term (y-part zero), and the F-polynomial is ``L`` with every
``x_i`` set to 1.
"""

from __future__ import annotations

import os

import numpy as np

from dimercluster.laurent_poly import LaurentPolynomial, divide_exact, u_context, xy_context
from dimercluster.quiver_core import positive_roots

DEFAULT_SEED_BUDGET = 100000
SEED_BUDGET_ENV = "DIMERCLUSTER_SEED_BUDGET"


class Seed:
    __slots__ = ("cluster", "ext")

    def __init__(self, cluster, ext):
        self.cluster = tuple(cluster)
        self.ext = ext  # (2n, n) int array; treat as immutable

    @property
    def n(self):
        return len(self.cluster)


def initial_seed(quiver):
    n = quiver.n
    ctx = xy_context(n)
    cluster = [LaurentPolynomial.variable(ctx, "x%d" % i) for i in range(n)]
    ext = np.zeros((2 * n, n), dtype=int)
    ext[:n, :] = -quiver.exchange_matrix()
    ext[n:, :] = np.eye(n, dtype=int)
    return Seed(cluster, ext)


def mutate_ext(ext, k):
    """Matrix mutation at column/row k, applied to all 2n rows."""
    rows, n = ext.shape
    out = ext.copy()
    col_k = ext[:, k]
    row_k = ext[k, :]
    for i in range(rows):
        bik = col_k[i]
        if not bik:
            continue
        s = 1 if bik > 0 else -1
        for j in range(n):
            if i == k or j == k:
                continue
            prod = bik * row_k[j]
            if prod > 0:
                out[i, j] += s * prod
    out[k, :] = -ext[k, :]
    out[:, k] = -ext[:, k]
    out[k, k] = 0
    return out


def mutate_seed(seed, k):
    n = seed.n
    ctx = seed.cluster[0].context
    plus = LaurentPolynomial.one(ctx)
    minus = LaurentPolynomial.one(ctx)
    for i in range(2 * n):
        m = int(seed.ext[i, k])
        if not m:
            continue
        if i < n:
            gen = seed.cluster[i]
        else:
            gen = LaurentPolynomial.variable(ctx, "y%d" % (i - n))
        if m > 0:
            plus = plus * gen ** m
        else:
            minus = minus * gen ** (-m)
    new_var = divide_exact(plus + minus, seed.cluster[k])
    cluster = list(seed.cluster)
    cluster[k] = new_var
    return Seed(cluster, mutate_ext(seed.ext, k))


# ---- invariant extraction ---------------------------------------------------


def f_polynomial_from_expansion(expansion, n):
    """Specialize x -> 1 and read the result as a polynomial in u0..u{n-1}."""
    terms = {}
    for exps, coeff in expansion.terms.items():
        yexp = exps[n:]
        terms[yexp] = terms.get(yexp, 0) + coeff
    f = LaurentPolynomial(u_context(n), terms)
    if f.coefficient((0,) * n) != 1:
        raise ValueError("expansion has no unit constant term; not a cluster variable?")
    return f


def g_vector_from_expansion(expansion, n):
    """x-exponent of the unique term carrying no coefficient variables."""
    hits = [exps for exps in expansion.terms if not any(exps[n:])]
    if len(hits) != 1 or expansion.terms[hits[0]] != 1:
        raise ValueError("expansion lacks a unique unit y-free term")
    return hits[0][:n]


def denominator_vector(expansion, n):
    """Componentwise denominator exponents of the x-part."""
    mins = expansion.min_exponents()[:n]
    return tuple(-m for m in mins)


def hatted_coefficients(quiver):
    """ŷ_i = y_i * prod over arrows at i (out-neighbors +1, in-neighbors -1)."""
    n = quiver.n
    ctx = xy_context(n)
    out = []
    for i in range(n):
        exps = [0] * (2 * n)
        exps[n + i] = 1
        for j in quiver.out_neighbors(i):
            exps[j] += 1
        for j in quiver.in_neighbors(i):
            exps[j] -= 1
        out.append(LaurentPolynomial.monomial(ctx, tuple(exps)))
    return out


def expansion_from_f_and_g(quiver, f_poly, g_vec):
    """Recombine x^g * F(ŷ) — the converse of the two extractors above."""
    n = quiver.n
    ctx = xy_context(n)
    yhat = hatted_coefficients(quiver)
    images = {"u%d" % i: yhat[i] for i in range(n)}
    fx = f_poly.substitute(images)
    prefactor = LaurentPolynomial.monomial(ctx, tuple(g_vec) + (0,) * n)
    return prefactor * fx


# ---- source-sweep walk ------------------------------------------------------


def walk_cluster_variables(quiver, max_sweeps=None):
    """All non-initial cluster variables, keyed by denominator vector.

    Mutates along the topological order of the quiver (every vertex is a
    source of the current quiver when its turn comes, and a full sweep
    restores the original tree orientation), sweeping repeatedly until no new
    denominator vectors appear.  This touches O(n^2) seeds instead of the
    full exchange graph, which matters for the exhaustive cross-checks.
    """
    n = quiver.n
    if max_sweeps is None:
        max_sweeps = 4 * n + 4
    order = quiver.topological_order()
    expected = n * (n - 1)
    atlas = {}
    seed = initial_seed(quiver)
    for _ in range(max_sweeps):
        new = 0
        for k in order:
            seed = mutate_seed(seed, k)
            d = denominator_vector(seed.cluster[k], n)
            if any(x > 0 for x in d) and d not in atlas:
                atlas[d] = seed.cluster[k]
                new += 1
        if not new and len(atlas) == expected:
            break
    if len(atlas) != expected:
        raise RuntimeError(
            "sweep walk found %d of %d variables" % (len(atlas), expected)
        )
    root_set = set(positive_roots(n))
    stray = [d for d in atlas if d not in root_set]
    if stray:
        raise RuntimeError("denominator vectors outside the root system: %s" % stray)
    return atlas


def cluster_variable_for_root(quiver, d):
    """Laurent expansion of the non-initial variable with denominator x^d."""
    d = tuple(int(x) for x in d)
    atlas = walk_cluster_variables(quiver)
    if d not in atlas:
        raise ValueError("%r is not a positive root of the rank-%d system" % (d, quiver.n))
    return atlas[d]


# ---- exhaustive seed enumeration -------------------------------------------


def _poly_key(poly):
    return tuple(sorted(poly.terms.items()))


def _canonical_seed_key(seed):
    """Seed key invariant under simultaneous relabeling of cluster positions.

    Relabeling permutes cluster entries, the matrix columns, and the top rows
    (the bottom rows are pinned to y0..y{n-1}).  Cluster entries in one seed
    are pairwise distinct, so sorting them fixes a unique permutation.
    """
    n = seed.n
    perm = sorted(range(n), key=lambda i: _poly_key(seed.cluster[i]))
    top = seed.ext[:n, :][np.ix_(perm, perm)]
    bottom = seed.ext[n:, :][:, perm]
    cluster_key = tuple(_poly_key(seed.cluster[i]) for i in perm)
    return cluster_key, top.tobytes(), bottom.tobytes()


def enumerate_cluster_variables(quiver, seed_budget=None):
    """BFS over the whole exchange graph; returns (atlas, seed_count).

    The atlas maps denominator vectors of non-initial variables to Laurent
    expansions.  ``seed_budget`` caps the number of distinct seeds visited
    (default from DIMERCLUSTER_SEED_BUDGET or 100000) — exceeding it raises,
    because these enumerations are meant to be exhaustive.
    """
    if seed_budget is None:
        seed_budget = int(os.environ.get(SEED_BUDGET_ENV, DEFAULT_SEED_BUDGET))
    n = quiver.n
    start = initial_seed(quiver)
    seen = {_canonical_seed_key(start)}
    frontier = [start]
    atlas = {}
    while frontier:
        nxt = []
        for seed in frontier:
            for k in range(n):
                neighbor = mutate_seed(seed, k)
                key = _canonical_seed_key(neighbor)
                if key in seen:
                    continue
                seen.add(key)
                if len(seen) > seed_budget:
                    raise RuntimeError(
                        "seed budget %d exceeded; set %s to raise it"
                        % (seed_budget, SEED_BUDGET_ENV)
                    )
                d = denominator_vector(neighbor.cluster[k], n)
                if any(x > 0 for x in d) and d not in atlas:
                    atlas[d] = neighbor.cluster[k]
                nxt.append(neighbor)
        frontier = nxt
    return atlas, len(seen)
