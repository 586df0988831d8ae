"""Closed-form F-polynomials and g-vectors from exponent-vector conditions.

Second of the two independent verification routes.  For an orientation Q of
the rank-n diagram and a positive root d, the F-polynomial is a sum of
monomials u^e over *acceptable* exponent vectors e, each weighted by a power
of two determined by local patterns around the entries with d_i = 2:

* box: 0 <= e_i <= d_i for every vertex;
* per arrow i -> j: e_i - e_j <= max(d_i - d_j, 0);
* let S = {i : (d_i, e_i) = (2, 1)}.  An arrow is *critical* if it matches
  (d, e): (2,1) -> (1,0) or (1,1) -> (2,1); each critical arrow is charged to
  the connected component (diagram adjacency) of its S-endpoint.  Components
  charged twice or more kill the monomial; the coefficient is 2^(number of
  uncharged components).

The g-vector is read off the root and the orientation alone: each arrow
t -> h contributes d_h to coordinate t on top of -d.
"""

from __future__ import annotations

import itertools

from dimercluster.laurent_poly import LaurentPolynomial, u_context
from dimercluster.quiver_core import dynkin_edges, is_positive_root


def _check_inputs(quiver, d):
    d = tuple(int(x) for x in d)
    if not is_positive_root(quiver.n, d):
        raise ValueError("%r is not a positive root of the rank-%d system" % (d, quiver.n))
    return d


def arrow_conditions_hold(quiver, d, e):
    """Box constraint plus the per-arrow inequality (no coefficient logic)."""
    if any(not (0 <= e[i] <= d[i]) for i in range(quiver.n)):
        return False
    for t, h in quiver.arrows:
        if e[t] - e[h] > max(d[t] - d[h], 0):
            return False
    return True


def _s_components(n, d, e):
    """Connected components (diagram adjacency) of {i : (d_i, e_i) = (2, 1)}."""
    s = {i for i in range(n) if d[i] == 2 and e[i] == 1}
    adj = {i: set() for i in s}
    for a, b in dynkin_edges(n):
        if a in s and b in s:
            adj[a].add(b)
            adj[b].add(a)
    comps = []
    todo = set(s)
    while todo:
        root = todo.pop()
        comp = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        todo -= comp
        comps.append(frozenset(comp))
    return comps


def _critical_charges(quiver, d, e, comps):
    """Number of critical arrows charged to each component of S."""
    charges = {comp: 0 for comp in comps}
    comp_of = {i: comp for comp in comps for i in comp}
    for t, h in quiver.arrows:
        if (d[t], e[t]) == (2, 1) and (d[h], e[h]) == (1, 0):
            charges[comp_of[t]] += 1
        elif (d[t], e[t]) == (1, 1) and (d[h], e[h]) == (2, 1):
            charges[comp_of[h]] += 1
    return charges


def coefficient_of(quiver, d, e):
    """Coefficient of u^e in the F-polynomial (0 if e is not supported)."""
    e = tuple(int(x) for x in e)
    if not arrow_conditions_hold(quiver, d, e):
        return 0
    comps = _s_components(quiver.n, d, e)
    charges = _critical_charges(quiver, d, e, comps)
    if any(c >= 2 for c in charges.values()):
        return 0
    return 2 ** sum(1 for c in charges.values() if c == 0)


def component_charges(quiver, d, e):
    """Critical-arrow counts per component of S = {i : (d_i, e_i) = (2, 1)}.

    Returns {sorted component tuple: charge count}; a count >= 2 means the
    monomial u^e is killed, count 0 doubles the coefficient.
    """
    e = tuple(int(x) for x in e)
    comps = _s_components(quiver.n, d, e)
    charges = _critical_charges(quiver, d, e, comps)
    return {tuple(sorted(comp)): c for comp, c in charges.items()}


def acceptable_evectors(quiver, d):
    """All e with nonzero coefficient, ascending graded-lex."""
    d = _check_inputs(quiver, d)
    out = []
    for e in itertools.product(*(range(x + 1) for x in d)):
        if coefficient_of(quiver, d, e):
            out.append(e)
    out.sort(key=lambda e: (sum(e), e))
    return out


def tran_f_polynomial(quiver, d):
    d = _check_inputs(quiver, d)
    terms = {}
    for e in itertools.product(*(range(x + 1) for x in d)):
        c = coefficient_of(quiver, d, e)
        if c:
            terms[e] = c
    return LaurentPolynomial(u_context(quiver.n), terms)


def tran_g_vector(quiver, d):
    d = _check_inputs(quiver, d)
    g = [-x for x in d]
    for t, h in quiver.arrows:
        g[t] += d[h]
    return tuple(g)
