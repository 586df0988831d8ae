"""Unit tests for exact Laurent-polynomial arithmetic.

Tags: [TRIVIAL] direct arithmetic identities; [DERIVED] randomized ring-axiom
and division properties with seeded RNG.
"""

import random

import pytest

from dimercluster.laurent_poly import (
    ContextError,
    ExactDivisionError,
    LaurentPolynomial,
    divide_exact,
    u_context,
    xy_context,
)


CTX = u_context(3)


def P(terms):
    return LaurentPolynomial(CTX, terms)


def rand_poly(rng, ctx, nterms=4, lo=-2, hi=2, cmax=3):
    terms = {}
    for _ in range(rng.randrange(nterms + 1)):
        exps = tuple(rng.randint(lo, hi) for _ in ctx)
        c = rng.randint(-cmax, cmax)
        if c:
            terms[exps] = terms.get(exps, 0) + c
    return LaurentPolynomial(ctx, terms)


# ---- [TRIVIAL] construction and normal form -----------------------------


def test_zero_coefficients_are_dropped():
    assert P({(1, 0, 0): 0}).terms == {}
    assert not P({})
    assert bool(P({(0, 0, 0): 1}))


def test_context_width_enforced():
    with pytest.raises(ContextError):
        LaurentPolynomial(CTX, {(1, 0): 1})


def test_variable_and_monomial_constructors():
    u1 = LaurentPolynomial.variable(CTX, "u1")
    assert u1.terms == {(0, 1, 0): 1}
    m = LaurentPolynomial.monomial(CTX, (2, 0, -1), coeff=-3)
    assert m.terms == {(2, 0, -1): -3}
    assert LaurentPolynomial.one(CTX).is_one()


def test_context_helpers():
    assert u_context(2) == ("u0", "u1")
    assert xy_context(2) == ("x0", "x1", "y0", "y1")


# ---- [TRIVIAL] arithmetic ------------------------------------------------


def test_add_cancels_to_zero():
    p = P({(1, 2, 0): 5})
    assert (p + (-p)).terms == {}


def test_mul_collects_cross_terms():
    # (1 + u0) * (1 - u0) = 1 - u0^2
    one = LaurentPolynomial.one(CTX)
    u0 = LaurentPolynomial.variable(CTX, "u0")
    prod = (one + u0) * (one - u0)
    assert prod == P({(0, 0, 0): 1, (2, 0, 0): -1})


def test_scalar_mul_both_sides():
    p = P({(1, 0, 0): 2})
    assert (3 * p).terms == {(1, 0, 0): 6}
    assert (p * 3).terms == {(1, 0, 0): 6}


def test_pow_matches_repeated_mul():
    p = P({(0, 0, 0): 1, (1, 0, 0): 1, (0, 1, -1): 2})
    assert p ** 0 == LaurentPolynomial.one(CTX)
    assert p ** 1 == p
    assert p ** 3 == p * p * p


def test_negative_power_of_monomial():
    m = LaurentPolynomial.monomial(CTX, (1, -2, 0))
    assert m ** -2 == LaurentPolynomial.monomial(CTX, (-2, 4, 0))
    with pytest.raises(ExactDivisionError):
        (m + LaurentPolynomial.one(CTX)) ** -1


def test_context_mismatch_raises():
    q = LaurentPolynomial.one(u_context(2))
    with pytest.raises(ContextError):
        P({}) + q


# ---- [TRIVIAL] queries -----------------------------------------------------


def test_degree_vector():
    m = LaurentPolynomial.monomial(CTX, (-1, 2, 0))
    assert m.degree_vector() == (-1, 2, 0)
    with pytest.raises(ValueError):
        P({(0, 0, 0): 2}).degree_vector()
    with pytest.raises(ValueError):
        P({(0, 0, 0): 1, (1, 0, 0): 1}).degree_vector()


def test_min_exponents():
    p = P({(1, -2, 0): 1, (-1, 3, 5): 4})
    assert p.min_exponents() == (-1, -2, 0)
    assert P({}).min_exponents() == (0, 0, 0)


def test_leading_term_graded_lex():
    # total degree wins first, lex breaks ties
    p = P({(3, 0, 0): 7, (1, 1, 0): 1, (0, 0, 2): 1})
    assert p.leading_term() == ((3, 0, 0), 7)
    q = P({(1, 1, 0): 2, (1, 0, 1): 3})
    assert q.leading_term() == ((1, 1, 0), 2)


# ---- [TRIVIAL] substitution -----------------------------------------------


def test_substitute_into_new_context():
    # u0 -> x0*y1^-1 in context (x0, x1, y0, y1)
    tgt = xy_context(2)
    img = LaurentPolynomial.monomial(tgt, (1, 0, 0, -1))
    p = P({(2, 0, 0): 1, (0, 0, 0): 1})  # u0^2 + 1
    out = p.substitute({"u0": img})
    assert out == LaurentPolynomial(tgt, {(2, 0, 0, -2): 1, (0, 0, 0, 0): 1})


def test_substitute_requires_all_occurring_vars():
    p = P({(1, 1, 0): 1})
    img = LaurentPolynomial.one(CTX)
    with pytest.raises(ContextError):
        p.substitute({"u0": img})


def test_substitute_negative_exponent_needs_monomial():
    p = P({(-1, 0, 0): 1})
    good = LaurentPolynomial.monomial(CTX, (0, 1, 0))
    assert p.substitute({"u0": good}) == P({(0, -1, 0): 1})
    bad = LaurentPolynomial.one(CTX) + good
    with pytest.raises(ExactDivisionError):
        p.substitute({"u0": bad})


def test_rename_context_positional():
    p = P({(1, 2, 3): 4})
    q = p.rename_context(("a", "b", "c"))
    assert q.context == ("a", "b", "c")
    assert q.terms == p.terms
    with pytest.raises(ContextError):
        p.rename_context(("a",))


# ---- [TRIVIAL] rendering / serialization -----------------------------------


def test_render_ascending_graded_lex():
    p = P({(0, 0, 0): 1, (1, 0, 0): 1, (1, 1, 2): 2, (0, 1, 0): -1})
    assert p.render() == "1 - u1 + u0 + 2*u0*u1*u2^2"


def test_render_negative_exponents_and_zero():
    assert LaurentPolynomial.monomial(CTX, (0, -1, 0)).render() == "u1^-1"
    assert P({}).render() == "0"


def test_to_json_schema():
    p = P({(1, 0, 0): 2})
    doc = p.to_json()
    assert doc["schema"] == 1
    assert doc["variables"] == ["u0", "u1", "u2"]
    assert doc["terms"] == [{"exponents": [1, 0, 0], "coefficient": 2}]


# ---- exact division --------------------------------------------------------


def test_divide_exact_simple():
    # [TRIVIAL] (1 - u0^2) / (1 + u0) = 1 - u0
    one = LaurentPolynomial.one(CTX)
    u0 = LaurentPolynomial.variable(CTX, "u0")
    q = divide_exact(one - u0 * u0, one + u0)
    assert q == one - u0


def test_divide_exact_laurent_denominator():
    # [TRIVIAL] denominators with negative exponents work directly
    num = P({(0, 0, 0): 1, (1, 1, 0): 1})
    den = LaurentPolynomial.monomial(CTX, (-1, 0, 0))
    assert divide_exact(num, den) == P({(1, 0, 0): 1, (2, 1, 0): 1})


def test_divide_exact_rejects_inexact():
    one = LaurentPolynomial.one(CTX)
    u0 = LaurentPolynomial.variable(CTX, "u0")
    with pytest.raises(ExactDivisionError):
        divide_exact(one + u0, 2 * one)
    with pytest.raises(ExactDivisionError):
        divide_exact(one, P({}))


# ---- [DERIVED] randomized properties ---------------------------------------


def test_ring_axioms_random():
    rng = random.Random(20260813)
    ctx = u_context(3)
    one = LaurentPolynomial.one(ctx)
    for _ in range(200):
        a = rand_poly(rng, ctx)
        b = rand_poly(rng, ctx)
        c = rand_poly(rng, ctx)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a
        assert a + LaurentPolynomial.zero(ctx) == a


def test_division_inverts_multiplication_random():
    rng = random.Random(97)
    ctx = u_context(3)
    for _ in range(150):
        q = rand_poly(rng, ctx)
        d = rand_poly(rng, ctx)
        if not d:
            continue
        assert divide_exact(q * d, d) == q


def test_substitute_is_ring_hom_random():
    rng = random.Random(5)
    src = u_context(2)
    tgt = u_context(3)
    for _ in range(80):
        a = rand_poly(rng, src, lo=0)  # nonneg exponents: any image allowed
        b = rand_poly(rng, src, lo=0)
        images = {
            "u0": rand_poly(rng, tgt, lo=0),
            "u1": rand_poly(rng, tgt, lo=0),
        }
        lhs = (a * b).substitute(images)
        rhs = a.substitute(images) * b.substitute(images)
        assert lhs == rhs
        assert (a + b).substitute(images) == a.substitute(images) + b.substitute(images)
