import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotcover.errors import CapacityError, ParseError
from knotcover.perm import (
    Perm,
    closure,
    compose,
    cycle_string,
    inverse,
    is_even,
    parse_cycles,
)

# independent composition oracle: walk both tuples by hand, left to right
def slow_compose(p: Perm, q: Perm) -> Perm:
    n = max(p.degree, q.degree, 1)
    images = []
    for x in range(1, n + 1):
        y = p.images[x - 1] if x <= p.degree else x
        z = q.images[y - 1] if y <= q.degree else y
        images.append(z)
    return Perm(tuple(images))


perms = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(lambda t: Perm(tuple(t)))
)


def test_parse_and_print_round_trip():
    for text in ["()", "(1,2)", "(1,2)(3,4)", "(1,2,3,4,5)", "(2,4,3)", "(1,5)(3,4)"]:
        assert cycle_string(parse_cycles(text)) == text


def test_parse_normalizes_cycle_order():
    assert cycle_string(parse_cycles("(3,4)(1,2)")) == "(1,2)(3,4)"
    assert cycle_string(parse_cycles("(2,3,1)")) == "(1,2,3)"


def test_parse_whitespace_and_singletons():
    assert parse_cycles(" ( 1 , 2 ) ") == parse_cycles("(1,2)")
    assert parse_cycles("(3)") == Perm.identity()


def test_parse_errors_name_the_token():
    with pytest.raises(ParseError, match="repeated point 2"):
        parse_cycles("(1,2)(2,3)")
    with pytest.raises(ParseError, match="13"):
        parse_cycles("(1,13)")
    with pytest.raises(ParseError, match="expected"):
        parse_cycles("(1,2")
    with pytest.raises(ParseError, match="expected point"):
        parse_cycles("(1,,2)")
    with pytest.raises(ParseError, match="empty"):
        parse_cycles("")
    with pytest.raises(ParseError, match="'x'"):
        parse_cycles("(x)")


def test_trailing_fixed_points_trimmed():
    assert Perm((2, 1, 3, 4)) == Perm((2, 1))
    assert Perm((2, 1, 3, 4)).degree == 2
    assert Perm((1, 2, 3)) == Perm.identity()


def test_degree_cap():
    with pytest.raises(ValueError, match="cap"):
        Perm(tuple(range(2, 14)) + (1,))


def test_compose_left_to_right_frozen_example():
    # apply (1,4,3) first, then (1,4,2)
    assert compose(parse_cycles("(1,4,3)"), parse_cycles("(1,4,2)")) == parse_cycles(
        "(1,2)(3,4)"
    )


def test_compose_chain_of_transposition_pairs():
    # the four-factor product used by the historical-table replay
    chain = ["(1,4)(2,5)", "(1,4)(3,5)", "(2,3)(4,5)", "(1,2)(4,5)"]
    out = Perm.identity()
    for text in chain:
        out = compose(out, parse_cycles(text))
    assert out == parse_cycles("(1,2)(3,5)")


@given(perms, perms)
def test_compose_matches_oracle(p, q):
    assert compose(p, q) == slow_compose(p, q)


@given(perms, perms, perms)
def test_compose_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms)
def test_inverse_involution(p):
    assert inverse(inverse(p)) == p
    assert compose(p, inverse(p)) == Perm.identity()
    assert compose(inverse(p), p) == Perm.identity()


@given(perms, perms)
def test_parity_multiplicative(p, q):
    assert is_even(compose(p, q)) == (is_even(p) == is_even(q))


def test_is_even_examples():
    assert is_even(parse_cycles("(1,2)(3,4)"))
    assert not is_even(parse_cycles("(1,2)"))
    assert is_even(parse_cycles("(1,2,3)"))
    assert is_even(Perm.identity())


# independent closure oracle: keep multiplying the whole set until stable
def slow_closure_order(gens) -> int:
    elements = {Perm.identity()}
    while True:
        new = {compose(a, g) for a in elements for g in gens} - elements
        if not new:
            return len(elements)
        elements |= new


def test_closure_a5():
    group = closure([parse_cycles("(1,2,3,4,5)"), parse_cycles("(1,2,3)")])
    assert group.order == 60
    assert group.order == slow_closure_order(group.generators)
    assert group.elements[0] == Perm.identity()
    assert all(is_even(g) for g in group)


def test_closure_a4_and_small():
    a4 = closure([parse_cycles("(1,2,3)"), parse_cycles("(2,3,4)")])
    assert a4.order == 12 == slow_closure_order(a4.generators)
    c2 = closure([parse_cycles("(1,2)(3,4)")])
    assert c2.order == 2
    assert closure([]).order == 1


def test_closure_discovery_order_deterministic():
    gens = [parse_cycles("(1,2,3,4,5)"), parse_cycles("(1,2,3)")]
    assert closure(gens).elements == closure(gens).elements


def test_closure_cap():
    with pytest.raises(CapacityError, match="cap"):
        closure([parse_cycles("(1,2,3,4,5)"), parse_cycles("(1,2,3)")], cap=59)


small_perms = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(lambda t: Perm(tuple(t)))
)


@given(st.lists(small_perms, max_size=3))
@settings(deadline=None)
def test_closure_lagrange_on_symmetric_group(gens):
    import math

    degree = max([g.degree for g in gens], default=1)
    order = closure(gens).order
    assert math.factorial(max(degree, 1)) % order == 0


@given(perms)
def test_call_beyond_degree_is_fixed(p):
    assert p(p.degree + 1) == p.degree + 1
