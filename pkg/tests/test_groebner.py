import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burchlab.groebner import (
    Ideal,
    PreconditionError,
    entry_ideal,
    ideal_colon,
    ideal_intersection,
    max_ideal,
    syzygy_matrix,
)
from burchlab.poly import RingContext, parse_polynomial

P = 32003
CTX = RingContext(P, ("x", "y"))
CTX3 = RingContext(P, ("x", "y", "z"))


def ideal(ctx, *gens):
    return Ideal.make(ctx, [parse_polynomial(g, ctx) for g in gens])


def poly(s, ctx=CTX):
    return parse_polynomial(s, ctx)


# -- Groebner bases -----------------------------------------------------------


def test_groebner_of_variables():
    I = ideal(CTX, "x", "y")
    assert [str(g) for g in I.groebner()] == ["y", "x"]


def test_groebner_reduces_against_basis():
    I = ideal(CTX, "x^2 - y", "y")
    assert set(str(g) for g in I.groebner()) == {"y", "x^2"}


def test_groebner_monomial_ideal_self_reduced():
    I = ideal(CTX, "x^4", "x^2*y^2", "y^4")
    assert set(str(g) for g in I.groebner()) == {"x^4", "x^2*y^2", "y^4"}


def test_groebner_permutation_invariant():
    gens = ["x^3 - y^2", "x*y - x", "y^3 - x^2*y"]
    bases = set()
    for perm in itertools.permutations(gens):
        bases.add(ideal(CTX, *perm).groebner())
    assert len(bases) == 1


def test_membership_via_normal_form():
    I = ideal(CTX, "x^2 - y^3", "x*y")
    f = poly("x^3")  # x·x^2 = x·y^3 ≡ (xy)·y^2 ≡ 0
    assert I.contains(f)
    assert not I.contains(poly("x"))


def test_unit_ideal_detection():
    I = ideal(CTX, "x", "y")
    J = ideal_colon(I, I)
    assert J.contains_unit


# -- ideal calculus -----------------------------------------------------------


def test_ideal_equality_generating_sets():
    assert ideal(CTX, "x", "y") == ideal(CTX, "y", "x + y")
    assert ideal(CTX, "x^2") != ideal(CTX, "x")


def test_equality_burch_definition_for_m_squared():
    # m(m^2 : m) = m·m = m^2 versus m·m^2 = m^3
    m = max_ideal(CTX)
    m2 = m.product(m)
    lhs = m.product(ideal_colon(m2, m))
    assert lhs != m.product(m2)


def test_product_principal():
    cx = RingContext(P, ("x",))
    m = max_ideal(cx)
    assert m.product(ideal(cx, "x^3")) == ideal(cx, "x^4")


def test_product_with_zero():
    I = ideal(CTX, "x")
    Z = Ideal.make(CTX, ())
    assert I.product(Z).is_zero


def test_intersection_examples():
    I = ideal(CTX, "x^2", "y")
    assert ideal_intersection(I, I) == I
    assert ideal_intersection(ideal(CTX, "x"), ideal(CTX, "y")) == ideal(CTX, "x*y")
    got = ideal_intersection(ideal(CTX, "x^2", "y"), ideal(CTX, "x"))
    assert got == ideal(CTX, "x^2", "x*y")


def brute_colon_monomial(gens, by, bound=9):
    """Divisibility-only oracle for (I : J) on two-variable monomial data."""
    def in_ideal(mset, m):
        return any(m[0] >= g[0] and m[1] >= g[1] for g in mset)

    out = []
    for a in range(bound):
        for b in range(bound):
            if all(in_ideal(gens, (a + u, b + v)) for u, v in by):
                out.append((a, b))
    return {
        m for m in out
        if not any(n != m and n[0] <= m[0] and n[1] <= m[1] for n in out)
    }


def test_colon_socle_example():
    I = ideal(CTX, "x^4", "x^2*y^2", "y^4")
    J = ideal_colon(I, max_ideal(CTX))
    expect = ideal(CTX, "x^3*y", "x*y^3", "x^4", "x^2*y^2", "y^4")
    assert J == expect
    # oracle: brute-force staircase colon
    assert brute_colon_monomial({(4, 0), (2, 2), (0, 4)}, [(1, 0), (0, 1)]) == {
        (4, 0), (3, 1), (2, 2), (1, 3), (0, 4)
    }


def test_colon_two_var_paper_values():
    I = ideal(CTX, "x^4", "y^4", "x^3*y", "x*y^3")
    J = ideal_colon(I, max_ideal(CTX))
    assert J == ideal(CTX, "x^3", "x^2*y^2", "y^3")


def test_colon_principal_direction():
    I = ideal(CTX, "x^3")
    assert ideal_colon(I, max_ideal(CTX)) == I  # y·f ∈ (x^3) forces f ∈ (x^3)


def test_colon_by_zero_raises():
    with pytest.raises(PreconditionError):
        ideal_colon(ideal(CTX, "x"), Ideal.make(CTX, ()))


def test_colon_laws_random_monomials():
    import random

    rng = random.Random(7)
    m = max_ideal(CTX)
    for _ in range(12):
        gens = {(rng.randrange(1, 5), rng.randrange(0, 5)) for _ in range(3)}
        gens.add((0, rng.randrange(1, 5)))
        I = Ideal.make(CTX, [CTX.monomial(g) for g in gens])
        J = ideal_colon(I, m)
        assert I <= J
        # ((I:J):K) = (I:JK)
        K = ideal(CTX, "x^2", "y")
        assert ideal_colon(ideal_colon(I, K), m) == ideal_colon(I, K.product(m))


def test_is_m_primary():
    assert ideal(CTX, "x^4", "x^2*y^2", "y^4").is_m_primary()
    assert not ideal(CTX, "x^3").is_m_primary()
    I = ideal(CTX3, "x^2*z^2 - y^2", "x^4 - y*z^2", "x^2*y - z^4")
    assert not I.is_m_primary()  # quotient has dimension 1


def test_standard_monomials():
    m = max_ideal(CTX)
    assert m.standard_monomials() == ((0, 0),)
    assert len(ideal(CTX, "x^4", "x^2*y^2", "y^4").standard_monomials()) == 12
    got = ideal(CTX, "x^2", "x*y", "y^2").standard_monomials()
    assert set(got) == {(0, 0), (1, 0), (0, 1)}


def test_standard_monomials_requires_m_primary():
    with pytest.raises(PreconditionError):
        ideal(CTX, "x^3").standard_monomials()


def test_nakayama_count_property():
    # |std(mI)| - |std(I)| = mu(I) for m-primary monomial ideals
    import random

    rng = random.Random(3)
    m = max_ideal(CTX)
    for _ in range(8):
        a, b = rng.randrange(1, 4), rng.randrange(1, 4)
        mid = (rng.randrange(1, a + 1), rng.randrange(1, b + 1))
        gens = {(a, 0), (0, b), mid}
        mini = [g for g in gens if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in gens)]
        I = Ideal.make(CTX, [CTX.monomial(g) for g in mini])
        mI = m.product(I)
        assert mI.length() - I.length() == len(mini)


# -- syzygies ------------------------------------------------------------------


def test_syzygy_koszul():
    M = syzygy_matrix(ideal(CTX, "x", "y"))
    assert M.shape == (2, 1)
    col = M.columns[0]
    assert {str(col[0]), str(col[1])} <= {"y", "-x", "x", "-y"}
    M.check()


def test_syzygy_bidiagonal_three_generators():
    M = syzygy_matrix(ideal(CTX, "x^4", "x^2*y^2", "y^4"))
    assert M.shape == (3, 2)
    assert entry_ideal(M) == ideal(CTX, "x^2", "y^2")


def test_syzygy_four_generators_entry_ideal_maximal():
    M = syzygy_matrix(ideal(CTX, "x^4", "x^3*y", "x*y^3", "y^4"))
    assert M.shape == (4, 3)
    assert entry_ideal(M) == max_ideal(CTX)


def test_syzygy_requires_homogeneous():
    with pytest.raises(PreconditionError):
        syzygy_matrix(ideal(CTX, "x^2 - y"))


def test_syzygy_names_redundant_generator():
    with pytest.raises(PreconditionError) as err:
        syzygy_matrix(ideal(CTX, "x", "x*y"))
    assert "x*y" in str(err.value)


def test_syzygy_binomial_input():
    # a non-monomial homogeneous ideal: columns must still annihilate
    I = ideal(CTX, "x^2 - y^2", "x*y")
    M = syzygy_matrix(I)
    M.check()
    assert M.shape[0] == 2


def test_entry_ideal_zero_matrix():
    z = CTX.zero()
    with pytest.raises(ValueError):
        entry_ideal([])
    assert entry_ideal([[z, z]]).is_zero


@settings(max_examples=25, deadline=None)
@given(
    st.sets(st.tuples(st.integers(1, 4), st.integers(1, 4)), min_size=1, max_size=3),
    st.integers(1, 4),
    st.integers(1, 4),
)
def test_colon_brute_force_agreement(mid, a, b):
    # Groebner colon against the divisibility-only oracle
    gens = {(a, 0), (0, b)} | mid
    mini = [g for g in gens if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in gens)]
    I = Ideal.make(CTX, [CTX.monomial(g) for g in mini])
    got = ideal_colon(I, max_ideal(CTX))
    expect_gens = brute_colon_monomial(set(mini), [(1, 0), (0, 1)], bound=11)
    assert got == Ideal.make(CTX, [CTX.monomial(g) for g in expect_gens])
