import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import classes
from oracles import brute_super_power, brute_tensor
from hodgeledger.errors import BadInput, VirtualInput, WeightParityError
from hodgeledger.hodge_core import (
    POINT,
    ZERO,
    HodgeClass,
    angle,
    dual,
    from_json,
    linear_combine,
    make_class,
    numerics,
    shift_up,
    super_sym,
    super_wedge,
    symmetry_checks,
    tate,
    tensor,
    to_json,
)
from hodgeledger.spaces import L, abelian, fixture

U = fixture("U")
W = fixture("W")


def degree_profile(a):
    return numerics(a).betti


# -- make_class / linear_combine -------------------------------------------------


def test_make_class_point():
    assert make_class([(0, 0, 0, 1)]) == POINT


def test_make_class_merges_duplicates():
    assert make_class([(2, 1, 1, 1), (2, 1, 1, 1)]).as_dict() == {(2, 1, 1): 2}


def test_make_class_cancels():
    assert make_class([(4, 2, 2, 3), (4, 2, 2, -3)]) == ZERO
    assert len(ZERO) == 0


def test_canonical_order():
    a = make_class([(4, 2, 2, 1), (0, 0, 0, 1), (2, 2, 0, 1), (2, 0, 2, 1)])
    assert a.keys() == [(0, 0, 0), (2, 0, 2), (2, 2, 0), (4, 2, 2)]


def test_parity_violation_rejected():
    with pytest.raises(WeightParityError):
        make_class([(1, 0, 0, 1)])


def test_linear_combine_examples():
    assert linear_combine([(1, POINT), (-1, POINT)]) == ZERO
    assert linear_combine([(16, POINT)]).as_dict() == {(0, 0, 0): 16}
    A = fixture("A")
    even = HodgeClass({k: m for k, m in A.items() if k[0] % 2 == 0})
    odd = HodgeClass({k: m for k, m in A.items() if k[0] % 2 == 1})
    assert linear_combine([(2, even), (-1, A)]) == even - odd
    assert all(m < 0 for k, m in (even - odd).items() if k[0] % 2)


@given(classes(), classes(), classes())
def test_linear_combine_commutative_associative(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert linear_combine([(0, a)]) == ZERO


# -- tensor -----------------------------------------------------------------------


def test_tensor_lefschetz():
    assert tensor(L, L).as_dict() == {(4, 2, 2): 1}


def test_tensor_UU_degree4():
    # 1*1 + 1*1 (deg0 x deg4 both ways) + 6*6 (deg2 x deg2)
    assert degree_profile(tensor(U, U))[4] == 1 + 1 + 36


def test_tensor_WW_profile():
    assert degree_profile(tensor(W, W)) == {2: 16, 4: 32, 6: 16}


@settings(max_examples=100)
@given(classes(max_entries=8), classes(max_entries=8))
def test_tensor_matches_enumeration(a, b):
    assert tensor(a, b).as_dict() == brute_tensor(a.as_dict(), b.as_dict())


@settings(max_examples=100)
@given(classes(max_entries=6), classes(max_entries=6), classes(max_entries=6))
def test_ring_laws(a, b, c):
    assert tensor(a, b) == tensor(b, a)
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))
    assert tensor(a, POINT) == a
    assert tensor(a, b + c) == tensor(a, b) + tensor(a, c)


@settings(max_examples=100)
@given(classes(), classes())
def test_euler_multiplicative_and_betti_convolution(a, b):
    na, nb, nab = numerics(a), numerics(b), numerics(tensor(a, b))
    assert nab.euler == na.euler * nb.euler
    conv = {}
    for i, x in na.betti.items():
        for j, y in nb.betti.items():
            conv[i + j] = conv.get(i + j, 0) + x * y
    assert nab.betti == {k: v for k, v in sorted(conv.items()) if v}


# -- shifts, twists, angle, dual -----------------------------------------------


def test_shift_examples():
    assert shift_up(2, POINT).as_dict() == {(2, 0, 0): 1}
    assert shift_up(0, U) == U
    assert tate(-3, shift_up(6, POINT)).as_dict() == {(6, 3, 3): 1}
    with pytest.raises(BadInput):
        shift_up(-1, POINT)


def test_tate_examples():
    assert tate(-1, POINT).as_dict() == {(0, 1, 1): 1}
    assert shift_up(2, tate(-1, POINT)) == L == HodgeClass({(2, 1, 1): 1})
    assert tate(1, tate(-1, U)) == U


def test_angle_examples():
    assert angle(1, POINT) == L
    assert angle(3, POINT).as_dict() == {(6, 3, 3): 1}
    a = angle(1, U)
    assert set(degree_profile(a)) == {2, 4, 6}
    assert a.dimension() == 8


@given(classes(), st.integers(0, 5), st.integers(0, 5), st.integers(-4, 4))
def test_shift_twist_laws(a, j, k, t):
    assert shift_up(2 * j, shift_up(2 * k, a)) == shift_up(2 * (j + k), a)
    assert tate(t, tate(k, a)) == tate(t + k, a)
    assert tate(0, a) == a
    assert angle(k, a) == shift_up(2 * k, tate(-k, a))
    assert angle(j + k, a) == angle(j, angle(k, a))
    assert angle(0, a) == a
    assert angle(k, a).dimension() == a.dimension()


def test_odd_shift_breaks_parity():
    with pytest.raises(WeightParityError):
        shift_up(1, POINT)


def test_dual_examples():
    assert dual(POINT) == POINT
    assert dual(L).as_dict() == {(-2, -1, -1): 1}


@given(classes())
def test_dual_involution(a):
    assert dual(dual(a)) == a
    assert dual(a).weight_parity()


# -- super powers -------------------------------------------------------------------


def test_sym3_U():
    s = super_sym(3, U)
    assert s.dimension() == comb(10, 3) == 120
    assert degree_profile(s) == {0: 1, 2: 6, 4: 22, 6: 62, 8: 22, 10: 6, 12: 1}
    assert s.as_dict() == brute_super_power(U.as_dict(), 3)


def test_wedge3_U():
    w = super_wedge(3, U)
    assert w.dimension() == comb(8, 3) == 56
    assert degree_profile(w) == {4: 15, 6: 26, 8: 15}
    deg4 = {(p, q): m for (n, p, q), m in w.items() if n == 4}
    assert deg4 == {(3, 1): 4, (2, 2): 7, (1, 3): 4}
    assert w.as_dict() == brute_super_power(U.as_dict(), 3, wedge=True)


def test_odd_generator_sign_rule():
    v = HodgeClass({(1, 1, 0): 1})
    assert super_sym(2, v) == ZERO
    assert super_wedge(2, v).as_dict() == {(2, 2, 0): 1}


def test_low_powers():
    for a in (U, W, L + POINT):
        assert super_sym(0, a) == super_wedge(0, a) == POINT
        assert super_sym(1, a) == super_wedge(1, a) == a


def test_virtual_input_rejected():
    with pytest.raises(VirtualInput):
        super_sym(2, -POINT)
    with pytest.raises(VirtualInput):
        super_wedge(1, POINT - L)
    assert super_sym(2, POINT - POINT) == ZERO


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_sym_of_H1_is_abelian_cohomology(g):
    ab = abelian(g)
    h1 = ab.degree_part(1)
    for n in range(2 * g + 2):
        assert super_sym(n, h1) == ab.degree_part(n)


@settings(max_examples=100)
@given(classes(effective=True, max_entries=4, max_mult=2), st.integers(0, 3))
def test_super_powers_match_enumeration(a, k):
    assert super_sym(k, a).as_dict() == brute_super_power(a.as_dict(), k)
    assert super_wedge(k, a).as_dict() == brute_super_power(a.as_dict(), k, wedge=True)


@settings(max_examples=100)
@given(
    classes(effective=True, max_entries=5, max_mult=2),
    classes(effective=True, max_entries=5, max_mult=2),
    st.integers(0, 3),
)
def test_super_power_of_sum(a, b, k):
    for power in (super_sym, super_wedge):
        expected = linear_combine(
            (1, tensor(power(i, a), power(k - i, b))) for i in range(k + 1)
        )
        assert power(k, a + b) == expected


@settings(max_examples=100)
@given(st.integers(0, 12), st.integers(0, 4))
def test_degree_zero_binomials(n, k):
    a = HodgeClass({(0, 0, 0): n})
    assert super_wedge(k, a).dimension() == comb(n, k)
    if n:
        assert super_sym(k, a).dimension() == comb(n + k - 1, k)
    else:
        assert super_sym(k, a) == (POINT if k == 0 else ZERO)


@given(classes(effective=True, max_entries=6), st.integers(0, 3))
def test_parity_preserved(a, k):
    for b in (super_sym(k, a), super_wedge(k, a), dual(a), angle(k, a), tate(k, a), tensor(a, a)):
        assert b.weight_parity()


# -- numerics and symmetry --------------------------------------------------------


def test_numerics_point():
    n = numerics(POINT)
    assert n.betti == {0: 1} and n.euler == 1


def test_numerics_abelian_surface():
    n = numerics(abelian(2))
    assert n.betti_vector() == [1, 4, 6, 4, 1]
    assert n.euler == 0
    assert n.e_polynomial[(1, 0)] == -2
    assert n.e_polynomial[(1, 1)] == 4


def test_symmetry_examples():
    assert symmetry_checks(abelian(2), 2) == (True, True)
    assert symmetry_checks(L + POINT, 1) == (True, True)
    assert symmetry_checks(POINT + POINT, 1)[0] is False
    assert symmetry_checks(HodgeClass({(1, 1, 0): 1}), 1)[1] is False


@pytest.mark.parametrize("g", range(5))
def test_abelian_symmetric(g):
    assert symmetry_checks(abelian(g), g) == (True, True)


# -- serialization --------------------------------------------------------------


def test_json_lefschetz():
    assert to_json(L) == '{"format":"hodgeclass/v1","entries":[[2,1,1,1]]}'


@given(classes())
def test_json_round_trip(a):
    text = to_json(a)
    assert from_json(text) == a
    doc = json.loads(text)
    assert doc["entries"] == sorted(doc["entries"])
    assert all(row[3] != 0 for row in doc["entries"])


@given(classes())
def test_json_equal_classes_identical_bytes(a):
    shuffled = make_class([(*k, m) for k, m in reversed(list(a.items()))])
    assert to_json(shuffled) == to_json(a)


def test_from_json_rejects_garbage():
    with pytest.raises(BadInput):
        from_json('{"format":"other","entries":[]}')
    with pytest.raises(BadInput):
        from_json('{"format":"hodgeclass/v1","entries":[[1,2]]}')
