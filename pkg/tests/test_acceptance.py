"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import random
import sys
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from hodgeledger import og6_pipeline as og  # noqa: E402
from hodgeledger import string_ledger as sl  # noqa: E402
from hodgeledger.hodge_core import (  # noqa: E402
    POINT,
    HodgeClass,
    angle,
    hodge_numbers,
    linear_combine,
    numerics,
    super_sym,
    super_wedge,
    symmetry_checks,
    tensor,
)
from hodgeledger.spaces import L, abelian, fixture, kummer_k3  # noqa: E402

SAMPLES = 100
BETTI = [1, 0, 8, 0, 199, 0, 1504, 0, 199, 0, 8, 0, 1]


def _paths():
    return {
        "difference": og.h_Mtilde_via_difference(),
        "strings(r=0)": og.h_Mtilde_via_strings(0),
        "strings(r=1)": og.h_Mtilde_via_strings(1),
        "theorem": og.closed_forms("theorem"),
        "remark": og.closed_forms("remark"),
    }


def _random_class(rng, effective=False, max_entries=20, max_mult=3):
    table = {}
    for _ in range(rng.randint(0, max_entries)):
        p, q = rng.randint(-2, 4), rng.randint(-2, 4)
        n = p + q + 2 * rng.randint(-1, 1)
        m = rng.randint(1, max_mult) if effective else rng.choice([-3, -2, -1, 1, 2, 3])
        table[(n, p, q)] = table.get((n, p, q), 0) + m
    return HodgeClass(table)


def _report(capsys, name, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, detail


# -- 1 ---------------------------------------------------------------------------------


def criterion_1():
    eulers = {name: numerics(c).euler for name, c in _paths().items()}
    # independent count: generator enumeration of Sym^3 U plus dimensions of the rest
    sym3 = sum(oracles.brute_super_power(fixture("U").as_dict(), 3).values())
    by_hand = sym3 + 2 * 64 + 64 + 137 * 8 + 512
    ok = set(eulers.values()) == {1920} and by_hand == 1920
    return ok, f"euler per path {sorted(set(eulers.values()))}, enumeration {by_hand}"


def test_criterion_1_euler(capsys):
    _report(capsys, "1 euler characteristic = 1920", *criterion_1())


# -- 2 ---------------------------------------------------------------------------------


def criterion_2():
    bettis = {name: numerics(c).betti_vector(12) for name, c in _paths().items()}
    ok = all(b == BETTI for b in bettis.values())
    h = hodge_numbers(og.h_Mtilde_via_difference())
    known = (h[(1, 1)], h[(2, 1)] if (2, 1) in h else 0, h[(3, 1)], h[(2, 2)], h[(3, 3)])
    ok = ok and known == (6, 0, 12, 173, 1144)
    return ok, f"betti {bettis['difference']}, h11/h21/h31/h22/h33 {known}"


def test_criterion_2_betti(capsys):
    _report(capsys, "2 betti vector", *criterion_2())


# -- 3 ---------------------------------------------------------------------------------


def criterion_3():
    paths = _paths()
    ref = paths["difference"]
    diffs = {name: c - ref for name, c in paths.items()}
    ok = all(not d for d in diffs.values())
    return ok, "all five bigraded tables identical" if ok else f"residuals {diffs}"


def test_criterion_3_five_way(capsys):
    _report(capsys, "3 five-way equality", *criterion_3())


# -- 4 ---------------------------------------------------------------------------------


def criterion_4():
    U, W = fixture("U"), fixture("W")
    lhs = angle(1, tensor(W, W))
    rhs = super_wedge(3, U) + angle(2, U)
    profile = [numerics(lhs).betti.get(n, 0) for n in (4, 6, 8)]
    deg4 = [lhs[(4, p, 4 - p)] for p in (3, 2, 1)]
    ok = lhs == rhs and profile == [16, 32, 16] and deg4 == [4, 8, 4]
    return ok, f"degree profile {profile}, degree-4 hodge {deg4}"


def test_criterion_4_remark_identity(capsys):
    _report(capsys, "4 W^2<1> = wedge^3 U + U<2>", *criterion_4())


# -- 5 ---------------------------------------------------------------------------------


def criterion_5():
    ledger = sl.load_ledger(sl.builtin_fixture_path())
    report = sl.verify_component_table(ledger)
    cells = [c for c in report.checks if c.id.startswith("components:")]
    sols = sl.solve_unknowns(ledger)
    sky = ledger.stalks[("Mtilde", "Sky_NR", "NR")].rank
    sky_n = ledger.stalks[("N", "Sky_NR", "NR")].rank
    # on r + r24 = 1 the skyscraper ranks are 17 - r24 (Mtilde) and 1 - r24 (N)
    forms = all(
        sky.evaluate(r, r24) == 17 - r24 and sky_n.evaluate(r, r24) == 1 - r24
        for r, r24 in sols
    )
    ok = len(cells) == 21 and report.passed and sols == {(0, 1), (1, 0)} and forms
    passed = sum(c.passed for c in cells)
    return ok, f"{passed}/21 cells, solutions {sorted(sols)}"


def test_criterion_5_ledger(capsys):
    _report(capsys, "5 ledger ranks and solutions", *criterion_5())


# -- 6 ---------------------------------------------------------------------------------


def criterion_6():
    U = fixture("U")
    printed = og.h_Mtilde_via_difference(og.HN_COEFF_PRINTED)
    residual = og.closed_forms("theorem") - printed
    e16 = numerics(og.h_N(16)).euler
    e17 = numerics(og.h_N(17)).euler
    gs = oracles.kummer_hodge_numbers(4)
    betti17 = numerics(og.h_N(17)).betti_vector(12)
    ok = (
        residual == angle(2, U)
        and e16 == 440
        and e17 == 448
        and betti17 == oracles.betti_from_hodge(gs)
        and betti17[:7] == [1, 0, 7, 8, 51, 56, 458]
        and hodge_numbers(og.h_N(17)) == gs
        and hodge_numbers(og.h_N(16)) != gs
    )
    report = og.verify_og6(hn_coeff=16)
    ok = ok and not report["five-way:theorem=difference"].passed
    return ok, f"residual(16) = U<2>: {residual == angle(2, U)}, euler 16->{e16} 17->{e17}, GS betti {betti17}"


def test_criterion_6_negative_control(capsys):
    _report(capsys, "6 printed coefficient detected", *criterion_6())


# -- 7 ---------------------------------------------------------------------------------


def _laws(rng):
    counts = dict.fromkeys(
        ["ring", "euler-mult", "binomial", "super-sign", "sym-of-sum", "wedge-of-sum"], 0
    )
    for _ in range(SAMPLES):
        a, b, c = (_random_class(rng, max_entries=6) for _ in range(3))
        assert tensor(a, b) == tensor(b, a)
        assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))
        assert tensor(a, b + c) == tensor(a, b) + tensor(a, c)
        assert tensor(a, POINT) == a
        counts["ring"] += 1

        x, y = _random_class(rng), _random_class(rng)
        assert numerics(tensor(x, y)).euler == numerics(x).euler * numerics(y).euler
        counts["euler-mult"] += 1

        n_even, n_odd, k = rng.randint(0, 8), rng.randint(0, 8), rng.randint(0, 4)
        even = HodgeClass({(0, 0, 0): n_even}) if n_even else HodgeClass({})
        odd = HodgeClass({(1, 1, 0): n_odd}) if n_odd else HodgeClass({})
        assert super_wedge(k, even).dimension() == comb(n_even, k)
        if n_even:
            assert super_sym(k, even).dimension() == comb(n_even + k - 1, k)
        counts["binomial"] += 1

        # an odd class behaves like an even one with Sym and wedge swapped
        assert super_sym(k, odd).dimension() == comb(n_odd, k)
        if n_odd:
            assert super_wedge(k, odd).dimension() == comb(n_odd + k - 1, k)
        eff = _random_class(rng, effective=True, max_entries=4, max_mult=2)
        kk = rng.randint(0, 3)
        assert super_sym(kk, eff).as_dict() == oracles.brute_super_power(eff.as_dict(), kk)
        assert super_wedge(kk, eff).as_dict() == oracles.brute_super_power(eff.as_dict(), kk, True)
        counts["super-sign"] += 1

        v = _random_class(rng, effective=True, max_entries=5, max_mult=2)
        w = _random_class(rng, effective=True, max_entries=5, max_mult=2)
        for power, key in ((super_sym, "sym-of-sum"), (super_wedge, "wedge-of-sum")):
            kk = rng.randint(0, 3)
            expected = linear_combine(
                (1, tensor(power(i, v), power(kk - i, w))) for i in range(kk + 1)
            )
            assert power(kk, v + w) == expected
            counts[key] += 1
    return counts


def criterion_7():
    counts = _laws(random.Random(20261019))
    abelian_ok = all(
        super_sym(n, abelian(g).degree_part(1)) == abelian(g).degree_part(n)
        for g in range(4)
        for n in range(2 * g + 2)
    )
    named = {"J": 2, "A": 4, "KummerK3": 2, "Z": 2, "U": 2, "Sigma": 4}
    fixtures_ok = all(symmetry_checks(fixture(n), d) == (True, True) for n, d in named.items())
    result_ok = all(symmetry_checks(c, 6) == (True, True) for c in _paths().values())
    ok = abelian_ok and fixtures_ok and result_ok and min(counts.values()) >= SAMPLES
    detail = ", ".join(f"{k} x{v}" for k, v in counts.items())
    return ok, f"{detail}; H^n(ab(g)) g<=3 {abelian_ok}; symmetry fixtures {fixtures_ok}, result {result_ok}"


def test_criterion_7_properties(capsys):
    _report(capsys, "7 property suites", *criterion_7())


# -- 8 ---------------------------------------------------------------------------------


def criterion_8():
    s = og.string_cohomology()
    checks = [
        s["IR_plus"] + s["IR_minus"] == fixture("A"),
        kummer_k3(abelian(2)) == s["INpq_plus"] + 14 * L,
        fixture("Z") == s["INpq_plus"] + s["INpq_minus"] + 20 * L,
    ]
    return all(checks), f"IR, kummer K3, Z identities {checks}"


def test_criterion_8_fixture_consistency(capsys):
    _report(capsys, "8 fixture consistency", *criterion_8())


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


if __name__ == "__main__":
    failed = 0
    for i, crit in enumerate(CRITERIA, 1):
        try:
            ok, detail = crit()
        except AssertionError as exc:
            ok, detail = False, f"assertion failed {exc}"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  criterion {i}: {detail}")
    sys.exit(1 if failed else 0)
