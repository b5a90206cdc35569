"""Acceptance gate: one test per contract criterion, all checks exact.

Each test numbers a criterion; the terminal summary prints one
``ACCEPTANCE n: PASS/FAIL`` line per test (see conftest.py).
"""

import math
import random
from fractions import Fraction

import pytest

from riordan import families
from riordan.arrays import RiordanArray, pascal
from riordan.families import reports_to_text
from riordan.gf import expand_gf
from riordan.hankel import (
    RationalGF,
    bareiss_determinant,
    fit_rational_gf,
    hankel_transform,
    naive_determinant,
)
from riordan.series import PowerSeries
from riordan.transforms import (
    binomial_transform,
    c_inverse,
    c_transform,
    c_transform_constructive,
    c_transform_sequence,
)

GRID = families.GRID  # [-3, 3] in both parameters


def _assert_pass(reports):
    failing = [r for r in reports if not r.passed]
    assert not failing, reports_to_text(failing)
    return reports


def _claims(reports):
    return {r.claim_id for r in reports}


# -- 1: worked matrix construction goldens ---------------------------------

def test_01_construction_goldens():
    image = c_transform(expand_gf("1/(1-x)", 6))
    assert image.int_prefix() == [1, 1, 2, 5, 14, 42, 132]

    ones = RiordanArray.from_gf("1/(1-x)", "x", 7)
    assert ones.matrix().int_rows() == [[1] * (n + 1) for n in range(8)]

    appell = RiordanArray.from_gf("1-x", "x", 7)
    assert appell.matrix().int_rows() == [
        [1] if n == 0 else [0] * (n - 1) + [-1, 1] for n in range(8)
    ]

    prod = pascal(16) * RiordanArray.from_gf("1-x", "x", 16)
    assert prod.matrix(8).int_rows() == [
        [1],
        [0, 1],
        [-1, 1, 1],
        [-2, 0, 2, 1],
        [-3, -2, 2, 3, 1],
        [-4, -5, 0, 5, 4, 1],
        [-5, -9, -5, 5, 9, 5, 1],
        [-6, -14, -14, 0, 14, 14, 6, 1],
    ]

    v, h = prod.vertical_half(), prod.horizontal_half()
    assert v.matrix(7).int_rows() == [
        [1],
        [1, 1],
        [2, 2, 1],
        [5, 5, 3, 1],
        [14, 14, 9, 4, 1],
        [42, 42, 28, 14, 5, 1],
        [132, 132, 90, 48, 20, 6, 1],
    ]
    assert h.matrix(7).int_rows() == [
        [1],
        [1, 1],
        [2, 3, 1],
        [5, 9, 5, 1],
        [14, 28, 20, 7, 1],
        [42, 90, 75, 35, 9, 1],
        [132, 297, 275, 154, 54, 11, 1],
    ]

    quotient = v.inverse() * h
    assert quotient.g == PowerSeries.one(quotient.order)
    assert quotient.f == expand_gf("x/(1-x)", quotient.order)


# -- 2: simple-transform tables --------------------------------------------

def test_02_simple_transform_tables():
    reports = _assert_pass(families.verify_simple_transforms(prefix=10))
    ids = _claims(reports)
    # images, Hankel prefixes, and fitted Hankel GFs are all present
    assert "simple/image" in ids
    assert "simple/hankel-terms" in ids
    assert "simple/hankel-fit" in ids
    fits = [r for r in reports if r.claim_id == "simple/hankel-fit"]
    assert len(fits) == len(families.SIMPLE_TRANSFORM_TABLE)


# -- 3: linear-ratio family conjecture -------------------------------------

def test_03_ratio_linear_conjecture():
    for a in GRID:
        for b in GRID:
            _assert_pass(families.verify_family_ratio_linear(a, b, prefix=10))
    printed = _assert_pass(families.verify_printed_ratio_linear(prefix=10))
    covered = {(r.parameters.get("a"), r.parameters.get("b"))
               for r in printed}
    assert {(-2, 1), (1, 2), (1, 3), (1, 4), (-2, -1)} <= covered


# -- 4: quadratic-denominator family conjecture ----------------------------

def test_04_quadratic_conjecture():
    for a in GRID:
        for b in GRID:
            _assert_pass(families.verify_family_quadratic(a, b, prefix=10))
    printed = _assert_pass(families.verify_printed_quadratic(prefix=10))
    covered = {(r.parameters.get("a"), r.parameters.get("b"))
               for r in printed}
    assert {(2, 0), (1, -1), (1, -2)} <= covered
    formula = [r for r in printed
               if r.claim_id == "quadratic/printed-formula"
               and "binom(2n-1,n-1)" in r.note]
    assert formula and all(r.passed for r in formula)


# -- 5: proved identities of the x^2 and x^3 families ----------------------

def test_05_proved_identities():
    order = 20
    c = expand_gf("c(x)", order)
    x = PowerSeries.x(order)
    one = PowerSeries.one(order)
    assert one + x * c ** 3 == (one - x) * c * c
    for a in GRID:
        invert_image = c_transform(expand_gf(f"(1+({a})*x)/(1-x^2)", order))
        assert invert_image == c / (one + (a - 1) * x * c)
        cubic_image = c_transform(expand_gf(f"(1+({a})*x)/(1-x^3)", order))
        assert cubic_image == (one + x * c ** 3) / (one + (a - 1) * x * c)
        # ratio proposition: the x^3 image is (1-x)c times the x^2 image
        assert cubic_image == (one - x) * c * invert_image
    fine = c_transform(expand_gf("(1+2*x)/(1-x^2)", order))
    assert fine.int_prefix(10) == [1, 0, 1, 2, 6, 18, 57, 186, 622, 2120]
    a2 = c_transform(expand_gf("(1+2*x)/(1-x^3)", order))
    assert a2.int_prefix(10) == [1, 0, 2, 5, 16, 51, 168, 565, 1934, 6716]


# -- 6: Lucas-style family conjecture and dual route -----------------------

def test_06_lucas_conjecture():
    for r in GRID:
        for s in GRID:
            reports = _assert_pass(
                families.verify_family_lucas(r, s, prefix=10)
            )
            assert "lucas/product-route" in _claims(reports)
    printed = _assert_pass(families.verify_printed_lucas(prefix=10))
    case = [r for r in printed
            if r.parameters.get("r") == 2 and r.parameters.get("s") == -1]
    assert case
    fit = [r for r in printed if r.claim_id == "lucas/printed/hankel-fit"]
    assert fit and all(r.passed for r in fit)
    # the printed Hankel GF of the (2, -1) case
    expected = RationalGF.from_fractions([1, -1], [1, 0, 4])
    assert any(str(expected) in str(r.expected_prefix) for r in fit)


# -- 7: aerated family table, ratios, values, diophantine pairs ------------

def test_07_aerated_family():
    for r in range(1, 9):
        reports = _assert_pass(families.verify_family_aerated(r))
        ids = _claims(reports)
        assert "aerated/ratio-formula" in ids
        assert "aerated/diophantine" in ids
        if r <= 6:
            assert "aerated/table-gf" in ids
    values = _assert_pass(families.verify_aerated_value_sequences())
    ids = _claims(values)
    assert {"aerated/x2-fractions", "aerated/x4-fractions",
            "aerated/printed-approximant-agreement",
            "aerated/printed-approximant-identity"} <= ids
    # the printed approximant agrees with binom(2n, n) for exactly 11 terms
    agreement = next(r for r in values
                     if r.claim_id == "aerated/printed-approximant-agreement")
    assert agreement.computed_prefix == [11]


# -- 8: Narayana row-polynomial pre-images ---------------------------------

def test_08_narayana_preimages():
    reports = []
    for r in range(0, 4):
        reports += _assert_pass(families.narayana_preimage(r, order=16))
    ids = _claims(reports)
    assert "narayana/round-trip" in ids
    assert "narayana/little-schroeder-preimage" in ids


# -- 9: tree-mutation pre-image table --------------------------------------

def test_09_tree_mutation_table():
    reports = _assert_pass(families.verify_tree_mutation_table())
    ids = _claims(reports)
    for name in ("A000346", "A001700", "A002057", "A007852", "A007856",
                 "A097070", "A097613", "A114121", "A243585", "A257589"):
        assert any(name in i for i in ids), name
    assert "trees/pair-reversed/jfraction" in ids
    assert "trees/shifted-alternating/jfraction" in ids
    assert "trees/alternating/binomial-sum" in ids


# -- 10: equal-Hankel pair and its doubling --------------------------------

def test_10_equal_hankel_pair():
    reports = _assert_pass(families.verify_equal_hankel())
    by_id = {r.claim_id: r for r in reports}
    formula = [(2 * n + 1) * (-2) ** n for n in range(8)]
    assert by_id["equal-hankel/hankel"].computed_prefix == formula
    assert by_id["equal-hankel/hankel-reciprocal"].computed_prefix == formula
    assert "equal-hankel/doubled-hankel" in by_id
    assert "equal-hankel/doubled-hankel-reciprocal" in by_id
    ratio = by_id["equal-hankel/ratio"].computed_prefix
    assert ratio[:6] == [1, -3, -3, -15, -15, -35]
    assert "equal-hankel/gf/hankel-fit" in by_id


# -- 11: randomized structural invariants ----------------------------------

def _random_series(rng, order, lo, hi, head=None):
    head = [] if head is None else list(head)
    tail = [rng.randint(lo, hi) for _ in range(order + 1 - len(head))]
    return PowerSeries(head + tail)


def _random_riordan(rng, order):
    g = _random_series(rng, order, -3, 3, head=[1])
    f = _random_series(rng, order, -3, 3, head=[0, 1])
    return RiordanArray(g, f)


def test_11_structural_invariants():
    rng = random.Random(20260824)

    # Riordan group laws and matrix-view homomorphism
    for _ in range(5):
        a, b, c = (_random_riordan(rng, 8) for _ in range(3))
        left, right = (a * b) * c, a * (b * c)
        assert left.g == right.g and left.f == right.f
        prod = a * a.inverse()
        assert prod.g == PowerSeries.one(prod.order)
        assert prod.f == PowerSeries.x(prod.order)
        n = (a * b).order
        assert (a * b).matrix(n).rows == \
            a.matrix(n).multiply(b.matrix(n)).rows

    # half-entry identities
    for _ in range(3):
        a = _random_riordan(rng, 10)
        v, h = a.vertical_half(), a.horizontal_half()
        for n in range(v.order + 1):
            for k in range(n + 1):
                assert v.element(n, k) == a.element(2 * n - k, n)
                assert h.element(n, k) == a.element(2 * n, n + k)

    # four-way agreement of the central transform on 30 random inputs
    for _ in range(30):
        g = _random_series(rng, 16, -3, 3, head=[1])
        closed = c_transform(g)
        constructive = c_transform_constructive(g)
        sequential = c_transform_sequence(g.int_prefix())
        assert closed.int_prefix(len(constructive)) == constructive
        assert closed.int_prefix() == sequential

    # forward/backward round trips
    for _ in range(10):
        g = _random_series(rng, 12, -3, 3, head=[1])
        assert c_inverse(c_transform(g)) == g
        assert c_transform(c_inverse(g)) == g

    # fraction-free determinants match naive expansion
    for _ in range(10):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert bareiss_determinant(m) == naive_determinant(m)

    # rational-GF fitting recovers planted generating functions
    recovered = 0
    while recovered < 10:
        num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 5))]
        den = [1] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 4))]
        if all(v == 0 for v in num):
            continue
        target = RationalGF.from_fractions(num, den)
        fitted = fit_rational_gf(target.expand(19).prefix(20), 4, 4)
        assert fitted.equivalent(target)
        recovered += 1

    # Hankel transform is invariant under the binomial transform
    for _ in range(10):
        g = _random_series(rng, 10, -3, 3, head=[1])
        original = hankel_transform(g.prefix(11), 6)
        shifted = binomial_transform(g)
        assert hankel_transform(shifted.prefix(11), 6) == original
