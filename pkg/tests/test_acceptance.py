"""Exit criteria. Each test records one PASS/FAIL line, printed in the summary."""
import random
from contextlib import contextmanager
from fractions import Fraction

import pytest

from archimedes_sqrt.pi_bounds import (
    BETA_BISECTED,
    Direction,
    SqrtPolicy,
    exact_96gon_bounds,
    halving_errors,
    inscribed_chain,
    run_archimedes,
)
from archimedes_sqrt.rational import Cmp, cmp_sqrt, mediant, square, to_decimal
from archimedes_sqrt.sqrt_methods import (
    StopRule,
    brute_force_scan,
    cf_expansion,
    convergents,
    dyadic_sqrt_trace,
    enclosures,
    hero_step,
    interpolate,
    midpoint_square,
    pell2_iterate,
    theorem1_check,
)

F = Fraction
RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        RESULTS.append(f"FAIL  criterion {number:2d}: {title}")
        raise
    RESULTS.append(f"PASS  criterion {number:2d}: {title}")


TABLE3 = [
    (F(1), F(2)), (F(3, 2), F(2)), (F(5, 3), F(2)),
    (F(5, 3), F(7, 4)), (F(12, 7), F(7, 4)), (F(19, 11), F(7, 4)),
    (F(19, 11), F(26, 15)), (F(45, 26), F(26, 15)), (F(71, 41), F(26, 15)),
    (F(71, 41), F(97, 56)), (F(168, 97), F(97, 56)), (F(265, 153), F(97, 56)),
    (F(265, 153), F(362, 209)), (F(627, 362), F(362, 209)), (F(989, 571), F(362, 209)),
    (F(989, 571), F(1351, 780)),
]

TABLE2 = [
    (5, 3, -2, "1.666666"), (7, 4, 1, "1.750000"), (19, 11, -2, "1.727272"),
    (26, 15, 1, "1.733333"), (71, 41, -2, "1.731707"), (97, 56, 1, "1.732142"),
    (265, 153, -2, "1.732026"), (362, 209, 1, "1.732057"), (989, 571, -2, "1.732049"),
    (1351, 780, 1, "1.732051"),
]


def test_c01_table3_reproduction():
    with criterion(1, "interpolation reproduces the 16 enclosures of Table 3"):
        trace = interpolate(3, F(1), F(2), StopRule(iterations=16))
        assert enclosures(trace) == TABLE3


def test_c02_table2_reproduction():
    with criterion(2, "brute-force scan reproduces Table 2 and its 6-digit decimals"):
        records = brute_force_scan(3, 780)
        got = [(r.a, r.b, r.residual, to_decimal(r.fraction, 6)) for r in records]
        assert got == TABLE2
        assert [r.residual for r in records] == [-2, 1] * 5


def test_c03_hero_chain():
    with criterion(3, "Hero: 5/3 -> 26/15 -> 1351/780"):
        assert hero_step(F(5, 3), 3) == F(26, 15)
        assert hero_step(F(26, 15), 3) == F(1351, 780)


def test_c04_theorem1_suite():
    with criterion(4, "AM/HM mean-pair check holds for 1000 random rationals"):
        rng = random.Random(20260415)
        for _ in range(1000):
            x = F(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
            report = theorem1_check(x)
            assert report.am * report.hm == 3
            assert cmp_sqrt(report.hm, 3) is Cmp.BELOW
            assert cmp_sqrt(report.am, 3) is Cmp.ABOVE
            assert report.hm.numerator % 3 == 0


def test_c05_table4_reproduction():
    with criterion(5, "dyadic trace for 349450 reproduces Table 4 and gives 591 1/8"):
        trace = dyadic_sqrt_trace(349450, 3)
        assert trace.column("square") == [
            349450, 348100, 350464, 349281,
            349872 + F(1, 4), 349576 + F(9, 16), 349428 + F(49, 64)]
        assert trace.result.lo == 591 + F(1, 8)
        rows = trace.rows[1:]
        for row in rows:
            assert row["square"] == square(row["x"])
        # the midpoint-square identity against direct squaring, step by step
        lo, hi = F(591), F(592)
        for row in rows[3:]:
            assert midpoint_square(lo, hi, square(lo), square(hi)) == square((lo + hi) / 2)
            if row["position"] is Cmp.BELOW:
                lo = row["x"]
            else:
                hi = row["x"]


def test_c06_final_pi_bounds():
    with criterion(6, "run_archimedes: 25344/8069 < pi < 29376/9347, beats 3 10/71 and 3 1/7"):
        result = run_archimedes(SqrtPolicy.archimedes_recorded())
        assert result.lower == F(25344, 8069)
        assert result.upper == F(29376, 9347)
        assert 25344 * 71 == 1799424 > 1799387 == 223 * 8069
        assert result.lower > F(223, 71)
        assert result.upper.numerator * 7 < 22 * result.upper.denominator
        assert to_decimal(F(223, 71)) == "3.140845"
        assert to_decimal(F(22, 7)) == "3.142857"


def test_c07_exceptional_cases():
    with criterion(7, "alpha uses 1838 9/11 then rescales to 1007/66; beta 1009 1/4 gives > 3 9/64"):
        bound, trace = inscribed_chain(4, SqrtPolicy.archimedes_recorded())
        alpha = trace.rows[2]
        assert alpha["b"] == 1838 + F(9, 11) and alpha["decision"] == "override"
        beta = trace.rows[3]
        assert beta["rescale"] == F(11, 40)
        assert (beta["a"], beta["c"]) == (1007, 66)
        assert (1823 + alpha["b"]) / 240 == F(1007, 66)
        what_if = SqrtPolicy.archimedes_recorded().with_override(
            Direction.UPPER_CHAIN, 3, BETA_BISECTED)
        bound, _ = inscribed_chain(4, what_if)
        assert bound > 3 + F(9, 64)
        assert F(96 * 66) / (2017 + F(1, 3)) > 3 + F(9, 64)


def test_c08_exact_96gon_bounds():
    with criterion(8, "exact 96-gon bounds floor to 3.141031 / 3.142714"):
        assert exact_96gon_bounds(64) == ("3.141031", "3.142714")


def test_c09_factor_of_four():
    with criterion(9, "48-gon/96-gon error ratios in [3.9, 4.1]; upper/lower error in [1.8, 2.2]"):
        errors = halving_errors(64, (3, 4))
        for side in (0, 1):
            ratio = errors[3][side] / errors[4][side]
            assert F(39, 10) <= ratio <= F(41, 10), float(ratio)
        twice = errors[4][1] / errors[4][0]
        assert F(18, 10) <= twice <= F(22, 10), float(twice)


def test_c10_cf_subsequence():
    with criterion(10, "first 12 convergents of sqrt 3 are interpolation endpoints, alternating"):
        convs = convergents(cf_expansion(3, 12))
        assert convs[-1] == F(1351, 780)
        trace = interpolate(3, F(1), F(2), StopRule(iterations=16))
        endpoints = [f for pair in enclosures(trace) for f in pair]
        positions = [endpoints.index(c) for c in convs]
        assert positions == sorted(positions)
        for k, c in enumerate(convs):
            assert cmp_sqrt(c, 3) is (Cmp.BELOW if k % 2 == 0 else Cmp.ABOVE)


def test_c11_pell_suite():
    with criterion(11, "10 Pell steps keep a^2 - 2b^2 = +-1 with alternating sign"):
        pairs = pell2_iterate(11)
        assert pairs[0].a == pairs[0].b == 1 and pairs[0].sign == -1
        for k, p in enumerate(pairs):
            assert p.a ** 2 - 2 * p.b ** 2 == p.sign == (-1 if k % 2 == 0 else 1)


def test_c12_mediant_property():
    with criterion(12, "mediant strictly between for 10000 random pairs"):
        rng = random.Random(12)
        checked = 0
        while checked < 10_000:
            f1 = F(rng.randint(0, 10 ** 6), rng.randint(1, 10 ** 6))
            f2 = F(rng.randint(0, 10 ** 6), rng.randint(1, 10 ** 6))
            if f1 == f2:
                continue
            lo, hi = min(f1, f2), max(f1, f2)
            m = mediant(lo, hi)
            assert lo.numerator * m.denominator < m.numerator * lo.denominator
            assert m.numerator * hi.denominator < hi.numerator * m.denominator
            checked += 1
