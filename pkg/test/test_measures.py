import math
import unittest
from fractions import Fraction
from itertools import accumulate
from test import DEMO_PRINTED, BaseTest
from typing import Iterator

from hypothesis import given
from hypothesis import strategies as st

from lexusage.demo import demo_distributions, demo_rows
from lexusage.errors import MeasureDomainError
from lexusage.measures import (EULER_C, HARMONIC_CUTOFF,
                               FrequencyDistribution, GeneralizedParams,
                               StevensParams, WeberFechnerParams, carroll_d2,
                               carroll_um, generalized_key, generalized_m,
                               harmonic_r, harmonic_r_asymptotic, juilland_d,
                               juilland_u, law_curves, psi_r, stevens_r,
                               ur_score, weber_fechner_r)


def _exact_harmonic(f: int) -> float:
    return math.fsum(1 / k for k in range(1, f + 1))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total, )
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, ) + rest


def _majorizes(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    px = list(accumulate(sorted(x, reverse=True)))
    py = list(accumulate(sorted(y, reverse=True)))
    return px[-1] == py[-1] and all(a >= b for a, b in zip(px, py))


class HarmonicTest(BaseTest):

    def test_anchors(self) -> None:
        """R(0) = 0 and R(1) = 1 exactly."""
        self.assertEqual(0.0, harmonic_r(0))
        self.assertEqual(1.0, harmonic_r(1))
        self.assertAlmostEqual(2.2833, harmonic_r(5), places=4)

    def test_direct_summation(self) -> None:
        for f in (2, 17, 100, HARMONIC_CUTOFF):
            self.assertEqual(_exact_harmonic(f), harmonic_r(f))

    def test_negative(self) -> None:
        with self.assertRaises(MeasureDomainError):
            harmonic_r(-1)

    def test_euler_constant(self) -> None:
        n = 10**6
        self.assertLess(abs(_exact_harmonic(n) - math.log(n) - EULER_C),
                        1e-6)

    def test_increments(self) -> None:
        """H_F - H_(F-1) = 1/F, across the summation cutoff too."""
        previous = harmonic_r(0)
        for f in range(1, 10**4 + 1):
            current = harmonic_r(f)
            self.assertAlmostEqual(1 / f, current - previous, delta=1e-12)
            previous = current

    def test_sandwich(self) -> None:
        """0 < H_F - (ln F + C) < 1/(2F)."""
        for f in range(1, 10**5 + 1):
            gap = harmonic_r(f) - (math.log(f) + EULER_C)
            self.assertGreater(gap, 0)
            self.assertLess(gap, 1 / (2 * f))

    def test_asymptotic_near_cutoff(self) -> None:
        for f in range(HARMONIC_CUTOFF - 8, HARMONIC_CUTOFF + 9):
            exact = _exact_harmonic(f)
            self.assertLess(
                abs(harmonic_r_asymptotic(f) - exact) / exact, 1e-9)

    def test_asymptotic(self) -> None:
        exact = _exact_harmonic(64)
        self.assertLess(abs(harmonic_r_asymptotic(64) - exact) / exact, 1e-9)
        exact = _exact_harmonic(10**6)
        self.assertLess(
            abs(harmonic_r_asymptotic(10**6) - exact) / exact, 1e-12)
        self.assertEqual(harmonic_r_asymptotic(10**6), harmonic_r(10**6))
        # coarse for small F
        self.assertAlmostEqual(1.0, harmonic_r_asymptotic(1), delta=1e-2)
        with self.assertRaises(MeasureDomainError):
            harmonic_r_asymptotic(0)

    def test_psi(self) -> None:
        for f in range(0, 300):
            self.assertAlmostEqual(harmonic_r(f), psi_r(f), delta=1e-12)
        self.assertLess(psi_r(1.0), psi_r(1.5))
        self.assertLess(psi_r(1.5), psi_r(2.0))
        with self.assertRaises(MeasureDomainError):
            psi_r(-0.5)


class LawsTest(BaseTest):

    def test_stevens(self) -> None:
        self.assertEqual(0.0, stevens_r(0))
        self.assertEqual(1.0, stevens_r(1))
        self.assertEqual(2.0, stevens_r(4))
        self.assertAlmostEqual(11.0, stevens_r(8, StevensParams(3, 5, 1 / 3)))
        with self.assertRaises(MeasureDomainError):
            StevensParams(n_exp=0)
        with self.assertRaises(MeasureDomainError):
            stevens_r(-1)

    def test_weber_fechner(self) -> None:
        self.assertEqual(EULER_C, weber_fechner_r(1))
        self.assertAlmostEqual(2 * math.log(10) + 1,
                               weber_fechner_r(10, WeberFechnerParams(2, 1)))
        with self.assertRaises(MeasureDomainError):
            weber_fechner_r(0)

    def test_curves(self) -> None:
        points = law_curves(4)
        self.assertEqual([1, 2, 3, 4], [p.f for p in points])
        first, last = points[0], points[-1]
        self.assertEqual((1.0, 1.0), (first.stevens, first.harmonic))
        self.assertAlmostEqual(0.5772, first.weber_fechner, places=4)
        self.assertEqual(2.0, last.stevens)
        self.assertAlmostEqual(2.0833, last.harmonic, places=4)
        self.assertAlmostEqual(1.9635, last.weber_fechner, places=4)

    def test_curves_large_f(self) -> None:
        for p in law_curves(2000)[-100:]:
            self.assertGreater(p.harmonic - p.weber_fechner, 0)
            self.assertLess(p.harmonic - p.weber_fechner, 1 / (2 * p.f))

    def test_curves_domain(self) -> None:
        with self.assertRaises(MeasureDomainError):
            law_curves(0)


class GeneralizedTest(BaseTest):

    def test_examples(self) -> None:
        self.assertEqual(7.0, generalized_m(7, 3, GeneralizedParams(0)))
        self.assertEqual(3.0, generalized_m(7, 3, GeneralizedParams(1)))
        self.assertEqual(6.0, generalized_m(9, 4, GeneralizedParams(0.5)))
        self.assertAlmostEqual(4.0,
                               generalized_m(8, 1, GeneralizedParams(1 / 3)))

    def test_exact_key(self) -> None:
        half, third = GeneralizedParams(0.5), GeneralizedParams(1 / 3)
        self.assertEqual(Fraction(1, 2), half.fraction)
        self.assertEqual(Fraction(1, 3), third.fraction)
        self.assertEqual(Fraction(3, 10), GeneralizedParams(0.3).fraction)
        self.assertEqual(4, generalized_key(4, 1, half))
        self.assertEqual(4, generalized_key(2, 2, half))
        self.assertEqual(64, generalized_key(8, 1, third))
        self.assertEqual(64, generalized_key(4, 4, third))
        self.assertEqual(7, generalized_key(7, 3, GeneralizedParams(0)))
        self.assertEqual(3, generalized_key(7, 3, GeneralizedParams(1)))
        odd = GeneralizedParams(0.123456789)
        self.assertIsNone(odd.fraction)
        self.assertEqual(generalized_m(9, 4, odd), generalized_key(9, 4, odd))
        with self.assertRaises(MeasureDomainError):
            generalized_key(2, 3, half)

    def test_domain(self) -> None:
        with self.assertRaises(MeasureDomainError):
            generalized_m(2, 3, GeneralizedParams(0.5))
        with self.assertRaises(MeasureDomainError):
            generalized_m(0, 0, GeneralizedParams(0.5))
        for a in (-0.1, 1.1):
            with self.assertRaises(MeasureDomainError):
                GeneralizedParams(a)


class DistributionTest(BaseTest):

    def test_properties(self) -> None:
        d = FrequencyDistribution('x', (0, 0, 3, 3, 4))
        self.assertEqual((5, 10, 3), (d.n, d.total, d.range))
        self.assertEqual([0.0, 0.0, 3.0, 3.0, 4.0], d.as_array().tolist())

    def test_invalid_counts(self) -> None:
        with self.assertRaises(MeasureDomainError):
            FrequencyDistribution('x', (1, -1))
        with self.assertRaises(MeasureDomainError):
            FrequencyDistribution('x', (1.5, 1))  # type: ignore[arg-type]


class DispersionTest(BaseTest):

    def test_juilland_d(self) -> None:
        self.assertEqual(1.0,
                         juilland_d(FrequencyDistribution('1', (1, ) * 5)))
        self.assertEqual(
            0.0, juilland_d(FrequencyDistribution('7', (5, 0, 0, 0, 0))))
        self.assertAlmostEqual(
            0.6838,
            juilland_d(FrequencyDistribution('2', (2, 1, 1, 1, 0))),
            places=4)

    @given(st.lists(st.integers(0, 50), min_size=2, max_size=8))
    def test_juilland_d_bounds(self, counts: list[int]) -> None:
        """D is 0 only for one used category and 1 only for equal counts."""
        if not any(counts):
            counts[0] = 1
        d = juilland_d(FrequencyDistribution('w', tuple(counts)))
        self.assertGreaterEqual(d, 0.0)
        self.assertLessEqual(d, 1.0)
        self.assertEqual(sum(1 for c in counts if c) == 1, d == 0.0)
        self.assertEqual(len(set(counts)) == 1, d == 1.0)

    def test_juilland_u(self) -> None:
        for counts, u in [((0, 0, 3, 3, 4), 5.82), ((1, 1, 1, 1, 6), 5.00),
                          ((3, 2, 0, 0, 0), 1.84)]:
            self.assertAlmostEqual(u,
                                   juilland_u(FrequencyDistribution('w',
                                                                    counts)),
                                   delta=0.005)

    def test_single_category(self) -> None:
        d = FrequencyDistribution('w', (4, ))
        for f in (juilland_d, juilland_u, carroll_d2, carroll_um):
            with self.assertRaisesRegex(MeasureDomainError, 'single category'):
                f(d)

    def test_zero_frequency(self) -> None:
        with self.assertRaises(MeasureDomainError):
            juilland_d(FrequencyDistribution('w', (0, 0)))
        with self.assertRaises(MeasureDomainError):
            carroll_d2(FrequencyDistribution('w', (0, 0)))

    def test_carroll_d2(self) -> None:
        self.assertAlmostEqual(
            1.0, carroll_d2(FrequencyDistribution('1', (1, ) * 5)))
        self.assertEqual(
            0.0, carroll_d2(FrequencyDistribution('7', (5, 0, 0, 0, 0))))
        self.assertAlmostEqual(
            0.8277,
            carroll_d2(FrequencyDistribution('2', (2, 1, 1, 1, 0))),
            places=4)

    def test_carroll_um(self) -> None:
        for counts, u_m in [((1, 1, 1, 1, 1), 5.00), ((5, 0, 0, 0, 0), 1.00),
                            ((1, 1, 1, 1, 6), 8.10)]:
            self.assertAlmostEqual(u_m,
                                   carroll_um(FrequencyDistribution('w',
                                                                    counts)),
                                   delta=0.005)

    def test_carroll_category_sizes(self) -> None:
        d = FrequencyDistribution('w', (2, 1, 1, 1, 0))
        self.assertAlmostEqual(carroll_um(d), carroll_um(d, [50] * 5),
                               delta=1e-12)
        # proportional frequencies are equal: evenly spread
        d = FrequencyDistribution('w', (2, 1))
        self.assertAlmostEqual(1.0, carroll_d2(d, [200, 100]), delta=1e-12)
        self.assertAlmostEqual(3.0, carroll_um(d, [200, 100]), delta=1e-12)
        # all in one category: the minimum value
        d = FrequencyDistribution('w', (3, 0))
        self.assertAlmostEqual(0.75, carroll_um(d, [100, 300]), delta=1e-12)
        with self.assertRaises(MeasureDomainError):
            carroll_d2(d, [100])
        with self.assertRaises(MeasureDomainError):
            carroll_d2(d, [100, 0])

    @given(st.lists(st.integers(0, 50), min_size=2, max_size=8),
           st.integers(1, 9))
    def test_carroll_d2_invariance(self, counts: list[int],
                                   factor: int) -> None:
        """D2 does not depend on the log base nor on the scale of counts."""
        if not any(counts):
            counts[0] = 1
        d = FrequencyDistribution('w', tuple(counts))
        d2 = carroll_d2(d)
        self.assertAlmostEqual(d2, carroll_d2(d, base=2), delta=1e-12)
        self.assertAlmostEqual(d2, carroll_d2(d, base=10), delta=1e-12)
        scaled = FrequencyDistribution('w', tuple(c * factor for c in counts))
        self.assertAlmostEqual(d2, carroll_d2(scaled), delta=1e-12)
        self.assertGreaterEqual(d2, 0.0)
        self.assertLessEqual(d2, 1.0)


class URTest(BaseTest):

    def test_examples(self) -> None:
        self.assertEqual(5.0, ur_score(FrequencyDistribution('1', (1, ) * 5)))
        self.assertAlmostEqual(
            5.75,
            ur_score(FrequencyDistribution('8', (0, 0, 3, 3, 4))),
            delta=0.005)
        self.assertAlmostEqual(
            3.0833,
            ur_score(FrequencyDistribution('6', (4, 1, 0, 0, 0))),
            places=4)
        self.assertEqual(0.0, ur_score(FrequencyDistribution('w', (0, 0))))
        self.assertEqual(1.5, ur_score(FrequencyDistribution('w', (2, ))))

    def test_schur_concavity(self) -> None:
        """Concentrating occurrences never increases U_R."""
        for n in range(1, 6):
            for f in range(0, 13):
                scores = {
                    c: ur_score(FrequencyDistribution('w', c))
                    for c in _compositions(f, n)
                }
                by_shape: dict[tuple[int, ...], float] = {}
                for c, s in scores.items():
                    shape = tuple(sorted(c, reverse=True))
                    self.assertEqual(by_shape.setdefault(shape, s), s)
                for x, sx in by_shape.items():
                    for y, sy in by_shape.items():
                        if _majorizes(x, y):
                            self.assertLessEqual(sx, sy + 1e-12)


class DemoTableTest(BaseTest):

    def test_golden_values(self) -> None:
        rows = demo_rows()
        self.assertEqual([r[0] for r in DEMO_PRINTED], [r.word for r in rows])
        for row, (word, u, u_m, u_r) in zip(rows, DEMO_PRINTED):
            with self.subTest(word=word):
                self.assertAlmostEqual(u, row.u, delta=0.005)
                self.assertAlmostEqual(u_m, row.u_m, delta=0.005)
                self.assertAlmostEqual(u_r, row.u_r, delta=0.005)

    def test_concentration_decreases(self) -> None:
        """Words 1 to 7 decrease under U, U_m and U_R."""
        rows = demo_rows()[:7]
        for a, b in zip(rows, rows[1:]):
            self.assertGreater(a.u, b.u)
            self.assertGreater(a.u_m, b.u_m)
            self.assertGreater(a.u_r, b.u_r)

    def test_word_9_vs_word_1(self) -> None:
        d = {x.word: x for x in demo_distributions()}
        self.assertAlmostEqual(juilland_u(d['1']), juilland_u(d['9']),
                               delta=1e-12)
        self.assertAlmostEqual(5.0, juilland_u(d['9']), delta=1e-12)
        self.assertAlmostEqual(6.45, ur_score(d['9']), delta=0.005)
        self.assertGreater(ur_score(d['9']), ur_score(d['1']))
        self.assertAlmostEqual(8.10, carroll_um(d['9']), delta=0.005)
        self.assertGreater(carroll_um(d['9']), carroll_um(d['1']))
        # U_m and U_R swap words 8 and 9
        self.assertGreater(juilland_u(d['8']), juilland_u(d['9']))
        self.assertGreater(carroll_um(d['9']), carroll_um(d['8']))
        self.assertGreater(ur_score(d['9']), ur_score(d['8']))


if __name__ == '__main__':
    unittest.main()
