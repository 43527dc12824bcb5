"""Test the rectangle-splitting area reports in every quadrant case."""

import math
import os
import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'legendre.settings')
django.setup()

from django.test import SimpleTestCase

from conjugates.catalog import CATALOG, parse_function
from conjugates.exceptions import (
    BoxViolation,
    ConjugateOutOfRange,
    EmptyPointSet,
    MixedSigns,
    NoAxisIntersection,
    OutOfDomain,
)
from conjugates.models import Interval, QuadrantCase
from conjugates.services import AreaService, CheckService, TransformService


class BasePointTests(SimpleTestCase):
    def test_origin_on_graph(self):
        self.assertEqual(AreaService.base_point(CATALOG['quadratic'].to_model()), (0.0, 0.0))

    def test_vertical_axis_crossing(self):
        self.assertEqual(AreaService.base_point(CATALOG['exp'].to_model()), (0.0, 1.0))

    def test_horizontal_axis_crossing(self):
        x0, y0 = AreaService.base_point(CATALOG['shifted-quadratic'].to_model())
        self.assertAlmostEqual(x0, 1.0, delta=1e-12)
        self.assertEqual(y0, 0.0)

    def test_no_intersection(self):
        with self.assertRaises(NoAxisIntersection):
            AreaService.base_point(CATALOG['quartic'].to_model())


class SameSignTests(SimpleTestCase):
    def test_exp_single_point(self):
        model = CATALOG['exp'].to_model(Interval(0.0, 2.0))
        report = AreaService.area_report_same_sign(model, [1.0])
        point = report.points[0]
        self.assertEqual(report.case, QuadrantCase.PP)
        self.assertIsNone(report.A0)
        self.assertEqual(report.c, 1.0)
        self.assertAlmostEqual(point.F_tilde, math.e - 1, delta=1e-8)
        self.assertAlmostEqual(point.G_tilde, 1.0, delta=1e-8)
        self.assertLessEqual(abs(point.residual), 1e-8)

    def test_quadratic_single_point(self):
        report = AreaService.area_report_same_sign(CATALOG['quadratic'].to_model(Interval(0.0, 2.0)), [1.5])
        point = report.points[0]
        self.assertAlmostEqual(point.F_tilde, 1.125, delta=1e-9)
        self.assertAlmostEqual(point.G_tilde, 1.125, delta=1e-9)
        self.assertLessEqual(abs(point.residual), 1e-9)

    def test_negative_quadrant(self):
        report = AreaService.area_report_same_sign(CATALOG['quadratic'].to_model(Interval(-2.0, 0.0)), [-1.0])
        point = report.points[0]
        self.assertEqual(report.case, QuadrantCase.NN)
        self.assertAlmostEqual(point.F_tilde, 0.5, delta=1e-9)
        self.assertAlmostEqual(point.G_tilde, 0.5, delta=1e-9)
        self.assertLessEqual(abs(point.residual), 1e-9)

    def test_residuals_over_several_points(self):
        cases = [
            (CATALOG['exp'].to_model(), [0.2, 0.4, 0.6, 0.8, 0.9]),
            (CATALOG['quadratic'].to_model(), [0.3, 0.7, 1.1, 1.5, 1.8]),
            (CATALOG['quadratic'].to_model(), [-0.3, -0.7, -1.1, -1.5, -1.8]),
            (CATALOG['cosh'].to_model(), [0.25, 0.5, 0.75, 1.0, 1.25]),
        ]
        for model, xs in cases:
            with self.subTest(model=str(model), xs=xs):
                report = AreaService.area_report_same_sign(model, xs)
                self.assertEqual(len(report.points), 5)
                self.assertLessEqual(report.max_abs_residual, 1e-8)

    def test_constant_relates_areas_to_functions(self):
        model = CATALOG['exp'].to_model()
        report = AreaService.area_report_same_sign(model, [0.1, 0.5, 0.9])
        for point in report.points:
            with self.subTest(x=point.x):
                self.assertAlmostEqual(model.F_eval(point.x), point.F_tilde + report.c, delta=1e-8)
                G = TransformService.conjugate_point(model, point.y).G
                self.assertAlmostEqual(G, point.G_tilde - report.c, delta=1e-8)

    def test_points_straddling_quadrants(self):
        with self.assertRaises(MixedSigns):
            AreaService.area_report_same_sign(CATALOG['quadratic'].to_model(), [-1.0, 1.0])

    def test_mixed_sign_point(self):
        with self.assertRaises(MixedSigns):
            AreaService.area_report_same_sign(CATALOG['shifted-quadratic'].to_model(), [0.5])

    def test_empty_points(self):
        with self.assertRaises(EmptyPointSet):
            AreaService.area_report_same_sign(CATALOG['quadratic'].to_model(), [])

    def test_point_outside_domain(self):
        with self.assertRaises(OutOfDomain):
            AreaService.area_report_same_sign(CATALOG['quadratic'].to_model(), [2.5])


class MixedSignTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.model = CATALOG['shifted-quadratic'].to_model()

    def test_single_point(self):
        report = AreaService.area_report_mixed(self.model, 1.0, -1.0, [0.5])
        point = report.points[0]
        self.assertEqual(report.case, QuadrantCase.PN)
        self.assertAlmostEqual(point.F_tilde, 0.125, delta=1e-9)
        self.assertAlmostEqual(point.G_tilde, 0.125, delta=1e-9)
        self.assertAlmostEqual(report.A0, 0.5, delta=1e-9)
        self.assertEqual(point.residual, 0.0)

    def test_area_is_constant_across_points(self):
        xs = [0.1, 0.3, 0.5, 0.7, 0.9]
        report = AreaService.area_report_mixed(self.model, 1.0, -1.0, xs)
        self.assertAlmostEqual(report.A0, 0.5, delta=1e-8)
        for point in report.points:
            with self.subTest(x=point.x):
                self.assertAlmostEqual(point.residual + report.A0, 0.5, delta=1e-8)

    def test_mirrored_box(self):
        model = parse_function('poly:0,1,0.5', Interval(-2.0, 1.0)).to_model(Interval(-2.0, 1.0))
        report = AreaService.area_report_mixed(model, -1.0, 1.0, [-0.2, -0.4, -0.6, -0.8])
        self.assertEqual(report.case, QuadrantCase.NP)
        self.assertAlmostEqual(report.A0, 0.5, delta=1e-8)
        self.assertLessEqual(report.max_abs_residual, 1e-8)

    def test_point_outside_box(self):
        with self.assertRaises(BoxViolation):
            AreaService.area_report_mixed(self.model, 1.0, -1.0, [1.5])

    def test_point_on_box_edge(self):
        with self.assertRaises(BoxViolation):
            AreaService.area_report_mixed(self.model, 1.0, -1.0, [1.0])

    def test_corner_must_have_mixed_signs(self):
        with self.assertRaises(BoxViolation):
            AreaService.area_report_mixed(self.model, 2.0, 1.0, [1.5])

    def test_corner_outside_domain(self):
        with self.assertRaises(BoxViolation):
            AreaService.area_report_mixed(self.model, 4.0, -1.0, [0.5])

    def test_corner_outside_range(self):
        with self.assertRaises(ConjugateOutOfRange):
            AreaService.area_report_mixed(self.model, 1.0, -5.0, [0.5])


class AnchoredTests(SimpleTestCase):
    def test_quartic_from_domain_edge(self):
        model = CATALOG['quartic'].to_model()
        report = AreaService.area_report_anchored(model, 0.1, [0.5, 1.0, 1.5])
        self.assertEqual(report.case, QuadrantCase.PP)
        self.assertAlmostEqual(report.y0, 0.001, delta=1e-15)
        self.assertAlmostEqual(report.A0, -0.1 * 0.001, delta=1e-8)
        self.assertLessEqual(report.max_abs_residual, 1e-8)

    def test_points_on_both_sides_of_anchor(self):
        model = CATALOG['cosh'].to_model()
        report = AreaService.area_report_anchored(model, 0.5, [-1.0, 0.0, 1.0])
        self.assertAlmostEqual(report.A0, -0.5 * math.sinh(0.5), delta=1e-8)
        self.assertLessEqual(report.max_abs_residual, 1e-8)

    def test_anchor_outside_domain(self):
        with self.assertRaises(OutOfDomain):
            AreaService.area_report_anchored(CATALOG['quartic'].to_model(), 0.0, [1.0])


class AreaCheckTests(SimpleTestCase):
    def test_modes_over_catalog(self):
        expected = {
            'quadratic': 'same-sign',
            'exp': 'same-sign',
            'quartic': 'anchored',
            'cosh': 'same-sign',
            'shifted-quadratic': 'same-sign',
            'xlogx': 'same-sign',
        }
        for name, mode in expected.items():
            with self.subTest(name=name):
                report = CheckService.area(CATALOG[name].to_model())
                payload = report.as_dict()
                self.assertTrue(report.passed, payload)
                self.assertEqual(payload['mode'], mode)
                self.assertEqual(len(payload['points']), 5)

    def test_default_mixed_points(self):
        report = CheckService.area(CATALOG['shifted-quadratic'].to_model(), box=(1.0, -1.0))
        payload = report.as_dict()
        self.assertTrue(report.passed, payload)
        self.assertEqual(payload['mode'], 'mixed')
        self.assertEqual(payload['case'], 'PN')
        self.assertAlmostEqual(payload['a0'], 0.5, delta=1e-8)
        self.assertEqual([p['x'] for p in payload['points']], [k / 6 for k in range(1, 6)])

    def test_default_points_leaving_the_quadrant_are_anchored(self):
        model = parse_function('poly:0,1,0.5', Interval(-2.0, 0.1)).to_model(Interval(-2.0, 0.1))
        report = CheckService.area(model)
        payload = report.as_dict()
        self.assertTrue(report.passed, payload)
        self.assertEqual(payload['mode'], 'anchored')
        self.assertEqual(payload['x0'], 0.0)
        self.assertEqual(payload['y0'], 1.0)
        self.assertAlmostEqual(payload['a0'], 0.0, delta=1e-8)
        quadrants = {QuadrantCase.classify(p['x'], p['y']) for p in payload['points']}
        self.assertEqual(quadrants, {QuadrantCase.NP, QuadrantCase.NN})

    def test_axis_crossing_at_far_end_is_anchored(self):
        model = CATALOG['shifted-quadratic'].to_model(Interval(0.0, 1.0))
        report = CheckService.area(model)
        payload = report.as_dict()
        self.assertTrue(report.passed, payload)
        self.assertEqual(payload['mode'], 'anchored')
        self.assertEqual((payload['x0'], payload['y0']), (1.0, 0.0))
        self.assertEqual({p['x'] > 0 > p['y'] for p in payload['points']}, {True})

    def test_explicit_points_still_need_one_quadrant(self):
        model = CATALOG['shifted-quadratic'].to_model(Interval(0.0, 1.0))
        with self.assertRaises(MixedSigns):
            CheckService.area(model, xs=[0.5])
