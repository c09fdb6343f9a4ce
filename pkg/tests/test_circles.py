import cmath
import math
import random

import pytest

from hypcatenoid import (
    CircleAtInfinity,
    DegenerateCircleError,
    IntersectingCirclesError,
    IsometryMap,
    RegimeKind,
    apply_isometry,
    axis_translation,
    boundary_circles,
    catenoids_for_circles,
    catenoids_for_separation,
    circle_from_center_radius,
    gomes_rho,
    inversive_product,
    normalize_coaxial,
    plane_distance,
)

from _oracles import mapped_pair, random_disjoint_pair

# Frozen roots of 2*rho(a) = d from an independent high-precision solve.
ROOTS_08 = (0.208851818955, 0.980635751523)
ROOTS_095 = (0.33514006972, 0.702753813899)


def _norm_sq(circle):
    v1, v2, v3, v4 = circle.coords
    return v1 * v1 + v2 * v2 + v3 * v3 - v4 * v4


def _norm_tol(circle):
    # Recomputing the quadratic form rounds relative to the squared
    # coordinate magnitude, so the unit-norm check must scale with it.
    v1, v2, v3, v4 = circle.coords
    magnitude = v1 * v1 + v2 * v2 + v3 * v3 + v4 * v4
    return 1e-14 * max(1.0, magnitude)


class TestCircleAtInfinity:
    def test_unit_circle_round_trip(self):
        circle = circle_from_center_radius(0.0j, 1.0)
        assert abs(circle.center) <= 1e-12
        assert circle.radius == pytest.approx(1.0, abs=1e-12)

    def test_offset_round_trip(self):
        circle = circle_from_center_radius(3.0 + 4.0j, 2.0)
        assert circle.center == pytest.approx(3.0 + 4.0j, abs=1e-10)
        assert circle.radius == pytest.approx(2.0, abs=1e-10)

    def test_random_round_trips(self):
        rng = random.Random(2024)
        for _ in range(200):
            center = complex(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0))
            radius = math.exp(rng.uniform(math.log(0.05), math.log(20.0)))
            circle = circle_from_center_radius(center, radius)
            assert abs(_norm_sq(circle) - 1.0) <= _norm_tol(circle)
            assert circle.center == pytest.approx(
                center, abs=1e-12 * (abs(center) + radius + 1.0)
            )
            # Small circles far from the origin recover their radius with a
            # relative error that grows like (|center| / radius)^2 in ulps.
            conditioning = max(1.0, (abs(center) / radius) ** 2)
            assert circle.radius == pytest.approx(radius, rel=1e-13 * conditioning)

    def test_invalid_radius(self):
        with pytest.raises(ValueError):
            circle_from_center_radius(0.0j, 0.0)
        with pytest.raises(ValueError):
            circle_from_center_radius(0.0j, -2.0)
        with pytest.raises(ValueError):
            circle_from_center_radius(complex(math.inf, 0.0), 1.0)

    def test_line_has_no_chart(self):
        line = CircleAtInfinity((1.0, 0.0, 0.5, 0.5))
        assert line.is_line
        with pytest.raises(DegenerateCircleError):
            line.radius
        with pytest.raises(DegenerateCircleError):
            line.center

    def test_concentric_product(self):
        # (r1^2 + r2^2) / (2 r1 r2) with r1 = 1, r2 = e gives cosh(1) in
        # magnitude; the canonical per-circle sign makes the product positive
        # for nested pairs.
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, math.e)
        assert abs(inversive_product(circle1, circle2)) == pytest.approx(
            math.cosh(1.0), abs=1e-12
        )


class TestPlaneDistance:
    def test_concentric_exponential_gap(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, math.e)
        assert plane_distance(circle1, circle2) == pytest.approx(1.0, abs=1e-12)

    def test_identical_circles_rejected(self):
        circle = circle_from_center_radius(1.0 + 1.0j, 2.0)
        with pytest.raises(IntersectingCirclesError):
            plane_distance(circle, circle)

    def test_identical_circles_closed_variant(self):
        circle = circle_from_center_radius(1.0 + 1.0j, 2.0)
        assert plane_distance(circle, circle, closed=True) == 0.0

    def test_tangent_circles(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(2.0 + 0.0j, 1.0)
        with pytest.raises(IntersectingCirclesError):
            plane_distance(circle1, circle2)
        assert plane_distance(circle1, circle2, closed=True) == 0.0

    def test_overlapping_circles(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.5 + 0.0j, 1.0)
        with pytest.raises(IntersectingCirclesError):
            plane_distance(circle1, circle2)

    def test_classification_boundary_distance(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, math.exp(0.876895))
        assert plane_distance(circle1, circle2) == pytest.approx(0.876895, abs=1e-9)

    def test_separated_pair_log_ratio(self):
        # Limit points at 0.2087 and 4.7913 give log ratio acosh(11.5).
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(5.0 + 0.0j, 1.0)
        assert plane_distance(circle1, circle2) == pytest.approx(
            math.acosh(11.5), abs=1e-12
        )

    def test_symmetry_is_exact(self):
        rng = random.Random(7)
        for _ in range(50):
            circle1, circle2 = random_disjoint_pair(rng)
            assert plane_distance(circle1, circle2) == plane_distance(
                circle2, circle1
            )


class TestIsometryMap:
    def test_determinant_enforced(self):
        with pytest.raises(ValueError):
            IsometryMap(2.0 + 0.0j, 0.0j, 0.0j, 1.0 + 0.0j)

    def test_from_matrix_normalizes(self):
        mapping = IsometryMap.from_matrix(2.0, 0.0, 0.0, 2.0)
        assert abs(mapping.a * mapping.d - mapping.b * mapping.c - 1.0) <= 1e-12

    def test_singular_matrix_rejected(self):
        with pytest.raises(ValueError):
            IsometryMap.from_matrix(1.0, 2.0, 2.0, 4.0)

    def test_identity_action(self):
        ident = IsometryMap.identity()
        assert ident(3.0 + 4.0j) == 3.0 + 4.0j

    def test_compose_order(self):
        scale = axis_translation(4.0)
        shift = IsometryMap.from_matrix(1.0, 1.0, 0.0, 1.0)
        z = 0.5 + 0.25j
        assert (shift.compose(scale))(z) == pytest.approx(4.0 * z + 1.0, abs=1e-12)
        assert (scale.compose(shift))(z) == pytest.approx(4.0 * (z + 1.0), abs=1e-12)

    def test_inverse(self):
        rng = random.Random(11)
        for _ in range(20):
            mapping = IsometryMap.from_matrix(
                complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            )
            z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            assert mapping(mapping.inverse()(z)) == pytest.approx(z, abs=1e-9)


class TestAxisTranslation:
    def test_identity(self):
        mapping = axis_translation(1.0)
        assert mapping.a == 1.0 and mapping.b == 0.0
        assert mapping.c == 0.0 and mapping.d == 1.0

    def test_group_law(self):
        twice = axis_translation(2.0).compose(axis_translation(2.0))
        four = axis_translation(4.0)
        assert twice.a == pytest.approx(four.a, abs=1e-12)
        assert twice.d == pytest.approx(four.d, abs=1e-12)

    def test_distance_invariance(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, math.exp(2.0))
        mapping = axis_translation(math.e)
        moved = plane_distance(
            apply_isometry(mapping, circle1), apply_isometry(mapping, circle2)
        )
        assert moved == pytest.approx(2.0, abs=1e-10)

    def test_domain(self):
        with pytest.raises(ValueError):
            axis_translation(0.0)
        with pytest.raises(ValueError):
            axis_translation(-1.0)


class TestApplyIsometry:
    def test_identity_fixes_circle(self):
        circle = circle_from_center_radius(2.0 - 1.0j, 1.5)
        image = apply_isometry(IsometryMap.identity(), circle)
        for got, want in zip(image.coords, circle.coords):
            assert got == pytest.approx(want, abs=1e-12)

    def test_scaling_action(self):
        circle = circle_from_center_radius(0.0j, 1.0)
        image = apply_isometry(axis_translation(2.0), circle)
        assert abs(image.center) <= 1e-12
        assert image.radius == pytest.approx(2.0, abs=1e-12)

    def test_norm_preserved_on_random_inputs(self):
        rng = random.Random(31337)
        for _ in range(1000):
            circle, other = random_disjoint_pair(rng)
            image1, image2 = mapped_pair(rng, circle, other)
            assert abs(_norm_sq(image1) - 1.0) <= _norm_tol(image1)
            assert abs(_norm_sq(image2) - 1.0) <= _norm_tol(image2)

    def test_circle_through_pole_becomes_line(self):
        circle = circle_from_center_radius(0.0j, 1.0)
        mapping = IsometryMap.from_matrix(0.0, 1.0, 1.0, -1.0)
        with pytest.raises(DegenerateCircleError):
            apply_isometry(mapping, circle)

    def test_line_maps_to_circle(self):
        # Inversion of the line Re z = 1/2 is the circle through 0 and 2.
        line = CircleAtInfinity((1.0, 0.0, 0.5, 0.5))
        inversion = IsometryMap.from_matrix(0.0, 1.0, 1.0, 0.0)
        image = apply_isometry(inversion, line)
        assert image.center == pytest.approx(1.0 + 0.0j, abs=1e-10)
        assert image.radius == pytest.approx(1.0, abs=1e-10)


class TestNormalizeCoaxial:
    def test_concentric_pair_stays_concentric(self):
        circle1 = circle_from_center_radius(2.0 + 1.0j, 1.0)
        circle2 = circle_from_center_radius(2.0 + 1.0j, 3.0)
        mapping = normalize_coaxial(circle1, circle2)
        image1 = apply_isometry(mapping, circle1)
        image2 = apply_isometry(mapping, circle2)
        assert abs(image1.center) <= 1e-10
        assert abs(image2.center) <= 1e-10
        assert image2.radius / image1.radius == pytest.approx(3.0, rel=1e-10)

    def test_concentric_larger_first_gets_inverted(self):
        circle1 = circle_from_center_radius(0.0j, 3.0)
        circle2 = circle_from_center_radius(0.0j, 1.0)
        mapping = normalize_coaxial(circle1, circle2)
        image1 = apply_isometry(mapping, circle1)
        image2 = apply_isometry(mapping, circle2)
        assert image1.radius < image2.radius

    def test_separated_pair(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(5.0 + 0.0j, 1.0)
        mapping = normalize_coaxial(circle1, circle2)
        image1 = apply_isometry(mapping, circle1)
        image2 = apply_isometry(mapping, circle2)
        assert abs(image1.center) <= 1e-9 * image1.radius
        assert abs(image2.center) <= 1e-9 * image2.radius
        assert image1.radius < image2.radius
        log_ratio = math.log(image2.radius / image1.radius)
        assert log_ratio == pytest.approx(
            plane_distance(circle1, circle2), abs=1e-9
        )

    def test_nested_pair(self):
        circle1 = circle_from_center_radius(0.3 + 0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, 3.0)
        mapping = normalize_coaxial(circle1, circle2)
        image1 = apply_isometry(mapping, circle1)
        image2 = apply_isometry(mapping, circle2)
        assert abs(image1.center) <= 1e-9 * image1.radius
        assert abs(image2.center) <= 1e-9 * image2.radius
        log_ratio = abs(math.log(image2.radius / image1.radius))
        assert log_ratio == pytest.approx(
            plane_distance(circle1, circle2), abs=1e-9
        )

    def test_intersecting_pair_rejected(self):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(1.0 + 0.0j, 1.0)
        with pytest.raises(IntersectingCirclesError):
            normalize_coaxial(circle1, circle2)

    def test_line_rejected(self):
        line = CircleAtInfinity((1.0, 0.0, 2.0, 2.0))
        circle = circle_from_center_radius(0.0j, 1.0)
        with pytest.raises(DegenerateCircleError):
            normalize_coaxial(line, circle)


class TestDistanceProperties:
    def test_oracle_equivalence_and_moebius_invariance(self):
        rng = random.Random(60601)
        for _ in range(300):
            circle1, circle2 = random_disjoint_pair(rng)
            reference = plane_distance(circle1, circle2)

            mapping = normalize_coaxial(circle1, circle2)
            image1 = apply_isometry(mapping, circle1)
            image2 = apply_isometry(mapping, circle2)
            log_ratio = abs(math.log(image2.radius / image1.radius))
            assert abs(log_ratio - reference) <= 1e-9

            moved1, moved2 = mapped_pair(rng, circle1, circle2)
            assert abs(plane_distance(moved1, moved2) - reference) <= 1e-9


class TestCatenoidsForSeparation:
    def test_two_branch_case(self, bundle, tol):
        found = catenoids_for_separation(0.8, bundle, tol)
        assert found.separation == 0.8
        assert len(found.solutions) == 2
        (a_inner, label_inner), (a_outer, label_outer) = found.solutions
        assert a_inner < bundle.a_c < a_outer
        assert a_inner == pytest.approx(ROOTS_08[0], abs=1e-6)
        assert a_outer == pytest.approx(ROOTS_08[1], abs=1e-6)
        assert abs(2.0 * gomes_rho(a_inner, tol) - 0.8) <= 1e-6
        assert abs(2.0 * gomes_rho(a_outer, tol) - 0.8) <= 1e-6
        assert label_inner.kind is RegimeKind.UNSTABLE
        assert label_outer.kind is RegimeKind.AREA_MINIMIZING

    def test_intermediate_separation(self, bundle, tol):
        found = catenoids_for_separation(0.95, bundle, tol)
        assert len(found.solutions) == 2
        (a_inner, label_inner), (a_outer, label_outer) = found.solutions
        assert a_inner == pytest.approx(ROOTS_095[0], abs=1e-6)
        assert a_outer == pytest.approx(ROOTS_095[1], abs=1e-6)
        assert label_inner.kind is RegimeKind.UNSTABLE
        assert label_outer.kind is RegimeKind.STABLE_NOT_MINIMIZING

    def test_critical_separation_collapses_to_single(self, bundle, tol):
        found = catenoids_for_separation(1.00229, bundle, tol)
        assert len(found.solutions) == 1
        a, label = found.solutions[0]
        assert a == bundle.a_c
        assert label.at_a_c
        assert label.kind is RegimeKind.STABLE_NOT_MINIMIZING

    def test_supercritical_separation_empty(self, bundle, tol):
        assert catenoids_for_separation(1.5, bundle, tol).solutions == ()
        just_above = bundle.two_rho_ac + 2e-4
        assert catenoids_for_separation(just_above, bundle, tol).solutions == ()

    def test_just_below_window_two_roots(self, bundle, tol):
        d = bundle.two_rho_ac - 2e-4
        found = catenoids_for_separation(d, bundle, tol)
        assert len(found.solutions) == 2
        for a, _ in found.solutions:
            assert abs(2.0 * gomes_rho(a, tol) - d) <= 1e-6

    def test_domain(self, bundle, tol):
        with pytest.raises(ValueError):
            catenoids_for_separation(0.0, bundle, tol)
        with pytest.raises(ValueError):
            catenoids_for_separation(-0.5, bundle, tol)


class TestCatenoidsForCircles:
    def test_matches_separation_solver(self, bundle, tol):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, math.exp(0.8))
        found = catenoids_for_circles(circle1, circle2, bundle, tol)
        assert found.separation == pytest.approx(0.8, abs=1e-12)
        assert len(found.solutions) == 2
        by_separation = catenoids_for_separation(0.8, bundle, tol)
        for (a1, _), (a2, _) in zip(found.solutions, by_separation.solutions):
            assert a1 == pytest.approx(a2, abs=1e-9)

    def test_distant_pair_empty(self, bundle, tol):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.0j, math.exp(2.0))
        found = catenoids_for_circles(circle1, circle2, bundle, tol)
        assert found.solutions == ()

    def test_intersecting_pair_rejected(self, bundle, tol):
        circle1 = circle_from_center_radius(0.0j, 1.0)
        circle2 = circle_from_center_radius(0.5 + 0.0j, 1.0)
        with pytest.raises(IntersectingCirclesError):
            catenoids_for_circles(circle1, circle2, bundle, tol)


class TestBoundaryCircles:
    def test_critical_distance(self, bundle, tol):
        inner, outer = boundary_circles(bundle.a_c, bundle, tol)
        assert plane_distance(inner, outer) == pytest.approx(1.00229, abs=1e-4)

    def test_threshold_distance(self, bundle, tol):
        inner, outer = boundary_circles(bundle.a_L, bundle, tol)
        assert plane_distance(inner, outer) == pytest.approx(0.876895, abs=1e-5)

    def test_matches_doubled_rho(self, bundle, tol):
        inner, outer = boundary_circles(0.6, bundle, tol)
        assert plane_distance(inner, outer) == pytest.approx(
            2.0 * gomes_rho(0.6, tol), abs=1e-8
        )

    def test_swapped_by_unit_inversion(self, bundle, tol):
        inner, outer = boundary_circles(0.6, bundle, tol)
        inversion = IsometryMap.from_matrix(0.0, 1.0, 1.0, 0.0)
        swapped = apply_isometry(inversion, inner)
        for got, want in zip(swapped.coords, outer.coords):
            assert got == pytest.approx(want, abs=1e-10)
