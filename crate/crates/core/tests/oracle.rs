//! Cross-checks between the two constructions and brute-force geometric
//! oracles. Everything here is independent of the code paths it verifies.

use zgasket_core::{
    base_vector, classify_sentinels, generate, iterate_gasket, BaseMode, Complex, IfsSystem,
};

fn vertices_of_stage(side: f64, stage: u32) -> Vec<Complex> {
    iterate_gasket(side, stage)
        .unwrap()
        .triangles()
        .iter()
        .flat_map(|t| t.vertices())
        .collect()
}

fn coordinate_close(a: Complex, b: Complex, tol: f64) -> bool {
    (a.re - b.re).abs() <= tol && (a.im - b.im).abs() <= tol
}

/// Set equality under a per-coordinate tolerance, checked in both
/// directions by exhaustive pairing.
fn sets_match(lhs: &[Complex], rhs: &[Complex], tol: f64) -> bool {
    lhs.iter()
        .all(|a| rhs.iter().any(|b| coordinate_close(*a, *b, tol)))
        && rhs
            .iter()
            .all(|b| lhs.iter().any(|a| coordinate_close(*a, *b, tol)))
}

#[test]
fn equilateral_attractor_matches_the_subdivision() {
    let sys = IfsSystem::equilateral();
    for depth in 0..=4 {
        let generated: Vec<Complex> = generate(&sys, BaseMode::Structured, depth)
            .unwrap()
            .points()
            .collect();
        let vertices = vertices_of_stage(1.0, depth + 1);
        assert!(
            sets_match(&generated, &vertices, 1e-12),
            "vertex sets diverge at depth {depth}"
        );
    }
}

#[test]
fn every_vertex_stays_inside_the_initial_hull() {
    let t0 = iterate_gasket(1.0, 1).unwrap().triangles()[0];
    let (a, b, c) = (t0.a, t0.b, t0.c);
    let denom = {
        let u = b - a;
        let v = c - a;
        u.re * v.im - u.im * v.re
    };
    for stage in 1..=6 {
        for z in vertices_of_stage(1.0, stage) {
            let p = z - a;
            let u = b - a;
            let v = c - a;
            let beta = (p.re * v.im - p.im * v.re) / denom;
            let gamma = (u.re * p.im - u.im * p.re) / denom;
            let alpha = 1.0 - beta - gamma;
            for coord in [alpha, beta, gamma] {
                assert!(
                    (-1e-12..=1.0 + 1e-12).contains(&coord),
                    "barycentric {coord} outside hull at stage {stage}"
                );
            }
        }
    }
}

#[test]
fn new_vertices_are_exact_midpoints_of_the_previous_stage() {
    for stage in 1..=4 {
        let old = vertices_of_stage(1.0, stage);
        let new = vertices_of_stage(1.0, stage + 1);
        for v in new {
            if old.contains(&v) {
                continue;
            }
            let found = old
                .iter()
                .enumerate()
                .any(|(i, &u)| old[i..].iter().any(|&w| (u + w) * 0.5 == v));
            assert!(found, "vertex {v} is not a stage-{stage} midpoint");
        }
    }
}

#[test]
fn sentinel_descendants_stay_separable_up_to_depth_five() {
    let sys = IfsSystem::paper();
    for depth in 0..=5 {
        let g = generate(&sys, BaseMode::Faithful, depth).unwrap();
        let split = classify_sentinels(&g);
        assert_eq!(split.sentinels.point_count(), 3usize.pow(depth));
        assert_eq!(split.attractor.point_count(), 4 * 3usize.pow(depth));
        let min_sentinel = split
            .sentinels
            .points()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min);
        let max_attractor = split
            .attractor
            .points()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(min_sentinel >= 3.125, "depth {depth}: {min_sentinel}");
        assert!(max_attractor <= 1.0 + 1e-12, "depth {depth}: {max_attractor}");
    }
}

fn segment_distance(p: Complex, a: Complex, b: Complex) -> f64 {
    let ab = b - a;
    let ap = p - a;
    let t = ((ap.re * ab.re + ap.im * ab.im) / ab.norm_sqr()).clamp(0.0, 1.0);
    (p - (a + ab * t)).modulus()
}

/// Distance to the closed convex hull of {0, 1, i}.
fn hull_distance(p: Complex) -> f64 {
    let corners = [Complex::ZERO, Complex::ONE, Complex::I];
    let inside = corners
        .iter()
        .zip(corners.iter().cycle().skip(1))
        .all(|(&a, &b)| {
            let edge = b - a;
            let rel = p - a;
            edge.re * rel.im - edge.im * rel.re >= 0.0
        });
    if inside {
        return 0.0;
    }
    corners
        .iter()
        .zip(corners.iter().cycle().skip(1))
        .map(|(&a, &b)| segment_distance(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn attractor_points_contract_toward_the_hull() {
    let base_spread = base_vector(BaseMode::Structured)
        .points()
        .map(hull_distance)
        .fold(0.0, f64::max);
    let sys = IfsSystem::paper();
    for depth in 0..=5 {
        let g = generate(&sys, BaseMode::Faithful, depth).unwrap();
        let bound = 0.5f64.powi(depth as i32) * base_spread + 1e-12;
        for z in classify_sentinels(&g).attractor.points() {
            assert!(
                hull_distance(z) <= bound,
                "depth {depth}: point {z} at distance {} > {bound}",
                hull_distance(z)
            );
        }
    }
}

#[test]
fn total_area_decays_by_three_quarters() {
    let unit_area = 3f64.sqrt() / 4.0;
    for stage in 1..=8 {
        let level = iterate_gasket(1.0, stage).unwrap();
        let total: f64 = level.triangles().iter().map(|t| t.area()).sum();
        let expected = 0.75f64.powi(stage as i32 - 1) * unit_area;
        assert!(
            (total - expected).abs() <= 1e-9 * expected,
            "stage {stage}: {total} vs {expected}"
        );
    }
}

#[test]
fn side_lengths_halve_per_stage() {
    for stage in 1..=8 {
        let expected = 0.5f64.powi(stage as i32 - 1);
        for t in iterate_gasket(1.0, stage).unwrap().triangles() {
            for (u, v) in [(t.a, t.b), (t.b, t.c), (t.c, t.a)] {
                assert!(((v - u).modulus() - expected).abs() <= 1e-12);
            }
        }
    }
}
