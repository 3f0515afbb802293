//! Surrogate invariants: exact ball minimization against grid oracles,
//! convexity, and feature-map consistency.

use corr_core::{draw_ball_uniform, features, QuadSurrogate};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn random_convex(rng: &mut ChaCha12Rng, dim: usize) -> QuadSurrogate {
    let theta1: Vec<f64> = (0..dim)
        .map(|_| {
            // leave some coordinates flat to exercise degenerate paths
            if rng.random::<f64>() < 0.2 {
                0.0
            } else {
                rng.random_range(0.0..3.0)
            }
        })
        .collect();
    let theta2: Vec<f64> = (0..dim).map(|_| rng.random_range(-4.0..4.0)).collect();
    let theta3 = rng.random_range(-2.0..2.0);
    QuadSurrogate::new(theta1, theta2, theta3).unwrap()
}

#[test]
fn minimizer_beats_random_sampling() {
    let mut rng = ChaCha12Rng::seed_from_u64(8);
    for case in 0..20 {
        let dim = 1 + case % 3;
        let s = random_convex(&mut rng, dim);
        let x_hat = s.minimize_on_ball(2.0, 1e-10).unwrap();
        let h_min = s.h_eval(&x_hat).unwrap();
        for x in draw_ball_uniform(dim, 2.0, 10_000, 100 + case as u64).unwrap() {
            assert!(h_min <= s.h_eval(&x).unwrap() + 1e-8);
        }
    }
}

#[test]
fn minimizer_matches_grid_oracle() {
    let mut rng = ChaCha12Rng::seed_from_u64(9);
    for case in 0..40 {
        let dim = 1 + case % 3;
        let s = random_convex(&mut rng, dim);
        let x_hat = s.minimize_on_ball(2.0, 1e-10).unwrap();
        let got = s.h_eval(&x_hat).unwrap();
        let steps = [2001, 101, 41][dim - 1];
        let (want, _) = corr_testkit::quadmin::quad_min_on_ball(
            s.theta1(),
            s.theta2(),
            s.theta3(),
            2.0,
            steps,
        );
        assert!(
            got <= want + 1e-4 && got >= want - 1e-8,
            "case {case} dim {dim}: got {got}, oracle {want}"
        );
    }
}

#[test]
fn midpoint_convexity_holds() {
    let mut rng = ChaCha12Rng::seed_from_u64(10);
    let s = random_convex(&mut rng, 3);
    let points = draw_ball_uniform(3, 2.0, 2000, 55).unwrap();
    for pair in points.chunks_exact(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let mid: Vec<f64> = a.iter().zip(b).map(|(x, y)| 0.5 * (x + y)).collect();
        let lhs = s.h_eval(&mid).unwrap();
        let rhs = 0.5 * (s.h_eval(a).unwrap() + s.h_eval(b).unwrap());
        assert!(lhs <= rhs + 1e-12);
    }
}

proptest! {
    #[test]
    fn features_agree_with_h_eval(
        theta1 in prop::collection::vec(0.0f64..5.0, 1..4),
        theta2_seed in prop::collection::vec(-5.0f64..5.0, 1..4),
        x_seed in prop::collection::vec(-2.0f64..2.0, 1..4),
        theta3 in -5.0f64..5.0,
    ) {
        let dim = theta1.len().min(theta2_seed.len()).min(x_seed.len());
        let s = QuadSurrogate::new(
            theta1[..dim].to_vec(),
            theta2_seed[..dim].to_vec(),
            theta3,
        ).unwrap();
        let x = &x_seed[..dim];
        let phi = features(x);
        let by_features: f64 = s.flat().iter().zip(&phi).map(|(t, p)| t * p).sum();
        let direct = s.h_eval(x).unwrap();
        prop_assert!((by_features - direct).abs() <= 1e-14 * (1.0 + direct.abs()));
    }

    #[test]
    fn ball_minimizer_stays_inside(
        theta1 in prop::collection::vec(0.0f64..3.0, 1..4),
        theta2 in prop::collection::vec(-6.0f64..6.0, 1..4),
    ) {
        let dim = theta1.len().min(theta2.len());
        let s = QuadSurrogate::new(theta1[..dim].to_vec(), theta2[..dim].to_vec(), 0.0).unwrap();
        let x = s.minimize_on_ball(2.0, 1e-10).unwrap();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assert!(norm <= 2.0 + 1e-9);
    }
}
