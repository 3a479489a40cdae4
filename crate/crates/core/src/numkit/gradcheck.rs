//! Central finite-difference gradient verification.

use rand::Rng;

/// Relative error with a unit floor, so tiny gradients are compared on an
/// absolute scale and large ones on a relative scale.
pub fn relative_error(analytic: f64, numeric: f64) -> f64 {
    (analytic - numeric).abs() / analytic.abs().max(numeric.abs()).max(1.0)
}

/// Max relative error between `analytic` and central finite differences of
/// `scalar_fn` over the sampled coordinates. `scalar_fn` must be a
/// deterministic function of the full parameter vector.
pub fn max_relative_error<F>(
    mut scalar_fn: F,
    params: &[f32],
    analytic: &[f32],
    coords: &[usize],
    step: f32,
) -> f64
where
    F: FnMut(&[f32]) -> f64,
{
    assert_eq!(params.len(), analytic.len(), "gradcheck: analytic len mismatch");
    let mut scratch = params.to_vec();
    let mut worst = 0.0f64;
    for &c in coords {
        let orig = scratch[c];
        scratch[c] = orig + step;
        let up = scalar_fn(&scratch);
        scratch[c] = orig - step;
        let dn = scalar_fn(&scratch);
        scratch[c] = orig;
        let numeric = (up - dn) / (2.0 * step as f64);
        let err = relative_error(analytic[c] as f64, numeric);
        if err > worst {
            worst = err;
        }
    }
    worst
}

/// Sample `count` distinct coordinate indexes in `0..n` (all of them when
/// `count >= n`).
pub fn sample_coords<R: Rng + ?Sized>(n: usize, count: usize, rng: &mut R) -> Vec<usize> {
    if count >= n {
        return (0..n).collect();
    }
    rand::seq::index::sample(rng, n, count).into_vec()
}
